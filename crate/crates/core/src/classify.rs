//! Classification of four-dimensional unimodular Lie algebras, the
//! double-root lattice obstruction and a grid search for l.c.K. witnesses.
//!
//! The classifier uses exact invariants only: derived and lower central
//! series, the nilradical, characteristic polynomials of the induced
//! `ad_W`-action, their discriminants and minimal polynomial degrees, and the
//! inertia of the Killing form. No root of any polynomial is ever extracted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::cochain::{closed_one_forms, differential_matrix, monomial_basis, Cochain};
use crate::hermitian::{check_lck, form_matrix, is_integrable, ComplexStructure};
use crate::lie::LieAlgebra;
use crate::linalg::{int, unit_vector, Matrix, Rational, Subspace, Vector};
use crate::{Error, Result};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Prop3Rotation,
    Prop3Hyperbolic,
    Prop4_3i,
    Prop4_3ii,
    Prop4_4,
    Prop4_5,
    Prop4_6,
    Prop4_7i,
    Prop4_7ii,
    Prop4_8,
    ReductiveCompact,
    ReductiveSplit,
    Abelian,
    OutsideCatalog,
    NotUnimodular,
}

impl ClassTag {
    pub const ALL: [ClassTag; 15] = [
        ClassTag::Prop3Rotation,
        ClassTag::Prop3Hyperbolic,
        ClassTag::Prop4_3i,
        ClassTag::Prop4_3ii,
        ClassTag::Prop4_4,
        ClassTag::Prop4_5,
        ClassTag::Prop4_6,
        ClassTag::Prop4_7i,
        ClassTag::Prop4_7ii,
        ClassTag::Prop4_8,
        ClassTag::ReductiveCompact,
        ClassTag::ReductiveSplit,
        ClassTag::Abelian,
        ClassTag::OutsideCatalog,
        ClassTag::NotUnimodular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Prop3Rotation => "Prop3-rotation",
            ClassTag::Prop3Hyperbolic => "Prop3-hyperbolic",
            ClassTag::Prop4_3i => "Prop4-3i",
            ClassTag::Prop4_3ii => "Prop4-3ii",
            ClassTag::Prop4_4 => "Prop4-4",
            ClassTag::Prop4_5 => "Prop4-5",
            ClassTag::Prop4_6 => "Prop4-6",
            ClassTag::Prop4_7i => "Prop4-7i",
            ClassTag::Prop4_7ii => "Prop4-7ii",
            ClassTag::Prop4_8 => "Prop4-8",
            ClassTag::ReductiveCompact => "Reductive-compact",
            ClassTag::ReductiveSplit => "Reductive-split",
            ClassTag::Abelian => "Abelian",
            ClassTag::OutsideCatalog => "OutsideCatalog",
            ClassTag::NotUnimodular => "NotUnimodular",
        }
    }

    /// Tags of the `ℝ³ ⋊ ℝ` normal forms.
    pub fn is_prop4(self) -> bool {
        matches!(
            self,
            ClassTag::Prop4_3i
                | ClassTag::Prop4_3ii
                | ClassTag::Prop4_4
                | ClassTag::Prop4_5
                | ClassTag::Prop4_6
                | ClassTag::Prop4_7i
                | ClassTag::Prop4_7ii
                | ClassTag::Prop4_8
        )
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown class `{s}`")))
    }
}

/// A class tag with the exact data that decided it.
///
/// `char_poly` is the characteristic polynomial (constant term first) of
/// `ad_W` acting on the nilradical, or on the nilradical modulo its centre
/// when that is Heisenberg, for one chosen `W` outside the nilradical.
/// Rescaling `W ↦ cW` maps `t³ + pt + q` to `t³ + c²pt + c³q`, so the
/// polynomial is only defined up to that action. `scale_invariant` is the
/// normalised datum: `p³/q²` when `q ≠ 0`, otherwise the sign of the
/// remaining coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    pub tag: ClassTag,
    pub char_poly: Option<Vec<Rational>>,
    pub scale_invariant: Option<Rational>,
    /// `(positive, negative, zero)` inertia of the Killing form.
    pub killing_inertia: (usize, usize, usize),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)
    }
}

fn sign(x: &Rational) -> Rational {
    if x.is_zero() {
        Rational::zero()
    } else if x.is_positive() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The nilradical of a solvable algebra, `None` otherwise.
///
/// For solvable `g` the nilradical is the set of `x` with `ad_x` nilpotent.
/// By Lie's theorem the associative algebra `A` generated by `1` and `ad(g)`
/// is simultaneously triangularisable over `ℂ`, so `ad_x` is nilpotent
/// exactly when `tr(ad_x M) = 0` for every `M ∈ A`. That is a linear
/// condition on `x`, solved exactly; the result is then checked to be a
/// nilpotent ideal.
pub fn nilradical(g: &LieAlgebra) -> Option<Subspace> {
    if !g.is_solvable() {
        return None;
    }
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n)
        .map(|i| g.ad_matrix(&unit_vector(n, i)).expect("basis vector"))
        .collect();
    let span = associative_span(n, &ads);
    let rows: Vec<Vector> = span
        .iter()
        .map(|m| {
            ads.iter()
                .map(|ad| ad.mul(m).expect("square").trace())
                .collect()
        })
        .collect();
    let kernel = Matrix::from_rows(n, rows)
        .expect("row length n")
        .kernel_basis();
    let ok = g.is_ideal(&kernel)
        && g.subalgebra(&kernel)
            .map(|s| s.is_nilpotent())
            .unwrap_or(false);
    assert!(ok, "trace criterion produced a non-nilpotent ideal");
    Some(kernel)
}

/// A basis of the unital associative algebra generated by `gens`.
fn associative_span(n: usize, gens: &[Matrix]) -> Vec<Matrix> {
    fn push(m: Matrix, basis: &mut Vec<Matrix>, space: &mut Subspace) {
        let flat = m.entries().to_vec();
        if !space.contains(&flat) {
            let line = Subspace::span(space.ambient_dim(), vec![flat]).expect("length n²");
            *space = space.sum(&line).expect("same ambient");
            basis.push(m);
        }
    }
    let mut basis: Vec<Matrix> = Vec::new();
    let mut space = Subspace::zero(n * n);
    push(Matrix::identity(n), &mut basis, &mut space);
    for m in gens {
        push(m.clone(), &mut basis, &mut space);
    }
    let mut frontier = 0;
    while frontier < basis.len() {
        let current = basis[frontier].clone();
        for m in gens {
            let product = m.mul(&current).expect("square");
            push(product, &mut basis, &mut space);
        }
        frontier += 1;
    }
    basis
}

/// Matrix of `ad_w` restricted to an ideal `s`, in the echelon basis of `s`.
fn restricted_ad(g: &LieAlgebra, w: &[Rational], s: &Subspace) -> Matrix {
    let cols: Vec<Vector> = s
        .basis()
        .iter()
        .map(|b| {
            let image = g.bracket(w, b).expect("conforming");
            s.coordinates(&image)
                .expect("conforming")
                .expect("s is an ideal")
        })
        .collect();
    Matrix::from_columns(s.dim(), &cols).expect("square")
}

/// Classifies a four-dimensional Lie algebra into the normal forms.
pub fn classify4(g: &LieAlgebra) -> Result<ClassLabel> {
    if g.dim() != 4 {
        return Err(Error::WrongDimension {
            expected: 4,
            found: g.dim(),
        });
    }
    let killing = g.killing_form();
    let killing_inertia = killing.inertia()?;
    let label = |tag| ClassLabel {
        tag,
        char_poly: None,
        scale_invariant: None,
        killing_inertia,
    };

    if !g.is_unimodular() {
        return Ok(label(ClassTag::NotUnimodular));
    }

    if !g.is_solvable() {
        let derived = g.derived_algebra();
        if g.center().dim() != 1 || derived.dim() != 3 {
            return Ok(label(ClassTag::OutsideCatalog));
        }
        // Killing form restricted to the simple part.
        let s = Matrix::from_columns(4, derived.basis())?;
        let restricted = s.transpose().mul(&killing)?.mul(&s)?;
        let tag = match restricted.inertia()? {
            (0, 3, 0) => ClassTag::ReductiveCompact,
            _ => ClassTag::ReductiveSplit,
        };
        return Ok(label(tag));
    }

    if g.is_nilpotent() {
        let dims: Vec<usize> = g.lower_central_series().iter().map(|s| s.dim()).collect();
        let tag = match dims.as_slice() {
            [4, 0] => ClassTag::Abelian,
            [4, 1, 0] => ClassTag::Prop4_3ii,
            [4, 2, 1, 0] => ClassTag::Prop4_3i,
            _ => ClassTag::OutsideCatalog,
        };
        return Ok(label(tag));
    }

    let nil = nilradical(g).expect("solvable");
    if nil.dim() != 3 {
        return Ok(label(ClassTag::OutsideCatalog));
    }
    let w = (0..4)
        .map(|i| unit_vector(4, i))
        .find(|e| !nil.contains(e))
        .expect("nilradical is proper");
    let n_alg = g.subalgebra(&nil)?;
    let ad_w = restricted_ad(g, &w, &nil);

    if n_alg.derived_algebra().is_zero() {
        let poly = ad_w.char_poly()?;
        assert!(poly[2].is_zero(), "unimodular action is traceless");
        let (p, q) = (poly[1].clone(), poly[0].clone());
        let (tag, invariant) = if q.is_zero() {
            let tag = if p.is_negative() {
                ClassTag::Prop4_4
            } else if p.is_positive() {
                ClassTag::Prop4_5
            } else {
                ClassTag::OutsideCatalog
            };
            (tag, sign(&p))
        } else {
            let disc = -int(4) * &p * &p * &p - int(27) * &q * &q;
            let tag = if disc.is_positive() {
                ClassTag::Prop4_6
            } else if disc.is_negative() {
                ClassTag::Prop4_8
            } else if ad_w.minimal_poly_degree()? == 2 {
                ClassTag::Prop4_7i
            } else {
                ClassTag::Prop4_7ii
            };
            (tag, &p * &p * &p / (&q * &q))
        };
        return Ok(ClassLabel {
            tag,
            char_poly: Some(poly),
            scale_invariant: Some(invariant),
            killing_inertia,
        });
    }

    let centre = n_alg.center();
    if centre.dim() != 1 {
        return Ok(label(ClassTag::OutsideCatalog));
    }
    // Induced action on N / Z(N): coordinates of ad_W in a basis of N that
    // starts with the centre, dropping the centre component.
    let z = n_alg_vector(&nil, &centre.basis()[0]);
    let mut adapted = vec![z];
    for b in nil.basis() {
        if adapted.len() == 3 {
            break;
        }
        let trial = Subspace::span(4, [adapted.clone(), vec![b.clone()]].concat())?;
        if trial.dim() > adapted.len() {
            adapted.push(b.clone());
        }
    }
    let frame = Matrix::from_columns(4, &adapted)?;
    let mut induced = Matrix::zeros(2, 2);
    for k in 0..2 {
        let image = g.bracket(&w, &adapted[k + 1])?;
        let coords = frame.solve(&image)?.expect("N is an ideal");
        induced[(0, k)] = coords[1].clone();
        induced[(1, k)] = coords[2].clone();
    }
    let poly = induced.char_poly()?;
    assert!(poly[1].is_zero(), "unimodular action is traceless");
    let q = poly[0].clone();
    let tag = if q.is_positive() {
        ClassTag::Prop3Rotation
    } else if q.is_negative() {
        ClassTag::Prop3Hyperbolic
    } else {
        ClassTag::OutsideCatalog
    };
    Ok(ClassLabel {
        tag,
        scale_invariant: Some(sign(&q)),
        char_poly: Some(poly),
        killing_inertia,
    })
}

/// Maps coordinates in the echelon basis of `s` back to the ambient space.
fn n_alg_vector(s: &Subspace, coords: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); s.ambient_dim()];
    for (c, b) in coords.iter().zip(s.basis()) {
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    out
}

/// Coefficients of `Φ(t) = t³ - m t² + n t - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleRootQuery {
    pub m: i64,
    pub n: i64,
}

impl DoubleRootQuery {
    /// `Φ` with constant term first.
    pub fn polynomial(&self) -> Vec<Rational> {
        vec![int(-1), int(self.n), int(-self.m), int(1)]
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn remainder(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().expect("nonempty") / &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r = trim(r);
    }
    r
}

/// Monic greatest common divisor over `ℚ`, constant term first.
pub fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = remainder(&x, &y);
        x = y;
        y = r;
    }
    match x.last().cloned() {
        Some(lead) => x.into_iter().map(|c| c / &lead).collect(),
        None => x,
    }
}

/// `gcd(Φ, Φ')` up to a constant factor, by a primitive pseudo-remainder
/// sequence over `ℤ`. Staying integral avoids reducing fractions at every
/// step, which dominates the cost on small inputs.
fn integer_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }
    fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
        let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() || content.is_one() {
            p
        } else {
            p.into_iter().map(|c| c / &content).collect()
        }
    }
    fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        let lead = b.last().expect("nonzero divisor");
        while r.len() >= b.len() {
            let top = r.last().expect("nonempty").clone();
            let shift = r.len() - b.len();
            for c in r.iter_mut() {
                *c *= lead;
            }
            for (i, c) in b.iter().enumerate() {
                r[shift + i] -= &top * c;
            }
            r = trim(r);
        }
        r
    }
    let mut x = primitive(trim(a.to_vec()));
    let mut y = primitive(trim(b.to_vec()));
    while !y.is_empty() {
        let r = primitive(pseudo_remainder(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// The repeated real root of `Φ`, if any, found from `gcd(Φ, Φ')`.
///
/// A repeated root of a real cubic is real; the gcd is `(t - a)` for a double
/// root and `(t - a)²` for a triple root, so the root is rational.
pub fn double_root_test(q: DoubleRootQuery) -> Option<Rational> {
    let phi: Vec<BigInt> = [-1, q.n, -q.m, 1].into_iter().map(BigInt::from).collect();
    let dphi: Vec<BigInt> = [q.n, -2 * q.m, 3].into_iter().map(BigInt::from).collect();
    let g = integer_gcd(&phi, &dphi);
    match g.len() {
        2 => Some(-Rational::new(g[0].clone(), g[1].clone())),
        3 => Some(-Rational::new(g[1].clone(), g[2].clone() * 2)),
        _ => None,
    }
}

/// All `(m, n)` with `|m|, |n| ≤ bound` whose `Φ` has a repeated root.
pub fn double_root_sweep(bound: i64) -> Vec<(DoubleRootQuery, Rational)> {
    (-bound..=bound)
        .flat_map(|m| (-bound..=bound).map(move |n| DoubleRootQuery { m, n }))
        .filter_map(|q| double_root_test(q).map(|r| (q, r)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeVerdict {
    Yes,
    No,
    NotApplicable,
}

impl LatticeVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeVerdict::Yes => "yes",
            LatticeVerdict::No => "no",
            LatticeVerdict::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for LatticeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub verdict: LatticeVerdict,
    pub reason: &'static str,
}

pub fn lattice_verdict(label: &ClassLabel) -> LatticeReport {
    lattice_verdict_for_tag(label.tag)
}

pub fn lattice_verdict_for_tag(tag: ClassTag) -> LatticeReport {
    use ClassTag::*;
    let (verdict, reason) = match tag {
        Prop3Rotation => (LatticeVerdict::Yes, "secondary Kodaira surface"),
        Prop3Hyperbolic => (LatticeVerdict::Yes, "Inoue surface of type S+"),
        Prop4_3ii => (LatticeVerdict::Yes, "primary Kodaira surface"),
        Prop4_8 => (
            LatticeVerdict::Yes,
            "Inoue surface of type S0 for suitable parameters",
        ),
        Prop4_5 => (LatticeVerdict::Yes, "hyperelliptic surface"),
        Prop4_3i | Prop4_4 | Prop4_6 => (LatticeVerdict::Yes, "compact solvmanifold"),
        Prop4_7i | Prop4_7ii => (
            LatticeVerdict::No,
            "a lattice would give an integer matrix with characteristic polynomial \
             t³ - mt² + nt - 1 and a double root other than ±1, which is impossible",
        ),
        ReductiveCompact => (LatticeVerdict::Yes, "Hopf surface"),
        ReductiveSplit => (LatticeVerdict::Yes, "properly elliptic surface"),
        Abelian | OutsideCatalog | NotUnimodular => (
            LatticeVerdict::NotApplicable,
            "outside the classified normal forms",
        ),
    };
    LatticeReport { verdict, reason }
}

/// Rational grid `lo, lo + step, ..., ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub lo: Rational,
    pub hi: Rational,
    pub step: Rational,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            lo: int(-3),
            hi: int(3),
            step: Rational::new(1.into(), 2.into()),
        }
    }
}

impl GridSpec {
    pub fn new(lo: Rational, hi: Rational, step: Rational) -> Result<Self> {
        if !step.is_positive() || lo > hi {
            return Err(Error::BadParameters(format!(
                "grid needs lo ≤ hi and step > 0, got {lo}:{hi}:{step}"
            )));
        }
        Ok(GridSpec { lo, hi, step })
    }

    pub fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut x = self.lo.clone();
        while x <= self.hi {
            out.push(x.clone());
            x += &self.step;
        }
        out
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.step)
    }
}

impl FromStr for GridSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, step] = parts.as_slice() else {
            return Err(Error::BadParameters(format!(
                "grid `{s}` is not lo:hi:step"
            )));
        };
        let parse = |x: &str| {
            Rational::from_str(x.trim())
                .map_err(|_| Error::BadParameters(format!("bad rational `{x}` in grid")))
        };
        GridSpec::new(parse(lo)?, parse(hi)?, parse(step)?)
    }
}

/// Complex structures `J e_a = s e_b, J e_b = -s e_a` over all perfect
/// matchings of the basis and all sign choices, in a fixed order.
pub fn default_j_candidates(n: usize) -> Result<Vec<ComplexStructure>> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut matchings = Vec::new();
    fn rec(rest: Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&a, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (k, &b) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &x)| x)
                .collect();
            acc.push((a, b));
            rec(remaining, acc, out);
            acc.pop();
        }
    }
    rec((0..n).collect(), &mut Vec::new(), &mut matchings);
    let mut out = Vec::new();
    for pairs in matchings {
        for signs in 0..(1u64 << pairs.len()) {
            let mut m = Matrix::zeros(n, n);
            for (k, &(a, b)) in pairs.iter().enumerate() {
                let s = if signs >> k & 1 == 0 { int(1) } else { int(-1) };
                m[(b, a)] = s.clone();
                m[(a, b)] = -s;
            }
            out.push(ComplexStructure::new(m)?);
        }
    }
    Ok(out)
}

/// An exact l.c.K. pair found by [`lck_search`].
#[derive(Clone, Debug)]
pub struct Witness {
    /// Position of `j` in the candidate list.
    pub j_index: usize,
    pub j: ComplexStructure,
    pub theta: Cochain,
    pub omega: Cochain,
}

/// Summary of a search that found nothing. This is evidence, not a proof of
/// non-existence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoWitness {
    pub grid: GridSpec,
    pub height: u32,
    pub j_candidates: usize,
    pub integrable_candidates: usize,
    pub theta_points: usize,
}

impl fmt::Display for NoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no witness on grid {} (height {}, {} of {} complex structures integrable, {} Lee form points); \
             evidence only, not a proof of non-existence",
            self.grid, self.height, self.integrable_candidates, self.j_candidates, self.theta_points
        )
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Witness),
    NotFound(NoWitness),
}

/// Integer vectors in `[-h, h]^r \ {0}` ordered by max-norm, then
/// lexicographically.
fn samples(r: usize, height: u32) -> Vec<Vec<i64>> {
    let h = height as i64;
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-h..=h).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&c| c != 0));
    out.sort_by_key(|v| v.iter().map(|c| c.abs()).max().unwrap_or(0));
    out
}

/// Linear conditions on `Ω ∈ Λ²` for `d_θ Ω = 0` and `J`-invariance.
fn omega_conditions(g: &LieAlgebra, theta: &Cochain, j: &Matrix) -> Result<Matrix> {
    let n = g.dim();
    let twisted = differential_matrix(g, Some(theta), 2)?;
    let basis = monomial_basis(n, 2);
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            // Ω(Je_a, Je_b) - Ω(e_a, e_b) as a functional of the coordinates.
            let row: Vector = basis
                .iter()
                .map(|key| {
                    let (i, k) = (key[0], key[1]);
                    let minor = &j[(i, a)] * &j[(k, b)] - &j[(k, a)] * &j[(i, b)];
                    let own = if (i, k) == (a, b) { int(1) } else { int(0) };
                    minor - own
                })
                .collect();
            rows.push(row);
        }
    }
    let invariance = Matrix::from_rows(basis.len(), rows)?;
    twisted.vstack(&invariance)
}

fn search_point(
    g: &LieAlgebra,
    j: &ComplexStructure,
    theta: &Cochain,
    height: u32,
) -> Result<Option<Cochain>> {
    let n = g.dim();
    let kernel = omega_conditions(g, theta, j.matrix())?.kernel_basis();
    if kernel.is_zero() {
        return Ok(None);
    }
    for coeffs in samples(kernel.dim(), height) {
        let mut coords = vec![Rational::zero(); kernel.ambient_dim()];
        for (c, b) in coeffs.iter().zip(kernel.basis()) {
            if *c != 0 {
                for (o, x) in coords.iter_mut().zip(b) {
                    *o += int(*c) * x;
                }
            }
        }
        let omega = Cochain::from_coordinates(n, 2, &coords)?;
        let h = form_matrix(&omega)?.mul(j.matrix())?;
        if h.is_symmetric() && h.is_positive_definite()? {
            return Ok(Some(omega));
        }
    }
    Ok(None)
}

/// Searches for an l.c.K. pair `(Ω, θ)` compatible with one of the given
/// complex structures (the default candidate set when `js` is `None`).
///
/// Lee forms range over the grid in the coordinates of the closed 1-forms
/// (first coordinate slowest, `θ = 0` skipped). For each `θ` the `J`-invariant
/// `d_θ`-closed 2-forms form a linear space; integer combinations of its
/// basis with coefficients in `[-height, height]` are tested for a positive
/// definite metric. The reported witness is the first one in
/// (candidate, grid point, sample) order regardless of scheduling.
pub fn lck_search(
    g: &LieAlgebra,
    js: Option<&[ComplexStructure]>,
    grid: &GridSpec,
    height: u32,
) -> Result<SearchOutcome> {
    let n = g.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let candidates = match js {
        Some(js) => js.to_vec(),
        None => default_j_candidates(n)?,
    };
    if let Some(j) = candidates.iter().find(|j| j.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: j.dim(),
        });
    }
    let integrable: Vec<(usize, &ComplexStructure)> = candidates
        .iter()
        .enumerate()
        .filter(|(_, j)| is_integrable(g, j).unwrap_or(false))
        .collect();

    let closed = closed_one_forms(g);
    let values = grid.values();
    let mut index = vec![0usize; closed.dim()];
    let total = values.len().pow(closed.dim() as u32);
    let mut thetas = Vec::with_capacity(total);
    for _ in 0..total {
        let mut coords = vec![Rational::zero(); n];
        for (k, b) in index.iter().zip(closed.basis()) {
            for (o, x) in coords.iter_mut().zip(b) {
                *o += &values[*k] * x;
            }
        }
        // θ = 0 would be a Kähler pair, not an l.c.K. one.
        if !coords.iter().all(|c| c.is_zero()) {
            thetas.push(Cochain::one_form(&coords));
        }
        for slot in index.iter_mut().rev() {
            *slot += 1;
            if *slot < values.len() {
                break;
            }
            *slot = 0;
        }
    }

    let tasks: Vec<(usize, &ComplexStructure, &Cochain)> = integrable
        .iter()
        .flat_map(|&(i, j)| thetas.iter().map(move |t| (i, j, t)))
        .collect();
    let found = tasks
        .par_iter()
        .map(|&(i, j, theta)| {
            search_point(g, j, theta, height).map(|o| o.map(|omega| (i, j, theta, omega)))
        })
        .find_map_first(|r| match r {
            Ok(Some(hit)) => Some(Ok(hit)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        });

    match found {
        Some(hit) => {
            let (i, j, theta, omega) = hit?;
            let report = check_lck(g, &omega, theta, j.matrix())?;
            assert!(report.pass(), "search witnesses satisfy every condition");
            Ok(SearchOutcome::Found(Witness {
                j_index: i,
                j: j.clone(),
                theta: theta.clone(),
                omega,
            }))
        }
        None => Ok(SearchOutcome::NotFound(NoWitness {
            grid: grid.clone(),
            height,
            j_candidates: candidates.len(),
            integrable_candidates: integrable.len(),
            theta_points: thetas.len(),
        })),
    }
}
