//! Alternating forms on a Lie algebra, the Chevalley-Eilenberg differential
//! and its twist by a closed 1-form.
//!
//! A `p`-cochain is stored by its coefficients on the monomials
//! `e^{i₁}∧…∧e^{i_p}` with `i₁ < … < i_p`. Evaluation uses the determinant
//! convention, so `(e^i∧e^j)(e_i, e_j) = 1`, and the wedge product is the
//! plain shuffle sum without factorial normalisation.
//!
//! The differential follows the coboundary formula with trivial coefficients,
//!
//! ```text
//! (dω)(x₀, …, x_p) = Σ_{j<k} (-1)^{j+k} ω([x_j, x_k], x₀, …, x̂_j, …, x̂_k, …, x_p)
//! ```
//!
//! which on 1-forms reads `dσ(u, v) = -σ([u, v])`. The twisted differential is
//! `d_θ ω = dω - θ∧ω`; it squares to zero exactly when `dθ = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational, Subspace, Vector};
use crate::{Error, Result};

/// Increasing index tuples of length `p` in `0..n`, lexicographically sorted.
pub fn monomial_basis(n: usize, p: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(p).collect()
}

/// Sign of the permutation sorting `indices`, or 0 if an index repeats.
fn sort_sign(indices: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..indices.len() {
        for b in a + 1..indices.len() {
            match indices[a].cmp(&indices[b]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cochain {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl Cochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(degree <= dim, "degree {degree} exceeds dimension {dim}");
        Cochain {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut out = Cochain::zero(dim, 0);
        if !c.is_zero() {
            out.coeffs.insert(Vec::new(), c);
        }
        out
    }

    /// `c · e^{i₁}∧…∧e^{i_p}` for indices in any order.
    pub fn monomial(dim: usize, indices: &[usize], c: Rational) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad + 1,
            });
        }
        if indices.len() > dim {
            return Err(Error::DegreeOverflow {
                degree: indices.len(),
                dim,
            });
        }
        let mut out = Cochain::zero(dim, indices.len());
        let sign = sort_sign(indices);
        if sign != 0 && !c.is_zero() {
            let mut key = indices.to_vec();
            key.sort_unstable();
            out.coeffs.insert(key, if sign > 0 { c } else { -c });
        }
        Ok(out)
    }

    /// The 1-form `Σ c_i e^i`.
    pub fn one_form(coeffs: &[Rational]) -> Self {
        Cochain::from_coordinates(coeffs.len(), 1, coeffs).expect("length matches")
    }

    /// Builds a cochain from coordinates in [`monomial_basis`] order.
    pub fn from_coordinates(dim: usize, degree: usize, coords: &[Rational]) -> Result<Self> {
        if degree > dim {
            return Err(Error::DegreeOverflow { degree, dim });
        }
        let basis = monomial_basis(dim, degree);
        if coords.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: coords.len(),
            });
        }
        let coeffs = basis
            .into_iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        Ok(Cochain {
            dim,
            degree,
            coeffs,
        })
    }

    pub fn coordinates(&self) -> Vector {
        monomial_basis(self.dim, self.degree)
            .iter()
            .map(|k| self.coeff(k))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient on a sorted index tuple.
    pub fn coeff(&self, sorted: &[usize]) -> Rational {
        self.coeffs
            .get(sorted)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        let mut out = Cochain::zero(self.dim, self.degree);
        if !c.is_zero() {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect();
        }
        out
    }

    fn insert_add(&mut self, key: Vec<usize>, c: Rational) {
        let entry = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    fn combine(&self, other: &Cochain, sign: &Rational) -> Cochain {
        assert_eq!(
            (self.dim, self.degree),
            (other.dim, other.degree),
            "adding cochains of different shape"
        );
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.insert_add(k.clone(), sign * v);
        }
        out
    }

    /// Value on `vs`, multilinear and alternating.
    pub fn eval(&self, vs: &[Vector]) -> Result<Rational> {
        if vs.len() != self.degree {
            return Err(Error::ArityMismatch {
                degree: self.degree,
                given: vs.len(),
            });
        }
        if let Some(v) = vs.iter().find(|v| v.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut total = Rational::zero();
        for (key, c) in &self.coeffs {
            let p = key.len();
            let mut m = Matrix::zeros(p, p);
            for (a, v) in vs.iter().enumerate() {
                for (b, &i) in key.iter().enumerate() {
                    m[(a, b)] = v[i].clone();
                }
            }
            total += c * m.determinant()?;
        }
        Ok(total)
    }

    /// `ω(v, e_{rest})` for a sorted tuple `rest`.
    fn eval_vector_then_basis(&self, v: &[Rational], rest: &[usize]) -> Rational {
        let mut total = Rational::zero();
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            let Err(pos) = rest.binary_search(&m) else {
                continue;
            };
            let mut key = Vec::with_capacity(rest.len() + 1);
            key.extend_from_slice(&rest[..pos]);
            key.push(m);
            key.extend_from_slice(&rest[pos..]);
            if let Some(c) = self.coeffs.get(&key) {
                // Moving m from the front to position pos costs pos transpositions.
                if pos % 2 == 0 {
                    total += vm * c;
                } else {
                    total -= vm * c;
                }
            }
        }
        total
    }

    pub fn wedge(&self, other: &Cochain) -> Result<Cochain> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let degree = self.degree + other.degree;
        if degree > self.dim {
            return Err(Error::DegreeOverflow {
                degree,
                dim: self.dim,
            });
        }
        let mut out = Cochain::zero(self.dim, degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let mut inversions = 0usize;
                let mut disjoint = true;
                for i in a {
                    for k in b {
                        if i == k {
                            disjoint = false;
                        } else if i > k {
                            inversions += 1;
                        }
                    }
                }
                if !disjoint {
                    continue;
                }
                let mut key: Vec<usize> = a.iter().chain(b).copied().collect();
                key.sort_unstable();
                let c = x * y;
                out.insert_add(key, if inversions.is_multiple_of(2) { c } else { -c });
            }
        }
        Ok(out)
    }

    /// Contraction `ι_v ω = ω(v, ·, …, ·)`.
    pub fn interior(&self, v: &[Rational]) -> Result<Cochain> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if self.degree == 0 {
            return Err(Error::ArityMismatch {
                degree: 0,
                given: 1,
            });
        }
        let mut out = Cochain::zero(self.dim, self.degree - 1);
        for rest in monomial_basis(self.dim, self.degree - 1) {
            let c = self.eval_vector_then_basis(v, &rest);
            if !c.is_zero() {
                out.coeffs.insert(rest, c);
            }
        }
        Ok(out)
    }

    /// Human-readable rendering with dual basis names derived from `labels`
    /// (lower-cased), e.g. `x^y + z^w`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        CochainDisplay {
            cochain: self,
            labels,
        }
    }
}

struct CochainDisplay<'a> {
    cochain: &'a Cochain,
    labels: &'a [String],
}

impl fmt::Display for CochainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cochain.is_zero() {
            return write!(f, "0");
        }
        for (n, (key, c)) in self.cochain.coeffs.iter().enumerate() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = key
                .iter()
                .map(|&i| {
                    self.labels
                        .get(i)
                        .map_or_else(|| format!("e{i}"), |l| l.to_lowercase())
                })
                .join("^");
            if key.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{magnitude}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        self.combine(rhs, &Rational::one())
    }
}

impl Sub for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        self.combine(rhs, &-Rational::one())
    }
}

impl Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        self.scale(&-Rational::one())
    }
}

impl Add for Cochain {
    type Output = Cochain;
    fn add(self, rhs: Cochain) -> Cochain {
        &self + &rhs
    }
}

impl Sub for Cochain {
    type Output = Cochain;
    fn sub(self, rhs: Cochain) -> Cochain {
        &self - &rhs
    }
}

impl Neg for Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        -&self
    }
}

fn check_conforms(g: &LieAlgebra, omega: &Cochain) -> Result<()> {
    if omega.dim != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: omega.dim,
        });
    }
    Ok(())
}

/// Chevalley-Eilenberg differential with trivial coefficients.
pub fn ce_d(g: &LieAlgebra, omega: &Cochain) -> Result<Cochain> {
    check_conforms(g, omega)?;
    let n = g.dim();
    let p = omega.degree;
    if p >= n {
        return Err(Error::DegreeOverflow {
            degree: p + 1,
            dim: n,
        });
    }
    let mut out = Cochain::zero(n, p + 1);
    if omega.is_zero() {
        return Ok(out);
    }
    for key in monomial_basis(n, p + 1) {
        let mut total = Rational::zero();
        for j in 0..=p {
            for k in j + 1..=p {
                let b = g.basis_bracket(key[j], key[k]);
                let rest: Vec<usize> = key
                    .iter()
                    .enumerate()
                    .filter(|&(m, _)| m != j && m != k)
                    .map(|(_, &i)| i)
                    .collect();
                let value = omega.eval_vector_then_basis(b, &rest);
                if (j + k) % 2 == 0 {
                    total += value;
                } else {
                    total -= value;
                }
            }
        }
        if !total.is_zero() {
            out.coeffs.insert(key, total);
        }
    }
    Ok(out)
}

fn require_one_form(theta: &Cochain) -> Result<()> {
    if theta.degree != 1 {
        return Err(Error::WrongDegree {
            expected: 1,
            found: theta.degree,
        });
    }
    Ok(())
}

/// Checks that `θ` is a closed 1-form on `g`.
pub fn require_closed(g: &LieAlgebra, theta: &Cochain) -> Result<()> {
    require_one_form(theta)?;
    check_conforms(g, theta)?;
    if g.dim() > 1 && !ce_d(g, theta)?.is_zero() {
        return Err(Error::LeeFormNotClosed);
    }
    Ok(())
}

/// `d_θ ω = dω - θ∧ω`.
pub fn twisted_d(g: &LieAlgebra, theta: &Cochain, omega: &Cochain) -> Result<Cochain> {
    require_closed(g, theta)?;
    twisted_d_unchecked(g, theta, omega)
}

fn twisted_d_unchecked(g: &LieAlgebra, theta: &Cochain, omega: &Cochain) -> Result<Cochain> {
    Ok(&ce_d(g, omega)? - &theta.wedge(omega)?)
}

/// Matrix of `d_θ : Λᵖ → Λᵖ⁺¹` in the monomial bases (plain `d` when `theta`
/// is `None`). For `p = n` this is the empty `0 × 1` matrix.
pub fn differential_matrix(g: &LieAlgebra, theta: Option<&Cochain>, p: usize) -> Result<Matrix> {
    let n = g.dim();
    if p > n {
        return Err(Error::DegreeOverflow { degree: p, dim: n });
    }
    if let Some(t) = theta {
        require_closed(g, t)?;
    }
    let sources = monomial_basis(n, p);
    if p == n {
        return Ok(Matrix::zeros(0, sources.len()));
    }
    let target_len = monomial_basis(n, p + 1).len();
    let columns = sources
        .iter()
        .map(|key| {
            let mono = Cochain::monomial(n, key, Rational::one())?;
            let image = match theta {
                Some(t) => twisted_d_unchecked(g, t, &mono)?,
                None => ce_d(g, &mono)?,
            };
            Ok(image.coordinates())
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(target_len, &columns)
}

/// `dim H^p_θ(g)`: kernel of `d_θ` on `Λᵖ` modulo the image of `Λᵖ⁻¹`.
pub fn twisted_cohomology_dim(g: &LieAlgebra, theta: &Cochain, p: usize) -> Result<usize> {
    require_closed(g, theta)?;
    cohomology_dim(g, Some(theta), p)
}

fn cohomology_dim(g: &LieAlgebra, theta: Option<&Cochain>, p: usize) -> Result<usize> {
    let n = g.dim();
    if p > n {
        return Err(Error::DegreeOverflow { degree: p, dim: n });
    }
    let d_p = differential_matrix(g, theta, p)?;
    let kernel = d_p.cols() - d_p.rank();
    let image = if p == 0 {
        0
    } else {
        differential_matrix(g, theta, p - 1)?.rank()
    };
    Ok(kernel - image)
}

/// Twisted Betti numbers `dim H^p_θ` for `p = 0..=n`.
pub fn twisted_cohomology_dims(g: &LieAlgebra, theta: &Cochain) -> Result<Vec<usize>> {
    require_closed(g, theta)?;
    (0..=g.dim())
        .map(|p| cohomology_dim(g, Some(theta), p))
        .collect()
}

/// Ordinary Chevalley-Eilenberg Betti numbers.
pub fn betti_numbers(g: &LieAlgebra) -> Result<Vec<usize>> {
    (0..=g.dim()).map(|p| cohomology_dim(g, None, p)).collect()
}

/// Finds `ψ` with `Ω = d_θ ψ = dψ - θ∧ψ`, or `None` if `Ω` is not
/// `d_θ`-exact. The echelon particular solution is returned.
pub fn solve_potential(
    g: &LieAlgebra,
    theta: &Cochain,
    omega: &Cochain,
) -> Result<Option<Cochain>> {
    require_closed(g, theta)?;
    check_conforms(g, omega)?;
    if omega.degree != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: omega.degree,
        });
    }
    if g.dim() > 2 && !twisted_d_unchecked(g, theta, omega)?.is_zero() {
        return Err(Error::NotTwistedClosed);
    }
    let d1 = differential_matrix(g, Some(theta), 1)?;
    Ok(d1
        .solve(&omega.coordinates())?
        .map(|coords| Cochain::one_form(&coords)))
}

/// Closed 1-forms, i.e. the annihilator of `[g, g]`, as coordinate vectors.
pub fn closed_one_forms(g: &LieAlgebra) -> Subspace {
    if g.dim() < 2 {
        return Subspace::full(g.dim());
    }
    differential_matrix(g, None, 1)
        .expect("degree 1 fits")
        .kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::StructureConstants;
    use crate::linalg::{int, unit_vector};

    fn hopf() -> LieAlgebra {
        let mut c = StructureConstants::new(&["X", "Y", "Z", "W"]).unwrap();
        c.set_named("X", "Y", &[("Z", int(-1))]).unwrap();
        c.set_named("Z", "X", &[("Y", int(-1))]).unwrap();
        c.set_named("Z", "Y", &[("X", int(1))]).unwrap();
        LieAlgebra::new(c).unwrap()
    }

    fn inoue_plus() -> LieAlgebra {
        let mut c = StructureConstants::new(&["X", "Y", "Z", "W"]).unwrap();
        c.set_named("Y", "Z", &[("X", int(-1))]).unwrap();
        c.set_named("W", "Y", &[("Y", int(1))]).unwrap();
        c.set_named("W", "Z", &[("Z", int(-1))]).unwrap();
        LieAlgebra::new(c).unwrap()
    }

    fn mono(idx: &[usize]) -> Cochain {
        Cochain::monomial(4, idx, int(1)).unwrap()
    }

    fn e(i: usize) -> Vector {
        unit_vector(4, i)
    }

    const X: usize = 0;
    const Y: usize = 1;
    const Z: usize = 2;
    const W: usize = 3;

    #[test]
    fn eval_convention() {
        let xy = mono(&[X, Y]);
        assert_eq!(xy.eval(&[e(X), e(Y)]).unwrap(), int(1));
        assert_eq!(xy.eval(&[e(Y), e(X)]).unwrap(), int(-1));
        assert_eq!(xy.eval(&[e(X), e(X)]).unwrap(), int(0));
        assert!(matches!(
            xy.eval(&[e(X)]),
            Err(Error::ArityMismatch {
                degree: 2,
                given: 1
            })
        ));
    }

    #[test]
    fn wedge_examples() {
        let x = mono(&[X]);
        let y = mono(&[Y]);
        assert_eq!(x.wedge(&y).unwrap(), mono(&[X, Y]));
        assert_eq!(y.wedge(&x).unwrap(), -mono(&[X, Y]));

        let omega = &mono(&[X, Y]) + &mono(&[Z, W]);
        assert_eq!(mono(&[W]).wedge(&omega).unwrap(), mono(&[X, Y, W]));
        assert!(matches!(
            mono(&[X, Y, Z]).wedge(&omega),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn monomial_sorting_sign() {
        assert_eq!(
            Cochain::monomial(4, &[W, X], int(1)).unwrap(),
            -mono(&[X, W])
        );
        assert!(Cochain::monomial(4, &[X, X], int(1)).unwrap().is_zero());
    }

    #[test]
    fn differential_examples() {
        let ab = LieAlgebra::abelian(&["a", "b", "c"]).unwrap();
        let f = Cochain::monomial(3, &[0], int(5)).unwrap();
        assert!(ce_d(&ab, &f).unwrap().is_zero());

        assert_eq!(ce_d(&hopf(), &mono(&[Z])).unwrap(), mono(&[X, Y]));
        assert_eq!(ce_d(&inoue_plus(), &mono(&[X])).unwrap(), mono(&[Y, Z]));
    }

    #[test]
    fn twisted_examples() {
        let g = hopf();
        let omega = &mono(&[X, Y]) + &mono(&[Z, W]);
        let zero = Cochain::zero(4, 1);
        assert_eq!(
            twisted_d(&g, &zero, &omega).unwrap(),
            ce_d(&g, &omega).unwrap()
        );
        assert!(twisted_d(&g, &mono(&[W]), &omega).unwrap().is_zero());
        assert!(matches!(
            twisted_d(&g, &mono(&[Z]), &omega),
            Err(Error::LeeFormNotClosed)
        ));
    }

    #[test]
    fn potential_on_hopf() {
        let g = hopf();
        let theta = mono(&[W]);
        let omega = &mono(&[X, Y]) + &mono(&[Z, W]);
        let psi = solve_potential(&g, &theta, &omega).unwrap().unwrap();
        assert_eq!(twisted_d(&g, &theta, &psi).unwrap(), omega);
        assert_eq!(psi, mono(&[Z]));
        let zero = Cochain::zero(4, 2);
        let psi0 = solve_potential(&g, &theta, &zero).unwrap().unwrap();
        assert!(psi0.is_zero());
        // Not d_θ-closed.
        assert!(matches!(
            solve_potential(&g, &theta, &mono(&[X, W])),
            Err(Error::NotTwistedClosed)
        ));
    }

    #[test]
    fn closed_non_exact_two_form_has_no_potential() {
        // 𝔲(2) ⊕ ℝ: t∧u is closed but not exact.
        let mut c = StructureConstants::new(&["T", "X", "Y", "Z", "U"]).unwrap();
        c.set_named("X", "Y", &[("Z", int(1))]).unwrap();
        c.set_named("Y", "Z", &[("X", int(1))]).unwrap();
        c.set_named("Z", "X", &[("Y", int(1))]).unwrap();
        let g = LieAlgebra::new(c).unwrap();
        let omega = Cochain::monomial(5, &[0, 4], int(1)).unwrap();
        assert!(ce_d(&g, &omega).unwrap().is_zero());
        let zero = Cochain::zero(5, 1);
        assert_eq!(solve_potential(&g, &zero, &omega).unwrap(), None);
    }

    #[test]
    fn closed_one_forms_examples() {
        let ab = LieAlgebra::abelian(&["a", "b", "c"]).unwrap();
        assert_eq!(closed_one_forms(&ab), Subspace::full(3));
        assert_eq!(closed_one_forms(&hopf()).basis(), &[e(W)]);
        assert_eq!(closed_one_forms(&inoue_plus()).basis(), &[e(W)]);
    }

    #[test]
    fn cohomology_basics() {
        let g = hopf();
        let zero = Cochain::zero(4, 1);
        assert_eq!(twisted_cohomology_dim(&g, &zero, 0).unwrap(), 1);
        assert_eq!(betti_numbers(&g).unwrap(), vec![1, 1, 0, 1, 1]);
        assert_eq!(
            twisted_cohomology_dims(&g, &mono(&[W])).unwrap(),
            vec![0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn interior_product() {
        let omega = &mono(&[X, Y]) + &mono(&[Z, W]);
        assert_eq!(omega.interior(&e(Y)).unwrap(), -mono(&[X]));
        assert_eq!(omega.interior(&e(Z)).unwrap(), mono(&[W]));
    }

    #[test]
    fn display() {
        let labels: Vec<String> = ["X", "Y", "Z", "W"].iter().map(|s| s.to_string()).collect();
        let omega = &mono(&[X, Y]).scale(&int(2)) - &mono(&[Z, W]);
        assert_eq!(omega.display_with(&labels).to_string(), "2*x^y - z^w");
    }
}

#[cfg(test)]
mod invariants {
    use super::*;
    use crate::lie::StructureConstants;
    use crate::linalg::int;
    use proptest::prelude::*;

    /// `ℝ³ ⋊_A ℝ` with `[W, X_i] = Σ_j a_ij X_j`; a Lie algebra for every `A`.
    fn semidirect(a: &[i64]) -> LieAlgebra {
        let mut c = StructureConstants::new(&["X1", "X2", "X3", "W"]).unwrap();
        for i in 0..3 {
            let v: Vector = (0..4)
                .map(|j| if j < 3 { int(a[3 * i + j]) } else { int(0) })
                .collect();
            c.set(3, i, v).unwrap();
        }
        LieAlgebra::new(c).unwrap()
    }

    fn form(coeffs: &[i64], degree: usize) -> Cochain {
        let len = monomial_basis(4, degree).len();
        let coords: Vec<Rational> = coeffs[..len].iter().map(|&c| int(c)).collect();
        Cochain::from_coordinates(4, degree, &coords).unwrap()
    }

    fn coeffs() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, 6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn d_squared_vanishes(a in proptest::collection::vec(-2i64..=2, 9), f in coeffs(), p in 0usize..=2) {
            let g = semidirect(&a);
            let w = form(&f, p);
            let dd = ce_d(&g, &ce_d(&g, &w).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }

        #[test]
        fn twisted_d_squared_vanishes(a in proptest::collection::vec(-2i64..=2, 9), f in coeffs(), t in -3i64..=3, p in 0usize..=2) {
            let g = semidirect(&a);
            // e^W annihilates [g, g] here, so it is closed.
            let theta = Cochain::monomial(4, &[3], int(t)).unwrap();
            let w = form(&f, p);
            let once = twisted_d(&g, &theta, &w).unwrap();
            prop_assert!(twisted_d(&g, &theta, &once).unwrap().is_zero());
        }

        #[test]
        fn leibniz_rule(a in proptest::collection::vec(-2i64..=2, 9), f in coeffs(), h in coeffs()) {
            let g = semidirect(&a);
            let x = form(&f, 1);
            let y = form(&h, 2);
            let lhs = ce_d(&g, &x.wedge(&y).unwrap()).unwrap();
            let rhs = &ce_d(&g, &x).unwrap().wedge(&y).unwrap() - &x.wedge(&ce_d(&g, &y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn graded_commutativity(f in coeffs(), h in coeffs(), p in 0usize..=2, q in 0usize..=2) {
            let x = form(&f, p);
            let y = form(&h, q);
            let xy = x.wedge(&y).unwrap();
            let yx = y.wedge(&x).unwrap();
            if (p * q) % 2 == 0 {
                prop_assert_eq!(xy, yx);
            } else {
                prop_assert_eq!(xy, -yx);
            }
        }

        #[test]
        fn wedge_of_one_forms_evaluates_as_determinant(f in coeffs(), h in coeffs(), u in coeffs(), v in coeffs()) {
            let x = form(&f, 1);
            let y = form(&h, 1);
            let u: Vector = u[..4].iter().map(|&c| int(c)).collect();
            let v: Vector = v[..4].iter().map(|&c| int(c)).collect();
            let lhs = x.wedge(&y).unwrap().eval(&[u.clone(), v.clone()]).unwrap();
            let xu = x.eval(std::slice::from_ref(&u)).unwrap();
            let xv = x.eval(std::slice::from_ref(&v)).unwrap();
            let yu = y.eval(&[u]).unwrap();
            let yv = y.eval(&[v]).unwrap();
            prop_assert_eq!(lhs, xu * yv - xv * yu);
        }
    }
}
