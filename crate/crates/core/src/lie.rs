//! Lie algebras given by rational structure constants.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;

use crate::linalg::{
    add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector,
};
use crate::{Error, Result};

/// A nonzero Jacobiator `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vector,
}

/// Raw, not yet validated structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` is always
/// read back as the negative, so antisymmetry cannot be violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    labels: Vec<String>,
    table: BTreeMap<(usize, usize), Vector>,
}

impl StructureConstants {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::BadLabels(format!("invalid label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::BadLabels(format!("label {l:?} repeated")));
            }
        }
        Ok(StructureConstants {
            labels,
            table: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sets `[e_i, e_j] = value`. Setting `i > j` stores the negated value
    /// under `(j, i)`; `i == j` only accepts zero.
    pub fn set(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        let n = self.dim();
        if value.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: value.len(),
            });
        }
        if i >= n || j >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: i.max(j) + 1,
            });
        }
        if i == j {
            return if is_zero_vector(&value) {
                Ok(())
            } else {
                Err(Error::BadParameters(format!(
                    "[{0}, {0}] must vanish",
                    self.labels[i]
                )))
            };
        }
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.into_iter().map(|x| -x).collect())
        };
        if is_zero_vector(&value) {
            self.table.remove(&key);
        } else {
            self.table.insert(key, value);
        }
        Ok(())
    }

    /// Sets `[a, b] = Σ c·t` for named basis elements.
    pub fn set_named(&mut self, a: &str, b: &str, terms: &[(&str, Rational)]) -> Result<()> {
        let i = self.require(a)?;
        let j = self.require(b)?;
        let mut value = zero_vector(self.dim());
        for (name, c) in terms {
            value[self.require(name)?] += c;
        }
        self.set(i, j, value)
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::BadLabels(format!("unknown basis element {label:?}")))
    }

    /// `[e_i, e_j]` in basis coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => zero_vector(self.dim()),
            Less => self
                .table
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| zero_vector(self.dim())),
            Greater => self
                .table
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| zero_vector(self.dim())),
        }
    }

    /// Stored nonzero brackets `((i, j), [e_i, e_j])` with `i < j`, in order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.table.iter()
    }

    fn bracket_with_basis(&self, u: &[Rational], k: usize) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, c) in u.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, &self.basis_bracket(i, k));
            }
        }
        out
    }

    /// All basis triples `i < j < k` whose Jacobiator is nonzero, with the
    /// exact residual.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut r = self.bracket_with_basis(&self.basis_bracket(i, j), k);
                    let a = self.bracket_with_basis(&self.basis_bracket(j, k), i);
                    let b = self.bracket_with_basis(&self.basis_bracket(k, i), j);
                    for ((x, y), z) in r.iter_mut().zip(a).zip(b) {
                        *x += y + z;
                    }
                    if !is_zero_vector(&r) {
                        out.push(JacobiViolation {
                            i,
                            j,
                            k,
                            residual: r,
                        });
                    }
                }
            }
        }
        out
    }
}

/// A Lie algebra over `Q` whose structure constants satisfy the Jacobi
/// identity. The only way to obtain one is through validation.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    constants: StructureConstants,
    // Dense cache of [e_i, e_j], row-major.
    brackets: Vec<Vector>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.constants == other.constants
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    pub fn new(constants: StructureConstants) -> Result<Self> {
        let violations = constants.jacobi_violations();
        if !violations.is_empty() {
            return Err(Error::Jacobi(violations));
        }
        let n = constants.dim();
        let brackets = (0..n * n)
            .map(|ij| constants.basis_bracket(ij / n, ij % n))
            .collect();
        Ok(LieAlgebra {
            constants,
            brackets,
        })
    }

    pub fn abelian<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        LieAlgebra::new(StructureConstants::new(labels)?)
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.constants.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.constants.index_of(label)
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Basis vector by label.
    pub fn element(&self, label: &str) -> Option<Vector> {
        self.index_of(label).map(|i| self.basis_vector(i))
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i * self.dim() + j]
    }

    fn check(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        self.check(u)?;
        self.check(v)?;
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if i != j && !b.is_zero() {
                    add_scaled(&mut out, &(a * b), self.basis_bracket(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `v ↦ [u, v]`.
    pub fn ad_matrix(&self, u: &[Rational]) -> Result<Matrix> {
        self.check(u)?;
        let n = self.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|j| {
                let mut col = zero_vector(n);
                for (i, a) in u.iter().enumerate() {
                    add_scaled(&mut col, a, self.basis_bracket(i, j));
                }
                col
            })
            .collect();
        Matrix::from_columns(n, &columns)
    }

    fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&self.basis_vector(i))
            .expect("basis vector conforms")
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// Span of all brackets `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut vectors = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vectors.push(self.bracket(x, y)?);
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_subspaces(&full, &full)
            .expect("conforming subspaces")
    }

    fn series(&self, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.dim())];
        loop {
            let next = step(chain.last().expect("nonempty"));
            if &next == chain.last().expect("nonempty") {
                return chain;
            }
            chain.push(next);
        }
    }

    /// `D⁰ = g`, `Dⁱ⁺¹ = [Dⁱ, Dⁱ]`, up to stabilization (the stable term is
    /// the last entry and appears once).
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(|d| self.bracket_subspaces(d, d).expect("conforming"))
    }

    /// `C⁰ = g`, `Cⁱ⁺¹ = [g, Cⁱ]`, up to stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        self.series(|c| self.bracket_subspaces(&full, c).expect("conforming"))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim()))
    }

    /// `{v : [v, s] = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for x in s.basis() {
            // v ↦ [v, x] = -ad_x v
            let ad = self.ad_matrix(x).expect("conforming");
            for r in 0..n {
                rows.push(ad.row(r).to_vec());
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Matrix::from_rows(n, rows)
            .expect("square rows")
            .kernel_basis()
    }

    /// `K(u, v) = tr(ad_u ad_v)` in the basis.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).expect("square").trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Same algebra in a new basis; column `i` of `p` holds the coordinates of
    /// the `i`-th new basis vector. Labels are kept.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows().max(p.cols()),
            });
        }
        let inv = p
            .inverse()?
            .ok_or_else(|| Error::BadParameters("change of basis is singular".into()))?;
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let mut constants = StructureConstants::new(self.labels())?;
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket(&cols[i], &cols[j])?;
                constants.set(i, j, inv.mul_vec(&b)?)?;
            }
        }
        LieAlgebra::new(constants)
    }

    /// `self ⊕ other` with the bases concatenated; labels must stay distinct.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        let (n, m) = (self.dim(), other.dim());
        let labels: Vec<String> = self
            .labels()
            .iter()
            .chain(other.labels())
            .cloned()
            .collect();
        let mut constants = StructureConstants::new(&labels)?;
        for (&(i, j), v) in self.constants.nonzero_brackets() {
            let mut w = v.clone();
            w.extend(zero_vector(m));
            constants.set(i, j, w)?;
        }
        for (&(i, j), v) in other.constants.nonzero_brackets() {
            let mut w = zero_vector(n);
            w.extend(v.iter().cloned());
            constants.set(n + i, n + j, w)?;
        }
        LieAlgebra::new(constants)
    }

    /// Checks whether `s` is an ideal: `[g, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.bracket_subspaces(&Subspace::full(self.dim()), s)
            .map(|b| b.is_subspace_of(s))
            .unwrap_or(false)
    }

    /// The subalgebra spanned by `s`, as an algebra in its own canonical
    /// basis. `s` must be closed under the bracket.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        let k = s.dim();
        let labels: Vec<String> = (0..k).map(|i| format!("s{i}")).collect();
        let mut constants = StructureConstants::new(&labels)?;
        for i in 0..k {
            for j in i + 1..k {
                let b = self.bracket(&s.basis()[i], &s.basis()[j])?;
                let coords = s.coordinates(&b)?.ok_or_else(|| {
                    Error::BadParameters("subspace is not closed under the bracket".into())
                })?;
                constants.set(i, j, coords)?;
            }
        }
        LieAlgebra::new(constants)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    /// 𝔲(2): [X,Y]=Z, [Y,Z]=X, [Z,X]=Y with central T.
    fn u2() -> LieAlgebra {
        let mut c = StructureConstants::new(&["T", "X", "Y", "Z"]).unwrap();
        c.set_named("X", "Y", &[("Z", int(1))]).unwrap();
        c.set_named("Y", "Z", &[("X", int(1))]).unwrap();
        c.set_named("Z", "X", &[("Y", int(1))]).unwrap();
        LieAlgebra::new(c).unwrap()
    }

    fn hopf_constants() -> StructureConstants {
        let mut c = StructureConstants::new(&["X", "Y", "Z", "W"]).unwrap();
        c.set_named("X", "Y", &[("Z", int(-1))]).unwrap();
        c.set_named("Z", "X", &[("Y", int(-1))]).unwrap();
        c.set_named("Z", "Y", &[("X", int(1))]).unwrap();
        c
    }

    fn h4() -> LieAlgebra {
        let mut c = StructureConstants::new(&["A", "B", "X1", "Y1"]).unwrap();
        c.set_named("X1", "Y1", &[("B", int(1))]).unwrap();
        LieAlgebra::new(c).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let g = u2();
        let x = g.element("X").unwrap();
        let y = g.element("Y").unwrap();
        assert_eq!(g.bracket(&x, &y).unwrap(), g.element("Z").unwrap());
        assert!(is_zero_vector(&g.bracket(&x, &x).unwrap()));

        let hopf = LieAlgebra::new(hopf_constants()).unwrap();
        let z = hopf.element("Z").unwrap();
        let x = hopf.element("X").unwrap();
        let minus_y: Vector = hopf.element("Y").unwrap().iter().map(|c| -c).collect();
        assert_eq!(hopf.bracket(&z, &x).unwrap(), minus_y);
        assert!(hopf.bracket(&z, &[int(1)]).is_err());
    }

    #[test]
    fn corrupted_hopf_violates_jacobi() {
        let mut c = hopf_constants();
        assert!(c.jacobi_violations().is_empty());
        c.set_named("X", "W", &[("X", int(1))]).unwrap();
        let v = c.jacobi_violations();
        assert!(!v.is_empty());
        assert!(matches!(LieAlgebra::new(c), Err(Error::Jacobi(_))));
    }

    #[test]
    fn reversed_bracket_is_stored_negated() {
        let mut c = StructureConstants::new(&["a", "b"]).unwrap();
        c.set_named("b", "a", &[("a", int(1))]).unwrap();
        assert_eq!(c.basis_bracket(0, 1), vec![int(-1), int(0)]);
        assert!(c.set_named("a", "a", &[("b", int(1))]).is_err());
        assert!(StructureConstants::new(&["a", "a"]).is_err());
    }

    #[test]
    fn ad_of_u2() {
        let g = u2();
        let ad = g.ad_matrix(&g.element("X").unwrap()).unwrap();
        // ad_X: Y -> Z, Z -> -Y
        assert_eq!(ad.column(2), g.element("Z").unwrap());
        assert_eq!(ad.column(3), vec![int(0), int(0), int(-1), int(0)]);
        let ab = LieAlgebra::abelian(&["a", "b", "c"]).unwrap();
        assert!(ab.ad_matrix(&[int(1), int(2), int(3)]).unwrap().is_zero());
    }

    #[test]
    fn unimodularity() {
        assert!(u2().is_unimodular());
        assert!(LieAlgebra::abelian(&["a"]).unwrap().is_unimodular());
        let mut c = StructureConstants::new(&["W", "Y"]).unwrap();
        c.set_named("W", "Y", &[("Y", int(1))]).unwrap();
        assert!(!LieAlgebra::new(c).unwrap().is_unimodular());
    }

    #[test]
    fn series_and_center() {
        let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
        let ab = LieAlgebra::abelian(&["a", "b"]).unwrap();
        assert_eq!(dims(ab.derived_series()), vec![2, 0]);
        assert_eq!(ab.center(), Subspace::full(2));

        assert_eq!(dims(h4().lower_central_series()), vec![4, 1, 0]);
        assert!(h4().is_nilpotent());

        let g = u2();
        assert_eq!(dims(g.derived_series()), vec![4, 3]);
        assert!(!g.is_solvable() && !g.is_nilpotent());
        assert_eq!(g.center().basis(), &[g.element("T").unwrap()]);

        let hopf = LieAlgebra::new(hopf_constants()).unwrap();
        assert_eq!(hopf.center().basis(), &[hopf.element("W").unwrap()]);
    }

    #[test]
    fn killing_forms() {
        let hopf = LieAlgebra::new(hopf_constants()).unwrap();
        let k = hopf.killing_form();
        assert_eq!(k[(0, 0)], int(-2));
        assert_eq!(k.inertia().unwrap(), (0, 3, 1));
        assert!(LieAlgebra::abelian(&["a", "b"])
            .unwrap()
            .killing_form()
            .is_zero());
    }

    #[test]
    fn change_of_basis_and_direct_sum() {
        let g = u2();
        let p = Matrix::from_i64(&[&[1, 0, 0, 1], &[0, 2, 1, 0], &[0, 0, 1, 0], &[1, 0, 0, 2]]);
        let g2 = g.change_basis(&p).unwrap();
        assert_eq!(g2.derived_algebra().dim(), 3);
        assert_eq!(g2.center().dim(), 1);

        let s = g.direct_sum(&LieAlgebra::abelian(&["U"]).unwrap()).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.center().dim(), 2);
        assert!(g.direct_sum(&g).is_err());
    }
}
