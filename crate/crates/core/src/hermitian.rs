//! Complex structures and l.c.K. data on a Lie algebra.
//!
//! An l.c.K. pair `(Ω, J)` on `g` consists of a nondegenerate 2-form and an
//! integrable complex structure with `Ω(Ju, Jv) = Ω(u, v)`, a positive
//! definite metric `h(u, v) = Ω(u, Jv)`, and a closed Lee form `θ` with
//! `dΩ = θ∧Ω`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cochain::{ce_d, monomial_basis, Cochain};
use crate::lie::LieAlgebra;
use crate::linalg::{dot, is_zero_vector, scaled, unit_vector, vec_sub, Matrix, Rational, Vector};
use crate::{Error, Result};

/// A linear endomorphism with `J² = -1`; column `i` is `J e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructure {
    matrix: Matrix,
}

impl ComplexStructure {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        let n = matrix.rows();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        let sq = matrix.mul(&matrix)?;
        if sq != Matrix::identity(n).scale(&-Rational::one()) {
            return Err(Error::NotComplexStructure);
        }
        Ok(ComplexStructure { matrix })
    }

    /// Builds `J` from the images of the basis vectors.
    pub fn from_images(images: &[Vector]) -> Result<Self> {
        Self::new(Matrix::from_columns(images.len(), images)?)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }
}

/// Nijenhuis tensor `N(u, v) = [Ju, Jv] - [u, v] - J[Ju, v] - J[u, Jv]`.
pub fn nijenhuis(g: &LieAlgebra, j: &Matrix, u: &[Rational], v: &[Rational]) -> Result<Vector> {
    if j.rows() != g.dim() || j.cols() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: j.rows(),
        });
    }
    let ju = j.mul_vec(u)?;
    let jv = j.mul_vec(v)?;
    let mut out = vec_sub(&g.bracket(&ju, &jv)?, &g.bracket(u, v)?);
    out = vec_sub(&out, &j.mul_vec(&g.bracket(&ju, v)?)?);
    out = vec_sub(&out, &j.mul_vec(&g.bracket(u, &jv)?)?);
    Ok(out)
}

/// First basis pair `(i, j)` with `N(e_i, e_j) ≠ 0`, with its value.
fn nijenhuis_witness(g: &LieAlgebra, j: &Matrix) -> Result<Option<(usize, usize, Vector)>> {
    let n = g.dim();
    for a in 0..n {
        for b in a + 1..n {
            let value = nijenhuis(g, j, &unit_vector(n, a), &unit_vector(n, b))?;
            if !is_zero_vector(&value) {
                return Ok(Some((a, b, value)));
            }
        }
    }
    Ok(None)
}

pub fn is_integrable(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    Ok(nijenhuis_witness(g, j.matrix())?.is_none())
}

/// The skew matrix `Ω(e_i, e_j)` of a 2-form.
pub fn form_matrix(omega: &Cochain) -> Result<Matrix> {
    if omega.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: omega.degree(),
        });
    }
    let n = omega.dim();
    let mut m = Matrix::zeros(n, n);
    for (key, c) in omega.terms() {
        m[(key[0], key[1])] = c.clone();
        m[(key[1], key[0])] = -c.clone();
    }
    Ok(m)
}

fn j_invariance_witness(omega: &Matrix, j: &Matrix) -> Result<Option<(usize, usize)>> {
    // Ω(J e_a, J e_b) is the (a, b) entry of Jᵀ Ω J.
    let pulled = j.transpose().mul(omega)?.mul(j)?;
    let n = omega.rows();
    for a in 0..n {
        for b in a + 1..n {
            if pulled[(a, b)] != omega[(a, b)] {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

fn raw_metric(omega: &Matrix, j: &Matrix) -> Result<Matrix> {
    // h(e_a, e_b) = Ω(e_a, J e_b) = (Ω J)_{ab}.
    omega.mul(j)
}

/// `h(u, v) = Ω(u, Jv)`, after checking that `Ω` is `J`-invariant.
pub fn metric_from(omega: &Cochain, j: &ComplexStructure) -> Result<Matrix> {
    if omega.dim() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: j.dim(),
            found: omega.dim(),
        });
    }
    let om = form_matrix(omega)?;
    if j_invariance_witness(&om, j.matrix())?.is_some() {
        return Err(Error::NotJInvariant);
    }
    let h = raw_metric(&om, j.matrix())?;
    if !h.is_symmetric() {
        return Err(Error::NotJInvariant);
    }
    Ok(h)
}

/// Solves `θ∧Ω = dΩ` for `θ`. `None` means no 1-form works. For dimension at
/// least 4 the solution is unique; in dimension 2 every `θ` works and zero is
/// returned. Closedness of the result is not checked here.
pub fn lee_form_from_omega(g: &LieAlgebra, omega: &Cochain) -> Result<Option<Cochain>> {
    let n = g.dim();
    if omega.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: omega.dim(),
        });
    }
    if form_matrix(omega)?.determinant()?.is_zero() {
        return Err(Error::DegenerateOmega);
    }
    if n < 3 {
        return Ok(Some(Cochain::zero(n, 1)));
    }
    let columns = (0..n)
        .map(|i| {
            let e = Cochain::monomial(n, &[i], Rational::one())?;
            Ok(e.wedge(omega)?.coordinates())
        })
        .collect::<Result<Vec<_>>>()?;
    let wedge_map = Matrix::from_columns(monomial_basis(n, 3).len(), &columns)?;
    let d_omega = ce_d(g, omega)?;
    Ok(wedge_map
        .solve(&d_omega.coordinates())?
        .map(|coords| Cochain::one_form(&coords)))
}

/// Lee field data: `raw` is the metric dual of `θ`, `normalized` is rescaled
/// so that `θ(ξ) = 1`, and `norm_sq = |θ|²_h = θ(raw)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeeField {
    pub raw: Vector,
    pub normalized: Vector,
    pub norm_sq: Rational,
}

fn lee_field_from_metric(h: &Matrix, theta: &Cochain) -> Result<LeeField> {
    if !h.is_positive_definite()? {
        return Err(Error::MetricNotPD);
    }
    if theta.is_zero() {
        return Err(Error::ZeroLeeForm);
    }
    let t = theta.coordinates();
    let raw = h
        .solve(&t)?
        .expect("positive definite metric is invertible");
    let norm_sq = dot(&t, &raw);
    let normalized = scaled(&(Rational::one() / &norm_sq), &raw);
    Ok(LeeField {
        raw,
        normalized,
        norm_sq,
    })
}

pub fn lee_field(omega: &Cochain, theta: &Cochain, j: &ComplexStructure) -> Result<LeeField> {
    let h = metric_from(omega, j)?;
    lee_field_from_metric(&h, theta)
}

/// Reeb field `η = εJξ`, its normalised dual `φ` and the chosen sign, together
/// with the contractions of `dφ` by `ξ` and `η`.
///
/// The decomposition is stated for `Ω` scaled so that the Lee field has unit
/// length, `h(ξ, ξ) = 1` with `θ(ξ) = 1`. `scale` is that factor, `|θ|²_h`,
/// so the identity that holds is `scale·Ω = -θ∧φ + dφ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReebData {
    pub eta: Vector,
    pub phi: Cochain,
    pub epsilon: i8,
    pub scale: Rational,
    pub xi_contraction: Cochain,
    pub eta_contraction: Cochain,
}

impl ReebData {
    /// True when `dφ` is killed by both `ξ` and `η`.
    pub fn d_phi_is_basic(&self) -> bool {
        self.xi_contraction.is_zero() && self.eta_contraction.is_zero()
    }
}

/// Finds `ε ∈ {+1, -1}` (in that order) with `|θ|²Ω = -θ∧φ + dφ`. When the
/// Lee form has unit length this is `Ω = -θ∧φ + dφ`; φ is unchanged by the
/// rescaling, which only fixes the length of `ξ`.
pub fn reeb_data(
    g: &LieAlgebra,
    omega: &Cochain,
    theta: &Cochain,
    j: &ComplexStructure,
) -> Result<ReebData> {
    let h = metric_from(omega, j)?;
    reeb_data_with_metric(g, &h, omega, theta, j)
}

fn reeb_data_with_metric(
    g: &LieAlgebra,
    h: &Matrix,
    omega: &Cochain,
    theta: &Cochain,
    j: &ComplexStructure,
) -> Result<ReebData> {
    let lee = lee_field_from_metric(h, theta)?;
    let xi = lee.normalized;
    let target = omega.scale(&lee.norm_sq);
    let j_xi = j.apply(&xi)?;
    for epsilon in [1i8, -1] {
        let eta = if epsilon > 0 {
            j_xi.clone()
        } else {
            scaled(&-Rational::one(), &j_xi)
        };
        let dual = h.mul_vec(&eta)?;
        let length = dot(&dual, &eta);
        let phi = Cochain::one_form(&scaled(&(Rational::one() / length), &dual));
        let d_phi = ce_d(g, &phi)?;
        let candidate = &d_phi - &theta.wedge(&phi)?;
        if candidate == target {
            return Ok(ReebData {
                scale: lee.norm_sq.clone(),
                xi_contraction: d_phi.interior(&xi)?,
                eta_contraction: d_phi.interior(&eta)?,
                eta,
                phi,
                epsilon,
            });
        }
    }
    Err(Error::DecompositionFails)
}

fn require_pd(h: &Matrix) -> Result<()> {
    if h.is_positive_definite()? {
        Ok(())
    } else {
        Err(Error::MetricNotPD)
    }
}

/// Levi-Civita connection of a left-invariant metric on left-invariant fields,
/// `2h(∇_u v, z) = h([u,v], z) - h([v,z], u) + h([z,u], v)`.
pub fn koszul_nabla(g: &LieAlgebra, h: &Matrix, u: &[Rational], v: &[Rational]) -> Result<Vector> {
    require_pd(h)?;
    koszul_unchecked(g, h, u, v)
}

fn koszul_unchecked(g: &LieAlgebra, h: &Matrix, u: &[Rational], v: &[Rational]) -> Result<Vector> {
    let n = g.dim();
    let half = Rational::new(1.into(), 2.into());
    let uv = h.mul_vec(&g.bracket(u, v)?)?;
    let hu = h.mul_vec(u)?;
    let hv = h.mul_vec(v)?;
    let mut rhs = Vec::with_capacity(n);
    for (z, uvz) in uv.iter().enumerate() {
        let ez = unit_vector(n, z);
        let vz = g.bracket(v, &ez)?;
        let zu = g.bracket(&ez, u)?;
        rhs.push(&half * (uvz - dot(&vz, &hu) + dot(&zu, &hv)));
    }
    Ok(h.solve(&rhs)?
        .expect("positive definite metric is invertible"))
}

/// `u` is Killing for the left-invariant metric when `ad_u` is `h`-skew.
pub fn is_killing(g: &LieAlgebra, h: &Matrix, u: &[Rational]) -> Result<bool> {
    require_pd(h)?;
    let ad = g.ad_matrix(u)?;
    let sym = ad.transpose().mul(h)?.add(&h.mul(&ad)?)?;
    Ok(sym.is_zero())
}

/// Matrix of `v ↦ [u, Jv] - J[u, v]`.
pub fn lie_derivative_j(g: &LieAlgebra, j: &ComplexStructure, u: &[Rational]) -> Result<Matrix> {
    let ad = g.ad_matrix(u)?;
    ad.mul(j.matrix())?.sub(&j.matrix().mul(&ad)?)
}

/// A validated l.c.K. structure.
#[derive(Clone, Debug)]
pub struct LckStructure {
    algebra: LieAlgebra,
    omega: Cochain,
    theta: Cochain,
    j: ComplexStructure,
}

impl LckStructure {
    /// Validates every defining condition; the error names the first one
    /// that fails.
    pub fn new(
        algebra: LieAlgebra,
        omega: Cochain,
        theta: Cochain,
        j: ComplexStructure,
    ) -> Result<Self> {
        let report = check_lck(&algebra, &omega, &theta, j.matrix())?;
        if let Some(item) = report.items.iter().find(|i| !i.pass) {
            return Err(match item.name {
                CheckName::LeeFormClosed | CheckName::ThetaKillsDerived => Error::LeeFormNotClosed,
                CheckName::TwistedClosed => Error::NotTwistedClosed,
                CheckName::JSquared => Error::NotComplexStructure,
                CheckName::Integrable => Error::NotIntegrable,
                CheckName::JInvariant => Error::NotJInvariant,
                CheckName::MetricPositive => Error::MetricNotPD,
            });
        }
        Ok(LckStructure {
            algebra,
            omega,
            theta,
            j,
        })
    }

    /// Uses the Lee form computed from `Ω`.
    pub fn from_omega(algebra: LieAlgebra, omega: Cochain, j: ComplexStructure) -> Result<Self> {
        let theta = lee_form_from_omega(&algebra, &omega)?.ok_or(Error::NotTwistedClosed)?;
        Self::new(algebra, omega, theta, j)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn theta(&self) -> &Cochain {
        &self.theta
    }

    pub fn j(&self) -> &ComplexStructure {
        &self.j
    }

    pub fn metric(&self) -> Matrix {
        metric_from(&self.omega, &self.j).expect("validated on construction")
    }

    pub fn lee_field(&self) -> Result<LeeField> {
        lee_field_from_metric(&self.metric(), &self.theta)
    }

    pub fn reeb_data(&self) -> Result<ReebData> {
        reeb_data_with_metric(
            &self.algebra,
            &self.metric(),
            &self.omega,
            &self.theta,
            &self.j,
        )
    }
}

/// Vaisman type: the normalised Lee field is parallel.
pub fn is_vaisman(s: &LckStructure) -> Result<bool> {
    let h = s.metric();
    let xi = s.lee_field()?.normalized;
    is_parallel(s.algebra(), &h, &xi)
}

fn is_parallel(g: &LieAlgebra, h: &Matrix, v: &[Rational]) -> Result<bool> {
    let n = g.dim();
    for i in 0..n {
        if !is_zero_vector(&koszul_unchecked(g, h, &unit_vector(n, i), v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckName {
    LeeFormClosed,
    TwistedClosed,
    JSquared,
    Integrable,
    JInvariant,
    MetricPositive,
    ThetaKillsDerived,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::LeeFormClosed => "lee_form_closed",
            CheckName::TwistedClosed => "d_omega_equals_theta_wedge_omega",
            CheckName::JSquared => "j_squared_is_minus_one",
            CheckName::Integrable => "j_integrable",
            CheckName::JInvariant => "omega_j_invariant",
            CheckName::MetricPositive => "metric_positive_definite",
            CheckName::ThetaKillsDerived => "theta_vanishes_on_derived_algebra",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: CheckName,
    pub pass: bool,
    /// Human-readable counterexample when the check fails.
    pub witness: Option<String>,
}

/// Outcome of [`check_lck`]. Derived data is present only when the inputs
/// needed for it are valid.
#[derive(Clone, Debug)]
pub struct LckReport {
    pub items: Vec<CheckItem>,
    pub given_theta: Cochain,
    /// Lee form solved from `Ω` (`None` if `θ∧Ω = dΩ` has no solution or `Ω`
    /// is degenerate).
    pub computed_theta: Option<Cochain>,
    pub metric: Option<Matrix>,
    pub lee_field: Option<LeeField>,
    /// Reeb decomposition, or the reason it is unavailable.
    pub reeb: Option<std::result::Result<ReebData, String>>,
    pub vaisman: Option<bool>,
}

impl LckReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn item(&self, name: CheckName) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

/// Renders `Σ c_i e_i` with basis labels, e.g. `1/2*X + Z`.
pub fn format_vector(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let negative = c.is_negative();
        let magnitude = c.abs();
        out.push_str(match (out.is_empty(), negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if magnitude.is_one() {
            out.push_str(l);
        } else {
            out.push_str(&format!("{magnitude}*{l}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Runs every l.c.K. condition and reports each one; failures are data, not
/// errors. Errors are returned only for shape problems (wrong dimensions or
/// degrees).
pub fn check_lck(
    g: &LieAlgebra,
    omega: &Cochain,
    theta: &Cochain,
    j: &Matrix,
) -> Result<LckReport> {
    let n = g.dim();
    let labels = g.labels();
    for (found, degree, expected_degree) in [
        (omega.dim(), omega.degree(), 2),
        (theta.dim(), theta.degree(), 1),
    ] {
        if found != n {
            return Err(Error::DimensionMismatch { expected: n, found });
        }
        if degree != expected_degree {
            return Err(Error::WrongDegree {
                expected: expected_degree,
                found: degree,
            });
        }
    }
    if j.rows() != n || j.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: j.rows(),
        });
    }

    let mut items = Vec::new();
    let mut push = |name, witness: Option<String>| {
        items.push(CheckItem {
            name,
            pass: witness.is_none(),
            witness,
        })
    };

    let d_theta = if n > 1 {
        ce_d(g, theta)?
    } else {
        Cochain::zero(n, 2.min(n))
    };
    let closed = d_theta.is_zero();
    push(
        CheckName::LeeFormClosed,
        (!closed).then(|| format!("dθ = {}", d_theta.display_with(labels))),
    );

    let residual = if n > 2 {
        &ce_d(g, omega)? - &theta.wedge(omega)?
    } else {
        Cochain::zero(n, n)
    };
    push(
        CheckName::TwistedClosed,
        (!residual.is_zero()).then(|| format!("dΩ - θ∧Ω = {}", residual.display_with(labels))),
    );

    let minus_one = Matrix::identity(n).scale(&-Rational::one());
    let sq = j.mul(j)?;
    let j_sq_ok = sq == minus_one;
    push(
        CheckName::JSquared,
        (!j_sq_ok).then(|| {
            let i = (0..n)
                .find(|&i| sq.column(i) != minus_one.column(i))
                .expect("some column differs");
            format!("J²{} = {}", labels[i], format_vector(labels, &sq.column(i)))
        }),
    );

    let nij = nijenhuis_witness(g, j)?;
    push(
        CheckName::Integrable,
        nij.map(|(a, b, v)| {
            format!(
                "N({}, {}) = {}",
                labels[a],
                labels[b],
                format_vector(labels, &v)
            )
        }),
    );

    let om = form_matrix(omega)?;
    let inv = j_invariance_witness(&om, j)?;
    push(
        CheckName::JInvariant,
        inv.map(|(a, b)| format!("Ω(J{a}, J{b}) ≠ Ω({a}, {b})", a = labels[a], b = labels[b])),
    );

    let h = raw_metric(&om, j)?;
    let h_ok = inv.is_none() && h.is_symmetric() && h.is_positive_definite()?;
    push(
        CheckName::MetricPositive,
        (!h_ok).then(|| {
            if h.is_symmetric() {
                let (p, q, z) = h.inertia().expect("symmetric");
                format!("inertia of h = ({p}, {q}, {z})")
            } else {
                "h is not symmetric".to_string()
            }
        }),
    );

    let t = theta.coordinates();
    let killed = g
        .derived_algebra()
        .basis()
        .iter()
        .find(|v| !dot(&t, v).is_zero())
        .map(|v| format!("θ({}) ≠ 0", format_vector(labels, v)));
    push(CheckName::ThetaKillsDerived, killed);

    let computed_theta = match lee_form_from_omega(g, omega) {
        Ok(t) => t,
        Err(Error::DegenerateOmega) => None,
        Err(e) => return Err(e),
    };

    let metric = h_ok.then_some(h);
    let lee_field = metric
        .as_ref()
        .and_then(|h| lee_field_from_metric(h, theta).ok());

    let all_pass = items.iter().all(|i| i.pass);
    let (reeb, vaisman) = if all_pass {
        let h = metric.as_ref().expect("metric checked");
        let js = ComplexStructure::new(j.clone())?;
        let reeb = Some(reeb_data_with_metric(g, h, omega, theta, &js).map_err(|e| e.to_string()));
        let vaisman = match &lee_field {
            Some(lf) => Some(is_parallel(g, h, &lf.normalized)?),
            None => None,
        };
        (reeb, vaisman)
    } else {
        (None, None)
    };

    Ok(LckReport {
        items,
        given_theta: theta.clone(),
        computed_theta,
        metric,
        lee_field,
        reeb,
        vaisman,
    })
}

/// Dimension of the subspace spanned by `ξ` and `η`, for checking that the
/// Lee and Reeb fields are independent.
pub fn lee_reeb_rank(lee: &LeeField, reeb: &ReebData) -> usize {
    let n = lee.normalized.len();
    let m =
        Matrix::from_columns(n, &[lee.normalized.clone(), reeb.eta.clone()]).expect("same length");
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::StructureConstants;
    use crate::linalg::int;

    type Bracket<'a> = (&'a str, &'a str, &'a [(&'a str, i64)]);

    fn algebra(labels: &[&str], brackets: &[Bracket]) -> LieAlgebra {
        let mut c = StructureConstants::new(labels).unwrap();
        for (a, b, terms) in brackets {
            let t: Vec<(&str, Rational)> = terms.iter().map(|(l, v)| (*l, int(*v))).collect();
            c.set_named(a, b, &t).unwrap();
        }
        LieAlgebra::new(c).unwrap()
    }

    fn hopf() -> LieAlgebra {
        algebra(
            &["X", "Y", "Z", "W"],
            &[
                ("X", "Y", &[("Z", -1)]),
                ("Z", "X", &[("Y", -1)]),
                ("Z", "Y", &[("X", 1)]),
            ],
        )
    }

    fn inoue_plus() -> LieAlgebra {
        algebra(
            &["X", "Y", "Z", "W"],
            &[
                ("Y", "Z", &[("X", -1)]),
                ("W", "Y", &[("Y", 1)]),
                ("W", "Z", &[("Z", -1)]),
            ],
        )
    }

    /// JX = Y, JZ = W.
    fn standard_j() -> ComplexStructure {
        ComplexStructure::new(Matrix::from_i64(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]))
        .unwrap()
    }

    fn form(terms: &[(&[usize], i64)]) -> Cochain {
        let mut out = Cochain::zero(4, terms[0].0.len());
        for (idx, c) in terms {
            out = &out + &Cochain::monomial(4, idx, int(*c)).unwrap();
        }
        out
    }

    fn std_omega() -> Cochain {
        form(&[(&[0, 1], 1), (&[2, 3], 1)])
    }

    #[test]
    fn complex_structure_validation() {
        assert!(matches!(
            ComplexStructure::new(Matrix::identity(4)),
            Err(Error::NotComplexStructure)
        ));
        assert!(matches!(
            ComplexStructure::new(Matrix::zeros(3, 3)),
            Err(Error::OddDimension(3))
        ));
        assert_eq!(
            standard_j().apply(&unit_vector(4, 0)).unwrap(),
            unit_vector(4, 1)
        );
    }

    #[test]
    fn nijenhuis_examples() {
        let ab = LieAlgebra::abelian(&["a", "b", "c", "d"]).unwrap();
        let j = standard_j();
        assert!(is_integrable(&ab, &j).unwrap());
        assert!(is_integrable(&hopf(), &j).unwrap());
        assert!(is_integrable(&inoue_plus(), &j).unwrap());
    }

    #[test]
    fn metric_examples() {
        let j = standard_j();
        assert_eq!(metric_from(&std_omega(), &j).unwrap(), Matrix::identity(4));
        assert_eq!(
            metric_from(&std_omega().scale(&int(2)), &j).unwrap(),
            Matrix::identity(4).scale(&int(2))
        );
        let bad = form(&[(&[0, 2], 1), (&[1, 3], -1)]);
        assert!(matches!(metric_from(&bad, &j), Err(Error::NotJInvariant)));
    }

    #[test]
    fn lee_forms() {
        let w = form(&[(&[3], 1)]);
        assert_eq!(
            lee_form_from_omega(&hopf(), &std_omega()).unwrap(),
            Some(w.clone())
        );
        assert_eq!(
            lee_form_from_omega(&inoue_plus(), &std_omega()).unwrap(),
            Some(-w)
        );
        let ab = LieAlgebra::abelian(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(
            lee_form_from_omega(&ab, &std_omega()).unwrap(),
            Some(Cochain::zero(4, 1))
        );
        assert!(matches!(
            lee_form_from_omega(&ab, &form(&[(&[0, 1], 1)])),
            Err(Error::DegenerateOmega)
        ));
    }

    #[test]
    fn check_lck_examples() {
        let w = form(&[(&[3], 1)]);
        let j = standard_j();
        let report = check_lck(&hopf(), &std_omega(), &w, j.matrix()).unwrap();
        assert!(report.pass());
        assert_eq!(report.vaisman, Some(true));

        let report = check_lck(&inoue_plus(), &std_omega(), &w, j.matrix()).unwrap();
        assert!(!report.item(CheckName::TwistedClosed).unwrap().pass);
        let report = check_lck(&inoue_plus(), &std_omega(), &-&w, j.matrix()).unwrap();
        assert!(report.pass());
        assert_eq!(report.vaisman, Some(false));

        let report = check_lck(&hopf(), &std_omega(), &w.scale(&int(2)), j.matrix()).unwrap();
        assert!(!report.pass());
        assert!(report
            .item(CheckName::TwistedClosed)
            .unwrap()
            .witness
            .is_some());
    }

    #[test]
    fn hopf_lee_and_reeb() {
        let g = hopf();
        let w = form(&[(&[3], 1)]);
        let s = LckStructure::new(g.clone(), std_omega(), w, standard_j()).unwrap();
        assert_eq!(s.lee_field().unwrap().normalized, unit_vector(4, 3));
        let reeb = s.reeb_data().unwrap();
        assert_eq!(reeb.phi, form(&[(&[2], 1)]));
        assert_eq!(reeb.eta, unit_vector(4, 2));
        assert!(reeb.d_phi_is_basic());
        assert!(is_vaisman(&s).unwrap());
        let h = s.metric();
        assert!(is_killing(&g, &h, &unit_vector(4, 3)).unwrap());
        assert!(is_killing(&g, &h, &reeb.eta).unwrap());
        assert!(lie_derivative_j(&g, s.j(), &unit_vector(4, 3))
            .unwrap()
            .is_zero());
        assert_eq!(lee_reeb_rank(&s.lee_field().unwrap(), &reeb), 2);
    }

    #[test]
    fn lee_field_scale_invariance() {
        let g = hopf();
        let w = form(&[(&[3], 1)]);
        let j = standard_j();
        let a = lee_field(&std_omega(), &w, &j).unwrap();
        let b = lee_field(&std_omega().scale(&int(3)), &w, &j).unwrap();
        assert_eq!(a.normalized, b.normalized);
        assert!(LckStructure::new(g, std_omega(), w.scale(&int(2)), j).is_err());
    }

    #[test]
    fn koszul_examples() {
        let ab = LieAlgebra::abelian(&["a", "b"]).unwrap();
        let h = Matrix::identity(2);
        assert!(is_zero_vector(
            &koszul_nabla(&ab, &h, &unit_vector(2, 0), &unit_vector(2, 1)).unwrap()
        ));
        let g = hopf();
        let x = unit_vector(4, 0);
        assert!(is_zero_vector(
            &koszul_nabla(&g, &Matrix::identity(4), &x, &x).unwrap()
        ));
        assert!(matches!(
            koszul_nabla(&g, &Matrix::zeros(4, 4), &x, &x),
            Err(Error::MetricNotPD)
        ));
    }

    #[test]
    fn inoue_w_not_killing() {
        let g = inoue_plus();
        let h = metric_from(&std_omega(), &standard_j()).unwrap();
        assert!(!is_killing(&g, &h, &unit_vector(4, 3)).unwrap());
    }
}

#[cfg(test)]
mod invariants {
    use super::*;
    use crate::lie::StructureConstants;
    use crate::linalg::int;
    use proptest::prelude::*;

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

    /// A positive definite metric `LᵀL + I` from an integer matrix.
    fn metric(l: &[i64]) -> Matrix {
        let rows: Vec<&[i64]> = l.chunks(4).collect();
        let m = Matrix::from_i64(&rows);
        m.transpose()
            .mul(&m)
            .unwrap()
            .add(&Matrix::identity(4))
            .unwrap()
    }

    fn vector(v: &[i64]) -> Vector {
        v.iter().map(|&c| int(c)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn koszul_is_torsion_free(
            a in proptest::collection::vec(-2i64..=2, 9),
            l in proptest::collection::vec(-2i64..=2, 16),
            u in proptest::collection::vec(-3i64..=3, 4),
            v in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let g = semidirect(&a);
            let h = metric(&l);
            let (u, v) = (vector(&u), vector(&v));
            let lhs = vec_sub(&koszul_nabla(&g, &h, &u, &v).unwrap(), &koszul_nabla(&g, &h, &v, &u).unwrap());
            prop_assert_eq!(lhs, g.bracket(&u, &v).unwrap());
        }

        #[test]
        fn koszul_is_metric(
            a in proptest::collection::vec(-2i64..=2, 9),
            l in proptest::collection::vec(-2i64..=2, 16),
            u in proptest::collection::vec(-3i64..=3, 4),
            v in proptest::collection::vec(-3i64..=3, 4),
            w in proptest::collection::vec(-3i64..=3, 4),
        ) {
            // For left-invariant fields h(v, w) is constant, so ∇_u is h-skew.
            let g = semidirect(&a);
            let h = metric(&l);
            let (u, v, w) = (vector(&u), vector(&v), vector(&w));
            let a1 = dot(&h.mul_vec(&koszul_nabla(&g, &h, &u, &v).unwrap()).unwrap(), &w);
            let a2 = dot(&h.mul_vec(&v).unwrap(), &koszul_nabla(&g, &h, &u, &w).unwrap());
            prop_assert!((a1 + a2).is_zero());
        }
    }
}
