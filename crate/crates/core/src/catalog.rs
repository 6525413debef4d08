//! Named four-dimensional (and Heisenberg-type) algebras with their standard
//! complex structures and l.c.K. forms.
//!
//! Every entry is reproducible from its [`CatalogKey`], whose string form
//! (`surface(6)`, `prop4_family(6,1,2)`, `u2_Jdelta(1,0,+)`, ...) is what the
//! command line accepts.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::classify::{lattice_verdict_for_tag, ClassTag, LatticeVerdict};
use crate::cochain::Cochain;
use crate::hermitian::{lee_form_from_omega, ComplexStructure};
use crate::lie::{LieAlgebra, StructureConstants};
use crate::linalg::{int, rat, zero_vector, Matrix, Rational, Vector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prop3Variant {
    Rotation,
    Hyperbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prop4Variant {
    ThreeI,
    ThreeII,
    Four,
    Five,
    Six,
    SevenI,
    SevenII,
    Eight,
}

impl Prop4Variant {
    pub const ALL: [Prop4Variant; 8] = [
        Prop4Variant::ThreeI,
        Prop4Variant::ThreeII,
        Prop4Variant::Four,
        Prop4Variant::Five,
        Prop4Variant::Six,
        Prop4Variant::SevenI,
        Prop4Variant::SevenII,
        Prop4Variant::Eight,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Prop4Variant::ThreeI => "3i",
            Prop4Variant::ThreeII => "3ii",
            Prop4Variant::Four => "4",
            Prop4Variant::Five => "5",
            Prop4Variant::Six => "6",
            Prop4Variant::SevenI => "7i",
            Prop4Variant::SevenII => "7ii",
            Prop4Variant::Eight => "8",
        }
    }

    /// Number of real parameters in the normal form.
    pub fn arity(self) -> usize {
        match self {
            Prop4Variant::ThreeI | Prop4Variant::ThreeII => 0,
            Prop4Variant::Four
            | Prop4Variant::Five
            | Prop4Variant::SevenI
            | Prop4Variant::SevenII => 1,
            Prop4Variant::Six | Prop4Variant::Eight => 2,
        }
    }

    pub fn tag(self) -> ClassTag {
        match self {
            Prop4Variant::ThreeI => ClassTag::Prop4_3i,
            Prop4Variant::ThreeII => ClassTag::Prop4_3ii,
            Prop4Variant::Four => ClassTag::Prop4_4,
            Prop4Variant::Five => ClassTag::Prop4_5,
            Prop4Variant::Six => ClassTag::Prop4_6,
            Prop4Variant::SevenI => ClassTag::Prop4_7i,
            Prop4Variant::SevenII => ClassTag::Prop4_7ii,
            Prop4Variant::Eight => ClassTag::Prop4_8,
        }
    }
}

impl FromStr for Prop4Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Prop4Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown variant `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKey {
    /// `ℝ ⊕ 𝔥_{2n-1}`, dimension `2n`, `n ≥ 2`.
    HeisenbergType(usize),
    /// `𝔲(2)` with `J_δ`, `δ = c + i d`, `c ≠ 0`; `positive` picks `JY = Z`.
    U2JDelta {
        c: Rational,
        d: Rational,
        positive: bool,
    },
    /// The six surface classes, `1..=6`.
    Surface(u8),
    /// Inoue `S⁰` algebra with parameter `b ≠ 0`.
    InoueS0(Rational),
    Prop3Family(Prop3Variant),
    Prop4Family(Prop4Variant, Vec<Rational>),
    /// Inoue `S⁺` algebra with `JZ = W - qY`, `q ≠ 0`.
    InoueSplusJq(Rational),
    /// Hopf algebra with `JZ = W + dZ`, `d ≠ 0`.
    HopfJd(Rational),
    /// Properly elliptic algebra with `JZ = W + dZ`, `d ≠ 0`.
    EllipticJd(Rational),
}

fn join(params: &[Rational]) -> String {
    params
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::HeisenbergType(n) => write!(f, "heisenberg_type({n})"),
            CatalogKey::U2JDelta { c, d, positive } => {
                write!(
                    f,
                    "u2_Jdelta({c},{d},{})",
                    if *positive { "+" } else { "-" }
                )
            }
            CatalogKey::Surface(k) => write!(f, "surface({k})"),
            CatalogKey::InoueS0(b) => write!(f, "inoue_s0({b})"),
            CatalogKey::Prop3Family(Prop3Variant::Rotation) => write!(f, "prop3_family(rotation)"),
            CatalogKey::Prop3Family(Prop3Variant::Hyperbolic) => {
                write!(f, "prop3_family(hyperbolic)")
            }
            CatalogKey::Prop4Family(v, params) if params.is_empty() => {
                write!(f, "prop4_family({})", v.as_str())
            }
            CatalogKey::Prop4Family(v, params) => {
                write!(f, "prop4_family({},{})", v.as_str(), join(params))
            }
            CatalogKey::InoueSplusJq(q) => write!(f, "inoue_splus_Jq({q})"),
            CatalogKey::HopfJd(d) => write!(f, "hopf_Jd({d})"),
            CatalogKey::EllipticJd(d) => write!(f, "elliptic_Jd({d})"),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::BadParameters(format!("bad rational `{s}`")))
}

impl FromStr for CatalogKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameters(format!("unknown catalog key `{s}`"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let args: Vec<&str> = inner.split(',').map(str::trim).collect();
        let one = |args: &[&str]| -> Result<Rational> {
            match args {
                [a] => parse_rational(a),
                _ => Err(bad()),
            }
        };
        let key = match &s[..open] {
            "heisenberg_type" => match args.as_slice() {
                [n] => CatalogKey::HeisenbergType(n.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            },
            "u2_Jdelta" => match args.as_slice() {
                [c, d, sign] => CatalogKey::U2JDelta {
                    c: parse_rational(c)?,
                    d: parse_rational(d)?,
                    positive: match *sign {
                        "+" => true,
                        "-" => false,
                        _ => return Err(bad()),
                    },
                },
                _ => return Err(bad()),
            },
            "surface" => CatalogKey::Surface(args[0].parse().map_err(|_| bad())?),
            "inoue_s0" => CatalogKey::InoueS0(one(&args)?),
            "prop3_family" => match args.as_slice() {
                ["rotation"] => CatalogKey::Prop3Family(Prop3Variant::Rotation),
                ["hyperbolic"] => CatalogKey::Prop3Family(Prop3Variant::Hyperbolic),
                _ => return Err(bad()),
            },
            "prop4_family" => {
                let variant: Prop4Variant = args[0].parse()?;
                let params = args[1..]
                    .iter()
                    .map(|a| parse_rational(a))
                    .collect::<Result<Vec<_>>>()?;
                CatalogKey::Prop4Family(variant, params)
            }
            "inoue_splus_Jq" => CatalogKey::InoueSplusJq(one(&args)?),
            "hopf_Jd" => CatalogKey::HopfJd(one(&args)?),
            "elliptic_Jd" => CatalogKey::EllipticJd(one(&args)?),
            _ => return Err(bad()),
        };
        key.validate()?;
        Ok(key)
    }
}

impl CatalogKey {
    /// Checks the parameter domain of the entry.
    pub fn validate(&self) -> Result<()> {
        let nonzero = |name: &str, x: &Rational| {
            if x.is_zero() {
                Err(Error::BadParameters(format!(
                    "{name} must be nonzero in {self}"
                )))
            } else {
                Ok(())
            }
        };
        match self {
            CatalogKey::HeisenbergType(n) if *n < 2 => Err(Error::BadParameters(format!(
                "heisenberg_type needs n ≥ 2, got {n}"
            ))),
            CatalogKey::U2JDelta { c, .. } => nonzero("c", c),
            CatalogKey::Surface(k) if !(1..=6).contains(k) => Err(Error::BadParameters(format!(
                "surface class {k} is not in 1..=6"
            ))),
            CatalogKey::InoueS0(b) => nonzero("b", b),
            CatalogKey::InoueSplusJq(q) => nonzero("q", q),
            CatalogKey::HopfJd(d) | CatalogKey::EllipticJd(d) => nonzero("d", d),
            CatalogKey::Prop4Family(v, params) => {
                if params.len() != v.arity() {
                    return Err(Error::BadParameters(format!(
                        "prop4_family({}) takes {} parameter(s), got {}",
                        v.as_str(),
                        v.arity(),
                        params.len()
                    )));
                }
                for (name, p) in ["a", "b"].iter().zip(params) {
                    nonzero(name, p)?;
                }
                if *v == Prop4Variant::Six {
                    let (a, b) = (&params[0], &params[1]);
                    let c = -(a + b);
                    if a == b || a == &c || b == &c || c.is_zero() {
                        return Err(Error::BadParameters(format!(
                            "eigenvalues {a}, {b}, {c} are not distinct and nonzero"
                        )));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// A representative set of keys covering every family.
    pub fn defaults() -> Vec<CatalogKey> {
        let mut keys = vec![
            CatalogKey::HeisenbergType(2),
            CatalogKey::HeisenbergType(3),
            CatalogKey::U2JDelta {
                c: int(1),
                d: int(0),
                positive: true,
            },
            CatalogKey::U2JDelta {
                c: int(1),
                d: int(0),
                positive: false,
            },
            CatalogKey::U2JDelta {
                c: int(2),
                d: int(1),
                positive: true,
            },
            CatalogKey::U2JDelta {
                c: int(-1),
                d: rat(1, 2),
                positive: false,
            },
        ];
        keys.extend((1..=6).map(CatalogKey::Surface));
        keys.push(CatalogKey::InoueS0(int(2)));
        keys.push(CatalogKey::Prop3Family(Prop3Variant::Rotation));
        keys.push(CatalogKey::Prop3Family(Prop3Variant::Hyperbolic));
        for v in Prop4Variant::ALL {
            let params = match v.arity() {
                0 => vec![],
                1 => vec![int(1)],
                _ if v == Prop4Variant::Six => vec![int(1), int(2)],
                _ => vec![int(1), int(1)],
            };
            keys.push(CatalogKey::Prop4Family(v, params));
        }
        keys.push(CatalogKey::InoueSplusJq(int(1)));
        keys.push(CatalogKey::InoueSplusJq(int(2)));
        keys.push(CatalogKey::HopfJd(int(1)));
        keys.push(CatalogKey::HopfJd(rat(1, 2)));
        keys.push(CatalogKey::EllipticJd(int(1)));
        keys
    }
}

/// Built catalog data. `theta` is the Lee form computed from `omega`;
/// `listed_theta` is the Lee form stated alongside the normal form.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: CatalogKey,
    pub algebra: LieAlgebra,
    pub j: Option<ComplexStructure>,
    pub omega: Option<Cochain>,
    pub theta: Option<Cochain>,
    pub listed_theta: Option<Cochain>,
}

impl CatalogEntry {
    /// True when the computed Lee form differs from the listed one.
    pub fn theta_corrected(&self) -> bool {
        match (&self.theta, &self.listed_theta) {
            (Some(t), Some(l)) => t != l,
            _ => false,
        }
    }

    /// Whether `(Ω, θ, J)` are all present.
    pub fn has_structure(&self) -> bool {
        self.j.is_some() && self.omega.is_some() && self.theta.is_some()
    }
}

type Terms<'a> = &'a [(&'a str, Rational)];

fn algebra(labels: &[&str], brackets: &[(&str, &str, Terms)]) -> LieAlgebra {
    let mut c = StructureConstants::new(labels).expect("catalog labels are valid");
    for (a, b, terms) in brackets {
        c.set_named(a, b, terms)
            .expect("catalog brackets are valid");
    }
    LieAlgebra::new(c).expect("catalog algebras satisfy Jacobi")
}

fn one() -> Rational {
    Rational::one()
}

fn neg(x: i64) -> Rational {
    int(-x)
}

/// `J` from `(from, to, coeff)` triples over the labels.
fn complex_structure(labels: &[&str], images: &[(&str, Terms)]) -> ComplexStructure {
    let n = labels.len();
    let idx = |l: &str| labels.iter().position(|x| *x == l).expect("known label");
    let mut cols: Vec<Vector> = vec![zero_vector(n); n];
    for (from, terms) in images {
        for (to, c) in terms.iter() {
            cols[idx(from)][idx(to)] += c;
        }
    }
    ComplexStructure::new(Matrix::from_columns(n, &cols).expect("square"))
        .expect("catalog J squares to -1")
}

fn two_form(n: usize, terms: &[(usize, usize, Rational)]) -> Cochain {
    terms.iter().fold(Cochain::zero(n, 2), |acc, (a, b, c)| {
        &acc + &Cochain::monomial(n, &[*a, *b], c.clone()).expect("in range")
    })
}

fn one_form_at(n: usize, i: usize, c: Rational) -> Cochain {
    Cochain::monomial(n, &[i], c).expect("in range")
}

const XYZW: [&str; 4] = ["X", "Y", "Z", "W"];

fn surface_algebra(k: u8) -> LieAlgebra {
    match k {
        1 => algebra(&XYZW, &[("X", "Y", &[("Z", neg(1))])]),
        // The third bracket is [W, Y] = X; with [W, Y] = Z the algebra is the
        // filiform nilpotent one and the standard J is not integrable.
        2 => algebra(
            &XYZW,
            &[
                ("X", "Y", &[("Z", neg(1))]),
                ("W", "X", &[("Y", neg(1))]),
                ("W", "Y", &[("X", one())]),
            ],
        ),
        3 => inoue_splus(),
        4 => inoue_s0(&one()),
        5 => algebra(
            &XYZW,
            &[
                ("X", "Y", &[("Z", neg(1))]),
                ("Z", "X", &[("Y", one())]),
                ("Z", "Y", &[("X", neg(1))]),
            ],
        ),
        6 => algebra(
            &XYZW,
            &[
                ("X", "Y", &[("Z", neg(1))]),
                ("Z", "X", &[("Y", neg(1))]),
                ("Z", "Y", &[("X", one())]),
            ],
        ),
        _ => unreachable!("validated"),
    }
}

fn inoue_splus() -> LieAlgebra {
    algebra(
        &XYZW,
        &[
            ("Y", "Z", &[("X", neg(1))]),
            ("W", "Y", &[("Y", one())]),
            ("W", "Z", &[("Z", neg(1))]),
        ],
    )
}

fn inoue_s0(b: &Rational) -> LieAlgebra {
    algebra(
        &XYZW,
        &[
            ("W", "X", &[("X", rat(-1, 2)), ("Y", -b.clone())]),
            ("W", "Y", &[("X", b.clone()), ("Y", rat(-1, 2))]),
            ("W", "Z", &[("Z", one())]),
        ],
    )
}

/// `JX = Y, JZ = W`.
fn standard_j() -> ComplexStructure {
    complex_structure(
        &XYZW,
        &[
            ("X", &[("Y", one())]),
            ("Y", &[("X", neg(1))]),
            ("Z", &[("W", one())]),
            ("W", &[("Z", neg(1))]),
        ],
    )
}

/// `x∧y + z∧w`.
fn standard_omega() -> Cochain {
    two_form(4, &[(0, 1, one()), (2, 3, one())])
}

fn prop4_matrix(v: Prop4Variant, p: &[Rational]) -> [[Rational; 3]; 3] {
    let z = Rational::zero;
    let a = || p[0].clone();
    let b = || p[1].clone();
    match v {
        Prop4Variant::ThreeI => [[z(), one(), z()], [z(), z(), one()], [z(), z(), z()]],
        Prop4Variant::ThreeII => [[z(), one(), z()], [z(), z(), z()], [z(), z(), z()]],
        Prop4Variant::Four => [[z(), z(), z()], [z(), a(), z()], [z(), z(), -a()]],
        // The single parameter of this family is called b.
        Prop4Variant::Five => [[z(), z(), z()], [z(), z(), -a()], [z(), a(), z()]],
        Prop4Variant::Six => [[a(), z(), z()], [z(), b(), z()], [z(), z(), -(a() + b())]],
        Prop4Variant::SevenI => [[a() * int(-2), z(), z()], [z(), a(), z()], [z(), z(), a()]],
        Prop4Variant::SevenII => [
            [a() * int(-2), z(), z()],
            [z(), a(), one()],
            [z(), z(), a()],
        ],
        Prop4Variant::Eight => [[a() * int(-2), z(), z()], [z(), a(), -b()], [z(), b(), a()]],
    }
}

/// `ℝ³ ⋊ ℝ` with `[W, X_i] = Σ_j a_ij X_j`.
pub fn semidirect_r3(a: &[[Rational; 3]; 3]) -> Result<LieAlgebra> {
    let mut c = StructureConstants::new(&["X1", "X2", "X3", "W"])?;
    for (i, row) in a.iter().enumerate() {
        let mut v = row.to_vec();
        v.push(Rational::zero());
        c.set(3, i, v)?;
    }
    LieAlgebra::new(c)
}

fn heisenberg_type(n: usize) -> CatalogEntry {
    let m = n - 1;
    let mut labels: Vec<String> = vec!["A".into(), "B".into()];
    labels.extend((1..=m).map(|i| format!("X{i}")));
    labels.extend((1..=m).map(|i| format!("Y{i}")));
    let dim = 2 * n;
    let x = |i: usize| 2 + i;
    let y = |i: usize| 2 + m + i;
    let mut c = StructureConstants::new(&labels).expect("valid labels");
    for i in 0..m {
        let mut v = zero_vector(dim);
        v[1] = one();
        c.set(x(i), y(i), v).expect("in range");
    }
    let g = LieAlgebra::new(c).expect("Heisenberg-type algebras satisfy Jacobi");

    let mut cols: Vec<Vector> = vec![zero_vector(dim); dim];
    cols[0][1] = one();
    cols[1][0] = neg(1);
    for i in 0..m {
        cols[x(i)][y(i)] = one();
        cols[y(i)][x(i)] = neg(1);
    }
    let j = ComplexStructure::new(Matrix::from_columns(dim, &cols).expect("square"))
        .expect("J squares to -1");

    let mut terms = vec![(0, 1, one())];
    terms.extend((0..m).map(|i| (x(i), y(i), one())));
    let omega = two_form(dim, &terms);
    let listed = one_form_at(dim, 0, one());
    finish(
        CatalogKey::HeisenbergType(n),
        g,
        Some(j),
        Some(omega),
        Some(listed),
    )
}

fn u2_jdelta(c: &Rational, d: &Rational, positive: bool) -> CatalogEntry {
    let labels = ["T", "X", "Y", "Z"];
    let g = algebra(
        &labels,
        &[
            ("X", "Y", &[("Z", one())]),
            ("Y", "Z", &[("X", one())]),
            ("Z", "X", &[("Y", one())]),
        ],
    );
    let s = if positive { one() } else { neg(1) };
    // J(T - dX) = cX and J(cX) = -(T - dX).
    let jt = [("T", -d / c), ("X", (c * c + d * d) / c)];
    let jx = [("T", -one() / c), ("X", d / c)];
    let j = complex_structure(
        &labels,
        &[
            ("T", &jt),
            ("X", &jx),
            ("Y", &[("Z", s.clone())]),
            ("Z", &[("Y", -s.clone())]),
        ],
    );
    let kappa = if (c * &s).is_positive() {
        one()
    } else {
        neg(1)
    };
    let omega = two_form(4, &[(0, 1, &s * &kappa), (2, 3, s.clone())]);
    let key = CatalogKey::U2JDelta {
        c: c.clone(),
        d: d.clone(),
        positive,
    };
    finish(key, g, Some(j), Some(omega), None)
}

/// `JX = Y, JY = -X, JZ = W - qY, JW = -Z - qX`.
fn inoue_j_q(q: &Rational) -> ComplexStructure {
    complex_structure(
        &XYZW,
        &[
            ("X", &[("Y", one())]),
            ("Y", &[("X", neg(1))]),
            ("Z", &[("W", one()), ("Y", -q.clone())]),
            ("W", &[("Z", neg(1)), ("X", -q.clone())]),
        ],
    )
}

/// `JX = Y, JZ = W + dZ`, hence `JW = -(1 + d²)Z - dW`.
fn j_d(d: &Rational) -> ComplexStructure {
    complex_structure(
        &XYZW,
        &[
            ("X", &[("Y", one())]),
            ("Y", &[("X", neg(1))]),
            ("Z", &[("W", one()), ("Z", d.clone())]),
            ("W", &[("Z", -(one() + d * d)), ("W", -d.clone())]),
        ],
    )
}

fn finish(
    key: CatalogKey,
    algebra: LieAlgebra,
    j: Option<ComplexStructure>,
    omega: Option<Cochain>,
    listed_theta: Option<Cochain>,
) -> CatalogEntry {
    let theta = omega.as_ref().map(|o| {
        lee_form_from_omega(&algebra, o)
            .expect("catalog forms are nondegenerate")
            .expect("catalog forms have a Lee form")
    });
    CatalogEntry {
        key,
        algebra,
        j,
        omega,
        theta,
        listed_theta,
    }
}

/// Builds the entry for `key`.
pub fn build(key: &CatalogKey) -> Result<CatalogEntry> {
    key.validate()?;
    let w = || Some(one_form_at(4, 3, one()));
    Ok(match key {
        CatalogKey::HeisenbergType(n) => heisenberg_type(*n),
        CatalogKey::U2JDelta { c, d, positive } => u2_jdelta(c, d, *positive),
        CatalogKey::Surface(k) => finish(
            key.clone(),
            surface_algebra(*k),
            Some(standard_j()),
            Some(standard_omega()),
            w(),
        ),
        CatalogKey::InoueS0(b) => finish(
            key.clone(),
            inoue_s0(b),
            Some(standard_j()),
            Some(standard_omega()),
            w(),
        ),
        CatalogKey::Prop3Family(variant) => {
            let ad_w: [(&str, Terms); 2] = match variant {
                Prop3Variant::Rotation => [("Y", &[("Z", neg(1))]), ("Z", &[("Y", one())])],
                Prop3Variant::Hyperbolic => [("Y", &[("Y", one())]), ("Z", &[("Z", neg(1))])],
            };
            let g = algebra(
                &XYZW,
                &[
                    ("Y", "Z", &[("X", neg(1))]),
                    ("W", ad_w[0].0, ad_w[0].1),
                    ("W", ad_w[1].0, ad_w[1].1),
                ],
            );
            finish(key.clone(), g, None, None, None)
        }
        CatalogKey::Prop4Family(v, params) => {
            let g = semidirect_r3(&prop4_matrix(*v, params))?;
            finish(key.clone(), g, None, None, None)
        }
        CatalogKey::InoueSplusJq(q) => {
            finish(key.clone(), inoue_splus(), Some(inoue_j_q(q)), None, None)
        }
        CatalogKey::HopfJd(d) => finish(
            key.clone(),
            surface_algebra(6),
            Some(j_d(d)),
            Some(standard_omega()),
            w(),
        ),
        CatalogKey::EllipticJd(d) => finish(
            key.clone(),
            surface_algebra(5),
            Some(j_d(d)),
            Some(standard_omega()),
            w(),
        ),
    })
}

/// Facts asserted about an entry; `None` means nothing is claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    /// Whether the entry's `J` carries a compatible l.c.K. form.
    pub lck: Option<bool>,
    pub vaisman: Option<bool>,
    pub label: Option<ClassTag>,
    pub lattice: Option<LatticeVerdict>,
}

pub fn expected_properties(key: &CatalogKey) -> Expected {
    let (lck, vaisman, label) = match key {
        CatalogKey::HeisenbergType(n) => (
            Some(true),
            Some(true),
            (*n == 2).then_some(ClassTag::Prop4_3ii),
        ),
        CatalogKey::U2JDelta { .. } => (Some(true), Some(true), Some(ClassTag::ReductiveCompact)),
        CatalogKey::Surface(k) => {
            let label = match k {
                1 => ClassTag::Prop4_3ii,
                2 => ClassTag::Prop3Rotation,
                3 => ClassTag::Prop3Hyperbolic,
                4 => ClassTag::Prop4_8,
                5 => ClassTag::ReductiveSplit,
                _ => ClassTag::ReductiveCompact,
            };
            (Some(true), Some(!matches!(k, 3 | 4)), Some(label))
        }
        CatalogKey::InoueS0(_) => (Some(true), Some(false), Some(ClassTag::Prop4_8)),
        CatalogKey::Prop3Family(Prop3Variant::Rotation) => {
            (None, None, Some(ClassTag::Prop3Rotation))
        }
        CatalogKey::Prop3Family(Prop3Variant::Hyperbolic) => {
            (None, None, Some(ClassTag::Prop3Hyperbolic))
        }
        CatalogKey::Prop4Family(v, _) => {
            // Among nilpotent algebras only the Heisenberg type is l.c.K.
            let lck = (*v == Prop4Variant::ThreeI).then_some(false);
            (lck, None, Some(v.tag()))
        }
        CatalogKey::InoueSplusJq(_) => (Some(false), None, Some(ClassTag::Prop3Hyperbolic)),
        CatalogKey::HopfJd(_) => (Some(true), Some(true), Some(ClassTag::ReductiveCompact)),
        CatalogKey::EllipticJd(_) => (Some(true), Some(true), Some(ClassTag::ReductiveSplit)),
    };
    Expected {
        lck,
        vaisman,
        label,
        lattice: label.map(|t| lattice_verdict_for_tag(t).verdict),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{check_lck, is_integrable};

    #[test]
    fn keys_round_trip_through_strings() {
        for key in CatalogKey::defaults() {
            let parsed: CatalogKey = key.to_string().parse().unwrap();
            assert_eq!(parsed, key);
        }
        assert!("surface(7)".parse::<CatalogKey>().is_err());
        assert!("prop4_family(4,0)".parse::<CatalogKey>().is_err());
        assert!("prop4_family(6,1,1)".parse::<CatalogKey>().is_err());
        assert!("u2_Jdelta(0,1,+)".parse::<CatalogKey>().is_err());
        assert!("nonsense".parse::<CatalogKey>().is_err());
    }

    #[test]
    fn every_default_entry_builds_and_is_consistent() {
        for key in CatalogKey::defaults() {
            let e = build(&key).unwrap();
            assert!(
                e.algebra.constants().jacobi_violations().is_empty(),
                "{key}"
            );
            if let Some(j) = &e.j {
                assert!(is_integrable(&e.algebra, j).unwrap(), "{key}");
            }
            if e.has_structure() {
                let r = check_lck(
                    &e.algebra,
                    e.omega.as_ref().unwrap(),
                    e.theta.as_ref().unwrap(),
                    e.j.as_ref().unwrap().matrix(),
                )
                .unwrap();
                assert!(r.pass(), "{key}: {:?}", r.items);
                if let Some(v) = expected_properties(&key).vaisman {
                    assert_eq!(r.vaisman, Some(v), "{key}");
                }
            }
        }
    }

    #[test]
    fn hopf_brackets_as_listed() {
        let e = build(&CatalogKey::Surface(6)).unwrap();
        let g = &e.algebra;
        let el = |l| g.element(l).unwrap();
        let minus = |v: Vector| v.into_iter().map(|c| -c).collect::<Vector>();
        assert_eq!(g.bracket(&el("X"), &el("Y")).unwrap(), minus(el("Z")));
        assert_eq!(g.bracket(&el("Z"), &el("X")).unwrap(), minus(el("Y")));
        assert_eq!(g.bracket(&el("Z"), &el("Y")).unwrap(), el("X"));
    }

    #[test]
    fn u2_j_delta_basic_case() {
        let e = build(&"u2_Jdelta(1,0,+)".parse().unwrap()).unwrap();
        let j = e.j.unwrap();
        let g = &e.algebra;
        let el = |l| g.element(l).unwrap();
        assert_eq!(j.apply(&el("T")).unwrap(), el("X"));
        assert_eq!(
            j.apply(&el("X")).unwrap(),
            el("T").into_iter().map(|c| -c).collect::<Vector>()
        );
        assert_eq!(j.apply(&el("Y")).unwrap(), el("Z"));
    }

    #[test]
    fn heisenberg_type_has_one_bracket() {
        let e = build(&CatalogKey::HeisenbergType(2)).unwrap();
        assert_eq!(e.algebra.constants().nonzero_brackets().count(), 1);
        assert!(!e.theta_corrected());
    }

    #[test]
    fn printed_second_class_is_filiform_and_not_integrable() {
        let g = algebra(
            &XYZW,
            &[
                ("X", "Y", &[("Z", neg(1))]),
                ("W", "X", &[("Y", neg(1))]),
                ("W", "Y", &[("Z", one())]),
            ],
        );
        let dims: Vec<usize> = g.lower_central_series().iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![4, 2, 1, 0]);
        assert!(!is_integrable(&g, &standard_j()).unwrap());
    }

    #[test]
    fn listed_lee_form_sign_is_corrected_for_inoue() {
        let e = build(&CatalogKey::Surface(3)).unwrap();
        assert!(e.theta_corrected());
        assert_eq!(e.theta.unwrap(), one_form_at(4, 3, neg(1)));
    }
}
