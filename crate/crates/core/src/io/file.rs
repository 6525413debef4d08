//! TOML description of an algebra with optional named forms and a complex
//! structure. All references are by basis name and every number is a string
//! `"p"` or `"p/q"` with `q > 0`.
//!
//! ```toml
//! name = "surface(6)"
//! dim = 4
//! basis = ["X", "Y", "Z", "W"]
//! J = [["X", "Y", "1"], ["Y", "X", "-1"], ["Z", "W", "1"], ["W", "Z", "-1"]]
//!
//! [[brackets]]
//! left = "X"
//! right = "Y"
//! value = { Z = "-1" }
//!
//! [forms.omega]
//! degree = 2
//! terms = [{ index = ["X", "Y"], coeff = "1" }, { index = ["Z", "W"], coeff = "1" }]
//! ```
//!
//! A triple `[from, to, c]` in `J` says that `J(from)` has coefficient `c` on
//! `to`. Unlisted brackets vanish.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::cochain::Cochain;
use crate::lie::{LieAlgebra, StructureConstants};
use crate::linalg::{zero_vector, Matrix, Rational};

/// A parse or validation failure, with the place in the file it refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub location: String,
    pub message: String,
}

impl FileError {
    fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        FileError {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for FileError {}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub index: Vec<String>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub degree: usize,
    pub terms: Vec<TermSpec>,
}

/// Raw file contents, before validation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<(String, String, String)>>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
    #[serde(default)]
    pub forms: BTreeMap<String, FormSpec>,
}

/// Validated file contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub algebra: LieAlgebra,
    pub forms: BTreeMap<String, Cochain>,
    /// Column `i` is `J e_i`. Not checked to square to `-1`.
    pub j: Option<Matrix>,
}

/// Parses `"p"` or `"p/q"` with `q > 0`; an optional leading `-` is allowed.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|d| !digits(d)) {
        return Err(format!("`{s}` is not a rational of the form p or p/q"));
    }
    let n: BigInt = num.parse().map_err(|_| format!("bad numerator in `{s}`"))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("bad denominator in `{s}`"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

impl AlgebraDocument {
    pub fn from_toml(text: &str) -> Result<Self, FileError> {
        let raw: AlgebraFile = toml::from_str(text).map_err(|e| {
            let location = e
                .span()
                .map(|span| {
                    let line = text[..span.start].matches('\n').count() + 1;
                    format!("line {line}")
                })
                .unwrap_or_else(|| "file".to_string());
            FileError::new(location, e.message().to_string())
        })?;
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &AlgebraFile) -> Result<Self, FileError> {
        if raw.basis.len() != raw.dim {
            return Err(FileError::new(
                "basis",
                format!(
                    "dim is {} but {} basis names are given",
                    raw.dim,
                    raw.basis.len()
                ),
            ));
        }
        let mut constants = StructureConstants::new(&raw.basis)
            .map_err(|e| FileError::new("basis", e.to_string()))?;
        let index = |name: &str, location: &str| {
            constants
                .index_of(name)
                .ok_or_else(|| FileError::new(location, format!("unknown basis name `{name}`")))
        };

        // Per unordered pair: first position, orientation, value of [min, max].
        let mut seen: HashMap<(usize, usize), (usize, bool, Vec<Rational>)> = HashMap::new();
        let mut table = Vec::new();
        for (k, b) in raw.brackets.iter().enumerate() {
            let location = format!("brackets[{k}]");
            let i = index(&b.left, &location)?;
            let j = index(&b.right, &location)?;
            let mut value = zero_vector(raw.dim);
            for (name, c) in &b.value {
                let t = index(name, &location)?;
                value[t] = parse_rational(c).map_err(|m| FileError::new(&location, m))?;
            }
            if i == j {
                if value.iter().any(|c| !c.is_zero()) {
                    return Err(FileError::new(
                        location,
                        format!("[{0}, {0}] must vanish", b.left),
                    ));
                }
                continue;
            }
            let forward = i < j;
            let key = (i.min(j), i.max(j));
            let oriented: Vec<Rational> = if forward {
                value.clone()
            } else {
                value.iter().map(|c| -c).collect()
            };
            match seen.get(&key) {
                Some((first, first_forward, _)) if *first_forward == forward => {
                    return Err(FileError::new(
                        location,
                        format!(
                            "bracket [{}, {}] already given in brackets[{first}]",
                            b.left, b.right
                        ),
                    ));
                }
                Some((first, _, previous)) if previous != &oriented => {
                    return Err(FileError::new(
                        location,
                        format!(
                            "bracket [{}, {}] is not the negation of brackets[{first}]",
                            b.left, b.right
                        ),
                    ));
                }
                Some(_) => continue,
                None => {
                    seen.insert(key, (k, forward, oriented));
                    table.push((i, j, value));
                }
            }
        }
        for (i, j, value) in table {
            constants
                .set(i, j, value)
                .map_err(|e| FileError::new("brackets", e.to_string()))?;
        }
        let violations = constants.jacobi_violations();
        if let Some(v) = violations.first() {
            let l = constants.labels();
            return Err(FileError::new(
                "brackets",
                format!(
                    "Jacobi identity fails for ({}, {}, {})",
                    l[v.i], l[v.j], l[v.k]
                ),
            ));
        }
        let algebra =
            LieAlgebra::new(constants).map_err(|e| FileError::new("brackets", e.to_string()))?;

        let mut forms = BTreeMap::new();
        for (name, spec) in &raw.forms {
            let location = format!("forms.{name}");
            if spec.degree > raw.dim {
                return Err(FileError::new(
                    location,
                    format!("degree {} exceeds dim {}", spec.degree, raw.dim),
                ));
            }
            let mut form = Cochain::zero(raw.dim, spec.degree);
            let mut keys = std::collections::BTreeSet::new();
            for (k, term) in spec.terms.iter().enumerate() {
                let location = format!("{location}.terms[{k}]");
                if term.index.len() != spec.degree {
                    return Err(FileError::new(
                        location,
                        format!(
                            "index has {} names, degree is {}",
                            term.index.len(),
                            spec.degree
                        ),
                    ));
                }
                let idx = term
                    .index
                    .iter()
                    .map(|n| {
                        algebra.index_of(n).ok_or_else(|| {
                            FileError::new(&location, format!("unknown basis name `{n}`"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(FileError::new(location, "repeated basis name in index"));
                }
                if !keys.insert(sorted) {
                    return Err(FileError::new(location, "monomial listed twice"));
                }
                let c = parse_rational(&term.coeff).map_err(|m| FileError::new(&location, m))?;
                let mono = Cochain::monomial(raw.dim, &idx, c)
                    .map_err(|e| FileError::new(&location, e.to_string()))?;
                form = &form + &mono;
            }
            forms.insert(name.clone(), form);
        }

        let j = match &raw.j {
            None => None,
            Some(triples) => {
                let mut m = Matrix::zeros(raw.dim, raw.dim);
                let mut seen = std::collections::BTreeSet::new();
                for (k, (from, to, c)) in triples.iter().enumerate() {
                    let location = format!("J[{k}]");
                    let a = algebra.index_of(from).ok_or_else(|| {
                        FileError::new(&location, format!("unknown basis name `{from}`"))
                    })?;
                    let b = algebra.index_of(to).ok_or_else(|| {
                        FileError::new(&location, format!("unknown basis name `{to}`"))
                    })?;
                    if !seen.insert((a, b)) {
                        return Err(FileError::new(
                            location,
                            format!("entry J({from}) → {to} listed twice"),
                        ));
                    }
                    m[(b, a)] = parse_rational(c).map_err(|msg| FileError::new(&location, msg))?;
                }
                Some(m)
            }
        };

        Ok(AlgebraDocument {
            name: raw.name.clone(),
            algebra,
            forms,
            j,
        })
    }

    pub fn to_raw(&self) -> AlgebraFile {
        let labels = self.algebra.labels();
        let brackets = self
            .algebra
            .constants()
            .nonzero_brackets()
            .map(|(&(i, j), v)| BracketSpec {
                left: labels[i].clone(),
                right: labels[j].clone(),
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (labels[k].clone(), format_rational(c)))
                    .collect(),
            })
            .collect();
        let forms = self
            .forms
            .iter()
            .map(|(name, form)| {
                let terms = form
                    .terms()
                    .map(|(key, c)| TermSpec {
                        index: key.iter().map(|&i| labels[i].clone()).collect(),
                        coeff: format_rational(c),
                    })
                    .collect();
                (
                    name.clone(),
                    FormSpec {
                        degree: form.degree(),
                        terms,
                    },
                )
            })
            .collect();
        let j = self.j.as_ref().map(|m| {
            let n = labels.len();
            let mut out = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if !m[(b, a)].is_zero() {
                        out.push((
                            labels[a].clone(),
                            labels[b].clone(),
                            format_rational(&m[(b, a)]),
                        ));
                    }
                }
            }
            out
        });
        AlgebraFile {
            name: self.name.clone(),
            dim: labels.len(),
            basis: labels.to_vec(),
            j,
            brackets,
            forms,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&self.to_raw()).expect("document serialises")
    }
}

impl From<&CatalogEntry> for AlgebraDocument {
    fn from(entry: &CatalogEntry) -> Self {
        let mut forms = BTreeMap::new();
        if let Some(o) = &entry.omega {
            forms.insert("omega".to_string(), o.clone());
        }
        if let Some(t) = &entry.theta {
            forms.insert("theta".to_string(), t.clone());
        }
        AlgebraDocument {
            name: entry.key.to_string(),
            algebra: entry.algebra.clone(),
            forms,
            j: entry.j.as_ref().map(|j| j.matrix().clone()),
        }
    }
}
