//! The `lck-lab` command line.
//!
//! Exit codes: `0` when every requested check passes, `1` when a check fails
//! or the computation is undefined for the input (for example a Lee form that
//! is not closed), `2` for unreadable input, unknown names or bad flags.
//! `LCK_LAB_THREADS` bounds the number of worker threads.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::file::AlgebraDocument;
use super::report::Report;
use crate::catalog::{build, expected_properties, CatalogKey};
use crate::classify::{
    classify4, double_root_test, lattice_verdict, lck_search, DoubleRootQuery, GridSpec,
    SearchOutcome,
};
use crate::cochain::{twisted_cohomology_dim, Cochain};
use crate::hermitian::{check_lck, format_vector, ComplexStructure};
use crate::linalg::Rational;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "lck-lab",
    version,
    about = "Exact l.c.K. computations on Lie algebras"
)]
pub struct Cli {
    /// Output style for reports.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the l.c.K. conditions for a 2-form, Lee form and J.
    Check {
        file: PathBuf,
        /// Name of the 2-form.
        #[arg(long, default_value = "omega")]
        omega: String,
        /// Name of the Lee form; defaults to `theta` if present, otherwise
        /// the Lee form computed from the 2-form.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Dimensions of the twisted cohomology groups.
    Cohomology {
        file: PathBuf,
        /// Name of the closed 1-form, or `0` for ordinary cohomology.
        #[arg(long, default_value = "theta")]
        theta: String,
        /// A degree or `all`.
        #[arg(long, default_value = "all")]
        p: String,
    },
    /// Classify a four-dimensional algebra.
    Classify { file: PathBuf },
    /// List catalog keys or write a catalog entry as a file.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Grid search for an l.c.K. pair.
    Search {
        file: PathBuf,
        /// Lee form grid `lo:hi:step`.
        #[arg(long, default_value = "-3:3:1/2", allow_hyphen_values = true)]
        grid: String,
        /// Largest coefficient used when combining candidate 2-forms.
        #[arg(long, default_value_t = 2)]
        height: u32,
        /// Ignore the file's J and try the standard candidates.
        #[arg(long)]
        default_j: bool,
    },
    /// Repeated roots of t³ - m t² + n t - 1.
    DoubleRoot {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// Print the default catalog keys with their expected class.
    List,
    /// Write the entry for KEY as an algebra file.
    Emit {
        key: String,
        /// Output path; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Fail = 1,
    Input = 2,
}

/// A command that could not produce a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            exit: Exit::Input,
            message: message.into(),
        }
    }

    fn domain(e: Error) -> Self {
        CliError {
            exit: Exit::Fail,
            message: e.to_string(),
        }
    }
}

pub fn load(path: &Path) -> Result<AlgebraDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    AlgebraDocument::from_toml(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn form<'a>(doc: &'a AlgebraDocument, name: &str, degree: usize) -> Result<&'a Cochain, CliError> {
    let f = doc
        .forms
        .get(name)
        .ok_or_else(|| CliError::input(format!("no form named `{name}`")))?;
    if f.degree() != degree {
        return Err(CliError::input(format!(
            "form `{name}` has degree {}, expected {degree}",
            f.degree()
        )));
    }
    Ok(f)
}

fn status_of(report: &Report) -> Exit {
    if report.pass() {
        Exit::Pass
    } else {
        Exit::Fail
    }
}

pub fn cmd_check(
    doc: &AlgebraDocument,
    omega: &str,
    theta: Option<&str>,
) -> Result<(Report, Exit), CliError> {
    let g = &doc.algebra;
    let labels = g.labels();
    let omega = form(doc, omega, 2)?;
    let j = doc
        .j
        .as_ref()
        .ok_or_else(|| CliError::input("the file has no J"))?;
    let mut report = Report::new("check", &doc.name);

    let computed = match crate::hermitian::lee_form_from_omega(g, omega) {
        Ok(t) => t,
        Err(Error::DegenerateOmega) => None,
        Err(e) => return Err(CliError::domain(e)),
    };
    let theta = match theta {
        Some(name) => form(doc, name, 1)?.clone(),
        None if doc.forms.contains_key("theta") => form(doc, "theta", 1)?.clone(),
        None => match &computed {
            Some(t) => t.clone(),
            None => {
                report.check("lee_form_exists", false, "no 1-form θ satisfies dΩ = θ∧Ω");
                return Ok((report, Exit::Fail));
            }
        },
    };

    let r = check_lck(g, omega, &theta, j).map_err(CliError::domain)?;
    for item in &r.items {
        report.check(
            item.name.as_str(),
            item.pass,
            item.witness.as_deref().unwrap_or("ok"),
        );
    }
    report.info("theta_given", r.given_theta.display_with(labels));
    report.info(
        "theta_computed",
        r.computed_theta
            .as_ref()
            .map_or("none".to_string(), |t| t.display_with(labels).to_string()),
    );
    if let Some(h) = &r.metric {
        report.info("metric", h);
    }
    if let Some(lf) = &r.lee_field {
        report.info("lee_field", format_vector(labels, &lf.normalized));
        report.info("lee_field_raw", format_vector(labels, &lf.raw));
        report.info("lee_norm_squared", &lf.norm_sq);
    }
    match &r.reeb {
        Some(Ok(reeb)) => {
            report.info("reeb_sign", reeb.epsilon);
            report.info("reeb_omega_scale", &reeb.scale);
            report.info("reeb_field", format_vector(labels, &reeb.eta));
            report.info("reeb_form", reeb.phi.display_with(labels));
            report.info(
                "d_phi_contracted_with_lee",
                reeb.xi_contraction.display_with(labels),
            );
            report.info(
                "d_phi_contracted_with_reeb",
                reeb.eta_contraction.display_with(labels),
            );
        }
        Some(Err(msg)) => report.info("reeb", msg),
        None => {}
    }
    if let Some(v) = r.vaisman {
        report.info("vaisman", v);
    }
    let exit = status_of(&report);
    Ok((report, exit))
}

pub fn cmd_cohomology(
    doc: &AlgebraDocument,
    theta: &str,
    p: &str,
) -> Result<(Report, Exit), CliError> {
    let g = &doc.algebra;
    let n = g.dim();
    let theta = if theta == "0" {
        Cochain::zero(n, 1)
    } else {
        form(doc, theta, 1)?.clone()
    };
    let degrees: Vec<usize> = if p == "all" {
        (0..=n).collect()
    } else {
        let k: usize = p
            .parse()
            .map_err(|_| CliError::input(format!("--p expects a degree or `all`, got `{p}`")))?;
        if k > n {
            return Err(CliError::input(format!("degree {k} exceeds dimension {n}")));
        }
        vec![k]
    };
    let mut report = Report::new("cohomology", &doc.name);
    report.info("theta", theta.display_with(g.labels()));
    for k in degrees {
        let d = twisted_cohomology_dim(g, &theta, k).map_err(CliError::domain)?;
        report.info(format!("H^{k}"), d);
    }
    Ok((report, Exit::Pass))
}

fn poly_string(coeffs: &[Rational]) -> String {
    let labels: Vec<String> = (0..coeffs.len())
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        })
        .collect();
    let rev_labels: Vec<String> = labels.into_iter().rev().collect();
    let rev: Vec<Rational> = coeffs.iter().rev().cloned().collect();
    format_vector(&rev_labels, &rev)
        .replace("*1", "")
        .replace(" 1*", " ")
}

pub fn cmd_classify(doc: &AlgebraDocument) -> Result<(Report, Exit), CliError> {
    let label = classify4(&doc.algebra).map_err(CliError::domain)?;
    let mut report = Report::new("classify", &doc.name);
    report.info("class", label.tag);
    if let Some(p) = &label.char_poly {
        report.info("char_poly", poly_string(p));
    }
    if let Some(s) = &label.scale_invariant {
        report.info("scale_invariant", s);
    }
    let (pos, neg, zero) = label.killing_inertia;
    report.info("killing_inertia", format!("({pos}, {neg}, {zero})"));
    let lattice = lattice_verdict(&label);
    report.info("lattice", lattice.verdict);
    report.info("lattice_reason", lattice.reason);
    Ok((report, Exit::Pass))
}

pub fn cmd_catalog_list() -> Report {
    let mut report = Report::new("catalog", "list");
    for key in CatalogKey::defaults() {
        let label = expected_properties(&key)
            .label
            .map_or("-".to_string(), |t| t.to_string());
        report.info(key.to_string(), label);
    }
    report
}

pub fn cmd_catalog_emit(key: &str) -> Result<String, CliError> {
    let key: CatalogKey = key
        .parse()
        .map_err(|e: Error| CliError::input(e.to_string()))?;
    let entry = build(&key).map_err(|e| CliError::input(e.to_string()))?;
    Ok(AlgebraDocument::from(&entry).to_toml())
}

pub fn cmd_search(
    doc: &AlgebraDocument,
    grid: &str,
    height: u32,
    default_j: bool,
) -> Result<(Report, Exit), CliError> {
    let grid: GridSpec = grid
        .parse()
        .map_err(|e: Error| CliError::input(e.to_string()))?;
    let g = &doc.algebra;
    let labels = g.labels();
    let js = match (&doc.j, default_j) {
        (Some(m), false) => Some(vec![
            ComplexStructure::new(m.clone()).map_err(|e| CliError::input(format!("J: {e}")))?
        ]),
        _ => None,
    };
    let outcome = lck_search(g, js.as_deref(), &grid, height).map_err(CliError::domain)?;
    let mut report = Report::new("search", &doc.name);
    report.info("grid", &grid);
    report.info("height", height);
    match outcome {
        SearchOutcome::Found(w) => {
            report.check("witness", true, "found");
            report.info("omega", w.omega.display_with(labels));
            report.info("theta", w.theta.display_with(labels));
            report.info("j", w.j.matrix());
            Ok((report, Exit::Pass))
        }
        SearchOutcome::NotFound(none) => {
            report.check("witness", false, "no witness on grid");
            report.info(
                "evidence",
                "evidence-level result, not a proof of non-existence",
            );
            report.info("complex_structures", none.j_candidates);
            report.info("integrable_complex_structures", none.integrable_candidates);
            report.info("lee_form_points", none.theta_points);
            Ok((report, Exit::Fail))
        }
    }
}

pub fn cmd_double_root(m: i64, n: i64) -> Report {
    let q = DoubleRootQuery { m, n };
    let mut report = Report::new("double-root", format!("m={m} n={n}"));
    report.info("polynomial", poly_string(&q.polynomial()));
    report.info(
        "double_root",
        double_root_test(q).map_or("none".to_string(), |r| r.to_string()),
    );
    report
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(value) = std::env::var("LCK_LAB_THREADS") {
        let n: usize = value.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            CliError::input(format!(
                "LCK_LAB_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
        // A second initialisation in the same process is harmless to ignore.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(Option<Report>, Option<String>, Exit), CliError> {
    configure_threads()?;
    let with_report = |r: Result<(Report, Exit), CliError>| r.map(|(rep, e)| (Some(rep), None, e));
    match &cli.command {
        Command::Check { file, omega, theta } => {
            with_report(cmd_check(&load(file)?, omega, theta.as_deref()))
        }
        Command::Cohomology { file, theta, p } => {
            with_report(cmd_cohomology(&load(file)?, theta, p))
        }
        Command::Classify { file } => with_report(cmd_classify(&load(file)?)),
        Command::Catalog {
            action: CatalogAction::List,
        } => Ok((Some(cmd_catalog_list()), None, Exit::Pass)),
        Command::Catalog {
            action: CatalogAction::Emit { key, output },
        } => {
            let text = cmd_catalog_emit(key)?;
            match output {
                Some(path) => {
                    std::fs::write(path, text)
                        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                    Ok((None, None, Exit::Pass))
                }
                None => Ok((None, Some(text), Exit::Pass)),
            }
        }
        Command::Search {
            file,
            grid,
            height,
            default_j,
        } => with_report(cmd_search(&load(file)?, grid, *height, *default_j)),
        Command::DoubleRoot { m, n } => Ok((Some(cmd_double_root(*m, *n)), None, Exit::Pass)),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, text, exit)) => {
            if let Some(r) = report {
                let rendered = match cli.format {
                    Format::Human => r.render_human(),
                    Format::Machine => r.to_jsonl(),
                };
                let _ = write!(out, "{rendered}");
            }
            if let Some(t) = text {
                let _ = write!(out, "{t}");
            }
            exit as i32
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.exit as i32
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
