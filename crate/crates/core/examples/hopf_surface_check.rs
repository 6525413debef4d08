//! Runs the full l.c.K. check on the Hopf surface algebra `ℝ ⊕ 𝔰𝔲(2)` and
//! prints every item of the report.

use lck_lab::catalog::build;
use lck_lab::hermitian::{check_lck, format_vector};

fn main() -> Result<(), lck_lab::Error> {
    let entry = build(&"surface(6)".parse()?)?;
    let g = &entry.algebra;
    let labels = g.labels();
    let (omega, theta, j) = (
        entry.omega.as_ref().unwrap(),
        entry.theta.as_ref().unwrap(),
        entry.j.as_ref().unwrap(),
    );

    println!("Ω = {}", omega.display_with(labels));
    println!("θ = {}", theta.display_with(labels));
    let report = check_lck(g, omega, theta, j.matrix())?;
    for item in &report.items {
        let mark = if item.pass { "ok  " } else { "FAIL" };
        println!("{mark} {}", item.name.as_str());
    }
    if let Some(lee) = &report.lee_field {
        println!("ξ = {}", format_vector(labels, &lee.normalized));
    }
    if let Some(Ok(reeb)) = &report.reeb {
        println!(
            "η = {}  (ε = {})",
            format_vector(labels, &reeb.eta),
            reeb.epsilon
        );
        println!("φ = {}", reeb.phi.display_with(labels));
    }
    println!("Vaisman: {:?}", report.vaisman);
    Ok(())
}
