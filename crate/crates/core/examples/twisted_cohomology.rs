//! Twisted cohomology `H^p_θ` next to the untwisted Betti numbers.
//!
//! For the Heisenberg-type and Hopf algebras with their Lee forms every
//! twisted group vanishes. The Inoue algebras keep some classes, which is why
//! their l.c.K. forms have no `d_θ`-potential.

use lck_lab::catalog::build;
use lck_lab::cochain::{betti_numbers, twisted_cohomology_dims};

fn main() -> Result<(), lck_lab::Error> {
    println!("{:<22} {:<24} twisted by θ", "algebra", "betti");
    for key in [
        "heisenberg_type(2)",
        "heisenberg_type(3)",
        "surface(3)",
        "surface(4)",
        "surface(6)",
    ] {
        let e = build(&key.parse()?)?;
        let theta = e.theta.as_ref().expect("entry has a Lee form");
        let betti = betti_numbers(&e.algebra)?;
        let twisted = twisted_cohomology_dims(&e.algebra, theta)?;
        println!("{key:<22} {:<24} {twisted:?}", format!("{betti:?}"));
    }
    Ok(())
}
