//! Grid search for l.c.K. pairs on a few algebras.
//!
//! The Heisenberg-type algebra and the Hopf algebra have witnesses. The
//! filiform algebra and the Inoue `S⁺` algebra with the deformed complex
//! structures do not, at least on the default grid.

use std::time::Instant;

use lck_lab::catalog::build;
use lck_lab::classify::{lck_search, GridSpec, SearchOutcome};
use lck_lab::CatalogKey;

fn main() -> Result<(), lck_lab::Error> {
    let grid = GridSpec::default();
    for key in [
        "heisenberg_type(2)",
        "surface(6)",
        "prop4_family(3i)",
        "inoue_splus_Jq(1)",
        "inoue_splus_Jq(2)",
    ] {
        let key: CatalogKey = key.parse()?;
        let entry = build(&key)?;
        let js = entry.j.as_ref().map(std::slice::from_ref);
        let start = Instant::now();
        let outcome = lck_search(&entry.algebra, js, &grid, 2)?;
        let labels = entry.algebra.labels();
        match outcome {
            SearchOutcome::Found(w) => println!(
                "{key}: Ω = {}, θ = {}",
                w.omega.display_with(labels),
                w.theta.display_with(labels)
            ),
            SearchOutcome::NotFound(report) => println!("{key}: {report}"),
        }
        println!("  ({:.2?})", start.elapsed());
    }
    Ok(())
}
