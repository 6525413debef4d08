//! Classifies every four-dimensional catalog algebra, then checks that the
//! label survives a change of basis.

use lck_lab::catalog::build;
use lck_lab::classify::{classify4, lattice_verdict};
use lck_lab::{CatalogKey, Matrix};

fn main() -> Result<(), lck_lab::Error> {
    let shear = Matrix::from_i64(&[&[1, 2, 0, 0], &[0, 1, 0, 3], &[1, 0, 1, 0], &[0, 0, -1, 1]]);
    for key in CatalogKey::defaults() {
        let e = build(&key)?;
        if e.algebra.dim() != 4 {
            continue;
        }
        let label = classify4(&e.algebra)?;
        let moved = classify4(&e.algebra.change_basis(&shear)?)?;
        assert_eq!(label.tag, moved.tag);
        let invariant = label
            .scale_invariant
            .as_ref()
            .map_or(String::new(), |s| format!("  p³/q² = {s}"));
        println!(
            "{:<26} {:<18} lattice {}{invariant}",
            key.to_string(),
            label.tag.to_string(),
            lattice_verdict(&label).verdict
        );
    }
    Ok(())
}
