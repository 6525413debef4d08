//! Which `t³ - m t² + n t - 1` have a repeated root? Over a box of integer
//! coefficients only two do.

use lck_lab::classify::double_root_sweep;

fn main() {
    let bound = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);
    for (q, root) in double_root_sweep(bound) {
        println!("m = {:>3}, n = {:>3}: repeated root {root}", q.m, q.n);
    }
}
