//! Solve T = z * phi(T) for simply generated trees.
//!
//! $ cargo run --example simply_generated

use hooklen::families::{Builtin, DegreeWeightFamily};
use hooklen::hookcalc;
use hooklen::treeoracle::enumerate_trees;

fn main() {
    for b in [
        Builtin::Binary,
        Builtin::Kary(3),
        Builtin::Plane,
        Builtin::Labelled,
    ] {
        let family = DegreeWeightFamily::builtin(b).unwrap();
        let t = hookcalc::solve_simply_generated(&family, 8);
        println!("{:<10} T = {t}", family.name());
    }

    // Plane trees are counted by Catalan numbers; compare with exhaustive enumeration.
    let plane = DegreeWeightFamily::builtin(Builtin::Plane).unwrap();
    let t = hookcalc::solve_simply_generated(&plane, 8);
    for n in 1..=8 {
        println!(
            "n={n} coefficient={} enumerated={}",
            t.coeffs()[n],
            enumerate_trees(n).count()
        );
    }
}
