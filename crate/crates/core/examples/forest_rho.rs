//! Hook weights from the forest generating function G = phi(F).
//!
//! $ cargo run --example forest_rho

use hooklen::families::{Builtin, DegreeWeightFamily};
use hooklen::hookcalc;
use hooklen::series::TruncatedSeries;

fn main() {
    let order = 8;
    let z = TruncatedSeries::identity(order);
    let one = TruncatedSeries::one(order);
    for b in [Builtin::Plane, Builtin::Labelled] {
        let phi = DegreeWeightFamily::builtin(b).unwrap();
        // Pick F = z e^z, then present only G to the forest formula.
        let f = z.mul(&z.exp().unwrap());
        let g = phi.compose(&f);
        let forest = hookcalc::rho_forest(&g, &phi, order).unwrap();
        let tree = hookcalc::rho_from_f(&f, &phi, order).unwrap();
        let values: Vec<String> = forest.values().iter().map(|r| r.to_string()).collect();
        println!("{:<10} G = {g}", phi.name());
        println!(
            "{:<10} rho = {}  (agrees with tree form: {})",
            "",
            values.join(", "),
            forest.values() == tree.values()
        );
        let inverse = phi.series(order).sub(&one).revert().unwrap();
        println!("{:<10} inverse of phi - 1 = {inverse}", "");
    }
}
