//! Check the hook weight identity by summing over every ordered tree of each size.
//!
//! $ cargo run --example certify

use hooklen::families::{Builtin, DegreeWeightFamily};
use hooklen::hookcalc::{self, HookWeightFunction};
use hooklen::rational::frac;
use hooklen::treeoracle;

fn main() {
    let max_n = 7;
    let rho = HookWeightFunction::from_fn("1/(n+1)", max_n, |n| frac(1, n as i64 + 1));
    for b in [
        Builtin::Binary,
        Builtin::Kary(3),
        Builtin::Plane,
        Builtin::Labelled,
    ] {
        let phi = DegreeWeightFamily::builtin(b).unwrap();
        let f = hookcalc::f_from_rho(&rho, &phi, max_n).unwrap();
        println!("{}", phi.name());
        for n in 1..=max_n {
            let lhs = treeoracle::weighted_sum(n, &phi, &rho).unwrap();
            let rhs = &f.coeffs()[n];
            let verdict = if lhs == *rhs { "equal" } else { "MISMATCH" };
            println!(
                "  n={n} trees={:<4} sum={lhs:<12} coefficient={rhs:<12} {verdict}",
                treeoracle::enumerate_trees(n).count()
            );
        }
    }
}
