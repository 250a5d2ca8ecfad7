//! Solve T' = phi(T) for increasing trees, including the polynomial alpha family.
//!
//! $ cargo run --example increasing_trees

use hooklen::families::{Builtin, DegreeWeightFamily};
use hooklen::hookcalc;
use hooklen::rational::{frac, int};

fn main() {
    for b in [Builtin::Binary, Builtin::Plane, Builtin::Labelled] {
        let family = DegreeWeightFamily::builtin(b).unwrap();
        let counts = hookcalc::solve_increasing(&family, 8).egf_counts();
        let counts: Vec<String> = counts.iter().skip(1).map(|c| c.to_string()).collect();
        println!("{:<10} counts = {}", family.name(), counts.join(", "));
    }

    for alpha in [int(1), int(2), frac(1, 2)] {
        let phi = hookcalc::alpha_family(&alpha).unwrap();
        let solved = hookcalc::solve_increasing(&phi, 8);
        let closed = hookcalc::alpha_family_t(&alpha, 8).unwrap();
        let tn: Vec<String> = (1..=8)
            .map(|n| hookcalc::alpha_family_tn(&alpha, n).unwrap().to_string())
            .collect();
        println!(
            "alpha={alpha}: ODE solution matches closed form: {}",
            solved == closed
        );
        println!("         T_n = {}", tn.join(", "));
        let rho = hookcalc::rho_from_f(&closed, &phi, 8).unwrap();
        let rho: Vec<String> = rho.values().iter().map(|r| r.to_string()).collect();
        println!("         rho = {}", rho.join(", "));
    }
}
