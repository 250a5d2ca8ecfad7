//! Hook weights from a generating function, and generating functions from hook weights.
//!
//! $ cargo run --example hook_rho

use hooklen::families::{Builtin, DegreeWeightFamily};
use hooklen::hookcalc::{self, HookWeightFunction};
use hooklen::rational::int;
use hooklen::series::TruncatedSeries;

fn show(label: &str, rho: &HookWeightFunction) {
    let values: Vec<String> = rho.values().iter().map(|r| r.to_string()).collect();
    println!("{label:<28} {}", values.join(", "));
}

fn main() {
    let binary = DegreeWeightFamily::builtin(Builtin::Binary).unwrap();
    let order = 8;

    // F = z/(1-z): every tree is weighted by a product over hooks.
    let z = TruncatedSeries::identity(order);
    let f = z.div(&TruncatedSeries::one(order).sub(&z)).unwrap();
    show(
        "rho for F = z/(1-z)",
        &hookcalc::rho_from_f(&f, &binary, order).unwrap(),
    );
    show(
        "binary closed form",
        &hookcalc::han_binary_rho(&f, order).unwrap(),
    );

    // The increasing tree series gives rho(n) = 1/n.
    let t = hookcalc::solve_increasing(&binary, order);
    show(
        "rho for increasing trees",
        &hookcalc::rho_from_f(&t, &binary, order).unwrap(),
    );

    // Going back: F from a hook weight table.
    let rho = HookWeightFunction::from_fn("n^2", order, |n| int(n as i64 * n as i64));
    let f = hookcalc::f_from_rho(&rho, &binary, order).unwrap();
    println!("{:<28} {f}", "F for rho(n) = n^2");
    show(
        "recovered rho",
        &hookcalc::rho_from_f(&f, &binary, order).unwrap(),
    );

    // A vanishing denominator is reported, not divided through.
    let degenerate = TruncatedSeries::from_ints(&[0, 0, 1, 0, 0]);
    let err = hookcalc::rho_from_f(&degenerate, &binary, 4).unwrap_err();
    println!("{:<28} {err}", "F = z^2 (rho undefined)");
}
