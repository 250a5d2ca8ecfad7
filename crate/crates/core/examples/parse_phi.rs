//! Parse degree weight generating functions written in `t`, with parameters.
//!
//! $ cargo run --example parse_phi

use hooklen::gfparse::{self, binding};
use hooklen::rational::{frac, int};

fn main() {
    let inputs = [
        "(1+t)^2",
        "1/(1-t)",
        "exp(t)",
        "(1 + s*t)^m",
        "(1-t)^(-1/2)",
        "4*(1+t/3)^(1/2)",
    ];
    let params = binding([("s", frac(1, 2)), ("m", int(3))]);
    for text in inputs {
        let expr = gfparse::parse(text).unwrap();
        let series = expr.evaluate(&params, 6).unwrap();
        println!("{text:<18} parsed as {expr}");
        println!("{:<18} = {series}", "");
    }

    for bad in ["(1+t", "sin(t)", "t^t", "1/(t-t)"] {
        match gfparse::parse(bad) {
            Err(e) => println!("{bad:<18} parse error: {e}"),
            Ok(expr) => match expr.evaluate(&params, 6) {
                Err(e) => println!("{bad:<18} evaluation error: {e}"),
                Ok(s) => println!("{bad:<18} = {s}"),
            },
        }
    }
}
