//! Builtin and user-defined degree weight families, and their validation.
//!
//! $ cargo run --example families

use hooklen::families::{Builtin, DegreeWeightFamily};
use hooklen::gfparse::ParamBinding;
use hooklen::rational::{frac, int};

fn main() {
    let builtins = [
        Builtin::Binary,
        Builtin::Kary(3),
        Builtin::Plane,
        Builtin::Labelled,
        Builtin::Yang {
            s: frac(1, 2),
            m: int(3),
        },
        Builtin::PolyAlpha(int(2)),
    ];
    for b in builtins {
        let (text, _) = b.expression();
        let family = DegreeWeightFamily::builtin(b).unwrap();
        let weights: Vec<String> = family
            .coefficients(5)
            .iter()
            .map(|w| w.to_string())
            .collect();
        println!(
            "{:<14} {:<16} phi_0..phi_5 = {}",
            family.name(),
            text,
            weights.join(", ")
        );
    }

    for text in ["1 - t + t^2", "t + t^2", "1+t"] {
        let family = DegreeWeightFamily::parse_expr(text, ParamBinding::new()).unwrap();
        let report = family.validate(6);
        println!(
            "{text:<14} ok={} degenerate={}",
            report.is_ok(),
            report.is_degenerate()
        );
        for v in &report.violations {
            println!("{:<14} violation: {v}", "");
        }
        for w in &report.warnings {
            println!("{:<14} warning: {w}", "");
        }
    }
}
