//! Exact truncated power series: arithmetic, exp/log, powers, reversion.
//!
//! $ cargo run --example series_arithmetic

use hooklen::rational::frac;
use hooklen::series::TruncatedSeries;

fn main() {
    let order = 8;
    let z = TruncatedSeries::identity(order);
    let one = TruncatedSeries::one(order);

    let geometric = one.div(&one.sub(&z)).unwrap();
    println!("1/(1-z)        = {geometric}");
    println!("(1/(1-z))^2    = {}", geometric.pow_int(2).unwrap());
    println!(
        "sqrt(1+z)      = {}",
        one.add(&z).pow_rational(&frac(1, 2)).unwrap()
    );

    let e = z.exp().unwrap();
    println!("exp(z)         = {e}");
    println!("log(exp(z))    = {}", e.log().unwrap());

    // z - z^2 has compositional inverse (1 - sqrt(1-4z))/2, the shifted Catalan series.
    let f = z.sub(&z.mul(&z));
    let g = f.revert().unwrap();
    println!("revert(z-z^2)  = {g}");
    println!("f(g(z))        = {}", f.compose(&g).unwrap());

    println!("json           = {}", serde_json::to_string(&g).unwrap());
}
