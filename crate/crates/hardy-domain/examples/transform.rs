//! Hardy transform basics: Sf(x) = (1/x) * integral of f over (0,x).
//!
//! Run with `cargo run --example transform`.

use hardy_domain::funcrep::parse;
use hardy_domain::hardy::hardy_transform;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for expr in ["chi(0,1)", "chi(2,5)", "t^(-0.5) on (0,1)", "(1+t)^(-2) on (0,inf)"] {
        let f = parse::parse(expr)?;
        let t = hardy_transform(&f)?;
        println!("f  = {expr}");
        println!("Sf = {}", parse::pretty(&t.result));
        for x in [0.5, 1.0, 2.0, 10.0] {
            println!("  Sf({x}) = {:.6}", t.result.eval(x));
        }
        println!();
    }

    // The averaging operator never exceeds the running supremum, and for
    // the unit indicator it is exactly min(1, 1/x).
    let s = hardy_transform(&parse::parse("chi(0,1)")?)?.result;
    for x in [0.25, 1.0, 4.0] {
        assert!((s.eval(x) - 1f64.min(1.0 / x)).abs() < 1e-12);
    }
    println!("S chi(0,1) = min(1, 1/x) checked");
    Ok(())
}
