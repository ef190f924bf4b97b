//! Distribution functions and decreasing rearrangements.
//!
//! Run with `cargo run --example rearrangement`.

use hardy_domain::funcrep::parse;
use hardy_domain::rearrange::{check_equimeasurable, distribution, rearrangement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A two-bump function: its rearrangement stacks the bumps by height.
    let f = parse::parse("chi(1,2) + 2 on (4,5) + chi(7,9)")?;
    let d = distribution(&f)?;
    println!("lambda(0.5) = {}  (total support)", d.eval(0.5));
    println!("lambda(1.5) = {}  (only the tall bump)", d.eval(1.5));

    let fstar = rearrangement(&f)?;
    for t in [0.5, 1.5, 2.5, 4.5] {
        println!("f*({t}) = {}", fstar.eval(t));
    }

    // Equimeasurability: f and f* share every super-level measure. Levels
    // sit between the step heights; at a height itself the super-level set
    // is a jump point of lambda and numerically knife-edged.
    let levels: Vec<f64> = (0..20).map(|k| k as f64 * 0.1 + 0.05).collect();
    assert!(check_equimeasurable(&f, &fstar, &levels, 1e-9)?);
    println!("f and f* equimeasurable at {} levels", levels.len());

    // A decreasing function is its own rearrangement up to translation of
    // the support to the origin.
    let g = parse::parse("t^(-0.5) on (0,1)")?;
    let gstar = rearrangement(&g)?;
    for t in [0.1, 0.5, 0.9] {
        assert!((g.eval(t) - gstar.eval(t)).abs() < 1e-9);
    }
    println!("decreasing g equals g*");
    Ok(())
}
