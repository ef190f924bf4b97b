//! Norms and membership verdicts across the supported spaces.
//!
//! Run with `cargo run --example norms`.

use hardy_domain::funcrep::parse;
use hardy_domain::spaces::{self, SpaceDescriptor};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse::parse("t^(-0.5) on (0,1)")?;
    for name in ["L1", "Lp:2", "Lpq:2,1", "L1w", "L1+Linf", "Linf"] {
        let x: SpaceDescriptor = name.parse()?;
        match spaces::norm(&x, &f) {
            Ok(n) => println!("||f||_{name} = {n:.6}"),
            Err(e) => println!("||f||_{name}: {e}"),
        }
    }

    // Membership is a tri-state verdict, not a bare boolean: divergence
    // evidence is carried along.
    let x: SpaceDescriptor = "Lp:2".parse()?;
    println!("member: {:?}", spaces::member(&x, &f));

    // The optimal domain [S, X] asks whether S|f| lands in X instead.
    println!("domain member: {:?}", spaces::domain_member(&x, &f));

    // The rearrangement-invariant part asks for S(f*) in X.
    println!("gamma member: {:?}", spaces::gamma_member(&x, &f));
    Ok(())
}
