//! The counterexample families: endpoint behaviour of the optimal domain.
//!
//! Run with `cargo run --example counterexamples`.

use hardy_domain::construct;
use hardy_domain::spaces::{self, SpaceDescriptor};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l2: SpaceDescriptor = "Lp:2".parse()?;

    // f(t) = (1-t)^(-1/2) is not in L2 but its transform is: membership in
    // the optimal domain [S, L2] does not imply membership in L2. The
    // rearranged f* = t^(-1/2) fails even the domain, so [S, L2] is not
    // rearrangement invariant.
    let f = construct::f_alpha(-0.5)?;
    println!("f in L2:          {:?}", spaces::member(&l2, &f));
    println!("f in [S,L2]:      {:?}", spaces::domain_member(&l2, &f));
    println!("f* in [S,L2]:     {:?}", spaces::gamma_member(&l2, &f));

    // A translate of an L1+Linf borderline function: f is in the optimal
    // domain of L1+Linf while S(f*) falls out of the space.
    let l1linf: SpaceDescriptor = "L1+Linf".parse()?;
    let (_, f) = construct::l1linf_pair();
    println!("translate in domain: {:?}", spaces::domain_member(&l1linf, &f));
    println!("translate in gamma:  {:?}", spaces::gamma_member(&l1linf, &f));

    // The doubling construction: g with S g in L2 whose materialized prefix
    // is honest about float limits, while the exact bridge masses show the
    // full g escapes L1+Linf entirely.
    let art = construct::noesri_construct(&l2, &construct::noesri_f1(), 10)?;
    println!("bridge copies in float prefix: {}", art.prefix_windows);
    println!("g prefix in [S,L2]: {:?}", spaces::domain_member(&l2, &art.g_prefix));
    println!("full g vs L1+Linf:  {:?}", art.l1linf_verdict());

    // t^(-1/2)/(1+|log t|) separates the Lorentz scale second index.
    let w = construct::lpq_witness(2.0, 2.0)?;
    println!("witness in L(2,2): {:?}", spaces::member(&"Lpq:2,2".parse()?, &w));
    println!("witness in L(2,1): {:?}", spaces::member(&"Lpq:2,1".parse()?, &w));
    Ok(())
}
