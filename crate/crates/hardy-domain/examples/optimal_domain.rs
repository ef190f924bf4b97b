//! Weight conditions and identification of the optimal domain of a
//! Lorentz space Lambda_phi.
//!
//! Run with `cargo run --example optimal_domain`.

use hardy_domain::construct;
use hardy_domain::lorentz::{self, ConcavePhi};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // phi(t) = t^(1/2): theta(y) = y^(-1/2), both boundedness conditions
    // hold and the optimal domain is the weighted L1 space.
    let phi = ConcavePhi::sqrt();
    println!("theta(1) = {}", phi.theta(1.0));
    let d = lorentz::identify_domain(&phi);
    println!("t*theta <= C*phi: {:?} (C = {:.4})", d.thetax.holds, d.thetax.best_constant);
    println!(
        "phi <= C*t*theta: {:?} (C = {:.4})",
        d.theta_condition.holds, d.theta_condition.best_constant
    );
    println!("identified: {:?}", d.identified_weight);

    // The sandwich holding for every f pins the identification:
    //   int |f| theta <= ||S|f|||_Lambda <= int |f| (theta + phi/t).
    let f = construct::f_alpha(-0.5)?;
    let (lower, middle, upper) = lorentz::domain_sandwich(&phi, &f)?;
    println!("sandwich: {lower:.6} <= {middle:.6} <= {upper:.6}");
    let slack = 1e-6 * middle;
    assert!(lower <= middle + slack && middle <= upper + slack);

    // phi(t) = min(1,t) fails the first condition: theta(y) = log(1/y)
    // near 0 outruns phi/t, so the domain is strictly larger than the
    // weighted L1 heuristic suggests.
    let m = lorentz::check_phi_constant(&ConcavePhi::min1t());
    println!("min1t phi-condition: {:?}, projected ratio {:?}", m.holds, m.projected_bound);
    Ok(())
}
