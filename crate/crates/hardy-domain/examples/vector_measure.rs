//! The indicator vector measure nu(A) = S chi_A and its strong-additivity
//! probes.
//!
//! Run with `cargo run --example vector_measure`.

use hardy_domain::lorentz::ConcavePhi;
use hardy_domain::spaces::SpaceDescriptor;
use hardy_domain::vectmeasure::{nu_norm, strong_additivity_probe, BorelSet, SetGenerator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Dyadic blocks all have the same L-infinity measure norm 1/2.
    let linf: SpaceDescriptor = "Linf".parse()?;
    for n in [0, 5, 20] {
        let block = BorelSet::parse(&format!("[{},{})", 2f64.powi(n), 2f64.powi(n + 1)))?;
        println!("||nu([2^{n}, 2^{}))||_Linf = {}", n + 1, nu_norm(&linf, &block)?.norm);
    }

    // Far tails never fade in L1+Linf: the norm of nu([k, inf)) stays 1,
    // so nu is not strongly additive there.
    let l1linf: SpaceDescriptor = "L1+Linf".parse()?;
    for k in [1, 5, 10] {
        let tail = BorelSet::parse(&format!("[{k},inf)"))?;
        println!("||nu([{k},inf))||_L1+Linf = {}", nu_norm(&l1linf, &tail)?.norm);
    }

    // In Lambda_sqrt the geometric blocks [j, j+2^-j) vanish quickly.
    let lam = SpaceDescriptor::LambdaPhi(ConcavePhi::sqrt());
    let probe = strong_additivity_probe(&lam, SetGenerator::Geometric, 15)?;
    for (i, t) in probe.tail_norms.iter().enumerate() {
        println!("tail {} -> {t:.3e}", i + 1);
    }
    println!("trend: {:?}", probe.trend);
    Ok(())
}
