//! Run the full verification suite from the library API and emit the JSON
//! report.
//!
//! Run with `cargo run --example verification`.

use hardy_domain::verify::{run, to_json, Status, VerifyConfig};

fn main() {
    let cfg = VerifyConfig::default();
    let results = run(&cfg, None);
    for r in &results {
        println!("{} {:14} {}", r.id, r.status.as_str(), r.anchor);
        println!("    {}", r.detail);
    }
    println!("\n{}", to_json(&results));
    let ok = results.iter().all(|r| r.status == Status::Pass);
    std::process::exit(if ok { 0 } else { 1 });
}
