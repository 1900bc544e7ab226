//! Run the exhaustive property checks at chosen sizes.
//!
//! Usage: `cargo run --release --example property_suite -- [max_n] [max_vertices]`

use matchposet::suite::{run_all, SuiteConfig};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("a number"));
    let cfg = SuiteConfig {
        max_n: args.next().unwrap_or(6),
        max_vertices: args.next().unwrap_or(8) as u32,
    };
    let results = run_all(cfg);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!("{} properties, {failed} failed", results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
