//! Decide `σ ≤ τ` for permutations and print the witnessing moves.
//!
//! Usage: `cargo run --example compare_permutations -- 2143 34152 [I,II]`

use matchposet::engine::{perm_leq, MoveSet, Outcome, DEFAULT_BUDGET};
use matchposet::permutation::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a: Permutation = args.first().map_or("2143", String::as_str).parse()?;
    let b: Permutation = args.get(1).map_or("34152", String::as_str).parse()?;
    let ms = MoveSet::parse(args.get(2).map_or("I,II", String::as_str))?;

    let report = perm_leq(&a, &b, &ms, DEFAULT_BUDGET);
    match &report.outcome {
        Outcome::Comparable(cert) => {
            println!("{a} <= {b} under {ms}");
            for line in cert.render() {
                println!("{line}");
            }
        }
        Outcome::Incomparable => println!("{a} and {b} are incomparable under {ms}"),
        Outcome::BudgetExceeded => println!("budget exhausted"),
    }
    println!("{} states explored", report.states_explored);
    Ok(())
}
