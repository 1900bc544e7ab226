//! One-step moves of each kind from a matching, in increasing total order,
//! and a reachability query between matchings.

use matchposet::engine::{matching_leq, MoveSet, DEFAULT_BUDGET};
use matchposet::matching::{moves_of_kind, Matching, MoveKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: Matching = "1-4 2-3".parse()?;
    for kind in MoveKind::BASIC {
        println!("{kind}:");
        for (mv, r) in moves_of_kind(&m, kind, 6)? {
            println!("  {mv:<16} -> {r}");
        }
    }

    let target: Matching = "1-3 2-5 4-6".parse()?;
    let report = matching_leq(&m, &target, &MoveSet::full(), DEFAULT_BUDGET)?;
    println!("\n{m}  vs  {target}");
    match report.outcome.certificate() {
        Some(cert) => cert.render().iter().for_each(|l| println!("{l}")),
        None => println!("{:?}", report.outcome),
    }
    Ok(())
}
