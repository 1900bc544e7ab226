//! Adding the rewrite 231 -> 312 makes the first two fork permutations
//! comparable.

use matchposet::engine::{perm_leq, MoveSet, DEFAULT_BUDGET};
use matchposet::graph::{fork_permutation, permutation_graph};
use matchposet::permutation::{extended_rewrites, RewriteRule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (a, b) = (fork_permutation(1)?, fork_permutation(2)?);
    let rule: RewriteRule = "231-312".parse()?;

    for q in extended_rewrites(&a, std::slice::from_ref(&rule)) {
        println!("{a} -> {q}  graph {}", permutation_graph(&q));
    }

    for spec in ["I,II", "I,II,x:231-312"] {
        let report = perm_leq(&a, &b, &MoveSet::parse(spec)?, DEFAULT_BUDGET);
        println!("\n{spec}: {} states", report.states_explored);
        match report.outcome.certificate() {
            Some(cert) => cert.render().iter().for_each(|l| println!("{l}")),
            None => println!("{a} and {b} incomparable"),
        }
    }
    Ok(())
}
