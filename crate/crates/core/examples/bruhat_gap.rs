//! Pairs related by the Bruhat swap closure but not by Type I/II moves.

use matchposet::engine::{perm_leq, MoveSet, DEFAULT_BUDGET};
use matchposet::permutation::{all_permutations, bruhat_closure_leq};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ms = MoveSet::full();
    for n in 2..=4 {
        let perms: Vec<_> = all_permutations(n).collect();
        let (mut both, mut bruhat_only) = (0, Vec::new());
        for a in &perms {
            for b in &perms {
                if !bruhat_closure_leq(a, b)? {
                    continue;
                }
                if perm_leq(a, b, &ms, DEFAULT_BUDGET).outcome.is_comparable() {
                    both += 1;
                } else {
                    bruhat_only.push(format!("{a}<{b}"));
                }
            }
        }
        println!(
            "n={n}: {both} pairs in both orders, {} Bruhat only",
            bruhat_only.len()
        );
        println!(
            "  e.g. {}",
            bruhat_only
                .iter()
                .take(6)
                .cloned()
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(())
}
