//! The fork permutations and their pairwise incomparability.

use matchposet::engine::{antichain_check, Items, MoveSet, DEFAULT_BUDGET};
use matchposet::graph::{fork_graph, fork_permutation, permutation_graph, UnlabeledGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut forks = Vec::new();
    for n in 1..=3 {
        let p = fork_permutation(n)?;
        let g = permutation_graph(&p);
        let shape_ok = UnlabeledGraph::new(g.clone()) == fork_graph(2 * n)?;
        println!("n={n}  {p}  {g}  fork-shaped: {shape_ok}");
        forks.push(p);
    }

    let items = Items::Permutations(forks[..2].to_vec());
    let report = antichain_check(&items, &MoveSet::full(), DEFAULT_BUDGET)?;
    for pair in &report.pairs {
        println!(
            "item {} <= item {}: {:?} ({} states)",
            pair.i + 1,
            pair.j + 1,
            pair.result,
            pair.states_explored
        );
    }
    println!("antichain: {:?}", report.is_antichain());
    Ok(())
}
