//! Brute-force recognition of unlabelled permutation graphs.

use matchposet::graph::{is_permutation_graph, LabeledGraph, UnlabeledGraph, RECOGNITION_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("triangle", "n=3; 1-2 1-3 2-3"),
        ("5-cycle", "n=5; 1-2 2-3 3-4 4-5 1-5"),
        ("4-cycle", "n=4; 1-2 2-3 3-4 1-4"),
        ("fork F2, scrambled", "n=6; 1-2 1-3 1-4 4-5 4-6"),
        ("star K1,3", "n=4; 1-2 1-3 1-4"),
    ];
    for (name, text) in graphs {
        let g = UnlabeledGraph::new(text.parse::<LabeledGraph>()?);
        match is_permutation_graph(&g, RECOGNITION_CAP)? {
            Some(p) => println!("{name:<20} inversion graph of {p}"),
            None => println!("{name:<20} not a permutation graph"),
        }
    }
    Ok(())
}
