//! Check the two Koh–Ree properties on a labelled graph and recover the
//! permutation it encodes.

use matchposet::graph::{koh_ree_check, permutation_from_labeled, LabeledGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        "n=6; 1-4 2-4 3-4 3-5 3-6",
        "n=8; 1-4 2-4 3-4 3-6 5-6 5-7 5-8",
        "n=3; 1-2 2-3",
        "n=3; 1-3",
        "n=4",
    ];
    for text in graphs {
        let g: LabeledGraph = text.parse()?;
        let kr = koh_ree_check(&g);
        print!("{text:<36} P1={} P2={}  ", kr.p1, kr.p2);
        match permutation_from_labeled(&g) {
            Ok(p) => println!("-> {p}"),
            Err(e) => println!("-> {e}"),
        }
    }
    Ok(())
}
