use matchposet::graph::{
    canonical_form, fork_graph, is_isomorphic, is_subgraph, permutation_graph, LabeledGraph,
    UnlabeledGraph,
};
use matchposet::permutation::Permutation;
use matchposet::suite::{edge_free_insertions, patterns_give_induced_subgraphs};
use proptest::prelude::*;

fn graph(n: usize, bits: u64) -> LabeledGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    LabeledGraph::new(n, edges).unwrap()
}

fn relabel(g: &LabeledGraph, image: &[u32]) -> LabeledGraph {
    let e = g
        .edges()
        .iter()
        .map(|&(i, j)| (image[i as usize - 1], image[j as usize - 1]));
    LabeledGraph::new(g.vertex_count(), e).unwrap()
}

/// Backtracking search for an adjacency-preserving bijection.
fn brute_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    fn extend(a: &LabeledGraph, b: &LabeledGraph, map: &mut Vec<u32>, used: &mut [bool]) -> bool {
        let v = map.len() as u32 + 1;
        if v as usize > a.vertex_count() {
            return true;
        }
        for w in 1..=b.vertex_count() as u32 {
            if used[w as usize] || a.degree(v) != b.degree(w) {
                continue;
            }
            let fits = (1..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u as usize - 1], w));
            if fits {
                used[w as usize] = true;
                map.push(w);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w as usize] = false;
            }
        }
        false
    }
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && extend(
            a,
            b,
            &mut Vec::new(),
            &mut vec![false; b.vertex_count() + 1],
        )
}

fn graph_pair() -> impl Strategy<Value = (LabeledGraph, LabeledGraph)> {
    (1usize..=8)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            let mask = if pairs == 0 { 0 } else { (1u64 << pairs) - 1 };
            (
                Just(n),
                0..=mask,
                Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle(),
                prop::option::of(0..pairs.max(1)),
            )
        })
        .prop_map(|(n, bits, image, toggle)| {
            let g = graph(n, bits);
            let mut h = relabel(&g, &image);
            if let (Some(k), true) = (toggle, n > 1) {
                let mut hb = 0u64;
                let mut idx = 0;
                for i in 1..=n as u32 {
                    for j in i + 1..=n as u32 {
                        if h.has_edge(i, j) {
                            hb |= 1 << idx;
                        }
                        idx += 1;
                    }
                }
                h = graph(n, hb ^ (1 << k));
            }
            (g, h)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn canonical_form_matches_brute_force((g, h) in graph_pair()) {
        let brute = brute_isomorphic(&g, &h);
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), brute, "{} vs {}", g, h);
        prop_assert_eq!(is_isomorphic(&g, &h), brute);
    }

    #[test]
    fn dot_round_trip(n in 1usize..=10, bits in any::<u64>()) {
        let g = graph(n, bits);
        prop_assert_eq!(LabeledGraph::from_dot(&g.to_dot(true)).unwrap(), g.clone());
        prop_assert_eq!(LabeledGraph::from_dot(&g.to_dot(false)).unwrap(), g.clone());
        prop_assert_eq!(g.to_string().parse::<LabeledGraph>().unwrap(), g);
    }
}

#[test]
fn pivot_insertions_add_no_edges_only_at_the_ends() {
    let r = edge_free_insertions(6);
    assert!(r.passed(), "{r}");
    assert!(r.checked > 0);
}

#[test]
fn patterns_give_induced_subgraphs_up_to_six() {
    let r = patterns_give_induced_subgraphs(6);
    assert!(r.passed(), "{r}");
}

#[test]
fn fork_pair_is_not_even_a_subgraph() {
    let small = permutation_graph(&"412563".parse::<Permutation>().unwrap());
    let big = permutation_graph(&"41263785".parse::<Permutation>().unwrap());
    assert!(!is_subgraph(&small, &big).unwrap());
    assert_eq!(UnlabeledGraph::new(big), fork_graph(4).unwrap());
}
