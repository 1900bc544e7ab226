//! Exhaustive small-case property checks.
//!
//! Each check enumerates every object up to a size bound and counts
//! violations. Results are independent of thread count.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{matching_leq, perm_leq, MoveSet, DEFAULT_BUDGET};
use crate::graph::{
    connected_pairs, fork_graph, fork_permutation, has_cycle, is_induced_subgraph, koh_ree_check,
    permutation_from_labeled, permutation_graph, UnlabeledGraph,
};
use crate::matching::{matching_cmp, moves_of_kind, word_to_matching, Matching, MoveKind, Vertex};
use crate::permutation::{
    all_permutations, bruhat_closure_leq, contains_pattern, insertion_moves, swap_moves, PermMove,
    Permutation, Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest permutation length for the per-permutation checks.
    pub max_n: usize,
    /// Largest vertex used when enumerating matchings.
    pub max_vertices: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 7,
            max_vertices: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(
            f,
            "{status:<4} {:<28} checked {:>7}  violations {}",
            self.name, self.checked, self.violations
        )?;
        if let Some(v) = &self.first_violation {
            write!(f, "  first: {v}")?;
        }
        Ok(())
    }
}

/// Runs `check` over every item in parallel; `check` returns the number of
/// sub-cases inspected and the first failing case, if any.
fn tally<T: Sync>(
    name: &'static str,
    items: &[T],
    check: impl Fn(&T) -> (usize, Vec<String>) + Sync + Send,
) -> PropertyResult {
    let per_item: Vec<(usize, Vec<String>)> = items.par_iter().map(&check).collect();
    let checked = per_item.iter().map(|x| x.0).sum();
    let failures: Vec<String> = per_item.into_iter().flat_map(|x| x.1).collect();
    PropertyResult {
        name,
        checked,
        violations: failures.len(),
        first_violation: failures.into_iter().next(),
    }
}

pub fn permutations_up_to(max_n: usize) -> Vec<Permutation> {
    (1..=max_n).flat_map(all_permutations).collect()
}

/// Every matching whose vertices lie in `1..=max_vertex`.
pub fn matchings_up_to(max_vertex: Vertex) -> Vec<Matching> {
    fn go(
        v: Vertex,
        max: Vertex,
        used: &mut Vec<bool>,
        edges: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Matching>,
    ) {
        if v > max {
            out.push(Matching::new(edges.iter().copied()).unwrap());
            return;
        }
        if used[v as usize] {
            return go(v + 1, max, used, edges, out);
        }
        // v unmatched
        go(v + 1, max, used, edges, out);
        for u in v + 1..=max {
            if !used[u as usize] {
                used[u as usize] = true;
                edges.push((v, u));
                go(v + 1, max, used, edges, out);
                edges.pop();
                used[u as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        1,
        max_vertex,
        &mut vec![false; max_vertex as usize + 2],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Intertwined perfect matchings whose words have length `1..=max_len`.
pub fn intertwined_up_to(max_len: usize) -> Vec<Matching> {
    permutations_up_to(max_len)
        .iter()
        .map(|p| word_to_matching(p.letters()).unwrap())
        .collect()
}

/// Image of an old value after inserting `value`.
fn relabel(x: u32, value: u32) -> u32 {
    if x >= value {
        x + 1
    } else {
        x
    }
}

/// Every Type II swap strictly adds inversion-graph edges.
pub fn swaps_add_edges(max_n: usize) -> PropertyResult {
    tally("swap-adds-edges", &permutations_up_to(max_n), |p| {
        let g = permutation_graph(p);
        let swaps = swap_moves(p);
        let bad = swaps
            .iter()
            .filter(|(_, q)| {
                let h = permutation_graph(q);
                h.vertex_count() != g.vertex_count() || h.edge_count() <= g.edge_count()
            })
            .map(|(m, q)| format!("{p} {m} -> {q}"))
            .collect();
        (swaps.len(), bad)
    })
}

/// A cycle in the inversion graph survives every swap and insertion.
pub fn cycles_persist(max_n: usize) -> PropertyResult {
    tally("cycles-persist", &permutations_up_to(max_n), |p| {
        if !has_cycle(&permutation_graph(p)) {
            return (0, Vec::new());
        }
        let succ: Vec<(PermMove, Permutation)> = swap_moves(p)
            .into_iter()
            .chain(insertion_moves(p))
            .collect();
        let bad = succ
            .iter()
            .filter(|(_, q)| !has_cycle(&permutation_graph(q)))
            .map(|(m, q)| format!("{p} {m} -> {q}"))
            .collect();
        (succ.len(), bad)
    })
}

/// Vertices sharing a component still share one after any swap (values
/// fixed) or insertion (values relabeled).
pub fn components_persist(max_n: usize) -> PropertyResult {
    tally("components-persist", &permutations_up_to(max_n), |p| {
        let comps = connected_pairs(&permutation_graph(p));
        let succ: Vec<(PermMove, Permutation)> = swap_moves(p)
            .into_iter()
            .chain(insertion_moves(p))
            .collect();
        let mut bad = Vec::new();
        for (m, q) in &succ {
            let after = connected_pairs(&permutation_graph(q));
            let mut comp_of = vec![usize::MAX; q.len() + 1];
            for (id, c) in after.iter().enumerate() {
                for &v in c {
                    comp_of[v as usize] = id;
                }
            }
            let image = |x: u32| match m {
                PermMove::Insert { value, .. } => relabel(x, *value),
                _ => x,
            };
            let split = comps.iter().any(|c| {
                c.iter()
                    .any(|&x| comp_of[image(x) as usize] != comp_of[image(c[0]) as usize])
            });
            if split {
                bad.push(format!("{p} {m} -> {q}"));
            }
        }
        (succ.len(), bad)
    })
}

/// A swap of two values already in one component creates a cycle.
pub fn same_component_swaps_cycle(max_n: usize) -> PropertyResult {
    tally(
        "same-component-swap-cycles",
        &permutations_up_to(max_n),
        |p| {
            let comps = connected_pairs(&permutation_graph(p));
            let together = |a: u32, b: u32| comps.iter().any(|c| c.contains(&a) && c.contains(&b));
            let mut checked = 0;
            let mut bad = Vec::new();
            for (m, q) in swap_moves(p) {
                let PermMove::Swap { low, high } = m else {
                    unreachable!()
                };
                if together(low, high) {
                    checked += 1;
                    if !has_cycle(&permutation_graph(&q)) {
                        bad.push(format!("{p} {m} -> {q}"));
                    }
                }
            }
            (checked, bad)
        },
    )
}

/// Inversion graphs satisfy P1 and P2 and give back their permutation.
pub fn koh_ree_round_trip(max_n: usize) -> PropertyResult {
    tally("koh-ree-round-trip", &permutations_up_to(max_n), |p| {
        let g = permutation_graph(p);
        let ok = koh_ree_check(&g).holds() && permutation_from_labeled(&g).as_ref() == Ok(p);
        (1, if ok { Vec::new() } else { vec![p.to_string()] })
    })
}

/// For connected inversion graphs, the only insertions that create an
/// isolated vertex put a new minimum first or a new maximum last.
pub fn edge_free_insertions(max_n: usize) -> PropertyResult {
    tally("edge-free-insertions", &permutations_up_to(max_n), |p| {
        let g = permutation_graph(p);
        if connected_pairs(&g).len() != 1 {
            return (0, Vec::new());
        }
        let n = p.len();
        let mut checked = 0;
        let mut bad = Vec::new();
        for position in 1..=n + 1 {
            for value in 1..=n as u32 + 1 {
                let m = PermMove::Insert { value, position };
                let q = m.apply(p, &[]).unwrap();
                checked += 1;
                let h = permutation_graph(&q);
                let isolated = h.degree(value) == 0;
                let extreme =
                    (value == 1 && position == 1) || (value as usize == n + 1 && position == n + 1);
                if isolated != extreme {
                    bad.push(format!("{p} {m} -> {q}"));
                }
            }
        }
        (checked, bad)
    })
}

/// Every single move strictly increases the lex total order on matchings.
pub fn moves_increase_order(max_vertices: Vertex) -> PropertyResult {
    tally(
        "order-monotone-moves",
        &matchings_up_to(max_vertices),
        |m| {
            let mut checked = 0;
            let mut bad = Vec::new();
            for kind in MoveKind::BASIC {
                for (mv, r) in moves_of_kind(m, kind, max_vertices).unwrap() {
                    checked += 1;
                    let support_ok = {
                        let (s, t) = (m.support(), r.support());
                        let mut it = t.iter();
                        s.iter().all(|&x| it.any(|&y| y >= x))
                    };
                    let edges_ok = if kind == MoveKind::TypeIa {
                        r.len() == m.len() + 1
                    } else {
                        r.len() == m.len()
                    };
                    if matching_cmp(m, &r).is_ge() || !support_ok || !edges_ok {
                        bad.push(format!("[{m}] {mv} -> [{r}]"));
                    }
                }
            }
            (checked, bad)
        },
    )
}

/// Pattern containment implies the induced-subgraph relation on graphs.
pub fn patterns_give_induced_subgraphs(max_n: usize) -> PropertyResult {
    let perms = permutations_up_to(max_n);
    tally("pattern-induced-subgraph", &perms, |big| {
        let g = permutation_graph(big);
        let mut checked = 0;
        let mut bad = Vec::new();
        for small in perms.iter().filter(|s| s.len() <= big.len()) {
            if big.contains(small) {
                checked += 1;
                if !is_induced_subgraph(&permutation_graph(small), &g).unwrap() {
                    bad.push(format!("{small} in {big}"));
                }
            }
        }
        (checked, bad)
    })
}

/// Matching-side reachability agrees with permutation-side reachability on
/// intertwined matchings.
pub fn matching_perm_agreement(max_small: usize, max_big: usize) -> PropertyResult {
    let smalls = intertwined_up_to(max_small);
    let bigs = intertwined_up_to(max_big);
    let ms = MoveSet::full();
    tally("matching-perm-agreement", &smalls, |a| {
        let pa = Permutation::new(crate::matching::matching_to_word(a).unwrap()).unwrap();
        let mut bad = Vec::new();
        for b in &bigs {
            let pb = Permutation::new(crate::matching::matching_to_word(b).unwrap()).unwrap();
            let lhs = matching_leq(a, b, &ms, DEFAULT_BUDGET)
                .unwrap()
                .outcome
                .is_comparable();
            let rhs = perm_leq(&pa, &pb, &ms, DEFAULT_BUDGET)
                .outcome
                .is_comparable();
            if lhs != rhs {
                bad.push(format!("[{a}] vs [{b}]: matching {lhs}, permutation {rhs}"));
            }
        }
        (bigs.len(), bad)
    })
}

/// With Type I moves only, matching reachability is constrained pattern
/// containment of the words.
pub fn type_one_pattern_agreement(max_small: usize, max_big: usize) -> PropertyResult {
    let smalls = intertwined_up_to(max_small);
    let bigs = intertwined_up_to(max_big);
    let ms = MoveSet::type_one();
    tally("type-one-pattern-agreement", &smalls, |a| {
        let wa = Word::new(crate::matching::matching_to_word(a).unwrap()).unwrap();
        let mut bad = Vec::new();
        for b in &bigs {
            let wb = Word::new(crate::matching::matching_to_word(b).unwrap()).unwrap();
            let lhs = matching_leq(a, b, &ms, DEFAULT_BUDGET)
                .unwrap()
                .outcome
                .is_comparable();
            let rhs = contains_pattern(&wa, &wb);
            if lhs != rhs {
                bad.push(format!("[{a}] vs [{b}]: matching {lhs}, pattern {rhs}"));
            }
        }
        (bigs.len(), bad)
    })
}

/// Same-length comparability under Type I and II implies Bruhat closure.
pub fn bruhat_refinement(max_n: usize) -> PropertyResult {
    let perms = permutations_up_to(max_n);
    let ms = MoveSet::full();
    tally("bruhat-refinement", &perms, |a| {
        let mut checked = 0;
        let mut bad = Vec::new();
        for b in perms.iter().filter(|b| b.len() == a.len()) {
            checked += 1;
            if perm_leq(a, b, &ms, DEFAULT_BUDGET).outcome.is_comparable()
                && !bruhat_closure_leq(a, b).unwrap()
            {
                bad.push(format!("{a} <= {b}"));
            }
        }
        (checked, bad)
    })
}

/// Fork permutations have fork-shaped inversion graphs.
pub fn fork_labeling(max_fork: usize) -> PropertyResult {
    let ns: Vec<usize> = (1..=max_fork).collect();
    tally("fork-labeling", &ns, |&n| {
        let ok = fork_permutation(n)
            .map(|p| UnlabeledGraph::new(permutation_graph(&p)) == fork_graph(2 * n).unwrap())
            .unwrap_or(false);
        (
            1,
            if ok {
                Vec::new()
            } else {
                vec![format!("n={n}")]
            },
        )
    })
}

/// Runs every property at the configured sizes.
pub fn run_all(cfg: SuiteConfig) -> Vec<PropertyResult> {
    let n = cfg.max_n;
    vec![
        swaps_add_edges(n),
        cycles_persist(n),
        components_persist(n),
        same_component_swaps_cycle(n),
        koh_ree_round_trip(n),
        edge_free_insertions(n.min(6)),
        patterns_give_induced_subgraphs(n.min(6)),
        moves_increase_order(cfg.max_vertices),
        matching_perm_agreement(n.min(3), n.min(4)),
        type_one_pattern_agreement(n.min(3), n.min(4)),
        bruhat_refinement(n.min(5)),
        fork_labeling(10),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts_are_telephone_numbers() {
        let counts: Vec<usize> = (1..=8).map(|v| matchings_up_to(v).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn small_suite_passes() {
        for r in run_all(SuiteConfig {
            max_n: 5,
            max_vertices: 6,
        }) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn intertwined_counts() {
        assert_eq!(intertwined_up_to(3).len(), 9);
        assert_eq!(intertwined_up_to(4).len(), 33);
    }
}
