use matchposet::matching::{
    decompose_intertwined, is_intertwined, matching_cmp, matching_to_word, moves_of_kind,
    word_to_matching, Matching, MoveKind,
};
use matchposet::permutation::all_permutations;
use matchposet::suite::matchings_up_to;
use proptest::prelude::*;

fn perfect_matching(max_pairs: usize) -> impl Strategy<Value = Matching> {
    (1..=max_pairs)
        .prop_flat_map(|k| Just((1..=2 * k as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|vs| Matching::new(vs.chunks(2).map(|c| (c[0], c[1]))).unwrap())
}

fn partial_matching(cap: u32) -> impl Strategy<Value = Matching> {
    (
        Just((1..=cap).collect::<Vec<_>>()).prop_shuffle(),
        0..=cap as usize / 2,
    )
        .prop_map(|(vs, k)| Matching::new(vs.chunks(2).take(k).map(|c| (c[0], c[1]))).unwrap())
}

#[test]
fn word_round_trip_up_to_twelve_vertices() {
    let mut count = 0;
    for n in 1..=6 {
        for p in all_permutations(n) {
            let m = word_to_matching(p.letters()).unwrap();
            assert!(m.is_perfect() && is_intertwined(&m), "{p}: [{m}]");
            assert_eq!(matching_to_word(&m).unwrap(), p.letters());
            assert_eq!(word_to_matching(&matching_to_word(&m).unwrap()).unwrap(), m);
            count += 1;
        }
    }
    assert_eq!(count, 873);
}

#[test]
fn moves_keep_validity_and_supports_grow() {
    for m in matchings_up_to(8) {
        let before = m.support();
        for kind in MoveKind::BASIC {
            for (mv, r) in moves_of_kind(&m, kind, 8).unwrap() {
                assert_eq!(Matching::new(r.edges().iter().copied()).as_ref(), Ok(&r));
                let after = r.support();
                match kind {
                    MoveKind::TypeIa => {
                        assert_eq!(r.len(), m.len() + 1);
                        assert!(before.iter().all(|v| after.contains(v)), "[{m}] {mv}");
                    }
                    MoveKind::TypeIb => {
                        assert_eq!(r.len(), m.len());
                        let gone: Vec<_> = before.iter().filter(|v| !after.contains(v)).collect();
                        let new: Vec<_> = after.iter().filter(|v| !before.contains(v)).collect();
                        assert_eq!((gone.len(), new.len()), (1, 1), "[{m}] {mv}");
                        assert_eq!(*gone[0] + 1, *new[0], "[{m}] {mv}");
                    }
                    _ => {
                        assert_eq!(r.len(), m.len());
                        assert_eq!(before, after, "[{m}] {mv}");
                    }
                }
                assert!(matching_cmp(&m, &r).is_lt(), "[{m}] {mv} -> [{r}]");
            }
        }
    }
}

proptest! {
    #[test]
    fn decompose_partitions_into_intertwined_pieces(m in perfect_matching(8)) {
        let pieces = decompose_intertwined(&m).unwrap();
        let mut edges: Vec<_> = pieces.iter().flat_map(|p| p.edges().to_vec()).collect();
        edges.sort();
        prop_assert_eq!(edges.as_slice(), m.edges());
        for p in &pieces {
            prop_assert!(!p.is_empty());
            prop_assert!(is_intertwined(&p.standardized()), "piece [{}] of [{}]", p, m);
        }
    }

    #[test]
    fn text_and_json_round_trip(m in partial_matching(12)) {
        prop_assert_eq!(m.to_string().parse::<Matching>().unwrap(), m.clone());
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matching>(&json).unwrap(), m);
    }

    #[test]
    fn listed_moves_replay(m in partial_matching(10)) {
        for kind in MoveKind::BASIC {
            for (mv, r) in moves_of_kind(&m, kind, 10).unwrap() {
                prop_assert_eq!(mv.kind(), kind);
                prop_assert_eq!(mv.apply(&m, Some(10)).unwrap(), r);
            }
        }
    }
}
