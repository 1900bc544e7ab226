use std::collections::HashSet;

use matchposet::permutation::{
    all_permutations, contains_pattern, extended_rewrites, insertions, reduce, type2_swaps,
    Permutation, RewriteRule, Word,
};
use proptest::prelude::*;

fn up_to(n: usize) -> Vec<Permutation> {
    (1..=n).flat_map(all_permutations).collect()
}

fn word(p: &Permutation) -> Word {
    Word::new(p.letters().to_vec()).unwrap()
}

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

#[test]
fn pointwise_constraint_is_vacuous_on_permutations() {
    let perms = up_to(6);
    for big in &perms {
        for small in perms.iter().filter(|s| s.len() <= big.len()) {
            assert_eq!(
                contains_pattern(&word(small), &word(big)),
                big.contains(small),
                "{small} in {big}"
            );
        }
    }
}

#[test]
fn insertion_closure_is_containment() {
    let perms = up_to(6);
    for small in &perms {
        let mut reach: HashSet<Permutation> = HashSet::from([small.clone()]);
        let mut frontier = vec![small.clone()];
        while let Some(p) = frontier.pop() {
            if p.len() == 6 {
                continue;
            }
            for q in insertions(&p) {
                if reach.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        for big in &perms {
            assert_eq!(
                reach.contains(big),
                contains_pattern(&word(small), &word(big)),
                "{small} in {big}"
            );
        }
    }
}

#[test]
fn swaps_add_inversions_and_reduce_is_idempotent() {
    for p in up_to(7) {
        assert_eq!(reduce(&word(&p)), p);
        for q in type2_swaps(&p) {
            assert_eq!(q.len(), p.len());
            assert!(q.inversion_count() > p.inversion_count(), "{p} -> {q}");
        }
    }
}

#[test]
fn rewrites_preserve_length() {
    let rule: RewriteRule = "231-312".parse().unwrap();
    let rules = [rule];
    for p in up_to(7) {
        for q in extended_rewrites(&p, &rules) {
            assert_eq!(q.len(), p.len(), "{p} -> {q}");
            assert_ne!(q, p);
        }
    }
}

proptest! {
    #[test]
    fn text_round_trip(p in permutation(14)) {
        let s = p.to_string();
        prop_assert_eq!(s.contains(','), p.len() > 9);
        prop_assert_eq!(s.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn insertions_lengthen_by_one_and_keep_the_pattern(p in permutation(7)) {
        let ins = insertions(&p);
        prop_assert!(ins.len() <= (p.len() + 1) * (p.len() + 1));
        for q in ins {
            prop_assert_eq!(q.len(), p.len() + 1);
            prop_assert!(q.contains(&p));
        }
    }
}
