use matchposet::engine::{
    matching_leq, perm_leq, verify_certificate, Certificate, MoveSet, Outcome, SearchReport,
};
use matchposet::matching::Matching;
use matchposet::permutation::{PermMove, Permutation};
use proptest::prelude::*;

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn matching(cap: u32) -> impl Strategy<Value = Matching> {
    (
        Just((1..=cap).collect::<Vec<_>>()).prop_shuffle(),
        0..=cap as usize / 2,
    )
        .prop_map(|(vs, k)| Matching::new(vs.chunks(2).take(k).map(|c| (c[0], c[1]))).unwrap())
}

fn check_report(r: &SearchReport, budget: usize) -> Result<(), TestCaseError> {
    prop_assert!(!matches!(r.outcome, Outcome::BudgetExceeded));
    prop_assert!(r.states_explored <= budget);
    if let Outcome::Comparable(c) = &r.outcome {
        prop_assert!(verify_certificate(c).is_ok());
        let json = r.to_json();
        prop_assert_eq!(&Certificate::from_document(&json).unwrap(), c);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn permutation_answers_verify_and_are_budget_stable(
        a in permutation(4),
        b in permutation(6),
        spec in prop::sample::select(vec!["I", "II", "I,II", "I,II,x:231-312"]),
    ) {
        let ms = MoveSet::parse(spec).unwrap();
        let r = perm_leq(&a, &b, &ms, 100_000);
        check_report(&r, 100_000)?;
        let again = perm_leq(&a, &b, &ms, 200_000);
        prop_assert_eq!(r.outcome, again.outcome);
    }

    #[test]
    fn matching_answers_verify_and_are_budget_stable(
        a in matching(6),
        b in matching(7),
        spec in prop::sample::select(vec!["Ia,Ib", "IIa,IIb", "I,II", "Ib,IIa"]),
    ) {
        let ms = MoveSet::parse(spec).unwrap();
        let r = matching_leq(&a, &b, &ms, 100_000).unwrap();
        check_report(&r, 100_000)?;
        let again = matching_leq(&a, &b, &ms, 200_000).unwrap();
        prop_assert_eq!(r.outcome, again.outcome);
    }

    #[test]
    fn insertions_alone_give_equality_at_equal_length(a in permutation(5), b in permutation(5)) {
        prop_assume!(a.len() == b.len());
        let r = perm_leq(&a, &b, &MoveSet::parse("I").unwrap(), 100_000);
        prop_assert_eq!(r.outcome.is_comparable(), a == b);
    }

    #[test]
    fn swap_certificates_raise_inversions(a in permutation(6), b in permutation(6)) {
        let r = perm_leq(&a, &b, &MoveSet::parse("II").unwrap(), 100_000);
        if a.len() != b.len() {
            prop_assert!(!r.outcome.is_comparable());
        }
        if let Outcome::Comparable(Certificate::Permutation { start, steps, .. }) = &r.outcome {
            let mut cur = start.clone();
            for s in steps {
                prop_assert!(matches!(s, PermMove::Swap { .. }), "{}", s);
                let next = s.apply(&cur, &[]).unwrap();
                prop_assert_eq!(next.len(), cur.len());
                prop_assert!(next.inversion_count() > cur.inversion_count());
                cur = next;
            }
        }
    }
}

#[test]
fn tampered_certificate_names_the_bad_step() {
    let a: Permutation = "2143".parse().unwrap();
    let b: Permutation = "34152".parse().unwrap();
    let r = perm_leq(&a, &b, &MoveSet::parse("I,II").unwrap(), 1_000);
    let Outcome::Comparable(Certificate::Permutation {
        start,
        mut steps,
        rules,
        end,
    }) = r.outcome
    else {
        panic!("expected a certificate");
    };
    steps[0] = PermMove::Swap { low: 1, high: 2 };
    let bad = Certificate::Permutation {
        start,
        steps,
        rules,
        end,
    };
    assert_eq!(verify_certificate(&bad).unwrap_err().step(), Some(1));
}

#[test]
fn tiny_budget_is_reported_as_such() {
    let a: Permutation = "412563".parse().unwrap();
    let b: Permutation = "41263785".parse().unwrap();
    let r = perm_leq(&a, &b, &MoveSet::parse("I,II").unwrap(), 50);
    assert_eq!(r.outcome, Outcome::BudgetExceeded);
    assert_eq!(r.to_json()["comparable"], "budget");
}
