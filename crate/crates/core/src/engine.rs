//! Reachability deciders with replayable certificates.
//!
//! Both deciders run a breadth-first search with a visited set over a finite
//! universe, so termination never depends on the moves being monotone.
//! Successors are explored in a fixed canonical order and the first path
//! found is returned, which makes certificates deterministic.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::matching::{matching_cmp, moves_of_kind, Matching, MatchingMove, MoveKind, Vertex};
use crate::permutation::{
    insertion_moves, rewrite_moves, swap_moves, PermMove, Permutation, RewriteRule,
};

/// Default cap on the number of distinct states a single query may visit.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("move set is empty")]
    EmptyMoveSet,
    #[error("unknown move kind {0:?}")]
    UnknownMove(String),
    #[error("bad rewrite rule {0:?}")]
    BadRule(String),
    #[error("extended rewrite rules are only valid on permutations")]
    RulesOnMatchings,
    #[error("{0:?} is not a basic move kind")]
    NotBasic(MoveKind),
    #[error("malformed certificate document: {0}")]
    Document(String),
}

/// Which moves a reachability query may use.
///
/// On matchings the four basic kinds apply directly. On permutations Type I
/// becomes single-letter insertion, Type II(a) becomes the Type II swap, and
/// the extended rewrite rules apply. Type II(b) has no permutation analogue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSet {
    kinds: BTreeSet<MoveKind>,
    rules: Vec<RewriteRule>,
    insertions: bool,
}

impl MoveSet {
    pub fn new<I: IntoIterator<Item = MoveKind>>(kinds: I) -> Result<Self, EngineError> {
        let kinds: BTreeSet<MoveKind> = kinds.into_iter().collect();
        if let Some(k) = kinds.iter().find(|k| matches!(k, MoveKind::Extended(_))) {
            return Err(EngineError::NotBasic(*k));
        }
        if kinds.is_empty() {
            return Err(EngineError::EmptyMoveSet);
        }
        let insertions = kinds.contains(&MoveKind::TypeIa) || kinds.contains(&MoveKind::TypeIb);
        Ok(MoveSet {
            kinds,
            rules: Vec::new(),
            insertions,
        })
    }

    /// Type I(a) and I(b).
    pub fn type_one() -> Self {
        MoveSet::new([MoveKind::TypeIa, MoveKind::TypeIb]).unwrap()
    }

    /// Type II(a) and II(b).
    pub fn type_two() -> Self {
        MoveSet::new([MoveKind::TypeIIa, MoveKind::TypeIIb]).unwrap()
    }

    /// All four basic kinds.
    pub fn full() -> Self {
        MoveSet::new(MoveKind::BASIC).unwrap()
    }

    pub fn with_rule(mut self, rule: RewriteRule) -> Self {
        self.rules.push(rule);
        self
    }

    /// Parses a comma list such as `I,II,x:231-312`.
    ///
    /// `I` = `Ia,Ib`, `II` = `IIa,IIb`; `x:<lhs>-<rhs>` adds a rewrite rule.
    pub fn parse(spec: &str) -> Result<Self, EngineError> {
        let mut kinds = BTreeSet::new();
        let mut rules = Vec::new();
        for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match token {
                "I" => kinds.extend([MoveKind::TypeIa, MoveKind::TypeIb]),
                "II" => kinds.extend([MoveKind::TypeIIa, MoveKind::TypeIIb]),
                "Ia" => drop(kinds.insert(MoveKind::TypeIa)),
                "Ib" => drop(kinds.insert(MoveKind::TypeIb)),
                "IIa" => drop(kinds.insert(MoveKind::TypeIIa)),
                "IIb" => drop(kinds.insert(MoveKind::TypeIIb)),
                _ => match token.strip_prefix("x:") {
                    Some(r) => rules.push(
                        r.parse::<RewriteRule>()
                            .map_err(|_| EngineError::BadRule(r.to_string()))?,
                    ),
                    None => return Err(EngineError::UnknownMove(token.to_string())),
                },
            }
        }
        if kinds.is_empty() && rules.is_empty() {
            return Err(EngineError::EmptyMoveSet);
        }
        let insertions = kinds.contains(&MoveKind::TypeIa) || kinds.contains(&MoveKind::TypeIb);
        Ok(MoveSet {
            kinds,
            rules,
            insertions,
        })
    }

    pub fn kinds(&self) -> impl Iterator<Item = MoveKind> + '_ {
        self.kinds.iter().copied()
    }

    pub fn contains(&self, kind: MoveKind) -> bool {
        match kind {
            MoveKind::Extended(id) => id < self.rules.len(),
            k => self.kinds.contains(&k),
        }
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn insertions(&self) -> bool {
        self.insertions
    }

    pub fn swaps(&self) -> bool {
        self.kinds.contains(&MoveKind::TypeIIa)
    }
}

impl fmt::Display for MoveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.kinds.iter().map(|k| k.to_string()).collect();
        parts.extend(self.rules.iter().map(|r| format!("x:{r}")));
        f.write_str(&parts.join(","))
    }
}

/// A replayable witness that `start` reaches `end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    Matching {
        start: Matching,
        steps: Vec<MatchingMove>,
        end: Matching,
    },
    Permutation {
        start: Permutation,
        steps: Vec<PermMove>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        rules: Vec<RewriteRule>,
        end: Permutation,
    },
}

impl Certificate {
    pub fn len(&self) -> usize {
        match self {
            Certificate::Matching { steps, .. } => steps.len(),
            Certificate::Permutation { steps, .. } => steps.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lines `"<move> -> <result>"`, one per step, after a line holding the
    /// start object.
    pub fn render(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self {
            Certificate::Matching { start, steps, .. } => {
                out.push(start.to_string());
                let mut cur = start.clone();
                for s in steps {
                    cur = s.apply(&cur, None).expect("render a verified certificate");
                    out.push(format!("  {s} -> {cur}"));
                }
            }
            Certificate::Permutation {
                start,
                steps,
                rules,
                ..
            } => {
                out.push(start.to_string());
                let mut cur = start.clone();
                for s in steps {
                    cur = s.apply(&cur, rules).expect("render a verified certificate");
                    let label = match s {
                        PermMove::Rewrite { rule, position } => {
                            format!("x {} at {position}", rules[*rule])
                        }
                        other => other.to_string(),
                    };
                    out.push(format!("  {label} -> {cur}"));
                }
            }
        }
        out
    }

    /// Rebuilds a certificate from a JSON result document.
    pub fn from_document(doc: &Value) -> Result<Self, EngineError> {
        let bad = |e: String| EngineError::Document(e);
        let mut obj = doc
            .as_object()
            .ok_or_else(|| bad("expected a JSON object".into()))?
            .clone();
        if obj.get("comparable") != Some(&Value::Bool(true)) {
            return Err(bad("document does not claim comparability".into()));
        }
        let steps = obj
            .remove("certificate")
            .unwrap_or(Value::Array(Vec::new()));
        obj.insert("steps".into(), steps);
        obj.remove("comparable");
        obj.remove("states_explored");
        serde_json::from_value(Value::Object(obj)).map_err(|e| bad(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("step {step} is illegal: {reason}")]
    IllegalStep { step: usize, reason: String },
    #[error("replay ends at {actual}, certificate claims {claimed}")]
    EndMismatch { actual: String, claimed: String },
}

impl CertificateError {
    /// 1-based index of the offending step, if any.
    pub fn step(&self) -> Option<usize> {
        match self {
            CertificateError::IllegalStep { step, .. } => Some(*step),
            CertificateError::EndMismatch { .. } => None,
        }
    }
}

/// Replays every step and checks the final object.
pub fn verify_certificate(c: &Certificate) -> Result<(), CertificateError> {
    fn replay<S: PartialEq + fmt::Display + Clone, M>(
        start: &S,
        end: &S,
        steps: &[M],
        apply: impl Fn(&M, &S) -> Result<S, String>,
    ) -> Result<(), CertificateError> {
        let mut cur = start.clone();
        for (idx, m) in steps.iter().enumerate() {
            cur = apply(m, &cur).map_err(|reason| CertificateError::IllegalStep {
                step: idx + 1,
                reason,
            })?;
        }
        if &cur != end {
            return Err(CertificateError::EndMismatch {
                actual: cur.to_string(),
                claimed: end.to_string(),
            });
        }
        Ok(())
    }
    match c {
        Certificate::Matching { start, steps, end } => replay(start, end, steps, |m, s| {
            m.apply(s, None).map_err(|e| e.to_string())
        }),
        Certificate::Permutation {
            start,
            steps,
            rules,
            end,
        } => replay(start, end, steps, |m, s| {
            m.apply(s, rules).map_err(|e| e.to_string())
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Comparable(Certificate),
    Incomparable,
    /// The state budget ran out before the search finished.
    BudgetExceeded,
}

impl Outcome {
    pub fn is_comparable(&self) -> bool {
        matches!(self, Outcome::Comparable(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Comparable(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: Outcome,
    /// Distinct states discovered, including the start.
    pub states_explored: usize,
}

impl SearchReport {
    /// The JSON result document:
    /// `{comparable, certificate: [steps], states_explored}` plus, for a
    /// comparable answer, the fields needed to replay the steps.
    pub fn to_json(&self) -> Value {
        let comparable = match &self.outcome {
            Outcome::Comparable(_) => json!(true),
            Outcome::Incomparable => json!(false),
            Outcome::BudgetExceeded => json!("budget"),
        };
        let mut doc = json!({
            "comparable": comparable,
            "certificate": [],
            "states_explored": self.states_explored,
        });
        if let Outcome::Comparable(c) = &self.outcome {
            let mut full = serde_json::to_value(c).expect("certificate serializes");
            let obj = full.as_object_mut().unwrap();
            doc["certificate"] = obj.remove("steps").unwrap();
            for (k, v) in obj.iter() {
                doc[k] = v.clone();
            }
        }
        doc
    }
}

enum Search<M> {
    Found(Vec<M>),
    Exhausted,
    Budget,
}

fn bfs<S, M>(
    start: S,
    target: &S,
    budget: usize,
    mut successors: impl FnMut(&S) -> Vec<(M, S)>,
) -> (Search<M>, usize)
where
    S: Clone + Eq + Hash,
{
    if &start == target {
        return (Search::Found(Vec::new()), 1);
    }
    let mut states: Vec<S> = vec![start.clone()];
    let mut parent: Vec<Option<(usize, M)>> = vec![None];
    let mut index: HashMap<S, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for (mv, next) in successors(&states[cur]) {
            if index.contains_key(&next) {
                continue;
            }
            if states.len() >= budget {
                return (Search::Budget, states.len());
            }
            let id = states.len();
            let hit = &next == target;
            index.insert(next.clone(), id);
            states.push(next);
            parent.push(Some((cur, mv)));
            if hit {
                let explored = states.len();
                let mut path = Vec::new();
                let mut at = id;
                while let Some((p, m)) = parent[at].take() {
                    path.push(m);
                    at = p;
                }
                path.reverse();
                return (Search::Found(path), explored);
            }
            queue.push_back(id);
        }
    }
    (Search::Exhausted, states.len())
}

/// Whether sorted `small` embeds into sorted `big` by an increasing map
/// that never decreases a vertex.
fn dominated(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|&s| it.any(|&t| t >= s))
}

/// Decides `a ⊑ b` over matchings.
///
/// Moves are capped at `b`'s largest vertex. States with more edges than `b`
/// or whose matched vertices cannot be dominated by `b`'s are pruned: edge
/// counts and matched vertices never decrease along a move.
pub fn matching_leq(
    a: &Matching,
    b: &Matching,
    ms: &MoveSet,
    budget: usize,
) -> Result<SearchReport, EngineError> {
    if !ms.rules.is_empty() {
        return Err(EngineError::RulesOnMatchings);
    }
    let target_support = b.support();
    let viable = |m: &Matching| m.len() <= b.len() && dominated(&m.support(), &target_support);
    if !viable(a) {
        return Ok(SearchReport {
            outcome: Outcome::Incomparable,
            states_explored: 1,
        });
    }
    let cap = b.max_vertex();
    let kinds: Vec<MoveKind> = ms.kinds().collect();
    let (search, explored) = bfs(a.clone(), b, budget, |m| {
        let mut succ: Vec<(MatchingMove, Matching)> = kinds
            .iter()
            .flat_map(|&k| moves_of_kind(m, k, cap).expect("cap covers every viable state"))
            .filter(|(_, r)| viable(r))
            .collect();
        succ.sort_by(|x, y| matching_cmp(&x.1, &y.1));
        succ.dedup_by(|x, y| x.1 == y.1);
        succ
    });
    let outcome = match search {
        Search::Found(steps) => Outcome::Comparable(Certificate::Matching {
            start: a.clone(),
            steps,
            end: b.clone(),
        }),
        Search::Exhausted => Outcome::Incomparable,
        Search::Budget => Outcome::BudgetExceeded,
    };
    Ok(SearchReport {
        outcome,
        states_explored: explored,
    })
}

/// Decides `a ≤ᵢ b` over permutations of length `|a|..=|b|`.
///
/// Successor order: Type II swaps, then rewrite rules, then insertions.
pub fn perm_leq(a: &Permutation, b: &Permutation, ms: &MoveSet, budget: usize) -> SearchReport {
    if a.len() > b.len() {
        return SearchReport {
            outcome: Outcome::Incomparable,
            states_explored: 1,
        };
    }
    let max_len = b.len();
    let (search, explored) = bfs(a.clone(), b, budget, |p| {
        let mut succ = Vec::new();
        if ms.swaps() {
            succ.extend(swap_moves(p));
        }
        succ.extend(rewrite_moves(p, &ms.rules));
        if ms.insertions && p.len() < max_len {
            succ.extend(insertion_moves(p));
        }
        succ
    });
    let outcome = match search {
        Search::Found(steps) => Outcome::Comparable(Certificate::Permutation {
            start: a.clone(),
            steps,
            rules: ms.rules.clone(),
            end: b.clone(),
        }),
        Search::Exhausted => Outcome::Incomparable,
        Search::Budget => Outcome::BudgetExceeded,
    };
    SearchReport {
        outcome,
        states_explored: explored,
    }
}

/// A homogeneous list of objects for [`antichain_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Items {
    Matchings(Vec<Matching>),
    Permutations(Vec<Permutation>),
}

impl Items {
    pub fn len(&self) -> usize {
        match self {
            Items::Matchings(v) => v.len(),
            Items::Permutations(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparability {
    Comparable,
    Incomparable,
    Budget,
}

impl From<&Outcome> for Comparability {
    fn from(o: &Outcome) -> Self {
        match o {
            Outcome::Comparable(_) => Comparability::Comparable,
            Outcome::Incomparable => Comparability::Incomparable,
            Outcome::BudgetExceeded => Comparability::Budget,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairResult {
    /// 0-based indices with `i < j`; the query is `items[i] ≤ items[j]`.
    pub i: usize,
    pub j: usize,
    pub result: Comparability,
    pub states_explored: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntichainReport {
    pub pairs: Vec<PairResult>,
}

impl AntichainReport {
    /// `Some(true)` if every forward pair is incomparable, `Some(false)` if
    /// some pair is comparable, `None` if a budget ran out first.
    pub fn is_antichain(&self) -> Option<bool> {
        if self
            .pairs
            .iter()
            .any(|p| p.result == Comparability::Comparable)
        {
            Some(false)
        } else if self.pairs.iter().any(|p| p.result == Comparability::Budget) {
            None
        } else {
            Some(true)
        }
    }
}

/// Checks `items[i] ≤ items[j]` for every `i < j`: the list is a bad
/// sequence prefix when none of these hold.
pub fn antichain_check(
    items: &Items,
    ms: &MoveSet,
    budget: usize,
) -> Result<AntichainReport, EngineError> {
    let mut pairs = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            let report = match items {
                Items::Matchings(v) => matching_leq(&v[i], &v[j], ms, budget)?,
                Items::Permutations(v) => perm_leq(&v[i], &v[j], ms, budget),
            };
            pairs.push(PairResult {
                i,
                j,
                result: Comparability::from(&report.outcome),
                states_explored: report.states_explored,
            });
        }
    }
    Ok(AntichainReport { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mm(s: &str) -> Matching {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn steps_of(r: &SearchReport) -> usize {
        r.outcome.certificate().map(Certificate::len).unwrap()
    }

    #[test]
    fn move_set_parsing() {
        let ms = MoveSet::parse("I,II").unwrap();
        assert_eq!(ms, MoveSet::full());
        assert!(ms.insertions() && ms.swaps());
        let ms = MoveSet::parse("Ia, IIb").unwrap();
        assert!(ms.contains(MoveKind::TypeIa) && !ms.contains(MoveKind::TypeIb));
        assert!(!ms.swaps());
        let ms = MoveSet::parse("I,II,x:231-312").unwrap();
        assert_eq!(ms.rules().len(), 1);
        assert!(ms.contains(MoveKind::Extended(0)) && !ms.contains(MoveKind::Extended(1)));
        assert_eq!(ms.to_string(), "Ia,Ib,IIa,IIb,x:231-312");
        assert_eq!(
            MoveSet::parse("III"),
            Err(EngineError::UnknownMove("III".into()))
        );
        assert_eq!(MoveSet::parse(""), Err(EngineError::EmptyMoveSet));
        assert!(matches!(
            MoveSet::parse("x:12-12"),
            Err(EngineError::BadRule(_))
        ));
        assert!(MoveSet::new([MoveKind::Extended(0)]).is_err());
    }

    #[test]
    fn matching_examples() {
        let r = matching_leq(&mm("1-2"), &mm("1-3"), &MoveSet::full(), DEFAULT_BUDGET).unwrap();
        let c = r.outcome.certificate().unwrap();
        assert!(matches!(c, Certificate::Matching { steps, .. }
            if steps == &[MatchingMove::Shift { edge: (1, 2), from: 2 }]));

        let r = matching_leq(
            &mm("1-4 2-3"),
            &mm("1-3 2-4"),
            &MoveSet::full(),
            DEFAULT_BUDGET,
        )
        .unwrap();
        let c = r.outcome.certificate().unwrap();
        assert!(matches!(c, Certificate::Matching { steps, .. }
            if steps == &[MatchingMove::Cross { a: 1, b: 2, c: 3, d: 4 }]));

        let r = matching_leq(
            &mm("1-3 2-4"),
            &mm("1-4 2-3"),
            &MoveSet::full(),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(r.outcome, Outcome::Incomparable);
    }

    #[test]
    fn matching_rejects_rules() {
        let ms = MoveSet::parse("I,x:231-312").unwrap();
        assert_eq!(
            matching_leq(&mm("1-2"), &mm("1-2"), &ms, 10),
            Err(EngineError::RulesOnMatchings)
        );
    }

    #[test]
    fn perm_examples() {
        let ms = MoveSet::full();
        let r = perm_leq(&p("2143"), &p("3142"), &ms, DEFAULT_BUDGET);
        assert_eq!(steps_of(&r), 1);
        let r = perm_leq(&p("2143"), &p("34152"), &ms, DEFAULT_BUDGET);
        let c = r.outcome.certificate().unwrap();
        assert_eq!(
            c,
            &Certificate::Permutation {
                start: p("2143"),
                steps: vec![
                    PermMove::Swap { low: 2, high: 3 },
                    PermMove::Insert {
                        value: 4,
                        position: 2
                    }
                ],
                rules: vec![],
                end: p("34152"),
            }
        );
    }

    #[test]
    fn reflexive_and_length_shortcut() {
        let r = perm_leq(&p("21"), &p("21"), &MoveSet::full(), 1);
        assert_eq!(steps_of(&r), 0);
        let r = perm_leq(&p("213"), &p("21"), &MoveSet::full(), DEFAULT_BUDGET);
        assert_eq!(r.outcome, Outcome::Incomparable);
    }

    #[test]
    fn budget_is_a_distinct_outcome() {
        let r = perm_leq(&p("412563"), &p("41263785"), &MoveSet::full(), 50);
        assert_eq!(r.outcome, Outcome::BudgetExceeded);
        assert_eq!(r.states_explored, 50);
        assert_eq!(r.to_json()["comparable"], json!("budget"));
    }

    #[test]
    fn verify_detects_illegal_steps() {
        let bad = Certificate::Matching {
            start: mm("1-7 2-5 3-6"),
            steps: vec![MatchingMove::Cross {
                a: 1,
                b: 3,
                c: 6,
                d: 7,
            }],
            end: mm("1-6 2-5 3-7"),
        };
        let err = verify_certificate(&bad).unwrap_err();
        assert_eq!(err.step(), Some(1));

        let empty = Certificate::Permutation {
            start: p("312"),
            steps: vec![],
            rules: vec![],
            end: p("312"),
        };
        assert_eq!(verify_certificate(&empty), Ok(()));

        let wrong_end = Certificate::Permutation {
            start: p("12"),
            steps: vec![PermMove::Swap { low: 1, high: 2 }],
            rules: vec![],
            end: p("12"),
        };
        assert!(matches!(
            verify_certificate(&wrong_end),
            Err(CertificateError::EndMismatch { .. })
        ));
    }

    #[test]
    fn json_document_round_trip() {
        let ms = MoveSet::full().with_rule("231-312".parse().unwrap());
        let r = perm_leq(&p("412563"), &p("41263785"), &ms, DEFAULT_BUDGET);
        let doc = r.to_json();
        assert_eq!(doc["comparable"], json!(true));
        assert_eq!(doc["rules"], json!(["231-312"]));
        let c = Certificate::from_document(&doc).unwrap();
        assert_eq!(Some(&c), r.outcome.certificate());
        assert_eq!(verify_certificate(&c), Ok(()));

        let r = matching_leq(&mm("1-4 2-3"), &mm("1-3 2-4"), &MoveSet::full(), 100).unwrap();
        let c = Certificate::from_document(&r.to_json()).unwrap();
        assert_eq!(Some(&c), r.outcome.certificate());

        let r = perm_leq(&p("21"), &p("12"), &MoveSet::full(), 100);
        assert!(Certificate::from_document(&r.to_json()).is_err());
    }

    #[test]
    fn antichain_examples() {
        let forks = Items::Permutations(vec![p("412563"), p("41263785")]);
        let rep = antichain_check(&forks, &MoveSet::full(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.is_antichain(), Some(true));

        let same = Items::Permutations(vec![p("2413"), p("2413")]);
        let rep = antichain_check(&same, &MoveSet::full(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.is_antichain(), Some(false));

        let pat = Items::Permutations(vec![p("21"), p("132")]);
        let rep = antichain_check(&pat, &MoveSet::full(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.pairs[0].result, Comparability::Comparable);

        let backward = Items::Permutations(vec![p("21"), p("12")]);
        let rep = antichain_check(&backward, &MoveSet::full(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.pairs.len(), 1);
        assert_eq!(rep.is_antichain(), Some(true));

        let tight = antichain_check(&forks, &MoveSet::full(), 10).unwrap();
        assert_eq!(tight.is_antichain(), None);
    }

    #[test]
    fn domination_check() {
        assert!(dominated(&[1, 2], &[1, 2, 3, 4]));
        assert!(dominated(&[2, 3], &[1, 2, 3, 4]));
        assert!(!dominated(&[3, 4], &[1, 2, 3]));
        assert!(!dominated(&[1, 5], &[1, 2, 3, 4]));
    }
}
