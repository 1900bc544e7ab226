//! Matchings on the positive integers and the moves between them.
//!
//! A [`Matching`] is a finite set of disjoint edges `{i, j}` on `1..`. Edges
//! are stored normalised as `(min, max)` and kept sorted, so two matchings
//! with the same edges compare equal.
//!
//! Four kinds of single-step moves act on matchings:
//!
//! * Type I(a) adds an edge between two unmatched vertices.
//! * Type I(b) shifts one endpoint `v` of an edge to `v + 1` when `v + 1` is
//!   unmatched. Either endpoint may be shifted.
//! * Type II(a) replaces crossing-free nested edges `(a,d),(b,c)` by the
//!   crossing pair `(a,c),(b,d)`.
//! * Type II(b) replaces the crossing pair `(a,c),(b,d)` by the disjoint pair
//!   `(a,b),(c,d)`.
//!
//! Type II moves carry a side condition on a vertex interval: every vertex
//! strictly between `a` and `b` (II(a)) or strictly between `b` and `c`
//! (II(b)) must be unmatched or matched to a vertex larger than `c`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex of a matching. Vertices are 1-based.
pub type Vertex = u32;

/// A normalised edge `(low, high)` with `low < high`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("vertex 0 is not allowed, vertices are 1-based")]
    ZeroVertex,
    #[error("edge {0}-{0} is a self-loop")]
    SelfLoop(Vertex),
    #[error("vertex {0} is used by more than one edge")]
    DuplicateVertex(Vertex),
    #[error("malformed edge token {0:?}, expected i-j")]
    BadToken(String),
    #[error("vertex cap {cap} is below the largest vertex {max}")]
    CapTooSmall { cap: Vertex, max: Vertex },
    #[error("matching {0} is not intertwined")]
    NotIntertwined(String),
    #[error("matching {0} is not a perfect matching on an initial segment")]
    NotPerfect(String),
    #[error("word letters must be a permutation of 1..={n}, got {letters:?}")]
    BadWord { n: usize, letters: Vec<u32> },
    #[error("extended rewrite rules have no matching-side semantics")]
    ExtendedKind,
    #[error("illegal move: {0}")]
    IllegalMove(String),
}

/// A finite matching on the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Builds a matching from unordered pairs, normalising each pair.
    pub fn new<I>(edges: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (x, y) in edges {
            if x == 0 || y == 0 {
                return Err(MatchingError::ZeroVertex);
            }
            if x == y {
                return Err(MatchingError::SelfLoop(x));
            }
            for v in [x, y] {
                if !seen.insert(v) {
                    return Err(MatchingError::DuplicateVertex(v));
                }
            }
            out.push((x.min(y), x.max(y)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    /// Edges in canonical (lexicographic on `(low, high)`) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Largest matched vertex, 0 for the empty matching.
    pub fn max_vertex(&self) -> Vertex {
        self.edges.iter().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.partner(v).is_some()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges
            .binary_search(&(e.0.min(e.1), e.0.max(e.1)))
            .is_ok()
    }

    /// All matched vertices, sorted ascending.
    pub fn support(&self) -> Vec<Vertex> {
        let mut s: Vec<Vertex> = self.edges.iter().flat_map(|&(i, j)| [i, j]).collect();
        s.sort_unstable();
        s
    }

    /// True when the matched vertices are exactly `1..=2k`.
    pub fn is_perfect(&self) -> bool {
        self.support()
            .iter()
            .enumerate()
            .all(|(idx, &v)| v as usize == idx + 1)
    }

    /// Edges in increasing `⪯` order (by larger endpoint, then smaller).
    pub fn edges_by_order(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_by(|a, b| edge_cmp(*a, *b));
        e
    }

    /// Relabels the matched vertices order-isomorphically onto `1..=2k`.
    pub fn standardized(&self) -> Matching {
        let support = self.support();
        let rank = |v: Vertex| support.binary_search(&v).unwrap() as Vertex + 1;
        Matching::new(self.edges.iter().map(|&(i, j)| (rank(i), rank(j))))
            .expect("relabeling preserves validity")
    }

    fn replace(&self, remove: &[Edge], add: &[Edge]) -> Matching {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !remove.contains(e))
            .collect();
        edges.extend(add.iter().map(|&(x, y)| (x.min(y), x.max(y))));
        edges.sort_unstable();
        Matching { edges }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (i, j)) in self.edges.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}

impl FromStr for Matching {
    type Err = MatchingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        for token in s.split_whitespace() {
            let (a, b) = token
                .split_once('-')
                .ok_or_else(|| MatchingError::BadToken(token.to_string()))?;
            let a: Vertex = a
                .parse()
                .map_err(|_| MatchingError::BadToken(token.to_string()))?;
            let b: Vertex = b
                .parse()
                .map_err(|_| MatchingError::BadToken(token.to_string()))?;
            pairs.push((a, b));
        }
        Matching::new(pairs)
    }
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The move kinds a reachability query may use.
///
/// `Extended(id)` names a permutation-side rewrite rule by its index in the
/// active [`MoveSet`](crate::engine::MoveSet).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    TypeIa,
    TypeIb,
    TypeIIa,
    TypeIIb,
    Extended(usize),
}

impl MoveKind {
    pub const BASIC: [MoveKind; 4] = [
        MoveKind::TypeIa,
        MoveKind::TypeIb,
        MoveKind::TypeIIa,
        MoveKind::TypeIIb,
    ];
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::TypeIa => f.write_str("Ia"),
            MoveKind::TypeIb => f.write_str("Ib"),
            MoveKind::TypeIIa => f.write_str("IIa"),
            MoveKind::TypeIIb => f.write_str("IIb"),
            MoveKind::Extended(id) => write!(f, "x{id}"),
        }
    }
}

/// A single move with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move")]
pub enum MatchingMove {
    /// Type I(a): add the edge `{i, j}`.
    #[serde(rename = "Ia")]
    AddEdge { i: Vertex, j: Vertex },
    /// Type I(b): move endpoint `from` of `edge` to `from + 1`.
    #[serde(rename = "Ib")]
    Shift { edge: Edge, from: Vertex },
    /// Type II(a): `(a,d),(b,c)` becomes `(a,c),(b,d)`.
    #[serde(rename = "IIa")]
    Cross {
        a: Vertex,
        b: Vertex,
        c: Vertex,
        d: Vertex,
    },
    /// Type II(b): `(a,c),(b,d)` becomes `(a,b),(c,d)`.
    #[serde(rename = "IIb")]
    Split {
        a: Vertex,
        b: Vertex,
        c: Vertex,
        d: Vertex,
    },
}

impl MatchingMove {
    pub fn kind(&self) -> MoveKind {
        match self {
            MatchingMove::AddEdge { .. } => MoveKind::TypeIa,
            MatchingMove::Shift { .. } => MoveKind::TypeIb,
            MatchingMove::Cross { .. } => MoveKind::TypeIIa,
            MatchingMove::Split { .. } => MoveKind::TypeIIb,
        }
    }

    /// Applies the move to `m`, checking every legality condition.
    ///
    /// `cap`, when given, additionally forbids any vertex above it.
    pub fn apply(&self, m: &Matching, cap: Option<Vertex>) -> Result<Matching, MatchingError> {
        let illegal = |why: String| Err(MatchingError::IllegalMove(format!("{self}: {why}")));
        let over_cap = |v: Vertex| cap.is_some_and(|c| v > c);
        match *self {
            MatchingMove::AddEdge { i, j } => {
                if i == 0 || j == 0 || i == j {
                    return illegal("not an edge on positive integers".into());
                }
                if m.is_matched(i) || m.is_matched(j) {
                    return illegal("endpoint already matched".into());
                }
                if over_cap(i.max(j)) {
                    return illegal("endpoint above vertex cap".into());
                }
                Ok(m.replace(&[], &[(i, j)]))
            }
            MatchingMove::Shift { edge, from } => {
                let edge = (edge.0.min(edge.1), edge.0.max(edge.1));
                if !m.contains_edge(edge) {
                    return illegal("edge not present".into());
                }
                if from != edge.0 && from != edge.1 {
                    return illegal("shifted vertex is not an endpoint".into());
                }
                let to = from + 1;
                if m.is_matched(to) {
                    return illegal(format!("target vertex {to} is matched"));
                }
                if over_cap(to) {
                    return illegal("target above vertex cap".into());
                }
                let other = if from == edge.0 { edge.1 } else { edge.0 };
                Ok(m.replace(&[edge], &[(other, to)]))
            }
            MatchingMove::Cross { a, b, c, d } => {
                if !(a < b && b < c && c < d) {
                    return illegal("requires a < b < c < d".into());
                }
                if !m.contains_edge((a, d)) || !m.contains_edge((b, c)) {
                    return illegal("requires edges a-d and b-c".into());
                }
                if let Some(v) = blocking_vertex(m, a, b, c) {
                    return illegal(format!(
                        "vertex {v} between a and b is matched at or below c"
                    ));
                }
                Ok(m.replace(&[(a, d), (b, c)], &[(a, c), (b, d)]))
            }
            MatchingMove::Split { a, b, c, d } => {
                if !(a < b && b < c && c < d) {
                    return illegal("requires a < b < c < d".into());
                }
                if !m.contains_edge((a, c)) || !m.contains_edge((b, d)) {
                    return illegal("requires edges a-c and b-d".into());
                }
                if let Some(v) = blocking_vertex(m, b, c, c) {
                    return illegal(format!(
                        "vertex {v} between b and c is matched at or below c"
                    ));
                }
                Ok(m.replace(&[(a, c), (b, d)], &[(a, b), (c, d)]))
            }
        }
    }
}

/// First vertex strictly inside `(lo, hi)` matched to something `<= c`.
fn blocking_vertex(m: &Matching, lo: Vertex, hi: Vertex, c: Vertex) -> Option<Vertex> {
    (lo + 1..hi).find(|&v| m.partner(v).is_some_and(|p| p <= c))
}

impl fmt::Display for MatchingMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingMove::AddEdge { i, j } => write!(f, "Ia add {}-{}", i.min(j), i.max(j)),
            MatchingMove::Shift { edge, from } => {
                write!(f, "Ib {}-{} shift {from}", edge.0, edge.1)
            }
            MatchingMove::Cross { a, b, c, d } => write!(f, "IIa {a} {b} {c} {d}"),
            MatchingMove::Split { a, b, c, d } => write!(f, "IIb {a} {b} {c} {d}"),
        }
    }
}

/// The total order `⪯` on normalised edges: larger endpoint first, then
/// smaller endpoint.
pub fn edge_cmp(e1: Edge, e2: Edge) -> Ordering {
    e1.1.cmp(&e2.1).then(e1.0.cmp(&e2.0))
}

pub fn edge_leq(e1: Edge, e2: Edge) -> bool {
    edge_cmp(e1, e2) != Ordering::Greater
}

/// The total order on matchings: fewer edges first; equal sizes compared
/// edgewise starting from the `⪯`-largest edge.
pub fn matching_cmp(a: &Matching, b: &Matching) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let ea = a.edges_by_order();
        let eb = b.edges_by_order();
        ea.iter()
            .rev()
            .zip(eb.iter().rev())
            .map(|(x, y)| edge_cmp(*x, *y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

pub fn matching_leq_total(a: &Matching, b: &Matching) -> bool {
    matching_cmp(a, b) != Ordering::Greater
}

/// A perfect matching on `1..=2n` pairing every vertex of `1..=n` with one
/// of `n+1..=2n`.
pub fn is_intertwined(m: &Matching) -> bool {
    if m.is_empty() || !m.is_perfect() {
        return false;
    }
    let n = m.len() as Vertex;
    m.edges().iter().all(|&(i, j)| i <= n && j > n)
}

/// Every one-step move of `kind` from `m` that stays within `1..=cap`,
/// paired with its result. Results are distinct and sorted by `⪯`.
pub fn moves_of_kind(
    m: &Matching,
    kind: MoveKind,
    cap: Vertex,
) -> Result<Vec<(MatchingMove, Matching)>, MatchingError> {
    let max = m.max_vertex();
    if cap < max {
        return Err(MatchingError::CapTooSmall { cap, max });
    }
    let mut candidates = Vec::new();
    match kind {
        MoveKind::TypeIa => {
            let free: Vec<Vertex> = (1..=cap).filter(|&v| !m.is_matched(v)).collect();
            for (x, &i) in free.iter().enumerate() {
                for &j in &free[x + 1..] {
                    candidates.push(MatchingMove::AddEdge { i, j });
                }
            }
        }
        MoveKind::TypeIb => {
            for &edge in m.edges() {
                candidates.push(MatchingMove::Shift { edge, from: edge.0 });
                candidates.push(MatchingMove::Shift { edge, from: edge.1 });
            }
        }
        MoveKind::TypeIIa | MoveKind::TypeIIb => {
            for &(p, q) in m.edges() {
                for &(r, s) in m.edges() {
                    if p >= r {
                        continue;
                    }
                    // p < r; nested (p,q),(r,s) with s < q, or crossing r < q < s
                    if kind == MoveKind::TypeIIa && s < q {
                        candidates.push(MatchingMove::Cross {
                            a: p,
                            b: r,
                            c: s,
                            d: q,
                        });
                    }
                    if kind == MoveKind::TypeIIb && r < q && q < s {
                        candidates.push(MatchingMove::Split {
                            a: p,
                            b: r,
                            c: q,
                            d: s,
                        });
                    }
                }
            }
        }
        MoveKind::Extended(_) => return Err(MatchingError::ExtendedKind),
    }
    let mut out: Vec<(MatchingMove, Matching)> = candidates
        .into_iter()
        .filter_map(|mv| mv.apply(m, Some(cap)).ok().map(|r| (mv, r)))
        .collect();
    out.sort_by(|x, y| matching_cmp(&x.1, &y.1));
    out.dedup_by(|x, y| x.1 == y.1);
    Ok(out)
}

/// All matchings reachable from `m` by exactly one move of `kind` within
/// `1..=vertex_cap`, sorted by `⪯`.
pub fn enumerate_moves(
    m: &Matching,
    kind: MoveKind,
    vertex_cap: Vertex,
) -> Result<Vec<Matching>, MatchingError> {
    Ok(moves_of_kind(m, kind, vertex_cap)?
        .into_iter()
        .map(|(_, r)| r)
        .collect())
}

/// Word of an intertwined matching: the `j`-th letter is the vertex matched
/// to `2n + 1 - j`.
pub fn matching_to_word(m: &Matching) -> Result<Vec<u32>, MatchingError> {
    if !is_intertwined(m) {
        return Err(MatchingError::NotIntertwined(m.to_string()));
    }
    let n = m.len() as Vertex;
    Ok((1..=n)
        .map(|j| m.partner(2 * n + 1 - j).expect("perfect matching"))
        .collect())
}

/// Inverse of [`matching_to_word`].
pub fn word_to_matching(word: &[u32]) -> Result<Matching, MatchingError> {
    let n = word.len();
    let mut seen = vec![false; n + 1];
    for &x in word {
        if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize], true) {
            return Err(MatchingError::BadWord {
                n,
                letters: word.to_vec(),
            });
        }
    }
    if n == 0 {
        return Err(MatchingError::BadWord {
            n,
            letters: Vec::new(),
        });
    }
    let n = n as Vertex;
    Matching::new(
        word.iter()
            .enumerate()
            .map(|(j, &x)| (x, 2 * n - j as Vertex)),
    )
}

/// Splits a perfect matching into intertwined pieces by a left-to-right
/// colouring sweep.
///
/// Scanning vertices in order, every smaller endpoint joins the current
/// colour; the colour closes as soon as the scan hits the larger endpoint of
/// one of its own edges. The next smaller endpoint opens a new colour.
pub fn decompose_intertwined(m: &Matching) -> Result<Vec<Matching>, MatchingError> {
    if m.is_empty() || !m.is_perfect() {
        return Err(MatchingError::NotPerfect(m.to_string()));
    }
    let top = m.max_vertex();
    let mut color_of = vec![usize::MAX; top as usize + 1];
    let mut pieces: Vec<Vec<Edge>> = Vec::new();
    let mut open = false;
    for v in 1..=top {
        let p = m.partner(v).expect("perfect matching");
        if p > v {
            if !open {
                pieces.push(Vec::new());
                open = true;
            }
            let c = pieces.len() - 1;
            color_of[v as usize] = c;
            pieces[c].push((v, p));
        } else if open && color_of[p as usize] == pieces.len() - 1 {
            open = false;
        }
    }
    pieces.into_iter().map(Matching::new).collect()
}
