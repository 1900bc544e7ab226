//! Permutations in one-line notation and the moves between them.
//!
//! Inversions are recorded on values: `(i, j)` with `i < j` is an inversion
//! when `i` appears to the right of `j`. All graph code downstream uses this
//! convention.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("empty permutation")]
    Empty,
    #[error("{0:?} is not a bijection of 1..=n")]
    NotBijection(Vec<u32>),
    #[error("word {0:?} repeats a letter or contains 0")]
    BadWord(Vec<u32>),
    #[error("malformed permutation token {0:?}")]
    BadToken(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("rewrite rule sides must be distinct permutations of equal length")]
    BadRule,
    #[error("malformed rewrite rule {0:?}, expected e.g. 231-312")]
    BadRuleToken(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
}

/// A sequence of distinct positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self, PermutationError> {
        let mut seen = HashSet::new();
        if letters.iter().any(|&x| x == 0 || !seen.insert(x)) {
            return Err(PermutationError::BadWord(letters));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Self {
        Word(p.0)
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Word(p.0.clone())
    }
}

/// A bijection of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self, PermutationError> {
        if letters.is_empty() {
            return Err(PermutationError::Empty);
        }
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize], true) {
                return Err(PermutationError::NotBijection(letters));
            }
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `positions()[v]` is the 0-based position of value `v` (index 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.len() + 1];
        for (idx, &v) in self.0.iter().enumerate() {
            pos[v as usize] = idx;
        }
        pos
    }

    pub fn inversion_count(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|x| (x + 1..p.len()).filter(|&y| p[x] > p[y]).count())
            .sum()
    }

    /// Classical pattern containment: some subsequence of `self` is order
    /// isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        embeds(&pattern.0, &self.0, false)
    }

    /// Swaps the positions of two values.
    fn with_values_swapped(&self, a: u32, b: u32) -> Permutation {
        let pos = self.positions();
        let mut letters = self.0.clone();
        letters.swap(pos[a as usize], pos[b as usize]);
        Permutation(letters)
    }
}

impl fmt::Display for Permutation {
    /// Digit string for length at most 9, comma list otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
        } else {
            for (idx, x) in self.0.iter().enumerate() {
                if idx > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| PermutationError::BadToken(t.trim().to_string()))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| PermutationError::BadToken(c.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(letters)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some((1..=n as u32).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        // standard next-permutation step
        if let Some(i) = (0..succ.len().saturating_sub(1))
            .rev()
            .find(|&i| succ[i] < succ[i + 1])
        {
            let j = (i + 1..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i])
                .unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            next = Some(succ);
        }
        Some(Permutation(cur))
    })
}

/// `reduce` on a raw slice of distinct letters.
fn ranks(letters: &[u32]) -> Vec<u32> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    letters
        .iter()
        .map(|x| sorted.binary_search(x).unwrap() as u32 + 1)
        .collect()
}

/// Replaces letters by their ranks, keeping positions.
pub fn reduce(w: &Word) -> Permutation {
    Permutation(ranks(&w.0))
}

/// Whether `small` is order isomorphic to a subword of `big` whose `j`-th
/// letter is at least the `j`-th letter of `small`.
pub fn contains_pattern(small: &Word, big: &Word) -> bool {
    embeds(&small.0, &big.0, true)
}

fn embeds(small: &[u32], big: &[u32], pointwise: bool) -> bool {
    fn go(small: &[u32], big: &[u32], pointwise: bool, from: usize, chosen: &mut Vec<u32>) -> bool {
        let k = chosen.len();
        if k == small.len() {
            return true;
        }
        let remaining = small.len() - k;
        for idx in from..=big.len().saturating_sub(remaining) {
            let s = big[idx];
            if pointwise && s < small[k] {
                continue;
            }
            let consistent = chosen
                .iter()
                .zip(small)
                .all(|(&c, &w)| (c < s) == (w < small[k]));
            if !consistent {
                continue;
            }
            chosen.push(s);
            if go(small, big, pointwise, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    small.len() <= big.len()
        && go(
            small,
            big,
            pointwise,
            0,
            &mut Vec::with_capacity(small.len()),
        )
}

/// A rewrite `lhs -> rhs` applied to windows of consecutive positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    lhs: Permutation,
    rhs: Permutation,
}

impl RewriteRule {
    pub fn new(lhs: Permutation, rhs: Permutation) -> Result<Self, PermutationError> {
        if lhs.len() != rhs.len() || lhs == rhs {
            return Err(PermutationError::BadRule);
        }
        Ok(RewriteRule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Permutation {
        &self.lhs
    }

    pub fn rhs(&self) -> &Permutation {
        &self.rhs
    }

    /// Rewrites the window starting at 0-based position `start`, if its
    /// letters reduce to `lhs`.
    fn apply_at(&self, p: &Permutation, start: usize) -> Option<Permutation> {
        let k = self.lhs.len();
        let window = p.0.get(start..start + k)?;
        if ranks(window) != self.lhs.0 {
            return None;
        }
        let mut sorted = window.to_vec();
        sorted.sort_unstable();
        let mut letters = p.0.clone();
        for (slot, &r) in letters[start..start + k].iter_mut().zip(&self.rhs.0) {
            *slot = sorted[r as usize - 1];
        }
        Some(Permutation(letters))
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lhs, self.rhs)
    }
}

impl FromStr for RewriteRule {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PermutationError::BadRuleToken(s.to_string());
        let (l, r) = s
            .split_once("->")
            .or_else(|| s.split_once('-'))
            .ok_or_else(bad)?;
        RewriteRule::new(
            l.trim().parse().map_err(|_| bad())?,
            r.trim().parse().map_err(|_| bad())?,
        )
    }
}

impl Serialize for RewriteRule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RewriteRule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A single permutation-side step with its parameters. Values and
/// positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move")]
pub enum PermMove {
    /// Type II swap of values `low < high`.
    #[serde(rename = "II")]
    Swap { low: u32, high: u32 },
    /// Insert `value` so that it lands at `position`, shifting larger values up.
    #[serde(rename = "I")]
    Insert { value: u32, position: usize },
    /// Apply rewrite rule number `rule` to the window starting at `position`.
    #[serde(rename = "x")]
    Rewrite { rule: usize, position: usize },
}

impl PermMove {
    pub fn apply(
        &self,
        p: &Permutation,
        rules: &[RewriteRule],
    ) -> Result<Permutation, PermutationError> {
        let illegal = |why: &str| Err(PermutationError::IllegalMove(format!("{self}: {why}")));
        match *self {
            PermMove::Swap { low, high } => {
                if !swap_allowed(p, low, high) {
                    return illegal("Type II condition fails");
                }
                Ok(p.with_values_swapped(low, high))
            }
            PermMove::Insert { value, position } => {
                let n = p.len();
                if value == 0 || value as usize > n + 1 || position == 0 || position > n + 1 {
                    return illegal("value or position out of range");
                }
                Ok(insert(p, value, position - 1))
            }
            PermMove::Rewrite { rule, position } => {
                let Some(r) = rules.get(rule) else {
                    return illegal("unknown rule");
                };
                match position.checked_sub(1).and_then(|s| r.apply_at(p, s)) {
                    Some(q) => Ok(q),
                    None => illegal("window does not match rule"),
                }
            }
        }
    }
}

impl fmt::Display for PermMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermMove::Swap { low, high } => write!(f, "II swap {low} {high}"),
            PermMove::Insert { value, position } => write!(f, "I insert {value} at {position}"),
            PermMove::Rewrite { rule, position } => write!(f, "x rule {rule} at {position}"),
        }
    }
}

fn insert(p: &Permutation, value: u32, index: usize) -> Permutation {
    let mut letters: Vec<u32> =
        p.0.iter()
            .map(|&x| if x >= value { x + 1 } else { x })
            .collect();
    letters.insert(index, value);
    Permutation(letters)
}

/// Type II condition: `low` before `high`, and every value strictly between
/// them sits before `high`.
pub fn swap_allowed(p: &Permutation, low: u32, high: u32) -> bool {
    let n = p.len() as u32;
    if !(1 <= low && low < high && high <= n) {
        return false;
    }
    let pos = p.positions();
    let ph = pos[high as usize];
    pos[low as usize] < ph && (low + 1..high).all(|v| pos[v as usize] < ph)
}

/// Bruhat cover-style condition: `low` before `high`, and every value
/// strictly between them sits outside the positions spanned by the two.
pub fn bruhat_swap_allowed(p: &Permutation, low: u32, high: u32) -> bool {
    let n = p.len() as u32;
    if !(1 <= low && low < high && high <= n) {
        return false;
    }
    let pos = p.positions();
    let (pl, ph) = (pos[low as usize], pos[high as usize]);
    pl < ph && (low + 1..high).all(|v| pos[v as usize] < pl || pos[v as usize] > ph)
}

/// Type II swaps in canonical order: by value gap, then by smaller value.
pub fn swap_moves(p: &Permutation) -> Vec<(PermMove, Permutation)> {
    let n = p.len() as u32;
    let mut out = Vec::new();
    for gap in 1..n {
        for low in 1..=n - gap {
            let high = low + gap;
            if swap_allowed(p, low, high) {
                out.push((
                    PermMove::Swap { low, high },
                    p.with_values_swapped(low, high),
                ));
            }
        }
    }
    out
}

/// Every permutation obtained from `p` by one Type II swap.
pub fn type2_swaps(p: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = swap_moves(p).into_iter().map(|(_, q)| q).collect();
    out.sort();
    out
}

/// Single-letter insertions in canonical order (by position, then value).
///
/// Inserting `v` at position `i` and `v + 1` at `i + 1` can give the same
/// permutation; the move with the rightmost position represents the result.
pub fn insertion_moves(p: &Permutation) -> Vec<(PermMove, Permutation)> {
    let n = p.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for position in (1..=n + 1).rev() {
        for value in 1..=n as u32 + 1 {
            let q = insert(p, value, position - 1);
            if seen.insert(q.clone()) {
                out.push((position, value, q));
            }
        }
    }
    out.sort_by_key(|&(position, value, _)| (position, value));
    out.into_iter()
        .map(|(position, value, q)| (PermMove::Insert { value, position }, q))
        .collect()
}

/// Every permutation of length `n + 1` containing `p` as a pattern via one
/// inserted letter.
pub fn insertions(p: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = insertion_moves(p).into_iter().map(|(_, q)| q).collect();
    out.sort();
    out
}

pub fn rewrite_moves(p: &Permutation, rules: &[RewriteRule]) -> Vec<(PermMove, Permutation)> {
    let mut out = Vec::new();
    for (rule, r) in rules.iter().enumerate() {
        for start in 0..p.len() {
            if let Some(q) = r.apply_at(p, start) {
                out.push((
                    PermMove::Rewrite {
                        rule,
                        position: start + 1,
                    },
                    q,
                ));
            }
        }
    }
    out
}

pub fn extended_rewrites(p: &Permutation, rules: &[RewriteRule]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = rewrite_moves(p, rules)
        .into_iter()
        .map(|(_, q)| q)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Value pairs `(i, j)`, `i < j`, with `i` appearing after `j`.
pub fn inversions(p: &Permutation) -> Vec<(u32, u32)> {
    let pos = p.positions();
    let n = p.len() as u32;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if pos[i as usize] > pos[j as usize] {
                out.push((i, j));
            }
        }
    }
    out
}

/// Whether `b` is reachable from `a` by repeated Bruhat swaps.
pub fn bruhat_closure_leq(a: &Permutation, b: &Permutation) -> Result<bool, PermutationError> {
    if a.len() != b.len() {
        return Err(PermutationError::LengthMismatch(a.len(), b.len()));
    }
    let n = a.len() as u32;
    let mut seen = HashSet::from([a.clone()]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(p) = queue.pop_front() {
        if &p == b {
            return Ok(true);
        }
        for low in 1..n {
            for high in low + 1..=n {
                if bruhat_swap_allowed(&p, low, high) {
                    let q = p.with_values_swapped(low, high);
                    if seen.insert(q.clone()) {
                        queue.push_back(q);
                    }
                }
            }
        }
    }
    Ok(false)
}
