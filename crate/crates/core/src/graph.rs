//! Inversion graphs of permutations.
//!
//! [`LabeledGraph`] keeps vertex labels `1..=n`; it is the carrier for the
//! Koh–Ree properties and for recovering a permutation from its graph.
//! [`UnlabeledGraph`] wraps a labeled graph together with a canonical form,
//! so equality is isomorphism.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::permutation::{all_permutations, inversions, Permutation};

/// Largest host graph accepted by the subgraph and induced-subgraph tests.
pub const SUBGRAPH_CAP: usize = 10;

/// Default vertex cap for [`is_permutation_graph`].
pub const RECOGNITION_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0}-{1} is out of range for n={2}")]
    OutOfRange(u32, u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("malformed graph literal: {0}")]
    Parse(String),
    #[error("graph is not transitive (P1 fails)")]
    NotTransitive,
    #[error("graph violates the betweenness property (P2 fails)")]
    NotBetween,
    #[error("precedence relation does not linearize; inconsistent input")]
    Inconsistent,
    #[error("graph has {n} vertices, above the cap of {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("fork parameter must be at least 1")]
    BadForkSize,
}

/// A simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<bool>>,
}

impl LabeledGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x == y {
                return Err(GraphError::SelfLoop(x));
            }
            let (i, j) = (x.min(y), x.max(y));
            if i == 0 || j as usize > n {
                return Err(GraphError::OutOfRange(i, j, n));
            }
            if !set.insert((i, j)) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
        }
        let mut adj = vec![vec![false; n]; n];
        for &(i, j) in &set {
            adj[i as usize - 1][j as usize - 1] = true;
            adj[j as usize - 1][i as usize - 1] = true;
        }
        Ok(LabeledGraph {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(i, j)`, `i < j`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        i != j
            && (1..=self.n as u32).contains(&i)
            && (1..=self.n as u32).contains(&j)
            && self.adj[i as usize - 1][j as usize - 1]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize - 1].iter().filter(|&&b| b).count()
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[v as usize - 1]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(u, _)| u as u32 + 1)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (1..=self.n as u32).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// DOT rendering; the edge-list literal is embedded in a leading comment
    /// so the output can be parsed back with [`LabeledGraph::from_dot`].
    pub fn to_dot(&self, with_labels: bool) -> String {
        let mut s = format!("// {self}\ngraph G {{\n");
        for v in 1..=self.n {
            if with_labels {
                s.push_str(&format!("  {v} [label=\"{v}\"];\n"));
            } else {
                s.push_str(&format!("  {v} [label=\"\"];\n"));
            }
        }
        for (i, j) in &self.edges {
            s.push_str(&format!("  {i} -- {j};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn from_dot(dot: &str) -> Result<Self, GraphError> {
        let literal = dot
            .lines()
            .find_map(|l| l.trim().strip_prefix("//"))
            .ok_or_else(|| GraphError::Parse("DOT input lacks the edge-list comment".into()))?;
        literal.trim().parse()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for (i, j) in &self.edges {
            write!(f, " {i}-{j}")?;
        }
        Ok(())
    }
}

impl FromStr for LabeledGraph {
    type Err = GraphError;

    /// Parses `"n=6; 1-4 2-4 3-4 3-5 3-6"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, body) = s.split_once(';').unwrap_or((s, ""));
        let n: usize = head
            .trim()
            .strip_prefix("n=")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| {
                GraphError::Parse(format!("expected n=<count>, got {:?}", head.trim()))
            })?;
        let mut edges = Vec::new();
        for token in body.split_whitespace() {
            let parsed = token
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.parse::<u32>().ok()?)));
            match parsed {
                Some(e) => edges.push(e),
                None => return Err(GraphError::Parse(format!("bad edge token {token:?}"))),
            }
        }
        LabeledGraph::new(n, edges)
    }
}

/// Label-invariant canonical form: vertex count plus the packed upper
/// triangle of the adjacency matrix under the canonical ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

/// A graph considered up to isomorphism.
#[derive(Debug, Clone)]
pub struct UnlabeledGraph {
    graph: LabeledGraph,
    canon: CanonicalForm,
}

impl UnlabeledGraph {
    pub fn new(graph: LabeledGraph) -> Self {
        let canon = canonical_form(&graph);
        UnlabeledGraph { graph, canon }
    }

    /// One representative labeling.
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn canonical_form(&self) -> &CanonicalForm {
        &self.canon
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot(false)
    }
}

impl PartialEq for UnlabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.canon == other.canon
    }
}

impl Eq for UnlabeledGraph {}

impl From<LabeledGraph> for UnlabeledGraph {
    fn from(g: LabeledGraph) -> Self {
        UnlabeledGraph::new(g)
    }
}

fn pack(g: &LabeledGraph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for p in 0..n {
        for q in p + 1..n {
            if g.adj[order[p]][order[q]] {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Refines an ordered partition until every cell is equitable. Cells split
/// by each vertex's neighbour counts into the current cells, ordered by that
/// signature, so the result depends only on the graph structure.
fn refine(g: &LabeledGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0usize; g.n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; cells.len()];
                    for u in 0..g.n {
                        if g.adj[v][u] {
                            sig[cell_of[u]] += 1;
                        }
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for idx in 0..keyed.len() {
                if idx > 0 && keyed[idx].0 != keyed[idx - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(keyed[idx].1);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &LabeledGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let key = pack(g, &order);
            if best.as_ref().is_none_or(|b| key.cmp(b) == Ordering::Less) {
                *best = Some(key);
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut split = cells.clone();
                let rest: Vec<usize> = split[target].iter().copied().filter(|&u| u != v).collect();
                split.splice(target..=target, [vec![v], rest]);
                search(g, split, best);
            }
        }
    }
}

/// Canonical form by individualisation and refinement over the full search
/// tree (no automorphism pruning).
pub fn canonical_form(g: &LabeledGraph) -> CanonicalForm {
    if g.n == 0 {
        return CanonicalForm {
            n: 0,
            bits: Vec::new(),
        };
    }
    let mut best = None;
    search(g, vec![(0..g.n).collect()], &mut best);
    CanonicalForm {
        n: g.n,
        bits: best.expect("non-empty search tree"),
    }
}

pub fn is_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    a.n == b.n
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

/// Graph on `1..=n` whose edges are the inversions of `p`.
pub fn permutation_graph(p: &Permutation) -> LabeledGraph {
    LabeledGraph::new(p.len(), inversions(p)).expect("inversions form a simple graph")
}

/// Result of checking the two Koh–Ree properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KohRee {
    /// P1: `(i,j), (j,k)` with `i < j < k` force `(i,k)`.
    pub p1: bool,
    /// P2: `(i,k)` with `i < j < k` forces `(i,j)` or `(j,k)`.
    pub p2: bool,
}

impl KohRee {
    pub fn holds(&self) -> bool {
        self.p1 && self.p2
    }
}

pub fn koh_ree_check(g: &LabeledGraph) -> KohRee {
    let n = g.n as u32;
    let mut p1 = true;
    let mut p2 = true;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if g.has_edge(i, j) && g.has_edge(j, k) && !g.has_edge(i, k) {
                    p1 = false;
                }
                if g.has_edge(i, k) && !g.has_edge(i, j) && !g.has_edge(j, k) {
                    p2 = false;
                }
            }
        }
    }
    KohRee { p1, p2 }
}

/// The unique permutation whose inversion set is the edge set of `g`.
pub fn permutation_from_labeled(g: &LabeledGraph) -> Result<Permutation, GraphError> {
    let kr = koh_ree_check(g);
    if !kr.p1 {
        return Err(GraphError::NotTransitive);
    }
    if !kr.p2 {
        return Err(GraphError::NotBetween);
    }
    let n = g.n as u32;
    let precedes = |i: u32, j: u32| (i < j && !g.has_edge(i, j)) || (i > j && g.has_edge(j, i));
    // position of a value = number of values preceding it
    let mut letters = vec![0u32; g.n];
    for v in 1..=n {
        let slot = (1..=n).filter(|&u| u != v && precedes(u, v)).count();
        if letters[slot] != 0 {
            return Err(GraphError::Inconsistent);
        }
        letters[slot] = v;
    }
    let p = Permutation::new(letters).map_err(|_| GraphError::Inconsistent)?;
    if permutation_graph(&p) != *g {
        return Err(GraphError::Inconsistent);
    }
    Ok(p)
}

/// Some permutation whose inversion graph is isomorphic to `g`, found by
/// scanning `S_n` in lexicographic order.
pub fn is_permutation_graph(
    g: &UnlabeledGraph,
    cap: usize,
) -> Result<Option<Permutation>, GraphError> {
    let n = g.graph.n;
    if n > cap {
        return Err(GraphError::AboveCap { n, cap });
    }
    if n == 0 {
        return Ok(None);
    }
    let edges = g.graph.edge_count();
    let degrees = g.graph.degree_sequence();
    Ok(all_permutations(n).find(|p| {
        p.inversion_count() == edges && {
            let h = permutation_graph(p);
            h.degree_sequence() == degrees && canonical_form(&h) == g.canon
        }
    }))
}

/// The fork `F_k`: a path on `k` vertices with two pendant leaves on each
/// end. Path vertices are `1..=k`; leaves `k+1, k+2` hang on vertex 1 and
/// `k+3, k+4` on vertex `k`.
pub fn fork_graph(k: usize) -> Result<UnlabeledGraph, GraphError> {
    if k < 1 {
        return Err(GraphError::BadForkSize);
    }
    let k32 = k as u32;
    let mut edges: Vec<(u32, u32)> = (1..k32).map(|v| (v, v + 1)).collect();
    edges.extend([(1, k32 + 1), (1, k32 + 2), (k32, k32 + 3), (k32, k32 + 4)]);
    Ok(UnlabeledGraph::new(LabeledGraph::new(k + 4, edges)?))
}

/// `F_{2n}` with the labeling that makes it an inversion graph: leaves 1
/// and 2 on the left fork vertex, the path reading `4,3,6,5,…,2n+2,2n+1`,
/// leaves `2n+3, 2n+4` on the right fork vertex.
pub fn fork_labeling(n: usize) -> Result<LabeledGraph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadForkSize);
    }
    let m = n as u32;
    let path: Vec<u32> = (2..=m + 1).flat_map(|k| [2 * k, 2 * k - 1]).collect();
    let (left, right) = (path[0], *path.last().unwrap());
    let mut edges = vec![(1, left), (2, left), (right, 2 * m + 3), (right, 2 * m + 4)];
    edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    LabeledGraph::new(2 * n + 4, edges)
}

/// The permutation `p_{2n}` read off the labeled fork `F_{2n}`.
pub fn fork_permutation(n: usize) -> Result<Permutation, GraphError> {
    permutation_from_labeled(&fork_labeling(n)?)
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn connected_pairs(g: &LabeledGraph) -> Vec<Vec<u32>> {
    let mut comp = vec![usize::MAX; g.n + 1];
    let mut out: Vec<Vec<u32>> = Vec::new();
    for s in 1..=g.n as u32 {
        if comp[s as usize] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s as usize] = id;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if comp[u as usize] == usize::MAX {
                    comp[u as usize] = id;
                    members.push(u);
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn has_cycle(g: &LabeledGraph) -> bool {
    g.edge_count() + connected_pairs(g).len() > g.n
}

/// `h` is isomorphic to an induced subgraph of `g`.
pub fn is_induced_subgraph(h: &LabeledGraph, g: &LabeledGraph) -> Result<bool, GraphError> {
    embed(h, g, true)
}

/// `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn is_subgraph(h: &LabeledGraph, g: &LabeledGraph) -> Result<bool, GraphError> {
    embed(h, g, false)
}

fn embed(h: &LabeledGraph, g: &LabeledGraph, induced: bool) -> Result<bool, GraphError> {
    for x in [h, g] {
        if x.n > SUBGRAPH_CAP {
            return Err(GraphError::AboveCap {
                n: x.n,
                cap: SUBGRAPH_CAP,
            });
        }
    }
    if h.n > g.n || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    // place high-degree pattern vertices first
    let mut order: Vec<usize> = (0..h.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v as u32 + 1)));
    let search = Embedding {
        h,
        g,
        induced,
        order,
        hdeg: (1..=h.n as u32).map(|v| h.degree(v)).collect(),
        gdeg: (1..=g.n as u32).map(|v| g.degree(v)).collect(),
    };
    Ok(search.extend(&mut Vec::new(), &mut vec![false; g.n]))
}

struct Embedding<'a> {
    h: &'a LabeledGraph,
    g: &'a LabeledGraph,
    induced: bool,
    order: Vec<usize>,
    hdeg: Vec<usize>,
    gdeg: Vec<usize>,
}

impl Embedding<'_> {
    fn extend(&self, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = image.len();
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for t in 0..self.g.n {
            if used[t] || self.gdeg[t] < self.hdeg[v] {
                continue;
            }
            let fits = self.order[..k].iter().zip(image.iter()).all(|(&u, &s)| {
                let he = self.h.adj[v][u];
                let ge = self.g.adj[t][s];
                if self.induced {
                    he == ge
                } else {
                    !he || ge
                }
            });
            if !fits {
                continue;
            }
            used[t] = true;
            image.push(t);
            if self.extend(image, used) {
                return true;
            }
            image.pop();
            used[t] = false;
        }
        false
    }
}
