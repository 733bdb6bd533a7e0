//! Base hereditary classes and induced-subgraph containment.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::{mask_below, named, BitIter, Graph};

/// A membership predicate on graphs. Implementations must be invariant
/// under relabelling; most are also hereditary.
pub trait GraphClass: Send + Sync {
    fn name(&self) -> String;
    fn contains(&self, g: &Graph) -> bool;
}

impl<C: GraphClass + ?Sized> GraphClass for &C {
    fn name(&self) -> String {
        (**self).name()
    }
    fn contains(&self, g: &Graph) -> bool {
        (**self).contains(g)
    }
}

impl<C: GraphClass + ?Sized> GraphClass for Box<C> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn contains(&self, g: &Graph) -> bool {
        (**self).contains(g)
    }
}

impl<C: GraphClass + ?Sized> GraphClass for Arc<C> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn contains(&self, g: &Graph) -> bool {
        (**self).contains(g)
    }
}

/// A class given by a closure.
pub struct FnClass<F> {
    name: String,
    f: F,
}

pub fn from_fn<F>(name: impl Into<String>, f: F) -> FnClass<F>
where
    F: Fn(&Graph) -> bool + Send + Sync,
{
    FnClass { name: name.into(), f }
}

impl<F: Fn(&Graph) -> bool + Send + Sync> GraphClass for FnClass<F> {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn contains(&self, g: &Graph) -> bool {
        (self.f)(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PQParams {
    pub p: usize,
    pub q: usize,
}

impl PQParams {
    pub fn new(p: usize, q: usize) -> Self {
        PQParams { p, q }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HereditaryClass {
    Split,
    Threshold,
    Cograph,
    Chordal,
    /// One side has independence number at most `p`, the other clique
    /// number at most `q`.
    PqSplit(PQParams),
    /// One side is at most `p` edge additions from a clique, the other has
    /// at most `q` edges.
    PqEdgeSplit(PQParams),
    /// Graphs containing none of `forbidden` as an induced subgraph.
    Forbidding {
        name: String,
        forbidden: Vec<Graph>,
    },
}

impl HereditaryClass {
    pub fn forbidding(name: impl Into<String>, forbidden: Vec<Graph>) -> Self {
        HereditaryClass::Forbidding {
            name: name.into(),
            forbidden,
        }
    }

    /// Parses `split`, `threshold`, `cograph`, `chordal`, `pq-split:p,q`,
    /// `pq-edge-split:p,q` or `forbid:<graph6>,<graph6>,..`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadClassSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let pq = |args: &str| -> Result<PQParams> {
            let (p, q) = args.split_once(',').ok_or_else(|| bad("expected p,q"))?;
            let p = p.trim().parse().map_err(|_| bad("p is not a non-negative integer"))?;
            let q = q.trim().parse().map_err(|_| bad("q is not a non-negative integer"))?;
            Ok(PQParams { p, q })
        };
        match spec.trim() {
            "split" => Ok(HereditaryClass::Split),
            "threshold" => Ok(HereditaryClass::Threshold),
            "cograph" => Ok(HereditaryClass::Cograph),
            "chordal" => Ok(HereditaryClass::Chordal),
            s => {
                if let Some(args) = s.strip_prefix("pq-split:") {
                    Ok(HereditaryClass::PqSplit(pq(args)?))
                } else if let Some(args) = s.strip_prefix("pq-edge-split:") {
                    Ok(HereditaryClass::PqEdgeSplit(pq(args)?))
                } else if let Some(list) = s.strip_prefix("forbid:") {
                    let forbidden = list
                        .split(',')
                        .map(|g6| Graph::from_graph6(g6.trim()).map_err(|e| bad(&e.to_string())))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(HereditaryClass::forbidding(s, forbidden))
                } else {
                    Err(bad("unknown class"))
                }
            }
        }
    }

    /// The finite minimal forbidden induced subgraph list, where known.
    pub fn forbidden(&self) -> Option<Vec<Graph>> {
        match self {
            HereditaryClass::Split => Some(vec![named::two_k2(), named::c4(), named::c5()]),
            HereditaryClass::Threshold => Some(vec![named::two_k2(), named::c4(), named::p4()]),
            HereditaryClass::Cograph => Some(vec![named::p4()]),
            HereditaryClass::PqEdgeSplit(PQParams { p: 0, q: 0 })
            | HereditaryClass::PqSplit(PQParams { p: 1, q: 1 }) => HereditaryClass::Split.forbidden(),
            HereditaryClass::Forbidding { forbidden, .. } => Some(forbidden.clone()),
            HereditaryClass::Chordal | HereditaryClass::PqSplit(_) | HereditaryClass::PqEdgeSplit(_) => None,
        }
    }

    pub fn is_complement_closed(&self) -> bool {
        match self {
            HereditaryClass::Split | HereditaryClass::Threshold | HereditaryClass::Cograph => true,
            HereditaryClass::Chordal => false,
            HereditaryClass::PqSplit(pq) | HereditaryClass::PqEdgeSplit(pq) => pq.p == pq.q,
            HereditaryClass::Forbidding { forbidden, .. } => {
                let keys: BTreeSet<_> = forbidden.iter().map(canonical_key).collect();
                let comp: BTreeSet<_> = forbidden.iter().map(|g| canonical_key(&g.complement())).collect();
                keys == comp
            }
        }
    }
}

impl fmt::Display for HereditaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HereditaryClass::Split => f.write_str("split"),
            HereditaryClass::Threshold => f.write_str("threshold"),
            HereditaryClass::Cograph => f.write_str("cograph"),
            HereditaryClass::Chordal => f.write_str("chordal"),
            HereditaryClass::PqSplit(pq) => write!(f, "pq-split:{},{}", pq.p, pq.q),
            HereditaryClass::PqEdgeSplit(pq) => write!(f, "pq-edge-split:{},{}", pq.p, pq.q),
            HereditaryClass::Forbidding { name, .. } => f.write_str(name),
        }
    }
}

impl GraphClass for HereditaryClass {
    fn name(&self) -> String {
        self.to_string()
    }

    fn contains(&self, g: &Graph) -> bool {
        match self {
            HereditaryClass::Split => is_split(g),
            HereditaryClass::Threshold => is_threshold(g),
            HereditaryClass::Cograph => is_cograph(g),
            HereditaryClass::Chordal => is_chordal(g),
            HereditaryClass::PqSplit(pq) => is_pq_split(g, *pq),
            HereditaryClass::PqEdgeSplit(pq) => is_pq_edge_split(g, *pq),
            HereditaryClass::Forbidding { forbidden, .. } => excludes_all(g, forbidden),
        }
    }
}

/// True if no graph in `forbidden` is an induced subgraph of `g`.
pub fn excludes_all(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|h| !contains_induced(g, h))
}

/// True if some vertex subset of `g` induces a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.order(), h.order());
    if k > n {
        return false;
    }
    if k == 0 {
        return true;
    }
    if h.edge_count() > g.edge_count() || h.non_edge_count() > g.non_edge_count() {
        return false;
    }
    // Place high-degree pattern vertices first; they constrain the most.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v).max(k - 1 - h.degree(v))));
    let mut image = vec![0usize; k];
    extend_embedding(g, h, &order, 0, &mut image, 0)
}

fn extend_embedding(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let (n, k) = (g.order(), h.order());
    let hv = order[depth];
    let hdeg = h.degree(hv);
    let hnon = k - 1 - hdeg;
    let mut cand = mask_below(n) & !used;
    for &prev in &order[..depth] {
        let gv = image[prev];
        if h.has_edge(prev, hv) {
            cand &= g.rows()[gv];
        } else {
            cand &= !g.rows()[gv];
        }
    }
    for gv in BitIter(cand) {
        let gdeg = g.degree(gv);
        if gdeg < hdeg || n - 1 - gdeg < hnon {
            continue;
        }
        image[hv] = gv;
        if extend_embedding(g, h, order, depth + 1, image, used | 1 << gv) {
            return true;
        }
    }
    false
}

/// Degree-sequence split test: with degrees `d_1 >= .. >= d_n` and
/// `m = max { i : d_i >= i - 1 }`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &Graph) -> bool {
    let mut d = g.degree_sequence();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = d
        .iter()
        .enumerate()
        .filter(|&(i, &di)| di >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

/// Split test through the forbidden list `{2K2, C4, C5}`.
pub fn is_split_by_forbidden(g: &Graph) -> bool {
    excludes_all(g, &[named::two_k2(), named::c4(), named::c5()])
}

/// Threshold test by repeatedly removing an isolated or dominating vertex.
pub fn is_threshold(g: &Graph) -> bool {
    let rows = g.rows();
    let mut alive = g.vertices().0;
    while alive != 0 {
        let size = alive.count_ones();
        let Some(v) = BitIter(alive).find(|&v| {
            let d = (rows[v] & alive).count_ones();
            d == 0 || d == size - 1
        }) else {
            return false;
        };
        alive &= !(1 << v);
    }
    true
}

/// Cograph test: no 4-subset induces `P4`, the only 4-vertex graph with
/// three edges and degrees `{1, 1, 2, 2}`.
pub fn is_cograph(g: &Graph) -> bool {
    let n = g.order();
    let rows = g.rows();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let set = 1u64 << a | 1 << b | 1 << c | 1 << d;
                    let degs = [a, b, c, d].map(|v| (rows[v] & set).count_ones());
                    let edges: u32 = degs.iter().sum::<u32>() / 2;
                    if edges == 3 && degs.iter().filter(|&&x| x == 1).count() == 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lexicographic breadth-first search order, by partition refinement.
/// Ties go to the smallest index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let rows = g.rows();
    let mut cells: Vec<u64> = if g.order() == 0 { vec![] } else { vec![g.vertices().0] };
    let mut order = Vec::with_capacity(g.order());
    while let Some(&first) = cells.first() {
        let v = first.trailing_zeros() as usize;
        order.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        for cell in cells {
            let rest = cell & !(1 << v);
            let inside = rest & rows[v];
            let outside = rest & !rows[v];
            if inside != 0 {
                next.push(inside);
            }
            if outside != 0 {
                next.push(outside);
            }
        }
        cells = next;
    }
    order
}

/// True if `peo` (elimination order, first eliminated first) is a perfect
/// elimination ordering of `g`.
pub fn is_perfect_elimination_order(g: &Graph, peo: &[usize]) -> bool {
    let rows = g.rows();
    let mut position = vec![0usize; g.order()];
    for (i, &v) in peo.iter().enumerate() {
        position[v] = i;
    }
    let mut later = 0u64;
    for &v in peo.iter().rev() {
        let up = rows[v] & later;
        if up != 0 {
            let parent = BitIter(up).min_by_key(|&u| position[u]).expect("non-empty");
            if up & !(1 << parent) & !rows[parent] != 0 {
                return false;
            }
        }
        later |= 1 << v;
    }
    true
}

/// Chordal test: the reverse of a LexBFS order is a perfect elimination
/// ordering exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let mut peo = lex_bfs(g);
    peo.reverse();
    is_perfect_elimination_order(g, &peo)
}

/// True if the vertices in `within` contain a clique of `size` vertices.
pub fn has_clique(g: &Graph, within: u64, size: usize) -> bool {
    fn go(rows: &[u64], mut cand: u64, size: usize) -> bool {
        if size == 0 {
            return true;
        }
        while cand.count_ones() as usize >= size {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if go(rows, cand & rows[v], size - 1) {
                return true;
            }
        }
        false
    }
    go(g.rows(), within, size)
}

/// True if the vertices in `within` contain a stable set of `size` vertices.
pub fn has_stable_set(g: &Graph, within: u64, size: usize) -> bool {
    fn go(rows: &[u64], mut cand: u64, size: usize) -> bool {
        if size == 0 {
            return true;
        }
        while cand.count_ones() as usize >= size {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if go(rows, cand & !rows[v], size - 1) {
                return true;
            }
        }
        false
    }
    go(g.rows(), within, size)
}

/// Exhaustive search for `(V1, V2)` with independence number of `G[V1]` at
/// most `p` and clique number of `G[V2]` at most `q`.
pub fn is_pq_split(g: &Graph, params: PQParams) -> bool {
    pq_split_partition(g, params).is_some()
}

/// The first bipartition found, as the bitmask of `V1`.
pub fn pq_split_partition(g: &Graph, PQParams { p, q }: PQParams) -> Option<u64> {
    let all = g.vertices().0;
    let n = g.order();
    (0u64..1 << n).find(|&v1| {
        let v2 = all & !v1;
        // a set with at most p (resp. q) vertices passes trivially
        (v1.count_ones() as usize <= p || !has_stable_set(g, v1, p + 1))
            && (v2.count_ones() as usize <= q || !has_clique(g, v2, q + 1))
    })
}

/// Exhaustive search for `(V1, V2)` with at most `p` non-edges inside `V1`
/// and at most `q` edges inside `V2`.
pub fn is_pq_edge_split(g: &Graph, params: PQParams) -> bool {
    pq_edge_split_partition(g, params).is_some()
}

pub fn pq_edge_split_partition(g: &Graph, PQParams { p, q }: PQParams) -> Option<u64> {
    let all = g.vertices().0;
    let n = g.order();
    (0u64..1 << n).find(|&v1| {
        let size = v1.count_ones() as usize;
        let missing = size * size.saturating_sub(1) / 2 - g.edges_within(v1);
        missing <= p && g.edges_within(all & !v1) <= q
    })
}
