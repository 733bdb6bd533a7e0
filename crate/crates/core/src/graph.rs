//! Simple undirected graphs on at most 64 vertices.
//!
//! Every neighbourhood fits in one `u64`, so adjacency tests, induced
//! subgraphs and subset counting are word operations. Graphs are values:
//! every edit returns a new graph.

use std::fmt;

use crate::error::GraphError;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn all(n: usize) -> Self {
        VertexSet(mask_below(n))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Iterates the set bits of a word from least to most significant.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A single editing step applied to a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edit {
    AddEdge(usize, usize),
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::AddEdge(u, v) => write!(f, "add-edge {u}-{v}"),
            Edit::DeleteEdge(u, v) => write!(f, "delete-edge {u}-{v}"),
            Edit::DeleteVertex(v) => write!(f, "delete-vertex {v}"),
        }
    }
}

/// Simple undirected graph with bitset adjacency rows.
///
/// Invariants: adjacency is symmetric and irreflexive, and no row has bits
/// at or above the order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > 64`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list. Repeated pairs collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices(n));
        }
        let g = Graph { n, adj: rows };
        let outside = !mask_below(n);
        for v in 0..n {
            let row = g.adj[v];
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            if row & outside != 0 {
                let vertex = (row & outside).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order: n });
            }
            for u in BitIter(row) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(GraphError::InvalidEdit {
                        action: "build from rows".into(),
                        reason: format!("row {v} lists {u} but row {u} omits {v}"),
                    });
                }
            }
        }
        Ok(g)
    }

    /// Rows must already satisfy the invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// `P_n`, the path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::build(n, &edges).expect("path edges are in range")
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::build(n, &edges).expect("cycle edges are in range")
    }

    /// Vertex-disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Graph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::all(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    /// Number of edges with both ends in `set`.
    #[inline]
    pub fn edges_within(&self, set: u64) -> usize {
        BitIter(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.adj[u] & !mask_below(u + 1)).map(move |v| (u, v)))
    }

    /// Non-edges as `(u, v)` with `u < v`, ordered like [`Graph::edges`].
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = mask_below(self.n);
        (0..self.n).flat_map(move |u| BitIter(!self.adj[u] & all & !mask_below(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let all = mask_below(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Flips the pair `{u, v}` without any precondition check.
    pub(crate) fn toggled(&self, u: usize, v: usize) -> Self {
        let mut adj = self.adj.clone();
        adj[u] ^= 1 << v;
        adj[v] ^= 1 << u;
        Graph { n: self.n, adj }
    }

    fn check_pair(&self, action: &str, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::InvalidEdit {
                action: action.to_string(),
                reason: format!("{u}-{v} is a loop"),
            });
        }
        Ok(())
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.edit(Edit::AddEdge(u, v))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.edit(Edit::DeleteEdge(u, v))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.edit(Edit::DeleteVertex(v))
    }

    /// Applies one edit. Adding requires a non-edge, deleting an edge
    /// requires an edge. Deleting a vertex compacts the remaining indices.
    pub fn edit(&self, action: Edit) -> Result<Self, GraphError> {
        match action {
            Edit::AddEdge(u, v) => {
                self.check_pair("add-edge", u, v)?;
                if self.has_edge(u, v) {
                    return Err(GraphError::InvalidEdit {
                        action: action.to_string(),
                        reason: format!("{u}-{v} is already an edge"),
                    });
                }
                Ok(self.toggled(u, v))
            }
            Edit::DeleteEdge(u, v) => {
                self.check_pair("delete-edge", u, v)?;
                if !self.has_edge(u, v) {
                    return Err(GraphError::InvalidEdit {
                        action: action.to_string(),
                        reason: format!("{u}-{v} is not an edge"),
                    });
                }
                Ok(self.toggled(u, v))
            }
            Edit::DeleteVertex(v) => {
                if v >= self.n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        order: self.n,
                    });
                }
                Ok(self.without_vertex(v))
            }
        }
    }

    /// `G - v` with indices above `v` shifted down by one.
    pub(crate) fn without_vertex(&self, v: usize) -> Self {
        let low = mask_below(v);
        let adj = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let row = self.adj[u];
                (row & low) | ((row >> 1) & !low)
            })
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// `G[T]`, relabelled by increasing original index.
    pub fn induced(&self, set: VertexSet) -> Result<Self, GraphError> {
        if set.0 & !mask_below(self.n) != 0 {
            let vertex = (set.0 & !mask_below(self.n)).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, order: self.n });
        }
        Ok(self.induced_unchecked(set.0))
    }

    pub(crate) fn induced_unchecked(&self, set: u64) -> Self {
        let members: Vec<usize> = BitIter(set).collect();
        let adj = members
            .iter()
            .map(|&u| {
                let row = self.adj[u] & set;
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| row >> w & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph { n: members.len(), adj }
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut adj = vec![0u64; self.n];
        for (v, &pv) in perm.iter().enumerate() {
            adj[pv] = BitIter(self.adj[v]).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// True if every vertex has degree two and the graph is connected with
    /// at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = BitIter(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == mask_below(self.n)
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(line: &str) -> Result<Self, crate::error::Graph6Error> {
        crate::graph6::decode(line.trim_end_matches(['\n', '\r']).as_bytes())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

/// A handful of small named graphs used throughout the crate.
pub mod named {
    use super::Graph;

    pub fn p4() -> Graph {
        Graph::path(4)
    }

    pub fn c4() -> Graph {
        Graph::cycle(4)
    }

    pub fn c5() -> Graph {
        Graph::cycle(5)
    }

    /// Two disjoint edges, the complement of `C4`.
    pub fn two_k2() -> Graph {
        Graph::build(4, &[(0, 1), (2, 3)]).unwrap()
    }
}
