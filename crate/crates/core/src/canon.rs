//! Canonical labelling and isomorphism testing.
//!
//! The labelling is found by individualisation and refinement: an ordered
//! partition of the vertices is refined to an equitable one, a vertex of the
//! first non-singleton cell is individualised, and the search recurses until
//! every cell is a singleton. Each discrete partition is a candidate
//! labelling; the canonical one is the candidate whose relabelled adjacency
//! matrix, read row by row, is lexicographically smallest. Automorphisms
//! found along the way prune equivalent branches.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::graph::{BitIter, Graph};
use crate::graph6;

/// graph6 bytes of the canonically relabelled graph. Equal keys mean
/// isomorphic graphs. Keys sort by order first, then by adjacency bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative this key encodes.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical keys are valid graph6")
    }

    pub fn order(&self) -> usize {
        self.to_graph().order()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.as_str())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `perm[v]` is the canonical label of input vertex `v`.
    pub perm: Vec<usize>,
    /// The input relabelled by `perm`; `key` is its graph6 encoding.
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut search = Search::new(g);
    let mut cells = search.initial_partition();
    search.refine(&mut cells);
    search.search(cells);
    let (_, lab) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    let graph = g.relabel(&perm);
    CanonicalForm {
        key: CanonicalKey(graph6::encode_bytes(&graph)),
        perm,
        graph,
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).key
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degree_sequence();
    let mut dh = h.degree_sequence();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_key(g) == canonical_key(h)
}

/// Row-major adjacency bits with column 0 most significant.
fn row_key(g: &Graph, lab: &[usize], perm: &[usize]) -> Vec<u64> {
    let n = g.order();
    lab.iter()
        .map(|&v| BitIter(g.rows()[v]).fold(0u64, |acc, u| acc | 1 << (n - 1 - perm[u])))
        .collect()
}

struct Leaf {
    path: Vec<usize>,
    key: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            path: Vec::new(),
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn initial_partition(&self) -> Vec<u64> {
        if self.g.order() == 0 {
            Vec::new()
        } else {
            vec![self.g.vertices().0]
        }
    }

    /// Splits cells by neighbour counts into each cell in turn until the
    /// partition is equitable. Sub-cells are ordered by increasing count, so
    /// the result depends only on the graph and the input partition.
    fn refine(&self, cells: &mut Vec<u64>) {
        let rows = self.g.rows();
        let mut buckets = [0u64; 65];
        'restart: loop {
            for si in 0..cells.len() {
                let splitter = cells[si];
                let mut out: Vec<u64> = Vec::with_capacity(self.g.order());
                let mut split = false;
                for &cell in cells.iter() {
                    if cell & (cell - 1) == 0 {
                        out.push(cell);
                        continue;
                    }
                    let (mut lo, mut hi) = (64usize, 0usize);
                    for v in BitIter(cell) {
                        let c = (rows[v] & splitter).count_ones() as usize;
                        buckets[c] |= 1 << v;
                        lo = lo.min(c);
                        hi = hi.max(c);
                    }
                    if lo == hi {
                        buckets[lo] = 0;
                        out.push(cell);
                        continue;
                    }
                    split = true;
                    for b in &mut buckets[lo..=hi] {
                        if *b != 0 {
                            out.push(*b);
                            *b = 0;
                        }
                    }
                }
                if split {
                    *cells = out;
                    continue 'restart;
                }
            }
            return;
        }
    }

    /// Orbit test under the automorphisms found so far that fix the
    /// current path pointwise.
    fn equivalent_to_explored(&self, w: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for a in &self.automorphisms {
            if self.path.iter().all(|&p| a[p] == p) {
                any = true;
                for (v, &av) in a.iter().enumerate() {
                    let (rv, ra) = (find(&mut parent, v), find(&mut parent, av));
                    if rv != ra {
                        parent[rv.max(ra)] = rv.min(ra);
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }

    /// Returns `Some(depth)` to abandon the search back to that depth.
    fn search(&mut self, cells: Vec<u64>) -> Option<usize> {
        let depth = self.path.len();
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells);
        };
        let cell = cells[ti];
        let mut explored = Vec::new();
        for w in BitIter(cell) {
            if !explored.is_empty() && self.equivalent_to_explored(w, &explored) {
                continue;
            }
            explored.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[ti + 1..]);
            self.refine(&mut child);
            self.path.push(w);
            let jump = self.search(child);
            self.path.pop();
            if let Some(t) = jump {
                if t < depth {
                    return Some(t);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.g.order();
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut perm = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            perm[v] = i;
        }
        let key = row_key(self.g, &lab, &perm);

        let Some(first) = &self.first else {
            self.best = Some((key.clone(), lab.clone()));
            self.first = Some(Leaf {
                path: self.path.clone(),
                key,
                lab,
            });
            return None;
        };

        if key == first.key {
            let auto = automorphism(&first.lab, &lab);
            let common = first.path.iter().zip(&self.path).take_while(|(a, b)| a == b).count();
            self.record(auto);
            return Some(common);
        }
        let best = self.best.as_mut().expect("best is set with first");
        match key.cmp(&best.0) {
            std::cmp::Ordering::Less => *best = (key, lab),
            std::cmp::Ordering::Equal => {
                let auto = automorphism(&best.1, &lab);
                self.record(auto);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    fn record(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().any(|(i, &a)| i != a) {
            self.automorphisms.push(auto);
        }
    }
}

/// Two labellings giving the same relabelled graph differ by an
/// automorphism mapping `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (&f, &t) in from.iter().zip(to) {
        a[f] = t;
    }
    a
}

/// One representative per isomorphism class, keyed and ordered by
/// canonical key. The first graph seen in a class is kept.
#[derive(Clone, Debug, Default)]
pub struct IsoClasses {
    classes: BTreeMap<CanonicalKey, Graph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns true if `g` opened a new class.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = canonical_key(&g);
        self.insert_keyed(key, g)
    }

    pub fn insert_keyed(&mut self, key: CanonicalKey, g: Graph) -> bool {
        match self.classes.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(g);
                true
            }
            btree_map::Entry::Occupied(_) => false,
        }
    }

    /// Merges another shard. Representatives already present win.
    pub fn merge(&mut self, other: IsoClasses) {
        for (k, g) in other.classes {
            self.classes.entry(k).or_insert(g);
        }
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.classes.contains_key(key)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.classes.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &Graph)> {
        self.classes.iter()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.classes.into_values().collect()
    }
}

impl FromIterator<Graph> for IsoClasses {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        let mut set = IsoClasses::new();
        for g in iter {
            set.insert(g);
        }
        set
    }
}

impl Extend<Graph> for IsoClasses {
    fn extend<I: IntoIterator<Item = Graph>>(&mut self, iter: I) {
        for g in iter {
            self.insert(g);
        }
    }
}

pub fn dedup<I: IntoIterator<Item = Graph>>(graphs: I) -> IsoClasses {
    graphs.into_iter().collect()
}
