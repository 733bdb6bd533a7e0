//! Isomorph-free generation of all graphs of a given order, and graph6
//! file ingestion.
//!
//! Generation is orderly by vertex augmentation. Each canonical graph `P`
//! on `n - 1` vertices is extended by a new vertex `w` over every possible
//! neighbourhood. A child `C` is kept only if `P` is its canonical parent:
//! among the vertices of `C` minimising the invariant
//! `(degree, sum of neighbour degrees)`, deleting `w` must give the
//! smallest canonical key. Every isomorphism class then has exactly one
//! parent class, so duplicates can only arise among the children of a
//! single parent and are removed there. Parents shard independently.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Largest order generated exhaustively.
pub const EXHAUSTIVE_CAP: usize = 10;

/// Version string written into file manifests.
pub const GENERATOR: &str = concat!("hereditary ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub order: usize,
    /// Keep only graphs whose edge count lies in this range.
    pub edges: Option<RangeInclusive<usize>>,
}

impl GenSpec {
    pub fn order(order: usize) -> Self {
        GenSpec { order, edges: None }
    }

    pub fn with_edges(mut self, edges: RangeInclusive<usize>) -> Self {
        self.edges = Some(edges);
        self
    }

    fn check(&self) -> Result<()> {
        if self.order > EXHAUSTIVE_CAP {
            return Err(Error::OverCap {
                requested: self.order,
                cap: EXHAUSTIVE_CAP,
            });
        }
        Ok(())
    }

    fn keeps(&self, g: &Graph) -> bool {
        self.edges.as_ref().is_none_or(|r| r.contains(&g.edge_count()))
    }
}

/// `(degree, sum of neighbour degrees)` for every vertex.
fn vertex_invariants(g: &Graph) -> Vec<(u32, u32)> {
    let rows = g.rows();
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    rows.iter()
        .enumerate()
        .map(|(v, &r)| (deg[v], BitIter(r).map(|u| deg[u]).sum()))
        .collect()
}

fn accepts(child: &Graph, parent_key: &CanonicalKey) -> bool {
    let w = child.order() - 1;
    let inv = vertex_invariants(child);
    let best = *inv.iter().min().expect("child has a vertex");
    if inv[w] != best {
        return false;
    }
    (0..w)
        .filter(|&v| inv[v] == best)
        .all(|v| canonical_key(&child.without_vertex(v)) >= *parent_key)
}

/// Canonical children of one canonical parent, in order of first appearance.
fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let parent_key = canonical_key(parent);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    for nbhd in 0u64..1 << m {
        for (u, row) in rows[..m].iter_mut().enumerate() {
            *row = (*row & !(1 << m)) | (nbhd >> u & 1) << m;
        }
        rows[m] = nbhd;
        let child = Graph::from_rows_unchecked(rows.clone());
        if !accepts(&child, &parent_key) {
            continue;
        }
        let cf = canonical_form(&child);
        if seen.insert(cf.key) {
            out.push(cf.graph);
        }
    }
    out
}

fn level_below(order: usize, parallel: bool) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for _ in 0..order.saturating_sub(1) {
        level = expand(&level, parallel);
    }
    level
}

fn expand(level: &[Graph], parallel: bool) -> Vec<Graph> {
    if parallel {
        level.par_iter().map(children).collect::<Vec<_>>().concat()
    } else {
        level.iter().flat_map(children).collect()
    }
}

/// Every graph of the requested order exactly once up to isomorphism, as
/// canonical representatives in a deterministic order. Order 0 yields the
/// null graph.
pub fn enumerate_graphs(spec: &GenSpec) -> Result<Vec<Graph>> {
    spec.check()?;
    let mut out = Vec::new();
    for_each_graph(spec, |g| out.push(g))?;
    Ok(out)
}

/// Same output and order as [`enumerate_graphs`], sharded over the current
/// rayon pool.
pub fn enumerate_graphs_par(spec: &GenSpec) -> Result<Vec<Graph>> {
    spec.check()?;
    if spec.order == 0 {
        return enumerate_graphs(spec);
    }
    let parents = level_below(spec.order, true);
    let mut out = expand(&parents, true);
    out.retain(|g| spec.keeps(g));
    Ok(out)
}

/// All levels `0..=n_max` at once: entry `n` holds the graphs of order `n`
/// as [`enumerate_graphs`] would return them. Parallel over parents.
pub fn enumerate_levels(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    GenSpec::order(n_max).check()?;
    let mut levels = vec![vec![Graph::empty(0)]];
    for _ in 0..n_max {
        let next = expand(levels.last().expect("non-empty"), true);
        levels.push(next);
    }
    Ok(levels)
}

/// Streams the final level without materialising it.
pub fn for_each_graph(spec: &GenSpec, mut f: impl FnMut(Graph)) -> Result<()> {
    spec.check()?;
    if spec.order == 0 {
        let g = Graph::empty(0);
        if spec.keeps(&g) {
            f(g);
        }
        return Ok(());
    }
    for parent in level_below(spec.order, false) {
        for g in children(&parent) {
            if spec.keeps(&g) {
                f(g);
            }
        }
    }
    Ok(())
}

/// Parses graph6 lines. Lines starting with `>>` are comments, except that
/// a leading `>>graph6<<` header is stripped. Blank lines are skipped.
pub fn parse_graph6<R: BufRead>(reader: R, path: &Path) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut body = line.trim_end_matches('\r');
        if let Some(rest) = body.strip_prefix(">>graph6<<") {
            body = rest;
        } else if body.starts_with(">>") {
            continue;
        }
        if body.is_empty() {
            continue;
        }
        let g = crate::graph6::decode(body.as_bytes()).map_err(|source| Error::Graph6Line {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        out.push(g);
    }
    Ok(out)
}

/// Reads a graph6 file in file order, without deduplication.
pub fn read_graph6(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph6(BufReader::new(file), path)
}

/// The `>>` comment line written ahead of generated graph6 files.
pub fn manifest_line(order: Option<usize>, count: usize) -> String {
    match order {
        Some(n) => format!(">> order={n}, count={count}, generator={GENERATOR}"),
        None => format!(">> count={count}, generator={GENERATOR}"),
    }
}

pub fn write_graph6_to<W: Write>(mut w: W, header: Option<&str>, graphs: &[Graph]) -> std::io::Result<()> {
    if let Some(h) = header {
        writeln!(w, "{h}")?;
    }
    for g in graphs {
        w.write_all(&crate::graph6::encode_bytes(g))?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

pub fn write_graph6(path: impl AsRef<Path>, header: Option<&str>, graphs: &[Graph]) -> Result<()> {
    let path = path.as_ref();
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io)?;
    write_graph6_to(BufWriter::new(file), header, graphs).map_err(io)
}
