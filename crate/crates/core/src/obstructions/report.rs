use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::gen::{manifest_line, write_graph6, GENERATOR};
use crate::graph::Graph;

/// Minimal obstructions per order, each list sorted by canonical key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ObstructionReport {
    pub class_spec: String,
    /// Every searched order has an entry, possibly empty.
    pub per_order: BTreeMap<usize, Vec<CanonicalKey>>,
    pub bound_used: Option<usize>,
    /// Highest order searched exhaustively; `None` for runs over supplied
    /// input.
    pub complete_through: Option<usize>,
    /// Infinite family reported symbolically next to the lists.
    pub cycle_family: Option<String>,
}

impl ObstructionReport {
    pub fn total(&self) -> usize {
        self.per_order.values().map(Vec::len).sum()
    }

    pub fn count(&self, order: usize) -> usize {
        self.per_order.get(&order).map_or(0, Vec::len)
    }

    pub fn keys(&self) -> BTreeSet<CanonicalKey> {
        self.per_order.values().flatten().cloned().collect()
    }

    /// Ascending order, then canonical key.
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.per_order.values().flatten().map(CanonicalKey::to_graph)
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.per_order.iter().filter(|(_, v)| !v.is_empty()).map(|(&n, _)| n)
    }

    /// `key = value` lines.
    pub fn manifest(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "class = {}", self.class_spec);
        let _ = writeln!(s, "generator = {GENERATOR}");
        match self.complete_through {
            Some(n) => {
                let _ = writeln!(s, "complete_through = {n}");
            }
            None => {
                let _ = writeln!(s, "complete_through = input");
            }
        }
        match self.bound_used {
            Some(b) => {
                let _ = writeln!(s, "bound = {b}");
            }
            None => {
                let _ = writeln!(s, "bound = none");
            }
        }
        for (n, keys) in &self.per_order {
            let _ = writeln!(s, "count_n{n} = {}", keys.len());
        }
        let _ = writeln!(s, "total = {}", self.total());
        if let Some(f) = &self.cycle_family {
            let _ = writeln!(s, "cycle_family = {f}");
        }
        s
    }

    /// Writes `obstructions_n{k}.g6` for every non-empty order and
    /// `manifest.txt`. Returns the paths written.
    pub fn write_dir(&self, dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir).map_err(|source| Error::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut written = Vec::new();
        for (&n, keys) in self.per_order.iter().filter(|(_, v)| !v.is_empty()) {
            let path = dir.join(format!("obstructions_n{n}.g6"));
            let graphs: Vec<Graph> = keys.iter().map(CanonicalKey::to_graph).collect();
            write_graph6(&path, Some(&manifest_line(Some(n), graphs.len())), &graphs)?;
            written.push(path);
        }
        let path = dir.join("manifest.txt");
        fs::write(&path, self.manifest()).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        written.push(path);
        Ok(written)
    }
}
