//! Derived classes: edge-add, edge-apex and vertex-apex classes, their
//! bounded iterates, and unions of them.
//!
//! Every search is exhaustive over edit tuples and returns a certificate:
//! the edits that take the input into the base class.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::canon::{canonical_key, CanonicalKey};
use crate::classes::{GraphClass, HereditaryClass};
use crate::error::{Error, GraphError, Result};
use crate::graph::{BitIter, Edit, Graph};

/// Edits taking a graph into the base class, in application order:
/// additions, then edge deletions, then vertex deletions (highest index
/// first, so original labels stay valid). Empty when the graph is already a
/// member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate(pub Vec<Edit>);

impl Certificate {
    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph, GraphError> {
        self.0.iter().try_fold(g.clone(), |h, &e| h.edit(e))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("member");
        }
        let parts: Vec<String> = self.0.iter().map(Edit::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// G is in the base class or `G + e` is for some non-edge `e`.
pub fn edge_add_member<C: GraphClass + ?Sized>(g: &Graph, class: &C) -> Option<Certificate> {
    if class.contains(g) {
        return Some(Certificate::default());
    }
    g.non_edges()
        .find(|&(u, v)| class.contains(&g.toggled(u, v)))
        .map(|(u, v)| Certificate(vec![Edit::AddEdge(u, v)]))
}

/// G is in the base class or `G - e` is for some edge `e`.
pub fn edge_apex_member<C: GraphClass + ?Sized>(g: &Graph, class: &C) -> Option<Certificate> {
    if class.contains(g) {
        return Some(Certificate::default());
    }
    g.edges()
        .find(|&(u, v)| class.contains(&g.toggled(u, v)))
        .map(|(u, v)| Certificate(vec![Edit::DeleteEdge(u, v)]))
}

/// G is in the base class or `G - v` is for some vertex `v`. Base members
/// count even at order 0.
pub fn vertex_apex_member<C: GraphClass + ?Sized>(g: &Graph, class: &C) -> Option<Certificate> {
    if class.contains(g) {
        return Some(Certificate::default());
    }
    (0..g.order())
        .find(|&v| class.contains(&g.without_vertex(v)))
        .map(|v| Certificate(vec![Edit::DeleteVertex(v)]))
}

/// Calls `f` on every `k`-subset of `0..len` in lexicographic order until it
/// returns true.
fn any_combination(len: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k > len {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + len - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

type Pairs = Vec<(usize, usize)>;

/// Smallest budgets first. Returns `(added, deleted)` pairs in `g`'s labels.
fn edge_edit_search<C: GraphClass + ?Sized>(
    g: &Graph,
    class: &C,
    adds: usize,
    deletes: usize,
) -> Option<(Pairs, Pairs)> {
    let non_edges: Vec<_> = g.non_edges().collect();
    let edges: Vec<_> = g.edges().collect();
    let mut found = None;
    for a in 0..=adds.min(non_edges.len()) {
        let hit = any_combination(non_edges.len(), a, &mut |ai| {
            let mut rows = g.rows().to_vec();
            for &i in ai {
                let (u, v) = non_edges[i];
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            for d in 0..=deletes.min(edges.len()) {
                let hit = any_combination(edges.len(), d, &mut |di| {
                    let mut r = rows.clone();
                    for &i in di {
                        let (u, v) = edges[i];
                        r[u] &= !(1 << v);
                        r[v] &= !(1 << u);
                    }
                    if class.contains(&Graph::from_rows_unchecked(r)) {
                        found = Some((
                            ai.iter().map(|&i| non_edges[i]).collect(),
                            di.iter().map(|&i| edges[i]).collect(),
                        ));
                        true
                    } else {
                        false
                    }
                });
                if hit {
                    return true;
                }
            }
            false
        });
        if hit {
            return found;
        }
    }
    None
}

/// At most `adds` additions, then at most `edge_deletes` edge deletions,
/// then at most `vertex_deletes` vertex deletions land in `class`.
pub fn composed_member<C: GraphClass + ?Sized>(
    g: &Graph,
    class: &C,
    adds: usize,
    edge_deletes: usize,
    vertex_deletes: usize,
) -> Option<Certificate> {
    let n = g.order();
    let all = g.vertices().0;
    let mut result = None;
    for r in 0..=vertex_deletes.min(n) {
        let hit = any_combination(n, r, &mut |removed| {
            let keep = removed.iter().fold(all, |m, &v| m & !(1 << v));
            let h = g.induced_unchecked(keep);
            let Some((added, deleted)) = edge_edit_search(&h, class, adds, edge_deletes) else {
                return false;
            };
            let label: Vec<usize> = BitIter(keep).collect();
            let mut edits: Vec<Edit> = added
                .into_iter()
                .map(|(u, v)| Edit::AddEdge(label[u], label[v]))
                .collect();
            edits.extend(deleted.into_iter().map(|(u, v)| Edit::DeleteEdge(label[u], label[v])));
            edits.extend(removed.iter().rev().map(|&v| Edit::DeleteVertex(v)));
            result = Some(Certificate(edits));
            true
        });
        if hit {
            return result;
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Additions, then edge deletions, then vertex deletions, all within
    /// budget.
    Single,
    /// Any one of the three pure budgets suffices alone.
    Union,
}

/// A derived class: a base class with edit budgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSpec {
    pub base: HereditaryClass,
    pub adds: usize,
    pub edge_deletes: usize,
    pub vertex_deletes: usize,
    pub mode: Mode,
}

impl OperatorSpec {
    pub fn base(base: HereditaryClass) -> Self {
        OperatorSpec {
            base,
            adds: 0,
            edge_deletes: 0,
            vertex_deletes: 0,
            mode: Mode::Single,
        }
    }

    pub fn edge_add(base: HereditaryClass) -> Self {
        Self::base(base).with_adds(1)
    }

    pub fn edge_apex(base: HereditaryClass) -> Self {
        Self::base(base).with_edge_deletes(1)
    }

    pub fn vertex_apex(base: HereditaryClass) -> Self {
        Self::base(base).with_vertex_deletes(1)
    }

    /// The union of the edge-add, edge-apex and vertex-apex classes.
    pub fn almost(base: HereditaryClass) -> Self {
        OperatorSpec {
            base,
            adds: 1,
            edge_deletes: 1,
            vertex_deletes: 1,
            mode: Mode::Union,
        }
    }

    pub fn with_adds(mut self, p: usize) -> Self {
        self.adds = p;
        self
    }

    pub fn with_edge_deletes(mut self, q: usize) -> Self {
        self.edge_deletes = q;
        self
    }

    pub fn with_vertex_deletes(mut self, r: usize) -> Self {
        self.vertex_deletes = r;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn is_base(&self) -> bool {
        self.adds == 0 && self.edge_deletes == 0 && self.vertex_deletes == 0
    }

    /// Accepts the text form `base+add^p-edge^q-vertex^r[:union]` (any
    /// budget segment may be omitted) and the shorthands `edge-add:<base>`,
    /// `edge-apex:<base>`, `vertex-apex:<base>` and `almost:<base>`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = |reason: &str| Error::BadClassSpec {
            spec: text.to_string(),
            reason: reason.to_string(),
        };
        for (prefix, make) in [
            ("edge-add:", Self::edge_add as fn(HereditaryClass) -> Self),
            ("edge-apex:", Self::edge_apex),
            ("vertex-apex:", Self::vertex_apex),
            ("almost:", Self::almost),
        ] {
            if let Some(base) = text.strip_prefix(prefix) {
                return Ok(make(HereditaryClass::parse(base)?));
            }
        }

        let (body, mode) = match text.strip_suffix(":union") {
            Some(b) => (b, Mode::Union),
            None => (text, Mode::Single),
        };
        const MARKERS: [&str; 3] = ["+add^", "-edge^", "-vertex^"];
        let cut = MARKERS.iter().filter_map(|m| body.find(m)).min().unwrap_or(body.len());
        let mut spec = OperatorSpec::base(HereditaryClass::parse(&body[..cut])?).with_mode(mode);
        let mut rest = &body[cut..];
        let mut seen = [false; 3];
        while !rest.is_empty() {
            let (slot, marker) = MARKERS
                .iter()
                .enumerate()
                .find(|(_, m)| rest.starts_with(**m))
                .ok_or_else(|| bad("expected +add^p, -edge^q or -vertex^r"))?;
            if seen[slot] {
                return Err(bad("budget given twice"));
            }
            seen[slot] = true;
            rest = &rest[marker.len()..];
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let value: usize = rest[..digits]
                .parse()
                .map_err(|_| bad("budget is not a non-negative integer"))?;
            rest = &rest[digits..];
            match slot {
                0 => spec.adds = value,
                1 => spec.edge_deletes = value,
                _ => spec.vertex_deletes = value,
            }
        }
        Ok(spec)
    }

    /// Membership with a certificate.
    pub fn member(&self, g: &Graph) -> Option<Certificate> {
        iterated_member(g, self)
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alias = match (self.mode, self.adds, self.edge_deletes, self.vertex_deletes) {
            (Mode::Single, 0, 0, 0) => return f.pad(&self.base.to_string()),
            (Mode::Single, 1, 0, 0) => Some("edge-add"),
            (Mode::Single, 0, 1, 0) => Some("edge-apex"),
            (Mode::Single, 0, 0, 1) => Some("vertex-apex"),
            (Mode::Union, 1, 1, 1) => Some("almost"),
            _ => None,
        };
        let text = match alias {
            Some(alias) => format!("{alias}:{}", self.base),
            None => format!(
                "{}+add^{}-edge^{}-vertex^{}{}",
                self.base,
                self.adds,
                self.edge_deletes,
                self.vertex_deletes,
                if self.mode == Mode::Union { ":union" } else { "" }
            ),
        };
        f.pad(&text)
    }
}

impl GraphClass for OperatorSpec {
    fn name(&self) -> String {
        self.to_string()
    }

    fn contains(&self, g: &Graph) -> bool {
        iterated_member(g, self).is_some()
    }
}

pub fn iterated_member(g: &Graph, spec: &OperatorSpec) -> Option<Certificate> {
    iterated_member_with(g, spec, &spec.base)
}

/// [`iterated_member`] with the base predicate supplied separately, e.g.
/// wrapped in a [`Memoized`] cache.
pub fn iterated_member_with<C: GraphClass + ?Sized>(g: &Graph, spec: &OperatorSpec, base: &C) -> Option<Certificate> {
    match spec.mode {
        Mode::Single => composed_member(g, base, spec.adds, spec.edge_deletes, spec.vertex_deletes),
        Mode::Union => {
            if base.contains(g) {
                return Some(Certificate::default());
            }
            composed_member(g, base, spec.adds, 0, 0)
                .or_else(|| composed_member(g, base, 0, spec.edge_deletes, 0))
                .or_else(|| composed_member(g, base, 0, 0, spec.vertex_deletes))
        }
    }
}

/// Union of arbitrary classes.
pub struct UnionClass(pub Vec<Box<dyn GraphClass>>);

impl GraphClass for UnionClass {
    fn name(&self) -> String {
        let names: Vec<String> = self.0.iter().map(|c| c.name()).collect();
        format!("union({})", names.join(" | "))
    }

    fn contains(&self, g: &Graph) -> bool {
        self.0.iter().any(|c| c.contains(g))
    }
}

/// Caches membership of a class by canonical key. The cache is shared
/// behind a lock; answers never depend on its contents.
pub struct Memoized<C> {
    inner: C,
    cache: RwLock<HashMap<CanonicalKey, bool>>,
}

impl<C: GraphClass> Memoized<C> {
    pub fn new(inner: C) -> Self {
        Memoized {
            inner,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn cached(&self) -> usize {
        self.cache.read().expect("memo lock").len()
    }
}

impl<C: GraphClass> GraphClass for Memoized<C> {
    fn name(&self) -> String {
        self.inner.name()
    }

    fn contains(&self, g: &Graph) -> bool {
        let key = canonical_key(g);
        if let Some(&hit) = self.cache.read().expect("memo lock").get(&key) {
            return hit;
        }
        let value = self.inner.contains(g);
        self.cache.write().expect("memo lock").insert(key, value);
        value
    }
}
