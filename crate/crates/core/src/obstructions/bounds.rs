//! Order bounds for obstructions of derived classes.

use crate::classes::HereditaryClass;
use crate::graph::Graph;
use crate::operators::{Mode, OperatorSpec};

/// Statistics of one forbidden subgraph `H` of a base class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundInputs {
    /// Vertices of `H`.
    pub c: usize,
    /// Non-edges of `H`.
    pub k: usize,
    /// Largest order in the base class's forbidden list.
    pub m: usize,
}

impl BoundInputs {
    pub fn of(h: &Graph, m: usize) -> Self {
        BoundInputs {
            c: h.order(),
            k: h.non_edge_count(),
            m,
        }
    }
}

pub fn max_order(list: &[Graph]) -> usize {
    list.iter().map(Graph::order).max().unwrap_or(0)
}

pub fn bound_inputs(list: &[Graph]) -> Vec<BoundInputs> {
    let m = max_order(list);
    list.iter().map(|h| BoundInputs::of(h, m)).collect()
}

/// Largest possible order of an obstruction for the edge-add class:
/// the maximum over the list of `max{2m, c + k(m-2)}`.
pub fn edge_add_bound(stats: &[BoundInputs]) -> usize {
    stats
        .iter()
        .map(|s| (2 * s.m).max(s.c + s.k * s.m.saturating_sub(2)))
        .max()
        .unwrap_or(0)
}

/// Bound for edge-add obstructions that contain this particular `H`:
/// `max{c + m, c + k(m-2)}`.
pub fn edge_add_bound_containing(s: &BoundInputs) -> usize {
    (s.c + s.m).max(s.c + s.k * s.m.saturating_sub(2))
}

/// Vertex-apex obstructions have at most `floor((c+2)^2 / 4)` vertices when
/// every base obstruction has at most `c`.
pub fn vertex_apex_bound(c: usize) -> usize {
    (c + 2) * (c + 2) / 4
}

/// Union of two hereditary classes with obstruction orders at most `c` and `d`.
pub fn bound_union(c: usize, d: usize) -> usize {
    c + d
}

/// The edge-add bound using only `m`, via `c <= m` and `k <= m(m-1)/2`.
pub fn edge_add_bound_from_order(m: usize) -> usize {
    (2 * m).max(m + m * m.saturating_sub(1) / 2 * m.saturating_sub(2))
}

fn edge_add_step(list: Option<&[Graph]>, m: usize) -> usize {
    match list {
        Some(l) => edge_add_bound(&bound_inputs(l)),
        None => edge_add_bound_from_order(m),
    }
}

fn single_bound(base: &[Graph], adds: usize, edge_deletes: usize, vertex_deletes: usize) -> usize {
    let complements: Vec<Graph> = base.iter().map(Graph::complement).collect();
    let mut m = max_order(base);
    let mut exact = true;
    for _ in 0..vertex_deletes {
        m = vertex_apex_bound(m);
        exact = false;
    }
    // Deleting an edge of G is adding one to its complement, and the
    // complement of a hereditary class is forbidden by the complements of
    // its list.
    for _ in 0..edge_deletes {
        m = edge_add_step(exact.then_some(&complements[..]), m);
        exact = false;
    }
    for _ in 0..adds {
        m = edge_add_step(exact.then_some(base), m);
        exact = false;
    }
    m
}

/// A proven order bound for the obstructions of `spec`, when the base has
/// a finite forbidden list.
pub fn operator_bound(spec: &OperatorSpec) -> Option<usize> {
    let base = spec.base.forbidden()?;
    Some(match spec.mode {
        Mode::Single => single_bound(&base, spec.adds, spec.edge_deletes, spec.vertex_deletes),
        Mode::Union => {
            let parts: Vec<usize> = [
                (spec.adds, 0, 0),
                (0, spec.edge_deletes, 0),
                (0, 0, spec.vertex_deletes),
            ]
            .into_iter()
            .filter(|&(p, q, r)| p + q + r > 0)
            .map(|(p, q, r)| single_bound(&base, p, q, r))
            .collect();
            match parts.split_first() {
                None => max_order(&base),
                Some((&first, rest)) => rest.iter().fold(first, |acc, &d| bound_union(acc, d)),
            }
        }
    })
}

/// Base classes whose own forbidden list is infinite but whose derived
/// classes keep a cycle family worth stating in reports.
pub(crate) fn cycle_family(spec: &OperatorSpec) -> Option<String> {
    if spec.base != HereditaryClass::Chordal
        || spec.mode != Mode::Single
        || spec.edge_deletes != 0
        || spec.vertex_deletes != 0
    {
        return None;
    }
    // C_k needs k - 3 chords, and every C_k - v is a path
    Some(format!("every cycle C_k with k >= {}", spec.adds + 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use HereditaryClass::*;

    #[test]
    fn formulas() {
        assert_eq!(vertex_apex_bound(4), 9);
        assert_eq!(vertex_apex_bound(1), 2);
        assert_eq!(bound_union(5, 4), 9);
        let k4 = BoundInputs::of(&Graph::complete(4), 5);
        assert_eq!(edge_add_bound(&[k4]), 10);
    }

    #[test]
    fn threshold_c4_instance() {
        let s = BoundInputs::of(&named::c4(), 4);
        assert_eq!((s.c, s.k, s.m), (4, 2, 4));
        assert_eq!(s.c + s.k * (s.m - 2), 8);
        assert_eq!(edge_add_bound_containing(&s), 8);
    }

    #[test]
    fn class_bounds() {
        let split = bound_inputs(&Split.forbidden().unwrap());
        assert!(split.iter().any(|s| s.c + s.k * (s.m - 2) == 16));
        assert_eq!(edge_add_bound(&split), 20);
        assert_eq!(operator_bound(&OperatorSpec::edge_add(Split)), Some(20));
        assert_eq!(operator_bound(&OperatorSpec::edge_apex(Split)), Some(20));
        assert_eq!(operator_bound(&OperatorSpec::edge_add(Threshold)), Some(12));
        assert_eq!(operator_bound(&OperatorSpec::edge_add(Cograph)), Some(10));
        assert_eq!(operator_bound(&OperatorSpec::vertex_apex(Cograph)), Some(9));
        assert_eq!(operator_bound(&OperatorSpec::edge_add(Chordal)), None);
        assert_eq!(operator_bound(&OperatorSpec::base(Split)), Some(5));
    }

    #[test]
    fn union_bound_adds_parts() {
        let almost = OperatorSpec::almost(Cograph);
        assert_eq!(operator_bound(&almost), Some(10 + 10 + 9));
    }

    #[test]
    fn generic_step_dominates_exact() {
        for m in 2..8 {
            assert!(edge_add_bound_from_order(m) >= 2 * m);
        }
        let split = Split.forbidden().unwrap();
        assert!(edge_add_bound_from_order(5) >= edge_add_bound(&bound_inputs(&split)));
    }
}
