//! Minimal forbidden induced subgraphs of hereditary classes, found by
//! exhaustive search over generated graphs.

pub mod bounds;
mod report;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

pub use bounds::{
    bound_inputs, bound_union, edge_add_bound, edge_add_bound_containing, operator_bound, vertex_apex_bound,
    BoundInputs,
};
pub use report::ObstructionReport;

use crate::canon::{canonical_key, CanonicalKey};
use crate::classes::{GraphClass, HereditaryClass};
use crate::error::{Error, Result};
use crate::gen::enumerate_levels;
use crate::graph::Graph;
use crate::operators::{edge_add_member, OperatorSpec};

/// Members checked for closure under vertex deletion per order.
pub const HEREDITY_SAMPLES: usize = 64;

/// `G` is outside the class and every one-vertex deletion is inside. For a
/// hereditary class this is minimality over all proper induced subgraphs.
pub fn is_minimal_obstruction<C: GraphClass + ?Sized>(g: &Graph, class: &C) -> bool {
    !class.contains(g) && (0..g.order()).all(|v| class.contains(&g.without_vertex(v)))
}

/// The accept test of the published search loop for the edge-add class of
/// `base`, with the addition counter compared against the number of
/// non-edges: `G` is outside the base, no single addition reaches the base,
/// and every vertex deletion lands in the edge-add class.
pub fn addition_loop_accepts<C: GraphClass + ?Sized>(g: &Graph, base: &C) -> bool {
    if base.contains(g) {
        return false;
    }
    let failed_additions = g.non_edges().filter(|&(u, v)| !base.contains(&g.toggled(u, v))).count();
    let rescued_deletions = (0..g.order())
        .filter(|&v| edge_add_member(&g.without_vertex(v), base).is_some())
        .count();
    failed_additions == g.non_edge_count() && rescued_deletions == g.order()
}

fn heredity_witness<C: GraphClass + ?Sized>(class: &C, members: &[&Graph]) -> Option<(Graph, usize)> {
    let stride = members.len().div_ceil(HEREDITY_SAMPLES).max(1);
    members.iter().step_by(stride).find_map(|g| {
        (0..g.order())
            .find(|&v| !class.contains(&g.without_vertex(v)))
            .map(|v| ((*g).clone(), v))
    })
}

fn obstructions_in_level<C: GraphClass + ?Sized>(class: &C, level: &[Graph]) -> Result<Vec<CanonicalKey>> {
    let member: Vec<bool> = level.par_iter().map(|g| class.contains(g)).collect();
    let members: Vec<&Graph> = level.iter().zip(&member).filter(|(_, &m)| m).map(|(g, _)| g).collect();
    if let Some((witness, vertex)) = heredity_witness(class, &members) {
        return Err(Error::NonHereditary {
            class: class.name(),
            witness: witness.to_graph6(),
            vertex,
        });
    }
    let mut keys: Vec<CanonicalKey> = level
        .par_iter()
        .zip(&member)
        .filter(|(g, &m)| !m && (0..g.order()).all(|v| class.contains(&g.without_vertex(v))))
        .map(|(g, _)| canonical_key(g))
        .collect();
    keys.sort();
    keys.dedup();
    Ok(keys)
}

/// Searches pre-generated levels, where `levels[n]` holds every graph of
/// order `n` up to isomorphism.
pub fn enumerate_obstructions_in<C: GraphClass + ?Sized>(
    class: &C,
    levels: &[Vec<Graph>],
) -> Result<ObstructionReport> {
    let mut per_order = BTreeMap::new();
    for (n, level) in levels.iter().enumerate() {
        per_order.insert(n, obstructions_in_level(class, level)?);
    }
    Ok(ObstructionReport {
        class_spec: class.name(),
        per_order,
        bound_used: None,
        complete_through: levels.len().checked_sub(1),
        cycle_family: None,
    })
}

/// Exhaustive through `n_max`, which is limited by the generation cap.
pub fn enumerate_obstructions<C: GraphClass + ?Sized>(class: &C, n_max: usize) -> Result<ObstructionReport> {
    enumerate_obstructions_in(class, &enumerate_levels(n_max)?)
}

/// Tests only the supplied graphs, in any labelling and with repeats.
pub fn obstructions_from_graphs<C: GraphClass + ?Sized>(
    class: &C,
    graphs: impl IntoIterator<Item = Graph>,
) -> Result<ObstructionReport> {
    let mut by_order: BTreeMap<usize, BTreeMap<CanonicalKey, Graph>> = BTreeMap::new();
    for g in graphs {
        let key = canonical_key(&g);
        by_order.entry(g.order()).or_default().entry(key).or_insert(g);
    }
    let mut per_order = BTreeMap::new();
    for (n, graphs) in by_order {
        let level: Vec<Graph> = graphs.into_values().collect();
        per_order.insert(n, obstructions_in_level(class, &level)?);
    }
    Ok(ObstructionReport {
        class_spec: class.name(),
        per_order,
        bound_used: None,
        complete_through: None,
        cycle_family: None,
    })
}

/// Enumeration for an operator class, with its proven bound and any
/// symbolic family filled in.
pub fn enumerate_spec_in(spec: &OperatorSpec, levels: &[Vec<Graph>]) -> Result<ObstructionReport> {
    let mut report = enumerate_obstructions_in(spec, levels)?;
    report.bound_used = operator_bound(spec);
    report.cycle_family = bounds::cycle_family(spec);
    Ok(report)
}

pub fn enumerate_spec(spec: &OperatorSpec, n_max: usize) -> Result<ObstructionReport> {
    enumerate_spec_in(spec, &enumerate_levels(n_max)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityOutcome {
    pub holds: bool,
    pub edge_add: ObstructionReport,
    pub edge_apex: ObstructionReport,
    /// A graph in exactly one of the two key sets.
    pub counterexample: Option<Graph>,
}

/// Compares the edge-add obstructions with the complements of the
/// edge-apex obstructions.
pub fn duality_check_in(class: &HereditaryClass, levels: &[Vec<Graph>]) -> Result<DualityOutcome> {
    if !class.is_complement_closed() {
        return Err(Error::NotComplementClosed(class.to_string()));
    }
    let edge_add = enumerate_spec_in(&OperatorSpec::edge_add(class.clone()), levels)?;
    let edge_apex = enumerate_spec_in(&OperatorSpec::edge_apex(class.clone()), levels)?;
    let add_keys = edge_add.keys();
    let co_apex: BTreeSet<CanonicalKey> = edge_apex.graphs().map(|g| canonical_key(&g.complement())).collect();
    let counterexample = add_keys
        .symmetric_difference(&co_apex)
        .next()
        .map(CanonicalKey::to_graph);
    Ok(DualityOutcome {
        holds: counterexample.is_none(),
        edge_add,
        edge_apex,
        counterexample,
    })
}

pub fn duality_check(class: &HereditaryClass, n_max: usize) -> Result<DualityOutcome> {
    duality_check_in(class, &enumerate_levels(n_max)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundViolation {
    pub graph: Graph,
    pub bound: usize,
    /// The base obstruction whose containment bound is exceeded, if any.
    pub contained: Option<Graph>,
}

/// Checks every listed obstruction of an edge-add class against the overall
/// bound and against the containment bound of each base obstruction it
/// contains.
pub fn bound_violations(report: &ObstructionReport, base_list: &[Graph]) -> Vec<BoundViolation> {
    let stats = bound_inputs(base_list);
    let overall = edge_add_bound(&stats);
    let mut out = Vec::new();
    for g in report.graphs() {
        if g.order() > overall {
            out.push(BoundViolation {
                graph: g.clone(),
                bound: overall,
                contained: None,
            });
        }
        for (h, s) in base_list.iter().zip(&stats) {
            let b = edge_add_bound_containing(s);
            if g.order() > b && crate::classes::contains_induced(&g, h) {
                out.push(BoundViolation {
                    graph: g.clone(),
                    bound: b,
                    contained: Some(h.clone()),
                });
            }
        }
    }
    out
}
