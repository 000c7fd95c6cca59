//! The two set-cover based approximation algorithms and their solution
//! verifiers.
//!
//! Both algorithms first take a greedy maximal independent set `D` (which
//! dominates the graph), then run greedy set cover over `<D, V \ D>` to add
//! one neighbor for every member of `D`, establishing the total property.

use crate::error::{Error, Result};
use crate::geometry::UnitDiskGraph;
use crate::mis::{maximal_independent_set, IndependentSet};
use crate::setcover::{build_cover_instance, greedy_set_cover};

/// Vertex set that dominates the graph and induces no isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalDominatingSet {
    /// Member vertex indices, sorted ascending.
    pub members: Vec<usize>,
}

impl TotalDominatingSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Per-vertex labels in `{0, 1, 2}` with weight `2|V2| + |V1|`.
///
/// Valid assignments satisfy the Roman property (every 0-labeled vertex has
/// a 2-labeled neighbor) and the total property (every positively labeled
/// vertex has a positively labeled neighbor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RomanAssignment {
    pub values: Vec<u8>,
}

impl RomanAssignment {
    pub fn new(values: Vec<u8>) -> Self {
        RomanAssignment { values }
    }

    pub fn weight(&self) -> usize {
        self.values.iter().map(|&v| v as usize).sum()
    }

    pub fn count_label(&self, label: u8) -> usize {
        self.values.iter().filter(|&&v| v == label).count()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn require_no_isolated(g: &UnitDiskGraph) -> Result<()> {
    let report = g.isolated_vertices();
    if report.is_clean() {
        Ok(())
    } else {
        Err(Error::IsolatedVertices(report.isolated))
    }
}

/// Approximate minimum total dominating set: the union of a greedy maximal
/// independent set `D` and the owners chosen by greedy set cover over
/// `<D, V \ D>`.
///
/// Undefined on graphs with isolated vertices.
pub fn total_dominating_set(g: &UnitDiskGraph) -> Result<TotalDominatingSet> {
    require_no_isolated(g)?;
    let d = maximal_independent_set(g);
    let cover = greedy_set_cover(&build_cover_instance(g, &d)?)?;

    let mut members = d.members;
    members.extend(cover.owners);
    members.sort_unstable();
    let tds = TotalDominatingSet { members };
    debug_assert!(verify_tds(g, &tds));
    Ok(tds)
}

/// Approximate minimum-weight total Roman dominating function: label 2 on a
/// greedy maximal independent set, label 1 on the owners chosen by greedy
/// set cover, label 0 elsewhere.
///
/// Undefined on graphs with isolated vertices.
pub fn total_roman_function(g: &UnitDiskGraph) -> Result<RomanAssignment> {
    require_no_isolated(g)?;
    let two_set = maximal_independent_set(g);
    let cover = greedy_set_cover(&build_cover_instance(g, &two_set)?)?;

    let mut values = vec![0u8; g.vertex_count()];
    for &v in &two_set.members {
        values[v] = 2;
    }
    for &u in &cover.owners {
        values[u] = 1;
    }
    let f = RomanAssignment::new(values);
    debug_assert!(verify_trdf(g, &f));
    Ok(f)
}

/// True iff `s` dominates `g` and every member has a neighbor in `s`.
pub fn verify_tds(g: &UnitDiskGraph, s: &TotalDominatingSet) -> bool {
    let n = g.vertex_count();
    if !s.members.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    if s.members.iter().any(|&v| v >= n) {
        return false;
    }
    let mut inside = vec![false; n];
    for &v in &s.members {
        inside[v] = true;
    }
    for v in 0..n {
        let covered = inside[v] || g.adj(v).iter().any(|&u| inside[u]);
        if !covered {
            return false;
        }
        if inside[v] && !g.adj(v).iter().any(|&u| inside[u]) {
            return false;
        }
    }
    true
}

/// True iff `f` has one in-range label per vertex and satisfies the Roman
/// and total properties on `g`.
pub fn verify_trdf(g: &UnitDiskGraph, f: &RomanAssignment) -> bool {
    let n = g.vertex_count();
    if f.values.len() != n || f.values.iter().any(|&v| v > 2) {
        return false;
    }
    for v in 0..n {
        match f.values[v] {
            0 => {
                if !g.adj(v).iter().any(|&u| f.values[u] == 2) {
                    return false;
                }
            }
            _ => {
                if !g.adj(v).iter().any(|&u| f.values[u] >= 1) {
                    return false;
                }
            }
        }
    }
    true
}

/// Structural split of an approximate solution, exposed for testing: the
/// independent phase-one set and the cover owners added for totality.
pub fn tds_decomposition(g: &UnitDiskGraph) -> Result<(IndependentSet, Vec<usize>)> {
    require_no_isolated(g)?;
    let d = maximal_independent_set(g);
    let cover = greedy_set_cover(&build_cover_instance(g, &d)?)?;
    Ok((d, cover.owners))
}
