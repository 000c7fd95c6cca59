//! Grid-accelerated greedy maximal independent set, the first phase of both
//! approximation algorithms.

use std::collections::BTreeMap;

use crate::geometry::{CellIndex, UnitDiskGraph};

/// A maximal independent set of a unit disk graph.
///
/// Members are pairwise non-adjacent (distance strictly greater than the
/// radius) and every vertex outside the set has a neighbor inside it, so
/// the set is also dominating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    /// Member vertex indices, sorted ascending.
    pub members: Vec<usize>,
}

impl IndependentSet {
    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Greedy maximal independent set, scanning vertices in ascending order.
///
/// Selected members are stored per grid cell in a sorted map, and a
/// candidate is tested only against members in the 3x3 cell block around
/// its own cell; any member further away is independent of the candidate.
/// Isolated vertices are permitted and simply selected.
///
/// Two geometric bounds are asserted on every run: a vertex outside the set
/// has at most 5 neighbors inside it, and a cell holds at most 3 members.
pub fn maximal_independent_set(g: &UnitDiskGraph) -> IndependentSet {
    let radius = g.radius();
    let r_sq = radius * radius;
    let points = g.points();

    let mut selected: BTreeMap<CellIndex, Vec<usize>> = BTreeMap::new();
    let mut members = Vec::new();

    'scan: for v in 0..g.vertex_count() {
        let p = &points[v];
        let (cx, cy) = g.cell(v);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(cell) = selected.get(&(cx + dx, cy + dy)) else {
                    continue;
                };
                if cell.iter().any(|&u| points[u].dist_sq(p) <= r_sq) {
                    continue 'scan;
                }
            }
        }
        selected.entry((cx, cy)).or_default().push(v);
        members.push(v);
    }

    // a radius-sized cell cannot hold more than 3 pairwise-independent disks
    for cell in selected.values() {
        assert!(cell.len() <= 3, "cell capacity bound violated: {cell:?}");
    }
    // at most 5 independent members can touch one outside vertex
    let set = IndependentSet { members };
    for u in 0..g.vertex_count() {
        if !set.contains(u) {
            let inside = g.adj(u).iter().filter(|&&w| set.contains(w)).count();
            assert!(inside <= 5, "five-disk bound violated at vertex {u}");
        }
    }
    set
}

/// True iff `s` is independent in `g` and maximal (every outside vertex has
/// a neighbor inside). Returns false for out-of-range or unsorted members.
pub fn check_independent_maximal(g: &UnitDiskGraph, s: &IndependentSet) -> bool {
    let n = g.vertex_count();
    if !s.members.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    if s.members.iter().any(|&v| v >= n) {
        return false;
    }
    for &v in &s.members {
        if g.adj(v).iter().any(|&u| s.contains(u)) {
            return false;
        }
    }
    for v in 0..n {
        if !s.contains(v) && !g.adj(v).iter().any(|&u| s.contains(u)) {
            return false;
        }
    }
    true
}
