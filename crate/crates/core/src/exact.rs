//! Exponential-time exact oracles for the domination parameters on small
//! instances, used for acceptance testing and reduction verification.
//!
//! Set problems (dominating set, total dominating set) run a branch and
//! bound that branches on the closed neighborhood of the first undominated
//! vertex, and, once domination holds, on the open neighborhood of the
//! first set member still isolated inside the set. Label problems (Roman,
//! total Roman) enumerate labels vertex by vertex with weight and local
//! feasibility pruning.
//!
//! Witness ties break by the lexicographically smallest label/membership
//! vector, so results are reproducible goldens.

use crate::approx::{verify_tds, verify_trdf, RomanAssignment, TotalDominatingSet};
use crate::error::{Error, Result};
use crate::geometry::UnitDiskGraph;

/// Default vertex limit for the subset searches (dominating set, TDS).
pub const DEFAULT_SET_SEARCH_LIMIT: usize = 20;
/// Default vertex limit for the label searches (RDF, TRDF); raw state space
/// is `3^n`.
pub const DEFAULT_LABEL_SEARCH_LIMIT: usize = 14;

/// Optimal witness: a vertex set or a Roman label assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Set(Vec<usize>),
    Assignment(RomanAssignment),
}

impl Witness {
    pub fn as_set(&self) -> Option<&[usize]> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Assignment(_) => None,
        }
    }

    pub fn as_assignment(&self) -> Option<&RomanAssignment> {
        match self {
            Witness::Set(_) => None,
            Witness::Assignment(f) => Some(f),
        }
    }
}

/// An exact optimum: objective value (set size or Roman weight), a witness
/// achieving it, and the number of search nodes explored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub objective: usize,
    pub witness: Witness,
    pub explored: u64,
}

fn check_limit(g: &UnitDiskGraph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        Err(Error::SizeLimit {
            actual: g.vertex_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

fn check_no_isolated(g: &UnitDiskGraph) -> Result<()> {
    let report = g.isolated_vertices();
    if report.is_clean() {
        Ok(())
    } else {
        Err(Error::IsolatedVertices(report.isolated))
    }
}

/// Minimum dominating set.
pub fn exact_min_ds(g: &UnitDiskGraph, limit: usize) -> Result<ExactResult> {
    check_limit(g, limit)?;
    let mut search = SetSearch::new(g, false);
    search.run();
    Ok(search.into_result())
}

/// Minimum total dominating set. Undefined on graphs with isolated
/// vertices.
pub fn exact_min_tds(g: &UnitDiskGraph, limit: usize) -> Result<ExactResult> {
    check_no_isolated(g)?;
    check_limit(g, limit)?;
    let mut search = SetSearch::new(g, true);
    search.run();
    let result = search.into_result();
    debug_assert!(verify_tds(
        g,
        &TotalDominatingSet {
            members: result.witness.as_set().unwrap().to_vec()
        }
    ));
    Ok(result)
}

/// Minimum-weight total Roman dominating function. With `min_v1_tie`, the
/// witness additionally minimizes the number of 1-labels among all
/// minimum-weight assignments, which the reduction's extraction mapping
/// relies on.
pub fn exact_min_trdf(g: &UnitDiskGraph, limit: usize, min_v1_tie: bool) -> Result<ExactResult> {
    check_no_isolated(g)?;
    check_limit(g, limit)?;
    let mut search = LabelSearch::new(g, true, min_v1_tie);
    search.run();
    let result = search.into_result();
    debug_assert!(verify_trdf(g, result.witness.as_assignment().unwrap()));
    Ok(result)
}

/// Minimum-weight Roman dominating function (no total constraint).
pub fn exact_min_rdf(g: &UnitDiskGraph, limit: usize) -> Result<ExactResult> {
    check_limit(g, limit)?;
    let mut search = LabelSearch::new(g, false, false);
    search.run();
    Ok(search.into_result())
}

/// Branch and bound over vertex subsets.
///
/// The incumbent starts at the full vertex set (a valid solution under each
/// caller's preconditions), branches never revisit an excluded vertex, and
/// a branch is cut once it cannot complete strictly below the incumbent
/// size. Equal-size completions are explored so the lexicographic tie-break
/// sees every minimum.
struct SetSearch<'a> {
    g: &'a UnitDiskGraph,
    require_total: bool,
    in_set: Vec<bool>,
    excluded: Vec<bool>,
    /// How many closed neighborhoods containing this vertex are in the set.
    cover: Vec<u32>,
    count: usize,
    best_size: usize,
    best_vec: Vec<bool>,
    explored: u64,
}

impl<'a> SetSearch<'a> {
    fn new(g: &'a UnitDiskGraph, require_total: bool) -> Self {
        let n = g.vertex_count();
        SetSearch {
            g,
            require_total,
            in_set: vec![false; n],
            excluded: vec![false; n],
            cover: vec![0; n],
            count: 0,
            best_size: n,
            best_vec: vec![true; n],
            explored: 0,
        }
    }

    fn add(&mut self, u: usize) {
        self.in_set[u] = true;
        self.count += 1;
        self.cover[u] += 1;
        for &w in self.g.adj(u) {
            self.cover[w] += 1;
        }
    }

    fn remove(&mut self, u: usize) {
        self.in_set[u] = false;
        self.count -= 1;
        self.cover[u] -= 1;
        for &w in self.g.adj(u) {
            self.cover[w] -= 1;
        }
    }

    fn first_undominated(&self) -> Option<usize> {
        self.cover.iter().position(|&c| c == 0)
    }

    fn first_lonely_member(&self) -> Option<usize> {
        (0..self.in_set.len())
            .find(|&v| self.in_set[v] && !self.g.adj(v).iter().any(|&w| self.in_set[w]))
    }

    fn run(&mut self) {
        self.explored += 1;
        if let Some(v) = self.first_undominated() {
            if self.count >= self.best_size {
                return;
            }
            // any solution contains a vertex of N[v]
            let mut cands: Vec<usize> = self.g.adj(v).to_vec();
            let at = cands.binary_search(&v).unwrap_err();
            cands.insert(at, v);
            self.branch(&cands);
            return;
        }
        if self.require_total {
            if let Some(m) = self.first_lonely_member() {
                if self.count >= self.best_size {
                    return;
                }
                // any total completion adds a neighbor of m
                let cands: Vec<usize> = self.g.adj(m).to_vec();
                self.branch(&cands);
                return;
            }
        }
        if self.count < self.best_size
            || (self.count == self.best_size && self.in_set < self.best_vec)
        {
            self.best_size = self.count;
            self.best_vec = self.in_set.clone();
        }
    }

    fn branch(&mut self, cands: &[usize]) {
        let mut marked = Vec::new();
        for &u in cands {
            if self.excluded[u] || self.in_set[u] {
                continue;
            }
            self.add(u);
            self.run();
            self.remove(u);
            // later branches must avoid u, otherwise sets repeat
            self.excluded[u] = true;
            marked.push(u);
        }
        for u in marked {
            self.excluded[u] = false;
        }
    }

    fn into_result(self) -> ExactResult {
        let members = (0..self.best_vec.len())
            .filter(|&v| self.best_vec[v])
            .collect();
        ExactResult {
            objective: self.best_size,
            witness: Witness::Set(members),
            explored: self.explored,
        }
    }
}

/// Vertex-by-vertex label enumeration in ascending label order.
///
/// A vertex whose closed neighborhood is fully labeled is checked
/// immediately; a partial weight above the incumbent prunes. Equal-weight
/// assignments are explored so the tie-break keys apply.
struct LabelSearch<'a> {
    g: &'a UnitDiskGraph,
    require_total: bool,
    min_v1_tie: bool,
    labels: Vec<u8>,
    /// Vertices whose closed neighborhood becomes fully labeled at index i.
    finalized_at: Vec<Vec<usize>>,
    partial: usize,
    best_weight: usize,
    best_v1: usize,
    best_labels: Vec<u8>,
    explored: u64,
}

impl<'a> LabelSearch<'a> {
    fn new(g: &'a UnitDiskGraph, require_total: bool, min_v1_tie: bool) -> Self {
        let n = g.vertex_count();
        let mut finalized_at = vec![Vec::new(); n];
        for u in 0..n {
            let last = g.adj(u).iter().copied().max().map_or(u, |m| m.max(u));
            finalized_at[last].push(u);
        }
        LabelSearch {
            g,
            require_total,
            min_v1_tie,
            labels: vec![0; n],
            finalized_at,
            partial: 0,
            best_weight: n,
            best_v1: n,
            best_labels: vec![1; n],
            explored: 0,
        }
    }

    fn locally_feasible(&self, u: usize) -> bool {
        if self.labels[u] == 0 {
            self.g.adj(u).iter().any(|&w| self.labels[w] == 2)
        } else if self.require_total {
            self.g.adj(u).iter().any(|&w| self.labels[w] >= 1)
        } else {
            true
        }
    }

    fn run(&mut self) {
        self.search(0);
    }

    fn search(&mut self, i: usize) {
        self.explored += 1;
        let n = self.labels.len();
        if i == n {
            let weight = self.partial;
            let v1 = self.labels.iter().filter(|&&l| l == 1).count();
            let better = weight < self.best_weight
                || (weight == self.best_weight
                    && if self.min_v1_tie {
                        v1 < self.best_v1 || (v1 == self.best_v1 && self.labels < self.best_labels)
                    } else {
                        self.labels < self.best_labels
                    });
            if better {
                self.best_weight = weight;
                self.best_v1 = v1;
                self.best_labels = self.labels.clone();
            }
            return;
        }
        for label in 0u8..=2 {
            let weight = self.partial + label as usize;
            if weight > self.best_weight {
                break;
            }
            self.labels[i] = label;
            if self.finalized_at[i]
                .iter()
                .all(|&u| self.locally_feasible(u))
            {
                self.partial = weight;
                self.search(i + 1);
                self.partial = weight - label as usize;
            }
        }
    }

    fn into_result(self) -> ExactResult {
        ExactResult {
            objective: self.best_weight,
            witness: Witness::Assignment(RomanAssignment::new(self.best_labels)),
            explored: self.explored,
        }
    }
}
