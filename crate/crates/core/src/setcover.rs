//! Set-cover instances built from a maximal independent set and the rest of
//! the graph, plus the greedy cover subroutine and a small exact oracle.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::geometry::UnitDiskGraph;
use crate::mis::IndependentSet;

/// Largest subset count accepted by [`exact_set_cover`].
pub const EXACT_SUBSET_LIMIT: usize = 20;

/// One candidate subset: the vertex outside the independent set that owns
/// it, and its members inside the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset {
    pub owner: usize,
    pub members: Vec<usize>,
}

/// Set-cover instance `<U, S>`: the universe holds the members of the
/// independent set, and each subset lists the universe elements adjacent to
/// its owner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: Vec<usize>,
    pub subsets: Vec<Subset>,
}

/// Chosen subset positions plus the corresponding owner vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSelection {
    pub chosen: Vec<usize>,
    pub owners: Vec<usize>,
}

impl CoverSelection {
    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }
}

/// Builds the cover instance over `<d, V \ d>`: one subset per outside
/// vertex in ascending order, members sorted.
///
/// Fails with [`Error::IsolatedMember`] if some member of `d` has no
/// neighbor at all, in which case no subset can cover it and total
/// domination is undefined.
pub fn build_cover_instance(g: &UnitDiskGraph, d: &IndependentSet) -> Result<SetCoverInstance> {
    debug_assert!(crate::mis::check_independent_maximal(g, d));
    for &v in &d.members {
        if g.adj(v).is_empty() {
            return Err(Error::IsolatedMember { vertex: v });
        }
    }

    let subsets = (0..g.vertex_count())
        .filter(|&u| !d.contains(u))
        .map(|u| Subset {
            owner: u,
            // adjacency is sorted, so the filtered members stay sorted
            members: g
                .adj(u)
                .iter()
                .copied()
                .filter(|&w| d.contains(w))
                .collect(),
        })
        .collect();

    Ok(SetCoverInstance {
        universe: d.members.clone(),
        subsets,
    })
}

/// Maps every universe element to a dense position, validating that all
/// subset members belong to the universe.
fn index_elements(inst: &SetCoverInstance) -> Result<BTreeMap<usize, usize>> {
    let positions: BTreeMap<usize, usize> = inst
        .universe
        .iter()
        .enumerate()
        .map(|(pos, &e)| (e, pos))
        .collect();
    for (s, subset) in inst.subsets.iter().enumerate() {
        for &e in &subset.members {
            if !positions.contains_key(&e) {
                return Err(Error::UnknownElement {
                    subset: s,
                    element: e,
                });
            }
        }
    }
    Ok(positions)
}

/// Dense member positions per subset, deduplicated.
fn dense_subsets(inst: &SetCoverInstance, positions: &BTreeMap<usize, usize>) -> Vec<Vec<usize>> {
    inst.subsets
        .iter()
        .map(|s| {
            let mut m: Vec<usize> = s.members.iter().map(|e| positions[e]).collect();
            m.sort_unstable();
            m.dedup();
            m
        })
        .collect()
}

fn check_coverable(universe_len: usize, dense: &[Vec<usize>]) -> Result<()> {
    let mut covered = vec![false; universe_len];
    for s in dense {
        for &e in s {
            covered[e] = true;
        }
    }
    if covered.iter().all(|&c| c) {
        Ok(())
    } else {
        Err(Error::Uncoverable)
    }
}

/// Greedy set cover: repeatedly selects the subset covering the most
/// uncovered elements, ties broken by lowest subset position.
///
/// Implemented as a lazily re-evaluated max-heap; stale counts only ever
/// shrink, so a re-checked top entry is safe to select.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> Result<CoverSelection> {
    let positions = index_elements(inst)?;
    let dense = dense_subsets(inst, &positions);
    check_coverable(inst.universe.len(), &dense)?;

    let mut covered = vec![false; inst.universe.len()];
    let mut uncovered = inst.universe.len();
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = dense
        .iter()
        .enumerate()
        .map(|(pos, m)| (m.len(), Reverse(pos)))
        .collect();

    let mut chosen = Vec::new();
    while uncovered > 0 {
        let (stale, Reverse(pos)) = heap.pop().expect("coverability was checked");
        let gain = dense[pos].iter().filter(|&&e| !covered[e]).count();
        if gain != stale {
            if gain > 0 {
                heap.push((gain, Reverse(pos)));
            }
            continue;
        }
        chosen.push(pos);
        for &e in &dense[pos] {
            if !covered[e] {
                covered[e] = true;
                uncovered -= 1;
            }
        }
    }

    let owners = chosen.iter().map(|&p| inst.subsets[p].owner).collect();
    Ok(CoverSelection { chosen, owners })
}

/// Exact minimum-cardinality cover by branch and bound over the subsets,
/// largest first, pruning branches that cannot beat the incumbent.
///
/// Among minimum covers, returns the lexicographically smallest list of
/// chosen positions. Accepts at most [`EXACT_SUBSET_LIMIT`] subsets.
pub fn exact_set_cover(inst: &SetCoverInstance) -> Result<CoverSelection> {
    if inst.subsets.len() > EXACT_SUBSET_LIMIT {
        return Err(Error::SizeLimit {
            actual: inst.subsets.len(),
            limit: EXACT_SUBSET_LIMIT,
        });
    }
    let positions = index_elements(inst)?;
    let dense = dense_subsets(inst, &positions);
    check_coverable(inst.universe.len(), &dense)?;

    let mut order: Vec<usize> = (0..dense.len()).collect();
    order.sort_by_key(|&p| (Reverse(dense[p].len()), p));

    let mut search = ExactSearch {
        dense: &dense,
        order: &order,
        cover_count: vec![0u32; inst.universe.len()],
        avail: vec![0u32; inst.universe.len()],
        uncovered: inst.universe.len(),
        chosen: Vec::new(),
        best: None,
    };
    for s in &dense {
        for &e in s {
            search.avail[e] += 1;
        }
    }
    search.run(0);

    let chosen = search.best.expect("coverable instance has a cover");
    let owners = chosen.iter().map(|&p| inst.subsets[p].owner).collect();
    Ok(CoverSelection { chosen, owners })
}

struct ExactSearch<'a> {
    dense: &'a [Vec<usize>],
    order: &'a [usize],
    cover_count: Vec<u32>,
    avail: Vec<u32>,
    uncovered: usize,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl ExactSearch<'_> {
    fn run(&mut self, k: usize) {
        if self.uncovered == 0 {
            let mut cand = self.chosen.clone();
            cand.sort_unstable();
            let better = match &self.best {
                None => true,
                Some(b) => cand.len() < b.len() || (cand.len() == b.len() && cand < *b),
            };
            if better {
                self.best = Some(cand);
            }
            return;
        }
        if let Some(b) = &self.best {
            // completing needs at least one more subset
            if self.chosen.len() + 1 > b.len() {
                return;
            }
        }
        if k == self.order.len() {
            return;
        }
        // an uncovered element none of the remaining subsets can reach
        // makes the branch infeasible
        if (0..self.cover_count.len()).any(|e| self.cover_count[e] == 0 && self.avail[e] == 0) {
            return;
        }

        let pos = self.order[k];
        for &e in &self.dense[pos] {
            self.avail[e] -= 1;
        }

        self.chosen.push(pos);
        for &e in &self.dense[pos] {
            if self.cover_count[e] == 0 {
                self.uncovered -= 1;
            }
            self.cover_count[e] += 1;
        }
        self.run(k + 1);
        for &e in &self.dense[pos] {
            self.cover_count[e] -= 1;
            if self.cover_count[e] == 0 {
                self.uncovered += 1;
            }
        }
        self.chosen.pop();

        self.run(k + 1);

        for &e in &self.dense[pos] {
            self.avail[e] += 1;
        }
    }
}
