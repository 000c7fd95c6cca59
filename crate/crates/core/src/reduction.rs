//! Gadget reduction from dominating set on grid graphs to total Roman
//! domination on unit disk graphs, with solution mappings in both
//! directions and an exact-oracle equivalence check.
//!
//! For every grid edge the gadget adds a mid vertex at the segment midpoint
//! and a pendant vertex offset by 0.1 perpendicular to the segment, then
//! connects points at distance at most 0.5. Each gadget edge forces Roman
//! weight 2, so grid domination number `k` corresponds to gadget total
//! Roman weight `k + 2m`.

use std::collections::BTreeSet;

use crate::approx::{verify_trdf, RomanAssignment};
use crate::error::{Error, Result};
use crate::exact::{
    exact_min_ds, exact_min_trdf, DEFAULT_LABEL_SEARCH_LIMIT, DEFAULT_SET_SEARCH_LIMIT,
};
use crate::geometry::{Point2D, PointSet, UnitDiskGraph};

/// Induced subgraph of the integer lattice: vertices are lattice points,
/// edges join points at lattice distance exactly 1.
///
/// Construction deduplicates coordinates (first occurrence wins) and
/// rejects isolated vertices, which the reduction cannot host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    vertices: Vec<(i64, i64)>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl GridGraph {
    pub fn new(coords: Vec<(i64, i64)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let vertices: Vec<(i64, i64)> = coords.into_iter().filter(|c| seen.insert(*c)).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyPointSet);
        }

        let index: std::collections::BTreeMap<(i64, i64), usize> =
            vertices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (i, &(x, y)) in vertices.iter().enumerate() {
            for (nx, ny) in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if let Some(&j) = index.get(&(nx, ny)) {
                    adjacency[i].push(j);
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        edges.sort_unstable();

        let isolated: Vec<usize> = (0..vertices.len())
            .filter(|&v| adjacency[v].is_empty())
            .collect();
        if !isolated.is_empty() {
            return Err(Error::IsolatedVertices(isolated));
        }

        Ok(GridGraph {
            vertices,
            edges,
            adjacency,
        })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// First vertex not covered by `d`, or `None` if `d` dominates.
    pub fn first_undominated(&self, d: &[usize]) -> Option<usize> {
        let mut inside = vec![false; self.vertex_count()];
        for &v in d {
            inside[v] = true;
        }
        (0..self.vertex_count())
            .find(|&v| !inside[v] && !self.adjacency[v].iter().any(|&u| inside[u]))
    }

    /// Unit disk graph on the lattice coordinates with radius 1; its edges
    /// are exactly the grid edges, which lets the exact oracles run on grid
    /// graphs directly.
    pub fn to_udg(&self) -> UnitDiskGraph {
        let points = self
            .vertices
            .iter()
            .map(|&(x, y)| Point2D::new(x as f64, y as f64))
            .collect();
        UnitDiskGraph::build(PointSet::new(points, 1.0))
            .expect("lattice coordinates are finite and the vertex set is nonempty")
    }
}

/// What a gadget vertex stands for in the source grid graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Counterpart of source vertex `src`.
    Original { src: usize },
    /// Midpoint vertex of the source edge.
    Mid { edge: (usize, usize) },
    /// Pendant vertex attached to the mid vertex of the source edge.
    Pendant { edge: (usize, usize) },
}

/// The reduction's unit disk graph plus the role of every vertex.
///
/// Layout: the `n` source counterparts come first in source order, then per
/// source edge (in sorted order) its mid vertex and its pendant vertex, so
/// `|V'| = n + 2m`.
#[derive(Debug, Clone)]
pub struct GadgetUdg {
    pub udg: UnitDiskGraph,
    pub roles: Vec<Role>,
    source_vertices: usize,
    source_edges: Vec<(usize, usize)>,
}

impl GadgetUdg {
    pub fn source_vertex_count(&self) -> usize {
        self.source_vertices
    }

    pub fn source_edges(&self) -> &[(usize, usize)] {
        &self.source_edges
    }

    /// Gadget index of the mid vertex of source edge `k`.
    pub fn mid_index(&self, k: usize) -> usize {
        self.source_vertices + 2 * k
    }

    /// Gadget index of the pendant vertex of source edge `k`.
    pub fn pendant_index(&self, k: usize) -> usize {
        self.source_vertices + 2 * k + 1
    }
}

/// Builds the gadget for a grid graph.
///
/// The edge threshold is 0.5 natively; with `scale2` all coordinates are
/// doubled and the threshold becomes 1 for interoperability with tools that
/// assume unit radius. The two versions have identical adjacency, which is
/// asserted, as is the per-edge gadget wiring.
pub fn grid_to_gadget(g: &GridGraph, scale2: bool) -> GadgetUdg {
    let n = g.vertex_count();
    let mut points: Vec<Point2D> = g
        .vertices()
        .iter()
        .map(|&(x, y)| Point2D::new(x as f64, y as f64))
        .collect();
    let mut roles: Vec<Role> = (0..n).map(|src| Role::Original { src }).collect();

    for &(i, j) in g.edges() {
        let (xi, yi) = g.vertices()[i];
        let (xj, yj) = g.vertices()[j];
        let mid = Point2D::new((xi + xj) as f64 / 2.0, (yi + yj) as f64 / 2.0);
        // pendant offset is axis-parallel: +y for horizontal edges,
        // +x for vertical ones
        let pendant = if yi == yj {
            Point2D::new(mid.x, mid.y + 0.1)
        } else {
            Point2D::new(mid.x + 0.1, mid.y)
        };
        points.push(mid);
        points.push(pendant);
        roles.push(Role::Mid { edge: (i, j) });
        roles.push(Role::Pendant { edge: (i, j) });
    }

    let base = UnitDiskGraph::build(PointSet::new(points.clone(), 0.5))
        .expect("gadget coordinates are finite");
    let udg = if scale2 {
        let doubled = points
            .iter()
            .map(|p| Point2D::new(p.x * 2.0, p.y * 2.0))
            .collect();
        let scaled = UnitDiskGraph::build(PointSet::new(doubled, 1.0))
            .expect("gadget coordinates are finite");
        // scaling by 2 is exact in binary floating point
        for v in 0..scaled.vertex_count() {
            assert_eq!(
                base.adj(v),
                scaled.adj(v),
                "scaled gadget is not isomorphic"
            );
        }
        scaled
    } else {
        base
    };

    let gadget = GadgetUdg {
        udg,
        roles,
        source_vertices: n,
        source_edges: g.edges().to_vec(),
    };
    assert_gadget_wiring(g, &gadget);
    gadget
}

/// Checks the per-edge wiring: the mid vertex is adjacent to exactly the
/// two endpoints and its pendant, the pendant only to its mid, and every
/// original only to mids of its incident edges.
fn assert_gadget_wiring(g: &GridGraph, gadget: &GadgetUdg) {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert_eq!(gadget.udg.vertex_count(), n + 2 * m);
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        let x = gadget.mid_index(k);
        let y = gadget.pendant_index(k);
        let mut expected = vec![i, j, y];
        expected.sort_unstable();
        assert_eq!(gadget.udg.adj(x), expected.as_slice());
        assert_eq!(gadget.udg.adj(y), &[x]);
        assert!(!gadget.udg.has_edge(i, j));
    }
    for v in 0..n {
        assert_eq!(gadget.udg.degree(v), g.neighbors(v).len());
        for &w in gadget.udg.adj(v) {
            match gadget.roles[w] {
                Role::Mid { edge } => assert!(edge.0 == v || edge.1 == v),
                _ => panic!("original vertex {v} adjacent to non-mid vertex {w}"),
            }
        }
    }
}

/// Lifts a dominating set of the grid graph to a total Roman dominating
/// function of the gadget of weight exactly `|d| + 2m`.
///
/// Labels: 1 on counterparts of `d`; 2 on the mid vertex of every edge with
/// an endpoint in `d`; 1 on both the mid and pendant of every edge without
/// one; 0 elsewhere.
pub fn lift_dominating_set(
    g: &GridGraph,
    d: &[usize],
    gadget: &GadgetUdg,
) -> Result<RomanAssignment> {
    let n = g.vertex_count();
    if let Some(&v) = d.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, len: n });
    }
    if let Some(vertex) = g.first_undominated(d) {
        return Err(Error::NotDominating { vertex });
    }

    let mut inside = vec![false; n];
    for &v in d {
        inside[v] = true;
    }
    let mut values = vec![0u8; gadget.udg.vertex_count()];
    for v in 0..n {
        if inside[v] {
            values[v] = 1;
        }
    }
    for (k, &(i, j)) in gadget.source_edges().iter().enumerate() {
        if inside[i] || inside[j] {
            values[gadget.mid_index(k)] = 2;
        } else {
            values[gadget.mid_index(k)] = 1;
            values[gadget.pendant_index(k)] = 1;
        }
    }

    let f = RomanAssignment::new(values);
    debug_assert!(verify_trdf(&gadget.udg, &f));
    debug_assert_eq!(
        f.weight(),
        d.iter().collect::<BTreeSet<_>>().len() + 2 * g.edge_count()
    );
    Ok(f)
}

fn rewrite_site(gadget: &GadgetUdg, values: &[u8], k: usize) -> bool {
    let (i, j) = gadget.source_edges()[k];
    values[gadget.mid_index(k)] == 1
        && values[gadget.pendant_index(k)] == 1
        && (values[i] >= 1 || values[j] >= 1)
}

/// Weight-preserving rewrite toward an assignment with fewer 1-labels:
/// wherever both the mid and pendant of an edge carry 1 and some endpoint
/// of the edge is positively labeled, the mid becomes 2 and the pendant 0.
///
/// The input must be a valid total Roman dominating function of the gadget;
/// the output is again valid with identical weight.
pub fn canonicalize_trdf(gadget: &GadgetUdg, f: &RomanAssignment) -> Result<RomanAssignment> {
    if !verify_trdf(&gadget.udg, f) {
        return Err(Error::InvalidAssignment);
    }
    let mut values = f.values.clone();
    for k in 0..gadget.source_edges().len() {
        if rewrite_site(gadget, &values, k) {
            values[gadget.mid_index(k)] = 2;
            values[gadget.pendant_index(k)] = 0;
        }
    }
    let out = RomanAssignment::new(values);
    debug_assert!(verify_trdf(&gadget.udg, &out));
    debug_assert_eq!(out.weight(), f.weight());
    Ok(out)
}

/// Extracts a dominating set of the grid graph from a canonicalized total
/// Roman dominating function of the gadget.
///
/// The set contains every source vertex whose counterpart carries 1, plus
/// the larger endpoint of every edge whose mid carries 2 and pendant
/// carries 1. The result has size at most `weight - 2m`. Fails with
/// [`Error::NotDominating`] if the image does not dominate, which cannot
/// happen for canonicalized minimum-weight, minimum-`|V1|` assignments.
pub fn extract_dominating_set(
    g: &GridGraph,
    gadget: &GadgetUdg,
    f: &RomanAssignment,
) -> Result<Vec<usize>> {
    if !verify_trdf(&gadget.udg, f) {
        return Err(Error::InvalidAssignment);
    }
    // canonical form required: no rewrite site may remain
    if (0..gadget.source_edges().len()).any(|k| rewrite_site(gadget, &f.values, k)) {
        return Err(Error::InvalidAssignment);
    }

    let n = g.vertex_count();
    let mut inside: Vec<bool> = f.values[..n].iter().map(|&l| l == 1).collect();
    for (k, &(_, j)) in gadget.source_edges().iter().enumerate() {
        if f.values[gadget.mid_index(k)] == 2 && f.values[gadget.pendant_index(k)] == 1 {
            inside[j] = true;
        }
    }
    let d: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();

    if let Some(vertex) = g.first_undominated(&d) {
        return Err(Error::NotDominating { vertex });
    }
    debug_assert!(d.len() + 2 * g.edge_count() <= f.weight());
    Ok(d)
}

/// Exact quantities on which the reduction equivalence is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceProfile {
    pub domination_number: usize,
    pub gadget_total_roman_number: usize,
    pub edge_count: usize,
}

/// Computes the grid's domination number and the gadget's total Roman
/// domination number with the exact oracles. The gadget must fit the label
/// search limit.
pub fn equivalence_profile(g: &GridGraph) -> Result<EquivalenceProfile> {
    let gadget = grid_to_gadget(g, false);
    if gadget.udg.vertex_count() > DEFAULT_LABEL_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            actual: gadget.udg.vertex_count(),
            limit: DEFAULT_LABEL_SEARCH_LIMIT,
        });
    }
    let ds = exact_min_ds(&g.to_udg(), DEFAULT_SET_SEARCH_LIMIT)?;
    let trdf = exact_min_trdf(&gadget.udg, DEFAULT_LABEL_SEARCH_LIMIT, true)?;
    Ok(EquivalenceProfile {
        domination_number: ds.objective,
        gadget_total_roman_number: trdf.objective,
        edge_count: g.edge_count(),
    })
}

/// True iff "the grid has a dominating set of size at most `k`" and "the
/// gadget has a total Roman dominating function of weight at most
/// `k + 2m`" agree, both decided by exact oracles.
pub fn verify_equivalence(g: &GridGraph, k: usize) -> Result<bool> {
    let p = equivalence_profile(g)?;
    Ok((p.domination_number <= k) == (p.gadget_total_roman_number <= k + 2 * p.edge_count))
}

/// All fixed lattice animals (polyominoes) with exactly `n` cells,
/// deduplicated by translation. Cells are translated so the minimum
/// coordinates are zero and listed in sorted order; the animals themselves
/// come out in deterministic sorted order.
pub fn lattice_animals(n: usize) -> Vec<Vec<(i64, i64)>> {
    if n == 0 {
        return Vec::new();
    }
    let mut current: BTreeSet<Vec<(i64, i64)>> = BTreeSet::new();
    current.insert(vec![(0, 0)]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for animal in &current {
            let occupied: BTreeSet<(i64, i64)> = animal.iter().copied().collect();
            for &(x, y) in animal {
                for cell in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                    if !occupied.contains(&cell) {
                        let mut grown = animal.clone();
                        grown.push(cell);
                        next.insert(canonical_translation(grown));
                    }
                }
            }
        }
        current = next;
    }
    current.into_iter().collect()
}

fn canonical_translation(mut cells: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let min_y = cells.iter().map(|c| c.1).min().unwrap();
    for c in cells.iter_mut() {
        *c = (c.0 - min_x, c.1 - min_y);
    }
    cells.sort_unstable();
    cells
}
