//! Point sets, unit disk graph construction, and the grid-cell bucketing
//! used for fixed-radius neighbor discovery.
//!
//! Cells are `radius x radius` squares; every neighbor of a vertex lies in
//! the 3x3 block of cells around the vertex's own cell, so adjacency is
//! built without an all-pairs scan. Distance comparisons use exact `<=` on
//! squared distances, no epsilon.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A disk center in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    pub fn dist_sq(&self, other: &Point2D) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Ordered disk centers plus the edge threshold.
///
/// Vertex `i` is `points[i]` for every algorithm in this crate; input order
/// is the deterministic iteration order and all ties break toward the
/// lowest index.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    pub points: Vec<Point2D>,
    pub radius: f64,
}

impl PointSet {
    pub fn new(points: Vec<Point2D>, radius: f64) -> Self {
        PointSet { points, radius }
    }

    /// Point set with the canonical radius 1.
    pub fn unit(points: Vec<Point2D>) -> Self {
        PointSet::new(points, 1.0)
    }

    pub fn from_coords(coords: &[(f64, f64)], radius: f64) -> Self {
        PointSet::new(
            coords.iter().map(|&(x, y)| Point2D::new(x, y)).collect(),
            radius,
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Integer index of a `radius x radius` grid cell.
pub type CellIndex = (i64, i64);

pub(crate) fn cell_of(p: &Point2D, radius: f64) -> CellIndex {
    ((p.x / radius).floor() as i64, (p.y / radius).floor() as i64)
}

/// Vertices that violate the no-isolated-vertex assumption of the total
/// domination problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateVertexReport {
    /// Vertex indices with degree 0, ascending.
    pub isolated: Vec<usize>,
}

impl DegenerateVertexReport {
    pub fn is_clean(&self) -> bool {
        self.isolated.is_empty()
    }
}

/// Geometric unit disk graph over a [`PointSet`].
///
/// Edge `(i, j)` is present iff `i != j` and the euclidean distance between
/// the centers is at most the radius. Adjacency lists are sorted ascending,
/// adjacency is symmetric, and every vertex sits in exactly one bucket, the
/// bucket of its own cell.
#[derive(Debug, Clone)]
pub struct UnitDiskGraph {
    pointset: PointSet,
    adjacency: Vec<Vec<usize>>,
    buckets: BTreeMap<CellIndex, Vec<usize>>,
}

impl UnitDiskGraph {
    /// Builds the graph, probing only the 3x3 cell block around each vertex.
    ///
    /// Rejects empty point sets, non-finite coordinates, and non-positive
    /// radii.
    pub fn build(pointset: PointSet) -> Result<Self> {
        if pointset.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if !(pointset.radius.is_finite() && pointset.radius > 0.0) {
            return Err(Error::InvalidRadius(pointset.radius));
        }
        for (index, p) in pointset.points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFiniteCoordinate { index });
            }
        }

        let radius = pointset.radius;
        let r_sq = radius * radius;
        let n = pointset.len();

        let mut buckets: BTreeMap<CellIndex, Vec<usize>> = BTreeMap::new();
        for (i, p) in pointset.points.iter().enumerate() {
            buckets.entry(cell_of(p, radius)).or_default().push(i);
        }

        let mut adjacency = vec![Vec::new(); n];
        for (i, neighbors) in adjacency.iter_mut().enumerate() {
            let p = &pointset.points[i];
            let (cx, cy) = cell_of(p, radius);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    let Some(cell) = buckets.get(&(cx + dx, cy + dy)) else {
                        continue;
                    };
                    for &j in cell {
                        if j != i && p.dist_sq(&pointset.points[j]) <= r_sq {
                            neighbors.push(j);
                        }
                    }
                }
            }
            neighbors.sort_unstable();
        }

        Ok(UnitDiskGraph {
            pointset,
            adjacency,
            buckets,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.pointset.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn radius(&self) -> f64 {
        self.pointset.radius
    }

    pub fn points(&self) -> &[Point2D] {
        &self.pointset.points
    }

    pub fn pointset(&self) -> &PointSet {
        &self.pointset
    }

    /// Open neighborhood of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::VertexOutOfRange {
                vertex: v,
                len: self.vertex_count(),
            })
    }

    /// Unchecked adjacency access for in-crate algorithms.
    pub(crate) fn adj(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn cell(&self, v: usize) -> CellIndex {
        cell_of(&self.pointset.points[v], self.pointset.radius)
    }

    /// Cell buckets, keyed by cell index in sorted order.
    pub fn buckets(&self) -> &BTreeMap<CellIndex, Vec<usize>> {
        &self.buckets
    }

    /// Exact list of degree-0 vertices.
    pub fn isolated_vertices(&self) -> DegenerateVertexReport {
        DegenerateVertexReport {
            isolated: (0..self.vertex_count())
                .filter(|&v| self.adjacency[v].is_empty())
                .collect(),
        }
    }
}
