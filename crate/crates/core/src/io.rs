//! JSON file formats: instances, grid graphs, solutions, and the role
//! sidecar emitted next to reduction outputs.
//!
//! Instance writers emit coordinates with 17 significant digits so every
//! double round-trips exactly; all writers are deterministic byte-for-byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::approx::{RomanAssignment, TotalDominatingSet};
use crate::error::Result;
use crate::geometry::{Point2D, PointSet};
use crate::reduction::{GridGraph, Role};

#[derive(Deserialize)]
struct InstanceFile {
    radius: f64,
    points: Vec<[f64; 2]>,
}

/// 17 significant digits, enough to reconstruct any f64 exactly.
fn fmt_coord(v: f64) -> String {
    format!("{v:.16e}")
}

/// Serializes an instance as `{"radius": r, "points": [[x, y], ...]}`.
pub fn format_instance(ps: &PointSet) -> String {
    let mut out = String::from("{\"radius\":");
    out.push_str(&fmt_coord(ps.radius));
    out.push_str(",\"points\":[");
    for (i, p) in ps.points.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        out.push_str(&fmt_coord(p.x));
        out.push(',');
        out.push_str(&fmt_coord(p.y));
        out.push(']');
    }
    out.push_str("]}\n");
    out
}

pub fn parse_instance(text: &str) -> Result<PointSet> {
    let file: InstanceFile = serde_json::from_str(text)?;
    Ok(PointSet::new(
        file.points
            .iter()
            .map(|&[x, y]| Point2D::new(x, y))
            .collect(),
        file.radius,
    ))
}

pub fn write_instance(path: &Path, ps: &PointSet) -> Result<()> {
    fs::write(path, format_instance(ps))?;
    Ok(())
}

pub fn read_instance(path: &Path) -> Result<PointSet> {
    parse_instance(&fs::read_to_string(path)?)
}

#[derive(Serialize, Deserialize)]
struct GridFile {
    vertices: Vec<[i64; 2]>,
}

pub fn format_grid(g: &GridGraph) -> String {
    let file = GridFile {
        vertices: g.vertices().iter().map(|&(x, y)| [x, y]).collect(),
    };
    let mut s = serde_json::to_string(&file).expect("grid serialization cannot fail");
    s.push('\n');
    s
}

pub fn parse_grid(text: &str) -> Result<GridGraph> {
    let file: GridFile = serde_json::from_str(text)?;
    GridGraph::new(file.vertices.iter().map(|&[x, y]| (x, y)).collect())
}

pub fn write_grid(path: &Path, g: &GridGraph) -> Result<()> {
    fs::write(path, format_grid(g))?;
    Ok(())
}

pub fn read_grid(path: &Path) -> Result<GridGraph> {
    parse_grid(&fs::read_to_string(path)?)
}

/// Solution file payload, tagged by problem name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "lowercase")]
pub enum SolutionFile {
    Ds { members: Vec<usize> },
    Tds { members: Vec<usize> },
    Rds { values: Vec<u8>, weight: usize },
    Trds { values: Vec<u8>, weight: usize },
}

impl SolutionFile {
    pub fn tds(s: &TotalDominatingSet) -> Self {
        SolutionFile::Tds {
            members: s.members.clone(),
        }
    }

    pub fn trds(f: &RomanAssignment) -> Self {
        SolutionFile::Trds {
            values: f.values.clone(),
            weight: f.weight(),
        }
    }

    pub fn objective(&self) -> usize {
        match self {
            SolutionFile::Ds { members } | SolutionFile::Tds { members } => members.len(),
            SolutionFile::Rds { weight, .. } | SolutionFile::Trds { weight, .. } => *weight,
        }
    }
}

pub fn format_solution(sol: &SolutionFile) -> String {
    let mut s = serde_json::to_string(sol).expect("solution serialization cannot fail");
    s.push('\n');
    s
}

pub fn parse_solution(text: &str) -> Result<SolutionFile> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_solution(path: &Path, sol: &SolutionFile) -> Result<()> {
    fs::write(path, format_solution(sol))?;
    Ok(())
}

pub fn read_solution(path: &Path) -> Result<SolutionFile> {
    parse_solution(&fs::read_to_string(path)?)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RoleEntry {
    Original { src: usize },
    Mid { edge: [usize; 2] },
    Pendant { edge: [usize; 2] },
}

#[derive(Serialize, Deserialize)]
struct RolesFile {
    roles: Vec<RoleEntry>,
}

pub fn format_roles(roles: &[Role]) -> String {
    let file = RolesFile {
        roles: roles
            .iter()
            .map(|r| match *r {
                Role::Original { src } => RoleEntry::Original { src },
                Role::Mid { edge } => RoleEntry::Mid {
                    edge: [edge.0, edge.1],
                },
                Role::Pendant { edge } => RoleEntry::Pendant {
                    edge: [edge.0, edge.1],
                },
            })
            .collect(),
    };
    let mut s = serde_json::to_string(&file).expect("role serialization cannot fail");
    s.push('\n');
    s
}

pub fn parse_roles(text: &str) -> Result<Vec<Role>> {
    let file: RolesFile = serde_json::from_str(text)?;
    Ok(file
        .roles
        .iter()
        .map(|r| match *r {
            RoleEntry::Original { src } => Role::Original { src },
            RoleEntry::Mid { edge } => Role::Mid {
                edge: (edge[0], edge[1]),
            },
            RoleEntry::Pendant { edge } => Role::Pendant {
                edge: (edge[0], edge[1]),
            },
        })
        .collect())
}

pub fn write_roles(path: &Path, roles: &[Role]) -> Result<()> {
    fs::write(path, format_roles(roles))?;
    Ok(())
}

pub fn read_roles(path: &Path) -> Result<Vec<Role>> {
    parse_roles(&fs::read_to_string(path)?)
}
