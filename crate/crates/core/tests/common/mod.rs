//! Independent brute-force oracles for the integration suites. Everything
//! here is written against the problem definitions only, not against the
//! library's search code, so oracle-vs-implementation comparisons stay
//! meaningful.

#![allow(dead_code)]

use udg_dom::generator;
use udg_dom::geometry::{PointSet, UnitDiskGraph};
use udg_dom::setcover::SetCoverInstance;

/// All-pairs adjacency over the same closed distance condition.
pub fn naive_adjacency(ps: &PointSet) -> Vec<Vec<usize>> {
    let r_sq = ps.radius * ps.radius;
    let n = ps.len();
    let mut adj = vec![Vec::new(); n];
    for (i, row) in adj.iter_mut().enumerate() {
        for j in 0..n {
            if i != j && ps.points[i].dist_sq(&ps.points[j]) <= r_sq {
                row.push(j);
            }
        }
    }
    adj
}

pub fn is_dominating(adj: &[Vec<usize>], inside: &[bool]) -> bool {
    (0..adj.len()).all(|v| inside[v] || adj[v].iter().any(|&u| inside[u]))
}

pub fn is_total_dominating(adj: &[Vec<usize>], inside: &[bool]) -> bool {
    is_dominating(adj, inside)
        && (0..adj.len())
            .filter(|&v| inside[v])
            .all(|v| adj[v].iter().any(|&u| inside[u]))
}

fn mask_to_vec(mask: u32, n: usize) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

fn best_subset(n: usize, valid: impl Fn(&[bool]) -> bool) -> Option<(usize, Vec<bool>)> {
    let mut best: Option<(usize, Vec<bool>)> = None;
    for mask in 0..(1u32 << n) {
        let vec = mask_to_vec(mask, n);
        if !valid(&vec) {
            continue;
        }
        let count = vec.iter().filter(|&&b| b).count();
        let better = match &best {
            None => true,
            Some((bc, bv)) => count < *bc || (count == *bc && vec < *bv),
        };
        if better {
            best = Some((count, vec));
        }
    }
    best
}

/// Minimum dominating set by full enumeration; ties by smallest
/// membership vector.
pub fn brute_min_ds(adj: &[Vec<usize>]) -> (usize, Vec<bool>) {
    best_subset(adj.len(), |v| is_dominating(adj, v)).expect("the full set dominates")
}

/// Minimum total dominating set by full enumeration. `None` when the graph
/// has an isolated vertex.
pub fn brute_min_tds(adj: &[Vec<usize>]) -> Option<(usize, Vec<bool>)> {
    best_subset(adj.len(), |v| is_total_dominating(adj, v))
}

pub fn is_valid_rdf(adj: &[Vec<usize>], labels: &[u8]) -> bool {
    (0..adj.len()).all(|v| labels[v] != 0 || adj[v].iter().any(|&u| labels[u] == 2))
}

pub fn is_valid_trdf(adj: &[Vec<usize>], labels: &[u8]) -> bool {
    is_valid_rdf(adj, labels)
        && (0..adj.len())
            .filter(|&v| labels[v] >= 1)
            .all(|v| adj[v].iter().any(|&u| labels[u] >= 1))
}

fn best_labeling(
    n: usize,
    min_v1: bool,
    valid: impl Fn(&[u8]) -> bool,
) -> Option<(usize, Vec<u8>)> {
    let mut best: Option<(usize, usize, Vec<u8>)> = None;
    let mut labels = vec![0u8; n];
    loop {
        if valid(&labels) {
            let weight: usize = labels.iter().map(|&l| l as usize).sum();
            let v1 = if min_v1 {
                labels.iter().filter(|&&l| l == 1).count()
            } else {
                0
            };
            let better = match &best {
                None => true,
                Some((bw, bv1, bl)) => (weight, v1, &labels) < (*bw, *bv1, bl),
            };
            if better {
                best = Some((weight, v1, labels.clone()));
            }
        }
        // odometer over base-3 vectors, least significant digit last, so
        // vectors appear in lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return best.map(|(w, _, l)| (w, l));
            }
            i -= 1;
            if labels[i] < 2 {
                labels[i] += 1;
                for l in &mut labels[i + 1..] {
                    *l = 0;
                }
                break;
            }
        }
    }
}

/// Minimum-weight Roman dominating function by `3^n` enumeration.
pub fn brute_min_rdf(adj: &[Vec<usize>]) -> (usize, Vec<u8>) {
    best_labeling(adj.len(), false, |l| is_valid_rdf(adj, l)).expect("all-ones is an RDF")
}

/// Minimum-weight total Roman dominating function by `3^n` enumeration.
pub fn brute_min_trdf(adj: &[Vec<usize>], min_v1: bool) -> Option<(usize, Vec<u8>)> {
    best_labeling(adj.len(), min_v1, |l| is_valid_trdf(adj, l))
}

/// Exhaustive minimum set cover; ties by lexicographically smallest chosen
/// positions. `None` when the union misses part of the universe.
pub fn brute_set_cover(inst: &SetCoverInstance) -> Option<(usize, Vec<usize>)> {
    let m = inst.subsets.len();
    assert!(m <= 20, "oracle meant for desk-scale instances");
    let position: std::collections::BTreeMap<usize, usize> = inst
        .universe
        .iter()
        .enumerate()
        .map(|(p, &e)| (e, p))
        .collect();
    let dense: Vec<Vec<usize>> = inst
        .subsets
        .iter()
        .map(|s| s.members.iter().map(|e| position[e]).collect())
        .collect();

    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..(1u32 << m) {
        let chosen: Vec<usize> = (0..m).filter(|&s| mask >> s & 1 == 1).collect();
        let mut covered = vec![false; inst.universe.len()];
        for &s in &chosen {
            for &e in &dense[s] {
                covered[e] = true;
            }
        }
        if !covered.iter().all(|&c| c) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bc, bv)) => chosen.len() < *bc || (chosen.len() == *bc && chosen < *bv),
        };
        if better {
            best = Some((chosen.len(), chosen));
        }
    }
    best
}

/// H(m) as an exact fraction.
pub fn harmonic_fraction(m: usize) -> (u128, u128) {
    let mut num: u128 = 0;
    let mut den: u128 = 1;
    for k in 1..=m as u128 {
        num = num * k + den;
        den *= k;
    }
    let g = gcd(num, den);
    (num / g, den / g)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Random instance without isolated vertices in a density-2 box, derived
/// from a base seed and a trial index.
pub fn seeded_instance(base_seed: u64, trial: u64, n: usize) -> UnitDiskGraph {
    let side = ((n as f64) / 2.0).sqrt().max(2.0);
    let mut rng = generator::trial_rng(base_seed, trial);
    generator::sample_without_isolated(&mut rng, n, side, side, 1.0, 1000)
        .expect("density-2 boxes admit instances without isolated vertices")
}
