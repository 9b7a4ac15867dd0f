//! Resolving sets and metric dimension.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::cyclic_group::{is_prime, totient};
use crate::error::{Error, Result};
use crate::generator_graph::GeneratorGraph;
use crate::graph_core::{bfs_distances, DistanceMatrix, SimpleGraph};

/// Largest graph the exhaustive search accepts by default.
pub const DEFAULT_EXACT_CAP: usize = 16;

fn connected_distances(g: &SimpleGraph) -> Result<DistanceMatrix> {
    let d = bfs_distances(g);
    if d.is_connected() {
        Ok(d)
    } else {
        Err(Error::Disconnected)
    }
}

/// Distance vector of `u` with respect to `landmarks`, in landmark order.
pub fn representation(g: &SimpleGraph, u: usize, landmarks: &[usize]) -> Result<Vec<u32>> {
    g.check_vertex(u)?;
    for &w in landmarks {
        g.check_vertex(w)?;
    }
    let d = connected_distances(g)?;
    Ok(representation_in(&d, u, landmarks))
}

fn representation_in(d: &DistanceMatrix, u: usize, landmarks: &[usize]) -> Vec<u32> {
    landmarks
        .iter()
        .map(|&w| d.get(u, w).expect("connected"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolvingSetResult {
    pub landmarks: Vec<usize>,
    /// `representations[u]` is the distance vector of vertex `u`.
    pub representations: Vec<Vec<u32>>,
    pub resolves: bool,
    /// First pair `(u, v)`, `u < v`, sharing a distance vector.
    pub collision: Option<(usize, usize)>,
}

/// Checks whether `landmarks` resolves `g`.
pub fn is_resolving(g: &SimpleGraph, landmarks: &[usize]) -> Result<ResolvingSetResult> {
    for &w in landmarks {
        g.check_vertex(w)?;
    }
    let d = connected_distances(g)?;
    Ok(resolve_with(&d, landmarks))
}

fn resolve_with(d: &DistanceMatrix, landmarks: &[usize]) -> ResolvingSetResult {
    let representations: Vec<Vec<u32>> = (0..d.order())
        .map(|u| representation_in(d, u, landmarks))
        .collect();
    let mut seen: HashMap<&[u32], usize> = HashMap::with_capacity(representations.len());
    let mut collision = None;
    for (v, r) in representations.iter().enumerate() {
        if let Some(&u) = seen.get(r.as_slice()) {
            collision = Some((u, v));
            break;
        }
        seen.insert(r, v);
    }
    ResolvingSetResult {
        landmarks: landmarks.to_vec(),
        resolves: collision.is_none(),
        representations,
        collision,
    }
}

fn resolves(d: &DistanceMatrix, landmarks: &[usize], scratch: &mut Vec<Vec<u32>>) -> bool {
    scratch.clear();
    scratch.extend((0..d.order()).map(|u| representation_in(d, u, landmarks)));
    scratch.sort_unstable();
    scratch.windows(2).all(|w| w[0] != w[1])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricBasis {
    pub dimension: usize,
    /// Lexicographically least minimum resolving set.
    pub basis: Vec<usize>,
}

/// Exact metric dimension by exhaustive search in ascending subset size.
/// Graphs with more than `cap` vertices are refused.
pub fn metric_dimension_bruteforce(g: &SimpleGraph, cap: usize) -> Result<MetricBasis> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooFewVertices(2));
    }
    if n > cap {
        return Err(Error::TooLarge { order: n, cap });
    }
    let d = connected_distances(g)?;
    let mut scratch = Vec::with_capacity(n);
    for k in 1..n {
        // combinations() yields subsets in lexicographic order
        if let Some(basis) = (0..n)
            .combinations(k)
            .find(|w| resolves(&d, w, &mut scratch))
        {
            return Ok(MetricBasis {
                dimension: k,
                basis,
            });
        }
    }
    unreachable!("any n - 1 vertices resolve a connected graph")
}

/// `n − 1` when `n = φ(n) + 1` (n prime), `n − 2` otherwise.
pub fn metric_dimension_formula(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::TrivialGroup(n));
    }
    Ok(if n == totient(n) + 1 { n - 1 } else { n - 2 })
}

/// Same value, stated through primality.
pub fn metric_dimension_formula_by_primality(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::TrivialGroup(n));
    }
    Ok(if is_prime(n) { n - 1 } else { n - 2 })
}

/// For Z_n with exactly one non-generator: the generator set resolves, and no
/// set of `n − 2` vertices does. Both halves are checked directly.
pub fn lemma_single_nongenerator_check(n: u64) -> Result<bool> {
    let gg = GeneratorGraph::new(n)?;
    if gg.order() - gg.generator_count() != 1 {
        return Err(Error::Hypothesis(format!(
            "Z_{n} has {} non-generators, expected exactly 1",
            gg.order() - gg.generator_count()
        )));
    }
    let d = connected_distances(gg.graph())?;
    let generators: Vec<usize> = gg.generator_vertices().collect();
    let upper = resolve_with(&d, &generators).resolves;
    let mut scratch = Vec::new();
    let lower = n < 3
        || (0..n as usize)
            .combinations(n as usize - 2)
            .all(|w| !resolves(&d, &w, &mut scratch));
    Ok(upper && lower)
}

/// Resolving set of size `n − 2` for Z_n with at least two non-generators:
/// every vertex except the first generator and the first non-generator.
pub fn theorem_resolving_set(gg: &GeneratorGraph) -> Result<Vec<usize>> {
    let (g1, h1) = first_of_each_block(gg)?;
    Ok((0..gg.order() as usize)
        .filter(|&v| v != g1 && v != h1)
        .collect())
}

/// The deficient sets of size `n − 3` obtained from [`theorem_resolving_set`]
/// by dropping one more generator or one more non-generator. None of them
/// resolves.
pub fn theorem_deficient_sets(gg: &GeneratorGraph) -> Result<Vec<Vec<usize>>> {
    let (g1, h1) = first_of_each_block(gg)?;
    let w = theorem_resolving_set(gg)?;
    let extra = gg
        .generator_vertices()
        .filter(|&v| v != g1)
        .chain(gg.non_generator_vertices().filter(|&v| v != h1));
    Ok(extra
        .map(|x| w.iter().copied().filter(|&v| v != x).collect())
        .collect())
}

fn first_of_each_block(gg: &GeneratorGraph) -> Result<(usize, usize)> {
    let non_gen = gg.order() - gg.generator_count();
    if non_gen < 2 {
        return Err(Error::Hypothesis(format!(
            "Z_{} has {non_gen} non-generators, need at least 2",
            gg.order()
        )));
    }
    Ok((
        gg.generator_vertices().start,
        gg.non_generator_vertices().start,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinKind {
    /// Same open neighbourhood (non-adjacent).
    Open,
    /// Same closed neighbourhood (adjacent).
    Closed,
}

/// All twin pairs `(u, v, kind)` with `u < v`.
pub fn twin_pairs(g: &SimpleGraph) -> Vec<(usize, usize, TwinKind)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let same = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| g.is_adjacent(u, w) == g.is_adjacent(v, w));
            if same {
                let kind = if g.is_adjacent(u, v) {
                    TwinKind::Closed
                } else {
                    TwinKind::Open
                };
                out.push((u, v, kind));
            }
        }
    }
    out
}
