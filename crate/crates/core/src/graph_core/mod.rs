//! Simple undirected graphs on positional vertices `0..n`.
//!
//! Adjacency is a dense symmetric bit matrix, one packed row per vertex. The
//! graphs handled here are small (a few thousand vertices at most) and the
//! dense layout lets BFS expand a whole frontier row with word-wide ORs.

mod distance;
pub mod export;

pub use distance::{bfs_distances, diameter, Diameter, DistanceMatrix};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        let words = order.div_ceil(WORD);
        Self {
            order,
            words,
            rows: vec![0; order * words],
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range endpoints
    /// are rejected; duplicate edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::NotAnEdge(u, v));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency test. Out-of-range vertices are never adjacent.
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.row(u)[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    pub(crate) fn degree_unchecked(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree_unchecked(v)).collect()
    }

    /// Largest vertex degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.order)
            .map(|v| self.degree_unchecked(v))
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            }
        })
    })
}

/// K_n.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set(u, v);
            g.set(v, u);
        }
    }
    g
}

/// The edgeless graph on `n` vertices.
pub fn null_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n)
}

/// C_n for `n >= 3`; smaller `n` give the path on `n` vertices.
pub fn cycle_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n.saturating_sub(1) {
        g.set(u, u + 1);
        g.set(u + 1, u);
    }
    if n >= 3 {
        g.set(0, n - 1);
        g.set(n - 1, 0);
    }
    g
}

/// Join of two graphs. Vertices of `left` keep their indices; vertices of
/// `right` are shifted by `left.order()`. Every left vertex is adjacent to
/// every right vertex.
pub fn join(left: &SimpleGraph, right: &SimpleGraph) -> SimpleGraph {
    let offset = left.order;
    let mut g = SimpleGraph::new(offset + right.order);
    for (u, v) in left.edges() {
        g.set(u, v);
        g.set(v, u);
    }
    for (u, v) in right.edges() {
        g.set(u + offset, v + offset);
        g.set(v + offset, u + offset);
    }
    for u in 0..offset {
        for v in offset..g.order {
            g.set(u, v);
            g.set(v, u);
        }
    }
    g
}

pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let mut h = SimpleGraph::new(g.order);
    for u in 0..g.order {
        for v in 0..g.order {
            if u != v && !g.is_adjacent(u, v) {
                h.set(u, v);
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(complete_graph(0).order(), 0);
        let k1 = complete_graph(1);
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let k5 = complete_graph(5);
        assert_eq!(k5.edge_count(), 10);
        assert!((0..5).all(|v| k5.degree(v).unwrap() == 4));
    }

    #[test]
    fn null_graphs() {
        assert_eq!(null_graph(0).order(), 0);
        let g = null_graph(3);
        assert_eq!((g.order(), g.edge_count()), (3, 0));
        assert!(null_graph(10).degrees().iter().all(|&d| d == 0));
    }

    #[test]
    fn joins() {
        let g = join(&complete_graph(2), &null_graph(2));
        assert_eq!(g.edge_count(), 5);
        assert!(!g.is_adjacent(2, 3));

        assert_eq!(join(&null_graph(1), &null_graph(1)), complete_graph(2));
        assert_eq!(join(&complete_graph(3), &null_graph(0)), complete_graph(3));

        let g = join(&complete_graph(2), &null_graph(3));
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(g.degree(4).unwrap(), 2);
    }

    #[test]
    fn join_edge_count_formula() {
        for a in 0..=50usize {
            for b in 0..=50usize {
                let g = join(&complete_graph(a), &null_graph(b));
                assert_eq!(g.edge_count(), a * a.saturating_sub(1) / 2 + a * b);
            }
        }
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&complete_graph(4)), null_graph(4));
        assert_eq!(complement(&null_graph(3)), complete_graph(3));
        let c5c = complement(&cycle_graph(5));
        assert_eq!(c5c.order(), 5);
        assert_eq!(c5c.edge_count(), 5);
        assert!(c5c.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn degrees_and_errors() {
        let c5 = cycle_graph(5);
        assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
        assert_eq!(c5.max_degree(), 2);
        assert_eq!(
            c5.degree(5),
            Err(Error::InvalidVertex {
                vertex: 5,
                order: 5
            })
        );
        assert_eq!(null_graph(0).max_degree(), 0);
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn wide_graphs_cross_word_boundaries() {
        let g = complete_graph(130);
        assert_eq!(g.edge_count(), 130 * 129 / 2);
        assert_eq!(g.neighbors(129).count(), 129);
        assert!(g.is_adjacent(0, 129) && g.is_adjacent(64, 63));
    }

    #[test]
    fn edges_are_sorted() {
        let g = SimpleGraph::from_edges(4, &[(3, 1), (2, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
    }
}
