use serde::Serialize;

use super::{iter_bits, SimpleGraph};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances. Unreachable pairs read back as `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance between `u` and `v`, or `None` if they lie in different components.
    ///
    /// Panics if either index is out of range.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        assert!(u < self.order && v < self.order, "vertex out of range");
        match self.entries[u * self.order + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn is_connected(&self) -> bool {
        !self.entries.contains(&UNREACHABLE)
    }

    /// Distances over unordered pairs `u < v`, `None` entries included.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<u32>)> + '_ {
        (0..self.order).flat_map(move |u| (u + 1..self.order).map(move |v| (u, v, self.get(u, v))))
    }

    pub fn max_finite(&self) -> u32 {
        self.entries
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first search from every vertex.
pub fn bfs_distances(g: &SimpleGraph) -> DistanceMatrix {
    let n = g.order();
    let words = g.words();
    let mut entries = vec![UNREACHABLE; n * n];
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    for source in 0..n {
        visited.fill(0);
        frontier.fill(0);
        visited[source / 64] |= 1 << (source % 64);
        frontier[source / 64] |= 1 << (source % 64);
        let row = &mut entries[source * n..(source + 1) * n];
        row[source] = 0;
        let mut depth = 0u32;
        loop {
            next.fill(0);
            for u in iter_bits(&frontier) {
                for (acc, w) in next.iter_mut().zip(g.row(u)) {
                    *acc |= w;
                }
            }
            let mut any = false;
            for (acc, seen) in next.iter_mut().zip(visited.iter_mut()) {
                *acc &= !*seen;
                *seen |= *acc;
                any |= *acc != 0;
            }
            if !any {
                break;
            }
            depth += 1;
            for v in iter_bits(&next) {
                row[v] = depth;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }
    DistanceMatrix { order: n, entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Diameter {
    Finite(u32),
    Disconnected,
}

impl Diameter {
    pub fn value(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("disconnected"),
        }
    }
}

/// Largest distance between two vertices. The empty and single-vertex graphs
/// have diameter 0.
pub fn diameter(g: &SimpleGraph) -> Diameter {
    diameter_of(&bfs_distances(g))
}

pub(crate) fn diameter_of(d: &DistanceMatrix) -> Diameter {
    if d.is_connected() {
        Diameter::Finite(d.max_finite())
    } else {
        Diameter::Disconnected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{complete_graph, cycle_graph, join, null_graph};

    #[test]
    fn distances_on_fixtures() {
        let d = bfs_distances(&complete_graph(3));
        for (u, v, dist) in d.pairs() {
            assert_eq!(dist, Some(1), "{u} {v}");
        }
        assert_eq!(bfs_distances(&cycle_graph(5)).max_finite(), 2);
        let d = bfs_distances(&null_graph(2));
        assert_eq!(d.get(0, 1), None);
        assert_eq!(d.get(1, 1), Some(0));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&complete_graph(7)), Diameter::Finite(1));
        assert_eq!(diameter(&cycle_graph(5)), Diameter::Finite(2));
        assert_eq!(diameter(&null_graph(2)), Diameter::Disconnected);
        assert_eq!(diameter(&null_graph(1)), Diameter::Finite(0));
        for n in 2..40 {
            assert_eq!(diameter(&complete_graph(n)), Diameter::Finite(1));
            assert_eq!(
                diameter(&cycle_graph(n + 1)),
                Diameter::Finite((n as u32).div_ceil(2))
            );
        }
    }

    #[test]
    fn long_path_spans_words() {
        let n = 200;
        let g = crate::graph_core::SimpleGraph::from_edges(
            n,
            &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>(),
        )
        .unwrap();
        let d = bfs_distances(&g);
        assert_eq!(d.get(0, n - 1), Some(n as u32 - 1));
        assert_eq!(d.get(70, 130), Some(60));
    }

    #[test]
    fn join_diameter_at_most_two() {
        for a in 1..6 {
            for b in 1..6 {
                let g = join(&cycle_graph(a), &null_graph(b));
                assert!(diameter(&g).value().unwrap() <= 2);
            }
        }
    }
}
