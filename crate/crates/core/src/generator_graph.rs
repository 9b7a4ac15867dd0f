//! The generator graph of Z_n and the structural facts about it: the join
//! decomposition, vertex degrees, faithfulness, diameter and the maximum
//! degree bound.
//!
//! Vertices are laid out generators first, then non-generators, each block in
//! ascending element order. With that layout the graph built from the
//! adjacency rule is vertex-for-vertex equal to `K_s ∨ complement(K_{n-s})`.

use serde::Serialize;

use crate::cyclic_group::{is_prime, CyclicGroup};
use crate::error::{Error, Result};
use crate::graph_core::{complete_graph, export, join, null_graph, SimpleGraph};

#[derive(Debug, Clone)]
pub struct GeneratorGraph {
    group: CyclicGroup,
    graph: SimpleGraph,
    /// vertex index -> group element
    elements: Vec<u64>,
    /// group element -> vertex index
    vertices: Vec<usize>,
}

impl GeneratorGraph {
    /// Builds Γ(Z_n) straight from the adjacency rule: two distinct elements
    /// are adjacent iff at least one of them generates Z_n.
    pub fn new(n: u64) -> Result<Self> {
        let group = CyclicGroup::new(n)?;
        let mut elements = group.generators().to_vec();
        elements.extend(group.non_generators());
        let mut vertices = vec![0; n as usize];
        for (v, &x) in elements.iter().enumerate() {
            vertices[x as usize] = v;
        }
        let mut graph = SimpleGraph::new(n as usize);
        for x in 0..n {
            for y in x + 1..n {
                if group.is_generator(x) || group.is_generator(y) {
                    graph.add_edge(vertices[x as usize], vertices[y as usize])?;
                }
            }
        }
        Ok(Self {
            group,
            graph,
            elements,
            vertices,
        })
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn generator_count(&self) -> u64 {
        self.group.generator_count()
    }

    pub fn element_of(&self, vertex: usize) -> Result<u64> {
        self.elements
            .get(vertex)
            .copied()
            .ok_or(Error::InvalidVertex {
                vertex,
                order: self.elements.len(),
            })
    }

    pub fn vertex_of(&self, element: u64) -> Result<usize> {
        self.vertices
            .get(element as usize)
            .copied()
            .ok_or(Error::InvalidElement {
                element,
                n: self.order(),
            })
    }

    /// Vertex indices of the generators, `0..s`.
    pub fn generator_vertices(&self) -> std::ops::Range<usize> {
        0..self.generator_count() as usize
    }

    /// Vertex indices of the non-generators, `s..n`.
    pub fn non_generator_vertices(&self) -> std::ops::Range<usize> {
        self.generator_count() as usize..self.order() as usize
    }

    /// `K_s ∨ complement(K_{n-s})` under the same vertex layout.
    pub fn join_model(&self) -> SimpleGraph {
        let s = self.generator_count() as usize;
        join(&complete_graph(s), &null_graph(self.order() as usize - s))
    }

    /// True when the rule-built graph equals the join model exactly.
    pub fn matches_join_model(&self) -> bool {
        self.graph == self.join_model()
    }

    /// Degree of `element` predicted without looking at the graph:
    /// `n - 1` for generators, `s` otherwise.
    pub fn degree_by_formula(&self, element: u64) -> Result<u64> {
        if element >= self.order() {
            return Err(Error::InvalidElement {
                element,
                n: self.order(),
            });
        }
        Ok(if self.group.is_generator(element) {
            self.order() - 1
        } else {
            self.generator_count()
        })
    }

    /// The degree multiset predicted by the formulas, sorted descending.
    pub fn expected_degree_multiset(&self) -> Vec<usize> {
        let (n, s) = (self.order() as usize, self.generator_count() as usize);
        let mut d = vec![n - 1; s];
        d.extend(std::iter::repeat_n(s, n - s));
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `C(s, 2) + s(n - s)`.
    pub fn expected_edge_count(&self) -> usize {
        let (n, s) = (self.order() as usize, self.generator_count() as usize);
        s * (s - 1) / 2 + s * (n - s)
    }

    pub fn to_edge_list(&self) -> String {
        export::to_edge_list(&self.graph)
    }

    /// DOT export; each node carries its group element and a generator flag.
    pub fn to_dot(&self) -> String {
        export::to_dot_with(&self.graph, &format!("Gamma_Z{}", self.order()), |v| {
            let x = self.elements[v];
            format!(
                "label=\"{x}\", element={x}, generator={}",
                self.group.is_generator(x)
            )
        })
    }
}

/// Shorthand for [`GeneratorGraph::new`].
pub fn build_generator_graph(n: u64) -> Result<GeneratorGraph> {
    GeneratorGraph::new(n)
}

/// `true` iff the closed neighbourhoods of `x` and `y` together cover every vertex.
pub fn is_faithful_edge(g: &SimpleGraph, x: usize, y: usize) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if !g.is_adjacent(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    Ok(uncovered_vertex(g, x, y).is_none())
}

/// First vertex outside `N[x] ∪ N[y]`, if any. Endpoints must be valid.
fn uncovered_vertex(g: &SimpleGraph, x: usize, y: usize) -> Option<usize> {
    (0..g.order()).find(|&w| w != x && w != y && !g.is_adjacent(w, x) && !g.is_adjacent(w, y))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaithfulnessReport {
    pub is_faithful: bool,
    /// Set when the graph has no edges, so faithfulness holds only vacuously.
    pub edgeless: bool,
    pub witness_edge: Option<(usize, usize)>,
    pub witness_missing_vertex: Option<usize>,
}

impl std::fmt::Display for FaithfulnessReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (
            self.is_faithful,
            self.witness_edge,
            self.witness_missing_vertex,
        ) {
            (true, _, _) if self.edgeless => f.write_str("faithful (vacuous: no edges)"),
            (true, _, _) => f.write_str("faithful"),
            (false, Some((x, y)), Some(w)) => {
                write!(f, "not faithful: edge ({x}, {y}) misses vertex {w}")
            }
            _ => f.write_str("not faithful"),
        }
    }
}

/// Checks every edge; the first unfaithful edge found (in sorted edge order)
/// and a vertex it fails to cover are returned as witnesses.
pub fn is_faithful_graph(g: &SimpleGraph) -> FaithfulnessReport {
    for (x, y) in g.edges() {
        if let Some(w) = uncovered_vertex(g, x, y) {
            return FaithfulnessReport {
                is_faithful: false,
                edgeless: false,
                witness_edge: Some((x, y)),
                witness_missing_vertex: Some(w),
            };
        }
    }
    FaithfulnessReport {
        is_faithful: true,
        edgeless: g.edge_count() == 0,
        witness_edge: None,
        witness_missing_vertex: None,
    }
}

/// 1 when `n` is prime (the graph is complete), 2 otherwise.
pub fn diameter_by_formula(n: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::TrivialGroup(n));
    }
    Ok(if is_prime(n) { 1 } else { 2 })
}

/// `Δ >= |V| / 2`, compared as `2Δ >= |V|`.
pub fn check_max_degree_bound(g: &SimpleGraph) -> bool {
    2 * g.max_degree() >= g.order()
}

/// Every vertex degree of Γ(Z_n) lies in `[2, n - 1]`. Requires `n >= 3`.
pub fn check_degree_bounds(n: u64) -> Result<bool> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    let gg = GeneratorGraph::new(n)?;
    let upper = n as usize - 1;
    Ok(gg
        .graph()
        .degrees()
        .iter()
        .all(|&d| (2..=upper).contains(&d)))
}

/// The triangle `u v x` with a pendant vertex `w` hanging off `x`.
/// Vertex order: `u = 0, v = 1, x = 2, w = 3`.
pub fn triangle_with_pendant() -> SimpleGraph {
    SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{cycle_graph, diameter, Diameter};

    #[test]
    fn small_generator_graphs() {
        let g4 = build_generator_graph(4).unwrap();
        assert_eq!(g4.graph().edge_count(), 5);
        for (x, d) in [(1, 3), (3, 3), (0, 2), (2, 2)] {
            let v = g4.vertex_of(x).unwrap();
            assert_eq!(g4.graph().degree(v).unwrap(), d, "element {x}");
        }

        let g5 = build_generator_graph(5).unwrap();
        assert_eq!(*g5.graph(), complete_graph(5));

        assert_eq!(
            *build_generator_graph(2).unwrap().graph(),
            complete_graph(2)
        );
        assert_eq!(
            build_generator_graph(1).unwrap_err(),
            Error::TrivialGroup(1)
        );
    }

    #[test]
    fn labeling_layout() {
        let g = build_generator_graph(6).unwrap();
        let elems: Vec<u64> = (0..6).map(|v| g.element_of(v).unwrap()).collect();
        assert_eq!(elems, vec![1, 5, 0, 2, 3, 4]);
        assert_eq!(g.vertex_of(4).unwrap(), 5);
        assert!(g.vertex_of(6).is_err());
        assert!(g.element_of(6).is_err());
    }

    #[test]
    fn degree_formula() {
        let g6 = build_generator_graph(6).unwrap();
        assert_eq!(g6.degree_by_formula(5).unwrap(), 5);
        assert_eq!(g6.degree_by_formula(4).unwrap(), 2);
        assert_eq!(
            g6.degree_by_formula(6),
            Err(Error::InvalidElement { element: 6, n: 6 })
        );
        assert_eq!(
            build_generator_graph(3)
                .unwrap()
                .degree_by_formula(0)
                .unwrap(),
            2
        );
        for n in 2..60 {
            let g = build_generator_graph(n).unwrap();
            for x in 0..n {
                let v = g.vertex_of(x).unwrap();
                assert_eq!(
                    g.graph().degree(v).unwrap() as u64,
                    g.degree_by_formula(x).unwrap()
                );
            }
        }
    }

    #[test]
    fn faithful_edges() {
        let c5 = cycle_graph(5);
        assert!(!is_faithful_edge(&c5, 0, 1).unwrap());
        let k4 = complete_graph(4);
        assert!(is_faithful_edge(&k4, 1, 3).unwrap());
        let t = triangle_with_pendant();
        assert!(!is_faithful_edge(&t, 0, 1).unwrap());
        assert_eq!(is_faithful_edge(&c5, 0, 2), Err(Error::NotAnEdge(0, 2)));
        assert!(is_faithful_edge(&c5, 0, 9).is_err());
    }

    #[test]
    fn faithful_graphs() {
        for n in 2..=50 {
            let g = build_generator_graph(n).unwrap();
            let r = is_faithful_graph(g.graph());
            assert!(r.is_faithful && !r.edgeless, "n = {n}");
        }

        let r = is_faithful_graph(&cycle_graph(5));
        assert!(!r.is_faithful);
        let (x, y) = r.witness_edge.unwrap();
        let w = r.witness_missing_vertex.unwrap();
        let c5 = cycle_graph(5);
        assert!(c5.is_adjacent(x, y));
        assert!(w != x && w != y && !c5.is_adjacent(w, x) && !c5.is_adjacent(w, y));

        let r = is_faithful_graph(&null_graph(3));
        assert!(r.is_faithful && r.edgeless);
        assert_eq!(r.to_string(), "faithful (vacuous: no edges)");

        let r = is_faithful_graph(&triangle_with_pendant());
        assert_eq!(r.witness_edge, Some((0, 1)));
        assert_eq!(r.witness_missing_vertex, Some(3));
    }

    #[test]
    fn diameter_formula() {
        assert_eq!(diameter_by_formula(7).unwrap(), 1);
        assert_eq!(diameter_by_formula(4).unwrap(), 2);
        assert_eq!(diameter_by_formula(2).unwrap(), 1);
        assert!(diameter_by_formula(1).is_err());
        for n in 2..80 {
            let g = build_generator_graph(n).unwrap();
            assert_eq!(
                diameter(g.graph()),
                Diameter::Finite(diameter_by_formula(n).unwrap())
            );
        }
    }

    #[test]
    fn max_degree_bound() {
        assert!(check_max_degree_bound(
            build_generator_graph(6).unwrap().graph()
        ));
        assert!(!check_max_degree_bound(&cycle_graph(5)));
        let t = triangle_with_pendant();
        assert!(check_max_degree_bound(&t));
        assert!(!is_faithful_graph(&t).is_faithful);
    }

    #[test]
    fn degree_bounds() {
        assert!(check_degree_bounds(3).unwrap());
        let g3 = build_generator_graph(3).unwrap();
        assert_eq!(g3.graph().degrees(), vec![2, 2, 2]);
        assert!(check_degree_bounds(12).unwrap());
        assert_eq!(
            build_generator_graph(12)
                .unwrap()
                .graph()
                .degrees()
                .iter()
                .min(),
            Some(&4)
        );
        assert!(check_degree_bounds(4).unwrap());
        assert_eq!(
            check_degree_bounds(2),
            Err(Error::OrderTooSmall { n: 2, min: 3 })
        );
    }

    #[test]
    fn exports() {
        assert_eq!(build_generator_graph(2).unwrap().to_edge_list(), "0 1\n");
        let e4 = build_generator_graph(4).unwrap().to_edge_list();
        assert_eq!(e4, "0 1\n0 2\n0 3\n1 2\n1 3\n");
        let dot = build_generator_graph(3).unwrap().to_dot();
        assert_eq!(dot.matches("generator=true").count(), 2);
        assert_eq!(dot.matches("generator=false").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
