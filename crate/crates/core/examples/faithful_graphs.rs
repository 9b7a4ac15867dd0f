//! Faithful edges and graphs: generator graphs are faithful, while C_5 and
//! the triangle with a pendant vertex are not, despite having diameter 2 and
//! a large enough maximum degree respectively.

use gengraph::generator_graph::triangle_with_pendant;
use gengraph::{
    build_generator_graph, check_max_degree_bound, cycle_graph, diameter, is_faithful_graph,
    null_graph, SimpleGraph,
};

fn describe(name: &str, g: &SimpleGraph) {
    println!(
        "{name:<22} diameter {:<13} Δ = {:<3} 2Δ >= |V|: {:<5}  {}",
        diameter(g).to_string(),
        g.max_degree(),
        check_max_degree_bound(g),
        is_faithful_graph(g)
    );
}

fn main() {
    for n in [2u64, 6, 9, 12, 13] {
        describe(
            &format!("Γ(Z_{n})"),
            build_generator_graph(n).unwrap().graph(),
        );
    }
    describe("C_5", &cycle_graph(5));
    describe("triangle + pendant", &triangle_with_pendant());
    describe("edgeless on 3", &null_graph(3));
}
