//! Γ(Z_n) built from the adjacency rule coincides with K_s joined to an
//! edgeless graph on the n - s non-generators.
//!
//! cargo run --example join_structure -- 10

use gengraph::build_generator_graph;

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let gg = build_generator_graph(n).expect("n >= 2");
    let (s, g) = (gg.generator_count(), gg.graph());

    println!(
        "Γ(Z_{n}): {} vertices, {} edges, |S| = {s}",
        g.order(),
        g.edge_count()
    );
    println!(
        "equals K_{s} ∨ complement(K_{}): {}",
        n - s,
        gg.matches_join_model()
    );
    println!(
        "expected edges C({s},2) + {s}·{} = {}",
        n - s,
        gg.expected_edge_count()
    );
    println!("complete: {}", g.edge_count() as u64 == n * (n - 1) / 2);
    println!();
    println!(
        "{:>8} {:>10} {:>8} {:>8}",
        "element", "generator", "degree", "formula"
    );
    for x in 0..n {
        let v = gg.vertex_of(x).unwrap();
        println!(
            "{:>8} {:>10} {:>8} {:>8}",
            x,
            gg.group().is_generator(x),
            g.degree(v).unwrap(),
            gg.degree_by_formula(x).unwrap()
        );
    }
}
