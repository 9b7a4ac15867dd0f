//! Metric dimension of Γ(Z_n): exhaustive search against n - 1 (prime n) or
//! n - 2 (composite n), and the explicit resolving set for larger n.

use gengraph::metric_dim::{theorem_resolving_set, DEFAULT_EXACT_CAP};
use gengraph::{
    build_generator_graph, is_resolving, metric_dimension_bruteforce, metric_dimension_formula,
};

fn main() {
    println!(
        "{:>3} {:>7} {:>6}  basis (group elements)",
        "n", "formula", "exact"
    );
    for n in 2..=14u64 {
        let gg = build_generator_graph(n).unwrap();
        let exact = metric_dimension_bruteforce(gg.graph(), DEFAULT_EXACT_CAP).unwrap();
        let elems: Vec<u64> = exact
            .basis
            .iter()
            .map(|&v| gg.element_of(v).unwrap())
            .collect();
        println!(
            "{:>3} {:>7} {:>6}  {:?}",
            n,
            metric_dimension_formula(n).unwrap(),
            exact.dimension,
            elems
        );
    }

    let n = 60;
    let gg = build_generator_graph(n).unwrap();
    let w = theorem_resolving_set(&gg).unwrap();
    let r = is_resolving(gg.graph(), &w).unwrap();
    println!(
        "\nn = {n}: all vertices but element {} and element {} ({} landmarks) resolve: {}",
        gg.element_of(0).unwrap(),
        gg.element_of(gg.generator_count() as usize).unwrap(),
        w.len(),
        r.resolves
    );
}
