//! The published Harmonic closed form counts the non-adjacent pairs of
//! non-generators as if they were edges. This prints, for each n, how far it
//! sits above the edge sum and the exact excess (n-s)(n-s-1)/(2s).

use gengraph::numeric::format_sig;
use gengraph::topo_indices::{
    harmonic_bruteforce, harmonic_formula_corrected_exact, harmonic_formula_paper_exact,
    harmonic_paper_excess,
};
use gengraph::{build_generator_graph, totient};

fn main() {
    println!(
        "{:>4} {:>4} {:>14} {:>14} {:>12} {:>10}",
        "n", "s", "edge sum", "published", "gap", "excess"
    );
    for n in 2..=30u64 {
        let s = totient(n);
        let brute = harmonic_bruteforce(build_generator_graph(n).unwrap().graph());
        let paper = harmonic_formula_paper_exact(n, s).unwrap();
        let fixed = harmonic_formula_corrected_exact(n, s).unwrap();
        let excess = harmonic_paper_excess(n, s).unwrap();
        assert_eq!(paper - fixed, excess);
        let paper_f = *paper.numer() as f64 / *paper.denom() as f64;
        println!(
            "{:>4} {:>4} {:>14} {:>14} {:>12} {:>10}",
            n,
            s,
            format_sig(brute, 10),
            format_sig(paper_f, 10),
            format_sig(paper_f - brute, 6),
            excess.to_string()
        );
    }
}
