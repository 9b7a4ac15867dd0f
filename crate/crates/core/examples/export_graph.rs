//! Writes Γ(Z_n) as DOT and as a sorted edge list.
//!
//! cargo run --example export_graph -- 8 > gamma8.dot

use gengraph::build_generator_graph;

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let gg = build_generator_graph(n).expect("n >= 2");
    print!("{}", gg.to_dot());
    eprintln!("edge list:\n{}", gg.to_edge_list());
}
