//! The five indices of Γ(Z_n), brute force next to closed form.
//!
//! cargo run --example topological_indices -- 12

use gengraph::compute_index_report;
use gengraph::report::index_report_text;

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let report = compute_index_report(n).expect("n >= 2");
    print!("{}", index_report_text(&report));
    println!(
        "all indices agree with their closed forms: {}",
        report.all_agree()
    );
}
