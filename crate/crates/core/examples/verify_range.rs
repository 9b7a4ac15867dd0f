//! Every check over a range of n, as the `verify` subcommand runs it.
//!
//! cargo run --release --example verify_range -- 2 200

use gengraph::metric_dim::DEFAULT_EXACT_CAP;
use gengraph::verify_range;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer"));
    let from = args.next().unwrap_or(2);
    let to = args.next().unwrap_or(60);
    let summary = verify_range(from, to, DEFAULT_EXACT_CAP).expect("valid range");
    print!("{}", summary.to_text());
    std::process::exit(if summary.is_success() { 0 } else { 1 });
}
