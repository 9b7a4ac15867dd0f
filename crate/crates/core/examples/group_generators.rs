//! Generators of Z_n and Euler's totient.
//!
//! cargo run --example group_generators -- 12

use gengraph::{describe_group, is_prime, totient};

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let group = match describe_group(n) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("Z_{n}");
    println!("  generators      {:?}", group.generators());
    println!("  non-generators  {:?}", group.non_generators());
    println!(
        "  |S| = {} = phi({n}) = {}",
        group.generator_count(),
        totient(n)
    );
    println!("  prime order: {}", is_prime(n));
    if n >= 3 {
        let closed = group
            .generators()
            .iter()
            .all(|&g| group.is_generator(n - g));
        println!("  closed under inverses: {closed}");
    }
}
