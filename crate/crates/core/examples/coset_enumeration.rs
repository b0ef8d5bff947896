//! Bounded coset enumeration: certifies small and trivial groups and reports
//! inconclusive runs for infinite ones.
//!
//! cargo run --release --example coset_enumeration

use std::time::Instant;

use eac::coset::{enumerate, verify_table, EnumerationLimits, Outcome};
use eac::families;
use eac::presentation::Presentation;

fn main() {
    let mut samples: Vec<(String, Presentation)> = [
        "< a | a >",
        "< a | a^5 >",
        "< r, s | r^6, s^2, s r s r >",
        "< i, j | i^4, i i j^-1 j^-1, j^-1 i j i >",
        "< a, b | a^2, b^3, a b a b a b a b >",
        "< a, b | a b a^-1 b^-1 >",
    ]
    .iter()
    .map(|s| (s.to_string(), Presentation::parse(s).unwrap()))
    .collect();
    for n in 2..=4 {
        samples.push((format!("ak:{n}"), families::ak(n).unwrap()));
    }

    let limits = EnumerationLimits::new(100_000, 10_000_000);
    for (name, p) in &samples {
        let start = Instant::now();
        let out = enumerate(p, limits);
        let elapsed = start.elapsed();
        match out {
            Outcome::Finished { order, table } => {
                println!(
                    "{name:<45} order={order:<4} verified={} ({elapsed:.2?})",
                    verify_table(p, &table)
                );
            }
            Outcome::LimitExceeded { live_cosets } => {
                println!("{name:<45} inconclusive live={live_cosets} ({elapsed:.2?})");
            }
        }
    }
}
