//! Enumerates the SAC-reachable canonical forms of the balanced presentation of
//! the integers and checks each against the mod-2 invariant of every trivial
//! presentation of matching rank.
//!
//! cargo run --release --example sac_obstruction [-- <max-length> <max-gens>]

use std::time::Instant;

use eac::families;
use eac::invariants::sac_compatible;
use eac::presentation::MoveSet;
use eac::search::{reachable_set, Goal, SearchConfig};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let max_length = args.next().unwrap_or(10);
    let max_gens = args.next().unwrap_or(4);
    let p = families::paper_z();
    let mut cfg = SearchConfig::new(MoveSet::Sac, Goal::Trivial);
    cfg.max_depth = usize::MAX;
    cfg.max_total_length = max_length;
    cfg.max_generators = max_gens;
    cfg.node_budget = usize::MAX;

    let start = Instant::now();
    let set = reachable_set(&p, &cfg);
    println!("start:       {p}");
    println!("bounds:      length <= {max_length}, generators <= {max_gens}");
    println!(
        "reachable:   {} canonical forms in {:.2?}",
        set.len(),
        start.elapsed()
    );
    let mut by_rank = std::collections::BTreeMap::new();
    for c in &set {
        *by_rank.entry(c.n_generators()).or_insert(0usize) += 1;
    }
    for (n, count) in &by_rank {
        println!("  {n} generators: {count}");
    }
    let violations = set
        .iter()
        .filter(|c| {
            let q = c.to_presentation();
            (1..=max_gens).any(|k| sac_compatible(&q, &families::trivial(k).expect("k >= 1")))
        })
        .count();
    println!("states sac-compatible with a trivial presentation: {violations}");
}
