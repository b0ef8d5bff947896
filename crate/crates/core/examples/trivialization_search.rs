//! Searches for an extended move sequence shrinking a balanced presentation of
//! the integers to rank one, then prints the verified transcript.
//!
//! cargo run --release --example trivialization_search [-- <bfs|iddfs|greedy> [max-gens]]

use std::time::Instant;

use eac::families;
use eac::presentation::{normalize, verify_transcript, MoveSet};
use eac::search::{search_trivialization, Goal, SearchConfig, SearchOutcome, Strategy};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let strategy = match args.first().map(String::as_str) {
        Some("iddfs") => Strategy::Iddfs,
        Some("greedy") => Strategy::Greedy,
        _ => Strategy::Bfs,
    };
    let p = families::paper_z();
    let mut cfg = SearchConfig::new(MoveSet::Eac, Goal::Rank(1));
    cfg.strategy = strategy;
    cfg.max_depth = 12;
    cfg.max_total_length = 12;
    cfg.max_generators = args.get(1).and_then(|g| g.parse().ok()).unwrap_or(3);
    cfg.node_budget = 1_000_000;

    let start = Instant::now();
    let result = search_trivialization(&p, &cfg);
    println!("start:     {p}");
    println!("strategy:  {strategy:?}");
    println!("expanded:  {}", result.nodes_expanded);
    println!("dedup:     {}", result.dedup_hits);
    println!("elapsed:   {:.2?}", start.elapsed());
    match result.outcome {
        SearchOutcome::Found { transcript } => {
            let last = verify_transcript(&transcript).expect("transcript replays");
            println!("reached:   {}", normalize(&last));
            println!("moves:     {}", transcript.moves.len());
            print!("{transcript}");
        }
        other => println!("no transcript: {other:?}"),
    }
}
