//! Replays the shipped chain from `(a, b, c | ab, bc, ac^-1)` to `(c | 1)`,
//! printing each state with its canonical form.
//!
//! cargo run --example paper_chain

use eac::presentation::{normalize, ReplayMode, Transcript};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper_chain.transcript");
    let text =
        std::fs::read_to_string(path).expect("paper_chain.transcript ships with the repository");
    let t = Transcript::parse(&text).expect("transcript parses");
    let states = t.replay(ReplayMode::Lenient).expect("transcript replays");

    println!("{:>3}  {:<22} {:<44} canonical", "#", "move", "state");
    println!(
        "{:>3}  {:<22} {:<44} {}",
        0,
        "",
        states[0].to_string(),
        normalize(&states[0])
    );
    for (k, (mv, s)) in t.moves.iter().zip(&states[1..]).enumerate() {
        let flag = if mv.is_sac() { "" } else { " *" };
        println!(
            "{:>3}  {:<22} {:<44} {}",
            k + 1,
            format!("{mv}{flag}"),
            s.to_string(),
            normalize(s)
        );
    }
    println!("\n* not a stable move");
}
