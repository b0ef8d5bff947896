//! Screens presentations with the cheap invariants: |det| of the exponent
//! matrix (preserved by every extended move) and the padded mod-2 row space
//! (preserved by stable moves only).
//!
//! cargo run --example invariants_screen

use eac::families;
use eac::invariants::{abs_det, exponent_matrix, presentation_mod2, sac_compatible};
use eac::presentation::Presentation;

fn main() {
    let samples = [
        ("paperZ", families::paper_z()),
        ("trivial:3", families::trivial(3).unwrap()),
        ("ak:2", families::ak(2).unwrap()),
        ("ak:3", families::ak(3).unwrap()),
        ("lens(5)", Presentation::parse("< a | a^5 >").unwrap()),
        (
            "Z2 x Z2",
            Presentation::parse("< a, b | a^2 b^2, a b a^-1 b^-1 >").unwrap(),
        ),
    ];
    println!("{:<10} {:>7} {:>5}  mod-2 basis", "name", "|det|", "rank");
    for (name, p) in &samples {
        let det = abs_det(&exponent_matrix(p)).map_or("n/a".into(), |d| d.to_string());
        let space = presentation_mod2(p);
        println!("{name:<10} {det:>7} {:>5}  {space}", space.rank());
    }

    println!();
    let p = families::paper_z();
    for k in 1..=4 {
        let t = families::trivial(k).unwrap();
        println!(
            "paperZ vs trivial:{k}: |det| {} / {}, stable-move compatible: {}",
            abs_det(&exponent_matrix(&p)).unwrap(),
            abs_det(&exponent_matrix(&t)).unwrap(),
            sac_compatible(&p, &t)
        );
    }
}
