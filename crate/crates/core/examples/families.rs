//! Prints members of the named families with their sizes and invariants.
//!
//! cargo run --example families [-- <family> ...]   e.g. trivial:3 paperZ ak:2

use eac::families::FamilySpec;
use eac::invariants::{abs_det, exponent_matrix};

fn main() {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = [
            "trivial:1",
            "trivial:3",
            "paperZ",
            "ak:2",
            "ak:3",
            "ak:5",
            "ak:1",
        ]
        .map(String::from)
        .to_vec();
    }
    for name in names {
        match FamilySpec::parse(&name).and_then(|s| s.build()) {
            Ok(p) => println!(
                "{name:<10} length {:>3}  |det| {}  {p}",
                p.total_length(),
                abs_det(&exponent_matrix(&p)).unwrap()
            ),
            Err(e) => println!("{name:<10} error: {e}"),
        }
    }
}
