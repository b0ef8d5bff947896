//! Drives the interactive move session with a scripted input, including
//! rejected moves, and replays the recorded transcript.
//!
//! cargo run --example repl_session

use std::io::Cursor;

use eac::cli::repl;
use eac::families;
use eac::presentation::{normalize, verify_transcript};

fn main() {
    let script = "\
replace 1 2 -1
cancel 1 2
compose 1 1
invert 3
compose 3 1
cancel 3 3
invert 3
destab 1 1
quit
";
    let mut out = Vec::new();
    let t =
        repl(families::paper_z(), &mut Cursor::new(script), &mut out).expect("in-memory session");
    print!("{}", String::from_utf8_lossy(&out));
    println!("\nrecorded transcript:\n{t}");
    let last = verify_transcript(&t).expect("recorded sessions replay");
    println!("replayed to {last}, canonical {}", normalize(&last));
}
