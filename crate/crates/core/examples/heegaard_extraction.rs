//! Builds a small diagram, reads both presentations off it, and shows how
//! diagram moves act on the extracted presentation.
//!
//! cargo run --example heegaard_extraction

use eac::heegaard::{
    add_cylinder_handle, beta_handle_slide, change_start_point, presentation_of_alpha,
    presentation_of_beta, reverse_orientation, stabilize_diagram, Curve, HeegaardDiagram,
};
use eac::presentation::normalize;
use eac::words::Word;

fn main() {
    let words = [
        Word::from_pairs(&[(0, 1), (1, 1)]),
        Word::from_pairs(&[(1, 1), (2, 1)]),
        Word::from_pairs(&[(0, 1), (2, -1)]),
    ];
    let d = HeegaardDiagram::from_words(3, 3, &words).expect("valid diagram");
    println!("diagram:\n{d}");
    println!("alpha side: {}", presentation_of_alpha(&d).unwrap());
    println!("beta side:  {}", presentation_of_beta(&d).unwrap());

    let show = |label: &str, e: &HeegaardDiagram| {
        let p = presentation_of_alpha(e).unwrap();
        println!("{label:<28} {p}   canonical {}", normalize(&p));
    };
    println!();
    show("start", &d);
    show(
        "change_start_point(b1, 1)",
        &change_start_point(&d, 0, 1).unwrap(),
    );
    show(
        "reverse_orientation(b2)",
        &reverse_orientation(&d, Curve::Beta(1)).unwrap(),
    );
    show(
        "beta_handle_slide(b3, b1)",
        &beta_handle_slide(&d, 2, 0, false).unwrap(),
    );
    show(
        "beta_handle_slide(b3, -b1)",
        &beta_handle_slide(&d, 2, 0, true).unwrap(),
    );
    show("stabilize_diagram", &stabilize_diagram(&d, 0).unwrap());
    show("add_cylinder_handle", &add_cylinder_handle(&d, 0).unwrap());

    let text = d.to_string();
    let back = HeegaardDiagram::parse(&text).unwrap();
    println!(
        "\nprint/parse round trip stable: {}",
        back.to_string() == text
    );
}
