//! Extended and stable Andrews-Curtis transformations on balanced group
//! presentations.
//!
//! The crate provides a free-group word engine ([`words`]), presentations with
//! the move algebra, canonical forms and transcript replay ([`presentation`]),
//! cheap invariants separating move classes ([`invariants`]), bounded coset
//! enumeration ([`coset`]), combinatorial Heegaard diagrams ([`heegaard`]),
//! bounded move search ([`search`]), named families ([`families`]) and the
//! command-line surface ([`cli`]).

pub mod cli;
pub mod coset;
pub mod families;
pub mod heegaard;
pub mod invariants;
pub mod presentation;
pub mod search;
pub mod text;
pub mod words;

pub use presentation::{
    apply_move, normalize, verify_transcript, CanonicalPresentation, Move, MoveError, Presentation,
    Transcript,
};
pub use words::{GeneratorId, Letter, Sign, Word};
