//! Finite presentations, the extended Andrews-Curtis move algebra, canonical
//! forms and transcript replay.

pub(crate) mod canonical;
mod moves;
mod transcript;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::words::{default_generator_name, format_word, GeneratorId, Word};

pub use canonical::{normalize, CanonicalPresentation};
pub use moves::{
    apply_move, enumerate_moves, inverse_move, Move, MoveError, MoveKind, MovePolicy, MoveSet,
};
pub use transcript::{
    parse_move, verify_transcript, verify_transcript_with, ReplayMode, Transcript, TranscriptError,
};

/// A finite presentation: `n` generators and an ordered list of relators.
///
/// Generator names are labels carried for printing. They do not take part in
/// equality, since renaming generators never changes the presentation class.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.names.len() == other.names.len() && self.relators == other.relators
    }
}

impl Eq for Presentation {}

impl Presentation {
    /// Presentation with default names `a, b, c, ...`.
    ///
    /// Panics if a relator uses a generator `>= n_generators`; use
    /// [`Presentation::with_names`] for checked construction.
    pub fn new(n_generators: usize, relators: Vec<Word>) -> Presentation {
        let names = (0..n_generators).map(default_generator_name).collect();
        Presentation::with_names(names, relators).expect("relator uses a generator out of range")
    }

    pub fn with_names(names: Vec<String>, relators: Vec<Word>) -> Result<Presentation, MoveError> {
        let n = names.len();
        for (r, w) in relators.iter().enumerate() {
            if let Some(g) = w.max_generator() {
                if g.0 >= n {
                    return Err(MoveError::GeneratorOutOfRange {
                        relator: r,
                        gen: g,
                        n,
                    });
                }
            }
        }
        Ok(Presentation { names, relators })
    }

    pub fn n_generators(&self) -> usize {
        self.names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator(&self, i: usize) -> Option<&Word> {
        self.relators.get(i)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_balanced(&self) -> bool {
        self.names.len() == self.relators.len()
    }

    /// Sum of raw relator lengths.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Sum of freely reduced relator lengths.
    pub fn total_reduced_length(&self) -> usize {
        self.relators.iter().map(|w| w.reduce().len()).sum()
    }

    /// Renames generators by `perm[old] = new`, reordering names accordingly.
    /// Relator order is unchanged.
    pub fn permute_generators(&self, perm: &[usize]) -> Presentation {
        assert_eq!(perm.len(), self.names.len(), "permutation size mismatch");
        let mut names = vec![String::new(); perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            names[new] = self.names[old].clone();
        }
        Presentation {
            names,
            relators: self.relators.iter().map(|w| w.relabel(perm)).collect(),
        }
    }

    /// Picks a name for a freshly stabilized generator: `a{n+1}` style, avoiding clashes.
    pub(crate) fn fresh_name(&self) -> String {
        let stem = self
            .names
            .first()
            .map(|s| s.trim_end_matches(|c: char| c.is_ascii_digit()).to_string())
            .filter(|s| !s.is_empty())
            .unwrap_or_else(|| "a".to_string());
        let mut k = self.names.len() + 1;
        loop {
            let candidate = format!("{stem}{k}");
            if !self.names.contains(&candidate) {
                return candidate;
            }
            k += 1;
        }
    }

    /// Parses the `< g1, g2 | w1, w2 >` text form.
    pub fn parse(text: &str) -> Result<Presentation, crate::text::ParseError> {
        crate::text::parse_presentation(text)
    }

    pub fn generator_name(&self, g: GeneratorId) -> String {
        self.names
            .get(g.0)
            .cloned()
            .unwrap_or_else(|| default_generator_name(g.0))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| format_word(w, &self.names))
            .collect();
        write!(f, "< {} | {} >", self.names.join(", "), rels.join(", "))
    }
}
