//! Free-group words over numbered generators.
//!
//! Words come in two layers. The raw layer ([`Word::concat`], [`Word::substitute`])
//! never cancels anything, so a move sequence can spell out every cancellation
//! explicitly. [`Word::reduce`] and [`Word::cyclic_reduce`] produce the reduced
//! layer used for canonical forms and search.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("substitution needs two distinct generators, got {0} twice")]
    SameGenerator(GeneratorId),
    #[error("generator {gen} out of range for {n} generators")]
    GeneratorOutOfRange { gen: GeneratorId, n: usize },
}

/// Zero-based generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorId(pub usize);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    /// Product of two signs.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// A generator raised to the power +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: GeneratorId,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: usize, sign: Sign) -> Letter {
        Letter {
            gen: GeneratorId(gen),
            sign,
        }
    }

    pub fn pos(gen: usize) -> Letter {
        Letter::new(gen, Sign::Pos)
    }

    pub fn neg(gen: usize) -> Letter {
        Letter::new(gen, Sign::Neg)
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }

    /// Total order used by canonical forms: `a < a^-1 < b < b^-1 < ...`.
    fn key(self) -> usize {
        2 * self.gen.0 + usize::from(self.sign == Sign::Neg)
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// A finite sequence of letters. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn identity() -> Word {
        Word::default()
    }

    pub fn single(letter: Letter) -> Word {
        Word {
            letters: vec![letter],
        }
    }

    /// Builds a word from `(generator, exponent sign)` pairs, where the sign is +1 or -1.
    ///
    /// Panics on any other exponent; meant for literals in tests and examples.
    pub fn from_pairs(pairs: &[(usize, i64)]) -> Word {
        Word::new(
            pairs
                .iter()
                .map(|&(g, e)| {
                    Letter::new(g, Sign::from_i64(e).expect("exponent must be +1 or -1"))
                })
                .collect(),
        )
    }

    /// `gen^power`, expanded letter by letter.
    pub fn power(gen: usize, power: i64) -> Word {
        let sign = if power >= 0 { Sign::Pos } else { Sign::Neg };
        Word::new(vec![Letter::new(gen, sign); power.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<GeneratorId> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn contains_generator(&self, gen: GeneratorId) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Free reduction with a stack: each letter either cancels the top or is pushed.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(&f), Some(&l)) if self.letters.len() > 1 => !f.cancels(l),
                _ => true,
            }
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Raw concatenation; nothing cancels.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Cyclic left rotation by `k` (taken modulo the length; negative `k` rotates right).
    pub fn rotate(&self, k: i64) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return Word::identity();
        }
        let k = k.rem_euclid(n as i64) as usize;
        let mut letters = self.letters.clone();
        letters.rotate_left(k);
        Word { letters }
    }

    /// Replaces generator `i` by `i j^s` everywhere: `i -> i j^s`, `i^-1 -> j^-s i^-1`.
    pub fn substitute(&self, i: GeneratorId, j: GeneratorId, s: Sign) -> Result<Word, WordError> {
        if i == j {
            return Err(WordError::SameGenerator(i));
        }
        let mut letters = Vec::with_capacity(self.len() * 2);
        for &l in &self.letters {
            if l.gen != i {
                letters.push(l);
                continue;
            }
            match l.sign {
                Sign::Pos => {
                    letters.push(l);
                    letters.push(Letter { gen: j, sign: s });
                }
                Sign::Neg => {
                    letters.push(Letter {
                        gen: j,
                        sign: s.flip(),
                    });
                    letters.push(l);
                }
            }
        }
        Ok(Word { letters })
    }

    /// Free reduction followed by stripping mutually inverse first/last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.reduce();
        let letters = reduced.letters;
        let (mut lo, mut hi) = (0usize, letters.len());
        while hi - lo >= 2 && letters[lo].cancels(letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word {
            letters: letters[lo..hi].to_vec(),
        }
    }

    /// Exponent sum of each of the first `n` generators.
    pub fn exponent_vector(&self, n: usize) -> Result<Vec<i64>, WordError> {
        let mut v = vec![0i64; n];
        for l in &self.letters {
            let slot = v
                .get_mut(l.gen.0)
                .ok_or(WordError::GeneratorOutOfRange { gen: l.gen, n })?;
            *slot += l.sign.as_i64();
        }
        Ok(v)
    }

    /// Index of the first adjacent inverse pair, if any.
    pub fn first_cancellable_pair(&self) -> Option<usize> {
        self.letters.windows(2).position(|w| w[0].cancels(w[1]))
    }

    /// Lexicographically least word among all rotations of `self` and of its inverse.
    pub fn min_cyclic_representative(&self) -> Word {
        let n = self.len();
        if n == 0 {
            return Word::identity();
        }
        let inv = self.invert();
        let mut best: Option<Vec<Letter>> = None;
        for base in [&self.letters, &inv.letters] {
            for k in 0..n {
                let better = match &best {
                    None => true,
                    Some(b) => rotated_cmp(base, k, b) == Ordering::Less,
                };
                if better {
                    let mut rotated = base.clone();
                    rotated.rotate_left(k);
                    best = Some(rotated);
                }
            }
        }
        Word {
            letters: best.unwrap_or_default(),
        }
    }

    /// Applies a generator relabeling `map[old] = new`.
    pub fn relabel(&self, map: &[usize]) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(map[l.gen.0], l.sign))
                .collect(),
        }
    }

    /// Deletes every letter on generator `g` and shifts higher generators down by one.
    pub fn erase_generator(&self, g: GeneratorId) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .filter(|l| l.gen != g)
                .map(|l| {
                    if l.gen > g {
                        Letter::new(l.gen.0 - 1, l.sign)
                    } else {
                        *l
                    }
                })
                .collect(),
        }
    }

    pub(crate) fn letters_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.letters
    }
}

fn rotated_cmp(base: &[Letter], k: usize, other: &[Letter]) -> Ordering {
    let n = base.len();
    (0..n).map(|t| base[(k + t) % n]).cmp(other.iter().copied())
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word { letters }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

/// Default generator names: `a, b, ..., z`, then `x27, x28, ...`.
pub fn default_generator_name(index: usize) -> String {
    if index < 26 {
        ((b'a' + index as u8) as char).to_string()
    } else {
        format!("x{}", index + 1)
    }
}

/// Formats a word with the given generator names; the identity prints as `1`.
pub fn format_word(word: &Word, names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.letters()
        .iter()
        .map(|l| {
            let name = names
                .get(l.gen.0)
                .cloned()
                .unwrap_or_else(|| default_generator_name(l.gen.0));
            match l.sign {
                Sign::Pos => name,
                Sign::Neg => format!("{name}^-1"),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self, &[]))
    }
}
