use std::fmt;

use serde::{Deserialize, Serialize};

use super::Presentation;
use crate::words::{Letter, Sign, Word};

/// Deterministic normal representative of a presentation, used as a dedup key.
///
/// Two presentations with equal canonical forms differ only by free and cyclic
/// reduction, relator order, relator inversion and rotation, and the greedy
/// generator relabeling performed by [`normalize`]. The relabeling is greedy,
/// so relabel-equivalent presentations can still get distinct forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalPresentation {
    n_generators: usize,
    relators: Vec<Word>,
}

impl CanonicalPresentation {
    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// The canonical form as an ordinary presentation with default names.
    pub fn to_presentation(&self) -> Presentation {
        Presentation::new(self.n_generators, self.relators.clone())
    }
}

impl fmt::Display for CanonicalPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_presentation().fmt(f)
    }
}

/// Compact letter code `2 * generator + (1 if inverse)`; orders like [`crate::words::Letter`].
pub(crate) type Code = u16;

pub(crate) fn encode(w: &Word) -> Vec<Code> {
    w.letters()
        .iter()
        .map(|l| {
            let c = 2 * l.gen.0 + usize::from(l.sign == Sign::Neg);
            Code::try_from(c).expect("generator index too large for canonical forms")
        })
        .collect()
}

pub(crate) fn decode(codes: &[Code]) -> Word {
    Word::new(
        codes
            .iter()
            .map(|&c| {
                Letter::new(
                    usize::from(c >> 1),
                    if c & 1 == 0 { Sign::Pos } else { Sign::Neg },
                )
            })
            .collect(),
    )
}

/// Least rotation of a cyclically reduced word or of its inverse.
fn min_rotation(w: &[Code], out: &mut Vec<Code>) {
    out.clear();
    let n = w.len();
    if n == 0 {
        return;
    }
    let inv: Vec<Code> = w.iter().rev().map(|c| c ^ 1).collect();
    let at = |base: &[Code], k: usize, t: usize| base[(k + t) % n];
    let mut best = (false, 0usize);
    for (flip, base) in [(false, w), (true, inv.as_slice())] {
        for k in 0..n {
            let current = if best.0 { inv.as_slice() } else { w };
            let less = (0..n)
                .map(|t| at(base, k, t).cmp(&at(current, best.1, t)))
                .find(|o| o.is_ne())
                .is_some_and(|o| o.is_lt());
            if less {
                best = (flip, k);
            }
        }
    }
    let base = if best.0 { inv.as_slice() } else { w };
    out.extend((0..n).map(|t| at(base, best.1, t)));
}

fn minimize_and_sort(rels: &mut [Vec<Code>]) {
    let mut buf = Vec::new();
    for r in rels.iter_mut() {
        min_rotation(r, &mut buf);
        std::mem::swap(r, &mut buf);
    }
    rels.sort();
}

/// Relabels generators in order of first occurrence; unused ones go last, in index order.
fn relabel_by_first_occurrence(n: usize, rels: &mut [Vec<Code>]) {
    let mut map = vec![Code::MAX; n];
    let mut next: Code = 0;
    for &c in rels.iter().flatten() {
        let slot = &mut map[usize::from(c >> 1)];
        if *slot == Code::MAX {
            *slot = next;
            next += 1;
        }
    }
    for slot in map.iter_mut() {
        if *slot == Code::MAX {
            *slot = next;
            next += 1;
        }
    }
    for c in rels.iter_mut().flatten() {
        *c = (map[usize::from(*c >> 1)] << 1) | (*c & 1);
    }
}

/// Canonical relators of `n` generators and cyclically reduced relators.
///
/// Relabeling can change which rotation is least, so minimize/sort/relabel is
/// iterated until a state repeats; the least state on the reached cycle is
/// returned, which makes the result idempotent.
pub(crate) fn canonical_codes(n: usize, mut rels: Vec<Vec<Code>>) -> Vec<Vec<Code>> {
    minimize_and_sort(&mut rels);
    let step = |rels: &mut Vec<Vec<Code>>| {
        relabel_by_first_occurrence(n, rels);
        minimize_and_sort(rels);
    };
    step(&mut rels);
    let mut trail: Vec<Vec<Vec<Code>>> = Vec::new();
    while !trail.contains(&rels) {
        trail.push(rels.clone());
        step(&mut rels);
    }
    let start = trail.iter().position(|c| *c == rels).unwrap_or(0);
    trail.drain(start..).min().unwrap_or(rels)
}

/// Computes the canonical form of `p`: cyclic reduction, least rotation of each
/// relator or its inverse, sorting, and greedy relabeling by first occurrence.
pub fn normalize(p: &Presentation) -> CanonicalPresentation {
    let rels = p
        .relators()
        .iter()
        .map(|w| encode(&w.cyclic_reduce()))
        .collect();
    CanonicalPresentation {
        n_generators: p.n_generators(),
        relators: canonical_codes(p.n_generators(), rels)
            .iter()
            .map(|c| decode(c))
            .collect(),
    }
}
