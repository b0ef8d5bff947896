use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Presentation;
use crate::words::{GeneratorId, Letter, Sign, Word, WordError};

/// One transformation of a presentation. All indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// `r_i <- r_i r_j`, `i != j`.
    Compose { i: usize, j: usize },
    /// `r_i <- r_i^-1`.
    Invert { i: usize },
    /// Deletes the adjacent inverse pair at `pos, pos + 1` of relator `i`.
    Cancel { i: usize, pos: usize },
    /// Inserts `g^s g^-s` before position `pos` of relator `i`.
    Insert {
        i: usize,
        pos: usize,
        gen: GeneratorId,
        sign: Sign,
    },
    /// Adds a generator together with itself as a relator.
    Stabilize,
    /// Removes generator `gen` and relator `relator`, which must reduce to `gen^{+-1}`.
    Destabilize { gen: GeneratorId, relator: usize },
    /// Substitutes `i j^s` for generator `i` in every relator.
    Replace {
        i: GeneratorId,
        j: GeneratorId,
        sign: Sign,
    },
    /// Cyclic left rotation of relator `r` by `k`. Derived, not one of the five primitives.
    Rotate { r: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    Compose,
    Invert,
    Cancel,
    Insert,
    Stabilize,
    Destabilize,
    Replace,
    Rotate,
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::Compose { .. } => MoveKind::Compose,
            Move::Invert { .. } => MoveKind::Invert,
            Move::Cancel { .. } => MoveKind::Cancel,
            Move::Insert { .. } => MoveKind::Insert,
            Move::Stabilize => MoveKind::Stabilize,
            Move::Destabilize { .. } => MoveKind::Destabilize,
            Move::Replace { .. } => MoveKind::Replace,
            Move::Rotate { .. } => MoveKind::Rotate,
        }
    }

    /// Whether the move belongs to the stable (replacement-free) move set.
    pub fn is_sac(&self) -> bool {
        self.kind() != MoveKind::Replace
    }
}

fn sign_text(s: Sign) -> &'static str {
    match s {
        Sign::Pos => "1",
        Sign::Neg => "-1",
    }
}

/// Transcript syntax, one-based.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Compose { i, j } => write!(f, "compose {} {}", i + 1, j + 1),
            Move::Invert { i } => write!(f, "invert {}", i + 1),
            Move::Cancel { i, pos } => write!(f, "cancel {} {}", i + 1, pos + 1),
            Move::Insert { i, pos, gen, sign } => {
                write!(
                    f,
                    "insert {} {} {} {}",
                    i + 1,
                    pos + 1,
                    gen.0 + 1,
                    sign_text(sign)
                )
            }
            Move::Stabilize => write!(f, "stab"),
            Move::Destabilize { gen, relator } => write!(f, "destab {} {}", gen.0 + 1, relator + 1),
            Move::Replace { i, j, sign } => {
                write!(f, "replace {} {} {}", i.0 + 1, j.0 + 1, sign_text(sign))
            }
            Move::Rotate { r, k } => write!(f, "rotate {} {}", r + 1, k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("relator index {index} out of range ({len} relators)")]
    RelatorOutOfRange { index: usize, len: usize },
    #[error("generator {gen} out of range ({n} generators)")]
    GeneratorIndexOutOfRange { gen: GeneratorId, n: usize },
    #[error("position {pos} out of range in relator {relator} of length {len}")]
    PositionOutOfRange {
        relator: usize,
        pos: usize,
        len: usize,
    },
    #[error("relator {relator} uses generator {gen} but there are only {n}")]
    GeneratorOutOfRange {
        relator: usize,
        gen: GeneratorId,
        n: usize,
    },
    #[error("move needs two distinct indices, got {0} twice")]
    SameGenerator(usize),
    #[error("letters at positions {pos} and {} of relator {relator} are not an inverse pair", pos + 1)]
    NotACancellablePair { relator: usize, pos: usize },
    #[error("cannot destabilize: {0}")]
    DestabilizeBlocked(String),
    #[error("no move list restores the presentation exactly")]
    NotInvertible,
    #[error("rotate moves are rejected in strict mode")]
    RotateRejected,
}

impl From<WordError> for MoveError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::SameGenerator(g) => MoveError::SameGenerator(g.0),
            WordError::GeneratorOutOfRange { gen, n } => {
                MoveError::GeneratorIndexOutOfRange { gen, n }
            }
        }
    }
}

fn check_relator(p: &Presentation, i: usize) -> Result<(), MoveError> {
    if i < p.relators.len() {
        Ok(())
    } else {
        Err(MoveError::RelatorOutOfRange {
            index: i,
            len: p.relators.len(),
        })
    }
}

fn check_gen(p: &Presentation, g: GeneratorId) -> Result<(), MoveError> {
    if g.0 < p.n_generators() {
        Ok(())
    } else {
        Err(MoveError::GeneratorIndexOutOfRange {
            gen: g,
            n: p.n_generators(),
        })
    }
}

/// Reason `Destabilize { gen, relator }` is not applicable, if any.
fn destabilize_obstruction(p: &Presentation, gen: GeneratorId, relator: usize) -> Option<String> {
    let reduced = p.relators[relator].reduce();
    if reduced.len() != 1 || reduced.letters()[0].gen != gen {
        return Some(format!(
            "relator {} does not reduce to generator {} or its inverse",
            relator + 1,
            gen
        ));
    }
    p.relators
        .iter()
        .enumerate()
        .find(|&(r, w)| r != relator && w.reduce().contains_generator(gen))
        .map(|(r, _)| format!("generator {} occurs in relator {}", gen, r + 1))
}

/// Applies one move, validating its parameters against `p`.
pub fn apply_move(p: &Presentation, m: &Move) -> Result<Presentation, MoveError> {
    let mut out = p.clone();
    match *m {
        Move::Compose { i, j } => {
            check_relator(p, i)?;
            check_relator(p, j)?;
            if i == j {
                return Err(MoveError::SameGenerator(i));
            }
            out.relators[i] = p.relators[i].concat(&p.relators[j]);
        }
        Move::Invert { i } => {
            check_relator(p, i)?;
            out.relators[i] = p.relators[i].invert();
        }
        Move::Cancel { i, pos } => {
            check_relator(p, i)?;
            let letters = p.relators[i].letters();
            if pos + 1 >= letters.len() {
                return Err(MoveError::PositionOutOfRange {
                    relator: i,
                    pos,
                    len: letters.len(),
                });
            }
            if !letters[pos].cancels(letters[pos + 1]) {
                return Err(MoveError::NotACancellablePair { relator: i, pos });
            }
            out.relators[i].letters_mut().drain(pos..pos + 2);
        }
        Move::Insert { i, pos, gen, sign } => {
            check_relator(p, i)?;
            check_gen(p, gen)?;
            let len = p.relators[i].len();
            if pos > len {
                return Err(MoveError::PositionOutOfRange {
                    relator: i,
                    pos,
                    len,
                });
            }
            let l = Letter { gen, sign };
            out.relators[i]
                .letters_mut()
                .splice(pos..pos, [l, l.inverse()]);
        }
        Move::Stabilize => {
            let g = p.n_generators();
            let name = p.fresh_name();
            out.names.push(name);
            out.relators.push(Word::single(Letter::pos(g)));
        }
        Move::Destabilize { gen, relator } => {
            check_gen(p, gen)?;
            check_relator(p, relator)?;
            if let Some(reason) = destabilize_obstruction(p, gen, relator) {
                return Err(MoveError::DestabilizeBlocked(reason));
            }
            out.names.remove(gen.0);
            out.relators.remove(relator);
            for w in out.relators.iter_mut() {
                *w = w.erase_generator(gen);
            }
        }
        Move::Replace { i, j, sign } => {
            check_gen(p, i)?;
            check_gen(p, j)?;
            if i == j {
                return Err(MoveError::SameGenerator(i.0));
            }
            for w in out.relators.iter_mut() {
                *w = w.substitute(i, j, sign)?;
            }
        }
        Move::Rotate { r, k } => {
            check_relator(p, r)?;
            out.relators[r] = p.relators[r].rotate(k as i64);
        }
    }
    Ok(out)
}

/// Returns moves that undo `m` exactly, in the raw layer, when applied after `m` to `p`.
///
/// Composition and replacement leave cancelling pairs behind when undone by the
/// opposite move, so their inverses end with explicit `Cancel` moves.
pub fn inverse_move(m: &Move, p: &Presentation) -> Result<Vec<Move>, MoveError> {
    apply_move(p, m)?;
    let moves = match *m {
        Move::Invert { i } => vec![Move::Invert { i }],
        Move::Cancel { i, pos } => {
            let l = p.relators[i].letters()[pos];
            vec![Move::Insert {
                i,
                pos,
                gen: l.gen,
                sign: l.sign,
            }]
        }
        Move::Insert { i, pos, .. } => vec![Move::Cancel { i, pos }],
        Move::Stabilize => vec![Move::Destabilize {
            gen: GeneratorId(p.n_generators()),
            relator: p.relators.len(),
        }],
        Move::Destabilize { gen, relator } => {
            let letters = p.relators[relator].letters();
            let exact = gen.0 + 1 == p.n_generators()
                && relator + 1 == p.relators.len()
                && letters.len() == 1
                && p.relators
                    .iter()
                    .enumerate()
                    .all(|(r, w)| r == relator || !w.contains_generator(gen));
            if !exact {
                return Err(MoveError::NotInvertible);
            }
            match letters[0].sign {
                Sign::Pos => vec![Move::Stabilize],
                Sign::Neg => vec![Move::Stabilize, Move::Invert { i: relator }],
            }
        }
        Move::Rotate { r, k } => {
            let len = p.relators[r].len();
            let back = if len == 0 { 0 } else { (len - k % len) % len };
            vec![Move::Rotate { r, k: back }]
        }
        Move::Compose { i, j } => {
            // r_i r_j  ->  r_i r_j r_j^-1  ->  r_i
            let li = p.relators[i].len();
            let lj = p.relators[j].len();
            let mut moves = vec![
                Move::Invert { i: j },
                Move::Compose { i, j },
                Move::Invert { i: j },
            ];
            for t in (0..lj).rev() {
                moves.push(Move::Cancel { i, pos: li + t });
            }
            moves
        }
        Move::Replace { i, j, sign } => {
            let mut moves = vec![Move::Replace {
                i,
                j,
                sign: sign.flip(),
            }];
            for (r, w) in p.relators.iter().enumerate() {
                // i -> i j^-s j^s and i^-1 -> j^-s j^s i^-1 after both substitutions;
                // cancel from the right so earlier positions stay valid
                let mut positions = Vec::new();
                let mut offset = 0;
                for l in w.letters() {
                    if l.gen != i {
                        offset += 1;
                        continue;
                    }
                    positions.push(if l.sign == Sign::Pos {
                        offset + 1
                    } else {
                        offset
                    });
                    offset += 3;
                }
                for &pos in positions.iter().rev() {
                    moves.push(Move::Cancel { i: r, pos });
                }
            }
            moves
        }
    };
    Ok(moves)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveSet {
    /// Stable moves: no replacement.
    Sac,
    /// Stable moves plus replacement.
    Eac,
}

/// Which moves [`enumerate_moves`] proposes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovePolicy {
    pub move_set: MoveSet,
    pub max_generators: usize,
    pub max_total_length: usize,
    /// Restricts `Insert` to the two ends of each relator.
    pub insert_at_ends_only: bool,
    pub allow_insert: bool,
    pub allow_rotate: bool,
}

impl MovePolicy {
    pub fn new(move_set: MoveSet, max_generators: usize, max_total_length: usize) -> MovePolicy {
        MovePolicy {
            move_set,
            max_generators,
            max_total_length,
            insert_at_ends_only: true,
            allow_insert: true,
            allow_rotate: true,
        }
    }
}

/// All moves applicable to `p` under `policy`, in a fixed order.
pub fn enumerate_moves(p: &Presentation, policy: &MovePolicy) -> Vec<Move> {
    let m = p.relators.len();
    let n = p.n_generators();
    let total = p.total_length();
    let cap = policy.max_total_length;
    let mut moves = Vec::new();

    for i in 0..m {
        for j in 0..m {
            if i != j && total + p.relators[j].len() <= cap {
                moves.push(Move::Compose { i, j });
            }
        }
    }
    for i in 0..m {
        moves.push(Move::Invert { i });
    }
    for (i, w) in p.relators.iter().enumerate() {
        let letters = w.letters();
        for pos in 0..letters.len().saturating_sub(1) {
            if letters[pos].cancels(letters[pos + 1]) {
                moves.push(Move::Cancel { i, pos });
            }
        }
    }
    if policy.allow_insert && total + 2 <= cap {
        for (i, w) in p.relators.iter().enumerate() {
            let positions: Vec<usize> = if policy.insert_at_ends_only {
                if w.is_empty() {
                    vec![0]
                } else {
                    vec![0, w.len()]
                }
            } else {
                (0..=w.len()).collect()
            };
            for pos in positions {
                for g in 0..n {
                    for sign in [Sign::Pos, Sign::Neg] {
                        moves.push(Move::Insert {
                            i,
                            pos,
                            gen: GeneratorId(g),
                            sign,
                        });
                    }
                }
            }
        }
    }
    if n < policy.max_generators && total < cap {
        moves.push(Move::Stabilize);
    }
    for g in 0..n {
        for r in 0..m {
            if destabilize_obstruction(p, GeneratorId(g), r).is_none() {
                moves.push(Move::Destabilize {
                    gen: GeneratorId(g),
                    relator: r,
                });
            }
        }
    }
    if policy.move_set == MoveSet::Eac {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let occurrences: usize = p
                    .relators
                    .iter()
                    .map(|w| w.letters().iter().filter(|l| l.gen.0 == i).count())
                    .sum();
                if total + occurrences > cap {
                    continue;
                }
                for sign in [Sign::Pos, Sign::Neg] {
                    moves.push(Move::Replace {
                        i: GeneratorId(i),
                        j: GeneratorId(j),
                        sign,
                    });
                }
            }
        }
    }
    if policy.allow_rotate {
        for (r, w) in p.relators.iter().enumerate() {
            for k in 1..w.len() {
                moves.push(Move::Rotate { r, k });
            }
        }
    }
    moves
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn gid(i: usize) -> GeneratorId {
        GeneratorId(i)
    }

    #[test]
    fn replace_reproduces_first_chain_step() {
        let p = families::paper_z();
        let q = apply_move(
            &p,
            &Move::Replace {
                i: gid(0),
                j: gid(1),
                sign: Sign::Neg,
            },
        )
        .unwrap();
        let expected = Presentation::parse("< a, b, c | a b^-1 b, b c, a b^-1 c^-1 >").unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn stabilize_appends_generator_and_relator() {
        let t1 = families::trivial(1).unwrap();
        let q = apply_move(&t1, &Move::Stabilize).unwrap();
        assert_eq!(q.to_string(), "< a, a2 | a, a2 >");
        assert!(q.is_balanced());
    }

    #[test]
    fn compose_same_index_rejected() {
        let p = families::paper_z();
        assert_eq!(
            apply_move(&p, &Move::Compose { i: 0, j: 0 }),
            Err(MoveError::SameGenerator(0))
        );
    }

    #[test]
    fn cancel_requires_inverse_pair() {
        let p = Presentation::parse("< a, b | a b, b >").unwrap();
        assert_eq!(
            apply_move(&p, &Move::Cancel { i: 0, pos: 0 }),
            Err(MoveError::NotACancellablePair { relator: 0, pos: 0 })
        );
        assert!(matches!(
            apply_move(&p, &Move::Cancel { i: 1, pos: 0 }),
            Err(MoveError::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn destabilize_preconditions() {
        let p = Presentation::parse("< a, b | a, a b >").unwrap();
        assert!(matches!(
            apply_move(
                &p,
                &Move::Destabilize {
                    gen: gid(0),
                    relator: 0
                }
            ),
            Err(MoveError::DestabilizeBlocked(_))
        ));
        assert!(matches!(
            apply_move(
                &p,
                &Move::Destabilize {
                    gen: gid(1),
                    relator: 1
                }
            ),
            Err(MoveError::DestabilizeBlocked(_))
        ));
        let q = Presentation::parse("< a, b | a b b^-1, b a a^-1 >").unwrap();
        let r = apply_move(
            &q,
            &Move::Destabilize {
                gen: gid(0),
                relator: 0,
            },
        )
        .unwrap();
        assert_eq!(r.to_string(), "< b | b >");
    }

    #[test]
    fn inverse_lists_restore_exactly() {
        let p = Presentation::parse("< a, b, c | a b^-1 c, b b c^-1, c a^-1 b >").unwrap();
        let moves = [
            Move::Compose { i: 0, j: 2 },
            Move::Invert { i: 1 },
            Move::Insert {
                i: 2,
                pos: 1,
                gen: gid(1),
                sign: Sign::Neg,
            },
            Move::Stabilize,
            Move::Replace {
                i: gid(0),
                j: gid(2),
                sign: Sign::Pos,
            },
            Move::Replace {
                i: gid(1),
                j: gid(0),
                sign: Sign::Neg,
            },
            Move::Rotate { r: 2, k: 2 },
        ];
        for m in moves {
            let q = apply_move(&p, &m).unwrap();
            let back = inverse_move(&m, &p).unwrap();
            let restored = back
                .iter()
                .try_fold(q, |acc, mv| apply_move(&acc, mv))
                .unwrap();
            assert_eq!(restored, p, "move {m}");
        }
    }

    #[test]
    fn invert_and_replace_inverses() {
        let p = families::paper_z();
        assert_eq!(
            inverse_move(&Move::Invert { i: 1 }, &p).unwrap(),
            vec![Move::Invert { i: 1 }]
        );
        let r = Move::Replace {
            i: gid(0),
            j: gid(1),
            sign: Sign::Neg,
        };
        assert_eq!(
            inverse_move(&r, &p).unwrap()[0],
            Move::Replace {
                i: gid(0),
                j: gid(1),
                sign: Sign::Pos
            }
        );
    }

    #[test]
    fn destabilize_inverse_only_when_exact() {
        let p = Presentation::parse("< a, b | a b, b >").unwrap();
        let m = Move::Destabilize {
            gen: gid(1),
            relator: 1,
        };
        assert!(matches!(
            apply_move(&p, &m),
            Err(MoveError::DestabilizeBlocked(_))
        ));
        let p = Presentation::parse("< a, b | a, b^-1 >").unwrap();
        let q = apply_move(&p, &m).unwrap();
        let back = inverse_move(&m, &p).unwrap();
        assert_eq!(back, vec![Move::Stabilize, Move::Invert { i: 1 }]);
        let restored = back
            .iter()
            .try_fold(q, |acc, mv| apply_move(&acc, mv))
            .unwrap();
        assert_eq!(restored, p);
        let m0 = Move::Destabilize {
            gen: gid(0),
            relator: 0,
        };
        assert_eq!(inverse_move(&m0, &p), Err(MoveError::NotInvertible));
    }

    #[test]
    fn enumerate_respects_policy() {
        let t1 = families::trivial(1).unwrap();
        let moves = enumerate_moves(&t1, &MovePolicy::new(MoveSet::Sac, 2, 10));
        assert!(moves.contains(&Move::Stabilize));
        assert!(moves.contains(&Move::Invert { i: 0 }));
        assert!(!moves.iter().any(|m| m.kind() == MoveKind::Replace));

        let p = families::paper_z();
        let moves = enumerate_moves(&p, &MovePolicy::new(MoveSet::Eac, 3, 20));
        assert!(moves.contains(&Move::Replace {
            i: gid(0),
            j: gid(1),
            sign: Sign::Neg
        }));

        let moves = enumerate_moves(&p, &MovePolicy::new(MoveSet::Eac, 3, 6));
        assert!(!moves.iter().any(|m| m.kind() == MoveKind::Compose));
        for m in &moves {
            assert!(apply_move(&p, m).unwrap().total_length() <= 6, "{m}");
        }
    }
}
