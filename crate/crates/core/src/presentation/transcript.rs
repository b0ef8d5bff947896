use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{apply_move, Move, MoveError, Presentation};
use crate::text::ParseError;
use crate::words::{GeneratorId, Sign};

/// An initial presentation plus a list of moves: a replayable equivalence certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub initial: Presentation,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReplayMode {
    /// Accepts the derived `Rotate` move.
    #[default]
    Lenient,
    /// Only the five primitive moves and their inverses.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranscriptError {
    #[error("move {} ({mv}) is invalid: {cause}", index + 1)]
    InvalidMoveAt {
        index: usize,
        mv: Move,
        cause: MoveError,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Transcript {
    pub fn new(initial: Presentation) -> Transcript {
        Transcript {
            initial,
            moves: Vec::new(),
        }
    }

    /// Every intermediate presentation, starting with `initial`.
    pub fn replay(&self, mode: ReplayMode) -> Result<Vec<Presentation>, TranscriptError> {
        let mut states = Vec::with_capacity(self.moves.len() + 1);
        states.push(self.initial.clone());
        for (index, mv) in self.moves.iter().enumerate() {
            let current = states.last().expect("nonempty");
            let next = if mode == ReplayMode::Strict && matches!(mv, Move::Rotate { .. }) {
                Err(MoveError::RotateRejected)
            } else {
                apply_move(current, mv)
            };
            match next {
                Ok(p) => states.push(p),
                Err(cause) => {
                    return Err(TranscriptError::InvalidMoveAt {
                        index,
                        mv: *mv,
                        cause,
                    })
                }
            }
        }
        Ok(states)
    }

    /// Parses the transcript file format: first non-comment line is the
    /// presentation, then one move per line with one-based indices.
    pub fn parse(text: &str) -> Result<Transcript, ParseError> {
        let mut initial = None;
        let mut moves = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let indent = line.len() - line.trim_start().len();
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if initial.is_none() {
                initial =
                    Some(Presentation::parse(line).map_err(|e| e.at_line(lineno + 1, indent))?);
            } else {
                moves.push(parse_move(line).map_err(|e| e.at_line(lineno + 1, indent))?);
            }
        }
        let initial =
            initial.ok_or_else(|| ParseError::new(1, 1, "transcript has no presentation line"))?;
        Ok(Transcript { initial, moves })
    }
}

/// Replays `t` leniently and returns the final presentation.
pub fn verify_transcript(t: &Transcript) -> Result<Presentation, TranscriptError> {
    verify_transcript_with(t, ReplayMode::Lenient)
}

pub fn verify_transcript_with(
    t: &Transcript,
    mode: ReplayMode,
) -> Result<Presentation, TranscriptError> {
    let mut states = t.replay(mode)?;
    Ok(states.pop().expect("replay yields the initial state"))
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mapping: Vec<String> = self
            .initial
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| format!("{n}={}", i + 1))
            .collect();
        writeln!(f, "# generators: {}", mapping.join(" "))?;
        writeln!(f, "{}", self.initial)?;
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

fn parse_index(tok: Option<&str>, what: &str, column: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(1, column, format!("missing {what}")))?;
    match tok.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(ParseError::new(
            1,
            column,
            format!("{what} must be a positive integer, got '{tok}'"),
        )),
    }
}

fn parse_sign(tok: Option<&str>, column: usize) -> Result<Sign, ParseError> {
    match tok {
        Some("1") | Some("+1") | Some("+") => Ok(Sign::Pos),
        Some("-1") | Some("-") => Ok(Sign::Neg),
        Some(other) => Err(ParseError::new(
            1,
            column,
            format!("sign must be 1 or -1, got '{other}'"),
        )),
        None => Err(ParseError::new(1, column, "missing sign")),
    }
}

/// Parses one move line (`compose 1 2`, `rotate 2 1`, ...), one-based.
pub fn parse_move(line: &str) -> Result<Move, ParseError> {
    let mut toks: Vec<&str> = Vec::new();
    let mut starts: Vec<usize> = Vec::new();
    let mut in_tok = false;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            in_tok = false;
        } else if !in_tok {
            in_tok = true;
            starts.push(i);
        }
    }
    for &s in &starts {
        let end = line[s..]
            .find(char::is_whitespace)
            .map_or(line.len(), |e| s + e);
        toks.push(&line[s..end]);
    }
    // one-based column of token t; past the end points just after the line
    let col = |t: usize| -> usize { starts.get(t).map_or(line.len() + 2, |&s| s + 1) };
    let arg = |t: usize| toks.get(t).copied();
    let arity = |n: usize| -> Result<(), ParseError> {
        if toks.len() > n + 1 {
            Err(ParseError::new(1, col(n + 1), "too many arguments"))
        } else {
            Ok(())
        }
    };
    let mv = match toks.first().copied() {
        Some("compose") => {
            arity(2)?;
            Move::Compose {
                i: parse_index(arg(1), "relator index", col(1))?,
                j: parse_index(arg(2), "relator index", col(2))?,
            }
        }
        Some("invert") => {
            arity(1)?;
            Move::Invert {
                i: parse_index(arg(1), "relator index", col(1))?,
            }
        }
        Some("cancel") => {
            arity(2)?;
            Move::Cancel {
                i: parse_index(arg(1), "relator index", col(1))?,
                pos: parse_index(arg(2), "position", col(2))?,
            }
        }
        Some("insert") => {
            arity(4)?;
            Move::Insert {
                i: parse_index(arg(1), "relator index", col(1))?,
                pos: parse_index(arg(2), "position", col(2))?,
                gen: GeneratorId(parse_index(arg(3), "generator index", col(3))?),
                sign: parse_sign(arg(4), col(4))?,
            }
        }
        Some("stab") => {
            arity(0)?;
            Move::Stabilize
        }
        Some("destab") => {
            arity(2)?;
            Move::Destabilize {
                gen: GeneratorId(parse_index(arg(1), "generator index", col(1))?),
                relator: parse_index(arg(2), "relator index", col(2))?,
            }
        }
        Some("replace") => {
            arity(3)?;
            Move::Replace {
                i: GeneratorId(parse_index(arg(1), "generator index", col(1))?),
                j: GeneratorId(parse_index(arg(2), "generator index", col(2))?),
                sign: parse_sign(arg(3), col(3))?,
            }
        }
        Some("rotate") => {
            arity(2)?;
            let i = parse_index(arg(1), "relator index", col(1))?;
            let k = arg(2)
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| {
                    ParseError::new(1, col(2), "rotation must be a nonnegative integer")
                })?;
            Move::Rotate { r: i, k }
        }
        Some(other) => {
            return Err(ParseError::new(
                1,
                col(0),
                format!("unknown move '{other}'"),
            ))
        }
        None => return Err(ParseError::new(1, 1, "empty move line")),
    };
    Ok(mv)
}
