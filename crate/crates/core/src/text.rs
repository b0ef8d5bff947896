//! Text syntax for words and presentations.
//!
//! Words are whitespace-separated letters, each a generator name optionally
//! followed by `^-1` (any nonzero `^k` is accepted and expanded); the identity
//! is the literal `1`. Presentations read `< a, b, c | a b, b c, a c^-1 >`.

use std::fmt;

use thiserror::Error;

use crate::presentation::Presentation;
use crate::words::{Letter, Sign, Word};

/// A parse failure with a one-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Moves the error to another line, shifting its column by `column_offset`.
    pub fn at_line(mut self, line: usize, column_offset: usize) -> ParseError {
        self.line = line;
        self.column += column_offset;
        self
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let column = self.src[..self.pos].chars().count() + 1;
        ParseError::new(1, column, message)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.err(format!("expected '{c}', found '{found}'"))),
                None => Err(self.err(format!("expected '{c}', found end of input"))),
            }
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        self.pos += end;
        Some(&rest[..end])
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let end = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+'))))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let text = &rest[..end];
        let value = text
            .parse::<i64>()
            .map_err(|_| self.err("expected an integer exponent"))?;
        self.pos += end;
        Ok(value)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }
}

fn parse_word_at(
    cur: &mut Cursor<'_>,
    names: &[String],
    stop: &[char],
) -> Result<Word, ParseError> {
    let mut letters = Vec::new();
    let mut saw_identity = false;
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(c) if stop.contains(&c) => break,
            Some('1') => {
                cur.pos += 1;
                saw_identity = true;
                continue;
            }
            _ => {}
        }
        let start = cur.pos;
        let name = match cur.ident() {
            Some(name) => name,
            None => {
                let found = cur.peek().unwrap_or(' ');
                return Err(cur.err(format!("unexpected character '{found}' in word")));
            }
        };
        let gen = match names.iter().position(|n| n == name) {
            Some(g) => g,
            None => {
                cur.pos = start;
                return Err(cur.err(format!("unknown generator '{name}'")));
            }
        };
        let mut power = 1i64;
        if cur.peek() == Some('^') {
            cur.pos += 1;
            power = cur.integer()?;
            if power == 0 {
                return Err(cur.err("exponent must be nonzero"));
            }
        }
        let sign = if power > 0 { Sign::Pos } else { Sign::Neg };
        letters.extend(std::iter::repeat_n(
            Letter::new(gen, sign),
            power.unsigned_abs() as usize,
        ));
    }
    if letters.is_empty() && !saw_identity {
        return Err(cur.err("empty word; write 1 for the identity"));
    }
    Ok(Word::new(letters))
}

/// Parses a word against the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    let mut cur = Cursor::new(text);
    let w = parse_word_at(&mut cur, names, &[])?;
    if !cur.at_end() {
        return Err(cur.err("trailing input after word"));
    }
    Ok(w)
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect('<')?;
    let mut names: Vec<String> = Vec::new();
    if !cur.eat('|') {
        loop {
            let start = cur.pos;
            let name = cur
                .ident()
                .ok_or_else(|| cur.err("expected a generator name"))?;
            if names.iter().any(|n| n == name) {
                cur.pos = start;
                cur.skip_ws();
                return Err(cur.err(format!("duplicate generator '{name}'")));
            }
            names.push(name.to_string());
            if cur.eat('|') {
                break;
            }
            cur.expect(',')?;
        }
    }
    let mut relators = Vec::new();
    if !cur.eat('>') {
        loop {
            relators.push(parse_word_at(&mut cur, &names, &[',', '>'])?);
            if cur.eat('>') {
                break;
            }
            cur.expect(',')?;
        }
    }
    if !cur.at_end() {
        return Err(cur.err("trailing input after '>'"));
    }
    Ok(Presentation::with_names(names, relators).expect("parser resolves names"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_presentation() {
        let p = parse_presentation("< a, b, c | a b, b c, a c^-1 >").unwrap();
        assert_eq!(p.n_generators(), 3);
        assert_eq!(p.relators()[2], Word::from_pairs(&[(0, 1), (2, -1)]));
        assert_eq!(p.to_string(), "< a, b, c | a b, b c, a c^-1 >");
    }

    #[test]
    fn identity_and_powers() {
        let p = parse_presentation("<c|1>").unwrap();
        assert!(p.relators()[0].is_empty());
        let q = parse_presentation("< x, y | x^2 y^-3, x y >").unwrap();
        assert_eq!(q.relators()[0].len(), 5);
        let e = parse_presentation("< | >").unwrap();
        assert_eq!(e.n_generators(), 0);
        assert!(e.relators().is_empty());
    }

    #[test]
    fn unterminated_reports_position() {
        let err = parse_presentation("< a | a a").unwrap_err();
        assert_eq!(err.column, 10);
        assert!(err.message.contains("expected"), "{err}");
    }

    #[test]
    fn unknown_generator_reports_column() {
        let err = parse_presentation("< a | a b >").unwrap_err();
        assert_eq!((err.line, err.column), (1, 9));
        assert!(err.message.contains("unknown generator 'b'"));
    }

    #[test]
    fn empty_relator_rejected() {
        assert!(parse_presentation("< a | , a >").is_err());
    }

    #[test]
    fn word_syntax() {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            parse_word("a b c^-1", &names).unwrap(),
            Word::from_pairs(&[(0, 1), (1, 1), (2, -1)])
        );
        assert_eq!(parse_word("1", &names).unwrap(), Word::identity());
        assert!(parse_word("a^0", &names).is_err());
    }
}
