//! Combinatorial Heegaard diagrams as signed crossing lists.
//!
//! Only the intersection pattern of the curves is modeled: each crossing
//! records its position along a β curve and along an α curve and one sign
//! shared by both extractions. Embeddability of the curves in the surface is
//! not tracked. α curves of component 0 come first in the global numbering,
//! then those of component 1, and so on; β curves likewise.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::Presentation;
use crate::text::ParseError;
use crate::words::{Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeegaardError {
    #[error("component {} has {alphas} alpha curves but {betas} beta curves", component + 1)]
    Unbalanced {
        component: usize,
        alphas: usize,
        betas: usize,
    },
    #[error("{what} index {} out of range ({len} available)", index + 1)]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("cannot slide beta curve {} over itself", .0 + 1)]
    SameCurve(usize),
    #[error("beta curves {} and {} lie in different components", a + 1, b + 1)]
    DifferentComponents { a: usize, b: usize },
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub beta: usize,
    pub beta_pos: usize,
    pub alpha: usize,
    pub alpha_pos: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub genus: usize,
    pub alpha_count: usize,
    pub beta_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    Alpha(usize),
    Beta(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeegaardDiagram {
    components: Vec<Component>,
    crossings: Vec<Crossing>,
}

impl HeegaardDiagram {
    /// Builds a diagram, checking curve ranges, component membership and that
    /// the positions along every curve are `0..r` without gaps.
    pub fn new(
        components: Vec<Component>,
        crossings: Vec<Crossing>,
    ) -> Result<HeegaardDiagram, HeegaardError> {
        let d = HeegaardDiagram {
            components,
            crossings,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn empty() -> HeegaardDiagram {
        HeegaardDiagram::default()
    }

    /// One component, one α and one β, crossing `p` times with the given sign.
    pub fn lens_shadow(p: usize, sign: Sign) -> HeegaardDiagram {
        let crossings = (0..p)
            .map(|t| Crossing {
                beta: 0,
                beta_pos: t,
                alpha: 0,
                alpha_pos: t,
                sign,
            })
            .collect();
        HeegaardDiagram {
            components: vec![Component {
                genus: 1,
                alpha_count: 1,
                beta_count: 1,
            }],
            crossings,
        }
    }

    /// Single-component diagram whose β curves read off the given words.
    ///
    /// Positions along each α follow the order in which the words visit it.
    pub fn from_words(
        genus: usize,
        n_alphas: usize,
        words: &[Word],
    ) -> Result<HeegaardDiagram, HeegaardError> {
        let mut next_alpha_pos = vec![0usize; n_alphas];
        let mut crossings = Vec::new();
        for (beta, w) in words.iter().enumerate() {
            for (t, l) in w.letters().iter().enumerate() {
                let a = l.gen.0;
                if a >= n_alphas {
                    return Err(HeegaardError::IndexOutOfRange {
                        what: "alpha",
                        index: a,
                        len: n_alphas,
                    });
                }
                crossings.push(Crossing {
                    beta,
                    beta_pos: t,
                    alpha: a,
                    alpha_pos: next_alpha_pos[a],
                    sign: l.sign,
                });
                next_alpha_pos[a] += 1;
            }
        }
        HeegaardDiagram::new(
            vec![Component {
                genus,
                alpha_count: n_alphas,
                beta_count: words.len(),
            }],
            crossings,
        )
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn n_alphas(&self) -> usize {
        self.components.iter().map(|c| c.alpha_count).sum()
    }

    pub fn n_betas(&self) -> usize {
        self.components.iter().map(|c| c.beta_count).sum()
    }

    fn alpha_offset(&self, component: usize) -> usize {
        self.components[..component]
            .iter()
            .map(|c| c.alpha_count)
            .sum()
    }

    fn beta_offset(&self, component: usize) -> usize {
        self.components[..component]
            .iter()
            .map(|c| c.beta_count)
            .sum()
    }

    pub fn component_of_alpha(&self, alpha: usize) -> Option<usize> {
        let mut end = 0;
        self.components.iter().position(|c| {
            end += c.alpha_count;
            alpha < end
        })
    }

    pub fn component_of_beta(&self, beta: usize) -> Option<usize> {
        let mut end = 0;
        self.components.iter().position(|c| {
            end += c.beta_count;
            beta < end
        })
    }

    pub fn is_balanced(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.alpha_count == c.beta_count)
    }

    fn check_balanced(&self) -> Result<(), HeegaardError> {
        match self
            .components
            .iter()
            .position(|c| c.alpha_count != c.beta_count)
        {
            Some(i) => Err(HeegaardError::Unbalanced {
                component: i,
                alphas: self.components[i].alpha_count,
                betas: self.components[i].beta_count,
            }),
            None => Ok(()),
        }
    }

    fn validate(&self) -> Result<(), HeegaardError> {
        let (na, nb) = (self.n_alphas(), self.n_betas());
        let mut on_alpha: Vec<Vec<usize>> = vec![Vec::new(); na];
        let mut on_beta: Vec<Vec<usize>> = vec![Vec::new(); nb];
        for c in &self.crossings {
            if c.alpha >= na || c.beta >= nb {
                return Err(HeegaardError::Invalid(format!(
                    "crossing references alpha {} / beta {} beyond {na} / {nb} curves",
                    c.alpha + 1,
                    c.beta + 1
                )));
            }
            if self.component_of_alpha(c.alpha) != self.component_of_beta(c.beta) {
                return Err(HeegaardError::Invalid(format!(
                    "alpha {} and beta {} cross but lie in different components",
                    c.alpha + 1,
                    c.beta + 1
                )));
            }
            on_alpha[c.alpha].push(c.alpha_pos);
            on_beta[c.beta].push(c.beta_pos);
        }
        for (kind, lists) in [("alpha", &mut on_alpha), ("beta", &mut on_beta)] {
            for (i, positions) in lists.iter_mut().enumerate() {
                positions.sort_unstable();
                if positions.iter().enumerate().any(|(k, &p)| k != p) {
                    return Err(HeegaardError::Invalid(format!(
                        "positions along {kind} {} are not 0..{} without gaps or repeats",
                        i + 1,
                        positions.len()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Signed α-sequence read along β curve `beta` from its start point.
    pub fn beta_word(&self, beta: usize) -> Word {
        let mut cs: Vec<&Crossing> = self.crossings.iter().filter(|c| c.beta == beta).collect();
        cs.sort_by_key(|c| c.beta_pos);
        cs.iter().map(|c| Letter::new(c.alpha, c.sign)).collect()
    }

    fn beta_len(&self, beta: usize) -> usize {
        self.crossings.iter().filter(|c| c.beta == beta).count()
    }

    fn alpha_len(&self, alpha: usize) -> usize {
        self.crossings.iter().filter(|c| c.alpha == alpha).count()
    }

    /// Swaps the roles of the α and β curves.
    pub fn transpose(&self) -> HeegaardDiagram {
        HeegaardDiagram {
            components: self
                .components
                .iter()
                .map(|c| Component {
                    genus: c.genus,
                    alpha_count: c.beta_count,
                    beta_count: c.alpha_count,
                })
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    beta: c.alpha,
                    beta_pos: c.alpha_pos,
                    alpha: c.beta,
                    alpha_pos: c.beta_pos,
                    sign: c.sign,
                })
                .collect(),
        }
    }
}

/// Presentation with one generator per α curve and one relator per β curve.
pub fn presentation_of_alpha(d: &HeegaardDiagram) -> Result<Presentation, HeegaardError> {
    d.check_balanced()?;
    let relators = (0..d.n_betas()).map(|b| d.beta_word(b)).collect();
    Ok(Presentation::new(d.n_alphas(), relators))
}

/// The transposed extraction: generators are β curves, relators read along α curves.
pub fn presentation_of_beta(d: &HeegaardDiagram) -> Result<Presentation, HeegaardError> {
    presentation_of_alpha(&d.transpose())
}

fn check_beta(d: &HeegaardDiagram, beta: usize) -> Result<(), HeegaardError> {
    if beta < d.n_betas() {
        Ok(())
    } else {
        Err(HeegaardError::IndexOutOfRange {
            what: "beta",
            index: beta,
            len: d.n_betas(),
        })
    }
}

fn check_component(d: &HeegaardDiagram, component: usize) -> Result<(), HeegaardError> {
    if component < d.components.len() {
        Ok(())
    } else {
        Err(HeegaardError::IndexOutOfRange {
            what: "component",
            index: component,
            len: d.components.len(),
        })
    }
}

/// Moves the start point of β curve `beta` forward by `offset` crossings,
/// so its relator rotates left by `offset`.
pub fn change_start_point(
    d: &HeegaardDiagram,
    beta: usize,
    offset: i64,
) -> Result<HeegaardDiagram, HeegaardError> {
    check_beta(d, beta)?;
    let r = d.beta_len(beta) as i64;
    let mut out = d.clone();
    if r == 0 {
        return Ok(out);
    }
    for c in out.crossings.iter_mut().filter(|c| c.beta == beta) {
        c.beta_pos = (c.beta_pos as i64 - offset).rem_euclid(r) as usize;
    }
    Ok(out)
}

/// Reverses a curve's orientation: its traversal order and the signs of its crossings.
pub fn reverse_orientation(
    d: &HeegaardDiagram,
    curve: Curve,
) -> Result<HeegaardDiagram, HeegaardError> {
    let mut out = d.clone();
    match curve {
        Curve::Beta(b) => {
            check_beta(d, b)?;
            let r = d.beta_len(b);
            for c in out.crossings.iter_mut().filter(|c| c.beta == b) {
                c.beta_pos = r - 1 - c.beta_pos;
                c.sign = c.sign.flip();
            }
        }
        Curve::Alpha(a) => {
            if a >= d.n_alphas() {
                return Err(HeegaardError::IndexOutOfRange {
                    what: "alpha",
                    index: a,
                    len: d.n_alphas(),
                });
            }
            let r = d.alpha_len(a);
            for c in out.crossings.iter_mut().filter(|c| c.alpha == a) {
                c.alpha_pos = r - 1 - c.alpha_pos;
                c.sign = c.sign.flip();
            }
        }
    }
    Ok(out)
}

/// Global indices `(alpha, beta)` the curves added by [`stabilize_diagram`] receive.
pub fn stabilization_slots(
    d: &HeegaardDiagram,
    component: usize,
) -> Result<(usize, usize), HeegaardError> {
    check_component(d, component)?;
    let c = d.components[component];
    Ok((
        d.alpha_offset(component) + c.alpha_count,
        d.beta_offset(component) + c.beta_count,
    ))
}

/// Adds an α/β pair meeting once positively to `component`, raising its genus.
///
/// The new curves are placed last within the component; curves of later
/// components shift up by one.
pub fn stabilize_diagram(
    d: &HeegaardDiagram,
    component: usize,
) -> Result<HeegaardDiagram, HeegaardError> {
    let (new_alpha, new_beta) = stabilization_slots(d, component)?;
    let mut out = d.clone();
    for c in out.crossings.iter_mut() {
        if c.alpha >= new_alpha {
            c.alpha += 1;
        }
        if c.beta >= new_beta {
            c.beta += 1;
        }
    }
    out.crossings.push(Crossing {
        beta: new_beta,
        beta_pos: 0,
        alpha: new_alpha,
        alpha_pos: 0,
        sign: Sign::Pos,
    });
    let comp = &mut out.components[component];
    comp.genus += 1;
    comp.alpha_count += 1;
    comp.beta_count += 1;
    Ok(out)
}

/// Slides β curve `i` over β curve `j`.
///
/// β_i's crossing sequence becomes its own followed by β_j's (or by the
/// reversed, sign-flipped sequence of β_j when `reversed`). Each copied crossing
/// takes the next free position on its α curve. The result is not reduced.
pub fn beta_handle_slide(
    d: &HeegaardDiagram,
    i: usize,
    j: usize,
    reversed: bool,
) -> Result<HeegaardDiagram, HeegaardError> {
    check_beta(d, i)?;
    check_beta(d, j)?;
    if i == j {
        return Err(HeegaardError::SameCurve(i));
    }
    if d.component_of_beta(i) != d.component_of_beta(j) {
        return Err(HeegaardError::DifferentComponents { a: i, b: j });
    }
    let mut source: Vec<Crossing> = d
        .crossings
        .iter()
        .filter(|c| c.beta == j)
        .copied()
        .collect();
    source.sort_by_key(|c| c.beta_pos);
    if reversed {
        source.reverse();
        for c in source.iter_mut() {
            c.sign = c.sign.flip();
        }
    }
    let mut out = d.clone();
    let mut next_alpha_pos: Vec<usize> = (0..d.n_alphas()).map(|a| d.alpha_len(a)).collect();
    let base = d.beta_len(i);
    for (t, c) in source.into_iter().enumerate() {
        out.crossings.push(Crossing {
            beta: i,
            beta_pos: base + t,
            alpha: c.alpha,
            alpha_pos: next_alpha_pos[c.alpha],
            sign: c.sign,
        });
        next_alpha_pos[c.alpha] += 1;
    }
    Ok(out)
}

/// α handle-slide, realized as a β slide on the transposed diagram.
pub fn alpha_handle_slide(
    d: &HeegaardDiagram,
    i: usize,
    j: usize,
    reversed: bool,
) -> Result<HeegaardDiagram, HeegaardError> {
    Ok(beta_handle_slide(&d.transpose(), i, j, reversed)?.transpose())
}

/// Appends a curve-free component of the given genus.
pub fn add_trivial_component(d: &HeegaardDiagram, genus: usize) -> HeegaardDiagram {
    let mut out = d.clone();
    out.components.push(Component {
        genus,
        alpha_count: 0,
        beta_count: 0,
    });
    out
}

/// Adds a 1-handle to the surface of `component` away from all curves.
pub fn add_cylinder_handle(
    d: &HeegaardDiagram,
    component: usize,
) -> Result<HeegaardDiagram, HeegaardError> {
    check_component(d, component)?;
    let mut out = d.clone();
    out.components[component].genus += 1;
    Ok(out)
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Pos => '+',
        Sign::Neg => '-',
    }
}

impl fmt::Display for HeegaardDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ci, comp) in self.components.iter().enumerate() {
            writeln!(
                f,
                "component {} genus {} alphas {} betas {}",
                ci + 1,
                comp.genus,
                comp.alpha_count,
                comp.beta_count
            )?;
            let offset = self.beta_offset(ci);
            for b in offset..offset + comp.beta_count {
                let mut cs: Vec<&Crossing> =
                    self.crossings.iter().filter(|c| c.beta == b).collect();
                cs.sort_by_key(|c| c.beta_pos);
                write!(f, "beta {}:", b + 1)?;
                for c in cs {
                    write!(f, " {}{}@{}", sign_char(c.sign), c.alpha + 1, c.alpha_pos)?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| ParseError::new(line, 1, format!("expected {what}")))
}

impl HeegaardDiagram {
    /// Parses the text format written by `Display`.
    pub fn parse(text: &str) -> Result<HeegaardDiagram, HeegaardError> {
        let mut components: Vec<Component> = Vec::new();
        let mut crossings = Vec::new();
        let mut beta_lines: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "component" => {
                    if toks.len() != 8
                        || toks[2] != "genus"
                        || toks[4] != "alphas"
                        || toks[6] != "betas"
                    {
                        return Err(ParseError::new(
                            line_no,
                            1,
                            "expected 'component <id> genus <g> alphas <k> betas <k>'",
                        )
                        .into());
                    }
                    let id = number(toks.get(1).copied(), line_no, "component id")?;
                    if id != components.len() + 1 {
                        return Err(ParseError::new(
                            line_no,
                            1,
                            format!(
                                "components must be numbered in order, expected {}",
                                components.len() + 1
                            ),
                        )
                        .into());
                    }
                    components.push(Component {
                        genus: number(toks.get(3).copied(), line_no, "genus")?,
                        alpha_count: number(toks.get(5).copied(), line_no, "alpha count")?,
                        beta_count: number(toks.get(7).copied(), line_no, "beta count")?,
                    });
                }
                "beta" => {
                    let Some(ci) = components.len().checked_sub(1) else {
                        return Err(ParseError::new(
                            line_no,
                            1,
                            "beta line before any component header",
                        )
                        .into());
                    };
                    let (head, body) = line
                        .split_once(':')
                        .ok_or_else(|| ParseError::new(line_no, 1, "expected 'beta <i>: ...'"))?;
                    let b = head
                        .split_whitespace()
                        .nth(1)
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|&b| b >= 1)
                        .ok_or_else(|| {
                            ParseError::new(line_no, 6, "expected a positive beta index")
                        })?
                        - 1;
                    let start: usize = components[..ci].iter().map(|c| c.beta_count).sum();
                    if b < start || b >= start + components[ci].beta_count {
                        return Err(ParseError::new(
                            line_no,
                            6,
                            format!("beta {} is not in component {}", b + 1, ci + 1),
                        )
                        .into());
                    }
                    if beta_lines.iter().any(|&(_, seen)| seen == b) {
                        return Err(ParseError::new(
                            line_no,
                            1,
                            format!("beta {} listed twice", b + 1),
                        )
                        .into());
                    }
                    beta_lines.push((line_no, b));
                    for (t, tok) in body.split_whitespace().enumerate() {
                        let bad = || {
                            ParseError::new(
                                line_no,
                                1,
                                format!("bad crossing '{tok}', expected ±<alpha>@<pos>"),
                            )
                        };
                        let sign = match tok.chars().next() {
                            Some('+') => Sign::Pos,
                            Some('-') => Sign::Neg,
                            _ => return Err(bad().into()),
                        };
                        let (a, pos) = tok[1..].split_once('@').ok_or_else(bad)?;
                        let alpha = a
                            .parse::<usize>()
                            .ok()
                            .filter(|&a| a >= 1)
                            .ok_or_else(bad)?
                            - 1;
                        let alpha_pos = pos.parse::<usize>().map_err(|_| bad())?;
                        crossings.push(Crossing {
                            beta: b,
                            beta_pos: t,
                            alpha,
                            alpha_pos,
                            sign,
                        });
                    }
                }
                other => {
                    return Err(ParseError::new(
                        line_no,
                        1,
                        format!("unexpected '{other}', expected 'component' or 'beta'"),
                    )
                    .into())
                }
            }
        }
        HeegaardDiagram::new(components, crossings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::presentation::normalize;

    fn paper_diagram() -> HeegaardDiagram {
        HeegaardDiagram::from_words(3, 3, families::paper_z().relators()).unwrap()
    }

    #[test]
    fn alpha_extraction_examples() {
        let d = HeegaardDiagram::lens_shadow(1, Sign::Pos);
        assert_eq!(presentation_of_alpha(&d).unwrap().to_string(), "< a | a >");
        let d = HeegaardDiagram::lens_shadow(4, Sign::Pos);
        assert_eq!(
            presentation_of_alpha(&d).unwrap(),
            Presentation::parse("< a | a^4 >").unwrap()
        );
        assert_eq!(
            presentation_of_alpha(&paper_diagram()).unwrap(),
            families::paper_z()
        );
    }

    #[test]
    fn beta_extraction_examples() {
        let d = HeegaardDiagram::lens_shadow(1, Sign::Pos);
        assert_eq!(
            presentation_of_beta(&d).unwrap(),
            Presentation::parse("< b | b >").unwrap()
        );
        let d = HeegaardDiagram::lens_shadow(3, Sign::Neg);
        assert_eq!(
            presentation_of_beta(&d).unwrap(),
            Presentation::parse("< b | b^-3 >").unwrap()
        );
        let d = paper_diagram();
        assert_eq!(
            presentation_of_beta(&d.transpose()).unwrap(),
            presentation_of_alpha(&d).unwrap()
        );
    }

    #[test]
    fn unbalanced_rejected() {
        let d = HeegaardDiagram::new(
            vec![Component {
                genus: 1,
                alpha_count: 2,
                beta_count: 1,
            }],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            presentation_of_alpha(&d),
            Err(HeegaardError::Unbalanced { .. })
        ));
    }

    #[test]
    fn start_point_examples() {
        let d = paper_diagram();
        assert_eq!(change_start_point(&d, 0, 0).unwrap(), d);
        let lens = HeegaardDiagram::lens_shadow(5, Sign::Pos);
        assert_eq!(
            presentation_of_alpha(&change_start_point(&lens, 0, 3).unwrap()).unwrap(),
            presentation_of_alpha(&lens).unwrap()
        );
        let moved = presentation_of_alpha(&change_start_point(&d, 0, 1).unwrap()).unwrap();
        assert_eq!(moved.relators()[0], Word::from_pairs(&[(1, 1), (0, 1)]));
        assert_eq!(normalize(&moved), normalize(&families::paper_z()));
        assert!(change_start_point(&d, 7, 1).is_err());
    }

    #[test]
    fn reversal_examples() {
        let d = HeegaardDiagram::lens_shadow(1, Sign::Pos);
        let r = reverse_orientation(&d, Curve::Beta(0)).unwrap();
        assert_eq!(
            presentation_of_alpha(&r).unwrap(),
            Presentation::parse("< a | a^-1 >").unwrap()
        );
        let d = HeegaardDiagram::lens_shadow(3, Sign::Pos);
        let r = reverse_orientation(&d, Curve::Alpha(0)).unwrap();
        assert_eq!(
            presentation_of_alpha(&r).unwrap(),
            Presentation::parse("< a | a^-3 >").unwrap()
        );
        let p = paper_diagram();
        let twice = reverse_orientation(
            &reverse_orientation(&p, Curve::Beta(2)).unwrap(),
            Curve::Beta(2),
        )
        .unwrap();
        assert_eq!(twice, p);
    }

    #[test]
    fn stabilization_examples() {
        let empty = add_trivial_component(&HeegaardDiagram::empty(), 0);
        let s = stabilize_diagram(&empty, 0).unwrap();
        assert_eq!(
            s.components()[0],
            Component {
                genus: 1,
                alpha_count: 1,
                beta_count: 1
            }
        );
        let d = HeegaardDiagram::lens_shadow(1, Sign::Pos);
        let s = stabilize_diagram(&d, 0).unwrap();
        assert_eq!(
            presentation_of_alpha(&s).unwrap(),
            families::trivial(2).unwrap()
        );
    }

    #[test]
    fn handle_slide_examples() {
        let d = paper_diagram();
        let s = presentation_of_alpha(&beta_handle_slide(&d, 0, 1, false).unwrap()).unwrap();
        assert_eq!(
            s,
            Presentation::parse("< a, b, c | a b b c, b c, a c^-1 >").unwrap()
        );
        let r = presentation_of_alpha(&beta_handle_slide(&d, 0, 1, true).unwrap()).unwrap();
        assert_eq!(
            r,
            Presentation::parse("< a, b, c | a b c^-1 b^-1, b c, a c^-1 >").unwrap()
        );
        assert_eq!(
            beta_handle_slide(&d, 1, 1, false),
            Err(HeegaardError::SameCurve(1))
        );
    }

    #[test]
    fn slides_across_components_rejected() {
        let d = HeegaardDiagram::lens_shadow(1, Sign::Pos);
        let two = HeegaardDiagram::new(
            vec![d.components()[0], d.components()[0]],
            vec![
                d.crossings()[0],
                Crossing {
                    beta: 1,
                    beta_pos: 0,
                    alpha: 1,
                    alpha_pos: 0,
                    sign: Sign::Pos,
                },
            ],
        )
        .unwrap();
        assert!(matches!(
            beta_handle_slide(&two, 0, 1, false),
            Err(HeegaardError::DifferentComponents { .. })
        ));
    }

    #[test]
    fn trivial_component_and_cylinder() {
        let d = paper_diagram();
        let t = add_trivial_component(&d, 2);
        assert_eq!(
            presentation_of_alpha(&t).unwrap(),
            presentation_of_alpha(&d).unwrap()
        );
        assert!(t.is_balanced());
        let e = add_trivial_component(&HeegaardDiagram::empty(), 1);
        assert_eq!(presentation_of_alpha(&e).unwrap().n_generators(), 0);
        let c = add_cylinder_handle(&d, 0).unwrap();
        assert_eq!(c.components()[0].genus, d.components()[0].genus + 1);
        assert_eq!(
            presentation_of_beta(&c).unwrap(),
            presentation_of_beta(&d).unwrap()
        );
        assert!(add_cylinder_handle(&d, 3).is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = beta_handle_slide(&stabilize_diagram(&paper_diagram(), 0).unwrap(), 2, 0, true)
            .unwrap();
        let d = add_trivial_component(&d, 2);
        let text = d.to_string();
        let back = HeegaardDiagram::parse(&text).unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(
            presentation_of_alpha(&back).unwrap(),
            presentation_of_alpha(&d).unwrap()
        );
    }

    #[test]
    fn parse_rejects_gaps() {
        let text = "component 1 genus 1 alphas 1 betas 1\nbeta 1: +1@0 +1@2\n";
        assert!(matches!(
            HeegaardDiagram::parse(text),
            Err(HeegaardError::Invalid(_))
        ));
        let text = "beta 1: +1@0\n";
        assert!(matches!(
            HeegaardDiagram::parse(text),
            Err(HeegaardError::Parse(_))
        ));
    }
}
