//! Named presentation families.

use thiserror::Error;

use crate::presentation::Presentation;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter for family {family}: {message}")]
    InvalidParameter { family: String, message: String },
    #[error("unknown family '{0}' (expected trivial:<n>, paperZ or ak:<n>)")]
    UnknownFamily(String),
}

/// A family name with its integer parameters, e.g. `ak:2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub parameters: Vec<i64>,
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let mut parts = text.split(':');
        let name = parts.next().unwrap_or("").trim().to_string();
        let parameters = parts
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| FamilyError::InvalidParameter {
                        family: name.clone(),
                        message: format!("'{p}' is not an integer"),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FamilySpec { name, parameters })
    }

    pub fn build(&self) -> Result<Presentation, FamilyError> {
        let one = |family: &str| -> Result<i64, FamilyError> {
            match self.parameters.as_slice() {
                [n] => Ok(*n),
                _ => Err(FamilyError::InvalidParameter {
                    family: family.to_string(),
                    message: "expected exactly one parameter".into(),
                }),
            }
        };
        match self.name.as_str() {
            "trivial" => trivial(usize::try_from(one("trivial")?).unwrap_or(0)),
            "ak" => ak(usize::try_from(one("ak")?).unwrap_or(0)),
            "paperZ" | "paperz" | "paper_z" if self.parameters.is_empty() => Ok(paper_z()),
            "paperZ" | "paperz" | "paper_z" => Err(FamilyError::InvalidParameter {
                family: self.name.clone(),
                message: "takes no parameters".into(),
            }),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

/// `(a_1, ..., a_n | a_1, ..., a_n)`.
pub fn trivial(n: usize) -> Result<Presentation, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter {
            family: "trivial".into(),
            message: format!("rank must be at least 1, got {n}"),
        });
    }
    Ok(Presentation::new(
        n,
        (0..n).map(|g| Word::power(g, 1)).collect(),
    ))
}

/// `(a, b, c | ab, bc, ac^-1)`, a balanced presentation of the integers.
pub fn paper_z() -> Presentation {
    Presentation::new(
        3,
        vec![
            Word::from_pairs(&[(0, 1), (1, 1)]),
            Word::from_pairs(&[(1, 1), (2, 1)]),
            Word::from_pairs(&[(0, 1), (2, -1)]),
        ],
    )
}

/// Akbulut-Kirby family `(x, y | x^n y^-(n+1), x y x y^-1 x^-1 y^-1)`, `n >= 2`.
pub fn ak(n: usize) -> Result<Presentation, FamilyError> {
    if n < 2 {
        return Err(FamilyError::InvalidParameter {
            family: "ak".into(),
            message: format!("n must be at least 2, got {n}"),
        });
    }
    let first = Word::power(0, n as i64).concat(&Word::power(1, -(n as i64 + 1)));
    let second = Word::from_pairs(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
    Ok(
        Presentation::with_names(vec!["x".into(), "y".into()], vec![first, second])
            .expect("two generators"),
    )
}
