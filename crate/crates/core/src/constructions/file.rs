use std::path::Path;

use crate::error::GroupError;
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read generator file: {0}")]
    Io(#[from] std::io::Error),
    #[error("generator file is empty")]
    EmptyFile,
    #[error("line {line}: expected `degree <n>`")]
    MissingDegree { line: usize },
    #[error("line {line}: malformed cycle {text:?}")]
    MalformedCycle { line: usize, text: String },
    #[error("line {line}: point {point} out of range for degree {degree}")]
    PointOutOfRange {
        line: usize,
        point: usize,
        degree: usize,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub fn load_generators(path: impl AsRef<Path>) -> Result<PermGroup, LoadError> {
    parse_generators(&std::fs::read_to_string(path)?)
}

/// `degree <n>` on the first content line, then one permutation per line in
/// disjoint-cycle notation over points `0..n`. Lines starting with `#` are
/// comments and `()` is the identity.
pub fn parse_generators(text: &str) -> Result<PermGroup, LoadError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines.next().ok_or(LoadError::EmptyFile)?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or(LoadError::MissingDegree { line: first })?;

    let mut gens = Vec::new();
    for (line, content) in lines {
        let cycles = parse_cycles(content).ok_or_else(|| LoadError::MalformedCycle {
            line,
            text: content.to_string(),
        })?;
        if let Some(&point) = cycles.iter().flatten().find(|&&x| x >= degree) {
            return Err(LoadError::PointOutOfRange {
                line,
                point,
                degree,
            });
        }
        let perm =
            Permutation::from_cycles(degree, &cycles).map_err(|_| LoadError::MalformedCycle {
                line,
                text: content.to_string(),
            })?;
        gens.push(perm);
    }
    Ok(PermGroup::new(degree, gens)?)
}

fn parse_cycles(text: &str) -> Option<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(')?;
        let close = body.find(')')?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().ok())
            .collect::<Option<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Some(cycles)
}
