//! Text formats for permutations and generator lists.
//!
//! A permutation is written in disjoint-cycle notation with 1-based points,
//! `(1,2,3)(4,5)`, with `()` for the identity, or as a JSON image list
//! `[2,1,3]` where entry `i` is the image of point `i`. A generator file
//! holds one permutation per line; blank lines and lines starting with `#`
//! are skipped, and an optional `degree N` line fixes the degree, which is
//! otherwise the largest point mentioned.

use thiserror::Error;

use crate::error::GroupError;
use crate::group::{PermGroup, DEFAULT_MAX_DEGREE};
use crate::perm::Perm;

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct NotationError {
    pub line: usize,
    pub column: usize,
    pub kind: NotationErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
    #[error("points are numbered from 1")]
    ZeroPoint,
    #[error("point {point} exceeds the degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("malformed degree header")]
    BadDegree,
    #[error("image list is not a permutation: {0}")]
    BadImageList(String),
    #[error("number too large")]
    Overflow,
}

/// A permutation as written, before the degree is known.
#[derive(Clone, Debug)]
enum Written {
    Cycles(Vec<Vec<usize>>),
    Images(Vec<u32>),
}

impl Written {
    fn max_point(&self) -> usize {
        match self {
            Written::Cycles(cs) => cs.iter().flatten().map(|&x| x + 1).max().unwrap_or(0),
            Written::Images(im) => im.len(),
        }
    }

    fn build(self, degree: usize) -> Result<Perm, NotationErrorKind> {
        match self {
            Written::Cycles(cs) => {
                if let Some(&p) = cs.iter().flatten().find(|&&x| x >= degree) {
                    return Err(NotationErrorKind::PointOutOfRange {
                        point: p + 1,
                        degree,
                    });
                }
                Ok(Perm::from_cycles(degree, &cs).expect("cycles checked while parsing"))
            }
            Written::Images(mut im) => {
                if im.len() > degree {
                    return Err(NotationErrorKind::PointOutOfRange {
                        point: im.len(),
                        degree,
                    });
                }
                im.extend(im.len() as u32..degree as u32);
                Perm::from_images(im).map_err(|e| NotationErrorKind::BadImageList(e.to_string()))
            }
        }
    }
}

fn parse_written(text: &str, line: usize) -> Result<Written, NotationError> {
    let err = |column: usize, kind| NotationError { line, column, kind };
    let trimmed = text.trim_start();
    let offset = text.len() - trimmed.len();
    if trimmed.starts_with('[') {
        let values: Vec<i64> = serde_json::from_str(trimmed).map_err(|e| {
            err(
                offset + e.column().max(1),
                NotationErrorKind::BadImageList(e.to_string()),
            )
        })?;
        let mut images = Vec::with_capacity(values.len());
        for (i, v) in values.into_iter().enumerate() {
            if v < 1 || v > i64::from(u32::MAX) {
                return Err(err(
                    offset + 1,
                    NotationErrorKind::BadImageList(format!("entry {} is {v}", i + 1)),
                ));
            }
            images.push((v - 1) as u32);
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= seen.len() {
                let kind = NotationErrorKind::PointOutOfRange {
                    point: x + 1,
                    degree: seen.len(),
                };
                return Err(err(offset + 1, kind));
            }
            if seen[x] {
                return Err(err(offset + 1, NotationErrorKind::DuplicatePoint(x + 1)));
            }
            seen[x] = true;
        }
        return Ok(Written::Images(images));
    }

    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut used = std::collections::HashSet::new();
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    let col = |i: usize| chars.get(i).map_or(text.len(), |&(b, _)| b) + 1;
    skip_ws(&mut i);
    if i == chars.len() {
        return Err(err(col(i), NotationErrorKind::UnexpectedEnd));
    }
    while i < chars.len() {
        if chars[i].1 != '(' {
            return Err(err(col(i), NotationErrorKind::UnexpectedChar(chars[i].1)));
        }
        i += 1;
        skip_ws(&mut i);
        let mut cycle = Vec::new();
        if i < chars.len() && chars[i].1 == ')' {
            i += 1;
            skip_ws(&mut i);
            continue;
        }
        loop {
            skip_ws(&mut i);
            let start = i;
            let mut value: usize = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(chars[i].1 as usize - '0' as usize))
                    .ok_or_else(|| err(col(start), NotationErrorKind::Overflow))?;
                i += 1;
            }
            if i == start {
                return match chars.get(i) {
                    Some(&(_, c)) => Err(err(col(i), NotationErrorKind::UnexpectedChar(c))),
                    None => Err(err(col(i), NotationErrorKind::UnexpectedEnd)),
                };
            }
            if value == 0 {
                return Err(err(col(start), NotationErrorKind::ZeroPoint));
            }
            if value > DEFAULT_MAX_DEGREE * 1000 {
                return Err(err(col(start), NotationErrorKind::Overflow));
            }
            if !used.insert(value) {
                return Err(err(col(start), NotationErrorKind::DuplicatePoint(value)));
            }
            cycle.push(value - 1);
            skip_ws(&mut i);
            match chars.get(i) {
                Some(&(_, ',')) => i += 1,
                Some(&(_, ')')) => {
                    i += 1;
                    break;
                }
                Some(&(_, c)) => return Err(err(col(i), NotationErrorKind::UnexpectedChar(c))),
                None => return Err(err(col(i), NotationErrorKind::UnexpectedEnd)),
            }
        }
        cycles.push(cycle);
        skip_ws(&mut i);
    }
    Ok(Written::Cycles(cycles))
}

/// Parses one permutation. With `degree = None` the degree is the largest
/// point mentioned (at least 1).
pub fn parse_perm(text: &str, degree: Option<usize>) -> Result<Perm, NotationError> {
    let written = parse_written(text, 1)?;
    let degree = degree.unwrap_or_else(|| written.max_point().max(1));
    written.build(degree).map_err(|kind| NotationError {
        line: 1,
        column: 1,
        kind,
    })
}

/// Cycle notation with 1-based points; the inverse of [`parse_perm`].
pub fn format_perm(p: &Perm) -> String {
    p.to_string()
}

/// Parsed contents of a generator file.
#[derive(Clone, Debug)]
pub struct GeneratorFile {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl GeneratorFile {
    pub fn into_group(self) -> Result<PermGroup, GroupError> {
        PermGroup::new(self.degree, self.generators)
    }
}

pub fn parse_generators(text: &str) -> Result<GeneratorFile, NotationError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut written = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("degree") {
            let d = rest
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&d| d >= 1 && declared.is_none())
                .ok_or(NotationError {
                    line,
                    column: 1,
                    kind: NotationErrorKind::BadDegree,
                })?;
            declared = Some((d, line));
            continue;
        }
        written.push((line, parse_written(raw, line)?));
    }
    let inferred = written
        .iter()
        .map(|(_, w)| w.max_point())
        .max()
        .unwrap_or(0);
    let degree = declared.map_or(inferred.max(1), |(d, _)| d);
    let generators = written
        .into_iter()
        .map(|(line, w)| {
            w.build(degree).map_err(|kind| NotationError {
                line,
                column: 1,
                kind,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeneratorFile { degree, generators })
}

/// Renders a generator file that [`parse_generators`] reads back.
pub fn format_generators(degree: usize, generators: &[Perm]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
