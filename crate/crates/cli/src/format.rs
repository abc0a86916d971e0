//! Line-oriented antichain documents.
//!
//! ```text
//! # comments run to end of line
//! d=3
//! role=socle
//! 2,2,3
//! 3,3,2
//! ```
//!
//! The `d=` line comes first, an optional `role=` line may follow, and every
//! remaining non-blank line is one comma-separated integer vector.

use std::fmt;
use std::str::FromStr;

use monideal::{Antichain, LatticePoint};
use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Role {
    Generators,
    Socle,
    #[default]
    Points,
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "generators" => Ok(Role::Generators),
            "socle" => Ok(Role::Socle),
            "points" => Ok(Role::Points),
            other => Err(format!("unknown role `{other}` (expected generators, socle or points)")),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Generators => "generators",
            Role::Socle => "socle",
            Role::Points => "points",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses `"1,-2,3"`; whitespace around entries is ignored.
pub fn parse_vector(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>().map_err(|_| format!("`{t}` is not an integer"))
        })
        .collect()
}

/// A parsed document; rows keep their source line numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainDocument {
    pub dim: usize,
    pub role: Role,
    pub rows: Vec<(usize, LatticePoint)>,
}

impl AntichainDocument {
    pub fn from_antichain(a: &Antichain, role: Role) -> Self {
        Self { dim: a.dim(), role, rows: a.iter().cloned().map(|p| (0, p)).collect() }
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        self.rows.iter().map(|(_, p)| p.clone()).collect()
    }

    /// Validates pairwise incomparability; an empty body gives an empty antichain.
    pub fn to_antichain(&self) -> monideal::Result<Antichain> {
        Antichain::with_dim(self.dim, self.points())
    }

    /// Source line of a row equal to `p`, if any.
    pub fn line_of(&self, p: &LatticePoint) -> Option<usize> {
        self.rows.iter().find(|(_, q)| q == p).map(|(l, _)| *l).filter(|&l| l > 0)
    }
}

impl FromStr for AntichainDocument {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut content = text.lines().enumerate().filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        });
        let (first_no, first) = content.next().ok_or_else(|| err(1, "missing `d=<int>` header"))?;
        let dim = first
            .strip_prefix("d=")
            .ok_or_else(|| err(first_no, format!("expected `d=<int>`, found `{first}`")))?
            .trim()
            .parse::<usize>()
            .map_err(|_| err(first_no, format!("bad dimension in `{first}`")))?;
        if dim == 0 {
            return Err(err(first_no, "dimension must be at least 1"));
        }
        let mut role = Role::default();
        let mut rows = Vec::new();
        for (no, line) in content {
            if let Some(tag) = line.strip_prefix("role=") {
                if !rows.is_empty() || role != Role::default() {
                    return Err(err(no, "`role=` must directly follow the `d=` line"));
                }
                role = tag.trim().parse().map_err(|m| err(no, m))?;
                continue;
            }
            let v = parse_vector(line).map_err(|m| err(no, m))?;
            if v.len() != dim {
                return Err(err(no, format!("vector `{line}` has {} entries, expected {dim}", v.len())));
            }
            let p = LatticePoint::new(v).map_err(|e| err(no, e.to_string()))?;
            rows.push((no, p));
        }
        Ok(Self { dim, role, rows })
    }
}

impl fmt::Display for AntichainDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d={}", self.dim)?;
        writeln!(f, "role={}", self.role)?;
        for (_, p) in &self.rows {
            let coords: Vec<String> = p.coords().iter().map(i64::to_string).collect();
            writeln!(f, "{}", coords.join(","))?;
        }
        Ok(())
    }
}
