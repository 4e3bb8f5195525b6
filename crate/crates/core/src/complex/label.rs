use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex label.
///
/// Input complexes use integer or named labels. Subdivisions produce
/// structured labels that remember where a vertex came from:
///
/// * barycentric vertices are nonempty faces, written `{1,2}`;
/// * antiprism vertices are pointed faces, written `({1,2},1)`;
/// * the extra simplex glued on by the sphere construction uses primed
///   copies of base vertices, written `1'`.
///
/// The derived order is total and deterministic, so complexes built from
/// the same data always serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexId {
    Int(i64),
    Name(String),
    Face(Vec<VertexId>),
    Pointed(Vec<VertexId>, Box<VertexId>),
    Prime(Box<VertexId>),
}

impl VertexId {
    /// Label of the barycentric vertex for a face (`face` must be sorted).
    pub fn face(face: Vec<VertexId>) -> Self {
        VertexId::Face(face)
    }

    /// Label of the pointed face `(face, point)`.
    pub fn pointed(face: Vec<VertexId>, point: VertexId) -> Self {
        VertexId::Pointed(face, Box::new(point))
    }

    pub fn prime(inner: VertexId) -> Self {
        VertexId::Prime(Box::new(inner))
    }

    /// Parses a single label token.
    pub fn parse(token: &str) -> Result<Self> {
        let mut parser = LabelParser {
            src: token.as_bytes(),
            pos: 0,
        };
        let label = parser.label()?;
        if parser.pos != parser.src.len() {
            return Err(Error::Malformed(format!("trailing characters in label `{token}`")));
        }
        Ok(label)
    }
}

impl From<i64> for VertexId {
    fn from(v: i64) -> Self {
        VertexId::Int(v)
    }
}

impl From<i32> for VertexId {
    fn from(v: i32) -> Self {
        VertexId::Int(v as i64)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId::Int(v as i64)
    }
}

impl From<&str> for VertexId {
    fn from(v: &str) -> Self {
        VertexId::parse(v).unwrap_or_else(|_| VertexId::Name(v.to_string()))
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::parse(s)
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, items: &[VertexId]) -> fmt::Result {
    f.write_str("{")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("}")
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Int(v) => write!(f, "{v}"),
            VertexId::Name(s) => f.write_str(s),
            VertexId::Face(items) => write_set(f, items),
            VertexId::Pointed(items, point) => {
                f.write_str("(")?;
                write_set(f, items)?;
                write!(f, ",{point})")
            }
            VertexId::Prime(inner) => write!(f, "{inner}'"),
        }
    }
}

const RESERVED: &[u8] = b"{}(),'#";

struct LabelParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl LabelParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Malformed(format!(
            "{what} at offset {} in label `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn label(&mut self) -> Result<VertexId> {
        let mut label = match self.peek() {
            Some(b'{') => VertexId::Face(self.set()?),
            Some(b'(') => {
                self.pos += 1;
                let face = self.set()?;
                self.expect(b',')?;
                let point = self.label()?;
                self.expect(b')')?;
                VertexId::pointed(face, point)
            }
            Some(c) if !RESERVED.contains(&c) && !c.is_ascii_whitespace() => self.atom()?,
            _ => return Err(self.error("expected a label")),
        };
        while self.peek() == Some(b'\'') {
            self.pos += 1;
            label = VertexId::prime(label);
        }
        Ok(label)
    }

    fn set(&mut self) -> Result<Vec<VertexId>> {
        self.expect(b'{')?;
        let mut items = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.label()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected `,` or `}`")),
            }
        }
        items.sort();
        if items.windows(2).any(|w| w[0] == w[1]) {
            return Err(self.error("duplicate element in set label"));
        }
        Ok(items)
    }

    fn atom(&mut self) -> Result<VertexId> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if RESERVED.contains(&c) || c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.error("invalid utf-8"))?;
        Ok(match text.parse::<i64>() {
            Ok(v) => VertexId::Int(v),
            Err(_) => VertexId::Name(text.to_string()),
        })
    }
}
