//! Facet-list text format: one facet per line, whitespace-separated labels,
//! `#` to end of line is a comment. A file without facets is `{∅}`.

use std::fmt::Write;

use super::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

impl SimplicialComplex {
    pub fn parse_facet_list(text: &str) -> Result<Self> {
        let mut faces = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let labels = line
                .split_whitespace()
                .map(|tok| VertexId::parse(tok).map_err(|e| parse_err(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            faces.push(Face::new(labels).map_err(|e| parse_err(e.to_string()))?);
        }
        Ok(Self::from_faces(faces))
    }

    /// Facets in lexicographic order, one per line.
    pub fn to_facet_list(&self) -> String {
        let mut out = String::new();
        for f in self.facets() {
            let line: Vec<String> = f.vertices().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}
