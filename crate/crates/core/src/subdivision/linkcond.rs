use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Vertices not lying on the boundary, in increasing label order.
pub fn interior_vertices(c: &SimplicialComplex) -> Result<Vec<VertexId>> {
    let bd = c.boundary()?;
    Ok(c.vertices()
        .iter()
        .filter(|v| !bd.vertices().contains(v))
        .cloned()
        .collect())
}

/// One edge contraction of [`contract_interior`].
#[derive(Clone, Debug, Serialize)]
pub struct ContractionStep {
    pub edge: String,
    pub link_condition: bool,
    /// Strong Link Condition for the remaining interior vertices afterwards.
    pub strong_link_condition: bool,
}

#[derive(Clone, Debug)]
pub struct ContractionTrace {
    /// Strong Link Condition for all interior vertices before contracting.
    pub initial_slc: bool,
    pub steps: Vec<ContractionStep>,
    pub result: SimplicialComplex,
    /// Whether `result` is the cone with apex the smallest interior vertex
    /// over the boundary of the input.
    pub reaches_cone: bool,
}

impl ContractionTrace {
    pub fn all_hold(&self) -> bool {
        self.initial_slc && self.reaches_cone && self.steps.iter().all(|s| s.link_condition && s.strong_link_condition)
    }
}

/// Contracts the interior vertices `u_1 < ... < u_m` into `u_1`, always
/// merging the two largest remaining ones (`u_m` disappears), and checks
/// the Link Condition along the way.
///
/// The interior vertices must span a face.
pub fn contract_interior(c: &SimplicialComplex) -> Result<ContractionTrace> {
    let mut u = interior_vertices(c)?;
    if u.is_empty() {
        return Err(Error::InvalidArgument("no interior vertices".into()));
    }
    let bd = c.boundary()?;
    let initial_slc = c.strong_link_condition(&Face::new(u.clone())?)?;
    let mut cur = c.clone();
    let mut steps = Vec::new();
    while u.len() > 1 {
        let last = u.pop().expect("at least two vertices");
        let e = Face::new([u[u.len() - 1].clone(), last])?;
        let link_condition = cur.link_condition(&e)?;
        cur = cur.contract_edge(&e)?;
        let strong_link_condition = cur.strong_link_condition(&Face::new(u.clone())?)?;
        steps.push(ContractionStep {
            edge: e.to_string(),
            link_condition,
            strong_link_condition,
        });
    }
    let reaches_cone = cur == bd.cone(u[0].clone())?;
    Ok(ContractionTrace {
        initial_slc,
        steps,
        result: cur,
        reaches_cone,
    })
}
