use std::collections::HashSet;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

fn check_target(c: &SimplicialComplex, f: &Face) -> Result<()> {
    if !c.contains(f) {
        return Err(Error::NotAFace(f.to_string()));
    }
    if f.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "cannot subdivide {f}: dimension below 1"
        )));
    }
    Ok(())
}

/// Replaces every facet `G ⊇ F` by the facets `(G ∖ F) ∪ R` for each facet
/// `R` of `replacement`.
fn replace_star(c: &SimplicialComplex, f: &Face, replacement: &[Face]) -> Result<SimplicialComplex> {
    let existing: HashSet<&VertexId> = c.vertices().iter().collect();
    for r in replacement {
        if let Some(v) = r.vertices().iter().find(|v| !f.contains(v) && existing.contains(v)) {
            return Err(Error::InvalidArgument(format!("new vertex label {v} already in use")));
        }
    }
    let mut out = Vec::new();
    for g in c.facets() {
        if f.is_subset(&g) {
            let link = g.difference(f);
            out.extend(replacement.iter().map(|r| link.union(r)));
        } else {
            out.push(g);
        }
    }
    Ok(SimplicialComplex::from_faces(out))
}

/// Stellar subdivision at `F` with the new vertex labelled `{F}`: the star
/// of `F` becomes `link(F) ∗ (w ∗ ∂(2^F))`.
pub fn stellar_subdivision(c: &SimplicialComplex, f: &Face) -> Result<SimplicialComplex> {
    check_target(c, f)?;
    let w = VertexId::face(f.vertices().to_vec());
    let replacement: Vec<Face> = f
        .vertices()
        .iter()
        .map(|v| {
            let mut r: Vec<VertexId> = f.vertices().iter().filter(|u| *u != v).cloned().collect();
            r.push(w.clone());
            Face::new(r)
        })
        .collect::<Result<_>>()?;
    replace_star(c, f, &replacement)
}

/// Crossing operation at `F`: the star of `F` becomes the join of `link(F)`
/// with the antiprism over `∂(2^F)`, whose new vertices are the pointed
/// faces `(F, v)`.
pub fn crossing_operation(c: &SimplicialComplex, f: &Face) -> Result<SimplicialComplex> {
    check_target(c, f)?;
    let verts = f.vertices();
    if verts.len() > 20 {
        return Err(Error::Capacity {
            what: "crossing face size",
            requested: verts.len(),
            limit: 20,
        });
    }
    let mut replacement = Vec::with_capacity((1 << verts.len()) - 1);
    for mask in 1u32..(1 << verts.len()) {
        let r: Vec<VertexId> = verts
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if mask >> i & 1 == 1 {
                    VertexId::pointed(verts.to_vec(), v.clone())
                } else {
                    v.clone()
                }
            })
            .collect();
        replacement.push(Face::new(r)?);
    }
    replace_star(c, f, &replacement)
}

/// Faces of dimension at least one, larger first, ties in lexicographic
/// order.
fn subdivision_order(c: &SimplicialComplex) -> Vec<Face> {
    let mut out = Vec::new();
    for d in (1..=c.dim()).rev() {
        out.extend(c.faces_of_dim(d));
    }
    out
}

fn iterate(
    c: &SimplicialComplex,
    step: impl Fn(&SimplicialComplex, &Face) -> Result<SimplicialComplex>,
    rename: impl Fn(&VertexId) -> VertexId,
) -> Result<SimplicialComplex> {
    let mut cur = c.clone();
    for f in subdivision_order(c) {
        cur = step(&cur, &f)?;
    }
    let original: HashSet<&VertexId> = c.vertices().iter().collect();
    cur.relabel(|v| if original.contains(v) { rename(v) } else { v.clone() })
}

/// Crossing operations on every face of dimension at least one, from the
/// facets downwards; original vertices `v` are finally renamed `({v}, v)`.
pub fn antiprism_by_crossings(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    iterate(c, crossing_operation, |v| VertexId::pointed(vec![v.clone()], v.clone()))
}

/// Stellar subdivisions in the same order, with `v` renamed `{v}`.
pub fn barycentric_by_stellar(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    iterate(c, stellar_subdivision, |v| VertexId::face(vec![v.clone()]))
}
