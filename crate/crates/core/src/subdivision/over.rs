use super::{restriction, Subdivision};
use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

const OVER_CAP: usize = 20;

/// `Γ_A(Δ)` for a triangulation `Δ` of `∂(2^V)`, with the new vertex paired
/// to `v ∈ V` labelled `(V, v)`.
pub fn antiprism_over(bd: &Subdivision, base: &Face) -> Result<Subdivision> {
    let all = base.vertices().to_vec();
    antiprism_over_with(bd, base, |v| VertexId::pointed(all.clone(), v.clone()))
}

/// `Γ_A(Δ)` with the new vertex paired to `v` labelled `label(v)`.
///
/// The result is `Δ` together with every `E ∪ G` where `E` is a nonempty set
/// of new vertices and `G` a face of the restriction of `Δ` to the base
/// vertices not paired with `E`. The new vertices are carried by `V`.
pub fn antiprism_over_with(
    bd: &Subdivision,
    base: &Face,
    label: impl Fn(&VertexId) -> VertexId,
) -> Result<Subdivision> {
    let n = base.len();
    if n == 0 {
        return Err(Error::InvalidArgument("antiprism over an empty base".into()));
    }
    if n > OVER_CAP {
        return Err(Error::Capacity {
            what: "antiprism base size",
            requested: n,
            limit: OVER_CAP,
        });
    }
    for v in bd.complex.vertices() {
        let c = bd
            .carriers
            .vertex_carrier(v)
            .ok_or_else(|| Error::MissingCarrier(v.to_string()))?;
        if !c.is_subset(base) || c.len() == n {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not carried by a proper face of {base}"
            )));
        }
    }
    let new: Vec<VertexId> = base.vertices().iter().map(&label).collect();
    if let Some(w) = new.iter().find(|w| bd.complex.vertex_index(w).is_some()) {
        return Err(Error::InvalidArgument(format!("new vertex label {w} already in use")));
    }
    let mut facets = Vec::new();
    for mask in 1u32..(1 << n) {
        let mut e = Vec::new();
        let mut rest = Vec::new();
        for (i, v) in base.vertices().iter().enumerate() {
            if mask >> i & 1 == 1 {
                e.push(new[i].clone());
            } else {
                rest.push(v.clone());
            }
        }
        let e = Face::new(e)?;
        let r = restriction(&bd.complex, &bd.carriers, &Face::from_sorted(rest))?;
        for g in r.facets() {
            facets.push(e.union(&g));
        }
    }
    let complex = SimplicialComplex::from_faces(facets);
    let mut carriers = bd.carriers.restrict_to(&bd.complex)?;
    for w in new {
        carriers.insert(w, base.clone());
    }
    Ok(Subdivision { complex, carriers })
}

/// `Δ_A(Γ) = Γ ∪ Γ_A(∂Γ)` for a triangulation `Γ` of `2^V`; the vertex
/// paired with `v` is the primed label `v'`.
pub fn antiprism_sphere(g: &Subdivision, base: &Face) -> Result<SimplicialComplex> {
    let bd = g.complex.boundary()?;
    let bd = Subdivision {
        carriers: g.carriers.restrict_to(&bd)?,
        complex: bd,
    };
    let cap = antiprism_over_with(&bd, base, |v| VertexId::prime(v.clone()))?;
    Ok(SimplicialComplex::from_faces(
        g.complex.facets().chain(cap.complex.facets()),
    ))
}
