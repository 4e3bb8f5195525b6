//! Triangulations of simplicial complexes and their carriers.

mod antiprism;
mod linkcond;
mod over;
mod stellar;

use std::collections::BTreeMap;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::polynomials::IntPolynomial;

pub use antiprism::{
    antiprism_adjacent, antiprism_from_partitions, antiprism_partition_faces, antiprism_triangulation,
    pointed_carriers, PointedFace,
};
pub use linkcond::{contract_interior, interior_vertices, ContractionStep, ContractionTrace};
pub use over::{antiprism_over, antiprism_over_with, antiprism_sphere};
pub use stellar::{antiprism_by_crossings, barycentric_by_stellar, crossing_operation, stellar_subdivision};

/// Carrier of every vertex of a subdivision: the smallest base face whose
/// restriction contains it. The carrier of a face is the union of the
/// carriers of its vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CarrierMap {
    map: BTreeMap<VertexId, Face>,
}

impl CarrierMap {
    pub fn new(map: BTreeMap<VertexId, Face>) -> Self {
        CarrierMap { map }
    }

    /// Every vertex carried by itself.
    pub fn identity(c: &SimplicialComplex) -> Self {
        CarrierMap {
            map: c
                .vertices()
                .iter()
                .map(|v| (v.clone(), Face::from_sorted(vec![v.clone()])))
                .collect(),
        }
    }

    pub fn vertex_carrier(&self, v: &VertexId) -> Option<&Face> {
        self.map.get(v)
    }

    pub fn insert(&mut self, v: VertexId, carrier: Face) {
        self.map.insert(v, carrier);
    }

    pub fn carrier(&self, f: &Face) -> Result<Face> {
        let mut out = Face::empty();
        for v in f.vertices() {
            let c = self.map.get(v).ok_or_else(|| Error::MissingCarrier(v.to_string()))?;
            out = out.union(c);
        }
        Ok(out)
    }

    /// Carriers relative to the base of `outer`, for a subdivision of a
    /// subdivision.
    pub fn compose(&self, outer: &CarrierMap) -> Result<CarrierMap> {
        let map = self
            .map
            .iter()
            .map(|(v, c)| Ok((v.clone(), outer.carrier(c)?)))
            .collect::<Result<_>>()?;
        Ok(CarrierMap { map })
    }

    /// Keeps the entries for the vertices of `c`.
    pub fn restrict_to(&self, c: &SimplicialComplex) -> Result<CarrierMap> {
        let map = c
            .vertices()
            .iter()
            .map(|v| {
                self.map
                    .get(v)
                    .map(|f| (v.clone(), f.clone()))
                    .ok_or_else(|| Error::MissingCarrier(v.to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(CarrierMap { map })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &Face)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// A subdivided complex together with its carrier map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub carriers: CarrierMap,
}

impl Subdivision {
    /// The trivial subdivision of a complex.
    pub fn trivial(c: &SimplicialComplex) -> Self {
        Subdivision {
            complex: c.clone(),
            carriers: CarrierMap::identity(c),
        }
    }

    /// Faces whose carrier lies in `f`.
    pub fn restriction(&self, f: &Face) -> Result<SimplicialComplex> {
        restriction(&self.complex, &self.carriers, f)
    }

    pub fn local_h(&self, base: &Face) -> Result<IntPolynomial> {
        local_h(&self.complex, &self.carriers, base)
    }

    /// Replaces the carriers by their images under a coarser subdivision.
    pub fn compose(self, outer: &CarrierMap) -> Result<Self> {
        Ok(Subdivision {
            carriers: self.carriers.compose(outer)?,
            complex: self.complex,
        })
    }
}

/// Subcomplex of the faces of `sub` whose carrier is contained in `f`.
pub fn restriction(sub: &SimplicialComplex, cm: &CarrierMap, f: &Face) -> Result<SimplicialComplex> {
    let mut keep = Vec::new();
    for v in sub.vertices() {
        let c = cm
            .vertex_carrier(v)
            .ok_or_else(|| Error::MissingCarrier(v.to_string()))?;
        if c.is_subset(f) {
            keep.push(v.clone());
        }
    }
    Ok(sub.induced(&keep))
}

/// `ℓ_V(Γ, x) = sum_{F ⊆ V} (-1)^(|V|-|F|) h(Γ_F, x)`.
pub fn local_h(sub: &SimplicialComplex, cm: &CarrierMap, base: &Face) -> Result<IntPolynomial> {
    let n = base.len();
    if n > 20 {
        return Err(Error::Capacity {
            what: "local h base size",
            requested: n,
            limit: 20,
        });
    }
    let mut total = IntPolynomial::zero();
    for mask in 0u32..(1 << n) {
        let f = Face::from_sorted(
            base.vertices()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v.clone())
                .collect(),
        );
        let h = restriction(sub, cm, &f)?.h_polynomial();
        if (n - f.len()).is_multiple_of(2) {
            total = &total + &h;
        } else {
            total = &total - &h;
        }
    }
    Ok(total)
}

/// Barycentric subdivision: one vertex per nonempty face, faces are chains
/// under inclusion, and a chain is carried by its top element.
pub fn barycentric(c: &SimplicialComplex) -> Subdivision {
    if c.is_empty() {
        return Subdivision {
            complex: SimplicialComplex::empty(),
            carriers: CarrierMap::default(),
        };
    }
    let mut chains = Vec::new();
    for facet in c.facets() {
        let verts = facet.vertices().to_vec();
        permutations(verts.len(), &mut |perm| {
            let mut prefix: Vec<VertexId> = Vec::with_capacity(perm.len());
            let mut chain = Vec::with_capacity(perm.len());
            for &i in perm {
                prefix.push(verts[i].clone());
                let mut sorted = prefix.clone();
                sorted.sort();
                chain.push(VertexId::Face(sorted));
            }
            chain.sort();
            chains.push(Face::from_sorted(chain));
        });
    }
    let complex = SimplicialComplex::from_faces(chains);
    let carriers = CarrierMap::new(
        complex
            .vertices()
            .iter()
            .map(|v| match v {
                VertexId::Face(f) => (v.clone(), Face::from_sorted(f.clone())),
                _ => unreachable!("barycentric vertices are face labels"),
            })
            .collect(),
    );
    Subdivision { complex, carriers }
}

fn permutations(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(p, i + 1, f);
            p.swap(i, j);
        }
    }
    let mut p: Vec<usize> = (0..n).collect();
    rec(&mut p, 0, f);
}
