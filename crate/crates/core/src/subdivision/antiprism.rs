use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::{CarrierMap, Subdivision};
use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::enumeration::{
    check_cap, mask_elems, multipointed_masks_of, MultiPointedOrderedPartition, OrderedSetPartition, DEFAULT_STREAM_CAP,
};
use crate::error::{Error, Result};

/// A pair `(F, v)` with `F` a nonempty face and `v ∈ F`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointedFace {
    face: Face,
    point: VertexId,
}

impl PointedFace {
    pub fn new(face: Face, point: VertexId) -> Result<Self> {
        if !face.contains(&point) {
            return Err(Error::InvalidArgument(format!("{point} is not a vertex of {face}")));
        }
        Ok(PointedFace { face, point })
    }

    pub fn face(&self) -> &Face {
        &self.face
    }

    pub fn point(&self) -> &VertexId {
        &self.point
    }

    pub fn label(&self) -> VertexId {
        VertexId::pointed(self.face.vertices().to_vec(), self.point.clone())
    }

    /// Inverse of [`PointedFace::label`].
    pub fn from_label(v: &VertexId) -> Option<Self> {
        match v {
            VertexId::Pointed(f, p) => PointedFace::new(Face::new(f.iter().cloned()).ok()?, (**p).clone()).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for PointedFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.face, self.point)
    }
}

/// Adjacency in the graph whose clique complex is `sd_A(Δ)`: equal faces,
/// or strictly nested faces where the point of the larger one avoids the
/// smaller one.
pub fn antiprism_adjacent(p: &PointedFace, q: &PointedFace) -> bool {
    if p == q {
        return false;
    }
    if p.face == q.face {
        return true;
    }
    let nested = |small: &PointedFace, large: &PointedFace| {
        small.face.len() < large.face.len() && small.face.is_subset(&large.face) && !small.face.contains(&large.point)
    };
    nested(p, q) || nested(q, p)
}

fn pointed_faces(c: &SimplicialComplex) -> Vec<PointedFace> {
    let mut out: Vec<PointedFace> = c
        .faces()
        .filter(|f| !f.is_empty())
        .flat_map(|f| {
            f.vertices()
                .iter()
                .map(|v| PointedFace {
                    face: f.clone(),
                    point: v.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by_key(PointedFace::label);
    out
}

/// Carriers read off pointed-face labels: `(F, v)` is carried by `F`.
/// Other labels get no carrier.
pub fn pointed_carriers(complex: &SimplicialComplex) -> CarrierMap {
    let mut cm = CarrierMap::default();
    for v in complex.vertices() {
        if let Some(p) = PointedFace::from_label(v) {
            cm.insert(v.clone(), p.face);
        }
    }
    cm
}

/// `sd_A(Δ)` as the clique complex of the pointed-face graph.
pub fn antiprism_triangulation(c: &SimplicialComplex) -> Subdivision {
    if c.is_empty() {
        return Subdivision {
            complex: SimplicialComplex::empty(),
            carriers: CarrierMap::default(),
        };
    }
    let nodes = pointed_faces(c);
    let n = nodes.len();
    let adj: Vec<FixedBitSet> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(n);
            for j in 0..n {
                if antiprism_adjacent(&nodes[i], &nodes[j]) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let mut cliques: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut p = FixedBitSet::with_capacity(n);
            let mut x = FixedBitSet::with_capacity(n);
            for w in adj[v].ones() {
                if w > v {
                    p.insert(w);
                } else {
                    x.insert(w);
                }
            }
            let mut out = Vec::new();
            bron_kerbosch(&adj, &mut vec![v as u32], p, x, &mut out);
            out
        })
        .collect();
    cliques.sort();
    let complex = if cliques.is_empty() {
        SimplicialComplex::void()
    } else {
        let labels = nodes.iter().map(PointedFace::label).collect();
        SimplicialComplex::from_index_facets(labels, cliques)
    };
    let carriers = pointed_carriers(&complex);
    Subdivision { complex, carriers }
}

/// Maximal cliques extending `r` inside `p`, excluding those meeting `x`.
fn bron_kerbosch(adj: &[FixedBitSet], r: &mut Vec<u32>, p: FixedBitSet, mut x: FixedBitSet, out: &mut Vec<Vec<u32>>) {
    if p.is_clear() {
        if x.is_clear() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| adj[u].intersection(&p).count())
        .expect("p is nonempty");
    let mut p = p;
    let candidates: Vec<usize> = p.difference(&adj[pivot]).collect();
    for v in candidates {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        r.push(v as u32);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Vertex set `{(B_1 ∪ ... ∪ B_i, v) : v ∈ C_i}` of a multi-pointed ordered
/// partition given by masks over `verts`.
fn partition_face(verts: &[VertexId], blocks: &[u64], chosen: &[u64]) -> Face {
    let mut prefix = 0u64;
    let mut out = Vec::new();
    for (&b, &c) in blocks.iter().zip(chosen) {
        prefix |= b;
        let f: Vec<VertexId> = mask_elems(prefix).into_iter().map(|i| verts[i - 1].clone()).collect();
        for i in mask_elems(c) {
            out.push(VertexId::pointed(f.clone(), verts[i - 1].clone()));
        }
    }
    out.sort();
    Face::new(out).expect("pointed labels are distinct")
}

fn check_faces(c: &SimplicialComplex) -> Result<()> {
    let widest = c.facets().map(|f| f.len()).max().unwrap_or(0);
    check_cap("antiprism face size", widest, DEFAULT_STREAM_CAP)
}

/// Every face of `sd_A(Δ)` with the multi-pointed ordered partition that
/// produces it. The carrier of the face is the ground set of the partition.
pub fn antiprism_partition_faces(c: &SimplicialComplex) -> Result<Vec<(MultiPointedOrderedPartition<VertexId>, Face)>> {
    check_faces(c)?;
    let mut out = Vec::new();
    for f in c.faces().filter(|f| !f.is_empty()) {
        let verts = f.vertices();
        let all = (1u64 << verts.len()) - 1;
        for (blocks, chosen) in multipointed_masks_of(all, false) {
            let elems = |m: u64| {
                mask_elems(m)
                    .into_iter()
                    .map(|i| verts[i - 1].clone())
                    .collect::<Vec<_>>()
            };
            let pi = OrderedSetPartition::new(blocks.iter().map(|&b| elems(b)).collect())?;
            let m = MultiPointedOrderedPartition::new(pi, chosen.iter().map(|&b| elems(b)).collect())?;
            out.push((m, partition_face(verts, &blocks, &chosen)));
        }
    }
    Ok(out)
}

/// `sd_A(Δ)` built directly from multi-pointed ordered partitions of the
/// faces of `Δ`.
pub fn antiprism_from_partitions(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    if c.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    check_faces(c)?;
    let faces: Vec<Face> = c
        .faces()
        .filter(|f| !f.is_empty())
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map_iter(|f| {
            let verts = f.vertices().to_vec();
            let all = (1u64 << verts.len()) - 1;
            multipointed_masks_of(all, false).map(move |(b, ch)| partition_face(&verts, &b, &ch))
        })
        .collect();
    Ok(SimplicialComplex::from_faces(faces))
}
