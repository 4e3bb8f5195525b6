//! Finite abstract simplicial complexes.
//!
//! A complex is stored by its facets over a sorted vertex table. Faces are
//! only expanded on demand and cached per size.

mod contraction;
mod face;
mod io;
mod label;
mod shelling;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numbers::binomial_i;
use crate::polynomials::IntPolynomial;

pub use face::{face, Face};
pub use label::VertexId;
pub use shelling::DEFAULT_SHELL_CAP;

/// Face counts `(f_{-1}, f_0, ..., f_{d})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<BigUint>);

impl FVector {
    pub fn new(counts: Vec<BigUint>) -> Self {
        FVector(counts)
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        FVector(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Counts starting at `f_{-1}`.
    pub fn counts(&self) -> &[BigUint] {
        &self.0
    }

    /// `f_i` for `i >= -1`; zero past the top dimension.
    pub fn get(&self, i: isize) -> BigUint {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).cloned())
            .unwrap_or_default()
    }

    /// `sum_{i >= 0} (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.0.iter().skip(1).enumerate().fold(BigInt::zero(), |acc, (i, f)| {
            if i % 2 == 0 {
                acc + BigInt::from(f.clone())
            } else {
                acc - BigInt::from(f.clone())
            }
        })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `sum_j f_{j-1} x^j (1-x)^(n-j)`, expanded coefficientwise.
pub fn h_from_f(f: &[BigInt], n: usize) -> IntPolynomial {
    let mut h = vec![BigInt::zero(); n + 1];
    for (i, hi) in h.iter_mut().enumerate() {
        for j in 0..=i {
            let Some(fj) = f.get(j) else { continue };
            let term = binomial_i(n - j, i - j) * fj;
            if (i - j) % 2 == 0 {
                *hi += term;
            } else {
                *hi -= term;
            }
        }
    }
    IntPolynomial::from_coeffs(h)
}

/// A finite abstract simplicial complex.
///
/// Two distinct degenerate complexes exist: the void complex `{∅}` (one
/// empty facet, no vertices) and the empty complex with no faces at all.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    facets: Vec<Vec<u32>>,
    faces: OnceLock<Vec<Vec<Vec<u32>>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

pub(crate) fn is_sorted_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Drops sets contained in others and sorts the survivors.
fn absorb(mut sets: Vec<Vec<u32>>, nverts: usize) -> Vec<Vec<u32>> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); nverts];
    for s in sets {
        let covered = match s.iter().min_by_key(|&&v| by_vertex[v as usize].len()) {
            None => !kept.is_empty(),
            Some(&v) => by_vertex[v as usize].iter().any(|&i| is_sorted_subset(&s, &kept[i])),
        };
        if !covered {
            for &v in &s {
                by_vertex[v as usize].push(kept.len());
            }
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds the complex generated by the given vertex sets. An empty list
    /// gives the void complex `{∅}`.
    pub fn from_facets<I, F, V>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let faces = facets.into_iter().map(Face::new).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces(faces))
    }

    /// Complex generated by the given faces; no faces gives `{∅}`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        let faces: Vec<Face> = faces.into_iter().collect();
        if faces.is_empty() {
            return Self::void();
        }
        let mut vertices: Vec<VertexId> = faces.iter().flat_map(|f| f.vertices().iter().cloned()).collect();
        vertices.sort();
        vertices.dedup();
        let index: HashMap<&VertexId, u32> = vertices.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let sets = faces
            .iter()
            .map(|f| f.vertices().iter().map(|v| index[v]).collect())
            .collect();
        let nv = vertices.len();
        Self::from_parts(vertices, absorb(sets, nv))
    }

    /// Complex generated by index sets over `vertices`; unused vertices are
    /// dropped. No sets gives the empty complex.
    pub(crate) fn from_index_facets(vertices: Vec<VertexId>, sets: Vec<Vec<u32>>) -> Self {
        let nv = vertices.len();
        let facets = absorb(sets, nv);
        let mut used = vec![false; nv];
        for f in &facets {
            for &v in f {
                used[v as usize] = true;
            }
        }
        if used.iter().all(|&u| u) {
            return Self::from_parts(vertices, facets);
        }
        let mut remap = vec![u32::MAX; nv];
        let mut kept = Vec::new();
        for (i, v) in vertices.into_iter().enumerate() {
            if used[i] {
                remap[i] = kept.len() as u32;
                kept.push(v);
            }
        }
        let facets = facets
            .into_iter()
            .map(|f| f.into_iter().map(|v| remap[v as usize]).collect())
            .collect();
        Self::from_parts(kept, facets)
    }

    fn from_parts(vertices: Vec<VertexId>, facets: Vec<Vec<u32>>) -> Self {
        SimplicialComplex {
            vertices,
            facets,
            faces: OnceLock::new(),
        }
    }

    /// `{∅}`.
    pub fn void() -> Self {
        Self::from_parts(Vec::new(), vec![Vec::new()])
    }

    /// The complex with no faces.
    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new())
    }

    /// The full simplex on the given labels.
    pub fn simplex_on(face: &Face) -> Self {
        Self::from_faces([face.clone()])
    }

    /// The simplex `σ_n` on vertices `1..=n`; `σ_0 = {∅}`.
    pub fn simplex(n: usize) -> Self {
        Self::simplex_on(&face(&(1..=n as i64).collect::<Vec<_>>()))
    }

    /// The boundary of `σ_n`, for `n >= 1`.
    pub fn simplex_boundary(n: usize) -> Self {
        let all: Vec<i64> = (1..=n as i64).collect();
        let ridges = (0..n).map(|skip| {
            let mut r = all.clone();
            r.remove(skip);
            face(&r)
        });
        Self::from_faces(ridges.collect::<Vec<_>>())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn facets(&self) -> impl ExactSizeIterator<Item = Face> + '_ {
        self.facets.iter().map(|f| self.face_of(f))
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub(crate) fn face_of(&self, idx: &[u32]) -> Face {
        Face::from_sorted(idx.iter().map(|&i| self.vertices[i as usize].clone()).collect())
    }

    pub(crate) fn vertex_index(&self, v: &VertexId) -> Option<u32> {
        self.vertices.binary_search(v).ok().map(|i| i as u32)
    }

    pub(crate) fn indices_of(&self, f: &Face) -> Option<Vec<u32>> {
        f.vertices().iter().map(|v| self.vertex_index(v)).collect()
    }

    /// True for the complex with no faces.
    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximal facet dimension; `-1` for `{∅}` and for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains(&self, f: &Face) -> bool {
        match self.indices_of(f) {
            Some(idx) => self.facets.iter().any(|g| is_sorted_subset(&idx, g)),
            None => false,
        }
    }

    fn expanded(&self) -> &Vec<Vec<Vec<u32>>> {
        self.faces.get_or_init(|| {
            let top = self.facets.iter().map(Vec::len).max();
            let Some(top) = top else { return Vec::new() };
            let mut by_size: Vec<HashSet<Vec<u32>>> = vec![HashSet::new(); top + 1];
            for f in &self.facets {
                assert!(f.len() < 40, "face expansion of a facet with {} vertices", f.len());
                for mask in 0u64..(1u64 << f.len()) {
                    let sub: Vec<u32> = f
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect();
                    by_size[sub.len()].insert(sub);
                }
            }
            by_size
                .into_iter()
                .map(|s| {
                    let mut v: Vec<Vec<u32>> = s.into_iter().collect();
                    v.sort();
                    v
                })
                .collect()
        })
    }

    /// Faces of dimension `k` in lexicographic order; empty when out of range.
    pub fn faces_of_dim(&self, k: isize) -> impl Iterator<Item = Face> + '_ {
        let list: &[Vec<u32>] = usize::try_from(k + 1)
            .ok()
            .and_then(|s| self.expanded().get(s))
            .map(Vec::as_slice)
            .unwrap_or(&[]);
        list.iter().map(|f| self.face_of(f))
    }

    /// All faces, by dimension then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.expanded().iter().flatten().map(|f| self.face_of(f))
    }

    pub fn num_faces(&self) -> usize {
        self.expanded().iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> FVector {
        let sizes = self.expanded();
        if sizes.is_empty() {
            return FVector(vec![BigUint::zero()]);
        }
        FVector(sizes.iter().map(|s| BigUint::from(s.len())).collect())
    }

    /// `n = dim + 1`.
    pub fn rank(&self) -> usize {
        (self.dim() + 1) as usize
    }

    /// h-polynomial with `n = dim + 1`. For non-pure input the same
    /// convention is used; callers that care check `is_pure`.
    pub fn h_polynomial(&self) -> IntPolynomial {
        let f: Vec<BigInt> = self.f_vector().0.into_iter().map(BigInt::from).collect();
        h_from_f(&f, self.rank())
    }

    fn require(&self, f: &Face) -> Result<Vec<u32>> {
        match self.indices_of(f) {
            Some(idx) if self.facets.iter().any(|g| is_sorted_subset(&idx, g)) => Ok(idx),
            _ => Err(Error::NotAFace(f.to_string())),
        }
    }

    /// `{G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, f: &Face) -> Result<Self> {
        let idx = self.require(f)?;
        Ok(self.link_idx(&idx))
    }

    pub(crate) fn link_idx(&self, idx: &[u32]) -> Self {
        let sets = self
            .facets
            .iter()
            .filter(|g| is_sorted_subset(idx, g))
            .map(|g| g.iter().copied().filter(|v| !idx.contains(v)).collect())
            .collect();
        Self::from_index_facets(self.vertices.clone(), sets)
    }

    /// Subcomplex generated by the facets containing `f`.
    pub fn star(&self, f: &Face) -> Result<Self> {
        let idx = self.require(f)?;
        let sets = self
            .facets
            .iter()
            .filter(|g| is_sorted_subset(&idx, g))
            .cloned()
            .collect();
        Ok(Self::from_index_facets(self.vertices.clone(), sets))
    }

    /// `{F ∪ G}`; the vertex sets must be disjoint. `{∅}` is the unit.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(v) = self.vertices.iter().find(|v| other.vertex_index(v).is_some()) {
            return Err(Error::NotDisjoint(v.to_string()));
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty());
        }
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in self.facets() {
            for b in other.facets() {
                faces.push(a.union(&b));
            }
        }
        Ok(Self::from_faces(faces))
    }

    /// `apex ∗ Δ`.
    pub fn cone(&self, apex: VertexId) -> Result<Self> {
        let point = Self::simplex_on(&Face::from_sorted(vec![apex]));
        point.join(self)
    }

    /// Complex generated by the ridges lying in exactly one facet; `{∅}` when
    /// there are none. Requires a pure complex.
    pub fn boundary(&self) -> Result<Self> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        if self.is_empty() {
            return Ok(Self::empty());
        }
        let mut count: HashMap<Vec<u32>, usize> = HashMap::new();
        for f in &self.facets {
            for skip in 0..f.len() {
                let mut r = f.clone();
                r.remove(skip);
                *count.entry(r).or_default() += 1;
            }
        }
        let ridges: Vec<Vec<u32>> = count.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
        if ridges.is_empty() {
            return Ok(Self::void());
        }
        Ok(Self::from_index_facets(self.vertices.clone(), ridges))
    }

    /// `sum_{F interior} x^|F| (1-x)^(n-|F|)`.
    pub fn interior_h_polynomial(&self) -> Result<IntPolynomial> {
        let bd = self.boundary()?.f_vector();
        let f: Vec<BigInt> = self
            .f_vector()
            .0
            .iter()
            .enumerate()
            .map(|(i, c)| BigInt::from(c.clone()) - BigInt::from(bd.get(i as isize - 1)))
            .collect();
        Ok(h_from_f(&f, self.rank()))
    }

    /// Induced subcomplex on the given labels (labels not present are ignored).
    pub fn induced(&self, keep: &[VertexId]) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        let mut mask = vec![false; self.vertices.len()];
        for v in keep {
            if let Some(i) = self.vertex_index(v) {
                mask[i as usize] = true;
            }
        }
        self.induced_by_mask(&mask)
    }

    pub(crate) fn induced_by_mask(&self, mask: &[bool]) -> Self {
        let sets = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|&v| mask[v as usize]).collect())
            .collect();
        Self::from_index_facets(self.vertices.clone(), sets)
    }

    /// Applies an injective relabeling.
    pub fn relabel(&self, map: impl Fn(&VertexId) -> VertexId) -> Result<Self> {
        let new: Vec<VertexId> = self.vertices.iter().map(&map).collect();
        let mut sorted = new.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "relabeling is not injective at {}",
                w[0]
            )));
        }
        if self.is_empty() {
            return Ok(Self::empty());
        }
        let faces = self
            .facets
            .iter()
            .map(|f| {
                let mut v: Vec<VertexId> = f.iter().map(|&i| new[i as usize].clone()).collect();
                v.sort();
                Face::from_sorted(v)
            })
            .collect::<Vec<_>>();
        Ok(Self::from_faces(faces))
    }

    /// All faces of the link of `idx`, as index sets.
    pub(crate) fn link_face_set(&self, idx: &[u32]) -> HashSet<Vec<u32>> {
        let mut out = HashSet::new();
        for g in self.facets.iter().filter(|g| is_sorted_subset(idx, g)) {
            let rest: Vec<u32> = g.iter().copied().filter(|v| !idx.contains(v)).collect();
            for mask in 0u64..(1u64 << rest.len()) {
                out.insert(
                    rest.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        out
    }
}
