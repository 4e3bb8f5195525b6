use std::collections::HashSet;

use super::{Face, SimplicialComplex};
use crate::error::{Error, Result};

impl SimplicialComplex {
    fn require_edge(&self, e: &Face) -> Result<(u32, u32)> {
        if e.len() != 2 || !self.contains(e) {
            return Err(Error::NotAnEdge(e.to_string()));
        }
        let idx = self.indices_of(e).expect("edge is a face");
        Ok((idx[0], idx[1]))
    }

    /// Identifies the endpoints of `e = {a, b}` with `a < b`: faces avoiding
    /// `b` are kept and `F ↦ (F ∖ b) ∪ a` otherwise.
    pub fn contract_edge(&self, e: &Face) -> Result<Self> {
        let (a, b) = self.require_edge(e)?;
        let sets = self
            .facets
            .iter()
            .map(|f| {
                if !f.contains(&b) {
                    return f.clone();
                }
                let mut g: Vec<u32> = f.iter().copied().filter(|&v| v != b).collect();
                if !g.contains(&a) {
                    g.push(a);
                    g.sort_unstable();
                }
                g
            })
            .collect();
        Ok(Self::from_index_facets(self.vertices.clone(), sets))
    }

    /// `link(e) = link(a) ∩ link(b)`.
    pub fn link_condition(&self, e: &Face) -> Result<bool> {
        let (a, b) = self.require_edge(e)?;
        let le = self.link_face_set(&[a, b]);
        let la = self.link_face_set(&[a]);
        let lb = self.link_face_set(&[b]);
        Ok(la.iter().filter(|f| lb.contains(*f)).count() == le.len()
            && le.iter().all(|f| la.contains(f) && lb.contains(f)))
    }

    /// `link(F) ∩ link(G) = link(F ∪ G)` for all disjoint nonempty `F, G ⊆ U`.
    pub fn strong_link_condition(&self, u: &Face) -> Result<bool> {
        if !self.contains(u) {
            return Err(Error::NotAFace(u.to_string()));
        }
        let idx = self.indices_of(u).expect("face of the complex");
        if idx.len() > 20 {
            return Err(Error::Capacity {
                what: "strong link condition face size",
                requested: idx.len(),
                limit: 20,
            });
        }
        let subset = |mask: usize| -> Vec<u32> {
            idx.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        };
        let links: Vec<HashSet<Vec<u32>>> = (0..1usize << idx.len())
            .map(|m| self.link_face_set(&subset(m)))
            .collect();
        for f in 1..links.len() {
            for g in (f + 1)..links.len() {
                if f & g != 0 {
                    continue;
                }
                let union = &links[f | g];
                let meet = links[f].iter().filter(|h| links[g].contains(*h)).count();
                if meet != union.len() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{face, VertexId};
    use super::*;

    fn cx(facets: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    /// The 3-edge path v1 - u2 - u1 - v2 with v_i = i and u_i = 10 + i.
    fn path() -> SimplicialComplex {
        cx(&[&[1, 12], &[11, 12], &[2, 11]])
    }

    #[test]
    fn contraction_examples() {
        let c = path().contract_edge(&face(&[11, 12])).unwrap();
        assert_eq!(c, cx(&[&[1, 11], &[2, 11]]));
        let bd = SimplicialComplex::simplex_boundary(3);
        assert_eq!(bd.contract_edge(&face(&[1, 2])).unwrap(), cx(&[&[1, 3]]));
        let s3 = SimplicialComplex::simplex(3);
        assert_eq!(s3.contract_edge(&face(&[1, 2])).unwrap(), cx(&[&[1, 3]]));
        assert!(s3.contract_edge(&face(&[1])).is_err());
        assert!(bd.contract_edge(&face(&[1, 4])).is_err());
    }

    #[test]
    fn contraction_removes_larger_endpoint() {
        let c = SimplicialComplex::simplex(4).contract_edge(&face(&[2, 3])).unwrap();
        assert!(c.vertex_index(&VertexId::Int(3)).is_none());
    }

    #[test]
    fn link_condition_examples() {
        let bd = SimplicialComplex::simplex_boundary(3);
        assert!(!bd.link_condition(&face(&[1, 2])).unwrap());
        assert!(SimplicialComplex::simplex(3).link_condition(&face(&[1, 2])).unwrap());
        assert!(path().link_condition(&face(&[11, 12])).unwrap());
    }

    #[test]
    fn strong_link_condition_examples() {
        assert!(path().strong_link_condition(&face(&[11, 12])).unwrap());
        let bd = SimplicialComplex::simplex_boundary(3);
        assert!(!bd.strong_link_condition(&face(&[1, 2])).unwrap());
        assert!(bd.strong_link_condition(&face(&[1])).unwrap());
        assert!(bd.strong_link_condition(&face(&[1, 2, 3])).is_err());
    }
}
