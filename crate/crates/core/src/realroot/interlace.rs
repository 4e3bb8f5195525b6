use serde::Serialize;

use super::sturm::{is_real_rooted, isolate_squarefree, multiplicity_in, SturmChain};
use crate::error::{Error, Result};
use crate::polynomials::IntPolynomial;

/// Result of an interlacing test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterlaceOutcome {
    pub holds: bool,
    /// Distinct real roots common to both polynomials.
    pub shared_roots: usize,
}

fn require_real_rooted(p: &IntPolynomial) -> Result<()> {
    if is_real_rooted(p) {
        Ok(())
    } else {
        Err(Error::NotRealRooted(p.to_string()))
    }
}

/// Real roots of `p` with multiplicity, as positions in the increasing list
/// of distinct roots of `p q`, largest first.
fn ranks(
    p: &IntPolynomial,
    intervals: &[(num_rational::BigRational, num_rational::BigRational)],
) -> Result<Vec<usize>> {
    let factors = p.squarefree_decomposition();
    let chains: Vec<SturmChain> = factors.iter().map(SturmChain::new).collect();
    let mut out = Vec::new();
    for (i, (lo, hi)) in intervals.iter().enumerate().rev() {
        let m = multiplicity_in(&factors, &chains, lo, hi)?;
        out.extend(std::iter::repeat_n(i, m));
    }
    Ok(out)
}

/// Decides whether `p` interlaces `q`: with roots `α_1 ≥ α_2 ≥ ...` of `p`
/// and `β_1 ≥ β_2 ≥ ...` of `q`, `... ≤ α_2 ≤ β_2 ≤ α_1 ≤ β_1`.
///
/// The zero polynomial interlaces and is interlaced by everything, and a
/// nonzero constant interlaces polynomials of degree at most one. Roots are
/// compared exactly by isolating the squarefree part of `p q`, so common
/// roots need no numerical separation.
pub fn interlaces(p: &IntPolynomial, q: &IntPolynomial) -> Result<InterlaceOutcome> {
    require_real_rooted(p)?;
    require_real_rooted(q)?;
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Ok(InterlaceOutcome {
            holds: true,
            shared_roots: 0,
        });
    };
    let g = (p * q).squarefree_part();
    let chain = SturmChain::new(&g);
    let intervals = isolate_squarefree(&g, &chain)?;
    let alpha = ranks(p, &intervals)?;
    let beta = ranks(q, &intervals)?;
    let mut shared: Vec<usize> = alpha.iter().filter(|a| beta.contains(a)).copied().collect();
    shared.dedup();
    let shared_roots = shared.len();
    if dq < dp || dq > dp + 1 {
        return Ok(InterlaceOutcome {
            holds: false,
            shared_roots,
        });
    }
    let holds = (0..alpha.len()).all(|k| beta[k] >= alpha[k] && beta.get(k + 1).is_none_or(|b| alpha[k] >= *b));
    Ok(InterlaceOutcome { holds, shared_roots })
}

/// `p_i` interlaces `p_j` for every `i < j`.
pub fn is_interlacing_sequence(ps: &[IntPolynomial]) -> Result<bool> {
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if !interlaces(&ps[i], &ps[j])?.holds {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks only consecutive pairs and the first against the last, which
/// suffices for an interlacing sequence.
pub fn is_interlacing_sequence_fast(ps: &[IntPolynomial]) -> Result<bool> {
    for w in ps.windows(2) {
        if !interlaces(&w[0], &w[1])?.holds {
            return Ok(false);
        }
    }
    if ps.len() > 2 {
        return Ok(interlaces(&ps[0], &ps[ps.len() - 1])?.holds);
    }
    Ok(true)
}
