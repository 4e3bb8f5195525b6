use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::interlace::interlaces;
use super::sequences::{g_vector, gamma_vector, is_m_sequence, peak_in_middle};
use super::sturm::{is_real_rooted, isolate, RootInterval};
use crate::error::{Error, Result};
use crate::polynomials::families::{bar_polys, check_memo_cap, ell_a, h_a, h_a_boundary, theta_a};
use crate::polynomials::{symmetric_decomposition, IntPolynomial};

/// Statements that can be swept over `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `h_A(σ_n)` is real-rooted with a nonnegative, real-rooted and
    /// interlacing symmetric decomposition with respect to `n - 1`.
    ThmA,
    /// `h_A(σ_n)` interlaces `h_A(σ_{n+1})`.
    InterlaceChain,
    /// `h_A(σ_{n-1})` interlaces `θ_A(σ_n)`.
    ConjThetaA,
    /// `p̄_A(σ_n)` is real-rooted, interlaces `p̄_A(σ_{n+1})` and is
    /// γ-positive.
    ConjBarp,
    /// The same for `ℓ_A(σ_n)` and for `ℓ̄_A(σ_n)`.
    ConjEllA,
    /// h-vectors of `sd_A(σ_n)` and `sd_A(∂σ_n)` are unimodal with a middle
    /// peak and their g-vectors are M-sequences.
    PeakPosition,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::ThmA,
        Claim::InterlaceChain,
        Claim::ConjThetaA,
        Claim::ConjBarp,
        Claim::ConjEllA,
        Claim::PeakPosition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::ThmA => "thmA",
            Claim::InterlaceChain => "interlace_chain",
            Claim::ConjThetaA => "conj_thetaA",
            Claim::ConjBarp => "conj_barp",
            Claim::ConjEllA => "conj_ellA",
            Claim::PeakPosition => "peak_position",
        }
    }

    /// Largest `n` the claim touches for instance `n`.
    fn reach(self, n: usize) -> usize {
        match self {
            Claim::InterlaceChain | Claim::ConjBarp | Claim::ConjEllA => n + 1,
            _ => n,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown claim `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Capacity,
}

/// Isolating intervals of one polynomial involved in a failing instance.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub label: String,
    pub polynomial: IntPolynomial,
    pub intervals: Vec<RootInterval>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub n: usize,
    pub status: Status,
    /// Which sub-checks failed.
    pub failures: Vec<String>,
    /// Interlacing pairs that share a root, for the record.
    pub coincident_roots: usize,
    pub witness: Vec<Witness>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub n_min: usize,
    pub n_max: usize,
    pub instances: Vec<InstanceReport>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.instances.iter().all(|i| i.status == Status::Holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceReport> {
        self.instances.iter().filter(|i| i.status == Status::Fails)
    }
}

/// Accumulates the outcome of the sub-checks of one instance.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    coincident: usize,
    involved: Vec<(String, IntPolynomial)>,
}

impl Checks {
    fn involve(&mut self, label: &str, p: &IntPolynomial) {
        self.involved.push((label.to_string(), p.clone()));
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn real_rooted(&mut self, label: &str, p: &IntPolynomial) {
        self.involve(label, p);
        self.require(is_real_rooted(p), format!("{label} is not real-rooted"));
    }

    fn interlace(&mut self, a_label: &str, a: &IntPolynomial, b_label: &str, b: &IntPolynomial) {
        self.involve(a_label, a);
        self.involve(b_label, b);
        match interlaces(a, b) {
            Ok(o) => {
                if o.shared_roots > 0 {
                    self.coincident += 1;
                }
                self.require(o.holds, format!("{a_label} does not interlace {b_label}"));
            }
            Err(e) => self.failures.push(format!("{a_label} vs {b_label}: {e}")),
        }
    }

    fn gamma_positive(&mut self, label: &str, p: &IntPolynomial, n: usize) {
        match gamma_vector(p, n) {
            Ok(g) => self.require(
                g.iter().all(|c| c.sign() != num_bigint::Sign::Minus),
                format!("{label} is not γ-positive"),
            ),
            Err(e) => self.failures.push(format!("{label}: {e}")),
        }
    }
}

fn check_thm_a(n: usize, c: &mut Checks) -> Result<()> {
    let p = h_a(n);
    c.real_rooted("h_A(n)", &p);
    let d = symmetric_decomposition(&p, n - 1)?;
    c.require(d.is_nonnegative(), "symmetric decomposition has a negative coefficient");
    c.real_rooted("a", &d.a);
    c.real_rooted("b", &d.b);
    let rev = p.reverse(n - 1)?;
    c.interlace("x^(n-1) h_A(n, 1/x)", &rev, "h_A(n)", &p);
    c.interlace("b", &d.b, "a", &d.a);
    Ok(())
}

fn check_chain(n: usize, c: &mut Checks) -> Result<()> {
    let p = h_a(n);
    let q = h_a(n + 1);
    c.real_rooted("h_A(n)", &p);
    c.interlace("h_A(n)", &p, "h_A(n+1)", &q);
    Ok(())
}

fn check_theta(n: usize, c: &mut Checks) -> Result<()> {
    let p = h_a(n - 1);
    let t = theta_a(n);
    c.real_rooted("theta_A(n)", &t);
    c.interlace("h_A(n-1)", &p, "theta_A(n)", &t);
    Ok(())
}

fn check_barp(n: usize, c: &mut Checks) -> Result<()> {
    let (p, _) = bar_polys(n)?;
    let (q, _) = bar_polys(n + 1)?;
    c.real_rooted("pbar(n)", &p);
    c.interlace("pbar(n)", &p, "pbar(n+1)", &q);
    c.gamma_positive("pbar(n)", &p, n.saturating_sub(1));
    Ok(())
}

fn check_ell(n: usize, c: &mut Checks) -> Result<()> {
    let (l, lq) = (ell_a(n), ell_a(n + 1));
    c.real_rooted("ell_A(n)", &l);
    c.interlace("ell_A(n)", &l, "ell_A(n+1)", &lq);
    c.gamma_positive("ell_A(n)", &l, n);
    let (_, lb) = bar_polys(n)?;
    let (_, lbq) = bar_polys(n + 1)?;
    c.real_rooted("ellbar(n)", &lb);
    c.interlace("ellbar(n)", &lb, "ellbar(n+1)", &lbq);
    c.gamma_positive("ellbar(n)", &lb, n);
    Ok(())
}

fn check_peak(n: usize, c: &mut Checks) -> Result<()> {
    for (label, h, rank) in [("h(sd_A(σ_n))", h_a(n), n), ("h(sd_A(∂σ_n))", h_a_boundary(n), n - 1)] {
        c.involve(label, &h);
        c.require(peak_in_middle(&h, rank), format!("{label} has no middle peak"));
        let m = is_m_sequence(&g_vector(&h, rank));
        c.require(
            m.holds,
            format!("g-vector of {label}: {}", m.reason.unwrap_or_default()),
        );
    }
    Ok(())
}

fn run_instance(claim: Claim, n: usize) -> InstanceReport {
    let start = Instant::now();
    let mut c = Checks::default();
    let outcome = check_memo_cap(claim.reach(n)).and_then(|_| match claim {
        Claim::ThmA => check_thm_a(n, &mut c),
        Claim::InterlaceChain => check_chain(n, &mut c),
        Claim::ConjThetaA => check_theta(n, &mut c),
        Claim::ConjBarp => check_barp(n, &mut c),
        Claim::ConjEllA => check_ell(n, &mut c),
        Claim::PeakPosition => check_peak(n, &mut c),
    });
    let status = match &outcome {
        Err(e) if e.is_capacity() => Status::Capacity,
        Err(e) => {
            c.failures.push(e.to_string());
            Status::Fails
        }
        Ok(()) if c.failures.is_empty() => Status::Holds,
        Ok(()) => Status::Fails,
    };
    let witness = if status == Status::Fails {
        c.involved
            .iter()
            .map(|(label, p)| Witness {
                label: label.clone(),
                polynomial: p.clone(),
                intervals: isolate(p).map(|i| i.intervals).unwrap_or_default(),
            })
            .collect()
    } else {
        Vec::new()
    };
    InstanceReport {
        n,
        status,
        failures: c.failures,
        coincident_roots: c.coincident,
        witness,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Checks `claim` for every `n` in `n_min..=n_max`, in parallel. Instances
/// start at `n = 1` for every claim.
pub fn verify(claim: Claim, n_min: usize, n_max: usize) -> Result<VerificationReport> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidArgument(format!("bad range {n_min}..={n_max}")));
    }
    check_memo_cap(claim.reach(n_max))?;
    let start = Instant::now();
    let instances = (n_min..=n_max)
        .into_par_iter()
        .map(|n| run_instance(claim, n))
        .collect();
    Ok(VerificationReport {
        claim,
        n_min,
        n_max,
        instances,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert!("nope".parse::<Claim>().is_err());
        assert_eq!(serde_json::to_string(&Claim::ConjThetaA).unwrap(), "\"conj_thetaA\"");
    }

    #[test]
    fn small_sweeps_hold() {
        for c in Claim::ALL {
            let r = verify(c, 1, 8).unwrap();
            assert!(r.all_hold(), "{c}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn thm_a_at_two() {
        let d = symmetric_decomposition(&h_a(2), 1).unwrap();
        assert_eq!(d.a, IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(d.b, IntPolynomial::from_i64s(&[1]));
        assert_eq!(verify(Claim::ThmA, 2, 2).unwrap().instances[0].status, Status::Holds);
    }

    #[test]
    fn capacity_is_reported() {
        assert!(verify(Claim::ConjEllA, 1, 64).unwrap_err().is_capacity());
        assert!(verify(Claim::ThmA, 0, 3).is_err());
    }

    #[test]
    fn failing_instance_carries_witness() {
        let mut c = Checks::default();
        c.real_rooted("p", &IntPolynomial::from_i64s(&[1, 1, 1]));
        assert_eq!(c.failures.len(), 1);
    }
}
