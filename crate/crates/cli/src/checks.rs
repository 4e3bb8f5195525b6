use std::fs;

use antiprism_core::complex::DEFAULT_SHELL_CAP;
use antiprism_core::enumeration::{
    bijection_check_evenblocks, bijection_check_halfblocks, c_recurrence, excedance_prefix_counts,
    multipointed_full_counts, multipointed_partial_counts, proper_multipointed_counts, proper_partial_counts,
    theta_colored_counts, transform_colored_counts, DEFAULT_ENUM_CAP, DEFAULT_STREAM_CAP,
};
use antiprism_core::polynomials::families::{bar_polys, ell_a, ell_a_closed, h_a, h_a_closed, q_a, theta_a, MEMO_CAP};
use antiprism_core::polynomials::{IntPolynomial, TransformTable};
use antiprism_core::realroot::{verify, Claim, Status, VerificationReport};
use antiprism_core::subdivision::{antiprism_by_crossings, antiprism_from_partitions, antiprism_triangulation};
use antiprism_core::{face, SimplicialComplex};
use anyhow::{bail, Context, Result};
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Global, InfoArgs, NMax, VerifyArgs};
use crate::output::{emit, Csv};
use crate::Failed;

/// Largest n for which `crosscheck` builds `sd_A(σ_n)` three ways.
const CONSTRUCTION_CAP: usize = 6;

pub fn run_verify(g: &Global, a: &VerifyArgs) -> Result<()> {
    let claims: Vec<Claim> = if a.claim.eq_ignore_ascii_case("all") {
        Claim::ALL.to_vec()
    } else {
        vec![a.claim.parse()?]
    };
    let reports = claims
        .iter()
        .map(|&c| verify(c, a.n_min, a.range.n_max))
        .collect::<Result<Vec<VerificationReport>, _>>()?;
    emit(g, &reports, || Csv {
        header: ["claim", "n", "status", "coincident_roots", "failures", "elapsed_ms"]
            .map(String::from)
            .to_vec(),
        rows: reports
            .iter()
            .flat_map(|r| {
                r.instances.iter().map(move |i| {
                    vec![
                        r.claim.to_string(),
                        i.n.to_string(),
                        format!("{:?}", i.status).to_lowercase(),
                        i.coincident_roots.to_string(),
                        i.failures.join("; "),
                        i.elapsed_ms.to_string(),
                    ]
                })
            })
            .collect(),
    })?;
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.instances
                .iter()
                .filter(|i| i.status == Status::Fails)
                .map(move |i| format!("{} at n = {}", r.claim, i.n))
        })
        .collect();
    if !failed.is_empty() {
        bail!(Failed(format!("claim fails: {}", failed.join(", "))));
    }
    Ok(())
}

#[derive(Serialize)]
struct Check {
    check: &'static str,
    n: usize,
    ok: bool,
    detail: String,
}

fn as_poly(v: &[BigUint]) -> IntPolynomial {
    IntPolynomial::from_coeffs(v.iter().cloned().map(BigInt::from).collect())
}

fn compare(check: &'static str, n: usize, a: &IntPolynomial, b: &IntPolynomial) -> Check {
    Check {
        check,
        n,
        ok: a == b,
        detail: if a == b { a.to_string() } else { format!("{a} != {b}") },
    }
}

fn flag(check: &'static str, n: usize, ok: bool, detail: String) -> Check {
    Check { check, n, ok, detail }
}

fn enumeration_checks(n: usize, cap: usize) -> Result<Vec<Check>> {
    let mut out = vec![
        compare(
            "proper partial partitions = h_A",
            n,
            &as_poly(&proper_partial_counts(n, cap).values),
            &h_a(n),
        ),
        compare(
            "proper partitions = ell_A",
            n,
            &as_poly(&proper_multipointed_counts(n, cap).values),
            &ell_a(n),
        ),
        compare(
            "multi-pointed partitions = q_A",
            n,
            &as_poly(&multipointed_full_counts(n, cap).values),
            &IntPolynomial::from_coeffs((0..=n).map(|k| BigInt::from(q_a(n, k))).collect()),
        ),
        compare("h_A closed form", n, &h_a_closed(n), &h_a(n)),
        compare("ell_A closed form", n, &ell_a_closed(n), &ell_a(n)),
    ];
    let table = TransformTable::new(n);
    for k in 0..=n {
        let colored = as_poly(&transform_colored_counts(n, k, cap)?);
        let row = IntPolynomial::from_coeffs((0..=n).map(|j| table.p(n, k, j)).collect());
        out.push(compare("colored partitions = p_A(n,k,·)", n, &colored, &row));
        let half = bijection_check_halfblocks(n, k, cap)?;
        out.push(flag(
            "half-block bijection",
            n,
            half.holds,
            format!("k = {k}: {} to {}", half.sources, half.targets),
        ));
        let even = bijection_check_evenblocks(n, k, cap)?;
        out.push(flag(
            "even-block bijection",
            n,
            even.holds,
            format!("k = {k}: {} to {}", even.sources, even.targets),
        ));
    }
    if n >= 1 {
        let exc = excedance_prefix_counts(n, cap)?;
        let (pbar, lbar) = bar_polys(n)?;
        out.push(compare("excedance counts = pbar", n, &as_poly(&exc.c), &pbar));
        out.push(compare(
            "excedance recurrence = pbar",
            n,
            &as_poly(&c_recurrence(n)[n]),
            &pbar,
        ));
        out.push(compare(
            "derangement excedance counts = ellbar",
            n,
            &as_poly(&exc.d),
            &lbar,
        ));
        out.push(compare(
            "colored partitions = theta_A",
            n,
            &as_poly(&theta_colored_counts(n, cap)?),
            &theta_a(n),
        ));
    }
    Ok(out)
}

fn construction_checks(n: usize, cap: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, c) in [
        ("σ_n", SimplicialComplex::simplex(n)),
        ("∂σ_n", SimplicialComplex::simplex_boundary(n)),
    ] {
        let sd = antiprism_triangulation(&c);
        let parts = antiprism_from_partitions(&c)?;
        let crossings = antiprism_by_crossings(&c)?;
        let facets = sd.complex.facet_count();
        out.push(flag(
            "partition model = clique complex",
            n,
            parts == sd.complex,
            format!("{name}: {facets} facets"),
        ));
        out.push(flag(
            "crossings = clique complex",
            n,
            crossings == sd.complex,
            format!("{name}: {facets} facets"),
        ));
    }
    let sd = antiprism_triangulation(&SimplicialComplex::simplex(n));
    out.push(compare("h(sd_A(σ_n)) = h_A", n, &sd.complex.h_polynomial(), &h_a(n)));
    let base = face(&(1..=n as i64).collect::<Vec<_>>());
    out.push(compare("local h(sd_A(σ_n)) = ell_A", n, &sd.local_h(&base)?, &ell_a(n)));
    let f = sd.complex.f_vector();
    out.push(compare(
        "f(sd_A(σ_n)) = partial partition counts",
        n,
        &as_poly(f.counts()),
        &as_poly(&multipointed_partial_counts(n, cap).values),
    ));
    Ok(out)
}

pub fn crosscheck(g: &Global, a: &NMax) -> Result<()> {
    let n_max = a.n_max;
    if n_max > g.enum_cap {
        return Err(antiprism_core::Error::Capacity {
            what: "crosscheck size (raise --enum-cap)",
            requested: n_max,
            limit: g.enum_cap,
        }
        .into());
    }
    let per_n = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut v = enumeration_checks(n, g.enum_cap)?;
            if (1..=CONSTRUCTION_CAP).contains(&n) {
                v.extend(construction_checks(n, g.enum_cap)?);
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let checks: Vec<Check> = per_n.into_iter().flatten().collect();
    emit(g, &checks, || Csv {
        header: ["check", "n", "ok", "detail"].map(String::from).to_vec(),
        rows: checks
            .iter()
            .map(|c| vec![c.check.to_string(), c.n.to_string(), c.ok.to_string(), c.detail.clone()])
            .collect(),
    })?;
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.ok)
        .map(|c| format!("{} (n = {})", c.check, c.n))
        .collect();
    if !bad.is_empty() {
        bail!(Failed(format!("mismatches: {}", bad.join(", "))));
    }
    Ok(())
}

#[derive(Serialize)]
struct Limits {
    version: &'static str,
    enum_cap: usize,
    default_enum_cap: usize,
    stream_cap: usize,
    shell_cap: usize,
    default_shell_cap: usize,
    memo_cap: usize,
    construction_cap: usize,
    claims: Vec<String>,
}

#[derive(Serialize)]
struct Description {
    dim: isize,
    vertices: usize,
    facets: usize,
    pure: bool,
    f_vector: Vec<String>,
    h_vector: Vec<String>,
    euler_characteristic: String,
    /// `null` when the search is over the facet cap or the complex is not pure.
    shellable: Option<bool>,
}

pub fn info(g: &Global, a: &InfoArgs) -> Result<()> {
    let Some(path) = &a.input else {
        let limits = Limits {
            version: env!("CARGO_PKG_VERSION"),
            enum_cap: g.enum_cap,
            default_enum_cap: DEFAULT_ENUM_CAP,
            stream_cap: DEFAULT_STREAM_CAP,
            shell_cap: g.shell_cap,
            default_shell_cap: DEFAULT_SHELL_CAP,
            memo_cap: MEMO_CAP,
            construction_cap: CONSTRUCTION_CAP,
            claims: Claim::ALL.iter().map(ToString::to_string).collect(),
        };
        return emit(g, &limits, || Csv {
            header: vec!["setting".into(), "value".into()],
            rows: vec![
                vec!["version".into(), limits.version.into()],
                vec!["enum_cap".into(), limits.enum_cap.to_string()],
                vec!["stream_cap".into(), limits.stream_cap.to_string()],
                vec!["shell_cap".into(), limits.shell_cap.to_string()],
                vec!["memo_cap".into(), limits.memo_cap.to_string()],
                vec!["construction_cap".into(), limits.construction_cap.to_string()],
                vec!["claims".into(), limits.claims.join(" ")],
            ],
        });
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let c = SimplicialComplex::parse_facet_list(&text)?;
    let shellable = match c.is_shellable(g.shell_cap) {
        Ok(order) => Some(order.is_some()),
        Err(e) if e.is_capacity() || matches!(e, antiprism_core::Error::NotPure) => None,
        Err(e) => return Err(e.into()),
    };
    let f = c.f_vector();
    let d = Description {
        dim: c.dim(),
        vertices: c.vertices().len(),
        facets: c.facet_count(),
        pure: c.is_pure(),
        f_vector: f.counts().iter().map(ToString::to_string).collect(),
        h_vector: c
            .h_polynomial()
            .padded(c.rank())
            .iter()
            .map(ToString::to_string)
            .collect(),
        euler_characteristic: f.euler_characteristic().to_string(),
        shellable,
    };
    emit(g, &d, || Csv {
        header: vec!["property".into(), "value".into()],
        rows: vec![
            vec!["dim".into(), d.dim.to_string()],
            vec!["vertices".into(), d.vertices.to_string()],
            vec!["facets".into(), d.facets.to_string()],
            vec!["pure".into(), d.pure.to_string()],
            vec!["f_vector".into(), d.f_vector.join(" ")],
            vec!["h_vector".into(), d.h_vector.join(" ")],
            vec!["euler_characteristic".into(), d.euler_characteristic.clone()],
            vec![
                "shellable".into(),
                d.shellable.map_or("unknown".into(), |s| s.to_string()),
            ],
        ],
    })
}
