use antiprism_core::enumeration::{
    c_recurrence, excedance_prefix_counts, multipointed_full_counts, multipointed_partial_counts,
    proper_multipointed_counts, proper_partial_counts, Counts, Provenance,
};
use antiprism_core::polynomials::families::{
    bar_polys, binomial_eulerian, check_memo_cap, derangement, ell_a, eulerian, h_a, h_a_boundary, q_a, q_nr, theta_a,
};
use antiprism_core::polynomials::{IntPolynomial, TransformTable};
use anyhow::Result;
use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{CountArgs, CountKind, Global, TableArgs, TableKind};
use crate::output::{emit, Csv};

#[derive(Serialize)]
struct Row {
    n: usize,
    /// `r` for `q_{n,r}`, `k` for `p_A(n,k,·)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    coefficients: IntPolynomial,
}

#[derive(Serialize)]
struct Table {
    table: String,
    rows: Vec<Row>,
}

pub fn value_name<V: ValueEnum>(v: V) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn plain(n: usize, p: IntPolynomial) -> Row {
    Row {
        n,
        index: None,
        coefficients: p,
    }
}

fn rows(kind: TableKind, n_max: usize) -> Result<Vec<Row>> {
    let from = |lo: usize, f: fn(usize) -> IntPolynomial| -> Vec<Row> {
        (lo..=n_max).into_par_iter().map(|n| plain(n, f(n))).collect()
    };
    Ok(match kind {
        TableKind::H => from(0, h_a),
        TableKind::Ell => from(0, ell_a),
        TableKind::HBoundary => from(1, h_a_boundary),
        TableKind::Theta => from(1, theta_a),
        TableKind::Eulerian => from(1, eulerian),
        TableKind::Derangement => from(0, derangement),
        TableKind::BinomialEulerian => from(0, binomial_eulerian),
        TableKind::Barp | TableKind::Ellbar => (1..=n_max)
            .map(|n| {
                let (p, l) = bar_polys(n)?;
                Ok(plain(n, if kind == TableKind::Barp { p } else { l }))
            })
            .collect::<Result<_>>()?,
        TableKind::Qnr => (0..=n_max)
            .flat_map(|n| (0..=n_max - n).map(move |r| (n, r)))
            .map(|(n, r)| Row {
                n,
                index: Some(r),
                coefficients: q_nr(n, r),
            })
            .collect(),
        TableKind::Qa => (0..=n_max)
            .map(|n| {
                plain(
                    n,
                    IntPolynomial::from_coeffs((0..=n).map(|k| BigInt::from(q_a(n, k))).collect()),
                )
            })
            .collect(),
        TableKind::Pa => {
            let t = TransformTable::new(n_max);
            (0..=n_max)
                .flat_map(|n| (0..=n).map(move |k| (n, k)))
                .map(|(n, k)| Row {
                    n,
                    index: Some(k),
                    coefficients: IntPolynomial::from_coeffs((0..=n).map(|j| t.p(n, k, j)).collect()),
                })
                .collect()
        }
    })
}

/// CSV rows are `n[,index],c_0,c_1,...` with trailing zeros dropped.
fn table_csv(kind: TableKind, t: &Table) -> Csv {
    let mut header = vec!["n".to_string()];
    match kind {
        TableKind::Qnr => header.push("r".into()),
        TableKind::Pa => header.push("k".into()),
        _ => {}
    }
    let width = t
        .rows
        .iter()
        .map(|r| r.coefficients.coeffs().len())
        .max()
        .unwrap_or(0)
        .max(1);
    header.extend((0..width).map(|k| format!("x^{k}")));
    let rows = t
        .rows
        .iter()
        .map(|r| {
            let mut out = vec![r.n.to_string()];
            out.extend(r.index.map(|i| i.to_string()));
            if r.coefficients.is_zero() {
                out.push("0".into());
            }
            out.extend(r.coefficients.coeffs().iter().map(ToString::to_string));
            out
        })
        .collect();
    Csv { header, rows }
}

pub fn table(g: &Global, a: &TableArgs) -> Result<()> {
    let n_max = a.range.n_max;
    check_memo_cap(n_max + 1)?;
    let t = Table {
        table: value_name(a.kind),
        rows: rows(a.kind, n_max)?,
    };
    emit(g, &t, || table_csv(a.kind, &t))
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    provenance: Provenance,
    #[serde(serialize_with = "decimal")]
    counts: Vec<BigUint>,
}

fn decimal<S: serde::Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Serialize)]
struct CountTable {
    family: String,
    enum_cap: usize,
    rows: Vec<CountRow>,
}

fn excedance(n: usize, cap: usize, derangements: bool) -> Result<Counts> {
    if n <= cap {
        let e = excedance_prefix_counts(n, cap)?;
        return Ok(Counts {
            values: if derangements { e.d } else { e.c },
            provenance: Provenance::Enumerated,
        });
    }
    let values = if derangements {
        bar_polys(n)?
            .1
            .padded(n)
            .into_iter()
            .map(|c| c.to_biguint().unwrap_or_default())
            .collect()
    } else {
        c_recurrence(n).swap_remove(n)
    };
    Ok(Counts {
        values,
        provenance: Provenance::ClosedForm,
    })
}

pub fn count(g: &Global, a: &CountArgs) -> Result<()> {
    let n_max = a.range.n_max;
    check_memo_cap(n_max)?;
    let cap = g.enum_cap;
    let rows = (0..=n_max)
        .map(|n| {
            let c = match a.kind {
                CountKind::Partial => multipointed_partial_counts(n, cap),
                CountKind::Full => multipointed_full_counts(n, cap),
                CountKind::Proper => proper_multipointed_counts(n, cap),
                CountKind::ProperPartial => proper_partial_counts(n, cap),
                CountKind::Excedance => excedance(n, cap, false)?,
                CountKind::DerangementExcedance => excedance(n, cap, true)?,
            };
            Ok(CountRow {
                n,
                provenance: c.provenance,
                counts: c.values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let family = value_name(a.kind);
    let t = CountTable {
        family,
        enum_cap: cap,
        rows,
    };
    emit(g, &t, || {
        let mut header = vec!["n".to_string(), "provenance".to_string()];
        header.extend((0..=n_max).map(|k| format!("k={k}")));
        let rows = t
            .rows
            .iter()
            .map(|r| {
                let prov = match r.provenance {
                    Provenance::Enumerated => "enumerated",
                    Provenance::ClosedForm => "closed_form",
                };
                let mut out = vec![r.n.to_string(), prov.to_string()];
                out.extend(r.counts.iter().map(ToString::to_string));
                out
            })
            .collect();
        Csv { header, rows }
    })
}
