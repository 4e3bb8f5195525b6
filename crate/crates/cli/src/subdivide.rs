use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use antiprism_core::subdivision::{antiprism_by_crossings, antiprism_triangulation, barycentric, pointed_carriers};
use antiprism_core::{SimplicialComplex, Subdivision};
use anyhow::{Context, Result};
use serde::Serialize;

use crate::args::{Global, Method, SubdivideArgs};
use crate::output::{json_bytes, write_file};

#[derive(Serialize)]
struct Summary {
    input: String,
    method: &'static str,
    times: usize,
    dim: isize,
    vertices: usize,
    facets: usize,
    f_vector: Vec<String>,
    h_vector: Vec<String>,
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Antiprism => "antiprism",
        Method::Barycentric => "barycentric",
        Method::Crossing => "crossing",
    }
}

fn once(c: &SimplicialComplex, method: Method) -> Result<Subdivision> {
    Ok(match method {
        Method::Antiprism => antiprism_triangulation(c),
        Method::Barycentric => barycentric(c),
        Method::Crossing => {
            let complex = antiprism_by_crossings(c)?;
            let carriers = pointed_carriers(&complex);
            Subdivision { complex, carriers }
        }
    })
}

/// Output files: `<dir>/<stem>.<method>.{txt,carriers.json,summary.json}`.
fn targets(g: &Global, input: &Path, method: Method) -> [PathBuf; 3] {
    let dir = g
        .out
        .clone()
        .unwrap_or_else(|| input.parent().map(Path::to_path_buf).unwrap_or_default());
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("complex");
    let base = format!("{stem}.{}", method_name(method));
    [
        dir.join(format!("{base}.txt")),
        dir.join(format!("{base}.carriers.json")),
        dir.join(format!("{base}.summary.json")),
    ]
}

pub fn run(g: &Global, a: &SubdivideArgs) -> Result<()> {
    let text = fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let input = SimplicialComplex::parse_facet_list(&text)?;
    let mut cur = Subdivision::trivial(&input);
    for _ in 0..a.times {
        let next = once(&cur.complex, a.method)?;
        cur = next.compose(&cur.carriers)?;
    }
    let c = &cur.complex;
    let carriers: BTreeMap<String, String> = cur
        .carriers
        .iter()
        .map(|(v, f)| (v.to_string(), f.to_string()))
        .collect();
    let rank = c.rank();
    let summary = Summary {
        input: a.input.display().to_string(),
        method: method_name(a.method),
        times: a.times,
        dim: c.dim(),
        vertices: c.vertices().len(),
        facets: c.facet_count(),
        f_vector: c.f_vector().counts().iter().map(ToString::to_string).collect(),
        h_vector: c.h_polynomial().padded(rank).iter().map(ToString::to_string).collect(),
    };
    let [facets, carrier_path, summary_path] = targets(g, &a.input, a.method);
    write_file(&facets, c.to_facet_list().as_bytes())?;
    write_file(&carrier_path, &json_bytes(&carriers)?)?;
    let bytes = json_bytes(&summary)?;
    write_file(&summary_path, &bytes)?;
    print!("{}", String::from_utf8_lossy(&bytes));
    Ok(())
}
