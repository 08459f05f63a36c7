use std::io::Write;

use anyhow::Result;
use serde_json::{json, Value};

use uberhom::coloured::{diagonal_homology, filtered_homology, graded_euler, HorizontalHomology};
use uberhom::graph::{
    dissimilarity_up_to, graph_as_complex, h0_graph, h1_0, h1_1, h2_graph, matching_complex,
    tait_colouring, tait_graph, theorem42_verify, theta, Dissimilarity, GradedRanks,
};
use uberhom::morse::{elementary_decomposition, is_dalmatian, verify_morse};
use uberhom::uber::{closed_star_intersection, uber_degree0_fast, uber_homology_with};
use uberhom::{BigradedRanks, Colouring, Error, Simplex, SimplicialComplex, UberOptions};

use crate::input;
use crate::report::{bigraded, metadata, trigraded, Format, Report, Table};
use crate::spec::ColouringSpec;

fn cells(simplices: &[Simplex]) -> Value {
    json!(simplices
        .iter()
        .map(|s| s.vertices().collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn rank_rows(table: &mut Table, eps: Colouring, r: &BigradedRanks) {
    for (b, n) in r.iter() {
        table.push(vec![eps.to_string(), b.to_string(), n.to_string()]);
    }
}

fn colourings(x: &SimplicialComplex, spec: &ColouringSpec, cap: usize) -> Result<Vec<Colouring>> {
    Ok(spec.resolve(x.vertex_count(), cap)?)
}

pub fn horizontal(
    path: &str,
    spec: &ColouringSpec,
    cap: usize,
    generators: bool,
) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let mut table = Table::new(&["colouring", "bidegree", "rank"]);
    let mut results = Vec::new();
    for eps in colourings(x, spec, cap)? {
        let h = HorizontalHomology::compute(x, eps)?;
        let ranks = h.ranks();
        rank_rows(&mut table, eps, &ranks);
        let mut entry = json!({ "colouring": eps.to_string(), "ranks": bigraded(&ranks) });
        if generators {
            let gens: serde_json::Map<String, Value> = ranks
                .iter()
                .map(|(b, _)| {
                    let reps: Vec<Value> = h.generators(b).iter().map(|c| cells(c)).collect();
                    (b.to_string(), Value::Array(reps))
                })
                .collect();
            entry["generators"] = Value::Object(gens);
        }
        results.push(entry);
    }
    Ok(Report {
        command: "horizontal",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: Value::Array(results),
        table,
    })
}

pub fn diagonal(path: &str, spec: &ColouringSpec, cap: usize) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let mut table = Table::new(&["colouring", "bidegree", "rank"]);
    let mut results = Vec::new();
    for eps in colourings(x, spec, cap)? {
        let ranks = diagonal_homology(x, eps)?;
        rank_rows(&mut table, eps, &ranks);
        results.push(json!({ "colouring": eps.to_string(), "ranks": bigraded(&ranks) }));
    }
    Ok(Report {
        command: "diagonal",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: Value::Array(results),
        table,
    })
}

/// Filtration levels `0..=dim + 1` unless one level is requested.
pub fn filtered(
    path: &str,
    spec: &ColouringSpec,
    cap: usize,
    level: Option<usize>,
) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let top = x.layers();
    let levels: Vec<usize> = match level {
        Some(k) => vec![k],
        None => (0..=top).collect(),
    };
    let mut table = Table::new(&["colouring", "filtration", "dimension", "rank"]);
    let mut results = Vec::new();
    for eps in colourings(x, spec, cap)? {
        let mut by_level = serde_json::Map::new();
        for &k in &levels {
            let betti = filtered_homology(x, eps, k as i64)?;
            for (d, r) in betti.iter().enumerate().filter(|(_, r)| **r > 0) {
                table.push(vec![
                    eps.to_string(),
                    k.to_string(),
                    d.to_string(),
                    r.to_string(),
                ]);
            }
            by_level.insert(k.to_string(), json!(betti));
        }
        results.push(json!({ "colouring": eps.to_string(), "betti": by_level }));
    }
    Ok(Report {
        command: "filtered",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: Value::Array(results),
        table,
    })
}

pub fn euler(path: &str, spec: &ColouringSpec, cap: usize) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let mut table = Table::new(&["colouring", "polynomial"]);
    let mut results = Vec::new();
    for eps in colourings(x, spec, cap)? {
        let p = graded_euler(x, eps)?;
        table.push(vec![eps.to_string(), p.to_string()]);
        results.push(json!({
            "colouring": eps.to_string(),
            "coefficients": p.coefficients(),
            "polynomial": p.to_string(),
        }));
    }
    Ok(Report {
        command: "euler",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: Value::Array(results),
        table,
    })
}

pub fn morse(path: &str, spec: &ColouringSpec, cap: usize) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let mut table = Table::new(&["colouring", "dalmatian", "morse", "critical_profile"]);
    let mut results = Vec::new();
    for eps in colourings(x, spec, cap)? {
        let report = verify_morse(x, eps)?;
        let dalmatian = eps.black_count() > 0 && is_dalmatian(x, eps)?;
        let profile = report.critical_profile();
        table.push(vec![
            eps.to_string(),
            dalmatian.to_string(),
            report.is_morse().to_string(),
            format!("{profile:?}"),
        ]);
        results.push(json!({
            "colouring": eps.to_string(),
            "dalmatian": dalmatian,
            "matching": report.is_matching,
            "acyclic": report.is_acyclic,
            "critical_cells": cells(&report.critical_cells),
            "critical_profile": profile,
        }));
    }
    Ok(Report {
        command: "morse",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: Value::Array(results),
        table,
    })
}

pub fn decompose(path: &str, spec: &ColouringSpec, cap: usize) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let mut table = Table::new(&["colouring", "vertex", "simplex", "face"]);
    let mut results = Vec::new();
    for eps in colourings(x, spec, cap)? {
        let mut parts = serde_json::Map::new();
        for (v, edges) in elementary_decomposition(x, eps)? {
            for (s, t) in &edges {
                table.push(vec![
                    eps.to_string(),
                    v.to_string(),
                    s.to_string(),
                    t.to_string(),
                ]);
            }
            let pairs: Vec<Value> = edges
                .iter()
                .map(|(s, t)| json!([cells(&[*s])[0], cells(&[*t])[0]]))
                .collect();
            parts.insert(v.to_string(), Value::Array(pairs));
        }
        results.push(json!({ "colouring": eps.to_string(), "parts": parts }));
    }
    Ok(Report {
        command: "decompose",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: Value::Array(results),
        table,
    })
}

pub fn uber(path: &str, cap: usize, degree: Option<usize>) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let opts = UberOptions {
        cap,
        ..UberOptions::default()
    };
    let ranks = uber_homology_with(x, &opts)?;
    let mut table = Table::new(&["degree", "bidegree", "rank"]);
    let mut degrees = serde_json::Map::new();
    let wanted: Vec<usize> = match degree {
        Some(j) => vec![j],
        None => (0..=x.vertex_count()).collect(),
    };
    for j in wanted {
        let d = ranks.degree(j);
        for (b, n) in d.iter() {
            table.push(vec![j.to_string(), b.to_string(), n.to_string()]);
        }
        if degree.is_some() || !d.is_zero() {
            degrees.insert(j.to_string(), bigraded(&d));
        }
    }
    Ok(Report {
        command: "uber",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: json!({ "degrees": degrees, "ranks": trigraded(&ranks) }),
        table,
    })
}

/// Degree 0 from the closed-star intersection; no cube is built.
pub fn uber0(path: &str) -> Result<Report> {
    let input = input::complex(path)?;
    let x = &input.value;
    let ranks = uber_degree0_fast(x);
    let mut table = Table::new(&["bidegree", "rank"]);
    for (b, n) in ranks.iter() {
        table.push(vec![b.to_string(), n.to_string()]);
    }
    Ok(Report {
        command: "uber0",
        metadata: metadata(&input.sha256, x.vertex_count()),
        results: json!({
            "ranks": bigraded(&ranks),
            "closed_star_intersection": cells(&closed_star_intersection(x)),
        }),
        table,
    })
}

pub fn theta_cmd(path: &str, cap: usize, level: Option<usize>) -> Result<Report> {
    let input = input::graph(path)?;
    let g = &input.value;
    let m = g.vertex_count();
    if m > cap {
        return Err(Error::CapExceeded { vertices: m, cap }.into());
    }
    let levels: Vec<usize> = match level {
        Some(j) if j > m => {
            return Err(Error::InvalidParameter(format!("level {j} exceeds {m} vertices")).into())
        }
        Some(j) => vec![j],
        None => (0..=m).collect(),
    };
    let mut table = Table::new(&["level", "group", "tuples"]);
    let mut results = Vec::new();
    for j in levels {
        let t = theta(g, j)?;
        let groups: Vec<Vec<String>> = t
            .groups()
            .iter()
            .map(|grp| grp.iter().map(ToString::to_string).collect())
            .collect();
        for (n, grp) in groups.iter().enumerate() {
            table.push(vec![j.to_string(), n.to_string(), grp.join(" ")]);
        }
        let aggregated: Vec<String> = t.aggregated().iter().map(ToString::to_string).collect();
        results.push(json!({ "level": j, "groups": groups, "aggregated": aggregated }));
    }
    Ok(Report {
        command: "theta",
        metadata: metadata(&input.sha256, m),
        results: Value::Array(results),
        table,
    })
}

fn dissim_row(a: &str, b: &str, d: &Dissimilarity) -> Vec<String> {
    let (num, den) = match d.value() {
        Some(v) => (v.numer().to_string(), v.denom().to_string()),
        None => ("inf".to_string(), String::new()),
    };
    let level = d
        .first_differing_level()
        .map_or_else(String::new, |j| j.to_string());
    vec![a.to_string(), b.to_string(), num, den, level]
}

/// Every pair of the corpus in file order. Table and CSV rows are written as
/// each pair finishes.
pub fn dissim(
    path: &str,
    cap: usize,
    max_level: Option<usize>,
    format: Format,
    out: &mut impl Write,
) -> Result<()> {
    let input = input::corpus(path)?;
    let graphs = &input.value;
    if let Some((name, g)) = graphs.iter().find(|(_, g)| g.vertex_count() > cap) {
        let err = Error::CapExceeded {
            vertices: g.vertex_count(),
            cap,
        };
        return Err(anyhow::Error::new(err).context(format!("graph {name}")));
    }
    for (name, g) in graphs {
        graph_as_complex(g).map_err(|e| anyhow::anyhow!(e).context(format!("graph {name}")))?;
    }
    let header = ["first", "second", "numerator", "denominator", "first_level"];
    let max = max_level.unwrap_or(usize::MAX);
    let pairs = (0..graphs.len()).flat_map(|a| (a + 1..graphs.len()).map(move |b| (a, b)));
    let compute = |a: usize, b: usize| dissimilarity_up_to(&graphs[a].1, &graphs[b].1, max);
    match format {
        Format::Json => {
            let mut results = Vec::new();
            for (a, b) in pairs {
                let d = compute(a, b)?;
                let delta = match d.value() {
                    Some(v) => json!({ "numerator": v.numer(), "denominator": v.denom() }),
                    None => json!("inf"),
                };
                results.push(json!({
                    "first": graphs[a].0,
                    "second": graphs[b].0,
                    "delta": delta,
                    "first_level": d.first_differing_level(),
                }));
            }
            let names: Vec<&str> = graphs.iter().map(|(n, _)| n.as_str()).collect();
            let doc = json!({
                "command": "dissim",
                "metadata": { "input_sha256": input.sha256, "graph_order": names },
                "results": results,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(header)?;
            w.flush()?;
            for (a, b) in pairs {
                w.write_record(dissim_row(&graphs[a].0, &graphs[b].0, &compute(a, b)?))?;
                w.flush()?;
            }
        }
        Format::Table => {
            writeln!(out, "{}", header.join("  "))?;
            for (a, b) in pairs {
                writeln!(
                    out,
                    "{}",
                    dissim_row(&graphs[a].0, &graphs[b].0, &compute(a, b)?)
                        .join("  ")
                        .trim_end()
                )?;
                out.flush()?;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphHomology {
    H0,
    #[value(name = "h1_0")]
    H10,
    #[value(name = "h1_1")]
    H11,
    H2,
}

impl GraphHomology {
    fn name(self) -> &'static str {
        match self {
            GraphHomology::H0 => "h0",
            GraphHomology::H10 => "h1_0",
            GraphHomology::H11 => "h1_1",
            GraphHomology::H2 => "h2",
        }
    }
}

pub fn graph_hom(kind: GraphHomology, path: &str, cap: usize) -> Result<Report> {
    let input = input::graph(path)?;
    let g = &input.value;
    let ranks: GradedRanks = match kind {
        GraphHomology::H0 => h0_graph(g, cap)?,
        GraphHomology::H10 => h1_0(g, cap)?,
        GraphHomology::H11 => h1_1(g, cap)?,
        GraphHomology::H2 => h2_graph(g, cap)?,
    };
    let mut table = Table::new(&["homology", "degree", "rank"]);
    let mut map = serde_json::Map::new();
    for (j, r) in ranks.iter() {
        table.push(vec![kind.name().to_string(), j.to_string(), r.to_string()]);
        map.insert(j.to_string(), json!(r));
    }
    Ok(Report {
        command: "graph-hom",
        metadata: metadata(&input.sha256, g.vertex_count()),
        results: json!({ "homology": kind.name(), "ranks": map, "display": ranks.to_string() }),
        table,
    })
}

pub fn matching(path: &str) -> Result<Report> {
    let input = input::graph(path)?;
    let g = &input.value;
    let m = matching_complex(g)?;
    let reduced: serde_json::Map<String, Value> = m
        .reduced_betti()
        .into_iter()
        .map(|(d, r)| (d.to_string(), json!(r)))
        .collect();
    let mut table = Table::new(&["reduced_degree", "rank"]);
    for (d, r) in &reduced {
        table.push(vec![d.clone(), r.to_string()]);
    }
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    Ok(Report {
        command: "matching-complex",
        metadata: metadata(&input.sha256, g.vertex_count()),
        results: json!({
            "vertex_edges": edges,
            "facets": cells(&m.facets()),
            "f_vector": m.f_vector(),
            "reduced_betti": reduced,
        }),
        table,
    })
}

pub fn tait(path: &str) -> Result<Report> {
    let input = input::plane(path)?;
    let p = &input.value;
    let t = tait_graph(p);
    let mut table = Table::new(&["edge", "from", "to", "colour"]);
    let mut edges = Vec::new();
    for (n, &(u, v)) in t.edges.iter().enumerate() {
        let colour = if t.is_black(n) { "black" } else { "white" };
        table.push(vec![
            n.to_string(),
            u.to_string(),
            v.to_string(),
            colour.to_string(),
        ]);
        edges.push(json!({ "ends": [u, v], "colour": colour }));
    }
    Ok(Report {
        command: "tait",
        metadata: metadata(&input.sha256, p.vertex_count()),
        results: json!({
            "primal_vertices": t.primal_vertices,
            "face_vertices": t.face_vertices,
            "crossing_vertices": t.crossing_vertices,
            "edges": edges,
            "colouring": tait_colouring(&t)?.to_string(),
        }),
        table,
    })
}

/// Returns the report and whether both sides agree.
pub fn verify_thm42(path: &str, cap: usize) -> Result<(Report, bool)> {
    let input = input::plane(path)?;
    let p = &input.value;
    let r = theorem42_verify(p, cap)?;
    let mut table = Table::new(&["weight", "lhs", "rhs", "match"]);
    let mut levels = Vec::new();
    for k in 0..=r.max_weight {
        let side =
            |s: &BigradedRanks| -> BigradedRanks { s.iter().filter(|(b, _)| b.k == k).collect() };
        let (l, rh) = (side(&r.lhs), side(&r.rhs));
        table.push(vec![
            k.to_string(),
            l.to_string(),
            rh.to_string(),
            r.level_matches(k).to_string(),
        ]);
        levels.push(json!({ "weight": k, "lhs": bigraded(&l), "rhs": bigraded(&rh), "match": r.level_matches(k) }));
    }
    let holds = r.holds();
    let report = Report {
        command: "verify-thm42",
        metadata: metadata(&input.sha256, p.vertex_count()),
        results: json!({
            "holds": holds,
            "bottom_matches": r.bottom_matches(),
            "bottom": bigraded(&r.bottom),
            "levels": levels,
        }),
        table,
    };
    Ok((report, holds))
}
