//! Facet-list text format: a vertex count on the first line, then one facet
//! per line as space-separated 0-based indices. `#` starts a comment.

use std::fmt::Write as _;

use super::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let m: usize = header.parse().map_err(|_| Error::Parse {
        line: first,
        message: format!("expected a vertex count, found `{header}`"),
    })?;
    let mut facets = Vec::new();
    for (line, body) in lines {
        let facet = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("`{tok}` is not a vertex index"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(&v) = facet.iter().find(|&&v| v >= m) {
            return Err(Error::Parse {
                line,
                message: format!("vertex {v} out of range for {m} vertices"),
            });
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(m, facets)
}

pub fn write_facet_list(x: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", x.vertex_count());
    for f in x.facets() {
        let verts: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", verts.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let x = parse_facet_list("# triangle\n3\n\n0 1 2 # the facet\n").unwrap();
        assert_eq!(x.len(), 7);
        assert_eq!(parse_facet_list(&write_facet_list(&x)).unwrap(), x);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_facet_list("3\n0 1\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "`x` is not a vertex index".into()
            }
        );
        assert!(matches!(
            parse_facet_list("2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_facet_list(""), Err(Error::Parse { .. })));
    }
}
