//! The graph6 text encoding.
//!
//! A graph is `N(n)` followed by the upper triangle of its adjacency matrix,
//! column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits
//! per byte with 63 added to each byte.

use super::SimpleGraph;
use crate::complex::MAX_VERTICES;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sextet(byte: u8) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(err(format!(
            "byte {byte:#04x} is outside the printable range"
        )))
    }
}

/// Decodes `N(n)` and returns `(n, bytes consumed)`.
fn read_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| err("empty input"))?;
    if first != 126 {
        return Ok((sextet(first)? as usize, 1));
    }
    let (width, start) = if bytes.get(1) == Some(&126) {
        (6, 2)
    } else {
        (3, 1)
    };
    let digits = bytes
        .get(start..start + width)
        .ok_or_else(|| err("truncated vertex count"))?;
    let n = digits.iter().try_fold(0usize, |acc, &b| {
        Ok::<_, Error>(acc << 6 | sextet(b)? as usize)
    })?;
    Ok((n, start + width))
}

pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, used) = read_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { count: n });
    }
    let body = &bytes[used..];
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(body[bit / 6])?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // Padding bits after the last pair must be zero.
    if bit % 6 != 0 && sextet(body[bit / 6])? & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(err("nonzero padding bits"));
    }
    SimpleGraph::from_edges(n, edges)
}

pub fn encode_graph6(g: &SimpleGraph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// One graph per nonblank line; each line is `graph6` or `name graph6`.
/// Unnamed graphs are named by their 1-based line number.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<(String, SimpleGraph)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, line)| {
            let mut parts = line.split_whitespace();
            let first = parts.next().expect("nonblank");
            let (name, code) = match parts.next() {
                Some(code) => (first.to_string(), code),
                None => ((i + 1).to_string(), first),
            };
            parse_graph6(code)
                .map(|g| (name, g))
                .map_err(|e| Error::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // Triangle, path on three vertices, and the Petersen graph.
        assert_eq!(encode_graph6(&SimpleGraph::complete(3).unwrap()), "Bw");
        assert_eq!(encode_graph6(&SimpleGraph::path(2).unwrap()), "Bg");
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.vertex_count(), 10);
        assert_eq!(petersen.edge_count(), 15);
        assert_eq!(petersen.degree_sequence(), vec![3; 10]);
        assert_eq!(petersen.girth(), Some(5));
        assert_eq!(encode_graph6(&petersen), "IheA@GUAo");
        assert_eq!(
            parse_graph6(">>graph6<<Bw").unwrap(),
            SimpleGraph::complete(3).unwrap()
        );
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
        assert_eq!(parse_graph6("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn long_size_form() {
        let g = SimpleGraph::cycle(63).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("Bx").is_err());
        assert!(matches!(
            parse_graph6_corpus("Bw\nB!\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let corpus = parse_graph6_corpus("tri Bw\n\nBg\n").unwrap();
        assert_eq!(corpus[0].0, "tri");
        assert_eq!(corpus[1].0, "3");
    }
}
