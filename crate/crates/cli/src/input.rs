//! Reading inputs. Every loader returns the parsed value together with the
//! SHA-256 of the bytes it was parsed from.

use std::path::Path;
use std::str::FromStr;

use anyhow::{Context, Result};
use sha2::{Digest, Sha256};

use uberhom::complex::{parse_facet_list, write_facet_list, Family};
use uberhom::graph::{parse_graph6_corpus, parse_plane_graph, PlaneGraph, SimpleGraph};
use uberhom::{Error, SimplicialComplex};

pub struct Loaded<T> {
    pub value: T,
    pub sha256: String,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A file path, or failing that a family name such as `simplex:2` or `loop:5`.
enum Source {
    File(String),
    Family(Family),
}

fn source(arg: &str) -> Result<Source> {
    let path = Path::new(arg);
    if path.exists() {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(Source::File(text));
    }
    match Family::from_str(arg) {
        Ok(f) => Ok(Source::Family(f)),
        Err(_) => anyhow::bail!("{arg}: no such file, and not a complex family"),
    }
}

fn is_facet_list(text: &str) -> bool {
    // A graph6 code never consists of digits alone.
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit()))
}

pub fn complex(arg: &str) -> Result<Loaded<SimplicialComplex>> {
    match source(arg)? {
        Source::File(text) => Ok(Loaded {
            value: parse_facet_list(&text)?,
            sha256: digest(text.as_bytes()),
        }),
        Source::Family(f) => {
            let x = f.build()?;
            Ok(Loaded {
                sha256: digest(write_facet_list(&x).as_bytes()),
                value: x,
            })
        }
    }
}

/// A graph from a facet list, the first entry of a graph6 file, or a family.
pub fn graph(arg: &str) -> Result<Loaded<SimpleGraph>> {
    match source(arg)? {
        Source::File(text) if is_facet_list(&text) => Ok(Loaded {
            value: SimpleGraph::from_complex(&parse_facet_list(&text)?)?,
            sha256: digest(text.as_bytes()),
        }),
        Source::File(text) => {
            let (_, g) = parse_graph6_corpus(&text)?
                .into_iter()
                .next()
                .ok_or(Error::Graph6("file holds no graphs".into()))?;
            Ok(Loaded {
                value: g,
                sha256: digest(text.as_bytes()),
            })
        }
        Source::Family(f) => {
            let x = f.build()?;
            Ok(Loaded {
                sha256: digest(write_facet_list(&x).as_bytes()),
                value: SimpleGraph::from_complex(&x)?,
            })
        }
    }
}

pub fn corpus(path: &str) -> Result<Loaded<Vec<(String, SimpleGraph)>>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    Ok(Loaded {
        value: parse_graph6_corpus(&text)?,
        sha256: digest(text.as_bytes()),
    })
}

pub fn plane(path: &str) -> Result<Loaded<PlaneGraph>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    Ok(Loaded {
        value: parse_plane_graph(&text)?,
        sha256: digest(text.as_bytes()),
    })
}
