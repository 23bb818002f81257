//! Hypergraph inputs for the CLI: either a JSON file on disk or one of a
//! few shorthands for the patterns that come up constantly.

use anyhow::{bail, Context, Result};
use ramsey_core::{loose_cycle_c4, loose_path, Hypergraph};

/// Parses a pattern argument. Shorthands:
///
/// * `edge` or `edge:R` — a single R-uniform hyperedge (default R = 3);
/// * `path:M` or `path:M:R` — the R-uniform loose path of order M;
/// * `c4` — the 3-uniform loose cycle on four vertices;
/// * `clique:N` or `clique:N:R` — the complete R-uniform hypergraph K_N;
///
/// anything else is read as a path to a JSON file `{"order", "r", "edges"}`.
pub fn load_pattern(arg: &str) -> Result<Hypergraph> {
    let mut parts = arg.split(':');
    let head = parts.next().unwrap_or_default();
    let rest: Vec<&str> = parts.collect();
    match (head, rest.len()) {
        ("edge", 0) => return Ok(loose_path(3, 3)?),
        ("edge", 1) => {
            let r: usize = parse_field(rest[0], arg)?;
            return Ok(loose_path(r, r)?);
        }
        ("c4", 0) => return Ok(loose_cycle_c4()),
        ("path", 1) => {
            let m: usize = parse_field(rest[0], arg)?;
            return Ok(loose_path(m, 3)?);
        }
        ("path", 2) => {
            let m: usize = parse_field(rest[0], arg)?;
            let r: usize = parse_field(rest[1], arg)?;
            return Ok(loose_path(m, r)?);
        }
        ("clique", 1) => {
            let n: usize = parse_field(rest[0], arg)?;
            return Ok(Hypergraph::complete(n, 3)?);
        }
        ("clique", 2) => {
            let n: usize = parse_field(rest[0], arg)?;
            let r: usize = parse_field(rest[1], arg)?;
            return Ok(Hypergraph::complete(n, r)?);
        }
        ("edge" | "c4" | "path" | "clique", _) => {
            bail!("malformed shorthand {arg:?}");
        }
        _ => {}
    }
    load_hypergraph_file(arg)
}

fn load_hypergraph_file(path: &str) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing hypergraph JSON in {path}"))
}

fn parse_field(s: &str, whole: &str) -> Result<usize> {
    s.parse()
        .with_context(|| format!("bad number {s:?} in shorthand {whole:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands_build_expected_shapes() {
        assert_eq!(load_pattern("edge").unwrap().order(), 3);
        assert_eq!(load_pattern("edge:2").unwrap().order(), 2);
        assert_eq!(load_pattern("path:5").unwrap().edge_count(), 2);
        assert_eq!(load_pattern("path:3:2").unwrap().uniformity(), 2);
        assert_eq!(load_pattern("c4").unwrap().edge_count(), 2);
        assert_eq!(load_pattern("clique:4").unwrap().edge_count(), 4);
        assert_eq!(load_pattern("clique:4:2").unwrap().edge_count(), 6);
        assert!(load_pattern("path:4").is_err());
        assert!(load_pattern("no-such-file.json").is_err());
        assert!(load_pattern("clique:1:2:3").is_err());
    }
}
