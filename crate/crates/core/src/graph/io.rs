//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! p <n> <m>
//! e <u> <v> <w>
//! ```
//!
//! Fields are whitespace separated and lines end with LF. Weights are written
//! with Rust's shortest round-trip float formatting, so parsing a serialized
//! graph reproduces every weight bit for bit.

use std::fmt::Write as _;

use super::WeightedGraph;
use crate::error::ParseError;

pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut graph: Option<(WeightedGraph, usize)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let rest: Vec<&str> = fields.collect();
        let malformed = |msg: &str| ParseError::Malformed { line, msg: msg.to_string() };

        match (tag, &mut graph) {
            ("p", None) => {
                if rest.len() != 2 {
                    return Err(malformed("expected `p <n> <m>`"));
                }
                let n = parse_usize(rest[0], line)?;
                let m = parse_usize(rest[1], line)?;
                let mut g = WeightedGraph::new(n);
                g.edges.reserve(m);
                graph = Some((g, m));
            }
            ("p", Some(_)) => return Err(malformed("duplicate header")),
            ("e", None) => return Err(ParseError::MissingHeader),
            ("e", Some((g, _))) => {
                if rest.len() != 3 {
                    return Err(malformed("expected `e <u> <v> <w>`"));
                }
                let u = parse_usize(rest[0], line)?;
                let v = parse_usize(rest[1], line)?;
                let w: f64 = rest[2]
                    .parse()
                    .map_err(|_| malformed(&format!("invalid weight `{}`", rest[2])))?;
                for x in [u, v] {
                    if x >= g.n {
                        return Err(ParseError::VertexOutOfRange { line, vertex: x, n: g.n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                if !(w > 0.0 && w.is_finite()) {
                    return Err(ParseError::BadWeight { line, weight: w });
                }
                g.edges.push(super::Edge { u, v, w });
            }
            _ => return Err(malformed(&format!("unknown line tag `{tag}`"))),
        }
    }

    let (g, declared) = graph.ok_or(ParseError::MissingHeader)?;
    if g.m() != declared {
        return Err(ParseError::EdgeCount { declared, found: g.m() });
    }
    Ok(g)
}

fn parse_usize(s: &str, line: usize) -> Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError::Malformed {
        line,
        msg: format!("expected a non-negative integer, found `{s}`"),
    })
}

pub fn serialize_graph(g: &WeightedGraph) -> String {
    let mut out = String::with_capacity(16 + g.m() * 24);
    write!(out, "p {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        // `{:?}` is the shortest representation that round-trips, and keeps
        // a trailing `.0` on integral weights.
        write!(out, "\ne {} {} {:?}", e.u, e.v, e.w).unwrap();
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};

    #[test]
    fn parses_basic_file() {
        let g = parse_graph("p 3 2\ne 0 1 1.5\ne 1 2 2.0").unwrap();
        assert_eq!(g.n(), 3);
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
        assert_eq!(edges, vec![(0, 1, 1.5), (1, 2, 2.0)]);
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let g = parse_graph("# hello\n\np 2 1\n# mid\ne 1 0 3\n").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edges()[0].w, 3.0);
    }

    #[test]
    fn self_loop_names_line() {
        assert_eq!(
            parse_graph("p 2 1\ne 0 0 1.0").unwrap_err(),
            ParseError::SelfLoop { line: 2, vertex: 0 }
        );
    }

    #[test]
    fn error_paths() {
        assert_eq!(parse_graph("").unwrap_err(), ParseError::MissingHeader);
        assert_eq!(parse_graph("e 0 1 1").unwrap_err(), ParseError::MissingHeader);
        assert!(matches!(
            parse_graph("p 2").unwrap_err(),
            ParseError::Malformed { line: 1, .. }
        ));
        assert_eq!(
            parse_graph("p 2 1\ne 0 2 1.0").unwrap_err(),
            ParseError::VertexOutOfRange { line: 2, vertex: 2, n: 2 }
        );
        assert!(matches!(
            parse_graph("p 2 1\n#c\ne 0 1 -1").unwrap_err(),
            ParseError::BadWeight { line: 3, .. }
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 0 1 0").unwrap_err(),
            ParseError::BadWeight { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 0 1 abc").unwrap_err(),
            ParseError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("p 2 1\nx 0 1 1").unwrap_err(),
            ParseError::Malformed { line: 2, .. }
        ));
        assert_eq!(
            parse_graph("p 3 2\ne 0 1 1").unwrap_err(),
            ParseError::EdgeCount { declared: 2, found: 1 }
        );
    }

    #[test]
    fn serializes_empty_and_single() {
        assert_eq!(serialize_graph(&WeightedGraph::new(0)), "p 0 0\n");
        let g = WeightedGraph::from_edges(2, [(0, 1, 1.0)]).unwrap();
        assert_eq!(serialize_graph(&g), "p 2 1\ne 0 1 1.0\n");
    }

    #[test]
    fn generator_corpus_round_trips() {
        for seed in 0..20 {
            for spec in [
                GeneratorSpec::Uniform { n: 40, m: 120, w_min: 0.001, w_max: 1e6 },
                GeneratorSpec::Geometric { n: 50, radius: 0.3 },
                GeneratorSpec::Grid { rows: 5, cols: 7, jitter: 0.7 },
            ] {
                let g = generate(&spec, seed).unwrap();
                assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
            }
        }
    }
}
