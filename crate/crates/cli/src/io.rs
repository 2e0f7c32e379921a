use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use lightspan::{generate, parse_graph, serialize_graph, EdgeRef, WeightedGraph};

use crate::Source;

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

/// Writes to `path`, or stdout if `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write(p, text),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn load(source: &Source, seed: u64) -> Result<WeightedGraph> {
    match (&source.input, &source.generator) {
        (Some(path), _) => {
            let text = read(path)?;
            parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
        }
        (None, Some(spec)) => Ok(generate(spec, seed)?),
        (None, None) => Err(anyhow!("one of --input or --gen is required")),
    }
}

/// Spanner as a graph file on the same vertex set.
pub fn spanner_text(g: &WeightedGraph, edges: &[EdgeRef]) -> String {
    serialize_graph(&g.subgraph(edges))
}

/// Reads a spanner file and maps each edge to a distinct edge of `g` with the
/// same endpoints and weight.
pub fn read_spanner(path: &Path, g: &WeightedGraph) -> Result<Vec<EdgeRef>> {
    let text = read(path)?;
    let h = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    if h.n() != g.n() {
        return Err(anyhow!("spanner has {} vertices, graph has {}", h.n(), g.n()));
    }
    let mut pool: HashMap<((usize, usize), u64), Vec<EdgeRef>> = HashMap::new();
    for r in (0..g.m()).rev().map(EdgeRef) {
        let e = g.edge(r);
        pool.entry((e.key(), e.w.to_bits())).or_default().push(r);
    }
    let mut refs = Vec::with_capacity(h.m());
    for e in h.edges() {
        let r = pool
            .get_mut(&(e.key(), e.w.to_bits()))
            .and_then(Vec::pop)
            .ok_or_else(|| anyhow!("spanner edge {} {} {:?} is not in the graph", e.u, e.v, e.w))?;
        refs.push(r);
    }
    refs.sort_unstable();
    Ok(refs)
}
