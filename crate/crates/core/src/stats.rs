//! Flat `key = value` statistics files.
//!
//! One entry per line, nesting expressed with dotted keys. Floats are written
//! in shortest round-trip form so values survive a parse unchanged.

use std::fmt::{self, Display};

use crate::error::{Error, Result};
use crate::lightsp::SpannerResult;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Stats {
    entries: Vec<(String, String)>,
}

/// Float formatting used throughout stats files.
pub fn real(x: f64) -> String {
    format!("{x:?}")
}

impl Stats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn push_real(&mut self, key: impl Into<String>, value: f64) -> &mut Self {
        self.entries.push((key.into(), real(value)));
        self
    }

    pub fn extend(&mut self, other: Stats) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Last value stored under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn get_f64(&self, key: &str) -> Option<f64> {
        self.get(key)?.parse().ok()
    }

    pub fn get_usize(&self, key: &str) -> Option<usize> {
        self.get(key)?.parse().ok()
    }

    pub fn parse(text: &str) -> Result<Stats> {
        let mut stats = Stats::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Parameter(format!("stats line {}: expected `key = value`", i + 1))
            })?;
            stats.push(k.trim(), v.trim());
        }
        Ok(stats)
    }
}

impl Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

impl SpannerResult {
    /// Stats for this run. Wall-clock entries are only included when
    /// `timings` is set, so that repeated runs produce identical files.
    pub fn to_stats(&self, timings: bool) -> Stats {
        let mut s = Stats::new();
        let p = &self.params;
        s.push("graph.n", self.n)
            .push("graph.m", self.m)
            .push("graph.simple_m", self.simple_m)
            .push("params.k", p.k)
            .push_real("params.q", p.q)
            .push_real("params.rho", p.rho)
            .push("params.variant", p.variant)
            .push("params.seed", p.seed)
            .push_real("spanner.declared_stretch", self.declared_stretch)
            .push("spanner.edges", self.edges.len())
            .push_real("spanner.weight", self.total_weight)
            .push_real("spanner.lightness", self.lightness)
            .push("mst.edges", self.tree_edges.len())
            .push_real("mst.weight", self.mst_weight)
            .push_real("backbone.length", self.backbone_length)
            .push("buckets.levels", self.levels.len().saturating_sub(1))
            .push("buckets.discarded", self.discarded);
        for l in &self.levels {
            let key = |f: &str| format!("level.{}.{f}", l.level);
            s.push_real(key("xi"), l.xi)
                .push_real(key("mu"), l.mu)
                .push(key("n_intervals"), l.n_intervals)
                .push(key("representatives"), l.representatives)
                .push(key("bucket_edges"), l.bucket_edges)
                .push(key("aux_edges"), l.aux_edges)
                .push(key("kept"), l.kept)
                .push_real(key("kept_weight"), l.kept_weight);
        }
        if timings {
            let t = &self.times;
            for (name, d) in [
                ("simplify", t.simplify),
                ("mst", t.mst),
                ("backbone", t.backbone),
                ("bucketing", t.bucketing),
                ("level0", t.level0),
                ("levels", t.levels),
                ("total", t.total),
            ] {
                s.push_real(format!("time.{name}_ms"), d.as_secs_f64() * 1e3);
            }
        }
        s
    }
}
