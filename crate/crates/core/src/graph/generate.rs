//! Seeded graph generators for tests and benchmarks.
//!
//! Every model except `grid` first lays down a random spanning tree so the
//! result is connected.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, WeightedGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    /// `n` vertices, exactly `m` distinct edges, weights uniform in `[w_min, w_max]`.
    Uniform { n: usize, m: usize, w_min: f64, w_max: f64 },
    /// Points in the unit square; edges between points within `radius`,
    /// weighted by Euclidean distance.
    Geometric { n: usize, radius: f64 },
    /// `rows x cols` lattice, weights `1 + jitter * U[0, 1)`.
    Grid { rows: usize, cols: usize, jitter: f64 },
}

impl GeneratorSpec {
    pub fn vertex_count(&self) -> usize {
        match *self {
            GeneratorSpec::Uniform { n, .. } | GeneratorSpec::Geometric { n, .. } => n,
            GeneratorSpec::Grid { rows, cols, .. } => rows * cols,
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Uniform { n, m, w_min, w_max } => {
                write!(f, "uniform:{n},{m},{w_min:?},{w_max:?}")
            }
            GeneratorSpec::Geometric { n, radius } => write!(f, "geometric:{n},{radius:?}"),
            GeneratorSpec::Grid { rows, cols, jitter } => write!(f, "grid:{rows},{cols},{jitter:?}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    /// Parses `uniform:N,M,WMIN,WMAX`, `geometric:N,RADIUS` or `grid:ROWS,COLS,JITTER`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("invalid generator spec `{s}`"));
        let (model, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| args.get(i).and_then(|a| a.parse::<usize>().ok()).ok_or_else(bad);
        let real = |i: usize| args.get(i).and_then(|a| a.parse::<f64>().ok()).ok_or_else(bad);
        let spec = match (model.trim(), args.len()) {
            ("uniform", 4) => GeneratorSpec::Uniform { n: int(0)?, m: int(1)?, w_min: real(2)?, w_max: real(3)? },
            ("geometric", 2) => GeneratorSpec::Geometric { n: int(0)?, radius: real(1)? },
            ("grid", 3) => GeneratorSpec::Grid { rows: int(0)?, cols: int(1)?, jitter: real(2)? },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

pub fn generate(spec: &GeneratorSpec, seed: u64) -> Result<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *spec {
        GeneratorSpec::Uniform { n, m, w_min, w_max } => uniform(&mut rng, n, m, w_min, w_max),
        GeneratorSpec::Geometric { n, radius } => geometric(&mut rng, n, radius),
        GeneratorSpec::Grid { rows, cols, jitter } => grid(&mut rng, rows, cols, jitter),
    }
}

/// Random labelled tree: each vertex in a shuffled order attaches to a
/// uniformly chosen earlier one.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    (1..n)
        .map(|i| {
            let parent = order[rng.gen_range(0..i)];
            (order[i], parent)
        })
        .collect()
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn uniform(rng: &mut ChaCha8Rng, n: usize, m: usize, w_min: f64, w_max: f64) -> Result<WeightedGraph> {
    if n > 0 && m < n - 1 {
        return Err(Error::Parameter(format!(
            "uniform graph with n = {n} needs at least {} edges, got m = {m}",
            n - 1
        )));
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    if m > max_edges {
        return Err(Error::Parameter(format!(
            "uniform graph with n = {n} admits at most {max_edges} distinct edges, got m = {m}"
        )));
    }
    if !(w_min > 0.0 && w_min <= w_max && w_max.is_finite()) {
        return Err(Error::Parameter(format!("invalid weight range [{w_min}, {w_max}]")));
    }

    let weight = |rng: &mut ChaCha8Rng| if w_min == w_max { w_min } else { rng.gen_range(w_min..=w_max) };
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (u, v) in random_tree(rng, n) {
        seen.insert(key(u, v));
        let w = weight(rng);
        edges.push(Edge { u, v, w });
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && seen.insert(key(u, v)) {
            let w = weight(rng);
            edges.push(Edge { u, v, w });
        }
    }
    Ok(WeightedGraph { n, edges })
}

fn geometric(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Result<WeightedGraph> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::Parameter(format!("invalid radius {radius}")));
    }
    let points: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    let dist = |a: usize, b: usize| {
        let (dx, dy) = (points[a].0 - points[b].0, points[a].1 - points[b].1);
        dx.hypot(dy).max(f64::MIN_POSITIVE)
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (u, v) in random_tree(rng, n) {
        seen.insert(key(u, v));
        edges.push(Edge { u, v, w: dist(u, v) });
    }

    // Bucket points into cells of side >= radius; neighbors are in adjacent cells.
    let cells = ((1.0 / radius).floor() as usize).clamp(1, 1 << 12);
    let cell_of = |p: (f64, f64)| {
        let cx = ((p.0 * cells as f64) as usize).min(cells - 1);
        let cy = ((p.1 * cells as f64) as usize).min(cells - 1);
        (cx, cy)
    };
    let mut grid: Vec<Vec<usize>> = vec![Vec::new(); cells * cells];
    for (i, &p) in points.iter().enumerate() {
        let (cx, cy) = cell_of(p);
        grid[cy * cells + cx].push(i);
    }
    for (a, &p) in points.iter().enumerate() {
        let (cx, cy) = cell_of(p);
        for ny in cy.saturating_sub(1)..=(cy + 1).min(cells - 1) {
            for nx in cx.saturating_sub(1)..=(cx + 1).min(cells - 1) {
                for &b in &grid[ny * cells + nx] {
                    if b > a {
                        let d = dist(a, b);
                        if d <= radius && seen.insert((a, b)) {
                            edges.push(Edge { u: a, v: b, w: d });
                        }
                    }
                }
            }
        }
    }
    Ok(WeightedGraph { n, edges })
}

fn grid(rng: &mut ChaCha8Rng, rows: usize, cols: usize, jitter: f64) -> Result<WeightedGraph> {
    if !(jitter >= 0.0 && jitter.is_finite()) {
        return Err(Error::Parameter(format!("invalid jitter {jitter}")));
    }
    let mut edges = Vec::new();
    let weight = |rng: &mut ChaCha8Rng| if jitter == 0.0 { 1.0 } else { 1.0 + jitter * rng.gen::<f64>() };
    for r in 0..rows {
        for c in 0..cols {
            let x = r * cols + c;
            if c + 1 < cols {
                let w = weight(rng);
                edges.push(Edge { u: x, v: x + 1, w });
            }
            if r + 1 < rows {
                let w = weight(rng);
                edges.push(Edge { u: x, v: x + cols, w });
            }
        }
    }
    Ok(WeightedGraph { n: rows * cols, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::serialize_graph;

    #[test]
    fn unit_grid() {
        let g = generate(&GeneratorSpec::Grid { rows: 2, cols: 2, jitter: 0.0 }, 7).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.edges().iter().all(|e| e.w == 1.0));
    }

    #[test]
    fn too_few_edges() {
        let spec = GeneratorSpec::Uniform { n: 100, m: 50, w_min: 1.0, w_max: 2.0 };
        assert!(matches!(generate(&spec, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn deterministic_and_connected() {
        let specs = [
            GeneratorSpec::Uniform { n: 200, m: 900, w_min: 1.0, w_max: 100.0 },
            GeneratorSpec::Geometric { n: 200, radius: 0.1 },
            GeneratorSpec::Grid { rows: 9, cols: 13, jitter: 0.25 },
        ];
        for spec in &specs {
            for seed in 0..5 {
                let a = generate(spec, seed).unwrap();
                let b = generate(spec, seed).unwrap();
                assert_eq!(serialize_graph(&a), serialize_graph(&b));
                assert!(a.is_connected(), "{spec} seed {seed}");
                assert!(a.edges().iter().all(|e| e.w > 0.0 && e.u != e.v));
            }
        }
        let spec = &specs[0];
        assert_eq!(generate(spec, 0).unwrap().m(), 900);
        assert_ne!(generate(spec, 0).unwrap(), generate(spec, 1).unwrap());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["uniform:10,20,1.0,5.5", "geometric:30,0.25", "grid:3,4,0.0"] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("grid:3".parse::<GeneratorSpec>().is_err());
        assert!("torus:3,3".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn geometric_edges_respect_radius() {
        let g = generate(&GeneratorSpec::Geometric { n: 300, radius: 0.05 }, 3).unwrap();
        // Tree edges may be long; everything past the first n - 1 is a radius edge.
        assert!(g.edges()[299..].iter().all(|e| e.w <= 0.05));
    }
}
