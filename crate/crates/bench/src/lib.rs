//! Graph inputs shared by the benchmarks and the acceptance suite.

use lightspan::{generate, GeneratorSpec, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform random graph with `density * n` edges and weights in `[1, 1000]`.
pub fn sweep_graph(n: usize, density: usize, seed: u64) -> WeightedGraph {
    let spec = GeneratorSpec::Uniform { n, m: density * n, w_min: 1.0, w_max: 1000.0 };
    generate(&spec, seed).expect("sweep parameters are feasible")
}

/// Generator spec for corpus entry `seed`: the model rotates through
/// uniform, geometric and grid, with about `min_n..=max_n` vertices.
pub fn corpus_spec(seed: u64, min_n: usize, max_n: usize) -> GeneratorSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(min_n..=max_n);
    match seed % 3 {
        0 => {
            let extra = rng.gen_range(0..=4 * n).min(n * (n - 1) / 2 - (n - 1));
            let w_max = [1.0, 10.0, 1000.0][rng.gen_range(0..3)];
            GeneratorSpec::Uniform { n, m: n - 1 + extra, w_min: 1.0, w_max }
        }
        1 => GeneratorSpec::Geometric { n, radius: rng.gen_range(2.0..5.0) / (n as f64).sqrt() },
        _ => {
            let rows = rng.gen_range(2..=(n as f64).sqrt() as usize);
            GeneratorSpec::Grid { rows, cols: (n / rows).max(2), jitter: [0.0, 0.5, 4.0][rng.gen_range(0..3)] }
        }
    }
}

pub fn corpus_graph(seed: u64, min_n: usize, max_n: usize) -> WeightedGraph {
    generate(&corpus_spec(seed, min_n, max_n), seed).expect("corpus specs are feasible")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_connected_and_in_range() {
        for seed in 0..60 {
            let g = corpus_graph(seed, 16, 300);
            assert!(g.is_connected(), "{}", corpus_spec(seed, 16, 300));
            assert!(g.n() >= 4 && g.n() <= 300);
        }
    }
}
