//! Deterministic graph corpora for the verification suites.

use crate::generate::{generate, GeneratorSpec};
use crate::graph::Graph;
use crate::rng::stream_value;

/// A reproducible random-graph corpus: `per_size` graphs for every order in
/// `sizes`, cycling through `probabilities`, all derived from one seed.
/// Equal specs produce byte-equal corpora.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub sizes: Vec<usize>,
    pub per_size: usize,
    pub probabilities: Vec<f64>,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn total(&self) -> usize {
        self.sizes.len() * self.per_size
    }
}

/// A corpus member with a stable identifier for reports.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: Graph,
}

/// Materializes the corpus. Graph `i` of order `n` uses probability
/// `probabilities[i % len]` and the sub-seed `stream_value(seed, counter)`,
/// where `counter` walks sizes in order and replicates within each size.
pub fn build_corpus(spec: &CorpusSpec) -> Vec<CorpusGraph> {
    let mut out = Vec::with_capacity(spec.total());
    let mut counter = 0u64;
    for &n in &spec.sizes {
        for i in 0..spec.per_size {
            let p = spec.probabilities[i % spec.probabilities.len()];
            let sub_seed = stream_value(spec.seed, counter);
            counter += 1;
            let graph = generate(&GeneratorSpec::Random { n, p, seed: sub_seed })
                .expect("corpus parameters are valid");
            out.push(CorpusGraph {
                id: format!("rand-n{n}-p{p:.2}-i{i:04}"),
                graph,
            });
        }
    }
    out
}
