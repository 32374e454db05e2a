//! Graph families: standard graphs, the two tight extremal families, and
//! seeded random models.
//!
//! The two parametrized families are the tightness witnesses used all over
//! the test and verification suites:
//!
//! * `gm(m)`: a complete graph `K` on `m-1` vertices plus `m` independent
//!   vertices, each joined to every vertex of `K`. Order `2m-1`. Its
//!   toughness is exactly `(m-1)/m`.
//! * `hm(m)`: a complete graph `K` on `m-1` vertices plus `m` disjoint
//!   triangles, every triangle vertex joined to every vertex of `K`.
//!   Order `4m-1`. Its isolated toughness is exactly `(3m-1)/m`.
//!
//! Vertex labeling convention: the `K` part occupies labels `0..m-1`, then
//! the attached vertices follow in order (triangles contiguously).

use crate::graph::{Graph, MAX_ORDER};
use crate::rng::SplitMix64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("family {family} requires {requirement}, got {got}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("family {family} with these parameters has order {order}, above the maximum {MAX_ORDER}")]
    OrderTooLarge { family: &'static str, order: usize },
}

/// A fully specified generator invocation; equal specs produce equal graphs.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{m-1}` joined to `m` independent vertices.
    Gm { m: usize },
    /// `K_{m-1}` joined to `m` disjoint triangles.
    Hm { m: usize },
    /// Each of the `C(n,2)` edges present independently with probability `p`,
    /// scanned in the order `(0,1),(0,2),...,(n-2,n-1)`, one draw per slot.
    Random { n: usize, p: f64, seed: u64 },
    /// A random connected triangular cactus with `blocks` triangles, grown by
    /// attaching each new triangle at a uniformly chosen existing vertex.
    Cactus { blocks: usize, seed: u64 },
}

fn check_order(family: &'static str, order: usize) -> Result<(), GenerateError> {
    if order > MAX_ORDER {
        Err(GenerateError::OrderTooLarge { family, order })
    } else {
        Ok(())
    }
}

fn bad(
    family: &'static str,
    requirement: &'static str,
    got: impl ToString,
) -> GenerateError {
    GenerateError::BadParameter {
        family,
        requirement,
        got: got.to_string(),
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GenerateError> {
    match *spec {
        GeneratorSpec::Complete { n } => {
            if n == 0 {
                return Err(bad("complete", "n >= 1", n));
            }
            check_order("complete", n)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_edges(n, &edges).expect("valid by construction"))
        }
        GeneratorSpec::Path { n } => {
            if n == 0 {
                return Err(bad("path", "n >= 1", n));
            }
            check_order("path", n)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Ok(Graph::from_edges(n, &edges).expect("valid by construction"))
        }
        GeneratorSpec::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle", "n >= 3", n));
            }
            check_order("cycle", n)?;
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            Ok(Graph::from_edges(n, &edges).expect("valid by construction"))
        }
        GeneratorSpec::Gm { m } => {
            if m < 2 {
                return Err(bad("gm", "m >= 2", m));
            }
            check_order("gm", 2 * m - 1)?;
            let k = m - 1;
            let mut edges = Vec::new();
            for u in 0..k {
                for v in u + 1..k {
                    edges.push((u, v));
                }
            }
            for i in 0..m {
                for u in 0..k {
                    edges.push((u, k + i));
                }
            }
            Ok(Graph::from_edges(2 * m - 1, &edges).expect("valid by construction"))
        }
        GeneratorSpec::Hm { m } => {
            if m < 2 {
                return Err(bad("hm", "m >= 2", m));
            }
            check_order("hm", 4 * m - 1)?;
            let k = m - 1;
            let mut edges = Vec::new();
            for u in 0..k {
                for v in u + 1..k {
                    edges.push((u, v));
                }
            }
            for t in 0..m {
                let base = k + 3 * t;
                edges.push((base, base + 1));
                edges.push((base, base + 2));
                edges.push((base + 1, base + 2));
                for w in base..base + 3 {
                    for u in 0..k {
                        edges.push((u, w));
                    }
                }
            }
            Ok(Graph::from_edges(4 * m - 1, &edges).expect("valid by construction"))
        }
        GeneratorSpec::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(bad("random", "0 <= p <= 1", p));
            }
            check_order("random", n)?;
            let mut rng = SplitMix64::new(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_bernoulli(p) {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(n, &edges).expect("valid by construction"))
        }
        GeneratorSpec::Cactus { blocks, seed } => {
            if blocks == 0 {
                return Err(bad("cactus", "blocks >= 1", blocks));
            }
            check_order("cactus", 2 * blocks + 1)?;
            let mut rng = SplitMix64::new(seed);
            let mut edges = vec![(0, 1), (0, 2), (1, 2)];
            for t in 1..blocks {
                let grown = 2 * t + 1;
                let attach = rng.next_index(grown);
                let (a, b) = (grown, grown + 1);
                edges.push((attach, a));
                edges.push((attach, b));
                edges.push((a, b));
            }
            Ok(Graph::from_edges(2 * blocks + 1, &edges).expect("valid by construction"))
        }
    }
}
