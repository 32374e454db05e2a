//! Exhaustive enumeration of the order-7 exception graphs: the graphs with
//! no factor into edges and odd cycles of length >= 5 whose isolated
//! toughness variant still exceeds 4.
//!
//! All 2^21 labeled graphs on 7 vertices are scanned (no isomorphism
//! generation to trust): each is tested for a violating set, survivors get
//! an exact variant value, and the survivors are deduplicated by canonical
//! form at the end. Labeled scanning keeps the inner loop on stack arrays.

use crate::factors::{violation_search, CountKind};
use crate::graph::Graph;
use crate::parameters::{scan_isolated_minus_one, Candidate};
use crate::rational::Rational;
use crate::structure::components;
use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExceptionsError {
    #[error("the exception enumeration is hard-coded for order 7, got {0}")]
    UnsupportedOrder(usize),
}

const ORDER: usize = 7;
const SLOTS: usize = ORDER * (ORDER - 1) / 2;

/// One isomorphism class of exceptions.
#[derive(Clone, Debug)]
pub struct ExceptionClass {
    /// Canonical representative, also rendered in `canonical`.
    pub graph: Graph,
    /// Canonical edge-list text; classes are sorted by this string.
    pub canonical: String,
    /// Exact isolated-toughness-variant value (greater than 4 by the filter).
    pub iso_variant: Rational,
    pub connected: bool,
    /// Number of labeled graphs in the class, out of 2^21.
    pub labeled_count: u64,
}

#[derive(Clone, Debug)]
pub struct ExceptionsReport {
    pub order: usize,
    pub total_labeled: u64,
    pub no_factor_labeled: u64,
    pub surviving_labeled: u64,
    pub classes: Vec<ExceptionClass>,
}

fn adjacency_of_mask(mask: u32) -> [u64; ORDER] {
    let mut adj = [0u64; ORDER];
    let mut slot = 0;
    for u in 0..ORDER {
        for v in u + 1..ORDER {
            if mask >> slot & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            slot += 1;
        }
    }
    adj
}

fn graph_of_mask(mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut slot = 0;
    for u in 0..ORDER {
        for v in u + 1..ORDER {
            if mask >> slot & 1 == 1 {
                edges.push((u, v));
            }
            slot += 1;
        }
    }
    Graph::from_edges(ORDER, &edges).expect("mask describes a simple graph")
}

struct ChunkResult {
    no_factor: u64,
    surviving: u64,
    /// smallest labeled mask and count per surviving variant value, keyed by
    /// canonical form later
    survivors: Vec<(u32, Candidate)>,
}

fn scan_chunk(range: std::ops::Range<u32>) -> ChunkResult {
    let full: u64 = (1 << ORDER) - 1;
    let mut result = ChunkResult {
        no_factor: 0,
        surviving: 0,
        survivors: Vec::new(),
    };
    let four = Rational::integer(4);
    for mask in range {
        let adj = adjacency_of_mask(mask);
        if violation_search(&adj, ORDER, CountKind::TriangularCacti).is_none() {
            continue;
        }
        result.no_factor += 1;
        // exact variant value; no-factor graphs are never complete, and some
        // deletion always leaves two isolated vertices at order >= 2
        let candidate =
            scan_isolated_minus_one(&adj, full).expect("non-complete order-7 graph is feasible");
        let value = Rational::ratio(candidate.num as usize, candidate.den as usize);
        if value > four {
            result.surviving += 1;
            result.survivors.push((mask, candidate));
        }
    }
    result
}

/// Runs the full enumeration. Only order 7 is supported; the scan is
/// deterministic regardless of how many workers participate.
pub fn enumerate_exceptions(order: usize) -> Result<ExceptionsReport, ExceptionsError> {
    if order != ORDER {
        return Err(ExceptionsError::UnsupportedOrder(order));
    }
    let total: u32 = 1 << SLOTS;
    const CHUNK: u32 = 1 << 14;
    let chunk_results: Vec<ChunkResult> = (0..total / CHUNK)
        .into_par_iter()
        .map(|i| scan_chunk(i * CHUNK..(i + 1) * CHUNK))
        .collect();

    let mut no_factor = 0;
    let mut surviving = 0;
    // canonical form -> (labeled count, smallest labeled mask, variant value)
    let mut classes: HashMap<String, (u64, u32, Rational)> = HashMap::new();
    for chunk in chunk_results {
        no_factor += chunk.no_factor;
        surviving += chunk.surviving;
        for (mask, candidate) in chunk.survivors {
            let value = Rational::ratio(candidate.num as usize, candidate.den as usize);
            let canonical = crate::canon::canonical_form(&graph_of_mask(mask))
                .expect("order 7 is within the canonical-labeling cap");
            let entry = classes.entry(canonical).or_insert((0, mask, value));
            entry.0 += 1;
            entry.1 = entry.1.min(mask);
            debug_assert_eq!(entry.2, value, "variant value is an isomorphism invariant");
        }
    }

    let mut classes: Vec<ExceptionClass> = classes
        .into_iter()
        .map(|(canonical, (labeled_count, mask, iso_variant))| {
            let graph = crate::canon::canonical_graph(&graph_of_mask(mask))
                .expect("order 7 is within the canonical-labeling cap");
            let connected = components(&graph).count() == 1;
            ExceptionClass {
                graph,
                canonical,
                iso_variant,
                connected,
                labeled_count,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));

    Ok(ExceptionsReport {
        order: ORDER,
        total_labeled: total as u64,
        no_factor_labeled: no_factor,
        surviving_labeled: surviving,
        classes,
    })
}
