//! Canonical labeling by brute-force minimal adjacency bitstring, and the
//! small-graph catalogs built on top of it.
//!
//! The canonical form of a graph is the smallest packed upper-triangle
//! adjacency bitstring over all vertex relabelings that place vertices in
//! ascending degree order. Both restrictions preserve canonicity: the
//! degree constraint is isomorphism-invariant (and prunes the factorial
//! search hard), and any total order on bitstrings works because the
//! minimum is itself the adjacency string of a relabeling of the input.
//! Nothing here runs above order 10, and the catalogs need it mostly at
//! order 7.

use crate::graph::Graph;
use thiserror::Error;

/// Orders above this make the permutation search unreasonable.
pub const MAX_CANON_ORDER: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonical labeling supports order <= {MAX_CANON_ORDER}, got {0}")]
    OrderTooLarge(usize),
}

/// Upper-triangle bits of `g` in the order `(0,1),(0,2),...,(n-2,n-1)`,
/// packed little-endian into a `u64` (order 10 needs 45 bits).
fn edge_bits(g: &Graph) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    let mut slot = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                bits |= 1 << slot;
            }
            slot += 1;
        }
    }
    bits
}

fn from_edge_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut slot = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> slot & 1 == 1 {
                edges.push((u, v));
            }
            slot += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("bitstring describes a simple graph")
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// target degree for each position, ascending
    target_degrees: Vec<usize>,
    /// assignment[pos] = original vertex placed at pos
    assignment: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl Search<'_> {
    /// Bits contributed by placing `v` at position `pos`: edges from `pos`
    /// to all earlier positions, at their slots in the upper triangle.
    fn placement_bits(&self, pos: usize, v: usize) -> u64 {
        let mut bits = 0u64;
        for (earlier_pos, &w) in self.assignment.iter().take(pos).enumerate() {
            if self.g.has_edge(v, w) {
                bits |= 1 << slot_index(self.n, earlier_pos, pos);
            }
        }
        bits
    }

    fn descend(&mut self, pos: usize, acc: u64) {
        // bits are only ever added, so acc is a lower bound on any completion
        if let Some(best) = self.best {
            if acc >= best {
                return;
            }
        }
        if pos == self.n {
            self.best = Some(acc);
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.g.degree(v) != self.target_degrees[pos] {
                continue;
            }
            self.assignment[pos] = v;
            self.used |= 1 << v;
            self.descend(pos + 1, acc | self.placement_bits(pos, v));
            self.used &= !(1 << v);
        }
    }
}

/// Slot of the pair `(min, max)` in the upper-triangle ordering.
fn slot_index(n: usize, a: usize, b: usize) -> usize {
    let (lo, hi) = (a.min(b), a.max(b));
    // slots for rows 0..lo, then offset within row lo
    lo * (2 * n - lo - 1) / 2 + (hi - lo - 1)
}

/// The canonical relabeling of `g`: isomorphic graphs map to equal graphs.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderTooLarge(n));
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let mut target_degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    target_degrees.sort_unstable();
    let mut search = Search {
        g,
        n,
        target_degrees,
        assignment: vec![usize::MAX; n],
        used: 0,
        best: None,
    };
    search.descend(0, 0);
    Ok(from_edge_bits(n, search.best.expect("some labeling exists")))
}

/// A label string equal for isomorphic graphs and distinct otherwise: the
/// canonical relabeling in edge-list text form.
pub fn canonical_form(g: &Graph) -> Result<String, CanonError> {
    Ok(crate::edgelist::serialize(&canonical_graph(g)?))
}

/// One representative per isomorphism class of graphs on `n` vertices, built
/// by augmenting the order-`(n-1)` catalog one vertex at a time. Ascending
/// by canonical edge bits.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, CanonError> {
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderTooLarge(n));
    }
    let mut current = vec![Graph::empty(1).expect("order 1")];
    for k in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for g in &current {
            let edges_base = g.edges();
            for mask in 0u64..1 << (k - 1) {
                let mut edges = edges_base.clone();
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        edges.push((v, k - 1));
                    }
                }
                let candidate = Graph::from_edges(k, &edges).expect("valid augmentation");
                let canonical = canonical_graph(&candidate)?;
                if seen.insert(edge_bits(&canonical)) {
                    next.push(canonical);
                }
            }
        }
        next.sort_by_key(edge_bits);
        current = next;
    }
    if n == 0 {
        current = vec![];
    }
    Ok(current)
}

/// Connected representatives on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, CanonError> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| crate::structure::components(g).count() == 1)
        .collect())
}
