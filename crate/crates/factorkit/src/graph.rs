//! Simple undirected graphs on at most 64 densely labeled vertices.
//!
//! Adjacency is one `u64` bitmask per vertex. That representation caps the
//! order at [`MAX_ORDER`], which is far beyond what the exhaustive
//! subset-enumeration kernels can chew through anyway, and it makes the hot
//! loops (component counting over `G - S` for 2^n sets `S`) allocation-free.

use std::fmt;
use thiserror::Error;

/// Hard representation limit: one adjacency word per vertex.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// A set of vertices of some ambient graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Smallest member, if any.
    pub fn lowest(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An immutable simple undirected graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            order: n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates
    /// (in either orientation), and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in VertexSet(self.adj[u] & !VertexSet::full(u + 1).0).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let full = self.vertices().0;
        (0..self.order).all(|v| self.adj[v] == full & !(1 << v))
    }

    /// Raw adjacency words, for the enumeration kernels.
    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// The induced subgraph `G - S`, together with the map from new labels
    /// back to the original ones (ascending).
    pub fn induced_delete(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = self.vertices().difference(s).iter().collect();
        let mut new_index = vec![usize::MAX; self.order];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph {
            order: keep.len(),
            adj: vec![0; keep.len()],
        };
        for (i, &v) in keep.iter().enumerate() {
            for w in VertexSet(self.adj[v]).iter() {
                if new_index[w] != usize::MAX {
                    g.adj[i] |= 1 << new_index[w];
                }
            }
        }
        (g, keep)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}
