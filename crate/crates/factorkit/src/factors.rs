//! Decide and construct factors whose components are single edges or odd
//! cycles.
//!
//! Two independent decision routes exist on purpose and are each other's
//! oracles in the test suites:
//!
//! * criterion enumeration: a factor allowing odd cycles of length >= 5
//!   exists iff no `S` has more triangular-cactus components in `G - S`
//!   than `|S|`; allowing triangles as well, iff no `S` leaves more than
//!   `|S|` isolated vertices. Violating sets are reported smallest first.
//! * explicit construction by backtracking over edges and odd cycles.
//!
//! Neither route calls the other.

use crate::graph::{Graph, VertexSet};
use crate::structure::{count_c_iso_masks, count_tc_masks};
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

/// Default ceiling for the backtracking construction, separate from the
/// criterion enumeration cap.
pub const DEFAULT_CONSTRUCTION_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("factor decisions require order >= 1")]
    EmptyGraph,
    #[error("order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("minimum cycle length must be 3 or 5, got {0}")]
    BadMinCycle(usize),
}

/// A set `S` certifying non-existence: the relevant count of `G - S`
/// exceeds `|S|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub set: VertexSet,
    /// `c_tc(G-S)` or `iso(G-S)` depending on the criterion; always
    /// at least `|set| + 1`.
    pub count: usize,
}

/// Outcome of a criterion scan, without construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionDecision {
    HasFactor,
    NoFactor(Violation),
}

impl CriterionDecision {
    pub fn exists(&self) -> bool {
        matches!(self, CriterionDecision::HasFactor)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            CriterionDecision::HasFactor => None,
            CriterionDecision::NoFactor(v) => Some(v),
        }
    }
}

/// One component of a factor: a single edge or an odd cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorComponent {
    Edge(usize, usize),
    /// Vertices in cyclic order; the closing edge wraps around.
    Cycle(Vec<usize>),
}

impl fmt::Display for FactorComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorComponent::Edge(u, v) => write!(f, "edge({u} {v})"),
            FactorComponent::Cycle(vs) => {
                write!(f, "cycle(")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A vertex partition into edges and odd cycles, the constructive
/// certificate of factor existence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDecomposition {
    pub components: Vec<FactorComponent>,
}

impl fmt::Display for FactorDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A full decision with its certificate, as printed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorDecision {
    Exists(Option<FactorDecomposition>),
    Absent(Violation),
}

#[derive(Clone, Copy)]
pub(crate) enum CountKind {
    TriangularCacti,
    Isolated,
}

impl CountKind {
    fn count(&self, adj: &[u64], alive: u64) -> usize {
        match self {
            CountKind::TriangularCacti => count_tc_masks(adj, alive),
            CountKind::Isolated => count_c_iso_masks(adj, alive).1,
        }
    }
}

/// Searches for the violating set minimal under (cardinality, encoding),
/// scanning cardinality layers in ascending encoding order (Gosper's hack)
/// and stopping at the first hit. A violation needs `count >= |S| + 1` and
/// `count <= n - |S|`, so only `|S| <= (n-1)/2` can occur.
pub(crate) fn violation_search(adj: &[u64], n: usize, kind: CountKind) -> Option<Violation> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..=n.saturating_sub(1) / 2 {
        if k == 0 {
            let count = kind.count(adj, full);
            if count >= 1 {
                return Some(Violation {
                    set: VertexSet::EMPTY,
                    count,
                });
            }
            continue;
        }
        let mut set: u64 = (1 << k) - 1;
        while set <= full {
            let count = kind.count(adj, full & !set);
            if count > k {
                return Some(Violation {
                    set: VertexSet(set),
                    count,
                });
            }
            // Gosper's hack, widened so the top combination cannot wrap.
            let low = set & set.wrapping_neg();
            let ripple = (set as u128) + (low as u128);
            let next = ripple | (((set as u128 ^ ripple) / low as u128) >> 2);
            if next > full as u128 {
                break;
            }
            set = next as u64;
        }
    }
    None
}

fn criterion(g: &Graph, kind: CountKind, cap: usize) -> Result<CriterionDecision, FactorError> {
    let n = g.order();
    if n == 0 {
        return Err(FactorError::EmptyGraph);
    }
    if n > cap {
        return Err(FactorError::CapExceeded { order: n, cap });
    }
    Ok(match violation_search(g.adjacency(), n, kind) {
        Some(v) => CriterionDecision::NoFactor(v),
        None => CriterionDecision::HasFactor,
    })
}

/// Decides the factor allowing odd cycles of length >= 5, by exhaustive
/// check of `c_tc(G-S) <= |S|` over all `S`.
pub fn cp_criterion(g: &Graph) -> Result<CriterionDecision, FactorError> {
    cp_criterion_capped(g, crate::parameters::DEFAULT_ENUMERATION_CAP)
}

pub fn cp_criterion_capped(g: &Graph, cap: usize) -> Result<CriterionDecision, FactorError> {
    criterion(g, CountKind::TriangularCacti, cap)
}

/// Decides the factor allowing all odd cycles (length >= 3), by exhaustive
/// check of `iso(G-S) <= |S|` over all `S`.
pub fn fractional_tutte(g: &Graph) -> Result<CriterionDecision, FactorError> {
    fractional_tutte_capped(g, crate::parameters::DEFAULT_ENUMERATION_CAP)
}

pub fn fractional_tutte_capped(g: &Graph, cap: usize) -> Result<CriterionDecision, FactorError> {
    criterion(g, CountKind::Isolated, cap)
}

struct Backtracker<'a> {
    adj: &'a [u64],
    full: u64,
    n: usize,
    min_cycle: usize,
    failed: HashSet<u64>,
    components: Vec<FactorComponent>,
}

impl Backtracker<'_> {
    fn search(&mut self, covered: u64) -> bool {
        if covered == self.full {
            return true;
        }
        if self.failed.contains(&covered) {
            return false;
        }
        let rem = self.n - covered.count_ones() as usize;
        // leftovers must split into 2s and odd cycle lengths
        let feasible_size = rem != 1 && !(self.min_cycle == 5 && rem == 3);
        if feasible_size {
            let v = (!covered & self.full).trailing_zeros() as usize;
            // match v to each uncovered neighbor
            let mut candidates = self.adj[v] & !covered;
            while candidates != 0 {
                let u = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                self.components.push(FactorComponent::Edge(v, u));
                if self.search(covered | 1 << v | 1 << u) {
                    return true;
                }
                self.components.pop();
            }
            // grow odd cycles anchored at v
            let mut path = Vec::with_capacity(self.n);
            path.push(v);
            if self.extend_cycle(&mut path, covered, 1 << v) {
                return true;
            }
        }
        self.failed.insert(covered);
        false
    }

    fn extend_cycle(&mut self, path: &mut Vec<usize>, covered: u64, path_mask: u64) -> bool {
        let last = *path.last().expect("path never empty");
        let anchor = path[0];
        let mut candidates = self.adj[last] & !covered & !path_mask;
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            path.push(w);
            let len = path.len();
            // close at odd lengths >= min_cycle, each cycle in one direction
            if len >= self.min_cycle
                && len % 2 == 1
                && self.adj[w] >> anchor & 1 == 1
                && path[1] < w
            {
                self.components.push(FactorComponent::Cycle(path.clone()));
                if self.search(covered | path_mask | 1 << w) {
                    return true;
                }
                self.components.pop();
            }
            if len < self.n && self.extend_cycle(path, covered, path_mask | 1 << w) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Constructs a factor into edges and odd cycles of length >= `min_cycle`
/// (3 or 5), or reports that none exists. Deterministic branch order:
/// lowest uncovered vertex first, edges before cycles, neighbors ascending.
pub fn find_factor(g: &Graph, min_cycle: usize) -> Result<Option<FactorDecomposition>, FactorError> {
    find_factor_capped(g, min_cycle, DEFAULT_CONSTRUCTION_CAP)
}

pub fn find_factor_capped(
    g: &Graph,
    min_cycle: usize,
    cap: usize,
) -> Result<Option<FactorDecomposition>, FactorError> {
    if min_cycle != 3 && min_cycle != 5 {
        return Err(FactorError::BadMinCycle(min_cycle));
    }
    let n = g.order();
    if n == 0 {
        return Err(FactorError::EmptyGraph);
    }
    if n > cap {
        return Err(FactorError::CapExceeded { order: n, cap });
    }
    let mut bt = Backtracker {
        adj: g.adjacency(),
        full: g.vertices().0,
        n,
        min_cycle,
        failed: HashSet::new(),
        components: Vec::new(),
    };
    if bt.search(0) {
        Ok(Some(FactorDecomposition {
            components: bt.components,
        }))
    } else {
        Ok(None)
    }
}

/// Why a claimed decomposition is not a factor.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorDefect {
    #[error("vertex {0} appears in more than one component")]
    VertexReused(usize),
    #[error("vertex {0} is not covered")]
    VertexUncovered(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0} {1} is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("edge component with equal endpoints {0}")]
    DegenerateEdge(usize),
    #[error("cycle of even length {0}")]
    EvenCycle(usize),
    #[error("cycle of length {len} below the minimum {min}")]
    CycleTooShort { len: usize, min: usize },
}

/// Full validation of a decomposition against `g` and a minimum cycle
/// length; the `Err` names the first defect found.
pub fn check_factor(
    g: &Graph,
    f: &FactorDecomposition,
    min_cycle: usize,
) -> Result<(), FactorDefect> {
    let n = g.order();
    let mut covered = VertexSet::EMPTY;
    let cover = |v: usize, covered: &mut VertexSet| -> Result<(), FactorDefect> {
        if v >= n {
            return Err(FactorDefect::VertexOutOfRange(v));
        }
        if covered.contains(v) {
            return Err(FactorDefect::VertexReused(v));
        }
        covered.insert(v);
        Ok(())
    };
    for component in &f.components {
        match component {
            FactorComponent::Edge(u, v) => {
                if u == v {
                    return Err(FactorDefect::DegenerateEdge(*u));
                }
                cover(*u, &mut covered)?;
                cover(*v, &mut covered)?;
                if !g.has_edge(*u, *v) {
                    return Err(FactorDefect::MissingEdge(*u, *v));
                }
            }
            FactorComponent::Cycle(vs) => {
                if vs.len() % 2 == 0 {
                    return Err(FactorDefect::EvenCycle(vs.len()));
                }
                if vs.len() < min_cycle {
                    return Err(FactorDefect::CycleTooShort {
                        len: vs.len(),
                        min: min_cycle,
                    });
                }
                for &v in vs {
                    cover(v, &mut covered)?;
                }
                for i in 0..vs.len() {
                    let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                    if !g.has_edge(a, b) {
                        return Err(FactorDefect::MissingEdge(a, b));
                    }
                }
            }
        }
    }
    match g.vertices().difference(covered).lowest() {
        Some(v) => Err(FactorDefect::VertexUncovered(v)),
        None => Ok(()),
    }
}

/// Boolean form of [`check_factor`].
pub fn validate_factor(g: &Graph, f: &FactorDecomposition, min_cycle: usize) -> bool {
    check_factor(g, f, min_cycle).is_ok()
}
