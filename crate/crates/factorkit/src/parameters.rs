//! Exact computation of the four vulnerability parameters with minimizing
//! witnesses, by exhaustive subset enumeration.
//!
//! * toughness `t`: min `|S| / c(G-S)` over `S` with `c(G-S) >= 2`;
//!   `+inf` on complete graphs.
//! * isolated toughness `I`: min `|S| / iso(G-S)` over `S` with
//!   `iso(G-S) >= 2`; `+inf` on complete graphs.
//! * its variant `I'`: as `I` but with denominator `iso(G-S) - 1`.
//! * binding number `bind`: min `|N(S)| / |S|` over nonempty `S` with
//!   `N(S) != V`; always finite (`bind(K_n) = n - 1`).
//!
//! Subsets are enumerated as integers `0..2^n`. Among subsets achieving the
//! minimum the reported witness has the smallest cardinality, then the
//! smallest integer encoding; every pruning step is value-preserving, and
//! parallel runs reduce with the same tie-break, so results are identical at
//! any worker count. Pruned results are cross-checked against the plain
//! loops in [`crate::oracle`] by the test suites.

use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::structure::count_c_iso_masks;
use rayon::prelude::*;
use std::fmt;
use thiserror::Error;

/// Default ceiling for the `2^n` subset enumerations.
pub const DEFAULT_ENUMERATION_CAP: usize = 26;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParameterError {
    #[error("parameters are defined for graphs of order >= 2, got {0}")]
    OrderTooSmall(usize),
    #[error("order {order} exceeds the enumeration cap {cap}; raise --cap to enumerate 2^{order} subsets explicitly")]
    CapExceeded { order: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    Toughness,
    IsolatedToughness,
    IsolatedToughnessVariant,
    BindingNumber,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [
        Parameter::Toughness,
        Parameter::IsolatedToughness,
        Parameter::IsolatedToughnessVariant,
        Parameter::BindingNumber,
    ];

    /// The CLI selector: `t`, `i`, `iprime`, `bind`.
    pub fn selector(&self) -> &'static str {
        match self {
            Parameter::Toughness => "t",
            Parameter::IsolatedToughness => "i",
            Parameter::IsolatedToughnessVariant => "iprime",
            Parameter::BindingNumber => "bind",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.selector())
    }
}

/// An exact parameter value plus the subset achieving it.
///
/// When the value is `+inf` (complete-graph convention) the witness is empty
/// and meaningless. Otherwise re-evaluating the defining ratio at the
/// witness reproduces the value exactly; see [`evaluate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterResult {
    pub parameter: Parameter,
    pub value: Rational,
    pub witness: VertexSet,
}

/// `(numerator, denominator, cardinality, encoding)` with the tie-break
/// order baked in. Numerators and denominators are vertex counts, so the
/// cross multiplication fits comfortably in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub(crate) num: u32,
    pub(crate) den: u32,
    pub(crate) card: u32,
    pub(crate) set: u64,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        let lhs = self.num as u64 * other.den as u64;
        let rhs = other.num as u64 * self.den as u64;
        if lhs != rhs {
            return lhs < rhs;
        }
        if self.card != other.card {
            return self.card < other.card;
        }
        self.set < other.set
    }

    fn merge(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        }
    }

    fn into_result(self, parameter: Parameter) -> ParameterResult {
        ParameterResult {
            parameter,
            value: Rational::ratio(self.num as usize, self.den as usize),
            witness: VertexSet(self.set),
        }
    }
}

fn check_preconditions(g: &Graph, cap: usize) -> Result<(), ParameterError> {
    let n = g.order();
    if n < 2 {
        return Err(ParameterError::OrderTooSmall(n));
    }
    if n > cap || n > crate::graph::MAX_ORDER {
        return Err(ParameterError::CapExceeded {
            order: n,
            cap: cap.min(crate::graph::MAX_ORDER),
        });
    }
    Ok(())
}

/// What a deletion-style parameter wants from `(c, iso)` of `G - S`.
#[derive(Clone, Copy)]
enum DeletionKind {
    Components,
    Isolated,
    IsolatedMinusOne,
}

impl DeletionKind {
    /// Denominator for a feasible `S`, or `None` when `S` is infeasible.
    fn denominator(&self, c: usize, iso: usize) -> Option<u32> {
        match self {
            DeletionKind::Components => (c >= 2).then_some(c as u32),
            DeletionKind::Isolated => (iso >= 2).then_some(iso as u32),
            DeletionKind::IsolatedMinusOne => (iso >= 2).then(|| iso as u32 - 1),
        }
    }
}

/// Scans `sets` in ascending order, keeping the tie-break-minimal candidate.
///
/// `best_in` seeds the pruning bound (from a previous chunk or thread; it
/// never affects which candidate wins, only how much gets skipped).
fn scan_range(
    adj: &[u64],
    full: u64,
    kind: DeletionKind,
    range: std::ops::Range<u64>,
    mut best: Option<Candidate>,
) -> Option<Candidate> {
    let n = full.count_ones();
    for set in range {
        let card = set.count_ones();
        if card == n {
            continue; // nothing left to count
        }
        // c and iso are at most n - |S|, so |S| / (n - |S|) bounds the ratio
        // from below; skip only when strictly worse than the current best.
        if let Some(b) = best {
            if card as u64 * b.den as u64 > b.num as u64 * (n - card) as u64 {
                continue;
            }
        }
        let (c, iso) = count_c_iso_masks(adj, full & !set);
        if let Some(den) = kind.denominator(c, iso) {
            let candidate = Candidate { num: card, den, card, set };
            if best.is_none_or(|b| candidate.better_than(&b)) {
                best = Some(candidate);
            }
        }
    }
    best
}

/// Full isolated-toughness-variant scan on raw adjacency words, for callers
/// that keep their graphs on the stack (the exception enumeration).
pub(crate) fn scan_isolated_minus_one(adj: &[u64], full: u64) -> Option<Candidate> {
    let n = full.count_ones() as u64;
    scan_range(adj, full, DeletionKind::IsolatedMinusOne, 0..1 << n, None)
}

fn minimize_deletion(g: &Graph, kind: DeletionKind) -> Option<Candidate> {
    let adj = g.adjacency();
    let full = g.vertices().0;
    let n = g.order();
    let total: u64 = 1 << n;
    const CHUNK: u64 = 1 << 16;
    if total <= CHUNK {
        return scan_range(adj, full, kind, 0..total, None);
    }
    // Fixed-size chunks scanned independently and merged with the same
    // tie-break; the partition does not depend on the worker count.
    let chunks: Vec<u64> = (0..total / CHUNK).collect();
    chunks
        .par_iter()
        .map(|&i| scan_range(adj, full, kind, i * CHUNK..(i + 1) * CHUNK, None))
        .reduce(|| None, Candidate::merge)
}

/// Binding-number scan: depth-first include/exclude over vertices with the
/// running neighborhood union, visiting subsets in ascending encoding order.
/// Once `N(S) = V` every superset is infeasible, so that subtree is cut.
fn bind_scan(
    adj: &[u64],
    full: u64,
    next_vertex: i32,
    set: u64,
    card: u32,
    nbr: u64,
    best: &mut Option<Candidate>,
) {
    if nbr == full {
        return; // infeasible, and monotone in S
    }
    if next_vertex < 0 {
        if set != 0 {
            let candidate = Candidate {
                num: nbr.count_ones(),
                den: card,
                card,
                set,
            };
            if best.is_none_or(|b| candidate.better_than(&b)) {
                *best = Some(candidate);
            }
        }
        return;
    }
    // |N| only grows and |S| can reach at most card + next_vertex + 1, so
    // |N(now)| / (card + remaining) bounds every completion from below.
    if let Some(b) = *best {
        let max_card = card as u64 + next_vertex as u64 + 1;
        if nbr.count_ones() as u64 * b.den as u64 > b.num as u64 * max_card {
            return;
        }
    }
    let v = next_vertex as usize;
    bind_scan(adj, full, next_vertex - 1, set, card, nbr, best);
    bind_scan(
        adj,
        full,
        next_vertex - 1,
        set | 1 << v,
        card + 1,
        nbr | adj[v],
        best,
    );
}

/// Computes one parameter under the default enumeration cap.
pub fn compute(g: &Graph, parameter: Parameter) -> Result<ParameterResult, ParameterError> {
    compute_capped(g, parameter, DEFAULT_ENUMERATION_CAP)
}

/// Computes one parameter; orders above `cap` are an error, never an
/// approximation.
pub fn compute_capped(
    g: &Graph,
    parameter: Parameter,
    cap: usize,
) -> Result<ParameterResult, ParameterError> {
    check_preconditions(g, cap)?;
    let kind = match parameter {
        Parameter::Toughness => DeletionKind::Components,
        Parameter::IsolatedToughness => DeletionKind::Isolated,
        Parameter::IsolatedToughnessVariant => DeletionKind::IsolatedMinusOne,
        Parameter::BindingNumber => {
            let mut best = None;
            bind_scan(
                g.adjacency(),
                g.vertices().0,
                g.order() as i32 - 1,
                0,
                0,
                0,
                &mut best,
            );
            let candidate = best.expect("a singleton is always feasible");
            return Ok(candidate.into_result(parameter));
        }
    };
    if g.is_complete() {
        return Ok(ParameterResult {
            parameter,
            value: Rational::INFINITY,
            witness: VertexSet::EMPTY,
        });
    }
    let candidate = minimize_deletion(g, kind)
        .expect("every non-complete graph of order >= 2 has a feasible subset");
    Ok(candidate.into_result(parameter))
}

pub fn toughness(g: &Graph) -> Result<ParameterResult, ParameterError> {
    compute(g, Parameter::Toughness)
}

pub fn isolated_toughness(g: &Graph) -> Result<ParameterResult, ParameterError> {
    compute(g, Parameter::IsolatedToughness)
}

pub fn isolated_toughness_variant(g: &Graph) -> Result<ParameterResult, ParameterError> {
    compute(g, Parameter::IsolatedToughnessVariant)
}

pub fn binding_number(g: &Graph) -> Result<ParameterResult, ParameterError> {
    compute(g, Parameter::BindingNumber)
}

/// Evaluates the defining ratio of `parameter` at a specific `s`, or `None`
/// when `s` fails the side condition. Used to audit witnesses.
pub fn evaluate(g: &Graph, parameter: Parameter, s: VertexSet) -> Option<Rational> {
    match parameter {
        Parameter::Toughness => {
            let (c, _) = crate::structure::count_c_iso(g, s);
            (c >= 2).then(|| Rational::ratio(s.len(), c))
        }
        Parameter::IsolatedToughness => {
            let (_, iso) = crate::structure::count_c_iso(g, s);
            (iso >= 2).then(|| Rational::ratio(s.len(), iso))
        }
        Parameter::IsolatedToughnessVariant => {
            let (_, iso) = crate::structure::count_c_iso(g, s);
            (iso >= 2).then(|| Rational::ratio(s.len(), iso - 1))
        }
        Parameter::BindingNumber => {
            let nbr = crate::structure::neighborhood(g, s);
            (!s.is_empty() && nbr != g.vertices()).then(|| Rational::ratio(nbr.len(), s.len()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GeneratorSpec};

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn toughness_examples() {
        let g3 = generate(&GeneratorSpec::Gm { m: 3 }).unwrap();
        let r = toughness(&g3).unwrap();
        assert_eq!(r.value, rat(2, 3));
        assert_eq!(r.witness, [0, 1].into_iter().collect());

        let k5 = generate(&GeneratorSpec::Complete { n: 5 }).unwrap();
        let r = toughness(&k5).unwrap();
        assert_eq!(r.value, Rational::INFINITY);
        assert!(r.witness.is_empty());

        // brute force over all 32 subsets of the bowtie confirms the cut
        // vertex is optimal
        let r = toughness(&bowtie()).unwrap();
        assert_eq!(r.value, rat(1, 2));
        assert_eq!(r.witness, VertexSet::singleton(2));
        let o = crate::oracle::toughness(&bowtie());
        assert_eq!((o.value, o.witness), (r.value, r.witness));
    }

    #[test]
    fn isolated_toughness_examples() {
        let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
        assert_eq!(isolated_toughness(&h3).unwrap().value, rat(8, 3));

        let edgeless = Graph::empty(3).unwrap();
        let r = isolated_toughness(&edgeless).unwrap();
        assert_eq!(r.value, Rational::zero());
        assert_eq!(r.witness, VertexSet::EMPTY);

        let p4 = generate(&GeneratorSpec::Path { n: 4 }).unwrap();
        let r = isolated_toughness(&p4).unwrap();
        assert_eq!(r.value, rat(1, 1));
        let o = crate::oracle::isolated_toughness(&p4);
        assert_eq!((o.value, o.witness), (r.value, r.witness));
    }

    #[test]
    fn isolated_toughness_variant_examples() {
        let h2 = generate(&GeneratorSpec::Hm { m: 2 }).unwrap();
        assert_eq!(isolated_toughness_variant(&h2).unwrap().value, rat(5, 1));

        let h5 = generate(&GeneratorSpec::Hm { m: 5 }).unwrap();
        assert_eq!(isolated_toughness_variant(&h5).unwrap().value, rat(7, 2));

        // X = N(u) | N(v) for degree-2 vertices u, v in the two blocks gives
        // |X| = 3 and two isolated vertices; brute force confirms 3 is optimal
        let r = isolated_toughness_variant(&bowtie()).unwrap();
        assert_eq!(r.value, rat(3, 1));
        let o = crate::oracle::isolated_toughness_variant(&bowtie());
        assert_eq!(o.value, rat(3, 1));
    }

    #[test]
    fn binding_number_examples() {
        let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
        assert_eq!(binding_number(&h3).unwrap().value, rat(4, 3));

        assert_eq!(binding_number(&bowtie()).unwrap().value, rat(4, 3));

        // complete graphs are not infinite here: only singletons feasible
        let k4 = generate(&GeneratorSpec::Complete { n: 4 }).unwrap();
        let r = binding_number(&k4).unwrap();
        assert_eq!(r.value, rat(3, 1));
        assert_eq!(r.witness, VertexSet::singleton(0));
        let o = crate::oracle::binding_number(&k4);
        assert_eq!((o.value, o.witness), (r.value, r.witness));
    }

    #[test]
    fn order_preconditions() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(
            compute(&k1, Parameter::Toughness).unwrap_err(),
            ParameterError::OrderTooSmall(1)
        );
        let big = Graph::empty(27).unwrap();
        assert_eq!(
            compute(&big, Parameter::BindingNumber).unwrap_err(),
            ParameterError::CapExceeded { order: 27, cap: 26 }
        );
        let raised = compute_capped(&Graph::empty(27).unwrap(), Parameter::Toughness, 30);
        assert_eq!(raised.unwrap().value, Rational::zero());
    }

    #[test]
    fn order_two_edge_cases() {
        let k2 = generate(&GeneratorSpec::Complete { n: 2 }).unwrap();
        assert_eq!(toughness(&k2).unwrap().value, Rational::INFINITY);
        assert_eq!(binding_number(&k2).unwrap().value, rat(1, 1));

        let e2 = Graph::empty(2).unwrap();
        assert_eq!(toughness(&e2).unwrap().value, Rational::zero());
        assert_eq!(isolated_toughness(&e2).unwrap().value, Rational::zero());
        assert_eq!(isolated_toughness_variant(&e2).unwrap().value, Rational::zero());
        assert_eq!(binding_number(&e2).unwrap().value, Rational::zero());
    }

    #[test]
    fn witnesses_are_sound() {
        for seed in 0..25u64 {
            let g = generate(&GeneratorSpec::Random { n: 8, p: 0.4, seed }).unwrap();
            for p in Parameter::ALL {
                let r = compute(&g, p).unwrap();
                if r.value.is_finite() {
                    assert_eq!(
                        evaluate(&g, p, r.witness),
                        Some(r.value),
                        "seed {seed} {p}: witness {} does not reproduce {}",
                        r.witness,
                        r.value
                    );
                } else {
                    assert!(r.witness.is_empty());
                }
            }
        }
    }

    #[test]
    fn pruned_engine_matches_unpruned_oracle() {
        // full result equality, witness included, on every connected graph
        // up to order 6 and a random batch at order 7
        let mut graphs = Vec::new();
        for n in 2..=6 {
            graphs.extend(crate::canon::connected_graphs(n).unwrap());
        }
        for seed in 0..20u64 {
            graphs.push(generate(&GeneratorSpec::Random { n: 7, p: 0.35, seed }).unwrap());
        }
        for g in &graphs {
            for p in Parameter::ALL {
                let fast = compute(g, p).unwrap();
                let slow = match p {
                    Parameter::Toughness => crate::oracle::toughness(g),
                    Parameter::IsolatedToughness => crate::oracle::isolated_toughness(g),
                    Parameter::IsolatedToughnessVariant => {
                        crate::oracle::isolated_toughness_variant(g)
                    }
                    Parameter::BindingNumber => crate::oracle::binding_number(g),
                };
                assert_eq!(fast.value, slow.value, "{g:?} {p}");
                assert_eq!(fast.witness, slow.witness, "{g:?} {p}");
            }
        }
    }

    #[test]
    fn parameter_chain_on_mixed_corpus() {
        // t <= I <= I', bind <= I, and I < I' strictly whenever I > 0
        let mut graphs = Vec::new();
        for seed in 0..30u64 {
            let p = [0.15, 0.35, 0.6, 0.85][seed as usize % 4];
            graphs.push(generate(&GeneratorSpec::Random { n: 9, p, seed }).unwrap());
        }
        graphs.push(bowtie());
        graphs.push(generate(&GeneratorSpec::Hm { m: 3 }).unwrap());
        for g in &graphs {
            if g.is_complete() {
                continue;
            }
            let t = toughness(g).unwrap().value;
            let i = isolated_toughness(g).unwrap().value;
            let ip = isolated_toughness_variant(g).unwrap().value;
            let b = binding_number(g).unwrap().value;
            assert!(t <= i, "{g:?}");
            assert!(i <= ip, "{g:?}");
            assert!(b <= i, "{g:?}");
            if i > Rational::zero() {
                assert!(i < ip, "{g:?}");
            }
        }
    }

    #[test]
    fn adding_edges_never_splits_components() {
        // c(G + e - S) <= c(G - S) for every S, the fixed-set form of
        // toughness monotonicity
        for seed in 0..10u64 {
            let g = generate(&GeneratorSpec::Random { n: 7, p: 0.3, seed }).unwrap();
            let non_edges: Vec<(usize, usize)> = (0..7)
                .flat_map(|u| (u + 1..7).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            let Some(&(u, v)) = non_edges.first() else { continue };
            let mut edges = g.edges();
            edges.push((u, v));
            let bigger = Graph::from_edges(7, &edges).unwrap();
            for s_bits in 0u64..1 << 7 {
                let s = VertexSet(s_bits);
                let (c_before, _) = crate::structure::count_c_iso(&g, s);
                let (c_after, _) = crate::structure::count_c_iso(&bigger, s);
                assert!(c_after <= c_before, "seed {seed} S {s}");
            }
        }
    }
}
