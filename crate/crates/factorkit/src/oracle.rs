//! Plain reference implementations of the four parameters, kept deliberately
//! independent of the production enumeration engine: no pruning, no bitmask
//! flood fill (components come from union-find over the edge list), no
//! parallelism. The test suites compare the two paths result-for-result.
//!
//! These are exponential with a bad constant; use them at order <= 9 or so.

use crate::graph::{Graph, VertexSet};
use crate::parameters::{Parameter, ParameterResult};
use crate::rational::Rational;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// `(c, iso)` of `G - S` via union-find over the surviving edges.
fn c_iso_by_union_find(g: &Graph, s: VertexSet) -> (usize, usize) {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| !s.contains(v)).collect();
    let index: std::collections::HashMap<usize, usize> =
        keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(keep.len());
    for (u, v) in g.edges() {
        if let (Some(&iu), Some(&iv)) = (index.get(&u), index.get(&v)) {
            uf.union(iu, iv);
        }
    }
    let mut component_size = vec![0usize; keep.len()];
    for i in 0..keep.len() {
        let root = uf.find(i);
        component_size[root] += 1;
    }
    let c = component_size.iter().filter(|&&s| s > 0).count();
    let iso = component_size.iter().filter(|&&s| s == 1).count();
    (c, iso)
}

fn neighborhood_by_scan(g: &Graph, s: VertexSet) -> usize {
    (0..g.order())
        .filter(|&w| s.iter().any(|v| g.has_edge(v, w)))
        .count()
}

fn minimize(
    g: &Graph,
    parameter: Parameter,
    ratio_at: impl Fn(&Graph, VertexSet) -> Option<(usize, usize)>,
) -> ParameterResult {
    let n = g.order();
    assert!((2..=24).contains(&n), "oracle path is for small graphs");
    let mut best: Option<(Rational, VertexSet)> = None;
    for bits in 0u64..1 << n {
        let s = VertexSet(bits);
        if let Some((num, den)) = ratio_at(g, s) {
            let value = Rational::ratio(num, den);
            let replace = match &best {
                None => true,
                Some((bv, bs)) => {
                    value < *bv
                        || (value == *bv && s.len() < bs.len())
                        || (value == *bv && s.len() == bs.len() && s.0 < bs.0)
                }
            };
            if replace {
                best = Some((value, s));
            }
        }
    }
    let (value, witness) = best.expect("feasible subset exists");
    ParameterResult {
        parameter,
        value,
        witness,
    }
}

pub fn toughness(g: &Graph) -> ParameterResult {
    if g.is_complete() {
        return ParameterResult {
            parameter: Parameter::Toughness,
            value: Rational::INFINITY,
            witness: VertexSet::EMPTY,
        };
    }
    minimize(g, Parameter::Toughness, |g, s| {
        let (c, _) = c_iso_by_union_find(g, s);
        (c >= 2).then_some((s.len(), c))
    })
}

pub fn isolated_toughness(g: &Graph) -> ParameterResult {
    if g.is_complete() {
        return ParameterResult {
            parameter: Parameter::IsolatedToughness,
            value: Rational::INFINITY,
            witness: VertexSet::EMPTY,
        };
    }
    minimize(g, Parameter::IsolatedToughness, |g, s| {
        let (_, iso) = c_iso_by_union_find(g, s);
        (iso >= 2).then_some((s.len(), iso))
    })
}

pub fn isolated_toughness_variant(g: &Graph) -> ParameterResult {
    if g.is_complete() {
        return ParameterResult {
            parameter: Parameter::IsolatedToughnessVariant,
            value: Rational::INFINITY,
            witness: VertexSet::EMPTY,
        };
    }
    minimize(g, Parameter::IsolatedToughnessVariant, |g, s| {
        let (_, iso) = c_iso_by_union_find(g, s);
        (iso >= 2).then(|| (s.len(), iso - 1))
    })
}

pub fn binding_number(g: &Graph) -> ParameterResult {
    minimize(g, Parameter::BindingNumber, |g, s| {
        if s.is_empty() {
            return None;
        }
        let nbr = neighborhood_by_scan(g, s);
        (nbr < g.order()).then_some((nbr, s.len()))
    })
}
