//! Connectivity structure: components, blocks, triangular-cactus
//! recognition, and the counting functions everything else consumes.
//!
//! `count_c_iso` and `count_tc` are the inner loops of the subset
//! enumerations, so both run on raw adjacency words and a liveness mask
//! without materializing an induced subgraph or touching the heap.

use crate::graph::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("{0} is not a connected component of the graph")]
    NotAComponent(VertexSet),
}

/// Connected components as vertex sets, ascending by minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub components: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn isolated_count(&self) -> usize {
        self.components.iter().filter(|c| c.len() == 1).count()
    }
}

/// Flood fill within `alive` starting from `start`; returns the component mask.
pub(crate) fn flood(adj: &[u64], alive: u64, start: usize) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    loop {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= alive & !comp;
        if next == 0 {
            return comp;
        }
        comp |= next;
        frontier = next;
    }
}

pub fn components(g: &Graph) -> ComponentPartition {
    let adj = g.adjacency();
    let alive = g.vertices().0;
    let mut remaining = alive;
    let mut components = Vec::new();
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let comp = flood(adj, alive, start);
        components.push(VertexSet(comp));
        remaining &= !comp;
    }
    ComponentPartition { components }
}

/// `(c, iso)` of `G - S`: component count and isolated-vertex count.
pub fn count_c_iso(g: &Graph, s: VertexSet) -> (usize, usize) {
    count_c_iso_masks(g.adjacency(), g.vertices().difference(s).0)
}

pub(crate) fn count_c_iso_masks(adj: &[u64], alive: u64) -> (usize, usize) {
    let mut remaining = alive;
    let mut c = 0;
    let mut iso = 0;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        if adj[start] & alive == 0 {
            iso += 1;
            c += 1;
            remaining &= remaining - 1;
            continue;
        }
        let comp = flood(adj, alive, start);
        c += 1;
        remaining &= !comp;
    }
    (c, iso)
}

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices, via depth-first search with low-link values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block. A bridge appears as a 2-vertex block and an
    /// isolated vertex as a 1-vertex block.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Edges of `g` inside `block`; every edge of the graph lies in exactly
    /// one block, so these counts partition the edge set.
    pub fn edges_within(g: &Graph, block: VertexSet) -> usize {
        block
            .iter()
            .map(|v| g.neighbors(v).intersection(block).len())
            .sum::<usize>()
            / 2
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    const UNSET: u32 = u32::MAX;
    let n = g.order();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut timer = 0u32;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    let mut cut = VertexSet::EMPTY;

    struct Dfs<'a> {
        g: &'a Graph,
        disc: &'a mut Vec<u32>,
        low: &'a mut Vec<u32>,
        timer: &'a mut u32,
        edge_stack: &'a mut Vec<(usize, usize)>,
        out: &'a mut Vec<VertexSet>,
        cut: &'a mut VertexSet,
    }

    impl Dfs<'_> {
        // returns the number of DFS children of `u`
        fn run(&mut self, u: usize, parent: usize) -> usize {
            self.disc[u] = *self.timer;
            self.low[u] = *self.timer;
            *self.timer += 1;
            let mut children = 0;
            for v in self.g.neighbors(u).iter() {
                if v == parent {
                    continue;
                }
                if self.disc[v] == u32::MAX {
                    children += 1;
                    self.edge_stack.push((u, v));
                    self.run(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut verts = VertexSet::EMPTY;
                        loop {
                            let (a, b) = self.edge_stack.pop().expect("block edge present");
                            verts.insert(a);
                            verts.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(verts);
                        if parent != usize::MAX {
                            self.cut.insert(u);
                        }
                    }
                } else if self.disc[v] < self.disc[u] {
                    self.edge_stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
            children
        }
    }

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            out.push(VertexSet::singleton(root));
            continue;
        }
        let children = Dfs {
            g,
            disc: &mut disc,
            low: &mut low,
            timer: &mut timer,
            edge_stack: &mut edge_stack,
            out: &mut out,
            cut: &mut cut,
        }
        .run(root, usize::MAX);
        if children >= 2 {
            cut.insert(root);
        }
    }
    BlockDecomposition {
        blocks: out,
        cut_vertices: cut,
    }
}

/// Whether the given connected component of `g` is a triangular cactus:
/// a single vertex, or a component all of whose blocks are triangles.
pub fn is_triangular_cactus(g: &Graph, component: VertexSet) -> Result<bool, StructureError> {
    let is_component = components(g).components.contains(&component);
    if !is_component {
        return Err(StructureError::NotAComponent(component));
    }
    if component.len() == 1 {
        return Ok(true);
    }
    let decomposition = blocks(g);
    Ok(decomposition
        .blocks
        .iter()
        .filter(|b| b.is_subset_of(component))
        .all(|&b| b.len() == 3 && BlockDecomposition::edges_within(g, b) == 3))
}

/// Triangle-local triangular-cactus test on a component mask.
///
/// A connected graph on `k >= 3` vertices has every block a triangle exactly
/// when it has `3(k-1)/2` edges and every edge lies in exactly one triangle:
/// such triangles are pairwise edge-disjoint and share at most a vertex, and
/// the vertex count forces their intersection structure to be a tree.
pub(crate) fn is_cactus_mask(adj: &[u64], comp: u64) -> bool {
    let k = comp.count_ones() as usize;
    if k == 1 {
        return true;
    }
    if k.is_multiple_of(2) {
        return false;
    }
    let mut degree_sum = 0usize;
    let mut bits = comp;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        degree_sum += (adj[v] & comp).count_ones() as usize;
    }
    if degree_sum != 3 * (k - 1) {
        return false;
    }
    let mut bits = comp;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        // only edges (v, u) with u > v, each checked once
        let mut higher = adj[v] & comp & !((1u64 << v) | ((1u64 << v) - 1));
        while higher != 0 {
            let u = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            if (adj[v] & adj[u] & comp).count_ones() != 1 {
                return false;
            }
        }
    }
    true
}

/// Number of components of `G - S` that are triangular cacti (isolated
/// vertices included).
pub fn count_tc(g: &Graph, s: VertexSet) -> usize {
    count_tc_masks(g.adjacency(), g.vertices().difference(s).0)
}

pub(crate) fn count_tc_masks(adj: &[u64], alive: u64) -> usize {
    let mut remaining = alive;
    let mut count = 0;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        if adj[start] & alive == 0 {
            count += 1;
            remaining &= remaining - 1;
            continue;
        }
        let comp = flood(adj, alive, start);
        if is_cactus_mask(adj, comp) {
            count += 1;
        }
        remaining &= !comp;
    }
    count
}

/// `N_G(S)`: the union of open neighborhoods of the members of `S`; it may
/// intersect `S` itself.
pub fn neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    let mut out = 0u64;
    for v in s.iter() {
        out |= g.neighbors(v).0;
    }
    VertexSet(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GeneratorSpec};
    use crate::graph::Graph;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn from_mask(n: usize, mask: u64) -> Graph {
        // bit order (0,1),(0,2),...,(n-2,n-1)
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&bowtie()).count(), 1);

        let edgeless = Graph::empty(4).unwrap();
        let parts = components(&edgeless);
        assert_eq!(parts.count(), 4);
        assert_eq!(parts.isolated_count(), 4);
        assert!(parts.components.iter().all(|c| c.len() == 1));

        // hm(3) minus the two K-vertices leaves the three triangles
        let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
        let (rest, _) = h3.induced_delete([0, 1].into_iter().collect());
        let parts = components(&rest);
        assert_eq!(parts.count(), 3);
        assert!(parts.components.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn components_of_empty_graph() {
        assert_eq!(components(&Graph::empty(0).unwrap()).count(), 0);
    }

    #[test]
    fn components_ascending_by_minimum() {
        let g = Graph::from_edges(6, &[(1, 4), (0, 5)]).unwrap();
        let mins: Vec<_> = components(&g)
            .components
            .iter()
            .map(|c| c.lowest().unwrap())
            .collect();
        assert_eq!(mins, vec![0, 1, 2, 3]);
    }

    #[test]
    fn count_c_iso_examples() {
        let g3 = generate(&GeneratorSpec::Gm { m: 3 }).unwrap();
        assert_eq!(count_c_iso(&g3, [0, 1].into_iter().collect()), (3, 3));

        assert_eq!(count_c_iso(&bowtie(), VertexSet::EMPTY), (1, 0));

        let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
        let s: VertexSet = [0, 1, 3, 4, 6, 7, 9, 10].into_iter().collect();
        assert_eq!(count_c_iso(&h3, s), (3, 3));
    }

    #[test]
    fn block_examples() {
        let b = blocks(&bowtie());
        assert_eq!(b.blocks.len(), 2);
        for blk in &b.blocks {
            assert_eq!(blk.len(), 3);
            assert_eq!(BlockDecomposition::edges_within(&bowtie(), *blk), 3);
        }
        assert_eq!(b.cut_vertices, VertexSet::singleton(2));

        let p4 = generate(&GeneratorSpec::Path { n: 4 }).unwrap();
        let b = blocks(&p4);
        assert_eq!(b.blocks.len(), 3);
        assert!(b.blocks.iter().all(|blk| blk.len() == 2));
        assert_eq!(b.cut_vertices, [1, 2].into_iter().collect());

        let k4 = generate(&GeneratorSpec::Complete { n: 4 }).unwrap();
        let b = blocks(&k4);
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.cut_vertices, VertexSet::EMPTY);
    }

    #[test]
    fn blocks_of_isolated_vertices() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let b = blocks(&g);
        assert_eq!(b.blocks.len(), 2);
        assert!(b.blocks.contains(&VertexSet::singleton(2)));
    }

    #[test]
    fn block_edge_partition_on_random_graphs() {
        for seed in 0..30 {
            let g = generate(&GeneratorSpec::Random { n: 10, p: 0.35, seed }).unwrap();
            let total: usize = blocks(&g)
                .blocks
                .iter()
                .map(|&b| BlockDecomposition::edges_within(&g, b))
                .sum();
            assert_eq!(total, g.size(), "seed {seed}");
        }
    }

    #[test]
    fn cut_vertices_match_brute_force_on_all_small_graphs() {
        for n in 1..=5usize {
            let slots = n * (n - 1) / 2;
            for mask in 0u64..1 << slots {
                let g = from_mask(n, mask);
                let base = components(&g).count();
                let brute: VertexSet = (0..n)
                    .filter(|&v| count_c_iso(&g, VertexSet::singleton(v)).0 > base)
                    .collect();
                assert_eq!(blocks(&g).cut_vertices, brute, "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn cactus_recognition_examples() {
        let k1 = Graph::empty(1).unwrap();
        assert!(is_triangular_cactus(&k1, VertexSet::singleton(0)).unwrap());

        let k3 = generate(&GeneratorSpec::Complete { n: 3 }).unwrap();
        assert!(is_triangular_cactus(&k3, VertexSet::full(3)).unwrap());

        let k2 = generate(&GeneratorSpec::Complete { n: 2 }).unwrap();
        assert!(!is_triangular_cactus(&k2, VertexSet::full(2)).unwrap());

        assert!(is_triangular_cactus(&bowtie(), VertexSet::full(5)).unwrap());

        let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        assert!(!is_triangular_cactus(&c5, VertexSet::full(5)).unwrap());
    }

    #[test]
    fn cactus_check_rejects_non_components() {
        let g = bowtie();
        assert_eq!(
            is_triangular_cactus(&g, VertexSet::singleton(0)).unwrap_err(),
            StructureError::NotAComponent(VertexSet::singleton(0))
        );
    }

    #[test]
    fn generated_cacti_recognized_for_all_seeds() {
        for b in 1..=10 {
            for seed in 0..10 {
                let g = generate(&GeneratorSpec::Cactus { blocks: b, seed }).unwrap();
                assert!(
                    is_triangular_cactus(&g, g.vertices()).unwrap(),
                    "blocks={b} seed={seed}"
                );
                assert_eq!(g.size(), 3 * (g.order() - 1) / 2);
            }
        }
    }

    #[test]
    fn count_tc_examples() {
        let g3 = generate(&GeneratorSpec::Gm { m: 3 }).unwrap();
        assert_eq!(count_tc(&g3, [0, 1].into_iter().collect()), 3);

        let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
        assert_eq!(count_tc(&h3, [0, 1].into_iter().collect()), 3);

        let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        assert_eq!(count_tc(&c5, VertexSet::EMPTY), 0);
    }

    #[test]
    fn count_tc_on_disjoint_triangles() {
        for k in 1..=5usize {
            let mut edges = Vec::new();
            for t in 0..k {
                let b = 3 * t;
                edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
            }
            let g = Graph::from_edges(3 * k, &edges).unwrap();
            assert_eq!(count_tc(&g, VertexSet::EMPTY), k);
        }
    }

    #[test]
    fn counting_chain_iso_le_tc_le_c() {
        for seed in 0..40u64 {
            let g = generate(&GeneratorSpec::Random { n: 9, p: 0.3, seed }).unwrap();
            for s_bits in (0..512u64).step_by(7) {
                let s = VertexSet(s_bits);
                let (c, iso) = count_c_iso(&g, s);
                let tc = count_tc(&g, s);
                assert!(iso <= tc && tc <= c, "seed {seed} S {s}");
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // isolated vertices are triangular cacti, and cacti are components
            #[test]
            fn counting_chain_holds_everywhere(
                seed in 0u64..1000,
                p in 0.05f64..0.95,
                s_bits in proptest::bits::u64::masked((1 << 9) - 1),
            ) {
                let g = generate(&GeneratorSpec::Random { n: 9, p, seed }).unwrap();
                let s = VertexSet(s_bits);
                let (c, iso) = count_c_iso(&g, s);
                let tc = count_tc(&g, s);
                prop_assert!(iso <= tc);
                prop_assert!(tc <= c);
            }
        }
    }

    #[test]
    fn mask_predicate_agrees_with_block_predicate_exhaustively() {
        // all labeled graphs on 5 vertices, plus a spot check at n = 6
        for n in [5usize, 6] {
            let slots = n * (n - 1) / 2;
            let step = if n == 5 { 1 } else { 11 };
            for mask in (0u64..1 << slots).step_by(step) {
                let g = from_mask(n, mask);
                for comp in components(&g).components {
                    let by_blocks = is_triangular_cactus(&g, comp).unwrap();
                    let by_mask = is_cactus_mask(g.adjacency(), comp.0);
                    assert_eq!(by_blocks, by_mask, "n={n} mask={mask} comp={comp}");
                }
            }
        }
    }

    #[test]
    fn cactus_component_size_invariant() {
        for b in 1..=8 {
            let g = generate(&GeneratorSpec::Cactus { blocks: b, seed: 3 }).unwrap();
            let k = g.order();
            assert_eq!(k % 2, 1);
            assert_eq!(g.size(), 3 * (k - 1) / 2);
        }
    }

    #[test]
    fn neighborhood_examples() {
        let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        assert_eq!(
            neighborhood(&c5, VertexSet::singleton(0)),
            [1, 4].into_iter().collect()
        );
        assert_eq!(neighborhood(&c5, VertexSet::EMPTY), VertexSet::EMPTY);

        // hm(2): the six triangle vertices see everything, apex included
        let h2 = generate(&GeneratorSpec::Hm { m: 2 }).unwrap();
        let s: VertexSet = (1..7).collect();
        assert_eq!(neighborhood(&h2, s), VertexSet::full(7));
    }
}
