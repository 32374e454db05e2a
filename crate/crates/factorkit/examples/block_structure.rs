//! Connectivity structure: components, blocks, cut vertices, and
//! triangular-cactus recognition.
//!
//! ```bash
//! cargo run --example block_structure
//! ```

use factorkit::canon::canonical_form;
use factorkit::generate::{generate, GeneratorSpec};
use factorkit::structure::{blocks, components, count_tc, is_triangular_cactus, neighborhood};
use factorkit::{Graph, VertexSet};

fn main() {
    let bowtie =
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    let decomposition = blocks(&bowtie);
    println!("bowtie blocks: {:?}", decomposition.blocks);
    println!("bowtie cut vertices: {}", decomposition.cut_vertices);
    println!(
        "bowtie is a triangular cactus: {}\n",
        is_triangular_cactus(&bowtie, bowtie.vertices()).unwrap()
    );

    // deleting the complete core of hm(3) leaves its three triangles
    let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
    let core: VertexSet = [0, 1].into_iter().collect();
    let (rest, relabeling) = h3.induced_delete(core);
    println!("hm(3) minus its core: components {:?}", components(&rest).components);
    println!("  (new labels map back through {relabeling:?})");
    println!(
        "  triangular-cactus components after deleting the core: {}",
        count_tc(&h3, core)
    );
    println!(
        "  neighborhood of the core: {}\n",
        neighborhood(&h3, core)
    );

    // canonical forms identify graphs up to isomorphism
    let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
    let relabeled = Graph::from_edges(5, &[(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
    assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&relabeled).unwrap());
    println!("a five-cycle and its relabeling share the canonical form:");
    println!("{}", canonical_form(&c5).unwrap());
}
