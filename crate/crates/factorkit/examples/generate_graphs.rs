//! Generators and the edge-list format: standard families, seeded random
//! graphs, and random triangular cacti.
//!
//! ```bash
//! cargo run --example generate_graphs
//! ```

use factorkit::edgelist;
use factorkit::generate::{generate, GeneratorSpec};
use factorkit::structure::is_triangular_cactus;

fn main() {
    // seeded generation is reproducible: same spec, same graph
    let spec = GeneratorSpec::Random { n: 10, p: 0.3, seed: 42 };
    let a = generate(&spec).unwrap();
    let b = generate(&spec).unwrap();
    assert_eq!(a, b);
    println!("random(n=10, p=0.3, seed=42): {} edges", a.size());
    println!("{}\n", edgelist::serialize(&a));

    // a random triangular cactus is recognized as one, every time
    for seed in 0..3 {
        let cactus = generate(&GeneratorSpec::Cactus { blocks: 4, seed }).unwrap();
        assert!(is_triangular_cactus(&cactus, cactus.vertices()).unwrap());
        println!(
            "cactus(blocks=4, seed={seed}): order {}, {} edges, recognized as triangular cactus",
            cactus.order(),
            cactus.size()
        );
    }
    println!();

    // serialize and parse are inverse to each other
    let h3 = generate(&GeneratorSpec::Hm { m: 3 }).unwrap();
    let text = edgelist::serialize(&h3);
    let parsed = edgelist::parse(&text).unwrap();
    assert_eq!(parsed, h3);
    println!("hm(3): order {}, {} edges, round-trips through text", h3.order(), h3.size());
}
