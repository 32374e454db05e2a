//! Compute all four vulnerability parameters of a graph, with witnesses.
//!
//! ```bash
//! cargo run --example compute_parameters
//! ```

use factorkit::edgelist;
use factorkit::parameters::{compute, evaluate, Parameter};

fn main() {
    // the bowtie: two triangles sharing vertex 2
    let text = "\
# two triangles glued at one vertex
n 5
0 1
0 2
1 2
2 3
2 4
3 4";
    let graph = edgelist::parse(text).expect("well-formed edge list");
    println!("graph: {}\n", edgelist::serialize(&graph).replace('\n', "  "));

    for parameter in Parameter::ALL {
        let result = compute(&graph, parameter).expect("small graph");
        print!("{:>6} = {}", parameter.selector(), result.value);
        if result.value.is_finite() {
            // the witness reproduces the value through the defining ratio
            let check = evaluate(&graph, parameter, result.witness).expect("feasible witness");
            print!("   witness {} (re-evaluates to {})", result.witness, check);
        }
        println!();
    }
}
