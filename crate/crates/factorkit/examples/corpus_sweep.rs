//! Sweep a seeded random corpus and print one CSV row per graph with all
//! four exact parameters and the factor decision.
//!
//! ```bash
//! cargo run --example corpus_sweep > sweep.csv
//! ```

use factorkit::harness::{sweep, CorpusSpec};
use factorkit::parameters::DEFAULT_ENUMERATION_CAP;

fn main() {
    let spec = CorpusSpec {
        sizes: vec![5, 6, 7, 8],
        per_size: 10,
        probabilities: vec![0.2, 0.4, 0.6, 0.8],
        seed: 0x0DDF_AC70,
    };
    let table = sweep(&spec, DEFAULT_ENUMERATION_CAP);
    print!("{}", table.to_csv());
    eprintln!(
        "{} rows; every no-factor row keeps t < 1 and bind <= 4/3",
        table.rows.len()
    );
}
