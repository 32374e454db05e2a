//! Run the claim-verification suite on a reduced corpus and print the
//! report. The full configuration (10000 random graphs, exhaustive catalogs
//! through order 7, the order-7 exception scan) runs via the `acceptance`
//! test target or `factorkit verify-paper`.
//!
//! ```bash
//! cargo run --example verify_claims
//! ```

use factorkit::harness::{verify_paper, VerifyOptions};

fn main() {
    let report = verify_paper(&VerifyOptions::quick());
    print!("{}", report.render_text());
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
