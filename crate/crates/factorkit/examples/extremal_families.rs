//! The two families on which the factor-forcing bounds are tight.
//!
//! `gm(m)` keeps its toughness strictly below 1 while approaching it, so no
//! bound below 1 can force a factor. `hm(m)` does the same for isolated
//! toughness below 3, its variant down to 7/2, and binding number at 4/3.
//!
//! ```bash
//! cargo run --example extremal_families
//! ```

use factorkit::generate::{generate, GeneratorSpec};
use factorkit::parameters::{compute, Parameter};

fn main() {
    println!("gm(m): complete graph on m-1 vertices joined to m independent vertices");
    println!("{:>3} {:>6} {:>7} {:>12}", "m", "order", "edges", "toughness");
    for m in 3..=6 {
        let g = generate(&GeneratorSpec::Gm { m }).expect("valid m");
        let t = compute(&g, Parameter::Toughness).expect("in cap").value;
        println!("{:>3} {:>6} {:>7} {:>12}", m, g.order(), g.size(), t.to_string());
    }
    println!("    values (m-1)/m climb toward 1 but never force a factor\n");

    println!("hm(m): complete graph on m-1 vertices joined to m disjoint triangles");
    println!(
        "{:>3} {:>6} {:>7} {:>10} {:>10} {:>8}",
        "m", "order", "edges", "I", "I'", "bind"
    );
    for m in 2..=5 {
        let g = generate(&GeneratorSpec::Hm { m }).expect("valid m");
        let i = compute(&g, Parameter::IsolatedToughness).expect("in cap").value;
        let ip = compute(&g, Parameter::IsolatedToughnessVariant).expect("in cap").value;
        let b = compute(&g, Parameter::BindingNumber).expect("in cap").value;
        println!(
            "{:>3} {:>6} {:>7} {:>10} {:>10} {:>8}",
            m,
            g.order(),
            g.size(),
            i.to_string(),
            ip.to_string(),
            b.to_string()
        );
    }
    println!("    I = (3m-1)/m climbs toward 3; I' = (3m-1)/(m-1) descends 5, 4, 11/3, 7/2");
    println!("    and none of these graphs has a factor into edges and odd cycles >= 5");
}
