//! The claim-verification suite behind `verify-paper` and the acceptance
//! tests: exact values on the extremal families, cross-validation of the
//! two factor-decision routes, the sufficient conditions and tight bounds,
//! the parameter inequality chain, the factor equivalences, the order-7
//! exception enumeration, and a worker-count determinism spot check.

use super::corpus::{build_corpus, CorpusSpec};
use super::exceptions::enumerate_exceptions;
use super::{Check, CheckReport, CheckStatus};
use crate::canon::{canonical_form, connected_graphs};
use crate::factors::{
    cp_criterion_capped, find_factor_capped, fractional_tutte_capped, validate_factor,
    CriterionDecision,
};
use crate::generate::{generate, GeneratorSpec};
use crate::graph::{Graph, VertexSet};
use crate::parameters::{compute_capped, evaluate, Parameter, ParameterError};
use crate::rational::Rational;
use crate::structure::{count_c_iso, count_tc};
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// Seed used by every default corpus.
pub const DEFAULT_SEED: u64 = 0x0DDF_AC70;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest `m` for the `hm` family (order `4m-1`); the `gm` family runs
    /// one step further (order `2m-1` stays far smaller).
    pub hm_max: usize,
    /// Random corpus at small orders, combined with the exhaustive connected
    /// catalogs for every check.
    pub corpus: CorpusSpec,
    /// Supplementary corpus at orders around 16 for the large-order variant
    /// condition.
    pub large_corpus: CorpusSpec,
    /// Exhaustive connected catalogs cover orders `1..=exhaustive_max`.
    pub exhaustive_max: usize,
    pub include_exceptions: bool,
    pub cap: usize,
    pub construction_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            hm_max: 5,
            corpus: CorpusSpec {
                sizes: (5..=9).collect(),
                per_size: 2000,
                probabilities: vec![0.15, 0.3, 0.5, 0.7, 0.85],
                seed: DEFAULT_SEED,
            },
            large_corpus: CorpusSpec {
                sizes: vec![16, 17, 18],
                per_size: 40,
                probabilities: vec![0.35, 0.5, 0.65],
                seed: DEFAULT_SEED.wrapping_add(1),
            },
            exhaustive_max: 7,
            include_exceptions: true,
            cap: crate::parameters::DEFAULT_ENUMERATION_CAP,
            construction_cap: crate::factors::DEFAULT_CONSTRUCTION_CAP,
        }
    }
}

impl VerifyOptions {
    /// A preset that keeps `verify-paper` in the seconds range; used by the
    /// examples. The defaults are the full acceptance configuration.
    pub fn quick() -> Self {
        VerifyOptions {
            corpus: CorpusSpec {
                sizes: (5..=9).collect(),
                per_size: 80,
                probabilities: vec![0.15, 0.3, 0.5, 0.7, 0.85],
                seed: DEFAULT_SEED,
            },
            large_corpus: CorpusSpec {
                sizes: vec![16, 17, 18],
                per_size: 4,
                probabilities: vec![0.35, 0.5, 0.65],
                seed: DEFAULT_SEED.wrapping_add(1),
            },
            exhaustive_max: 6,
            include_exceptions: false,
            ..VerifyOptions::default()
        }
    }
}

/// Everything the corpus checks need about one graph, computed once.
struct Record {
    id: String,
    graph: Graph,
    order: usize,
    complete: bool,
    /// no isolated vertices in the graph itself
    iso_free: bool,
    /// `[t, I, I', bind]`, absent below order 2
    params: Option<[Rational; 4]>,
    cp_exists: bool,
    ft_exists: bool,
    /// construction outcomes, absent above the construction cap
    built5: Option<bool>,
    built3: Option<bool>,
    /// certificates revalidated: decompositions check out, violations recount
    certificates_ok: bool,
}

fn build_record(id: String, graph: Graph, opts: &VerifyOptions) -> Record {
    let order = graph.order();
    let complete = graph.is_complete();
    let iso_free = count_c_iso(&graph, VertexSet::EMPTY).1 == 0;
    let params = if order >= 2 {
        let values = Parameter::ALL.map(|p| {
            compute_capped(&graph, p, opts.cap)
                .expect("corpus orders are within the cap")
                .value
        });
        Some(values)
    } else {
        None
    };
    let mut certificates_ok = true;
    let cp = cp_criterion_capped(&graph, opts.cap).expect("order within cap");
    if let CriterionDecision::NoFactor(v) = &cp {
        certificates_ok &=
            count_tc(&graph, v.set) == v.count && v.count > v.set.len();
    }
    let ft = fractional_tutte_capped(&graph, opts.cap).expect("order within cap");
    if let CriterionDecision::NoFactor(v) = &ft {
        certificates_ok &=
            count_c_iso(&graph, v.set).1 == v.count && v.count > v.set.len();
    }
    let mut build = |min_cycle: usize| -> Option<bool> {
        if order > opts.construction_cap {
            return None;
        }
        match find_factor_capped(&graph, min_cycle, opts.construction_cap)
            .expect("order within construction cap")
        {
            Some(f) => {
                certificates_ok &= validate_factor(&graph, &f, min_cycle);
                Some(true)
            }
            None => Some(false),
        }
    };
    let built5 = build(5);
    let built3 = build(3);
    Record {
        id,
        graph,
        order,
        complete,
        iso_free,
        params,
        cp_exists: cp.exists(),
        ft_exists: ft.exists(),
        built5,
        built3,
        certificates_ok,
    }
}

fn build_records(opts: &VerifyOptions) -> (Vec<Record>, Vec<Record>) {
    let mut inputs: Vec<(String, Graph)> = Vec::new();
    for n in 1..=opts.exhaustive_max {
        for (i, g) in connected_graphs(n)
            .expect("exhaustive_max within canonical cap")
            .into_iter()
            .enumerate()
        {
            inputs.push((format!("conn-n{n}-{i:03}"), g));
        }
    }
    for cg in build_corpus(&opts.corpus) {
        inputs.push((cg.id, cg.graph));
    }
    let main: Vec<Record> = inputs
        .into_par_iter()
        .map(|(id, g)| build_record(id, g, opts))
        .collect();

    let mut large_inputs: Vec<(String, Graph)> = build_corpus(&opts.large_corpus)
        .into_iter()
        .map(|cg| (cg.id, cg.graph))
        .collect();
    // structured shapes alongside the random draws
    for (name, spec) in [
        ("complete-n16", GeneratorSpec::Complete { n: 16 }),
        ("complete-n17", GeneratorSpec::Complete { n: 17 }),
        ("cycle-n16", GeneratorSpec::Cycle { n: 16 }),
        ("cycle-n17", GeneratorSpec::Cycle { n: 17 }),
        ("path-n17", GeneratorSpec::Path { n: 17 }),
        ("gm-m9", GeneratorSpec::Gm { m: 9 }),
        ("cactus-b8", GeneratorSpec::Cactus { blocks: 8, seed: DEFAULT_SEED }),
    ] {
        large_inputs.push((
            name.to_string(),
            generate(&spec).expect("valid structured instance"),
        ));
    }
    let large: Vec<Record> = large_inputs
        .into_par_iter()
        .map(|(id, g)| build_record(id, g, opts))
        .collect();
    (main, large)
}

fn make_check(
    name: impl Into<String>,
    claim: impl Into<String>,
    expected: impl Into<String>,
    actual: impl Into<String>,
    ok: bool,
    witness: impl Into<String>,
    elapsed: Duration,
) -> Check {
    Check {
        name: name.into(),
        claim: claim.into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        expected: expected.into(),
        actual: actual.into(),
        witness: witness.into(),
        elapsed,
    }
}

fn skipped_check(
    name: impl Into<String>,
    claim: impl Into<String>,
    expected: impl Into<String>,
    reason: String,
) -> Check {
    Check {
        name: name.into(),
        claim: claim.into(),
        status: CheckStatus::Skipped,
        expected: expected.into(),
        actual: reason,
        witness: String::new(),
        elapsed: Duration::ZERO,
    }
}

/// Exact value of one parameter on one generated family member, with the
/// witness re-evaluated through the defining ratio.
fn family_value_check(
    report: &mut CheckReport,
    name: String,
    claim: String,
    spec: &GeneratorSpec,
    parameter: Parameter,
    expected: Rational,
    opts: &VerifyOptions,
) {
    let start = Instant::now();
    let graph = match generate(spec) {
        Ok(g) => g,
        Err(e) => {
            report.push(skipped_check(name, claim, expected.to_string(), format!("skipped: {e}")));
            return;
        }
    };
    match compute_capped(&graph, parameter, opts.cap) {
        Ok(result) => {
            let witness_ok = !result.value.is_finite()
                || evaluate(&graph, parameter, result.witness) == Some(result.value);
            let ok = result.value == expected && witness_ok;
            report.push(make_check(
                name,
                claim,
                expected.to_string(),
                result.value.to_string(),
                ok,
                format!("witness {} (re-evaluated: {})", result.witness, witness_ok),
                start.elapsed(),
            ));
        }
        Err(e @ ParameterError::CapExceeded { .. }) => {
            report.push(skipped_check(name, claim, expected.to_string(), format!("skipped: {e}")));
        }
        Err(e) => {
            report.push(make_check(
                name,
                claim,
                expected.to_string(),
                format!("error: {e}"),
                false,
                "",
                start.elapsed(),
            ));
        }
    }
}

fn extremal_checks(report: &mut CheckReport, opts: &VerifyOptions) {
    for m in 3..=opts.hm_max + 1 {
        family_value_check(
            report,
            format!("010-extremal/gm-toughness-m{m}"),
            format!("t(G_{m}) = {}/{} for G_m = K_(m-1) joined to m independent vertices", m - 1, m),
            &GeneratorSpec::Gm { m },
            Parameter::Toughness,
            Rational::new(m as i64 - 1, m as i64),
            opts,
        );
    }
    {
        let start = Instant::now();
        let values: Vec<Rational> = (3..=opts.hm_max + 1)
            .filter_map(|m| {
                let g = generate(&GeneratorSpec::Gm { m }).ok()?;
                Some(compute_capped(&g, Parameter::Toughness, opts.cap).ok()?.value)
            })
            .collect();
        let one = Rational::integer(1);
        let ok = values.windows(2).all(|w| w[0] < w[1]) && values.iter().all(|v| *v < one);
        let rendered = values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" < ");
        report.push(make_check(
            "010-extremal/gm-toughness-approaches-1",
            "t(G_m) = (m-1)/m increases strictly toward 1 and never reaches it",
            "strictly increasing, all below 1",
            rendered,
            ok,
            "",
            start.elapsed(),
        ));
    }
    for m in 3..=opts.hm_max {
        family_value_check(
            report,
            format!("011-extremal/hm-isolated-toughness-m{m}"),
            format!("I(H_{m}) = {}/{} for H_m = K_(m-1) joined to m disjoint triangles", 3 * m - 1, m),
            &GeneratorSpec::Hm { m },
            Parameter::IsolatedToughness,
            Rational::new(3 * m as i64 - 1, m as i64),
            opts,
        );
    }
    for m in 2..=opts.hm_max {
        family_value_check(
            report,
            format!("012-extremal/hm-variant-m{m}"),
            format!("I'(H_{m}) = {}/{}", 3 * m - 1, m - 1),
            &GeneratorSpec::Hm { m },
            Parameter::IsolatedToughnessVariant,
            Rational::new(3 * m as i64 - 1, m as i64 - 1),
            opts,
        );
    }
    for m in 3..=opts.hm_max {
        family_value_check(
            report,
            format!("013-extremal/hm-binding-m{m}"),
            format!("bind(H_{m}) = 4/3"),
            &GeneratorSpec::Hm { m },
            Parameter::BindingNumber,
            Rational::new(4, 3),
            opts,
        );
    }
    {
        let start = Instant::now();
        let bowtie = bowtie();
        let bind = compute_capped(&bowtie, Parameter::BindingNumber, opts.cap)
            .expect("order 5")
            .value;
        let expected = Rational::new(4, 3);
        report.push(make_check(
            "014-extremal/bowtie-binding",
            "bind = 4/3 on the two-triangle cactus of order 5",
            expected.to_string(),
            bind.to_string(),
            bind == expected,
            "",
            start.elapsed(),
        ));
        let start = Instant::now();
        let cp = cp_criterion_capped(&bowtie, opts.cap).expect("order 5");
        let built = find_factor_capped(&bowtie, 5, opts.construction_cap).expect("order 5");
        let ok = !cp.exists() && built.is_none();
        let witness = cp
            .violation()
            .map(|v| format!("violating set {} with count {}", v.set, v.count))
            .unwrap_or_default();
        report.push(make_check(
            "014-extremal/bowtie-no-factor",
            "the two-triangle cactus has no factor into edges and odd cycles of length >= 5",
            "no factor by criterion and by construction",
            if ok { "no factor by criterion and by construction".to_string() } else { format!("criterion exists={} construction={:?}", cp.exists(), built.is_some()) },
            ok,
            witness,
            start.elapsed(),
        ));
    }
}

fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// Zero-mismatch comparison between one criterion route and one
/// construction route over a record subset.
fn oracle_check(
    report: &mut CheckReport,
    name: &str,
    claim: &str,
    records: &[&Record],
    criterion_of: impl Fn(&Record) -> bool,
    built_of: impl Fn(&Record) -> Option<bool>,
) {
    let start = Instant::now();
    let mut compared = 0usize;
    let mut mismatches = Vec::new();
    for r in records {
        if let Some(built) = built_of(r) {
            compared += 1;
            if built != criterion_of(r) {
                mismatches.push(r.id.clone());
            }
        }
    }
    let ok = mismatches.is_empty() && compared > 0;
    report.push(make_check(
        name,
        claim,
        "0 mismatches",
        format!("{} mismatches over {} graphs", mismatches.len(), compared),
        ok,
        mismatches.first().cloned().unwrap_or_default(),
        start.elapsed(),
    ));
}

fn oracle_checks(report: &mut CheckReport, main: &[Record]) {
    let exhaustive: Vec<&Record> = main.iter().filter(|r| r.id.starts_with("conn-")).collect();
    let random: Vec<&Record> = main.iter().filter(|r| r.id.starts_with("rand-")).collect();
    oracle_check(
        report,
        "020-oracle/criterion-vs-construction-exhaustive",
        "c_tc(G-S) <= |S| for all S iff backtracking finds a factor with cycles >= 5 (connected catalogs)",
        &exhaustive,
        |r| r.cp_exists,
        |r| r.built5,
    );
    oracle_check(
        report,
        "021-oracle/criterion-vs-construction-random",
        "c_tc(G-S) <= |S| for all S iff backtracking finds a factor with cycles >= 5 (random corpus)",
        &random,
        |r| r.cp_exists,
        |r| r.built5,
    );
    oracle_check(
        report,
        "022-oracle/isolated-criterion-vs-construction-exhaustive",
        "iso(G-S) <= |S| for all S iff backtracking finds a factor with cycles >= 3 (connected catalogs)",
        &exhaustive,
        |r| r.ft_exists,
        |r| r.built3,
    );
    oracle_check(
        report,
        "023-oracle/isolated-criterion-vs-construction-random",
        "iso(G-S) <= |S| for all S iff backtracking finds a factor with cycles >= 3 (random corpus)",
        &random,
        |r| r.ft_exists,
        |r| r.built3,
    );
    {
        let start = Instant::now();
        let bad: Vec<&Record> = main.iter().filter(|r| !r.certificates_ok).collect();
        report.push(make_check(
            "024-oracle/certificates-revalidate",
            "every constructed decomposition validates; every violating set recounts to its stored count",
            "0 defects",
            format!("{} defects over {} graphs", bad.len(), main.len()),
            bad.is_empty(),
            bad.first().map(|r| r.id.clone()).unwrap_or_default(),
            start.elapsed(),
        ));
    }
}

/// Violation counter over records; renders the first counterexample.
fn corpus_property(
    report: &mut CheckReport,
    name: &str,
    claim: &str,
    records: &[&Record],
    violates: impl Fn(&Record) -> bool,
) {
    let start = Instant::now();
    let violators: Vec<&&Record> = records.iter().filter(|r| violates(r)).collect();
    let witness = violators
        .first()
        .map(|r| {
            let params = r.params.map(|[t, i, ip, b]| {
                format!("t={t} I={i} I'={ip} bind={b}")
            });
            format!(
                "{}: order {} {} factor5={} | {}",
                r.id,
                r.order,
                params.unwrap_or_default(),
                r.cp_exists,
                crate::edgelist::serialize(&r.graph).replace('\n', "; ")
            )
        })
        .unwrap_or_default();
    report.push(make_check(
        name,
        claim,
        "0 violations",
        format!("{} violations over {} graphs", violators.len(), records.len()),
        violators.is_empty(),
        witness,
        start.elapsed(),
    ));
}

fn sufficient_checks(report: &mut CheckReport, main: &[Record], large: &[Record]) {
    let one = Rational::integer(1);
    let three = Rational::integer(3);
    let five = Rational::integer(5);
    let four_thirds = Rational::new(4, 3);
    let order5: Vec<&Record> = main
        .iter()
        .chain(large.iter())
        .filter(|r| r.order >= 5 && r.params.is_some())
        .collect();
    corpus_property(
        report,
        "030-sufficient/any-condition-forces-factor",
        "order >= 5 and (t >= 1 or I >= 3 or I' > 5 or bind > 4/3) forces a factor with cycles >= 5",
        &order5,
        |r| {
            let [t, i, ip, b] = r.params.expect("filtered");
            let sufficient = t >= one || i >= three || ip > five || b > four_thirds;
            sufficient && !r.cp_exists
        },
    );
    let seven_halves = Rational::new(7, 2);
    let large_refs: Vec<&Record> = large.iter().filter(|r| r.params.is_some()).collect();
    corpus_property(
        report,
        "031-sufficient/variant-above-7-2-at-large-orders",
        "order >= 16 and I' > 7/2 forces a factor with cycles >= 5",
        &large_refs,
        |r| {
            let [_, _, ip, _] = r.params.expect("filtered");
            ip > seven_halves && !r.cp_exists
        },
    );
}

fn bounds_checks(report: &mut CheckReport, main: &[Record], large: &[Record]) {
    let no_factor: Vec<&Record> = main
        .iter()
        .chain(large.iter())
        .filter(|r| r.order >= 5 && !r.cp_exists && r.params.is_some())
        .collect();
    let p = |r: &Record| r.params.expect("filtered");
    corpus_property(
        report,
        "040-bounds/no-factor-toughness-below-1",
        "no factor with cycles >= 5 and order >= 5 implies t < 1",
        &no_factor,
        |r| p(r)[0] >= Rational::integer(1),
    );
    corpus_property(
        report,
        "041-bounds/no-factor-isolated-below-3",
        "no factor with cycles >= 5 implies I < 3",
        &no_factor,
        |r| p(r)[1] >= Rational::integer(3),
    );
    corpus_property(
        report,
        "042-bounds/no-factor-variant-at-most-5",
        "no factor with cycles >= 5 and order >= 5 implies I' <= 5",
        &no_factor,
        |r| p(r)[2] > Rational::integer(5),
    );
    corpus_property(
        report,
        "043-bounds/no-factor-binding-at-most-4-3",
        "no factor with cycles >= 5 and order >= 5 implies bind <= 4/3",
        &no_factor,
        |r| p(r)[3] > Rational::new(4, 3),
    );
    let off_11_3: Vec<&Record> = no_factor
        .iter()
        .copied()
        .filter(|r| ![6, 7, 11].contains(&r.order))
        .collect();
    corpus_property(
        report,
        "044-bounds/no-factor-variant-at-most-11-3-off-orders-6-7-11",
        "no factor with cycles >= 5 and order outside {6,7,11} implies I' <= 11/3",
        &off_11_3,
        |r| p(r)[2] > Rational::new(11, 3),
    );
    let off_7_2: Vec<&Record> = no_factor
        .iter()
        .copied()
        .filter(|r| ![6, 7, 11, 15].contains(&r.order))
        .collect();
    corpus_property(
        report,
        "045-bounds/no-factor-variant-at-most-7-2-off-orders-6-7-11-15",
        "no factor with cycles >= 5 and order outside {6,7,11,15} implies I' <= 7/2",
        &off_7_2,
        |r| p(r)[2] > Rational::new(7, 2),
    );
}

fn chain_checks(report: &mut CheckReport, main: &[Record], large: &[Record]) {
    let non_complete: Vec<&Record> = main
        .iter()
        .chain(large.iter())
        .filter(|r| !r.complete && r.params.is_some())
        .collect();
    corpus_property(
        report,
        "050-chain/toughness-at-most-isolated",
        "t <= I on every non-complete graph",
        &non_complete,
        |r| {
            let [t, i, _, _] = r.params.expect("filtered");
            t > i
        },
    );
    corpus_property(
        report,
        "051-chain/isolated-at-most-variant-strict-when-positive",
        "I <= I' always, strictly when I > 0, on every non-complete graph",
        &non_complete,
        |r| {
            let [_, i, ip, _] = r.params.expect("filtered");
            i > ip || (i > Rational::zero() && i == ip)
        },
    );
    corpus_property(
        report,
        "052-chain/binding-at-most-isolated",
        "bind <= I on every non-complete graph",
        &non_complete,
        |r| {
            let [_, i, _, b] = r.params.expect("filtered");
            b > i
        },
    );
}

fn equivalence_checks(report: &mut CheckReport, main: &[Record]) {
    let one = Rational::integer(1);
    let eligible: Vec<&Record> = main.iter().filter(|r| r.params.is_some()).collect();
    corpus_property(
        report,
        "060-equivalence/isolated-ge-1-iff-factor",
        "I >= 1 iff a factor with cycles >= 3 exists",
        &eligible,
        |r| (r.params.expect("filtered")[1] >= one) != r.ft_exists,
    );
    corpus_property(
        report,
        "061-equivalence/variant-gt-1-iff-factor",
        "I' > 1 iff a factor with cycles >= 3 exists",
        &eligible,
        |r| (r.params.expect("filtered")[2] > one) != r.ft_exists,
    );
    corpus_property(
        report,
        "062-equivalence/binding-ge-1-iff-factor",
        "bind >= 1 iff a factor with cycles >= 3 exists",
        &eligible,
        |r| (r.params.expect("filtered")[3] >= one) != r.ft_exists,
    );
    let iso_free: Vec<&Record> = eligible.iter().copied().filter(|r| r.iso_free).collect();
    corpus_property(
        report,
        "063-equivalence/isolated-ge-1-iff-factor-on-isolated-free",
        "I >= 1 iff a factor with cycles >= 3 exists, restricted to graphs without isolated vertices",
        &iso_free,
        |r| (r.params.expect("filtered")[1] >= one) != r.ft_exists,
    );
    corpus_property(
        report,
        "064-equivalence/variant-gt-1-iff-factor-on-isolated-free",
        "I' > 1 iff a factor with cycles >= 3 exists, restricted to graphs without isolated vertices",
        &iso_free,
        |r| (r.params.expect("filtered")[2] > one) != r.ft_exists,
    );
}

fn exceptions_checks(report: &mut CheckReport, opts: &VerifyOptions) {
    let start = Instant::now();
    let result = enumerate_exceptions(7).expect("order 7 supported");
    let elapsed = start.elapsed();
    report.push(make_check(
        "070-exceptions/enumeration-completes",
        "scanning all 2^21 labeled order-7 graphs for no-factor graphs with I' > 4 terminates",
        "completes",
        format!(
            "completes: {} labeled scanned, {} without a factor, {} surviving, {} classes",
            result.total_labeled,
            result.no_factor_labeled,
            result.surviving_labeled,
            result.classes.len()
        ),
        true,
        String::new(),
        elapsed,
    ));

    let describe = |connected_only: bool| -> String {
        result
            .classes
            .iter()
            .filter(|c| !connected_only || c.connected)
            .map(|c| {
                format!(
                    "[I'={} {} labeled={}]",
                    c.iso_variant,
                    if c.connected { "connected" } else { "disconnected" },
                    c.labeled_count
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    report.push(make_check(
        "071-exceptions/at-most-three-classes",
        "at most three isomorphism classes of order-7 no-factor graphs have I' > 4",
        "<= 3 classes",
        format!("{} classes: {}", result.classes.len(), describe(false)),
        result.classes.len() <= 3,
        result
            .classes
            .iter()
            .map(|c| c.canonical.replace('\n', "; "))
            .collect::<Vec<_>>()
            .join(" || "),
        elapsed,
    ));

    let connected_count = result.classes.iter().filter(|c| c.connected).count();
    report.push(make_check(
        "072-exceptions/at-most-three-connected-classes",
        "at most three isomorphism classes of CONNECTED order-7 no-factor graphs have I' > 4",
        "<= 3 connected classes",
        format!("{} connected classes: {}", connected_count, describe(true)),
        connected_count <= 3,
        String::new(),
        elapsed,
    ));

    {
        let start = Instant::now();
        let h2 = generate(&GeneratorSpec::Hm { m: 2 }).expect("hm(2)");
        let h2_canonical = canonical_form(&h2).expect("order 7");
        let present = result.classes.iter().any(|c| c.canonical == h2_canonical);
        report.push(make_check(
            "073-exceptions/contains-apex-over-two-triangles",
            "the order-7 graph joining one vertex to two disjoint triangles is an exception with I' = 5",
            "present",
            if present { "present".to_string() } else { "absent".to_string() },
            present,
            h2_canonical.replace('\n', "; "),
            start.elapsed(),
        ));
    }

    {
        let start = Instant::now();
        let four = Rational::integer(4);
        let mut defects = Vec::new();
        for class in &result.classes {
            let no_factor = find_factor_capped(&class.graph, 5, opts.construction_cap)
                .expect("order 7")
                .is_none();
            let recomputed =
                compute_capped(&class.graph, Parameter::IsolatedToughnessVariant, opts.cap)
                    .expect("order 7")
                    .value;
            if !no_factor || recomputed != class.iso_variant || recomputed <= four {
                defects.push(class.canonical.replace('\n', "; "));
            }
        }
        report.push(make_check(
            "074-exceptions/classes-reverified",
            "every reported class has order 7, no factor by construction, and recomputed I' above 4",
            "0 defects",
            format!("{} defects over {} classes", defects.len(), result.classes.len()),
            defects.is_empty(),
            defects.first().cloned().unwrap_or_default(),
            start.elapsed(),
        ));
    }
}

/// Recomputes a bundle of values inside a private 3-worker pool and compares
/// with the ambient results; the reduction tie-breaks make them identical.
fn determinism_check(report: &mut CheckReport, opts: &VerifyOptions) {
    let start = Instant::now();
    let mut bundle: Vec<(String, Graph)> = vec![
        ("hm-3".into(), generate(&GeneratorSpec::Hm { m: 3 }).expect("hm(3)")),
        ("gm-4".into(), generate(&GeneratorSpec::Gm { m: 4 }).expect("gm(4)")),
        ("bowtie".into(), bowtie()),
    ];
    for (i, cg) in build_corpus(&CorpusSpec {
        sizes: vec![9, 12],
        per_size: 3,
        probabilities: vec![0.3, 0.6],
        seed: opts.corpus.seed,
    })
    .into_iter()
    .enumerate()
    {
        bundle.push((format!("spot-{i}"), cg.graph));
    }
    let evaluate_bundle = |graphs: &[(String, Graph)]| -> Vec<String> {
        graphs
            .iter()
            .map(|(id, g)| {
                let values: Vec<String> = Parameter::ALL
                    .iter()
                    .map(|&p| {
                        let r = compute_capped(g, p, opts.cap).expect("within cap");
                        format!("{}={} w{}", p, r.value, r.witness)
                    })
                    .collect();
                let cp = cp_criterion_capped(g, opts.cap).expect("within cap");
                let cp_str = match cp.violation() {
                    None => "factor".to_string(),
                    Some(v) => format!("viol {} #{}", v.set, v.count),
                };
                format!("{id}: {} cp[{cp_str}]", values.join(" "))
            })
            .collect()
    };
    let ambient = evaluate_bundle(&bundle);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .expect("pool");
    let pooled = pool.install(|| evaluate_bundle(&bundle));
    let ok = ambient == pooled;
    report.push(make_check(
        "080-determinism/worker-count-invariance",
        "values, witnesses, and violating sets are identical at any worker count",
        "identical",
        if ok { "identical".to_string() } else { "diverged".to_string() },
        ok,
        if ok {
            String::new()
        } else {
            format!("ambient {:?} pooled {:?}", ambient, pooled)
        },
        start.elapsed(),
    ));
}

/// Runs the whole verification suite and returns the sorted report.
pub fn verify_paper(opts: &VerifyOptions) -> CheckReport {
    let mut report = CheckReport::default();
    extremal_checks(&mut report, opts);
    let (main, large) = build_records(opts);
    oracle_checks(&mut report, &main);
    sufficient_checks(&mut report, &main, &large);
    bounds_checks(&mut report, &main, &large);
    chain_checks(&mut report, &main, &large);
    equivalence_checks(&mut report, &main);
    if opts.include_exceptions {
        exceptions_checks(&mut report, opts);
    }
    determinism_check(&mut report, opts);
    report.finalize();
    report
}
