//! Corpus sweep: all four exact parameters plus the factor decision per
//! graph, as a machine-readable table for external plotting.

use super::corpus::{build_corpus, CorpusGraph, CorpusSpec};
use crate::factors::cp_criterion_capped;
use crate::parameters::{compute_capped, Parameter};
use rayon::prelude::*;
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub id: String,
    pub order: usize,
    /// Edge probability behind the row, when it came from a random corpus.
    pub probability: Option<f64>,
    /// `t`, `i`, `iprime`, `bind` as exact strings (`p/q` or `inf`), empty
    /// when the row was skipped.
    pub values: [String; 4],
    /// factor with cycles >= 5 exists; `None` when skipped.
    pub factor: Option<bool>,
    /// empty, or the reason the row was skipped
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// CSV with exact rationals, one row per corpus graph, deterministic for
    /// equal specs.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,n,p,t,i,iprime,bind,factor,note\n");
        for r in &self.rows {
            let factor = match r.factor {
                Some(true) => "true",
                Some(false) => "false",
                None => "",
            };
            let p = r.probability.map(|p| p.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.id,
                r.order,
                p,
                r.values[0],
                r.values[1],
                r.values[2],
                r.values[3],
                factor,
                r.note
            );
        }
        out
    }
}

/// Sweeps a list of graphs: exact parameters and the factor decision each.
/// Rows whose order falls outside a cap are kept with a note instead of
/// failing the whole sweep.
pub fn sweep_graphs(graphs: Vec<CorpusGraph>, cap: usize) -> SweepTable {
    let rows: Vec<SweepRow> = graphs
        .into_par_iter()
        .map(|cg| {
            let order = cg.graph.order();
            let probability = probability_of_id(&cg.id);
            if order < 2 {
                return SweepRow {
                    id: cg.id,
                    order,
                    probability,
                    values: Default::default(),
                    factor: None,
                    note: "skipped: order below 2".to_string(),
                };
            }
            if order > cap {
                return SweepRow {
                    id: cg.id,
                    order,
                    probability,
                    values: Default::default(),
                    factor: None,
                    note: format!("skipped: order {order} above cap {cap}"),
                };
            }
            let values = Parameter::ALL.map(|p| {
                compute_capped(&cg.graph, p, cap)
                    .expect("order checked against cap")
                    .value
                    .to_string()
            });
            let factor = cp_criterion_capped(&cg.graph, cap)
                .expect("order checked against cap")
                .exists();
            SweepRow {
                id: cg.id,
                order,
                probability,
                values,
                factor: Some(factor),
                note: String::new(),
            }
        })
        .collect();
    SweepTable { rows }
}

/// Sweeps a seeded random corpus.
pub fn sweep(spec: &CorpusSpec, cap: usize) -> SweepTable {
    sweep_graphs(build_corpus(spec), cap)
}

fn probability_of_id(id: &str) -> Option<f64> {
    // random corpus ids are "rand-n{n}-p{p:.2}-i{i:04}"
    let tail = id.strip_prefix("rand-")?.split('-').nth(1)?;
    tail.strip_prefix('p')?.parse().ok()
}
