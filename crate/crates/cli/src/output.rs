//! Text and JSON renderers for the values the subcommands print.
//!
//! JSON field order follows the declared structs, so identical invocations
//! emit identical bytes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use coverlab_core::betti::BettiTable;
use coverlab_core::graph::SimpleGraph;
use coverlab_core::hilbert::HilbertSeries;
use coverlab_core::MonomialIdeal;

use crate::CliError;

#[derive(Serialize)]
struct GraphOut<'a> {
    vertices: &'a [String],
    edges: Vec<[&'a str; 2]>,
}

pub fn graph_text(graph: &SimpleGraph) -> String {
    let mut out = format!("# vertices: {}\n", graph.labels().join(" "));
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", graph.labels()[u], graph.labels()[v]));
    }
    out
}

pub fn graph_json(graph: &SimpleGraph) -> String {
    let labels = graph.labels();
    let edges = graph
        .edges()
        .iter()
        .map(|&(u, v)| [labels[u].as_str(), labels[v].as_str()])
        .collect();
    pretty(&GraphOut { vertices: labels, edges })
}

#[derive(Serialize)]
struct IdealOut<'a> {
    variables: &'a [String],
    generators: Vec<&'a [u32]>,
}

pub fn ideal_text(ideal: &MonomialIdeal, labels: &[String]) -> String {
    let mut s = ideal.display_with(labels);
    s.push('\n');
    s
}

pub fn ideal_json(ideal: &MonomialIdeal, labels: &[String]) -> String {
    let generators = ideal.generators().iter().map(|g| g.exponents()).collect();
    pretty(&IdealOut { variables: labels, generators })
}

#[derive(Serialize)]
struct SeriesOut {
    coeffs: Vec<i64>,
    den_pow: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    mult: Option<i64>,
}

fn small_coeffs(series_coeffs: &[BigInt]) -> Result<Vec<i64>, CliError> {
    series_coeffs
        .iter()
        .map(|c| {
            c.to_i64().ok_or_else(|| CliError {
                code: 1,
                message: "series coefficient exceeds the JSON integer range".into(),
            })
        })
        .collect()
}

pub fn series_text(series: &HilbertSeries) -> String {
    format!(
        "({}) / (1-t)^{}\n",
        series.numerator().display_text(),
        series.denominator_power()
    )
}

pub fn series_json(series: &HilbertSeries, mult: Option<i64>) -> Result<String, CliError> {
    let coeffs = small_coeffs(series.numerator().coefficients())?;
    Ok(pretty(&SeriesOut { coeffs, den_pow: series.denominator_power(), mult }))
}

#[derive(Serialize)]
struct BettiEntryOut {
    i: usize,
    b: Vec<u32>,
    rank: usize,
}

#[derive(Serialize)]
struct BettiOut {
    entries: Vec<BettiEntryOut>,
    reg: u64,
    pd: usize,
}

pub fn betti_text(table: &BettiTable, labels: &[String]) -> String {
    let mut out = String::new();
    for e in table.entries() {
        out.push_str(&format!(
            "beta[{}, {}] = {}  (degree {})\n",
            e.index,
            e.multidegree.display_with(labels),
            e.rank,
            e.multidegree.degree()
        ));
    }
    out.push_str(&format!("reg = {}\n", table.regularity()));
    out.push_str(&format!("pd = {}\n", table.projective_dimension()));
    out
}

pub fn betti_json(table: &BettiTable) -> String {
    let entries = table
        .entries()
        .iter()
        .map(|e| BettiEntryOut {
            i: e.index,
            b: e.multidegree.exponents().to_vec(),
            rank: e.rank,
        })
        .collect();
    pretty(&BettiOut {
        entries,
        reg: table.regularity(),
        pd: table.projective_dimension(),
    })
}

#[derive(Serialize)]
struct RegOut {
    regularity: u64,
}

pub fn reg_json(value: u64) -> String {
    pretty(&RegOut { regularity: value })
}

#[derive(Serialize)]
struct MultOut {
    multiplicity: i64,
}

pub fn mult_json(value: i64) -> String {
    pretty(&MultOut { multiplicity: value })
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}
