//! The verification harness: builds the per-scope check lists, runs them
//! (optionally across worker threads, capped by COVERLAB_THREADS), and
//! assembles the report in a deterministic order.
//!
//! Expected and computed values are rendered to canonical strings before
//! comparison, so a failing record carries both sides verbatim.

use std::collections::VecDeque;
use std::sync::Mutex;
use std::time::Instant;

use coverlab_core::betti::{closed_form_regularity, regularity, RegularityFamily};
use coverlab_core::graph::{
    closed_form_cover_generators, crown_monomials, multipartite_monomials, CoverFamily,
    SimpleGraph,
};
use coverlab_core::hilbert::{
    closed_form_bracket, closed_form_bracket_with_vertex_product, closed_form_crown,
    closed_form_symbolic_multipartite, hilbert_function_oracle, linear_power_multiplicity,
    numerator, symbolic_multiplicity, GraphIdealKind, HilbertSeries,
};
use coverlab_core::powers::{bracket_power, bracket_stage_ideal, power, symbolic_power};
use coverlab_core::{Monomial, MonomialIdeal, PrimeSupport};

use crate::graphspec::named_graph;
use crate::report::{CheckRecord, Status, VerificationReport};
use crate::{usage_error, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    Crown,
    Multipartite,
    Multiplicity,
    All,
}

pub struct VerifyOptions {
    pub scope: Scope,
    pub n: Option<usize>,
    pub s_max: Option<u32>,
    pub parts: Option<Vec<u32>>,
    pub graph: Option<String>,
    pub force: bool,
    pub no_timing: bool,
}

struct Check {
    theorem: &'static str,
    params: String,
    body: CheckBody,
}

enum CheckBody {
    Run(Box<dyn FnOnce() -> (String, String) + Send>),
    Skip(String),
}

impl Check {
    fn new(
        theorem: &'static str,
        params: String,
        run: impl FnOnce() -> (String, String) + Send + 'static,
    ) -> Self {
        Check { theorem, params, body: CheckBody::Run(Box::new(run)) }
    }

    fn skip(theorem: &'static str, params: String, reason: String) -> Self {
        Check { theorem, params, body: CheckBody::Skip(reason) }
    }
}

/// Range guards are data, not errors: an out-of-guard instance becomes a
/// skipped record unless --force is given.
fn guard(force: bool, out_of_range: bool, detail: &str) -> Option<String> {
    (!force && out_of_range)
        .then(|| format!("beyond the default guard ({detail}); pass --force to run"))
}

pub fn run(options: &VerifyOptions) -> Result<VerificationReport, CliError> {
    let checks = build_checks(options)?;
    let workers = worker_count(checks.len());
    Ok(execute(checks, workers, !options.no_timing))
}

fn worker_count(records: usize) -> usize {
    let configured = std::env::var("COVERLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1);
    let available = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    configured.unwrap_or(available).min(records.max(1))
}

fn execute(checks: Vec<Check>, workers: usize, timing: bool) -> VerificationReport {
    let total = checks.len();
    let queue: Mutex<VecDeque<(usize, Check)>> =
        Mutex::new(checks.into_iter().enumerate().collect());
    let results: Mutex<Vec<Option<CheckRecord>>> =
        Mutex::new((0..total).map(|_| None).collect());
    let work = || loop {
        let item = queue.lock().expect("queue lock").pop_front();
        let Some((index, check)) = item else { break };
        let record = run_one(check, timing);
        results.lock().expect("results lock")[index] = Some(record);
    };
    if workers <= 1 {
        work();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(work);
            }
        });
    }
    let records = results
        .into_inner()
        .expect("results lock")
        .into_iter()
        .map(|r| r.expect("every check ran"))
        .collect();
    VerificationReport::new(records)
}

fn run_one(check: Check, timing: bool) -> CheckRecord {
    let start = Instant::now();
    let (expected, computed, status) = match check.body {
        CheckBody::Run(run) => {
            let (expected, computed) = run();
            let status =
                if expected == computed { Status::Pass } else { Status::Fail };
            (expected, computed, status)
        }
        CheckBody::Skip(reason) => (String::new(), reason, Status::Skipped),
    };
    let ms = start.elapsed().as_millis();
    CheckRecord {
        theorem: check.theorem.to_string(),
        params: check.params,
        expected,
        computed,
        status,
        ms: timing.then_some(ms),
    }
}

fn build_checks(options: &VerifyOptions) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    match options.scope {
        Scope::Crown => crown_scope(&mut checks, options)?,
        Scope::Multipartite => multipartite_scope(&mut checks, options)?,
        Scope::Multiplicity => multiplicity_scope(&mut checks, options)?,
        Scope::All => {
            crown_scope(&mut checks, options)?;
            multipartite_scope(&mut checks, options)?;
            multiplicity_scope(&mut checks, options)?;
        }
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// Canonical record strings
// ---------------------------------------------------------------------------

/// Series are compared in fully reduced form, which is canonical: two series
/// are equal as rational functions exactly when their reductions agree.
fn reduced_string(series: &HilbertSeries) -> String {
    match series.reduce() {
        Ok(r) => format!("({}) / (1-t)^{}", r.h_polynomial.display_text(), r.dimension),
        Err(_) => String::from("<zero series>"),
    }
}

fn support_sets_string(mut sets: Vec<Vec<usize>>) -> String {
    sets.sort();
    let rendered: Vec<String> = sets
        .iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    rendered.join(" ")
}

fn crown_cover(n: usize) -> MonomialIdeal {
    SimpleGraph::crown(n).expect("validated crown size").cover_ideal().ideal
}

fn multipartite_cover(parts: &[u32]) -> MonomialIdeal {
    SimpleGraph::complete_multipartite(parts)
        .expect("validated parts")
        .cover_ideal()
        .ideal
}

// ---------------------------------------------------------------------------
// Crown scope
// ---------------------------------------------------------------------------

fn add(
    checks: &mut Vec<Check>,
    theorem: &'static str,
    params: String,
    guard_reason: &Option<String>,
    run: impl FnOnce() -> (String, String) + Send + 'static,
) {
    match guard_reason {
        Some(reason) => checks.push(Check::skip(theorem, params, reason.clone())),
        None => checks.push(Check::new(theorem, params, run)),
    }
}

fn crown_scope(checks: &mut Vec<Check>, options: &VerifyOptions) -> Result<(), CliError> {
    let s_max = options.s_max.unwrap_or(3);
    let (full_ns, generator_ns): (Vec<usize>, Vec<usize>) = match options.n {
        Some(n) => {
            if n < 3 {
                return Err(usage_error(format!(
                    "crown checks require n >= 3 (requested {n})"
                )));
            }
            (vec![n], vec![n])
        }
        None => (vec![3, 4], vec![3, 4, 5]),
    };

    for &n in &generator_ns {
        let g = guard(options.force, n > 8, "crown generator checks run for n <= 8");
        add(checks, "crown-cover-generators", format!("n={n}"), &g, move || {
            let closed =
                closed_form_cover_generators(&CoverFamily::Crown { n }).expect("n >= 3");
            (closed.to_string(), crown_cover(n).to_string())
        });
        add(checks, "crown-cover-degree", format!("n={n}"), &g, move || {
            let graph = SimpleGraph::crown(n).expect("n >= 3");
            let expected = (2 * n - 2) as u64;
            (expected.to_string(), graph.cover_degree().expect("has edges").to_string())
        });
        add(checks, "edge-cover-duality", format!("crown n={n}"), &g, move || {
            let graph = SimpleGraph::crown(n).expect("n >= 3");
            duality_strings(&graph)
        });
    }

    for &n in &full_ns {
        for s in 1..=s_max {
            let g = guard(
                options.force,
                n > 4 || s > 3,
                "crown power checks run for n <= 4 and s <= 3",
            );
            add(checks, "crown-hilbert-series", format!("n={n} s={s}"), &g, move || {
                let closed = closed_form_crown(n, s).expect("validated range");
                let computed = numerator(&power(&crown_cover(n), s).expect("small power"));
                (reduced_string(&closed), reduced_string(&computed))
            });
            add(checks, "hilbert-oracle", format!("crown n={n} s={s}"), &g, move || {
                let p = power(&crown_cover(n), s).expect("small power");
                oracle_strings(&p)
            });
            add(
                checks,
                "bipartite-power-collapse",
                format!("crown n={n} s={s}"),
                &g,
                move || {
                    let cover = crown_cover(n);
                    let ordinary = power(&cover, s).expect("small power");
                    let symbolic = symbolic_power(&cover, s).expect("squarefree cover");
                    (ordinary.to_string(), symbolic.to_string())
                },
            );
            add(checks, "crown-power-regularity", format!("n={n} s={s}"), &g, move || {
                let expected = closed_form_regularity(&RegularityFamily::CrownPower { n, s })
                    .expect("validated range");
                let p = power(&crown_cover(n), s).expect("small power");
                let computed = regularity(&p).expect("proper nonzero");
                (expected.to_string(), computed.to_string())
            });
            if s >= 2 {
                crown_colon_checks(checks, n, s, &g);
            }
        }
    }
    Ok(())
}

fn crown_colon_checks(checks: &mut Vec<Check>, n: usize, s: u32, g: &Option<String>) {
    add(checks, "crown-colon-power", format!("n={n} s={s}"), g, move || {
        let cm = crown_monomials(n).expect("n >= 3");
        let cover = crown_cover(n);
        let lhs = power(&cover, s)
            .expect("small power")
            .colon(&cm.x_cover)
            .expect("same ambient");
        let rhs = power(&cover, s - 1).expect("small power");
        (rhs.to_string(), lhs.to_string())
    });
    add(checks, "crown-colon-power-sum", format!("n={n} s={s}"), g, move || {
        let cm = crown_monomials(n).expect("n >= 3");
        let cover = crown_cover(n);
        let x_ideal = MonomialIdeal::principal(cm.x_cover.clone());
        let lhs = power(&cover, s)
            .expect("small power")
            .sum(&x_ideal)
            .expect("same ambient")
            .colon(&cm.y_cover)
            .expect("same ambient");
        let rhs = power(&cover, s - 1)
            .expect("small power")
            .sum(&x_ideal)
            .expect("same ambient");
        (rhs.to_string(), lhs.to_string())
    });
    for i in 1..=n {
        add(
            checks,
            "crown-colon-chain",
            format!("n={n} s={s} i={i}"),
            g,
            move || {
                let cm = crown_monomials(n).expect("n >= 3");
                let cover = crown_cover(n);
                let ambient = 2 * n;
                let mut chain = power(&cover, s)
                    .expect("small power")
                    .sum(&MonomialIdeal::principal(cm.x_cover.clone()))
                    .expect("same ambient")
                    .sum(&MonomialIdeal::principal(cm.y_cover.clone()))
                    .expect("same ambient");
                for j in 0..i - 1 {
                    chain = chain
                        .sum(&MonomialIdeal::principal(cm.pair_covers[j].clone()))
                        .expect("same ambient");
                }
                let lhs = chain.colon(&cm.pair_covers[i - 1]).expect("same ambient");
                let rhs = MonomialIdeal::new(
                    ambient,
                    vec![
                        Monomial::variable(ambient, i - 1),
                        Monomial::variable(ambient, n + i - 1),
                        cm.pair_covers[i - 1].pow(s - 1).expect("small power"),
                    ],
                )
                .expect("same ambient");
                (rhs.to_string(), lhs.to_string())
            },
        );
    }
}

fn duality_strings(graph: &SimpleGraph) -> (String, String) {
    let cover = graph.cover_ideal().ideal;
    let expected: Vec<Vec<usize>> =
        cover.generators().iter().map(|g| g.support()).collect();
    let computed: Vec<Vec<usize>> = graph
        .edge_ideal()
        .minimal_primes()
        .expect("graph has edges")
        .iter()
        .map(|p| p.vars().to_vec())
        .collect();
    (support_sets_string(expected), support_sets_string(computed))
}

fn oracle_strings(ideal: &MonomialIdeal) -> (String, String) {
    let expected: Vec<String> = hilbert_function_oracle(ideal, 12)
        .iter()
        .map(|v| v.to_string())
        .collect();
    let computed: Vec<String> = numerator(ideal)
        .expand(12)
        .iter()
        .map(|v| v.to_string())
        .collect();
    (expected.join(","), computed.join(","))
}

// ---------------------------------------------------------------------------
// Multipartite scope
// ---------------------------------------------------------------------------

const REGULARITY_PARTS: [&[u32]; 5] =
    [&[1, 1, 1], &[2, 1], &[2, 1, 1], &[2, 2, 1], &[1, 1, 1, 1]];
const IDENTITY_PARTS: [&[u32]; 3] = [&[1, 1, 1], &[2, 1, 1], &[2, 2, 1]];

fn all_partitions(max_n: u32) -> Vec<Vec<u32>> {
    fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            fill(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        fill(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Guard for multipartite instances: total vertices <= 6 and s <= 4.
fn multipartite_guard(force: bool, parts: &[u32], s: u32) -> Option<String> {
    let n: u32 = parts.iter().sum();
    guard(
        force,
        n > 6 || s > 4,
        "multipartite power checks run for n <= 6 and s <= 4",
    )
}

fn multipartite_scope(
    checks: &mut Vec<Check>,
    options: &VerifyOptions,
) -> Result<(), CliError> {
    let force = options.force;
    match &options.parts {
        Some(parts) => {
            if parts.len() < 2 || parts.contains(&0) {
                return Err(usage_error(
                    "--parts needs at least two parts, each >= 1".to_string(),
                ));
            }
            let s_max = options.s_max.unwrap_or(3);
            multipartite_generator_checks(checks, parts, force);
            for s in 1..=s_max {
                multipartite_series_checks(checks, parts, s, force);
                multipartite_regularity_check(checks, parts, s, force);
                if s >= 2 {
                    multipartite_identity_checks(checks, parts, s, force);
                    multipartite_stage_checks(checks, parts, s, force);
                }
            }
        }
        None => {
            let s_max = options.s_max.unwrap_or(4);
            for parts in all_partitions(7) {
                multipartite_generator_checks(checks, &parts, force);
            }
            for parts in all_partitions(6) {
                for s in 1..=s_max {
                    multipartite_series_checks(checks, &parts, s, force);
                }
            }
            for parts in REGULARITY_PARTS {
                for s in 1..=s_max.min(3) {
                    multipartite_regularity_check(checks, parts, s, force);
                    if s >= 2 {
                        multipartite_stage_checks(checks, parts, s, force);
                    }
                }
            }
            for parts in IDENTITY_PARTS {
                for s in 2..=s_max {
                    multipartite_identity_checks(checks, parts, s, force);
                }
            }
        }
    }
    Ok(())
}

fn multipartite_generator_checks(checks: &mut Vec<Check>, parts: &[u32], force: bool) {
    let parts = parts.to_vec();
    let label = parts_label(&parts);
    let n: u32 = parts.iter().sum();
    let g = guard(force, n > 8, "multipartite generator checks run for n <= 8");
    let p = parts.clone();
    add(checks, "multipartite-cover-generators", format!("parts={label}"), &g, move || {
        let closed =
            closed_form_cover_generators(&CoverFamily::Multipartite { parts: p.clone() })
                .expect("validated parts");
        (closed.to_string(), multipartite_cover(&p).to_string())
    });
    let p = parts.clone();
    add(checks, "multipartite-cover-degree", format!("parts={label}"), &g, move || {
        let mm = multipartite_monomials(&p).expect("validated parts");
        let expected = mm.ambient as u64 - u64::from(*mm.parts.last().expect("k >= 2"));
        let graph = SimpleGraph::complete_multipartite(&p).expect("validated parts");
        (expected.to_string(), graph.cover_degree().expect("has edges").to_string())
    });
    let p = parts;
    add(checks, "edge-cover-duality", format!("parts={label}"), &g, move || {
        let graph = SimpleGraph::complete_multipartite(&p).expect("validated parts");
        duality_strings(&graph)
    });
}

fn multipartite_series_checks(checks: &mut Vec<Check>, parts: &[u32], s: u32, force: bool) {
    let label = parts_label(parts);
    let g = multipartite_guard(force, parts, s);
    let p = parts.to_vec();
    add(checks, "bracket-hilbert-series", format!("parts={label} s={s}"), &g, move || {
        let closed = closed_form_bracket(&p, s).expect("validated range");
        let computed =
            numerator(&bracket_power(&multipartite_cover(&p), s).expect("s >= 1"));
        (reduced_string(&closed), reduced_string(&computed))
    });
    let p = parts.to_vec();
    add(
        checks,
        "bracket-product-hilbert-series",
        format!("parts={label} s={s}"),
        &g,
        move || {
            let closed =
                closed_form_bracket_with_vertex_product(&p, s).expect("validated range");
            let mm = multipartite_monomials(&p).expect("validated parts");
            let ideal = bracket_power(&multipartite_cover(&p), s)
                .expect("s >= 1")
                .sum(&MonomialIdeal::principal(mm.vertex_product))
                .expect("same ambient");
            (reduced_string(&closed), reduced_string(&numerator(&ideal)))
        },
    );
    let p = parts.to_vec();
    add(checks, "symbolic-hilbert-series", format!("parts={label} s={s}"), &g, move || {
        let closed = closed_form_symbolic_multipartite(&p, s).expect("validated range");
        let computed =
            numerator(&symbolic_power(&multipartite_cover(&p), s).expect("squarefree"));
        (reduced_string(&closed), reduced_string(&computed))
    });
    let p = parts.to_vec();
    add(checks, "symbolic-power-recursion", format!("parts={label} s={s}"), &g, move || {
        let recursion = coverlab_core::powers::multipartite_symbolic_generators(&p, s)
            .expect("validated parts");
        let intersection = symbolic_power(&multipartite_cover(&p), s).expect("squarefree");
        (intersection.to_string(), recursion.to_string())
    });
    let p = parts.to_vec();
    add(checks, "hilbert-oracle", format!("parts={label} s={s} symbolic"), &g, move || {
        let sym = symbolic_power(&multipartite_cover(&p), s).expect("squarefree");
        oracle_strings(&sym)
    });
    if parts.len() == 2 {
        let p = parts.to_vec();
        add(
            checks,
            "bipartite-power-collapse",
            format!("parts={label} s={s}"),
            &g,
            move || {
                let cover = multipartite_cover(&p);
                let ordinary = power(&cover, s).expect("small power");
                let symbolic = symbolic_power(&cover, s).expect("squarefree");
                (ordinary.to_string(), symbolic.to_string())
            },
        );
    }
}

fn multipartite_regularity_check(checks: &mut Vec<Check>, parts: &[u32], s: u32, force: bool) {
    let label = parts_label(parts);
    let g = multipartite_guard(force, parts, s);
    let p = parts.to_vec();
    add(
        checks,
        "multipartite-symbolic-regularity",
        format!("parts={label} s={s}"),
        &g,
        move || {
            let expected = closed_form_regularity(&RegularityFamily::MultipartiteSymbolic {
                parts: p.clone(),
                s,
            })
            .expect("validated range");
            let sym = symbolic_power(&multipartite_cover(&p), s).expect("squarefree");
            let computed = regularity(&sym).expect("proper nonzero");
            (expected.to_string(), computed.to_string())
        },
    );
}

fn multipartite_stage_checks(checks: &mut Vec<Check>, parts: &[u32], s: u32, force: bool) {
    let label = parts_label(parts);
    let g = multipartite_guard(force, parts, s);
    for j in 1..=parts.len() {
        let p = parts.to_vec();
        add(
            checks,
            "bracket-stage-regularity",
            format!("parts={label} s={s} j={j}"),
            &g,
            move || {
                let expected = closed_form_regularity(&RegularityFamily::BracketStage {
                    parts: p.clone(),
                    s,
                    j,
                })
                .expect("validated range");
                let staged = bracket_stage_ideal(&p, s, j).expect("validated range");
                let computed = regularity(&staged).expect("proper nonzero");
                (expected.to_string(), computed.to_string())
            },
        );
    }
}

fn multipartite_identity_checks(checks: &mut Vec<Check>, parts: &[u32], s: u32, force: bool) {
    let label = parts_label(parts);
    let g = multipartite_guard(force, parts, s);
    let p = parts.to_vec();
    add(
        checks,
        "symbolic-colon-product",
        format!("parts={label} s={s}"),
        &g,
        move || {
            let mm = multipartite_monomials(&p).expect("validated parts");
            let cover = multipartite_cover(&p);
            let lhs = symbolic_power(&cover, s)
                .expect("squarefree")
                .colon(&mm.vertex_product)
                .expect("same ambient");
            let rhs = symbolic_power(&cover, s - 2).expect("squarefree");
            (rhs.to_string(), lhs.to_string())
        },
    );
    let p = parts.to_vec();
    add(
        checks,
        "symbolic-bracket-sum",
        format!("parts={label} s={s}"),
        &g,
        move || {
            let mm = multipartite_monomials(&p).expect("validated parts");
            let cover = multipartite_cover(&p);
            let product = MonomialIdeal::principal(mm.vertex_product);
            let lhs = symbolic_power(&cover, s)
                .expect("squarefree")
                .sum(&product)
                .expect("same ambient");
            let rhs = bracket_power(&cover, s)
                .expect("s >= 1")
                .sum(&product)
                .expect("same ambient");
            (rhs.to_string(), lhs.to_string())
        },
    );
    for i in 2..=parts.len() {
        let p = parts.to_vec();
        add(
            checks,
            "bracket-prefix-colon",
            format!("parts={label} s={s} i={i}"),
            &g,
            move || {
                let mm = multipartite_monomials(&p).expect("validated parts");
                let prefix = MonomialIdeal::new(
                    mm.ambient,
                    mm.cover_generators[..i - 1]
                        .iter()
                        .map(|c| c.pow(s).expect("small power"))
                        .collect(),
                )
                .expect("same ambient");
                let lhs = prefix
                    .colon(&mm.cover_generators[i - 1].pow(s).expect("small power"))
                    .expect("same ambient");
                let rhs = MonomialIdeal::principal(
                    mm.part_products[i - 1].pow(s).expect("small power"),
                );
                (rhs.to_string(), lhs.to_string())
            },
        );
    }
    let p = parts.to_vec();
    add(checks, "bracket-colon-product", format!("parts={label} s={s}"), &g, move || {
        let mm = multipartite_monomials(&p).expect("validated parts");
        let cover = multipartite_cover(&p);
        let lhs = bracket_power(&cover, s)
            .expect("s >= 1")
            .colon(&mm.vertex_product)
            .expect("same ambient");
        let rhs = bracket_power(&cover, s - 1).expect("s >= 1");
        (rhs.to_string(), lhs.to_string())
    });
}

fn parts_label(parts: &[u32]) -> String {
    let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    rendered.join(",")
}

// ---------------------------------------------------------------------------
// Multiplicity scope
// ---------------------------------------------------------------------------

fn multiplicity_scope(
    checks: &mut Vec<Check>,
    options: &VerifyOptions,
) -> Result<(), CliError> {
    let s_max = options.s_max.unwrap_or(3);
    let graphs: Vec<(String, SimpleGraph)> = match &options.graph {
        Some(name) => vec![(name.clone(), named_graph(name)?)],
        None => ["triangle", "crown3", "k2,2", "k2,1,1"]
            .iter()
            .map(|name| (name.to_string(), named_graph(name).expect("known name")))
            .collect(),
    };

    for (name, graph) in graphs {
        for s in 1..=s_max {
            let over = guard(
                options.force,
                graph.vertex_count() > 8 || s > 4,
                "multiplicity checks run for graphs with <= 8 vertices and s <= 4",
            );
            let g = graph.clone();
            add(
                checks,
                "cover-symbolic-multiplicity",
                format!("graph={name} s={s}"),
                &over,
                move || {
                    let expected = symbolic_multiplicity(&g, GraphIdealKind::Cover, s)
                        .expect("has edges");
                    let sym =
                        symbolic_power(&g.cover_ideal().ideal, s).expect("squarefree");
                    let computed = numerator(&sym).reduce().expect("nonzero").multiplicity;
                    (expected.to_string(), computed.to_string())
                },
            );
            let g = graph.clone();
            add(
                checks,
                "edge-symbolic-multiplicity",
                format!("graph={name} s={s}"),
                &over,
                move || {
                    let expected = symbolic_multiplicity(&g, GraphIdealKind::Edge, s)
                        .expect("has edges");
                    let sym = symbolic_power(&g.edge_ideal(), s).expect("squarefree");
                    let computed = numerator(&sym).reduce().expect("nonzero").multiplicity;
                    (expected.to_string(), computed.to_string())
                },
            );
        }
        let over = guard(
            options.force,
            graph.vertex_count() > 8,
            "multiplicity checks run for graphs with <= 8 vertices",
        );
        let g = graph.clone();
        add(checks, "min-height-prime-count", format!("graph={name}"), &over, move || {
            let covers = g.minimal_vertex_covers();
            let h = covers.iter().map(|c| c.len()).min().expect("has edges");
            let cover_count = covers.iter().filter(|c| c.len() == h).count();
            let primes = g.edge_ideal().minimal_primes().expect("has edges");
            let ph = primes.iter().map(|p| p.height()).min().expect("nonempty");
            let prime_count = primes.iter().filter(|p| p.height() == ph).count();
            (
                format!("h={h} count={cover_count}"),
                format!("h={ph} count={prime_count}"),
            )
        });
    }

    for h in 2..=3u32 {
        for s in 1..=s_max {
            let over = guard(
                options.force,
                s > 4,
                "linear-power multiplicity checks run for s <= 4",
            );
            add(checks, "linear-power-multiplicity", format!("h={h} s={s}"), &over, move || {
                let expected = linear_power_multiplicity(h, s);
                let prime = PrimeSupport::new(h as usize, (0..h as usize).collect())
                    .expect("nonempty");
                let powered = power(&prime.generator_ideal(), s).expect("small power");
                let computed =
                    numerator(&powered).reduce().expect("nonzero").multiplicity;
                (expected.to_string(), computed.to_string())
            });
        }
    }
    Ok(())
}
