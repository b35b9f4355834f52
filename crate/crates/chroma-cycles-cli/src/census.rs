//! Corpus analysis: per-graph records over a graph6/sparse6 file, with the
//! quantitative cycle guarantees re-verified on every edge of every
//! critical graph found.
//!
//! Lines are processed in parallel; output order follows input order, so
//! reports are byte-identical across runs for a fixed (corpus, config).

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use chroma_cycles::coloring::{chromatic_number, find_k_coloring};
use chroma_cycles::graph::{Edge, Graph};
use chroma_cycles::graph6::parse_graph_line_with_limit;
use chroma_cycles::oracle;
use chroma_cycles::tuza::{extract_one_mod_r_cycles, one_mod_r_bound};

use crate::{default_budget, print_json_line, CliError, OutputFormat};

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One theorem check: extractor count vs guaranteed bound vs oracle count.
#[derive(Serialize)]
struct BoundCheck {
    edge: Edge,
    r: usize,
    bound: u64,
    extracted: usize,
    /// Brute-force count of 1-mod-r cycles through the edge.
    oracle: u64,
    pass: bool,
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum Record {
    #[serde(rename = "graph")]
    Graph(Box<GraphRecord>),
    #[serde(rename = "error")]
    Error(ErrorRecord),
}

#[derive(Serialize)]
struct GraphRecord {
    index: usize,
    id: String,
    n: usize,
    m: usize,
    chromatic: usize,
    k: usize,
    /// True when the graph is (k+1)-edge-critical.
    critical: bool,
    /// Whole-graph cycle counts per length residue mod k.
    residue_counts: Vec<u64>,
    /// Enumeration budget ran out; counts are lower bounds.
    truncated: bool,
    /// Whether some cycle has length 2 mod k.
    has_cycle_2_mod_k: bool,
    /// Populated for critical graphs: one entry per (edge, r).
    theorem1: Vec<BoundCheck>,
    /// Must stay empty on any corpus whose lines satisfy the preconditions.
    violations: Vec<String>,
    tool_version: &'static str,
    seed: u64,
}

#[derive(Serialize)]
struct ErrorRecord {
    index: usize,
    line: String,
    error: String,
    tool_version: &'static str,
    seed: u64,
}

#[derive(Serialize)]
struct Summary {
    kind: &'static str,
    graphs: usize,
    parse_failures: usize,
    critical: usize,
    theorem1_checks: usize,
    violations: usize,
    budget_exhausted: usize,
    tool_version: &'static str,
    seed: u64,
}

pub fn cmd_census(
    file: &Path,
    k: usize,
    format: OutputFormat,
    budget: Option<u64>,
    seed: u64,
    max_n: usize,
) -> Result<(), CliError> {
    if k < 2 {
        return Err(CliError::Precondition("census needs k >= 2".into()));
    }
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))?;
    let budget = budget.unwrap_or_else(default_budget);
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();

    let records: Vec<Record> = lines
        .par_iter()
        .map(|&(index, line)| match parse_graph_line_with_limit(line, max_n) {
            Ok(g) => Record::Graph(Box::new(analyze(index, line, &g, k, budget, seed))),
            Err(e) => Record::Error(ErrorRecord {
                index,
                line: line.to_string(),
                error: e.to_string(),
                tool_version: TOOL_VERSION,
                seed,
            }),
        })
        .collect();

    let mut summary = Summary {
        kind: "summary",
        graphs: 0,
        parse_failures: 0,
        critical: 0,
        theorem1_checks: 0,
        violations: 0,
        budget_exhausted: 0,
        tool_version: TOOL_VERSION,
        seed,
    };
    for rec in &records {
        match rec {
            Record::Graph(g) => {
                summary.graphs += 1;
                summary.critical += usize::from(g.critical);
                summary.theorem1_checks += g.theorem1.len();
                summary.violations += g.violations.len();
                summary.budget_exhausted += usize::from(g.truncated);
            }
            Record::Error(_) => summary.parse_failures += 1,
        }
    }

    match format {
        OutputFormat::Jsonl => {
            for rec in &records {
                print_json_line(rec);
            }
            print_json_line(&summary);
        }
        OutputFormat::Csv => {
            println!(
                "index,id,n,m,chromatic,critical,has_cycle_2_mod_k,residue_counts,\
                 theorem1_checks,theorem1_failures,truncated,error"
            );
            for rec in &records {
                match rec {
                    Record::Graph(g) => {
                        let failures = g.theorem1.iter().filter(|c| !c.pass).count();
                        println!(
                            "{},{},{},{},{},{},{},{},{},{},{},",
                            g.index,
                            g.id,
                            g.n,
                            g.m,
                            g.chromatic,
                            g.critical,
                            g.has_cycle_2_mod_k,
                            g.residue_counts
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(";"),
                            g.theorem1.len(),
                            failures,
                            g.truncated,
                        );
                    }
                    Record::Error(e) => {
                        println!("{},{},,,,,,,,,,{}", e.index, e.line, e.error);
                    }
                }
            }
            println!(
                "summary,,{},{},{},{},{},,{},{},{},",
                summary.graphs,
                summary.parse_failures,
                summary.critical,
                summary.violations,
                summary.budget_exhausted,
                summary.theorem1_checks,
                summary.violations,
                summary.budget_exhausted,
            );
        }
    }

    if summary.violations > 0 {
        return Err(CliError::Violation(format!(
            "{} theorem-bound violations recorded",
            summary.violations
        )));
    }
    Ok(())
}

fn analyze(index: usize, id: &str, g: &Graph, k: usize, budget: u64, seed: u64) -> GraphRecord {
    let chromatic = chromatic_number(g);
    let critical = chromatic == k + 1
        && g.edges().iter().all(|&e| {
            find_k_coloring(&g.edge_deleted(e).expect("edge from graph"), k).is_some()
        });

    let mut violations = Vec::new();
    let whole = oracle::residue_profile(g, k, None, Some(budget))
        .expect("k >= 2 was checked");
    let mut truncated = whole.truncated;
    let mut theorem1 = Vec::new();

    if critical {
        for r in 2..=k {
            let census = oracle::edge_residue_census(g, r, Some(budget))
                .expect("r >= 2 by construction");
            truncated |= census.whole.truncated;
            for e in g.edges() {
                let del = g.edge_deleted(e).expect("edge from graph");
                let Some(phi) = find_k_coloring(&del, k) else {
                    violations.push(format!(
                        "criticality promised a {k}-coloring of g - {e} but none was found"
                    ));
                    continue;
                };
                let bound = one_mod_r_bound(k, r) as u64;
                match extract_one_mod_r_cycles(g, e, &phi, r) {
                    Ok(certs) => {
                        let mut pass = true;
                        if (certs.len() as u64) < bound {
                            pass = false;
                            violations.push(format!(
                                "edge {e}, r={r}: extracted {} below bound {bound}",
                                certs.len()
                            ));
                        }
                        for c in &certs {
                            if let Err(err) = c.validate(g).and_then(|()| c.verify_witness()) {
                                pass = false;
                                violations.push(format!(
                                    "edge {e}, r={r}: certificate failed re-validation: {err}"
                                ));
                            }
                        }
                        let canon: std::collections::BTreeSet<Vec<usize>> =
                            certs.iter().map(|c| c.canonical()).collect();
                        if canon.len() != certs.len() {
                            pass = false;
                            violations
                                .push(format!("edge {e}, r={r}: duplicate certificates"));
                        }
                        let oracle_count = census.per_edge[&e].counts[1 % r];
                        let oracle_truncated = census.per_edge[&e].truncated;
                        if !oracle_truncated && oracle_count < certs.len() as u64 {
                            pass = false;
                            violations.push(format!(
                                "edge {e}, r={r}: oracle count {oracle_count} below extractor count {}",
                                certs.len()
                            ));
                        }
                        theorem1.push(BoundCheck {
                            edge: e,
                            r,
                            bound,
                            extracted: certs.len(),
                            oracle: oracle_count,
                            pass,
                        });
                    }
                    Err(err) => {
                        violations.push(format!("edge {e}, r={r}: {err}"));
                        theorem1.push(BoundCheck {
                            edge: e,
                            r,
                            bound,
                            extracted: 0,
                            oracle: census.per_edge[&e].counts[1 % r],
                            pass: false,
                        });
                    }
                }
            }
        }
    }

    GraphRecord {
        index,
        id: id.to_string(),
        n: g.n(),
        m: g.edge_count(),
        chromatic,
        k,
        critical,
        has_cycle_2_mod_k: whole.counts[2 % k] > 0,
        residue_counts: whole.counts.clone(),
        truncated,
        theorem1,
        violations,
        tool_version: TOOL_VERSION,
        seed,
    }
}
