//! Command-line surface: run the extractors and the brute-force oracle on
//! named graphs or graph6/sparse6 corpora, re-validate every certificate,
//! and emit deterministic machine-readable reports.

mod census;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chroma_cycles::cert::CycleCert;
use chroma_cycles::circular::{extract_circular_bonus, extract_circular_cycle};
use chroma_cycles::coloring::{
    chromatic_number, find_k_coloring, find_kd_coloring, CircularSpec, Coloring,
};
use chroma_cycles::graph::{make_named, Edge, Graph};
use chroma_cycles::graph6::parse_graph_line_with_limit;
use chroma_cycles::oracle;
use chroma_cycles::tuza::{
    extract_one_mod_r_cycles, extract_zero_mod_r_cycles, one_mod_r_bound, zero_mod_r_bound,
};
use chroma_cycles::ExtractError;

pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_VIOLATION: u8 = 4;

/// Failure modes mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable input: bad graph6 line, bad named-graph spec, bad file.
    Parse(String),
    /// Input readable but the requested operation does not apply.
    Precondition(String),
    /// A guarantee that must hold on valid inputs failed. Reserved; seeing
    /// this exit code means a bug, not a property of the input.
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Violation(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "chroma-cycles",
    version,
    about = "Extract and verify certified cycles forced by critical edges"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Proper k-coloring feasibility and chromatic number
    Color {
        #[command(flatten)]
        src: Source,
        /// Palette size to test
        #[arg(long)]
        k: Option<usize>,
        /// Compute the chromatic number
        #[arg(long)]
        chromatic: bool,
    },
    /// Circular (k,d)-coloring feasibility
    Circ {
        #[command(flatten)]
        src: Source,
        /// Modulus and spread, e.g. 7,3
        #[arg(long, value_parser = parse_pair)]
        kd: (usize, usize),
    },
    /// Edge-criticality: chromatic number k+1 and every deletion drops it
    Critical {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        k: usize,
    },
    /// Run an extractor on one edge; certificates are re-validated
    Extract {
        #[command(flatten)]
        src: Source,
        /// Edge as "u,v" with 0-based vertex ids
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
        #[arg(long, value_enum)]
        mode: Mode,
        /// Palette size (one-mod-r / zero-mod-r modes)
        #[arg(long)]
        k: Option<usize>,
        /// Cycle-length modulus (one-mod-r / zero-mod-r modes)
        #[arg(long)]
        r: Option<usize>,
        /// Circular modulus and spread (circular modes)
        #[arg(long, value_parser = parse_pair)]
        kd: Option<(usize, usize)>,
    },
    /// Brute-force residue profile of cycle lengths
    Oracle {
        #[command(flatten)]
        src: Source,
        /// Length modulus
        #[arg(long)]
        r: usize,
        /// Restrict to cycles through this edge
        #[arg(long, value_parser = parse_pair)]
        edge: Option<(usize, usize)>,
        /// Cap on enumerated cycle count (default: CHROMA_CYCLES_BUDGET or 10^7)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Batch analysis of a graph6/sparse6 corpus, one graph per line
    Census {
        /// Corpus file
        #[arg(long)]
        file: PathBuf,
        /// Criticality level to test: flags (k+1)-edge-critical graphs
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Jsonl)]
        format: OutputFormat,
        /// Cap on enumerated cycle count per graph
        #[arg(long)]
        budget: Option<u64>,
        /// Recorded in every report line for reproducibility
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Reject graphs with more vertices than this
        #[arg(long, default_value_t = 64)]
        max_n: usize,
    },
    /// Random vertex orderings tested against the orientation condition
    Orient {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Cycles of length 1 mod r through the edge
    OneModR,
    /// Cycles of length 0 mod r avoiding the edge
    ZeroModR,
    /// One cycle of length i*s mod k through the edge
    Circular,
    /// Two 1-mod-k cycles plus a 0-mod-k cycle (exceptional case)
    CircularBonus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

/// Exactly one graph source.
#[derive(Args)]
struct Source {
    /// Named graph: name[:p1[:p2]], e.g. complete:5, circular-clique:7:3
    #[arg(long, conflicts_with_all = ["g6", "file"])]
    named: Option<String>,
    /// Inline graph6/sparse6 line
    #[arg(long, conflicts_with = "file")]
    g6: Option<String>,
    /// File containing a single graph6/sparse6 line
    #[arg(long)]
    file: Option<PathBuf>,
    /// Reject graphs with more vertices than this
    #[arg(long, default_value_t = 64)]
    max_n: usize,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two comma-separated integers, got `{s}`"));
    }
    let a = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let b = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

/// Parses the `name[:p1[:p2]]` grammar.
pub fn named_graph(arg: &str) -> Result<Graph, CliError> {
    let mut parts = arg.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<usize> = parts
        .map(|p| {
            p.parse()
                .map_err(|_| CliError::Parse(format!("bad parameter `{p}` in `{arg}`")))
        })
        .collect::<Result<_, _>>()?;
    make_named(name, &params).map_err(|e| CliError::Parse(e.to_string()))
}

impl Source {
    fn load(&self) -> Result<(String, Graph), CliError> {
        match (&self.named, &self.g6, &self.file) {
            (Some(name), None, None) => Ok((name.clone(), named_graph(name)?)),
            (None, Some(line), None) => {
                let g = parse_graph_line_with_limit(line, self.max_n)
                    .map_err(|e| CliError::Parse(e.to_string()))?;
                Ok((line.clone(), g))
            }
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                let mut lines = text.lines().filter(|l| !l.trim().is_empty());
                let first = lines
                    .next()
                    .ok_or_else(|| CliError::Parse(format!("{}: no graph line", path.display())))?;
                if lines.next().is_some() {
                    return Err(CliError::Parse(format!(
                        "{}: expected a single graph line (use `census` for corpora)",
                        path.display()
                    )));
                }
                let g = parse_graph_line_with_limit(first, self.max_n)
                    .map_err(|e| CliError::Parse(e.to_string()))?;
                Ok((first.to_string(), g))
            }
            _ => Err(CliError::Parse(
                "provide exactly one of --named, --g6, --file".into(),
            )),
        }
    }
}

pub fn default_budget() -> u64 {
    std::env::var("CHROMA_CYCLES_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000_000)
}

fn edge_in(g: &Graph, pair: (usize, usize)) -> Result<Edge, CliError> {
    let (u, v) = pair;
    if u == v || !g.has_edge(u, v) {
        return Err(CliError::Precondition(format!(
            "edge {u},{v} is not present in the graph"
        )));
    }
    Ok(Edge::new(u, v))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

pub(crate) fn print_json_line<T: Serialize>(value: &T) {
    print_json(value);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Color { src, k, chromatic } => cmd_color(&src, k, chromatic),
        Cmd::Circ { src, kd } => cmd_circ(&src, kd),
        Cmd::Critical { src, k } => cmd_critical(&src, k),
        Cmd::Extract {
            src,
            edge,
            mode,
            k,
            r,
            kd,
        } => cmd_extract(&src, edge, mode, k, r, kd),
        Cmd::Oracle {
            src,
            r,
            edge,
            budget,
        } => cmd_oracle(&src, r, edge, budget),
        Cmd::Census {
            file,
            k,
            format,
            budget,
            seed,
            max_n,
        } => census::cmd_census(&file, k, format, budget, seed, max_n),
        Cmd::Orient {
            src,
            k,
            trials,
            seed,
        } => cmd_orient(&src, k, trials, seed),
    }
}

// ---------------------------------------------------------------------------
// color / circ / critical
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ColorReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    chromatic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<usize>>,
}

fn cmd_color(src: &Source, k: Option<usize>, chromatic: bool) -> Result<(), CliError> {
    if k.is_none() && !chromatic {
        return Err(CliError::Precondition(
            "pass --k and/or --chromatic".into(),
        ));
    }
    let (id, g) = src.load()?;
    let mut report = ColorReport {
        graph: &id,
        n: g.n(),
        m: g.edge_count(),
        chromatic: None,
        k,
        feasible: None,
        coloring: None,
    };
    if chromatic {
        report.chromatic = Some(chromatic_number(&g));
    }
    if let Some(k) = k {
        if k == 0 {
            return Err(CliError::Precondition("k must be at least 1".into()));
        }
        match find_k_coloring(&g, k) {
            Some(c) => {
                c.check_on(&g)
                    .map_err(|e| CliError::Violation(format!("solver emitted a bad coloring: {e}")))?;
                report.feasible = Some(true);
                report.coloring = Some(c.colors().to_vec());
            }
            None => report.feasible = Some(false),
        }
    }
    print_json(&report);
    Ok(())
}

#[derive(Serialize)]
struct CircReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    k: usize,
    d: usize,
    s: usize,
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<usize>>,
}

fn circular_spec(kd: (usize, usize)) -> Result<CircularSpec, CliError> {
    CircularSpec::new(kd.0, kd.1).map_err(|e| CliError::Precondition(e.to_string()))
}

fn cmd_circ(src: &Source, kd: (usize, usize)) -> Result<(), CliError> {
    let spec = circular_spec(kd)?;
    let (id, g) = src.load()?;
    let found = find_kd_coloring(&g, spec);
    if let Some(c) = &found {
        c.check_on(&g)
            .map_err(|e| CliError::Violation(format!("solver emitted a bad coloring: {e}")))?;
    }
    print_json(&CircReport {
        graph: &id,
        n: g.n(),
        m: g.edge_count(),
        k: spec.k,
        d: spec.d,
        s: spec.s,
        feasible: found.is_some(),
        coloring: found.map(|c| c.colors().to_vec()),
    });
    Ok(())
}

#[derive(Serialize)]
struct CriticalReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    k: usize,
    chromatic: usize,
    critical: bool,
    /// Edges whose deletion fails to drop the chromatic number to k.
    non_dropping_edges: Vec<Edge>,
}

fn cmd_critical(src: &Source, k: usize) -> Result<(), CliError> {
    let (id, g) = src.load()?;
    let chromatic = chromatic_number(&g);
    let mut non_dropping = Vec::new();
    if chromatic == k + 1 {
        for e in g.edges() {
            let del = g.edge_deleted(e).expect("edge from the graph");
            if find_k_coloring(&del, k).is_none() {
                non_dropping.push(e);
            }
        }
    }
    let critical = chromatic == k + 1 && non_dropping.is_empty();
    debug_assert_eq!(critical, chroma_cycles::coloring::is_edge_critical(&g, k));
    print_json(&CriticalReport {
        graph: &id,
        n: g.n(),
        m: g.edge_count(),
        k,
        chromatic,
        critical,
        non_dropping_edges: non_dropping,
    });
    Ok(())
}

// ---------------------------------------------------------------------------
// extract
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ExtractReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    edge: Edge,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    /// Guaranteed minimum number of certificates, when quantitative.
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<u64>,
    count: usize,
    bound_satisfied: bool,
    all_valid: bool,
    certificates: Vec<CycleCert>,
}

fn map_extract_err(err: ExtractError) -> CliError {
    match err {
        ExtractError::Precondition { reason, witness_cycle } => {
            let mut msg = reason;
            if let Some(c) = witness_cycle {
                msg.push_str(&format!(" (witness cycle {c:?})"));
            }
            CliError::Precondition(msg)
        }
        ExtractError::TheoremViolation { .. } => CliError::Violation(
            "extraction produced a coloring of the full graph; \
             the colorability precondition must have been misjudged"
                .into(),
        ),
    }
}

fn proper_precondition(g: &Graph, e: Edge, k: usize) -> Result<Coloring, CliError> {
    if find_k_coloring(g, k).is_some() {
        return Err(CliError::Precondition(format!(
            "the graph is {k}-colorable; no cycles are forced through {e}"
        )));
    }
    let del = g.edge_deleted(e).expect("validated edge");
    find_k_coloring(&del, k).ok_or_else(|| {
        CliError::Precondition(format!("deleting {e} still leaves the graph non-{k}-colorable"))
    })
}

fn circular_precondition(
    g: &Graph,
    e: Edge,
    spec: CircularSpec,
) -> Result<Coloring, CliError> {
    if find_kd_coloring(g, spec).is_some() {
        return Err(CliError::Precondition(format!(
            "the graph is ({},{})-colorable; no cycles are forced through {e}",
            spec.k, spec.d
        )));
    }
    let del = g.edge_deleted(e).expect("validated edge");
    find_kd_coloring(&del, spec).ok_or_else(|| {
        CliError::Precondition(format!(
            "deleting {e} still leaves the graph non-({},{})-colorable",
            spec.k, spec.d
        ))
    })
}

fn validate_all(g: &Graph, certs: &[CycleCert]) -> Result<(), CliError> {
    for c in certs {
        c.validate(g)
            .and_then(|()| c.verify_witness())
            .map_err(|e| CliError::Violation(format!("certificate failed re-validation: {e}")))?;
    }
    // Pairwise distinctness by canonical form.
    let canon: std::collections::BTreeSet<Vec<usize>> =
        certs.iter().map(|c| c.canonical()).collect();
    if canon.len() != certs.len() {
        return Err(CliError::Violation(
            "certificates are not pairwise distinct".into(),
        ));
    }
    Ok(())
}

fn cmd_extract(
    src: &Source,
    edge: (usize, usize),
    mode: Mode,
    k: Option<usize>,
    r: Option<usize>,
    kd: Option<(usize, usize)>,
) -> Result<(), CliError> {
    let (id, g) = src.load()?;
    let e = edge_in(&g, edge)?;
    let need = |opt: Option<usize>, what: &str| {
        opt.ok_or_else(|| CliError::Precondition(format!("mode requires --{what}")))
    };
    match mode {
        Mode::OneModR | Mode::ZeroModR => {
            let k = need(k, "k")?;
            let r = need(r, "r")?;
            let phi = proper_precondition(&g, e, k)?;
            let (certs, bound, mode_name) = if mode == Mode::OneModR {
                (
                    extract_one_mod_r_cycles(&g, e, &phi, r).map_err(map_extract_err)?,
                    one_mod_r_bound(k, r),
                    "one-mod-r",
                )
            } else {
                (
                    extract_zero_mod_r_cycles(&g, e, &phi, r).map_err(map_extract_err)?,
                    zero_mod_r_bound(r),
                    "zero-mod-r",
                )
            };
            validate_all(&g, &certs)?;
            let bound_satisfied = certs.len() as u128 >= bound;
            if !bound_satisfied {
                return Err(CliError::Violation(format!(
                    "extracted {} certificates, below the guaranteed {bound}",
                    certs.len()
                )));
            }
            print_json(&ExtractReport {
                graph: &id,
                n: g.n(),
                m: g.edge_count(),
                edge: e,
                mode: mode_name,
                k: Some(k),
                r: Some(r),
                d: None,
                s: None,
                bound: Some(bound as u64),
                count: certs.len(),
                bound_satisfied,
                all_valid: true,
                certificates: certs,
            });
        }
        Mode::Circular | Mode::CircularBonus => {
            let kd = kd.ok_or_else(|| CliError::Precondition("mode requires --kd".into()))?;
            let spec = circular_spec(kd)?;
            let phi = circular_precondition(&g, e, spec)?;
            let certs = if mode == Mode::Circular {
                vec![extract_circular_cycle(&g, e, &phi).map_err(map_extract_err)?]
            } else {
                let bonus = extract_circular_bonus(&g, e, &phi).map_err(map_extract_err)?;
                vec![bonus.one_forward, bonus.zero, bonus.one_backward]
            };
            validate_all(&g, &certs)?;
            print_json(&ExtractReport {
                graph: &id,
                n: g.n(),
                m: g.edge_count(),
                edge: e,
                mode: if mode == Mode::Circular {
                    "circular"
                } else {
                    "circular-bonus"
                },
                k: Some(spec.k),
                r: None,
                d: Some(spec.d),
                s: Some(spec.s),
                bound: None,
                count: certs.len(),
                bound_satisfied: true,
                all_valid: true,
                certificates: certs,
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// oracle / orient
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct OracleReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    profile: oracle::ResidueProfile,
}

fn cmd_oracle(
    src: &Source,
    r: usize,
    edge: Option<(usize, usize)>,
    budget: Option<u64>,
) -> Result<(), CliError> {
    let (id, g) = src.load()?;
    let through = edge.map(|pair| edge_in(&g, pair)).transpose()?;
    let budget = budget.unwrap_or_else(default_budget);
    let profile = oracle::residue_profile(&g, r, through, Some(budget))
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    print_json(&OracleReport {
        graph: &id,
        n: g.n(),
        m: g.edge_count(),
        profile,
    });
    Ok(())
}

#[derive(Serialize)]
struct OrientReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    k: usize,
    trials_requested: usize,
    seed: u64,
    search: oracle::OrientationSearch,
}

fn cmd_orient(src: &Source, k: usize, trials: usize, seed: u64) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Precondition("need at least one trial".into()));
    }
    if k < 2 {
        return Err(CliError::Precondition("k must be at least 2".into()));
    }
    let (id, g) = src.load()?;
    let search = oracle::random_orientation_search(&g, k, trials, seed);
    print_json(&OrientReport {
        graph: &id,
        n: g.n(),
        m: g.edge_count(),
        k,
        trials_requested: trials,
        seed,
        search,
    });
    Ok(())
}

