//! Command-line front end. Each command reads graph files and prints one
//! JSON report per input on its own line.
//!
//! Exit codes: 0 success, 2 input error, 3 out-of-class refusal,
//! 4 size-cap violation. `EVENHOLE_ORACLE_MAX` lowers the vertex cap for
//! oracle work (default 20).

mod dot;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog::{self, fixed_graph};
use crate::color::{color_with_report, verify_coloring, ColorOutcome};
use crate::cwd::{eval, expr_for_class_graph, CwdOutcome};
use crate::error::{Error, Result};
use crate::generate::{gen_saucer, gen_special, gen_tent, GenKind, GenParams};
use crate::graph::Graph;
use crate::io::{parse_graph, write_graph, GraphFormat};
use crate::oracle::{self, VERDICT_LIMIT};
use crate::recognize::{recognize, SaucerPartition, TentPartition, Verdict};

pub use dot::to_dot;

pub const SCHEMA_VERSION: u32 = 1;
pub const ORACLE_MAX_ENV: &str = "EVENHOLE_ORACLE_MAX";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;
pub const EXIT_SIZE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "evenhole", version, about = "Recognize, color and decompose (2P3, C4, C6)-free graphs with an induced C7 or T0")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for multiple input files.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Input format; guessed from the extension by default (.json is edge-json).
    #[arg(long, global = true, value_enum)]
    pub input_format: Option<FormatArg>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide membership and print the certificate partition.
    Recognize {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also run the brute-force class check and report agreement.
        #[arg(long)]
        oracle_crosscheck: bool,
        /// Write a DOT drawing of the partition (a directory when there are
        /// several inputs).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Optimal coloring of an in-class (or chordal) graph.
    Color {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Compare the color count with the brute-force chromatic number.
        #[arg(long)]
        crosscheck: bool,
    },
    /// Clique-width expression of width at most 12 for a simplicial-free
    /// in-class graph.
    Cwd {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Write seeded random graphs with their certificates.
    Generate {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of graphs; seeds run consecutively from --seed.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Dimacs)]
        format: FormatArg,
        #[arg(long, default_value_t = 3)]
        max_class_size: usize,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p_nonempty: f64,
        /// Hole-family base graph by name (special and saucer only).
        #[arg(long)]
        base: Option<String>,
        /// Omit the parts that create simplicial vertices.
        #[arg(long)]
        simplicial_free: bool,
    },
    /// Brute-force queries.
    Oracle {
        file: PathBuf,
        /// Named pattern to search for as an induced subgraph (repeatable).
        #[arg(long)]
        pattern: Vec<String>,
        /// Lengths of all holes.
        #[arg(long)]
        holes: bool,
        /// Chromatic number with an optimal coloring.
        #[arg(long)]
        chi: bool,
        /// Class membership flags with witnesses (the default query).
        #[arg(long)]
        verdict: bool,
        /// A clique cutset, if any.
        #[arg(long)]
        cutset: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dimacs,
    Json,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => GraphFormat::DimacsCol,
            FormatArg::Json => GraphFormat::EdgeJson,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Special,
    Saucer,
    Tent,
}

impl From<KindArg> for GenKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Special => GenKind::Special,
            KindArg::Saucer => GenKind::Saucer,
            KindArg::Tent => GenKind::Tent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// One command result. Everything except `timing` is deterministic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub result: Value,
    pub timing: Timing,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    fn new(command: &str, input: Option<InputInfo>, result: Value, started: Instant, exit_code: i32) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            result,
            timing: Timing {
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            },
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Exit code for a library error.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SizeLimit { .. } => EXIT_SIZE,
        _ => EXIT_INPUT,
    }
}

/// Vertex cap for oracle work: the smaller of `limit` and the environment
/// override.
pub fn oracle_cap(limit: usize) -> usize {
    std::env::var(ORACLE_MAX_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(limit, |v| v.min(limit))
}

fn check_cap(what: &'static str, limit: usize, n: usize) -> Result<()> {
    let cap = oracle_cap(limit);
    if n > cap {
        return Err(Error::size(what, cap, n));
    }
    Ok(())
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Reads and parses a graph file, returning the graph and its report header.
pub fn load(path: &Path, format: Option<GraphFormat>) -> Result<(Graph, InputInfo)> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Parse { line: 1, message: "the file is not UTF-8".into() })?;
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    let g = parse_graph(&text, format)?;
    let info = InputInfo {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
        n: g.n(),
        m: g.edge_count(),
    };
    Ok((g, info))
}

/// Partition parts as (name, members), in a fixed order.
pub fn saucer_parts(p: &SaucerPartition) -> Vec<(String, Vec<usize>)> {
    let s = &p.special;
    let mut out: Vec<(String, Vec<usize>)> = Vec::new();
    for (prefix, sets) in [("X", &s.x), ("Y", &s.y), ("Z", &s.z)] {
        out.extend(sets.iter().enumerate().map(|(i, v)| (format!("{prefix}{i}"), v.clone())));
    }
    out.push(("W".into(), s.w.clone()));
    out.extend(p.a_components.iter().enumerate().map(|(k, c)| (format!("A.{k}"), c.clone())));
    out
}

pub fn tent_parts(p: &TentPartition) -> Vec<(String, Vec<usize>)> {
    let mut out: Vec<(String, Vec<usize>)> = [
        ("A0", &p.a0),
        ("A1", &p.a1),
        ("B0", &p.b0),
        ("B1", &p.b1),
        ("B2", &p.b2),
        ("B3", &p.b3),
        ("C1", &p.c1),
        ("C2", &p.c2),
        ("C3", &p.c3),
        ("F2", &p.f2),
        ("F3", &p.f3),
        ("W", &p.w),
        ("Y", &p.y),
    ]
    .into_iter()
    .map(|(n, s)| (n.to_string(), s.clone()))
    .collect();
    out.extend(p.z_components.iter().enumerate().map(|(k, c)| (format!("Z.{k}"), c.clone())));
    out
}

/// Named parts of an accepting verdict; empty for a rejection.
pub fn verdict_parts(v: &Verdict) -> Vec<(String, Vec<usize>)> {
    match v {
        Verdict::InClassWithC7 { partition } => saucer_parts(partition),
        Verdict::InClassWithT0 { partition } => tent_parts(partition),
        Verdict::NotInClass(_) => Vec::new(),
    }
}

fn parts_json(parts: &[(String, Vec<usize>)]) -> Value {
    let map: BTreeMap<&str, &Vec<usize>> = parts.iter().map(|(n, s)| (n.as_str(), s)).collect();
    json!(map)
}

fn crosscheck_json(g: &Graph, in_class: bool) -> Result<Value> {
    check_cap("oracle cross-check", VERDICT_LIMIT, g.n())?;
    let verdict = oracle::class_verdict(g)?;
    Ok(json!({
        "in_class": verdict.in_class(),
        "agrees": verdict.in_class() == in_class,
        "flags": verdict,
    }))
}

pub fn cmd_recognize(
    path: &Path,
    format: Option<GraphFormat>,
    oracle_crosscheck: bool,
    dot_out: Option<&Path>,
) -> Result<Report> {
    let started = Instant::now();
    let (g, info) = load(path, format)?;
    if oracle_crosscheck {
        check_cap("oracle cross-check", VERDICT_LIMIT, g.n())?;
    }
    let report = recognize(&g);
    let parts = verdict_parts(&report.verdict);
    let mut result = json!({
        "in_class": report.verdict.in_class(),
        "parts": parts_json(&parts),
        "report": report,
    });
    if oracle_crosscheck {
        result["oracle"] = crosscheck_json(&g, report.verdict.in_class())?;
    }
    if let Some(out) = dot_out {
        std::fs::write(out, to_dot(&g, &parts))?;
    }
    Ok(Report::new("recognize", Some(info), result, started, EXIT_OK))
}

pub fn cmd_color(path: &Path, format: Option<GraphFormat>, crosscheck: bool) -> Result<Report> {
    let started = Instant::now();
    let (g, info) = load(path, format)?;
    if crosscheck {
        check_cap("chromatic number", oracle::CHROMATIC_LIMIT, g.n())?;
    }
    let report = recognize(&g);
    match color_with_report(&g, &report)? {
        ColorOutcome::Colored(c) => {
            let mut result = json!({
                "num_colors": c.num_colors,
                "coloring": c.assignment,
                "proper": verify_coloring(&g, &c)?,
                "verdict": report.verdict.name(),
            });
            if crosscheck {
                let (chi, _) = oracle::chromatic_number_bf(&g)?;
                result["oracle_num_colors"] = json!(chi);
                result["optimal"] = json!(chi == c.num_colors);
            }
            Ok(Report::new("color", Some(info), result, started, EXIT_OK))
        }
        ColorOutcome::NotInClass(rej) => {
            let result = json!({ "refused": rej });
            Ok(Report::new("color", Some(info), result, started, EXIT_REFUSED))
        }
    }
}

pub fn cmd_cwd(path: &Path, format: Option<GraphFormat>) -> Result<Report> {
    let started = Instant::now();
    let (g, info) = load(path, format)?;
    match expr_for_class_graph(&g)? {
        CwdOutcome::Expression(e) => {
            let lg = eval(&e)?;
            let result = json!({
                "width": e.width(),
                "expression": e.to_string(),
                "round_trip": lg.ids_are_positional() && lg.graph == g,
            });
            Ok(Report::new("cwd", Some(info), result, started, EXIT_OK))
        }
        CwdOutcome::Refused(r) => {
            let result = json!({ "refused": r });
            Ok(Report::new("cwd", Some(info), result, started, EXIT_REFUSED))
        }
    }
}

/// Writes `<kind>-<seed>.<ext>` and `<kind>-<seed>.cert.json` into `out`
/// for each seed.
pub fn cmd_generate(kind: GenKind, params: &GenParams, count: u64, out: &Path, format: GraphFormat) -> Result<Report> {
    let started = Instant::now();
    std::fs::create_dir_all(out)?;
    let name = match kind {
        GenKind::Special => "special",
        GenKind::Saucer => "saucer",
        GenKind::Tent => "tent",
    };
    let ext = match format {
        GraphFormat::DimacsCol => "col",
        GraphFormat::EdgeJson => "json",
    };
    let mut files = Vec::new();
    for k in 0..count {
        let p = GenParams {
            seed: params.seed.wrapping_add(k),
            ..params.clone()
        };
        let (g, base, partition, parts) = match kind {
            GenKind::Special => {
                let o = gen_special(&p)?;
                let saucer = SaucerPartition {
                    special: o.partition.clone(),
                    a: Vec::new(),
                    a_components: Vec::new(),
                };
                (o.graph, o.base, json!(o.partition), saucer_parts(&saucer))
            }
            GenKind::Saucer => {
                let o = gen_saucer(&p)?;
                let parts = saucer_parts(&o.partition);
                (o.graph, o.base, json!(o.partition), parts)
            }
            GenKind::Tent => {
                let o = gen_tent(&p)?;
                let parts = tent_parts(&o.partition);
                (o.graph, o.base, json!(o.partition), parts)
            }
        };
        let stem = format!("{name}-{}", p.seed);
        let graph_path = out.join(format!("{stem}.{ext}"));
        let cert_path = out.join(format!("{stem}.cert.json"));
        std::fs::write(&graph_path, write_graph(&g, format))?;
        let cert = json!({
            "schema": SCHEMA_VERSION,
            "kind": kind,
            "params": p,
            "base": base,
            "n": g.n(),
            "parts": parts_json(&parts),
            "partition": partition,
        });
        std::fs::write(&cert_path, serde_json::to_string_pretty(&cert)? + "\n")?;
        files.push(json!({
            "graph": graph_path.display().to_string(),
            "certificate": cert_path.display().to_string(),
            "n": g.n(),
        }));
    }
    Ok(Report::new("generate", None, json!({ "files": files }), started, EXIT_OK))
}

#[derive(Clone, Debug, Default)]
pub struct OracleQuery {
    pub patterns: Vec<String>,
    pub holes: bool,
    pub chi: bool,
    pub verdict: bool,
    pub cutset: bool,
}

pub fn cmd_oracle(path: &Path, format: Option<GraphFormat>, query: &OracleQuery) -> Result<Report> {
    let started = Instant::now();
    let (g, info) = load(path, format)?;
    let mut q = query.clone();
    if q.patterns.is_empty() && !q.holes && !q.chi && !q.cutset {
        q.verdict = true;
    }
    let mut result = json!({});
    if !q.patterns.is_empty() {
        check_cap("pattern search", VERDICT_LIMIT, g.n())?;
        let mut found = BTreeMap::new();
        for name in &q.patterns {
            let pattern = pattern_by_name(name)?;
            found.insert(pattern.name.clone(), oracle::find_induced(&g, &pattern)?);
        }
        result["patterns"] = json!(found);
    }
    if q.holes {
        check_cap("hole lengths", oracle::HOLE_LIMIT, g.n())?;
        result["hole_lengths"] = json!(oracle::all_hole_lengths(&g)?);
    }
    if q.chi {
        check_cap("chromatic number", oracle::CHROMATIC_LIMIT, g.n())?;
        let (k, colors) = oracle::chromatic_number_bf(&g)?;
        result["chromatic_number"] = json!(k);
        result["coloring"] = json!(colors);
    }
    if q.cutset {
        check_cap("clique cutset", oracle::CUTSET_LIMIT, g.n())?;
        result["clique_cutset"] = json!(oracle::clique_cutset_bf(&g)?.map(|s| s.to_vec()));
    }
    if q.verdict {
        check_cap("class verdict", VERDICT_LIMIT, g.n())?;
        let v = oracle::class_verdict(&g)?;
        result["in_class"] = json!(v.in_class());
        result["verdict"] = json!(v);
    }
    Ok(Report::new("oracle", Some(info), result, started, EXIT_OK))
}

fn pattern_by_name(name: &str) -> Result<catalog::NamedGraph> {
    fixed_graph(name).ok_or_else(|| {
        let known: Vec<String> = catalog::fixed_graphs().into_iter().map(|g| g.name).collect();
        Error::InvalidArgument(format!("unknown pattern `{name}`; known: {}", known.join(", ")))
    })
}

/// Runs `f` over `files` on `jobs` workers, keeping input order.
fn fan_out<F>(files: &[PathBuf], jobs: usize, f: F) -> Vec<(PathBuf, Result<Report>)>
where
    F: Fn(&Path) -> Result<Report> + Sync,
{
    let run = || files.par_iter().map(|p| (p.clone(), f(p))).collect();
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => files.iter().map(|p| (p.clone(), f(p))).collect(),
    }
}

fn dot_path(dot: &Path, input: &Path, many: bool) -> PathBuf {
    if many {
        let stem = input.file_stem().map_or_else(|| "graph".into(), |s| s.to_os_string());
        let mut name = stem;
        name.push(".dot");
        dot.join(name)
    } else {
        dot.to_path_buf()
    }
}

/// Parses `args` (including the program name), runs the command, writes
/// reports to `out` and errors to `err`, and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let format = cli.input_format.map(GraphFormat::from);
    let results: Vec<(PathBuf, Result<Report>)> = match &cli.command {
        Command::Recognize {
            files,
            oracle_crosscheck,
            dot,
        } => {
            let many = files.len() > 1;
            if let (Some(d), true) = (dot, many) {
                if let Err(e) = std::fs::create_dir_all(d) {
                    let _ = writeln!(err, "error: {}: {e}", d.display());
                    return EXIT_INPUT;
                }
            }
            fan_out(files, cli.jobs, |p| {
                let target = dot.as_deref().map(|d| dot_path(d, p, many));
                cmd_recognize(p, format, *oracle_crosscheck, target.as_deref())
            })
        }
        Command::Color { files, crosscheck } => fan_out(files, cli.jobs, |p| cmd_color(p, format, *crosscheck)),
        Command::Cwd { files } => fan_out(files, cli.jobs, |p| cmd_cwd(p, format)),
        Command::Generate {
            kind,
            seed,
            count,
            out: dir,
            format: file_format,
            max_class_size,
            max_vertices,
            p_nonempty,
            base,
            simplicial_free,
        } => {
            let params = GenParams {
                seed: *seed,
                max_class_size: *max_class_size,
                max_vertices: *max_vertices,
                p_nonempty: *p_nonempty,
                base: base.clone(),
                simplicial_free: *simplicial_free,
                ..GenParams::default()
            };
            vec![(
                dir.clone(),
                cmd_generate((*kind).into(), &params, *count, dir, (*file_format).into()),
            )]
        }
        Command::Oracle {
            file,
            pattern,
            holes,
            chi,
            verdict,
            cutset,
        } => {
            let q = OracleQuery {
                patterns: pattern.clone(),
                holes: *holes,
                chi: *chi,
                verdict: *verdict,
                cutset: *cutset,
            };
            vec![(file.clone(), cmd_oracle(file, format, &q))]
        }
    };
    let mut code = EXIT_OK;
    for (path, r) in results {
        match r {
            Ok(report) => {
                let _ = writeln!(out, "{}", report.to_json());
                code = code.max(report.exit_code);
            }
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                code = code.max(exit_code_for(&e));
            }
        }
    }
    code
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
