//! Command-line frontend for `dsrg-core`.
//!
//! Subcommands: `verify`, `export`, `feasible`, `classify`, `bruteforce`,
//! `spectrum`, `construct`. Exit codes follow one contract everywhere:
//! `0` = accepted/complete, `1` = legitimate negative (not a DSRG, failed
//! construction conditions, empty enumeration), `2` = usage error.
//!
//! All output is deterministic: enumerations are canonically sorted no
//! matter how many worker threads (`--threads`) carved up the search space,
//! and identical invocations produce byte-identical bytes.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dsrg_core::catalog::{self, ClassificationEntry};
use dsrg_core::error::Error;
use dsrg_core::multiset::ResidueMultiset;
use dsrg_core::spectrum::{self, SpectrumTable};
use dsrg_core::verify::{self, DsrgParams};
use dsrg_core::DihedrantSpec;

mod output;
mod threads;

pub use output::{adjacency_json, dot_graph};

#[derive(Parser)]
#[command(
    name = "dsrg",
    version,
    about = "Construct, verify and classify directed strongly regular Cayley graphs on dihedral groups"
)]
struct Cli {
    /// Worker threads for enumeration sweeps (output is identical for any value)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Dih(n, X, Y) is a directed strongly regular graph
    Verify(VerifyArgs),
    /// Export a dihedrant as a DOT digraph or a JSON adjacency list
    Export(ExportArgs),
    /// List arithmetically feasible genuine parameter tuples on N vertices
    Feasible(FeasibleArgs),
    /// Classify every X with Dih(n, X, X) a genuine DSRG
    Classify(ClassifyArgs),
    /// Exhaustive matrix-oracle search over all connection sets
    Bruteforce(BruteforceArgs),
    /// Fourier spectrum of a residue multiset, with integer snapping
    Spectrum(SpectrumArgs),
    /// Run one of the named construction families or theorem checks
    Construct(ConstructArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Cyclic order n (the graph has 2n vertices)
    #[arg(long)]
    n: usize,
    /// Rotation exponents, comma separated (e.g. "1,2"); no 0
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    x: String,
    /// Reflection exponents, comma separated; 0 is allowed
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    y: String,
    /// Emit the certificate as JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    x: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    y: String,
    #[arg(long, value_enum)]
    format: ExportFormat,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct FeasibleArgs {
    /// Vertex count N
    #[arg(long)]
    vertices: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BruteforceArgs {
    #[arg(long)]
    n: usize,
    /// Sweep all reflection sets Y as well (default keeps Y = X)
    #[arg(long)]
    general_y: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    n: usize,
    /// Residue multiset, repeats allowed (e.g. "1,2,2,3")
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    set: String,
    /// Emit JSON ({"n", "counts", "values"}) instead of CSV
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    which: ConstructCommand,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Odd-divisor coset family: X = T<x^v> with a pair transversal T
    C51 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        json: bool,
    },
    /// Even-divisor coset family: X = T'<x^2v> with v in T'
    C52 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        tprime: String,
        #[arg(long)]
        json: bool,
    },
    /// Odd-n two-set family check (exact group-ring conditions)
    T11 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        y: String,
        /// Epsilon parameter, 0 or 1
        #[arg(long, default_value_t = 0)]
        eps: i64,
        /// Empirical comparison only: replace Y by Y + B before checking
        #[arg(long, default_value_t = 0)]
        b_shift: i64,
        #[arg(long)]
        json: bool,
    },
    /// Even-n family check: conditions plus oracle-vs-printed-parameters report
    T13 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        y: String,
        /// Empirical comparison only: replace Y by Y + B before checking
        #[arg(long, default_value_t = 0)]
        b_shift: i64,
        #[arg(long)]
        json: bool,
    },
}

/// Parse "1,2,2,3" (empty string = empty list).
fn parse_residues(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<i64>().map_err(|_| format!("bad residue '{tok}'")))
        .collect()
}

/// Snapping tolerance: `DSRG_TOLERANCE` env override, else `10⁻⁶·n`.
fn tolerance_for(n: usize) -> f64 {
    match std::env::var("DSRG_TOLERANCE") {
        Ok(s) => s.parse().unwrap_or_else(|_| spectrum::default_tolerance(n)),
        Err(_) => spectrum::default_tolerance(n),
    }
}

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_USAGE: i32 = 2;

/// Classify an error as usage (malformed input) vs legitimate negative
/// (well-formed input failing a mathematical condition).
fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::TransversalViolation { .. }
        | Error::ConditionFailed { .. }
        | Error::OracleMismatch
        | Error::NoCaseMatched => EXIT_NEGATIVE,
        _ => EXIT_USAGE,
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Export(a) => cmd_export(a),
        Command::Feasible(a) => cmd_feasible(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Bruteforce(a) => cmd_bruteforce(a, threads),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Construct(a) => cmd_construct(a),
    }
}

#[derive(Serialize)]
struct ParamsJson {
    #[serde(rename = "N")]
    n: i64,
    k: i64,
    mu: i64,
    lambda: i64,
    t: i64,
}

impl From<&DsrgParams> for ParamsJson {
    fn from(p: &DsrgParams) -> Self {
        ParamsJson { n: p.vertices, k: p.k, mu: p.mu, lambda: p.lambda, t: p.t }
    }
}

#[derive(Serialize)]
struct EigenJson {
    d: i64,
    rho: i64,
    sigma: i64,
    m_rho: i64,
    m_sigma: i64,
}

#[derive(Serialize)]
struct VotesJson {
    matrix: bool,
    group_ring: bool,
    spectral: bool,
}

#[derive(Serialize)]
struct ClassificationJson {
    case: String,
    v: usize,
    #[serde(rename = "T")]
    t_set: Vec<usize>,
}

#[derive(Serialize)]
struct CertificateJson {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    params: ParamsJson,
    genuine: bool,
    eigen: Option<EigenJson>,
    verifier_votes: VotesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<ClassificationJson>,
}

fn build_spec(n: usize, x: &str, y: &str) -> Result<DihedrantSpec, String> {
    let x = parse_residues(x)?;
    let y = parse_residues(y)?;
    DihedrantSpec::new(n, &x, &y).map_err(|e| e.to_string())
}

fn cmd_verify(a: VerifyArgs) -> i32 {
    let spec = match build_spec(a.n, &a.x, &a.y) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let by_matrix = verify::verify_matrix(&spec);
    let by_ring = verify::verify_group_ring(&spec);
    let params = match (by_matrix, by_ring) {
        (Ok(p), Ok(q)) if p == q => p,
        (Err(w), Err(_)) => {
            eprintln!("{spec}: not a DSRG: {w}");
            return EXIT_NEGATIVE;
        }
        (m, g) => {
            // the exact verifiers are equivalent; disagreement is a bug
            eprintln!("internal error: verifier disagreement {m:?} vs {g:?}");
            return EXIT_NEGATIVE;
        }
    };
    let spectral = verify::verify_spectral(&spec, &params, tolerance_for(spec.n()));
    let eigen = verify::eigen_data(&params).ok();
    let classification = if spec.x() == spec.y() {
        catalog::structure_report(spec.n(), spec.x(), &params).ok()
    } else {
        None
    };
    let cert = CertificateJson {
        n: spec.n(),
        x: spec.x().to_vec(),
        y: spec.y().to_vec(),
        params: ParamsJson::from(&params),
        genuine: params.is_genuine(),
        eigen: eigen
            .map(|e| EigenJson { d: e.d, rho: e.rho, sigma: e.sigma, m_rho: e.m_rho, m_sigma: e.m_sigma }),
        verifier_votes: VotesJson { matrix: true, group_ring: true, spectral: spectral.ok },
        classification: classification.as_ref().map(|c| ClassificationJson {
            case: c.case.to_string(),
            v: c.v,
            t_set: c.t_set.clone(),
        }),
    };
    if a.json {
        println!("{}", serde_json::to_string(&cert).expect("serializable"));
    } else {
        let tag = if params.is_genuine() { "genuine DSRG" } else { "DSRG (not genuine)" };
        println!("{spec}: {tag} with parameters {params}");
        match &cert.eigen {
            Some(e) => println!(
                "eigenvalues: k={} rho={} sigma={} multiplicities 1/{}/{}",
                params.k, e.rho, e.sigma, e.m_rho, e.m_sigma
            ),
            None => println!("eigenvalues: not integral"),
        }
        if let Some(c) = &classification {
            println!("classification: case ({}) v={} T={}", c.case, c.v, output::join(&c.t_set));
        }
        println!(
            "verifier votes: matrix=yes group-ring=yes spectral={}",
            if spectral.ok { "yes" } else { "no" }
        );
    }
    if params.is_genuine() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_export(a: ExportArgs) -> i32 {
    let spec = match build_spec(a.n, &a.x, &a.y) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let body = match a.format {
        ExportFormat::Dot => output::dot_graph(&spec),
        ExportFormat::Json => output::adjacency_json(&spec),
    };
    match a.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes()).expect("stdout");
        }
    }
    EXIT_OK
}

fn cmd_feasible(a: FeasibleArgs) -> i32 {
    if a.vertices < 2 {
        eprintln!("error: need at least 2 vertices");
        return EXIT_USAGE;
    }
    let list = verify::feasible_params(a.vertices);
    if a.json {
        let rows: Vec<ParamsJson> = list.iter().map(ParamsJson::from).collect();
        println!("{}", serde_json::to_string(&rows).expect("serializable"));
    } else {
        let mut out = String::new();
        for p in &list {
            out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", p.vertices, p.k, p.mu, p.lambda, p.t));
        }
        print!("{out}");
    }
    if list.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

#[derive(Serialize)]
struct EntryJson {
    case: String,
    n: usize,
    v: usize,
    #[serde(rename = "T")]
    t_set: Vec<usize>,
    #[serde(rename = "X")]
    x: Vec<usize>,
    params: ParamsJson,
}

impl From<&ClassificationEntry> for EntryJson {
    fn from(e: &ClassificationEntry) -> Self {
        EntryJson {
            case: e.case.to_string(),
            n: e.n,
            v: e.v,
            t_set: e.t_set.clone(),
            x: e.x.clone(),
            params: ParamsJson::from(&e.params),
        }
    }
}

fn entry_tsv(e: &ClassificationEntry) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
        e.case,
        e.n,
        e.v,
        output::join(&e.t_set),
        output::join(&e.x),
        e.params.vertices,
        e.params.k,
        e.params.mu,
        e.params.lambda,
        e.params.t
    )
}

fn print_entries(entries: &[ClassificationEntry], json: bool) -> i32 {
    if json {
        let rows: Vec<EntryJson> = entries.iter().map(EntryJson::from).collect();
        println!("{}", serde_json::to_string(&rows).expect("serializable"));
    } else {
        let mut out = String::new();
        for e in entries {
            out.push_str(&entry_tsv(e));
        }
        print!("{out}");
    }
    if entries.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

fn cmd_classify(a: ClassifyArgs) -> i32 {
    if a.n < 3 {
        eprintln!("error: classification needs n >= 3");
        return EXIT_USAGE;
    }
    print_entries(&catalog::classify_xx(a.n), a.json)
}

#[derive(Serialize)]
struct BruteRowJson {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "Y")]
    y: Option<Vec<usize>>,
    params: ParamsJson,
}

fn cmd_bruteforce(a: BruteforceArgs, threads: usize) -> i32 {
    let n = a.n;
    let (rows, json_rows) = if a.general_y {
        if !(3..=8).contains(&n) {
            eprintln!("error: --general-y sweep supports 3 <= n <= 8");
            return EXIT_USAGE;
        }
        let total = 1u64 << (n - 1);
        let mut found =
            threads::run_chunks(total, threads, |lo, hi| catalog::brute_force_xy_range(n, lo, hi));
        found.sort_by(|a, b| {
            (a.0.len(), &a.0, a.1.len(), &a.1).cmp(&(b.0.len(), &b.0, b.1.len(), &b.1))
        });
        let mut out = String::new();
        let mut json_rows = Vec::new();
        for (x, y, p) in &found {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                n,
                output::join(x),
                output::join(y),
                p.vertices,
                p.k,
                p.mu,
                p.lambda,
                p.t
            ));
            json_rows.push(BruteRowJson {
                n,
                x: x.clone(),
                y: Some(y.clone()),
                params: ParamsJson::from(p),
            });
        }
        (out, json_rows)
    } else {
        if !(3..=16).contains(&n) {
            eprintln!("error: sweep supports 3 <= n <= 16");
            return EXIT_USAGE;
        }
        let total = 1u64 << (n - 1);
        let mut found =
            threads::run_chunks(total, threads, |lo, hi| catalog::brute_force_xx_range(n, lo, hi));
        found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        let mut out = String::new();
        let mut json_rows = Vec::new();
        for (x, p) in &found {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                n,
                output::join(x),
                p.vertices,
                p.k,
                p.mu,
                p.lambda,
                p.t
            ));
            json_rows.push(BruteRowJson { n, x: x.clone(), y: None, params: ParamsJson::from(p) });
        }
        (out, json_rows)
    };
    if a.json {
        println!("{}", serde_json::to_string(&json_rows).expect("serializable"));
    } else {
        print!("{rows}");
    }
    if json_rows.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

#[derive(Serialize)]
struct T11Json {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    eps: i64,
    params: ParamsJson,
    genuine: bool,
}

#[derive(Serialize)]
struct T13Json {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    printed: ParamsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<ParamsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_witness: Option<String>,
    matches_printed: bool,
}

#[derive(Serialize)]
struct SpectrumRowJson {
    z: usize,
    re: f64,
    im: f64,
    snapped: Option<i64>,
}

#[derive(Serialize)]
struct SpectrumJson {
    n: usize,
    counts: Vec<u64>,
    values: Vec<SpectrumRowJson>,
}

fn cmd_spectrum(a: SpectrumArgs) -> i32 {
    if a.n == 0 {
        eprintln!("error: modulus must be positive");
        return EXIT_USAGE;
    }
    let elems = match parse_residues(&a.set) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let ms = ResidueMultiset::from_elements(a.n, &elems);
    let table = SpectrumTable::of_multiset(&ms, tolerance_for(a.n));
    if a.json {
        let doc = SpectrumJson {
            n: a.n,
            counts: ms.counts().to_vec(),
            values: (0..a.n)
                .map(|z| SpectrumRowJson {
                    z,
                    re: table.value(z).re,
                    im: table.value(z).im,
                    snapped: table.snapped(z),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&doc).expect("serializable"));
    } else {
        let mut out = String::from("z,re,im,snapped\n");
        for z in 0..a.n {
            let v = table.value(z);
            let snapped = match table.snapped(z) {
                Some(s) => s.to_string(),
                None => String::new(),
            };
            out.push_str(&format!("{z},{:.12},{:.12},{snapped}\n", v.re, v.im));
        }
        print!("{out}");
    }
    EXIT_OK
}

fn cmd_construct(a: ConstructArgs) -> i32 {
    match a.which {
        ConstructCommand::C51 { n, v, t, json } => {
            let t = match parse_residues(&t) {
                Ok(t) => t.iter().map(|&e| e as usize).collect::<Vec<_>>(),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            match catalog::gen_c51(n, v, &t) {
                Ok(entry) => print_entries(&[entry], json),
                Err(e) => {
                    eprintln!("construction rejected: {e}");
                    exit_code_for(&e)
                }
            }
        }
        ConstructCommand::C52 { n, v, tprime, json } => {
            let t = match parse_residues(&tprime) {
                Ok(t) => t.iter().map(|&e| e as usize).collect::<Vec<_>>(),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            match catalog::gen_c52(n, v, &t) {
                Ok(entry) => print_entries(&[entry], json),
                Err(e) => {
                    eprintln!("construction rejected: {e}");
                    exit_code_for(&e)
                }
            }
        }
        ConstructCommand::T11 { n, x, y, eps, b_shift, json } => {
            let (x, y) = match (parse_residues(&x), parse_residues(&y)) {
                (Ok(x), Ok(y)) => (x, y),
                _ => {
                    eprintln!("error: bad residue list");
                    return EXIT_USAGE;
                }
            };
            let y: Vec<i64> = y.iter().map(|&r| r + b_shift).collect();
            match catalog::check_t11(n, &x, &y, eps) {
                Ok((spec, params)) => {
                    if json {
                        let doc = T11Json {
                            n,
                            x: spec.x().to_vec(),
                            y: spec.y().to_vec(),
                            eps,
                            params: ParamsJson::from(&params),
                            genuine: params.is_genuine(),
                        };
                        println!("{}", serde_json::to_string(&doc).expect("serializable"));
                    } else {
                        println!("{spec}: conditions hold; genuine DSRG with parameters {params}");
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("conditions fail: {e}");
                    exit_code_for(&e)
                }
            }
        }
        ConstructCommand::T13 { n, x, y, b_shift, json } => {
            let (x, y) = match (parse_residues(&x), parse_residues(&y)) {
                (Ok(x), Ok(y)) => (x, y),
                _ => {
                    eprintln!("error: bad residue list");
                    return EXIT_USAGE;
                }
            };
            let y: Vec<i64> = y.iter().map(|&r| r + b_shift).collect();
            match catalog::check_t13(n, &x, &y) {
                Ok(report) => {
                    if json {
                        let doc = T13Json {
                            n,
                            x: report.spec.x().to_vec(),
                            y: report.spec.y().to_vec(),
                            printed: ParamsJson::from(&report.printed),
                            oracle: report.oracle.as_ref().ok().map(ParamsJson::from),
                            oracle_witness: report.oracle.as_ref().err().map(|w| w.to_string()),
                            matches_printed: report.matches_printed,
                        };
                        println!("{}", serde_json::to_string(&doc).expect("serializable"));
                    } else {
                        println!("{}: conditions hold", report.spec);
                        println!("printed parameters: {}", report.printed);
                        match &report.oracle {
                            Ok(p) => println!("oracle verdict: DSRG with parameters {p}"),
                            Err(w) => println!("oracle verdict: not a DSRG ({w})"),
                        }
                        println!(
                            "oracle matches printed parameters: {}",
                            if report.matches_printed { "yes" } else { "no" }
                        );
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("conditions fail: {e}");
                    exit_code_for(&e)
                }
            }
        }
    }
}

