//! Command line drivers.
//!
//! Thin orchestration over the library: each subcommand builds its objects,
//! prints a human-readable report to stdout and maps the outcome onto a
//! stable exit code.  All mathematics lives in the other modules.
//!
//! Exit codes:
//!
//! * 0 — success; every requested check passed
//! * 1 — a requested comparison or verification failed (homology mismatch,
//!   order fails the shelling criterion, …)
//! * 2 — a resource or parameter bound was hit (subspace cap, field order
//!   above the command line limit, bad flag values)
//! * 3 — an axiom suite rejected the input, or a rank table was
//!   semantically malformed (incomplete, duplicated, out of range)
//! * 4 — an input file could not be parsed

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::gf::FieldSpec;
use crate::homology::{
    euler_check, expected_sphere_homology, order_complex, reduced_homology, HomologyReport,
};
use crate::io::{load_complex, load_rank_oracle, parse_subspace_list, IoError};
use crate::lattice::{LatticeError, SubspaceLattice, DEFAULT_MAX_SUBSPACES};
use crate::linalg::{Subspace, Vector};
use crate::order::vector_compare;
use crate::qcomplex::{
    acyclicity_hypothesis, is_shelling, pivot_first_order, shelling_via_order, sphere_link_check,
    verify_interval_partition, ComplexError, ConeApex, QComplex, ShellingOrder,
};
use crate::qmatroid::{
    dual_basis_exchange, verify_basis_axioms, verify_independence_axioms, BasisAxiomReport,
    IndependenceReport, MatroidError, RankAxiomReport, RankOracle,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_AXIOM: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

/// Largest field order accepted from the command line.  Enumeration cost
/// grows so fast in q that anything beyond this is better driven through
/// the library directly.
pub const MAX_CLI_FIELD_ORDER: u64 = 9;

/// A failed run: the message goes to stderr, the code to the shell.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn resource(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_RESOURCE, message: message.into() }
    }

    fn parse(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_PARSE, message: message.into() }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Failure {
        Failure { code: EXIT_RESOURCE, message: e.to_string() }
    }
}

impl From<ComplexError> for Failure {
    fn from(e: ComplexError) -> Failure {
        let code = match &e {
            ComplexError::Lattice(LatticeError::TooManySubspaces { .. }) => EXIT_RESOURCE,
            ComplexError::ZeroPivot => EXIT_RESOURCE,
            _ => EXIT_MISMATCH,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<MatroidError> for Failure {
    fn from(e: MatroidError) -> Failure {
        let code = match &e {
            MatroidError::Lattice(LatticeError::TooManySubspaces { .. }) => EXIT_RESOURCE,
            MatroidError::InvalidUniformRank { .. } => EXIT_RESOURCE,
            MatroidError::AxiomFailure { .. }
            | MatroidError::NoExchangeWitness
            | MatroidError::ExchangeCheckFailed
            | MatroidError::RankTooLarge { .. }
            | MatroidError::IncompleteTable { .. }
            | MatroidError::DuplicateTableEntry { .. } => EXIT_AXIOM,
            _ => EXIT_MISMATCH,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        let code = match &e {
            IoError::Lattice(LatticeError::TooManySubspaces { .. }) => EXIT_RESOURCE,
            IoError::Complex(ComplexError::Lattice(LatticeError::TooManySubspaces { .. })) => {
                EXIT_RESOURCE
            }
            IoError::Matroid(MatroidError::Lattice(LatticeError::TooManySubspaces { .. })) => {
                EXIT_RESOURCE
            }
            IoError::Matroid(_) => EXIT_AXIOM,
            _ => EXIT_PARSE,
        };
        Failure { code, message: e.to_string() }
    }
}

#[derive(Parser)]
#[command(
    name = "qshell",
    version,
    about = "Shelling orders and integral homology for q-complexes over finite fields"
)]
struct Cli {
    /// Refuse to enumerate more subspaces than this (also via the
    /// QSHELL_MAX_SUBSPACES environment variable; the flag wins)
    #[arg(long, global = true, value_name = "N")]
    max_subspaces: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the punctured q-sphere's homology against the closed form
    SphereHomology {
        /// Ambient dimension
        #[arg(long)]
        n: usize,
        /// Field order (a prime power)
        #[arg(long)]
        q: u64,
        /// Write a JSON report to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Run the full shelling pipeline on a q-matroid's independence complex
    MatroidShell {
        #[command(flatten)]
        source: MatroidSource,
        /// Additionally test this many uniformly shuffled facet orders
        #[arg(long, value_name = "COUNT", default_value_t = 0)]
        random_orders: usize,
        /// Seed for the shuffles
        #[arg(long, default_value_t = 90125)]
        seed: u64,
    },
    /// Check a family or rank table against the q-matroid axiom suites
    Verify {
        #[command(flatten)]
        target: VerifyTarget,
    },
    /// Survey pivot-first orders of a complex: shelling, restriction sets,
    /// cone detection and sphere links (reports only, no exit-code verdict)
    ExploreLinks {
        /// Complex file: a subspace list of faces (closed downward on load)
        #[arg(long, value_name = "PATH")]
        from_file: PathBuf,
        /// Pivot vector, comma-separated entries; defaults to the least
        /// nonzero vector of the least facet
        #[arg(long, value_name = "V1,V2,...")]
        pivot: Option<String>,
    },
    /// Reduced homology of a punctured complex
    Homology {
        #[command(flatten)]
        source: ComplexSource,
        /// Write a JSON report to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatroidSource {
    /// Uniform q-matroid U_q(K, N), given as three integers K N Q
    #[arg(long, num_args = 3, value_names = ["K", "N", "Q"])]
    uniform: Option<Vec<u64>>,
    /// Rank table file covering every subspace of the ambient space
    #[arg(long, value_name = "PATH")]
    rank_table: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifyTarget {
    /// Subspace list to check against the independence axioms
    #[arg(long, value_name = "PATH")]
    independents: Option<PathBuf>,
    /// Subspace list to check against the basis axioms
    #[arg(long, value_name = "PATH")]
    bases: Option<PathBuf>,
    /// Rank table to check against the rank axioms plus the dual exchange
    /// sweep over all valid (B1, B2, y) triples
    #[arg(long, value_name = "PATH")]
    rank_table: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ComplexSource {
    /// The q-sphere: all proper subspaces of F_Q^N, given as N Q
    #[arg(long, num_args = 2, value_names = ["N", "Q"])]
    sphere: Option<Vec<u64>>,
    /// Independence complex of the uniform q-matroid U_Q(K, N), as K N Q
    #[arg(long, num_args = 3, value_names = ["K", "N", "Q"])]
    uniform: Option<Vec<u64>>,
    /// Complex file: a subspace list of faces (closed downward on load)
    #[arg(long, value_name = "PATH")]
    from_file: Option<PathBuf>,
}

/// Parses the process arguments, runs the selected command and returns the
/// exit code; the binary is just `std::process::exit(run())`.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let cap = match resolve_cap(cli.max_subspaces) {
        Ok(cap) => cap,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return f.code;
        }
    };
    let outcome = match cli.command {
        Command::SphereHomology { n, q, json } => cmd_sphere_homology(n, q, json.as_deref(), cap),
        Command::MatroidShell { source, random_orders, seed } => {
            cmd_matroid_shell(&source, random_orders, seed, cap)
        }
        Command::Verify { target } => cmd_verify(&target, cap),
        Command::ExploreLinks { from_file, pivot } => {
            cmd_explore_links(&from_file, pivot.as_deref(), cap)
        }
        Command::Homology { source, json } => cmd_homology(&source, json.as_deref(), cap),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("QSHELL_MAX_SUBSPACES") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::resource(format!(
                "QSHELL_MAX_SUBSPACES must be a nonnegative integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_SUBSPACES),
    }
}

fn checked_field(q: u64) -> Result<Arc<FieldSpec>, Failure> {
    if q > MAX_CLI_FIELD_ORDER {
        return Err(Failure::resource(format!(
            "field order {q} exceeds the command line cap of {MAX_CLI_FIELD_ORDER}"
        )));
    }
    FieldSpec::from_order(q).map_err(|e| Failure::resource(e.to_string()))
}

fn checked_lattice(q: u64, n: usize, cap: usize) -> Result<Arc<SubspaceLattice>, Failure> {
    if n == 0 {
        return Err(Failure::resource("the ambient dimension must be at least 1"));
    }
    let spec = checked_field(q)?;
    Ok(SubspaceLattice::with_cap(&spec, n, cap)?)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn enforce_file_q(q: u64) -> Result<(), Failure> {
    if q > MAX_CLI_FIELD_ORDER {
        return Err(Failure::resource(format!(
            "the file's field order {q} exceeds the command line cap of {MAX_CLI_FIELD_ORDER}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// JSON reports

#[derive(Serialize)]
struct JsonDegree {
    p: i64,
    betti: u64,
    torsion: Vec<u64>,
}

#[derive(Serialize)]
struct JsonReport {
    q: u64,
    n: u64,
    complex: String,
    degrees: Vec<JsonDegree>,
    euler_ok: bool,
    version: String,
    params: BTreeMap<String, u64>,
}

fn json_report(
    q: u64,
    n: usize,
    complex: &str,
    report: &HomologyReport,
    euler_ok: bool,
    params: &[(&str, u64)],
) -> JsonReport {
    let degrees = report
        .truncated()
        .degrees()
        .iter()
        .map(|d| JsonDegree {
            p: d.p,
            betti: d.betti,
            torsion: d
                .torsion
                .iter()
                .map(|t| t.to_u64().expect("torsion invariant exceeds u64"))
                .collect(),
        })
        .collect();
    JsonReport {
        q,
        n: n as u64,
        complex: complex.to_string(),
        degrees,
        euler_ok,
        version: env!("CARGO_PKG_VERSION").to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

fn write_json(path: &Path, report: &JsonReport) -> Result<(), Failure> {
    let mut text = serde_json::to_string(report).expect("report serialization cannot fail");
    text.push('\n');
    fs::write(path, text)
        .map_err(|e| Failure::resource(format!("cannot write {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// Shared homology plumbing

struct HomologyRun {
    report: HomologyReport,
    euler_ok: bool,
}

fn punctured_run(complex: &QComplex) -> HomologyRun {
    let poset = complex.puncture();
    let oc = order_complex(&poset);
    let report = reduced_homology(&oc);
    let euler_ok = euler_check(&oc, &report);
    HomologyRun { report, euler_ok }
}

fn print_report(report: &HomologyReport) {
    let text = report.to_string();
    if text.is_empty() {
        println!("  (no degrees: the punctured complex is empty)");
    }
    for line in text.lines() {
        println!("  {line}");
    }
}

// ---------------------------------------------------------------------------
// sphere-homology

fn cmd_sphere_homology(n: usize, q: u64, json: Option<&Path>, cap: usize) -> Result<i32, Failure> {
    let lattice = checked_lattice(q, n, cap)?;
    let sphere = QComplex::q_sphere(&lattice);
    let run = punctured_run(&sphere);
    let expected = expected_sphere_homology(n, q);
    println!("q-sphere over F_{q}^{n}: {} faces, {} facets", sphere.len(), sphere.facet_ids().len());
    println!("reduced homology of the punctured sphere:");
    print_report(&run.report);
    println!("closed form (free of rank q^(n(n-1)/2) in degree n-2):");
    print_report(&expected);
    println!("euler characteristic: {}", if run.euler_ok { "consistent" } else { "INCONSISTENT" });
    let matched = run.report.matches(&expected);
    println!("verdict: {}", if matched { "match" } else { "MISMATCH" });
    if let Some(path) = json {
        let report =
            json_report(q, n, "sphere", &run.report, run.euler_ok, &[("n", n as u64), ("q", q)]);
        write_json(path, &report)?;
    }
    Ok(if matched && run.euler_ok { EXIT_OK } else { EXIT_MISMATCH })
}

// ---------------------------------------------------------------------------
// matroid-shell

fn rank_witness(report: &RankAxiomReport) -> String {
    if let Some(a) = report.bound_violations.first() {
        return format!("(r1) at {a}");
    }
    if let Some((a, b)) = report.monotonicity_violations.first() {
        return format!("(r2) at ({a}, {b})");
    }
    if let Some((a, b)) = report.submodularity_violations.first() {
        return format!("(r3) at ({a}, {b})");
    }
    "none".to_string()
}

fn independence_witness(report: &IndependenceReport) -> String {
    if report.empty_family {
        return "(i1): the family is empty".to_string();
    }
    if let Some((a, b)) = report.closure_violations.first() {
        return format!("(i2) at ({a}, {b})");
    }
    if let Some((a, b)) = report.augmentation_violations.first() {
        return format!("(i3) at ({a}, {b})");
    }
    if let Some((a, b)) = report.maximality_violations.first() {
        return format!("(i4) at ({a}, {b})");
    }
    "none".to_string()
}

fn basis_witness(report: &BasisAxiomReport) -> String {
    if report.empty_family {
        return "(b1): the family is empty".to_string();
    }
    if let Some((a, b)) = report.containment_violations.first() {
        return format!("(b2) at ({a}, {b})");
    }
    if let Some((a, b, c)) = report.exchange_violations.first() {
        return format!("(b3) at ({a}, {b}) with C = {c}");
    }
    if let Some((a, b)) = report.intersection_violations.first() {
        return format!("(b4) at ({a}, {b})");
    }
    "none".to_string()
}

fn build_oracle(source: &MatroidSource, cap: usize) -> Result<RankOracle, Failure> {
    if let Some(values) = &source.uniform {
        let (k, n, q) = (values[0] as usize, values[1] as usize, values[2]);
        let lattice = checked_lattice(q, n, cap)?;
        return Ok(RankOracle::uniform(&lattice, k)?);
    }
    let path = source.rank_table.as_ref().expect("clap enforces one source");
    let oracle = load_rank_oracle(&read_input(path)?, cap)?;
    enforce_file_q(oracle.q())?;
    Ok(oracle)
}

fn cmd_matroid_shell(
    source: &MatroidSource,
    random_orders: usize,
    seed: u64,
    cap: usize,
) -> Result<i32, Failure> {
    let oracle = build_oracle(source, cap)?;
    println!(
        "q-matroid over F_{}^{} with full rank {}",
        oracle.q(),
        oracle.ambient_dim(),
        oracle.full_rank()
    );
    let axioms = oracle.verify_rank_axioms();
    if !axioms.passed() {
        println!("rank axioms (r1)-(r3): FAIL");
        println!("{axioms}");
        println!("witness: {}", rank_witness(&axioms));
        return Ok(EXIT_AXIOM);
    }
    println!("rank axioms (r1)-(r3): pass");

    let complex = oracle.independent_spaces()?;
    let t = complex.facet_ids().len();
    println!(
        "independence complex: {} faces, {} facets of dimension {}",
        complex.len(),
        t,
        complex.dim()?
    );

    let order = shelling_via_order(&complex)?;
    let certificate = is_shelling(&complex, &order)?;
    if let Some((i, j)) = certificate.violation() {
        println!("canonical order shells: NO (no witness for the pair ({i}, {j}))");
        return Ok(EXIT_MISMATCH);
    }
    println!("canonical order shells: yes ({} witnessed pairs)", certificate.witnesses().len());

    let partition = verify_interval_partition(&complex, &order)?;
    let sizes: Vec<usize> = partition.intervals.iter().map(Vec::len).collect();
    let covered: usize = sizes.iter().sum();
    println!("interval partition: sizes {sizes:?}, {covered} faces covered");

    if t >= 2 {
        let flags = acyclicity_hypothesis(&order, t)?;
        let holds = flags.iter().filter(|b| **b).count();
        println!("acyclicity hypothesis: holds at {holds} of {} positions", flags.len());
        let mut complete = 0;
        for i in 2..=t {
            if sphere_link_check(&order, i)? {
                complete += 1;
            }
        }
        println!("sphere links: complete at {complete} of {} positions", t - 1);
    }

    if random_orders > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut facets = complex.facets();
        let mut passes = 0;
        for _ in 0..random_orders {
            facets.shuffle(&mut rng);
            let shuffled = ShellingOrder::new(complex.lattice(), &facets)?;
            if is_shelling(&complex, &shuffled)?.passed() {
                passes += 1;
            }
        }
        println!("random orders: {passes} of {random_orders} shuffles shell (seed {seed})");
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(target: &VerifyTarget, cap: usize) -> Result<i32, Failure> {
    if let Some(path) = &target.independents {
        let (spec, n, members) = parse_subspace_list(&read_input(path)?)?;
        enforce_file_q(spec.q())?;
        let lattice = SubspaceLattice::with_cap(&spec, n, cap)?;
        println!("independence family over F_{}^{}: {} member(s)", spec.q(), n, members.len());
        let report = verify_independence_axioms(&lattice, &members)?;
        println!("{report}");
        if !report.passed() {
            println!("verdict: fail — axiom {}", independence_witness(&report));
            return Ok(EXIT_AXIOM);
        }
        println!("verdict: pass");
        return Ok(EXIT_OK);
    }

    if let Some(path) = &target.bases {
        let (spec, n, members) = parse_subspace_list(&read_input(path)?)?;
        enforce_file_q(spec.q())?;
        let lattice = SubspaceLattice::with_cap(&spec, n, cap)?;
        println!("basis family over F_{}^{}: {} member(s)", spec.q(), n, members.len());
        let report = verify_basis_axioms(&lattice, &members)?;
        println!("{report}");
        if !report.passed() {
            println!("verdict: fail — axiom {}", basis_witness(&report));
            return Ok(EXIT_AXIOM);
        }
        println!("verdict: pass");
        return Ok(EXIT_OK);
    }

    let path = target.rank_table.as_ref().expect("clap enforces one target");
    let oracle = load_rank_oracle(&read_input(path)?, cap)?;
    enforce_file_q(oracle.q())?;
    println!(
        "rank table over F_{}^{}: {} entries, full rank {}",
        oracle.q(),
        oracle.ambient_dim(),
        oracle.lattice().len(),
        oracle.full_rank()
    );
    let rank_report = oracle.verify_rank_axioms();
    println!("{rank_report}");
    if !rank_report.passed() {
        println!("verdict: fail — axiom {}", rank_witness(&rank_report));
        return Ok(EXIT_AXIOM);
    }

    // The derived families must satisfy their own suites; this cross-checks
    // the implementations against each other on user input.
    let complex = oracle.independent_spaces()?;
    let ind_report = verify_independence_axioms(oracle.lattice(), &complex.faces().cloned().collect::<Vec<_>>())?;
    println!("{ind_report}");
    if !ind_report.passed() {
        println!("verdict: fail — axiom {}", independence_witness(&ind_report));
        return Ok(EXIT_AXIOM);
    }
    let bases = oracle.bases()?;
    let basis_report = verify_basis_axioms(oracle.lattice(), &bases.list())?;
    println!("{basis_report}");
    if !basis_report.passed() {
        println!("verdict: fail — axiom {}", basis_witness(&basis_report));
        return Ok(EXIT_AXIOM);
    }

    let triples = exchange_sweep(&oracle)?;
    println!("dual exchange: {triples} (B1, B2, y) triples, every witness verified");
    println!("verdict: pass");
    Ok(EXIT_OK)
}

/// Runs the dual exchange over every valid (B1, B2, y) triple; the library
/// re-verifies each witness internally, so merely completing is the check.
fn exchange_sweep(oracle: &RankOracle) -> Result<u64, Failure> {
    let bases = oracle.bases()?;
    let list = bases.list();
    let mut triples = 0u64;
    for b1 in &list {
        for b2 in &list {
            if b1 == b2 {
                continue;
            }
            for y in b2.vectors() {
                if y.is_zero() || b1.contains(&y).expect("vectors share the ambient field") {
                    continue;
                }
                dual_basis_exchange(oracle, b1, b2, &y)?;
                triples += 1;
            }
        }
    }
    Ok(triples)
}

// ---------------------------------------------------------------------------
// explore-links

fn parse_pivot(text: &str, lattice: &Arc<SubspaceLattice>) -> Result<Vector, Failure> {
    let entries = text
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<Vec<u64>, _>>()
        .map_err(|_| Failure::parse(format!("cannot parse pivot {text:?}")))?;
    if entries.len() != lattice.ambient_dim() {
        return Err(Failure::parse(format!(
            "pivot has {} entries, the ambient space needs {}",
            entries.len(),
            lattice.ambient_dim()
        )));
    }
    Vector::new(lattice.spec(), &entries).map_err(|e| Failure::parse(e.to_string()))
}

fn least_nonzero_vector(space: &Subspace) -> Vector {
    space
        .vectors()
        .filter(|v| !v.is_zero())
        .min_by(|a, b| vector_compare(a, b).expect("vectors share the ambient field"))
        .expect("a positive-dimensional subspace has a nonzero vector")
}

fn cmd_explore_links(from_file: &Path, pivot: Option<&str>, cap: usize) -> Result<i32, Failure> {
    let (complex, closure_added) = load_complex(&read_input(from_file)?, cap)?;
    enforce_file_q(complex.q())?;
    println!(
        "complex over F_{}^{}: {} faces, {} facets",
        complex.q(),
        complex.ambient_dim(),
        complex.len(),
        complex.facet_ids().len()
    );
    if closure_added {
        println!("note: the input was not downward closed; missing faces were added");
    }
    if complex.is_empty() {
        println!("the complex is empty; nothing to explore");
        return Ok(EXIT_OK);
    }
    if !complex.is_pure() {
        println!("the complex is not pure; pivot-first orders need equidimensional facets");
        return Ok(EXIT_OK);
    }
    if complex.dim()? == 0 {
        println!("the complex is the zero subspace alone; it is trivially a cone");
        return Ok(EXIT_OK);
    }

    let pivot = match pivot {
        Some(text) => parse_pivot(text, complex.lattice())?,
        None => least_nonzero_vector(&complex.facets()[0]),
    };
    let (order, ell) = pivot_first_order(&complex, &pivot)?;
    let t = order.len();
    println!("pivot {pivot}: contained in {ell} of {t} facets (l = {ell})");

    let certificate = is_shelling(&complex, &order)?;
    match certificate.violation() {
        None => println!("pivot-first order shells: yes"),
        Some((i, j)) => println!("pivot-first order shells: NO (no witness for the pair ({i}, {j}))"),
    }

    if ell >= 2 {
        let flags = acyclicity_hypothesis(&order, ell)?;
        let holds = flags.iter().filter(|b| **b).count();
        println!(
            "acyclicity hypothesis for i = 2..{ell}: holds at {holds} of {} positions",
            flags.len()
        );
    } else {
        println!("acyclicity hypothesis for i = 2..{ell}: nothing to check");
    }

    if ell >= 1 {
        let prefix = order.prefix_complex(ell)?;
        match prefix.punctured_cone_apex()? {
            ConeApex::Cone { apex } => {
                println!("punctured prefix at l: cone with apex {apex}");
            }
            ConeApex::CandidateWithoutHypothesis { apex } => {
                println!(
                    "punctured prefix at l: {apex} sits below every facet, but the \
                     meet-closure hypothesis fails"
                );
            }
            ConeApex::NotACone => println!("punctured prefix at l: not a cone"),
        }
    }

    let first = (ell + 1).max(2);
    if first <= t {
        let mut complete = 0;
        for i in first..=t {
            if sphere_link_check(&order, i)? {
                complete += 1;
            }
        }
        println!(
            "sphere links for i = {first}..{t}: complete at {complete} of {} positions",
            t - first + 1
        );
    } else {
        println!("sphere links: no positions beyond l to check");
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// homology

fn cmd_homology(source: &ComplexSource, json: Option<&Path>, cap: usize) -> Result<i32, Failure> {
    let (complex, label, params) = if let Some(values) = &source.sphere {
        let (n, q) = (values[0] as usize, values[1]);
        let lattice = checked_lattice(q, n, cap)?;
        let sphere = QComplex::q_sphere(&lattice);
        println!("complex: q-sphere over F_{q}^{n} ({} faces)", sphere.len());
        (sphere, "sphere", vec![("n", n as u64), ("q", q)])
    } else if let Some(values) = &source.uniform {
        let (k, n, q) = (values[0] as usize, values[1] as usize, values[2]);
        let lattice = checked_lattice(q, n, cap)?;
        let oracle = RankOracle::uniform(&lattice, k)?;
        let complex = oracle.independent_spaces()?;
        println!(
            "complex: independent spaces of U_{q}({k}, {n}) ({} faces)",
            complex.len()
        );
        (complex, "uniform", vec![("k", k as u64), ("n", n as u64), ("q", q)])
    } else {
        let path = source.from_file.as_ref().expect("clap enforces one source");
        let (complex, closure_added) = load_complex(&read_input(path)?, cap)?;
        enforce_file_q(complex.q())?;
        println!(
            "complex: from file over F_{}^{} ({} faces)",
            complex.q(),
            complex.ambient_dim(),
            complex.len()
        );
        if closure_added {
            println!("note: the input was not downward closed; missing faces were added");
        }
        let params = vec![("n", complex.ambient_dim() as u64), ("q", complex.q())];
        (complex, "file", params)
    };

    let run = punctured_run(&complex);
    println!("reduced homology of the punctured complex:");
    print_report(&run.report);
    println!("euler characteristic: {}", if run.euler_ok { "consistent" } else { "INCONSISTENT" });
    if let Some(path) = json {
        let report = json_report(
            complex.q(),
            complex.ambient_dim(),
            label,
            &run.report,
            run.euler_ok,
            &params,
        );
        write_json(path, &report)?;
    }
    Ok(if run.euler_ok { EXIT_OK } else { EXIT_MISMATCH })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatroid::uniform_matroid;

    #[test]
    fn json_reports_have_a_stable_shape() {
        let oracle = uniform_matroid(2, 3, 2).unwrap();
        let complex = oracle.independent_spaces().unwrap();
        let run = punctured_run(&complex);
        let report =
            json_report(2, 3, "uniform", &run.report, run.euler_ok, &[("k", 2), ("n", 3), ("q", 2)]);
        let text = serde_json::to_string(&report).unwrap();
        let expected = format!(
            "{{\"q\":2,\"n\":3,\"complex\":\"uniform\",\"degrees\":[{{\"p\":-1,\"betti\":0,\
             \"torsion\":[]}},{{\"p\":0,\"betti\":0,\"torsion\":[]}},{{\"p\":1,\"betti\":8,\
             \"torsion\":[]}}],\"euler_ok\":true,\"version\":\"{}\",\"params\":{{\"k\":2,\
             \"n\":3,\"q\":2}}}}",
            env!("CARGO_PKG_VERSION")
        );
        assert_eq!(text, expected);
    }

    #[test]
    fn zero_tails_are_truncated_in_json() {
        let sphere = crate::qcomplex::q_sphere(1, 2).unwrap();
        let run = punctured_run(&sphere);
        let report = json_report(2, 1, "sphere", &run.report, run.euler_ok, &[("n", 1), ("q", 2)]);
        assert_eq!(report.degrees.len(), 1);
        assert_eq!(report.degrees[0].p, -1);
        assert_eq!(report.degrees[0].betti, 1);
    }

    #[test]
    fn the_field_order_cap_is_enforced() {
        assert!(checked_field(9).is_ok());
        let failure = checked_field(11).unwrap_err();
        assert_eq!(failure.code, EXIT_RESOURCE);
        let failure = checked_field(6).unwrap_err();
        assert_eq!(failure.code, EXIT_RESOURCE);
    }

    #[test]
    fn axiom_witness_lines_name_the_first_violation() {
        let oracle = uniform_matroid(2, 3, 2).unwrap();
        let constant = RankOracle::from_fn(oracle.lattice(), |_| 4).unwrap();
        let report = constant.verify_rank_axioms();
        assert_eq!(rank_witness(&report), "(r1) at <0>");
    }
}
