use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcanon::invariants::{borel_weil_module, weyl_dimension, CoidealSpec, Invariants};
use qcanon::kashiwara::{Kashiwara, LeadingTerm};
use qcanon::uq::Translations;
use qcanon::verify::{Suite, Verifier};
use qcanon::{Basis, CanonicalBasis, Element, ExponentMatrix, Generator, MinorSpec, Side, WeightVector};

/// Exact computations with the dual canonical basis of quantum matrices.
#[derive(Parser)]
#[command(name = "qcanon", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Refuse canonical-basis blocks with more matrices than this.
    #[arg(long, default_value_t = 20_000, global = true)]
    max_block_size: usize,
    /// Directory for cached canonical-basis blocks.
    #[arg(long, env = "QCANON_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutBasis {
    Plain,
    Modified,
    Canonical,
}

/// An element given as a JSON file (`-` for stdin) or as `b(A)` for a matrix.
#[derive(Args)]
struct ElementInput {
    /// Element JSON file, or `-` for stdin.
    file: Option<PathBuf>,
    /// Use the canonical basis element b(A) for this matrix, e.g. `[[1,0],[0,1]]`.
    #[arg(long, conflicts_with = "file")]
    b: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements.
    Mul {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = OutBasis::Plain)]
        basis: OutBasis,
    },
    /// Apply the bar involution.
    Bar {
        #[command(flatten)]
        input: ElementInput,
        #[arg(long, value_enum, default_value_t = OutBasis::Plain)]
        basis: OutBasis,
    },
    /// Dump one block of the canonical basis.
    Canonical {
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// Row sums, comma separated.
        #[arg(long, value_delimiter = ',')]
        ro: Vec<u32>,
        /// Column sums, comma separated.
        #[arg(long, value_delimiter = ',')]
        co: Vec<u32>,
    },
    /// Expand a quantum minor; rows and columns are 1-based.
    Minor {
        /// Matrix size
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        cols: Vec<usize>,
    },
    /// Apply a generator through the L or R translation action.
    Act {
        #[command(flatten)]
        input: ElementInput,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        side: Side,
        /// Generator such as E1, F2, K1 or K1inv.
        #[arg(long)]
        generator: Generator,
        #[arg(long, value_enum, default_value_t = OutBasis::Plain)]
        basis: OutBasis,
    },
    /// Apply a Kashiwara operator.
    Kashiwara {
        #[command(flatten)]
        input: ElementInput,
        #[arg(long)]
        n: Option<usize>,
        /// Row index i (1-based).
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum)]
        op: CrystalOp,
        /// Use the sigma-conjugated operator for the right action.
        #[arg(long)]
        right: bool,
        #[arg(long, value_enum, default_value_t = OutBasis::Canonical)]
        basis: OutBasis,
    },
    /// Canonical basis elements invariant under the left action of a set of generators.
    Invariants {
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// `none`, `lowering`, `raising`, `all`, `theta:1,2` or a list such as `F1,K2,K2inv`.
        #[arg(long = "generators", short = 'S')]
        generators: String,
        /// Maximum degree
        #[arg(long)]
        truncation: u32,
        /// Only representatives with a zero diagonal entry.
        #[arg(long)]
        reduced: bool,
        /// Skip the kernel and string-property checks.
        #[arg(long)]
        skip_checks: bool,
        /// Seed for randomized sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The Borel-Weil module of highest weight lambda.
    Module {
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// Fundamental-weight coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
    /// Run verification suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for randomized sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop after the running suite once this many seconds have passed.
        #[arg(long)]
        timeout: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CrystalOp {
    Raise,
    Lower,
}

/// A usage or input error; exit code 1.
#[derive(Debug)]
struct Failure(String);

impl From<qcanon::Error> for Failure {
    fn from(e: qcanon::Error) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    json: Value,
    text: String,
    passed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut rendered = match cli.global.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Text => out.text,
            };
            if !rendered.ends_with('\n') {
                rendered.push('\n');
            }
            let written = match &cli.global.output {
                Some(path) => fs::write(path, rendered).map_err(|e| format!("{}: {e}", path.display())),
                None => io::stdout().write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if out.passed { 0 } else { 2 })
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn basis_for(global: &Global, n: usize) -> Result<CanonicalBasis, Failure> {
    if n == 0 {
        return Err(Failure("n must be at least 1".into()));
    }
    let cb = CanonicalBasis::new(n).with_max_block_size(global.max_block_size);
    Ok(match &global.cache_dir {
        Some(dir) => cb.with_cache_dir(dir.clone()),
        None => cb,
    })
}

fn read_source(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn read_element(path: &Path) -> Result<Element, Failure> {
    let text = read_source(path)?;
    // serde_json reports line and column for both syntax and content errors.
    serde_json::from_str(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn parse_matrix(s: &str) -> Result<ExponentMatrix, Failure> {
    serde_json::from_str(s).map_err(|e| Failure(format!("matrix {s:?}: {e}")))
}

/// Resolves an element input to `(basis, element)`.
fn load_input(global: &Global, input: &ElementInput, n: Option<usize>) -> Result<(CanonicalBasis, Element), Failure> {
    match (&input.file, &input.b) {
        (Some(path), None) => {
            let e = read_element(path)?;
            if let Some(n) = n.filter(|&n| n != e.n()) {
                return Err(Failure(format!("element has n = {}, but --n {n} was given", e.n())));
            }
            Ok((basis_for(global, e.n())?, e))
        }
        (None, Some(m)) => {
            let a = parse_matrix(m)?;
            let cb = basis_for(global, a.n())?;
            let e = Element::basis_vector(a, Basis::Canonical);
            Ok((cb, e))
        }
        _ => Err(Failure("give an element file or --b MATRIX".into())),
    }
}

fn convert(cb: &CanonicalBasis, e: &Element, basis: OutBasis) -> Result<Element, Failure> {
    Ok(match basis {
        OutBasis::Canonical => cb.expand_in_canonical(e)?,
        OutBasis::Modified => cb.to_modified(e)?,
        OutBasis::Plain => cb.to_modified(e)?.to_basis(Basis::Plain)?,
    })
}

fn element_output(e: &Element) -> Output {
    Output::ok(serde_json::to_value(e).expect("serializable"), e.to_string())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Mul { left, right, basis } => {
            let a = read_element(left)?;
            let b = read_element(right)?;
            if a.n() != b.n() {
                return Err(Failure(format!("factors have n = {} and n = {}", a.n(), b.n())));
            }
            let cb = basis_for(g, a.n())?;
            let prod = cb.algebra().multiply(&cb.to_modified(&a)?, &cb.to_modified(&b)?)?;
            Ok(element_output(&convert(&cb, &prod, *basis)?))
        }
        Command::Bar { input, basis } => {
            let (cb, e) = load_input(g, input, None)?;
            let barred = cb.algebra().bar(&cb.to_modified(&e)?)?;
            Ok(element_output(&convert(&cb, &barred, *basis)?))
        }
        Command::Canonical { n, ro, co } => cmd_canonical(g, *n, ro, co),
        Command::Minor { n, rows, cols } => {
            let cb = basis_for(g, *n)?;
            let zero_based = |v: &[usize]| -> Result<Vec<usize>, Failure> {
                v.iter()
                    .map(|&i| if i >= 1 && i <= *n { Ok(i - 1) } else { Err(Failure(format!("index {i} outside 1..={n}"))) })
                    .collect()
            };
            let spec = MinorSpec::new(zero_based(rows)?, zero_based(cols)?)?;
            let plain = cb.quantum_minor(&spec)?;
            let canon = cb.expand_in_canonical(&plain)?;
            let json = json!({ "minor": spec.to_string(), "element": plain, "canonical": canon });
            Ok(Output::ok(json, format!("{spec} = {plain}\n        = {canon}")))
        }
        Command::Act { input, n, side, generator, basis } => {
            let (cb, e) = load_input(g, input, *n)?;
            let generator = generator.check(cb.n())?;
            let image = Translations::new(cb.algebra()).act(*side, generator, &cb.to_modified(&e)?)?;
            Ok(element_output(&convert(&cb, &image, *basis)?))
        }
        Command::Kashiwara { input, n, index, op, right, basis } => {
            let (cb, e) = load_input(g, input, *n)?;
            let k = Kashiwara::new(&cb, *index)?;
            let f = cb.to_modified(&e)?;
            let image = match (op, right) {
                (CrystalOp::Raise, false) => k.tilde_e(&f)?,
                (CrystalOp::Lower, false) => k.tilde_f(&f)?,
                (CrystalOp::Raise, true) => k.tilde_e_right(&f)?,
                (CrystalOp::Lower, true) => k.tilde_f_right(&f)?,
            };
            let out = convert(&cb, &image, *basis)?;
            let mut json = json!({ "image": out });
            let mut text = out.to_string();
            // For a single b(A) input, also report the mod-qL* leading term.
            if let (Some(m), false) = (&input.b, *right) {
                let a = parse_matrix(m)?;
                let lead = match k.leading_term_check(&a, *op == CrystalOp::Raise)? {
                    LeadingTerm::NotApplicable => json!("not applicable"),
                    LeadingTerm::Holds(b) => json!({ "holds": b }),
                    LeadingTerm::Fails(e) => json!({ "fails": e }),
                };
                text.push_str(&format!("\nleading term: {lead}"));
                json["leading_term"] = lead;
                json["factorization"] = json!(k.factorize(&a)?.to_string());
            }
            Ok(Output::ok(json, text))
        }
        Command::Invariants { n, generators, truncation, reduced, skip_checks, seed } => {
            cmd_invariants(g, *n, generators, *truncation, *reduced, *skip_checks, *seed)
        }
        Command::Module { n, lambda } => cmd_module(g, *n, lambda),
        Command::Verify { suite, seed, timeout } => cmd_verify(g, suite, *seed, *timeout),
    }
}

fn cmd_canonical(g: &Global, n: usize, ro: &[u32], co: &[u32]) -> Result<Output, Failure> {
    if ro.len() != n || co.len() != n {
        return Err(Failure(format!("ro and co need {n} entries each")));
    }
    if ro.iter().sum::<u32>() != co.iter().sum::<u32>() {
        return Err(Failure(format!("row sums {ro:?} and column sums {co:?} have different totals")));
    }
    let cb = basis_for(g, n)?;
    let block = cb.block(ro, co)?;
    let mut text = format!("block ro = {ro:?}, co = {co:?}: {} elements\n", block.matrices.len());
    for e in &block.expansions {
        let terms: Vec<String> = block
            .matrices
            .iter()
            .filter_map(|m| e.coeffs.get(m).map(|h| if h.is_one() { format!("x{m:?}") } else { format!("({h}) x{m:?}") }))
            .collect();
        text.push_str(&format!("b{:?} = {}\n", e.top, terms.join(" + ")));
    }
    Ok(Output::ok(block.to_json(), text))
}

fn cmd_invariants(
    g: &Global,
    n: usize,
    generators: &str,
    truncation: u32,
    reduced: bool,
    skip_checks: bool,
    seed: u64,
) -> Result<Output, Failure> {
    let cb = basis_for(g, n)?;
    let spec = CoidealSpec::parse(n, generators)?;
    let inv = Invariants::new(&cb, spec.clone())?;
    let report = inv.invariant_basis(truncation, reduced)?;
    let blocks: Vec<Value> = report
        .blocks
        .iter()
        .map(|b| json!({ "degree": b.degree, "ro": b.ro, "co": b.co, "weight": b.weight, "members": b.members }))
        .collect();
    let mut text = format!("S = {spec}, truncation {truncation}: {} invariant elements\n", report.members().count());
    for b in &report.blocks {
        text.push_str(&format!("  ro {:?} co {:?} weight {:?}: {}\n", b.ro, b.co, b.weight.sl, b.members.len()));
    }
    let mut passed = report.weight_failures.is_empty();
    let mut checks = json!({
        "weight_of": if report.weight_failures.is_empty() { json!("pass") } else { json!(report.weight_failures) },
    });
    if !skip_checks {
        let mut kernel_failures = Vec::new();
        for b in &report.blocks {
            let k = inv.kernel_cross_check(&b.ro, &b.co)?;
            if !k.agrees() {
                kernel_failures.push(json!(k));
            }
        }
        let s = inv.string_property_check(truncation, 200, seed)?;
        passed &= kernel_failures.is_empty() && s.passes();
        checks["kernel_dimension"] = if kernel_failures.is_empty() { json!("pass") } else { json!(kernel_failures) };
        checks["string_property"] = if s.passes() { json!("pass") } else { json!(s.counterexamples) };
        checks["seed"] = json!(seed);
        text.push_str(&format!(
            "kernel dimensions: {}\nstring property: {}\n",
            if checks["kernel_dimension"] == "pass" { "pass" } else { "FAIL" },
            if s.passes() { "pass" } else { "FAIL" }
        ));
    }
    let json = json!({
        "S": spec.generators,
        "truncation": truncation,
        "reduced": reduced,
        "blocks": blocks,
        "checks": checks,
    });
    Ok(Output { json, text, passed })
}

fn cmd_module(g: &Global, n: usize, lambda: &[i64]) -> Result<Output, Failure> {
    let cb = basis_for(g, n)?;
    let m = borel_weil_module(&cb, lambda)?;
    let weyl = weyl_dimension(&WeightVector::from_fundamental(lambda));
    let actions: Vec<Value> = m.actions.iter().map(|(gen, mat)| json!({ "generator": gen, "matrix": mat })).collect();
    let json = json!({
        "n": n,
        "lambda": m.lambda,
        "ro": m.ro,
        "dimension": m.dimension(),
        "weyl_dimension": weyl.to_string(),
        "basis": m.basis,
        "weights": m.weights,
        "highest_weight": m.highest_weight,
        "closed": m.closed,
        "actions": actions,
    });
    let mut text = format!("lambda = {lambda:?}: dimension {} (Weyl {weyl})\n", m.dimension());
    for (a, w) in m.basis.iter().zip(&m.weights) {
        text.push_str(&format!("  b{a:?}  weight {w:?}\n"));
    }
    text.push_str(&format!("highest weight vectors: {:?}\n", m.highest_weight));
    Ok(Output { json, text, passed: m.closed && m.dimension() as u128 == weyl })
}

fn cmd_verify(g: &Global, suite: &str, seed: u64, timeout: Option<u64>) -> Result<Output, Failure> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let verifier = match &g.cache_dir {
        Some(dir) => Verifier::new(seed).with_cache_dir(dir.clone()),
        None => Verifier::new(seed),
    };
    let deadline = timeout.map(|s| Instant::now() + Duration::from_secs(s));
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for s in suites {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            skipped.push(s);
            continue;
        }
        reports.push(verifier.run(s)?);
    }
    let passed = skipped.is_empty() && reports.iter().all(|r| r.passed());
    let mut text: String = reports.iter().map(|r| r.to_string()).collect();
    if !skipped.is_empty() {
        text.push_str(&format!("timed out; skipped: {}\n", skipped.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")));
    }
    let json = json!({ "seed": seed, "passed": passed, "reports": reports, "skipped": skipped });
    Ok(Output { json, text, passed })
}
