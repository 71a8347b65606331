//! Command-line front end. Every command writes JSON to `--out` or, without it, to stdout;
//! `build` and `qubit-cost` print human-readable summary lines first.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::code::{
    build_code1, build_code2, carbon_code, code_report, four_two_two, topological_logical, vertex_block, CodeError,
    CodeFamily, StabilizerCode,
};
use crate::decoder::{build_decode_table, check_single_qubit_correction, syndrome, DecoderError, ErrorModel};
use crate::lattice::{build_chain, build_honeycomb, Boundary, Lattice, LatticeKind};
use crate::pauli::{distance, Pauli, PauliString};
use crate::statevector::{
    alpha_state, beta_state, codespace_projector_dim, encode_422, encode_code1_link, encode_code2_vertex,
    synthesize_encoder, verify_logical_action, QuantumState, StateError, MAX_QUBITS,
};
use crate::su2::{
    build_code1_flux_hamiltonian, build_code1_logical_hamiltonian, build_code2_logical_hamiltonian,
    build_ks_hamiltonian, code2_physical_subsector, code2_sector_mixing, gauss_project, spectrum_compare,
    split_by_winding, Couplings, OperatorMatrix, Su2Error,
};

/// Largest number of candidate errors an exhaustive distance search may examine before the
/// verification falls back to a bounded search.
pub const DISTANCE_BUDGET: u64 = 20_000_000;

/// Significant digits kept for every float in JSON output.
pub const FLOAT_DIGITS: usize = 12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Su2(#[from] Su2Error),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Decoder(#[from] DecoderError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

impl CliError {
    /// Everything that stops a command before it produces a verdict is a usage error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Parser)]
#[command(name = "gauss-qec", version, about = "Gauss-law stabilizer codes for truncated SU(2) lattice gauge theory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a code and write it as JSON.
    Build(BuildArgs),
    /// Check a code's invariants, distance, decoding and codespace.
    Verify(VerifyArgs),
    /// Compare the logical Hamiltonian with the Gauss-projected lattice Hamiltonian.
    Spectrum(SpectrumArgs),
    /// Emit the single-qubit syndrome table.
    DecodeTable(DecodeArgs),
    /// Run the encoding-circuit checks on the statevector simulator.
    EncodeCheck(EncodeArgs),
    /// Compare physical-qubit costs of link encodings.
    QubitCost(QubitCostArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeChoice {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Carbon,
    VertexBlock,
    #[value(name = "422")]
    FourTwoTwo,
}

#[derive(Debug, Clone, Args)]
pub struct LatticeArgs {
    /// Chain of N plaquettes.
    #[arg(long, visible_alias = "n", value_name = "N", conflicts_with_all = ["honeycomb", "nx", "ny"])]
    pub chain: Option<usize>,
    /// Honeycomb of NX by NY hexagons.
    #[arg(long, num_args = 2, value_names = ["NX", "NY"], conflicts_with_all = ["nx", "ny"])]
    pub honeycomb: Option<Vec<usize>>,
    #[arg(long, requires = "ny")]
    pub nx: Option<usize>,
    #[arg(long, requires = "nx")]
    pub ny: Option<usize>,
    #[arg(long, value_enum, default_value_t = Boundary::Aperiodic)]
    pub boundary: Boundary,
}

/// A validated lattice request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSpec {
    pub kind: LatticeKind,
    pub nx: usize,
    pub ny: usize,
    pub boundary: Boundary,
}

impl LatticeSpec {
    pub fn build(&self) -> Result<Lattice, CliError> {
        let l = match self.kind {
            LatticeKind::Chain => build_chain(self.nx, self.boundary),
            LatticeKind::Honeycomb => build_honeycomb(self.nx, self.ny, self.boundary),
        };
        l.map_err(|e| CliError::Usage(e.to_string()))
    }
}

impl LatticeArgs {
    pub fn spec(&self) -> Option<LatticeSpec> {
        let boundary = self.boundary;
        if let Some(n) = self.chain {
            return Some(LatticeSpec { kind: LatticeKind::Chain, nx: n, ny: 1, boundary });
        }
        let (nx, ny) = match (&self.honeycomb, self.nx, self.ny) {
            (Some(v), _, _) => (v[0], v[1]),
            (None, Some(nx), Some(ny)) => (nx, ny),
            _ => return None,
        };
        Some(LatticeSpec { kind: LatticeKind::Honeycomb, nx, ny, boundary })
    }

    fn require(&self) -> Result<LatticeSpec, CliError> {
        self.spec().ok_or_else(|| CliError::Usage("a lattice is required: pass --chain N or --honeycomb NX NY".into()))
    }
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    /// Code family. Families 1 and 2 need a lattice.
    #[arg(long, value_enum)]
    pub code: Option<CodeChoice>,
    /// Read the code from a JSON file written by `build` instead.
    #[arg(long, value_name = "PATH", conflicts_with = "code")]
    pub code_file: Option<PathBuf>,
    #[command(flatten)]
    pub lattice: LatticeArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Output file; stdout when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub code: CodeChoice,
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub code: CodeChoice,
    #[command(flatten)]
    pub lattice: LatticeArgs,
    /// Gauge coupling squared.
    #[arg(long, default_value_t = 1.0)]
    pub g2: f64,
    /// Lattice spacing.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DecodeArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Error set to tabulate.
    #[arg(long, value_enum, default_value_t = ErrorModel::AllSingle)]
    pub model: ErrorModel,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EncodeArgs {
    /// Seed for the random input states.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random input states per encoder.
    #[arg(long, default_value_t = 16)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct QubitCostArgs {
    /// Largest chain length to tabulate.
    #[arg(long, value_name = "N", default_value_t = 5)]
    pub chain: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

/// Result of a command: the JSON document, summary lines, and whether verification passed.
#[derive(Debug)]
pub struct Outcome {
    pub summary: Vec<String>,
    pub json: Value,
    pub pass: bool,
}

impl Outcome {
    fn new(json: Value, pass: bool) -> Self {
        Self { summary: Vec::new(), json, pass }
    }
}

/// Rounds every float in `v` to [`FLOAT_DIGITS`] significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(0.0);
            let r: f64 = format!("{:.*e}", FLOAT_DIGITS - 1, x).parse().unwrap_or(x);
            json!(if r == 0.0 { 0.0 } else { r })
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

pub fn build_code(choice: CodeChoice, lattice: &LatticeArgs) -> Result<(StabilizerCode, Option<Lattice>), CliError> {
    let needs_lattice = matches!(choice, CodeChoice::One | CodeChoice::Two);
    if !needs_lattice {
        if lattice.spec().is_some() {
            return Err(CliError::Usage("this code is a single vertex block and takes no lattice".into()));
        }
        let code = match choice {
            CodeChoice::Carbon => carbon_code(),
            CodeChoice::VertexBlock => vertex_block(),
            _ => four_two_two(),
        };
        return Ok((code, None));
    }
    let l = lattice.require()?.build()?;
    let code = match choice {
        CodeChoice::One => build_code1(&l)?,
        _ => build_code2(&l, None).map_err(|e| match e {
            CodeError::DotAssignment { .. } => CliError::Usage(format!(
                "{e}; the lattice has no two-colouring of its vertices, so every link cannot be owned by exactly one dotted vertex (use an even periodic chain or an aperiodic lattice)"
            )),
            other => other.into(),
        })?,
    };
    Ok((code, Some(l)))
}

fn load_code(args: &CodeArgs) -> Result<(StabilizerCode, Option<Lattice>), CliError> {
    match (&args.code, &args.code_file) {
        (Some(c), None) => build_code(*c, &args.lattice),
        (None, Some(path)) => {
            let p = path.display().to_string();
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: p.clone(), source })?;
            let code: StabilizerCode = serde_json::from_str(&text).map_err(|source| CliError::Json { path: p, source })?;
            let lattice = match args.lattice.spec() {
                Some(s) => Some(s.build()?),
                None => None,
            };
            Ok((code, lattice))
        }
        _ => Err(CliError::Usage("pass either --code or --code-file".into())),
    }
}

pub fn cmd_build(args: &BuildArgs) -> Result<Outcome, CliError> {
    let (code, _) = build_code(args.code, &args.lattice)?;
    let d = code.declared;
    let mut out = Outcome::new(to_json(&code), true);
    out.summary.push(format!("{d} n={} k={}", d.n, d.k));
    Ok(out)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
    /// Set when a size cap limited the check to a partial search.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    bounded: bool,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into(), bounded: false }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let (code, lattice) = load_code(&args.code)?;
    let n = code.n_physical;
    let d = code.declared.d;
    let mut checks = Vec::new();
    checks.push(match code.check_invariants() {
        Ok(()) => check("invariants", true, format!("{} generators commute, k = {}", code.generators.len(), code.k())),
        Err(e) => check("invariants", false, e.to_string()),
    });

    let affordable = (1..=d).take_while(|&w| binomial(n as u64, w as u64).saturating_mul(3u64.pow(w as u32)) <= DISTANCE_BUDGET).last().unwrap_or(0);
    let report = distance(&code.generators, affordable).map_err(CodeError::from)?;
    let mut dc = match report.bound.exact() {
        Some(found) => check(
            "distance",
            found == d,
            format!("lightest logical has weight {found} (declared {d}); witness {}", report.witness.as_ref().map_or(String::new(), |w| w.to_string())),
        ),
        None => check("distance", true, format!("no logical up to weight {affordable}; {} errors examined", report.examined)),
    };
    dc.bounded = report.bound.exact().is_none() && affordable < d;
    checks.push(dc);

    if d >= 3 {
        let c = match build_decode_table(&code, ErrorModel::AllSingle) {
            Ok(table) => {
                let r = check_single_qubit_correction(&code, &table, ErrorModel::AllSingle)?;
                check("single_qubit_correction", r.all_corrected(), format!("{}/{} single-qubit errors corrected", r.corrected, r.errors))
            }
            Err(e) => check("single_qubit_correction", false, e.to_string()),
        };
        checks.push(c);
    } else {
        let undetected = (0..n)
            .flat_map(|q| Pauli::NON_IDENTITY.map(|p| PauliString::single(n, q, p)))
            .filter(|e| syndrome(&code, e).map(|s| s.is_trivial()).unwrap_or(true))
            .count();
        checks.push(check("single_qubit_detection", undetected == 0, format!("{undetected} of {} single-qubit errors undetected", 3 * n)));
    }

    if n <= MAX_QUBITS {
        let dim = codespace_projector_dim(&code)?;
        checks.push(check("codespace_dimension", dim == 1 << code.k(), format!("trace of projector {dim}, 2^k = {}", 1u64 << code.k())));
    } else {
        checks.push(Check {
            name: "codespace_dimension".into(),
            pass: true,
            detail: format!("{n} qubits exceed the {MAX_QUBITS}-qubit statevector cap"),
            bounded: true,
        });
    }

    if let (CodeFamily::Code1, Some(l)) = (code.family, &lattice) {
        if l.kind == LatticeKind::Chain {
            let result = topological_logical(&code, l);
            checks.push(match (l.boundary, result) {
                (Boundary::Periodic, Ok(p)) => check("topological_logical", true, format!("flux string of weight {} commutes with all checks and is not a stabilizer", p.weight())),
                (Boundary::Periodic, Err(e)) => check("topological_logical", false, e.to_string()),
                (Boundary::Aperiodic, Err(CodeError::TopologicalObstruction(m))) => check("topological_obstruction", true, m),
                (Boundary::Aperiodic, r) => check("topological_obstruction", false, format!("unexpected result {r:?}")),
            });
        }
    }

    let pass = checks.iter().all(|c| c.pass);
    let json = json!({
        "code": {"family": code.family, "n": n, "k": code.k(), "d_claimed": d},
        "report": code_report(&code, None)?,
        "checks": checks,
        "pass": pass,
    });
    Ok(Outcome::new(json, pass))
}

fn sector_json(name: &str, ks: &OperatorMatrix, logical: &OperatorMatrix, tol: f64) -> (Value, Option<f64>) {
    let c = spectrum_compare(ks, logical, tol);
    let diff = c.max_abs_diff;
    (
        json!({
            "sector": name,
            "basis_dim": c.dim_a,
            "logical_dim": c.dim_b,
            "eigenvalues": c.eigenvalues_a,
            "logical_eigenvalues": c.eigenvalues_b,
            "comparison": {"max_abs_diff": c.max_abs_diff, "pass": c.pass},
        }),
        diff,
    )
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<Outcome, CliError> {
    if !(args.g2 > 0.0 && args.a > 0.0) {
        return Err(CliError::Usage("--g2 and --a must be positive".into()));
    }
    let spec = args.lattice.require()?;
    let l = spec.build()?;
    let c = Couplings::new(args.g2, args.a);
    let ks = gauss_project(&l, &build_ks_hamiltonian(&l, c)?);
    let mut sectors = Vec::new();
    let mut diffs = Vec::new();
    let mut extra = json!({});
    match (args.code, spec.kind, spec.boundary) {
        (CodeChoice::One, LatticeKind::Chain, Boundary::Aperiodic) => {
            let h = build_code1_logical_hamiltonian(spec.nx, spec.boundary, c)?;
            let (s, d) = sector_json("physical", &ks, &h, args.tol);
            sectors.push(s);
            diffs.push(d);
        }
        (CodeChoice::One, LatticeKind::Chain, Boundary::Periodic) => {
            let [w0, w1] = split_by_winding(&l, &ks)?;
            let h0 = build_code1_logical_hamiltonian(spec.nx, spec.boundary, c)?;
            let h1 = build_code1_flux_hamiltonian(spec.nx, c)?;
            for (name, k, h) in [("winding_0", &w0, &h0), ("winding_1", &w1, &h1)] {
                let (s, d) = sector_json(name, k, h, args.tol);
                sectors.push(s);
                diffs.push(d);
            }
        }
        (CodeChoice::Two, _, _) => {
            let (code, _) = build_code(CodeChoice::Two, &args.lattice)?;
            let dots = code.dots.expect("Code II records its dots");
            let h = build_code2_logical_hamiltonian(&l, &dots, c)?;
            let mixing = code2_sector_mixing(&l, &dots, &h);
            let sub = code2_physical_subsector(&l, &dots, &h);
            let (s, d) = sector_json("physical", &ks, &sub, args.tol);
            sectors.push(s);
            diffs.push(if mixing == 0 { d } else { None });
            extra = json!({"logical_dim": h.dim(), "sector_mixing_entries": mixing, "meta": h.meta});
        }
        _ => {
            return Err(CliError::Usage(
                "the family 1 logical Hamiltonian is defined on chains; use --code 2 for honeycombs".into(),
            ))
        }
    }
    let max_abs_diff = diffs.iter().try_fold(0.0f64, |m, d| d.map(|d| m.max(d)));
    let pass = max_abs_diff.is_some_and(|d| d <= args.tol);
    let mut eigenvalues = ks.eigenvalues();
    eigenvalues.sort_by(f64::total_cmp);
    let mut json = json!({
        "lattice": {"kind": spec.kind, "nx": spec.nx, "ny": spec.ny, "boundary": spec.boundary},
        "couplings": c,
        "basis_dim": ks.dim(),
        "eigenvalues": eigenvalues,
        "sectors": sectors,
        "comparison": {"max_abs_diff": max_abs_diff, "tolerance": args.tol, "pass": pass},
    });
    if let (Value::Object(o), Value::Object(e)) = (&mut json, extra) {
        o.extend(e);
    }
    Ok(Outcome::new(json, pass))
}

pub fn cmd_decode_table(args: &DecodeArgs) -> Result<Outcome, CliError> {
    let (code, _) = load_code(&args.code)?;
    let base = json!({"family": code.family, "n": code.n_physical, "model": args.model});
    let json = match build_decode_table(&code, args.model) {
        Ok(table) => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "syndrome": r.syndrome,
                        "eigenvalues": r.syndrome.eigenvalues(),
                        "correction": r.correction,
                        "class": r.class,
                    })
                })
                .collect();
            let entries: usize = table.rows.iter().map(|r| r.class.len()).sum();
            json!({"status": "correctable", "entries": entries, "rows": rows})
        }
        Err(DecoderError::NotCorrectable(a)) => json!({
            "status": "detect_only",
            "detail": {"syndrome": a.syndrome, "first": a.first, "second": a.second},
        }),
        Err(e) => return Err(e.into()),
    };
    let mut merged = base;
    if let (Value::Object(o), Value::Object(e)) = (&mut merged, json) {
        o.extend(e);
    }
    Ok(Outcome::new(merged, true))
}

fn random_state(rng: &mut StdRng, n: usize) -> Result<QuantumState, StateError> {
    loop {
        let amps: Vec<Complex64> =
            (0..1usize << n).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        if amps.iter().map(|a| a.norm_sqr()).sum::<f64>() > 1e-3 {
            return QuantumState::normalized(n, amps);
        }
    }
}

fn stabilized(code: &StabilizerCode, s: &QuantumState, tol: f64) -> Result<bool, StateError> {
    for g in code.generators.generators() {
        if (s.expectation(g)? - 1.0).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cmd_encode_check(args: &EncodeArgs) -> Result<Outcome, CliError> {
    let tol = args.tol;
    let mut rng = StdRng::seed_from_u64(args.seed);
    let mut checks = Vec::new();

    let a = encode_code1_link(&QuantumState::basis(1, 0)?)?.distance(&alpha_state())?;
    let b = encode_code1_link(&QuantumState::basis(1, 1)?)?.distance(&beta_state())?;
    checks.push(check("link_encoder_basis", a <= tol && b <= tol, format!("|0> -> alpha off by {a:e}, |1> -> beta off by {b:e}")));

    let mut worst: f64 = 0.0;
    for _ in 0..args.samples {
        let psi = random_state(&mut rng, 1)?;
        let out = encode_code1_link(&psi)?;
        let want: Vec<Complex64> = alpha_state()
            .amplitudes()
            .iter()
            .zip(beta_state().amplitudes())
            .map(|(x, y)| x * psi.amplitude(0) + y * psi.amplitude(1))
            .collect();
        worst = worst.max(out.distance(&QuantumState::from_amplitudes(3, want)?)?);
    }
    checks.push(check("link_encoder_linear", worst <= tol, format!("{} random inputs, worst deviation {worst:e}", args.samples)));

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let table = [(0b00, [0b0000, 0b1111]), (0b10, [0b1100, 0b0011]), (0b11, [0b1010, 0b0101]), (0b01, [0b0110, 0b1001])];
    let mut worst: f64 = 0.0;
    for (input, support) in table {
        let mut amps = vec![Complex64::new(0.0, 0.0); 16];
        for i in support {
            amps[i] = Complex64::new(s, 0.0);
        }
        let got = encode_422(&QuantumState::basis(2, input)?)?;
        worst = worst.max(got.distance(&QuantumState::from_amplitudes(4, amps)?)?);
    }
    checks.push(check("four_two_two_codewords", worst <= tol, format!("worst deviation {worst:e}")));

    let carbon = carbon_code();
    let (circuit, inputs) = synthesize_encoder(&carbon)?;
    let encoded: Vec<QuantumState> =
        (0..4).map(|a| encode_code2_vertex(&carbon, &QuantumState::basis(2, a)?)).collect::<Result<_, _>>()?;
    let mut all = true;
    for st in &encoded {
        all &= stabilized(&carbon, st, tol)?;
    }
    checks.push(check("carbon_stabilized", all, format!("{} gates, inputs on qubits {inputs:?}", circuit.gates.len())));
    let mut mapping = true;
    for (i, pair) in carbon.logical_pairs.iter().enumerate() {
        mapping &= verify_logical_action(&encoded, &pair.x, &PauliString::single(2, i, Pauli::X), tol)?;
        mapping &= verify_logical_action(&encoded, &pair.z, &PauliString::single(2, i, Pauli::Z), tol)?;
    }
    checks.push(check("carbon_logical_mapping", mapping, "logical X and Z act as X and Z on the link qubits"));

    let mut all = true;
    for _ in 0..args.samples {
        let psi = random_state(&mut rng, 2)?;
        all &= stabilized(&carbon, &encode_code2_vertex(&carbon, &psi)?, tol)?;
        all &= stabilized(&four_two_two(), &encode_422(&psi)?, tol)?;
    }
    checks.push(check("random_inputs_stabilized", all, format!("{} random two-qubit inputs", args.samples)));

    let pass = checks.iter().all(|c| c.pass);
    Ok(Outcome::new(json!({"seed": args.seed, "checks": checks, "pass": pass}), pass))
}

/// Physical qubits of a chain of `n` plaquettes under three link encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QubitCost {
    pub n: usize,
    pub links: usize,
    /// One five-qubit code block per link.
    pub five_qubit: usize,
    pub code1: usize,
    pub code2: usize,
}

pub fn qubit_cost(n: usize) -> QubitCost {
    let links = 3 * n + 1;
    QubitCost { n, links, five_qubit: 5 * links, code1: 9 * n + 3, code2: 12 * n }
}

pub fn cmd_qubit_cost(args: &QubitCostArgs) -> Result<Outcome, CliError> {
    if args.chain == 0 {
        return Err(CliError::Usage("--chain must be at least 1".into()));
    }
    let rows: Vec<QubitCost> = (1..=args.chain).map(qubit_cost).collect();
    let mut out = Outcome::new(json!({"rows": rows}), true);
    out.summary.push("per-link five-qubit code: 5(3N+1) = 15N+5 ~ 15N; Code I: 9N+3; Code II: 12N".into());
    for r in &rows {
        out.summary.push(format!(
            "N={}: 5*{} = {} (15N = {}) | 9N+3 = {} | 12N = {}",
            r.n,
            r.links,
            r.five_qubit,
            15 * r.n,
            r.code1,
            r.code2
        ));
    }
    Ok(out)
}

pub fn dispatch(cli: &Cli) -> Result<(Outcome, Option<PathBuf>), CliError> {
    Ok(match &cli.command {
        Command::Build(a) => (cmd_build(a)?, a.out.out.clone()),
        Command::Verify(a) => (cmd_verify(a)?, a.out.out.clone()),
        Command::Spectrum(a) => (cmd_spectrum(a)?, a.out.out.clone()),
        Command::DecodeTable(a) => (cmd_decode_table(a)?, a.out.out.clone()),
        Command::EncodeCheck(a) => (cmd_encode_check(a)?, a.out.out.clone()),
        Command::QubitCost(a) => (cmd_qubit_cost(a)?, a.out.out.clone()),
    })
}

/// Runs the parsed command, writes its output and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let (outcome, path) = match dispatch(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let text = serde_json::to_string_pretty(&round_floats(outcome.json)).expect("JSON output") + "\n";
    let mut stdout = std::io::stdout().lock();
    for line in &outcome.summary {
        let _ = writeln!(stdout, "{line}");
    }
    let written = match &path {
        Some(p) => fs::write(p, &text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source }),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    if outcome.pass {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("gauss-qec").chain(args.iter().copied()))
    }

    fn outcome(args: &[&str]) -> Outcome {
        dispatch(&parse(args).unwrap()).unwrap().0
    }

    #[test]
    fn build_summaries() {
        assert_eq!(outcome(&["build", "--code", "1", "--chain", "5", "--boundary", "aperiodic"]).summary[0], "[[48,5,3]] n=48 k=5");
        assert_eq!(outcome(&["build", "--code", "1", "--honeycomb", "1", "1"]).summary[0], "[[18,1,3]] n=18 k=1");
        assert_eq!(outcome(&["build", "--code", "2", "--chain", "4", "--boundary", "periodic"]).summary[0], "[[48,8,4]] n=48 k=8");
        assert_eq!(outcome(&["build", "--code", "carbon"]).summary[0], "[[12,2,4]] n=12 k=2");
    }

    #[test]
    fn odd_periodic_code2_is_a_usage_error() {
        let cli = parse(&["build", "--code", "2", "--chain", "3", "--boundary", "periodic"]).unwrap();
        let err = dispatch(&cli).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn conflicting_lattices_rejected() {
        assert!(parse(&["build", "--code", "1", "--chain", "2", "--honeycomb", "1", "1"]).is_err());
        assert!(parse(&["build", "--code", "7"]).is_err());
        let cli = parse(&["build", "--code", "1"]).unwrap();
        assert!(matches!(dispatch(&cli), Err(CliError::Usage(_))));
    }

    #[test]
    fn float_rounding() {
        let v = round_floats(json!({"x": [0.1 + 0.2, 1.0 / 3.0, 2.0]}));
        assert_eq!(v["x"][0], json!(0.3));
        assert_eq!(v["x"][1], json!(0.333333333333));
        assert_eq!(v["x"][2], json!(2.0));
    }

    #[test]
    fn spectrum_single_plaquette() {
        let o = outcome(&["spectrum", "--code", "1", "--chain", "1", "--g2", "1.0"]);
        assert!(o.pass);
        let ev = round_floats(o.json["eigenvalues"].clone());
        let r = (9.0f64 / 16.0 + 4.0).sqrt();
        assert_eq!(ev, round_floats(json!([0.75 - r, 0.75 + r])));
    }

    #[test]
    fn spectrum_periodic_sectors() {
        let o = outcome(&["spectrum", "--code", "1", "--chain", "3", "--boundary", "periodic"]);
        assert!(o.pass);
        assert_eq!(o.json["basis_dim"], 16);
        assert_eq!(o.json["sectors"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn verify_and_decode() {
        let o = outcome(&["verify", "--code", "carbon"]);
        assert!(o.pass, "{}", o.json);
        let o = outcome(&["decode-table", "--code", "422"]);
        assert_eq!(o.json["status"], "detect_only");
        let o = outcome(&["decode-table", "--code", "carbon"]);
        assert_eq!(o.json["entries"], 36);
        let o = outcome(&["decode-table", "--code", "vertex-block", "--model", "z-only"]);
        assert_eq!(o.json["rows"].as_array().unwrap().len(), 10);
    }

    #[test]
    fn qubit_costs() {
        assert_eq!(qubit_cost(3), QubitCost { n: 3, links: 10, five_qubit: 50, code1: 30, code2: 36 });
        let o = outcome(&["qubit-cost", "--chain", "2"]);
        assert_eq!(o.summary.len(), 3);
    }
}
