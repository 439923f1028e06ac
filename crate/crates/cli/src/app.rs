//! Subcommands, reports and exit codes.
//!
//! Exit status: 0 when everything checked holds, 1 when a check fails or a
//! comparison disagrees, 2 for usage, input and resource-cap errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use entwined::algcore::{check_algebra, check_bimodule, check_coalgebra, restrict_bimodule, AxiomReport, Bimodule};
use entwined::entwine::{check_entwining, Entwining};
use entwined::exactlin::{Field, Matrix, PrimeField, Rationals};
use entwined::galois::{check_beta_bimodule, check_coaction, check_translation_identity, ComoduleAlgebra, GaloisExtension};
use entwined::homology::{entwined_cohomology, hochschild_cohomology, set_resource_cap, verify_theorem, CohomologyTable};
use entwined::zoo::{build_example, find_example, EXAMPLES};
use entwined::exactlin::FieldSpec;
use entwined::Error;

use crate::format::{parse_structure, AnyStructure, Structure, StructureDoc};
use crate::fuzz::{run_fuzz, FuzzConfig, FuzzReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "entwined", version, about = "Entwining structures, Galois extensions and their cohomology")]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest dimension allowed for a single degree (overrides ENTWINED_MAX_DIM).
    #[arg(long, global = true, value_name = "N")]
    pub max_dim: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
pub struct Coefficients {
    /// Structure file whose "bimodule" key gives the coefficients.
    #[arg(long, value_name = "FILE")]
    pub bimodule: Option<PathBuf>,

    /// Use the algebra itself (regular bimodule) as coefficients.
    #[arg(long = "self")]
    pub regular: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the axiom checkers on every structure in a file.
    Check { file: PathBuf },
    /// Coinvariants, Galois map, translation map and canonical entwining.
    Galois { file: PathBuf },
    /// Entwined cohomology H_ψ^*(A, M).
    Cohomology {
        file: PathBuf,
        #[command(flatten)]
        coefficients: Coefficients,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Hochschild cohomology HH^*(A, M) of the file's algebra.
    Hochschild {
        file: PathBuf,
        #[command(flatten)]
        coefficients: Coefficients,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Compare H_ψ^*(A, M) with HH^*(B, M) for a Galois extension.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        coefficients: Coefficients,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// List the built-in examples, describe one, or write it to a file.
    Zoo {
        name: Option<String>,
        #[arg(long, value_name = "PATH")]
        emit: Option<PathBuf>,
    },
    /// Seeded random search for counterexamples.
    Fuzz {
        #[arg(long)]
        dim_a: usize,
        #[arg(long)]
        dim_c: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Perturb one entry of ψ per trial and count how often the checker notices.
        #[arg(long)]
        perturb: bool,
        /// Work over F_p instead of Q.
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
    },
}

/// A finished command: text and JSON renderings plus the verdict.
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(command: &str, ok: bool, text: String, mut body: Value) -> Self {
        let obj = body.as_object_mut().expect("report bodies are objects");
        obj.insert("schema".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(command));
        obj.insert("ok".into(), json!(ok));
        Report { ok, text, json: body }
    }
}

/// Errors that are the user's doing rather than a failed check.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::NotGalois | Error::NotEntwining(_) | Error::Consistency(_) | Error::InvalidComplex(_)) => 1,
        _ => 2,
    }
}

/// Parse `args` (including the program name), run, and write the report.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    run(&cli, out, err)
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(cap) = cli.max_dim {
        set_resource_cap(cap);
    }
    match execute(&cli.command) {
        Ok(report) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json"))
            } else {
                write!(out, "{}", report.text)
            };
            if written.is_err() {
                return 2;
            }
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json!({"schema": SCHEMA_VERSION, "ok": false, "error": format!("{e:#}")}))
                        .expect("json")
                );
            }
            let _ = writeln!(err, "error: {e:#}");
            code
        }
    }
}

fn read_structure(path: &Path) -> anyhow::Result<AnyStructure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_structure(&text).with_context(|| path.display().to_string())
}

/// Run a field-generic expression on whichever field a structure lives over.
macro_rules! on_field {
    ($any:expr, $s:ident => $body:expr) => {
        match $any {
            AnyStructure::Rationals($s) => $body,
            AnyStructure::Prime($s) => $body,
        }
    };
}

fn execute(cmd: &Command) -> anyhow::Result<Report> {
    match cmd {
        Command::Zoo { name, emit } => zoo(name.as_deref(), emit.as_deref()),
        Command::Fuzz {
            dim_a,
            dim_c,
            trials,
            seed,
            perturb,
            prime,
        } => {
            if *dim_a == 0 || *dim_c == 0 {
                return Err(usage("--dim-a and --dim-c must be positive"));
            }
            let cfg = FuzzConfig {
                dim_a: *dim_a,
                dim_c: *dim_c,
                trials: *trials,
                seed: *seed,
                perturb: *perturb,
            };
            Ok(match prime {
                None => fuzz_report(&Rationals, cfg),
                Some(p) => fuzz_report(&PrimeField::new(*p)?, cfg),
            })
        }
        Command::Check { file } => on_field!(read_structure(file)?, s => check(&s)),
        Command::Galois { file } => on_field!(read_structure(file)?, s => galois(&s)),
        Command::Cohomology {
            file,
            coefficients,
            max_degree,
        } => on_field!(read_structure(file)?, s => cohomology(&s, coefficients, *max_degree, false)),
        Command::Hochschild {
            file,
            coefficients,
            max_degree,
        } => on_field!(read_structure(file)?, s => cohomology(&s, coefficients, *max_degree, true)),
        Command::Verify {
            file,
            coefficients,
            max_degree,
        } => on_field!(read_structure(file)?, s => verify(&s, coefficients, *max_degree)),
    }
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    let f = m.field();
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| json!(f.format(x))).collect()))
            .collect(),
    )
}

fn columns_json<F: Field>(m: &Matrix<F>) -> Value {
    matrix_json(&m.transpose())
}

fn axiom_json(r: &AxiomReport) -> Value {
    json!({
        "subject": r.subject,
        "holds": r.all_hold(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "holds": c.holds,
            "failures": c.failures,
            "witnesses": c.witnesses,
        })).collect::<Vec<_>>(),
    })
}

fn table_json(t: &CohomologyTable) -> Value {
    json!({"dims": t.dims, "top_truncated": t.top_truncated})
}

fn require<'a, T>(x: &'a Option<T>, key: &str, command: &str) -> anyhow::Result<&'a T> {
    x.as_ref()
        .ok_or_else(|| usage(format!("{command}: the file has no \"{key}\" key")))
}

fn comodule_algebra<F: Field>(s: &Structure<F>, command: &str) -> anyhow::Result<ComoduleAlgebra<F>> {
    let a = require(&s.algebra, "algebra", command)?;
    let c = require(&s.coalgebra, "coalgebra", command)?;
    let delta = require(&s.coaction, "coaction", command)?;
    Ok(ComoduleAlgebra::new(a.clone(), c.clone(), delta.clone())?)
}

fn check<F: Field>(s: &Structure<F>) -> anyhow::Result<Report> {
    let a = require(&s.algebra, "algebra", "check")?;
    let mut reports = vec![check_algebra(a)];
    if let Some(c) = &s.coalgebra {
        reports.push(check_coalgebra(c));
    }
    if s.coaction.is_some() {
        reports.push(check_coaction(&comodule_algebra(s, "check")?));
    }
    if let Some(psi) = &s.entwining {
        let c = require(&s.coalgebra, "coalgebra", "check")?;
        reports.push(check_entwining(&Entwining::new(a.clone(), c.clone(), psi.clone())?));
    }
    if let Some(m) = &s.bimodule {
        reports.push(check_bimodule(m));
    }
    let ok = reports.iter().all(AxiomReport::all_hold);
    let mut text: String = reports.iter().map(ToString::to_string).collect();
    text.push_str(if ok { "all checks hold\n" } else { "some checks FAIL\n" });
    let body = json!({
        "field": s.field.spec().to_string(),
        "reports": reports.iter().map(axiom_json).collect::<Vec<_>>(),
    });
    Ok(Report::new("check", ok, text, body))
}

fn galois<F: Field>(s: &Structure<F>) -> anyhow::Result<Report> {
    let ca = comodule_algebra(s, "galois")?;
    let coaction = check_coaction(&ca);
    if !coaction.all_hold() {
        let text = format!("{coaction}coaction axioms fail; no Galois analysis\n");
        let body = json!({"field": s.field.spec().to_string(), "coaction": axiom_json(&coaction)});
        return Ok(Report::new("galois", false, text, body));
    }
    let ext = GaloisExtension::new(ca)?;
    let b = ext.b_basis();
    let mut text = String::new();
    writeln!(text, "coinvariants B: dimension {}", b.cols())?;
    for i in 0..b.cols() {
        let v: Vec<String> = b.column(i).iter().map(|x| s.field.format(x)).collect();
        writeln!(text, "  b{i} = [{}]", v.join(", "))?;
    }
    writeln!(text, "dim A ⊗_B A = {}", ext.tensor_over_b().dim())?;
    writeln!(text, "is_galois: {}", ext.is_galois())?;
    let mut body = json!({
        "field": s.field.spec().to_string(),
        "coinvariants": {"dim": b.cols(), "basis": columns_json(b)},
        "tensor_over_b_dim": ext.tensor_over_b().dim(),
        "is_galois": ext.is_galois(),
    });
    let mut ok = ext.is_galois();
    if ext.is_galois() {
        let psi = ext.canonical_psi()?;
        let axioms = check_entwining(&psi);
        let beta_bimodule = check_beta_bimodule(&ext)?;
        let translation = check_translation_identity(&ext)?;
        ok = axioms.all_hold() && beta_bimodule && translation;
        writeln!(text, "γ (columns = γ(c_i) in A ⊗_B A):")?;
        write_matrix(&mut text, ext.gamma()?)?;
        writeln!(text, "ψ (column i·dim A + j = ψ(c_i ⊗ e_j)):")?;
        write_matrix(&mut text, psi.psi())?;
        writeln!(text, "canonical entwining axioms: {}", axioms.all_hold())?;
        writeln!(text, "β is an A-bimodule map: {beta_bimodule}")?;
        writeln!(text, "translation identity: {translation}")?;
        let obj = body.as_object_mut().expect("object");
        obj.insert("gamma".into(), matrix_json(ext.gamma()?));
        obj.insert("psi".into(), matrix_json(psi.psi()));
        obj.insert("entwining_axioms".into(), axiom_json(&axioms));
        obj.insert("beta_bimodule".into(), json!(beta_bimodule));
        obj.insert("translation_identity".into(), json!(translation));
    }
    Ok(Report::new("galois", ok, text, body))
}

fn write_matrix<F: Field>(text: &mut String, m: &Matrix<F>) -> std::fmt::Result {
    let f = m.field();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| f.format(x)).collect();
        writeln!(text, "  [{}]", row.join(" "))?;
    }
    Ok(())
}

fn coefficients<F: Field>(s: &Structure<F>, c: &Coefficients, command: &str) -> anyhow::Result<Bimodule<F>> {
    let a = require(&s.algebra, "algebra", command)?;
    if c.regular {
        return Ok(Bimodule::regular(a));
    }
    if let Some(path) = &c.bimodule {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let doc = StructureDoc::parse(&text).with_context(|| path.display().to_string())?;
        if let Some(other) = &doc.algebra {
            let own = Structure { algebra: Some(a.clone()), ..Structure::empty(s.field.clone()) }.to_doc();
            if Some(other) != own.algebra.as_ref() {
                return Err(anyhow!(Error::AlgebraMismatch(format!(
                    "{}: bimodule is over a different algebra",
                    path.display()
                ))));
            }
        }
        let parsed = Structure::from_doc(&doc, s.field.clone(), Some(a)).with_context(|| path.display().to_string())?;
        return parsed
            .bimodule
            .ok_or_else(|| usage(format!("{}: no \"bimodule\" key", path.display())));
    }
    match &s.bimodule {
        Some(m) => Ok(m.clone()),
        None => Err(usage(format!(
            "{command}: pass --bimodule FILE or --self (the file has no \"bimodule\" key)"
        ))),
    }
}

fn entwining_of<F: Field>(s: &Structure<F>) -> anyhow::Result<Entwining<F>> {
    if let Some(psi) = &s.entwining {
        let a = require(&s.algebra, "algebra", "cohomology")?;
        let c = require(&s.coalgebra, "coalgebra", "cohomology")?;
        return Ok(Entwining::new(a.clone(), c.clone(), psi.clone())?);
    }
    if s.coaction.is_none() {
        bail!(usage("cohomology: the file needs an \"entwining\" or a \"coaction\" key"));
    }
    let ext = GaloisExtension::new(comodule_algebra(s, "cohomology")?)?;
    Ok(ext.canonical_psi()?)
}

fn cohomology<F: Field>(s: &Structure<F>, c: &Coefficients, n_max: usize, hochschild: bool) -> anyhow::Result<Report> {
    let command = if hochschild { "hochschild" } else { "cohomology" };
    let a = require(&s.algebra, "algebra", command)?;
    let m = coefficients(s, c, command)?;
    let table = if hochschild {
        hochschild_cohomology(a, &m, n_max)?
    } else {
        entwined_cohomology(&entwining_of(s)?, &m, n_max)?
    };
    let label = if hochschild { "HH" } else { "H_psi" };
    let mut text = String::new();
    for (n, h) in table.dims.iter().enumerate() {
        writeln!(text, "dim {label}^{n} = {h}")?;
    }
    let body = json!({
        "field": s.field.spec().to_string(),
        "max_degree": n_max,
        "bimodule_dim": m.dim(),
        "table": table_json(&table),
    });
    Ok(Report::new(command, true, text, body))
}

fn verify<F: Field>(s: &Structure<F>, c: &Coefficients, n_max: usize) -> anyhow::Result<Report> {
    let ext = GaloisExtension::new(comodule_algebra(s, "verify")?)?;
    if !ext.is_galois() {
        let text = "extension is not Galois; nothing to compare\n".to_string();
        let body = json!({"field": s.field.spec().to_string(), "is_galois": false});
        return Ok(Report::new("verify", false, text, body));
    }
    let m = coefficients(s, c, "verify")?;
    // validate M before computing with it
    let m_report = check_bimodule(&m);
    if !m_report.all_hold() {
        return Err(usage(format!("coefficient bimodule fails its axioms:\n{m_report}")));
    }
    restrict_bimodule(&m, ext.b_basis())?;
    let r = verify_theorem(&ext, &m, n_max)?;
    let text = format!("{r}\n");
    let body = json!({
        "field": s.field.spec().to_string(),
        "is_galois": true,
        "max_degree": n_max,
        "h0_psi": r.h0_psi,
        "h0_B": r.h0_b,
        "h0_match": r.h0_match,
        "flat_left": r.flat_left,
        "flat_right": r.flat_right,
        "table_psi": table_json(&r.table_psi),
        "table_hh": table_json(&r.table_hh),
        "tables_match": r.tables_match,
    });
    Ok(Report::new("verify", r.passed(), text, body))
}

fn zoo(name: Option<&str>, emit: Option<&Path>) -> anyhow::Result<Report> {
    let Some(name) = name else {
        if emit.is_some() {
            return Err(usage("zoo: --emit needs an example name"));
        }
        let mut text = String::new();
        for e in EXAMPLES {
            writeln!(text, "{:<16} over {:<4} {}", e.name, e.field.to_string(), e.description)?;
        }
        let list: Vec<Value> = EXAMPLES
            .iter()
            .map(|e| json!({"name": e.name, "field": e.field.to_string(), "description": e.description}))
            .collect();
        return Ok(Report::new("zoo", true, text, json!({"examples": list})));
    };
    let ex = find_example(name).ok_or_else(|| {
        let names: Vec<&str> = EXAMPLES.iter().map(|e| e.name).collect();
        usage(format!("unknown example {name:?}; known: {}", names.join(", ")))
    })?;
    let doc = match ex.field {
        FieldSpec::Rationals => zoo_structure(name, Rationals)?,
        FieldSpec::Prime(p) => zoo_structure(name, PrimeField::new(p)?)?,
    };
    let file = doc.to_text();
    let mut text = format!("{}: {} (over {})\n", ex.name, ex.description, ex.field);
    if let Some(path) = emit {
        std::fs::write(path, &file).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        writeln!(text, "wrote {}", path.display())?;
    } else {
        text.push_str(&file);
    }
    let body = json!({
        "name": ex.name,
        "description": ex.description,
        "field": ex.field.to_string(),
        "emitted": emit.map(|p| p.display().to_string()),
        "structure": serde_json::to_value(&doc).expect("json"),
    });
    Ok(Report::new("zoo", true, text, body))
}

fn zoo_structure<F: Field>(name: &str, field: F) -> anyhow::Result<StructureDoc> {
    let ca = build_example(name, field.clone())?;
    Ok(Structure {
        algebra: Some(ca.algebra().clone()),
        coalgebra: Some(ca.coalgebra().clone()),
        coaction: Some(ca.coaction().clone()),
        ..Structure::empty(field)
    }
    .to_doc())
}

fn fuzz_report<F: Field>(field: &F, cfg: FuzzConfig) -> Report {
    let r: FuzzReport = run_fuzz(field, cfg);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "fuzz over {}: dims ({}, {}), {} trials, seed {}",
        field.spec(),
        cfg.dim_a,
        cfg.dim_c,
        cfg.trials,
        cfg.seed
    );
    let _ = writeln!(text, "Galois trials: {}", r.galois_trials);
    let _ = writeln!(text, "findings: {}", r.findings.len());
    for f in &r.findings {
        let _ = writeln!(text, "--- trial {}: {}", f.trial, f.message);
        text.push_str(&f.structure);
    }
    if let Some(d) = r.detected {
        let _ = writeln!(text, "perturbed entwinings flagged: {d} of {}", cfg.trials);
    }
    let body = json!({
        "field": field.spec().to_string(),
        "dim_a": cfg.dim_a,
        "dim_c": cfg.dim_c,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "perturb": cfg.perturb,
        "galois_trials": r.galois_trials,
        "findings": r.findings.iter().map(|f| json!({
            "trial": f.trial,
            "message": f.message,
            "structure": f.structure,
        })).collect::<Vec<_>>(),
        "detected": r.detected,
    });
    Report::new("fuzz", r.ok(), text, body)
}
