use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use quiverkit::analysis::{classify, gentle_profile, gorenstein_dimension, singularity_invariants};
use quiverkit::angulation::{
    quiver_document_from_angulation, verify_angulation_properties, Angulation, AngulationError,
};
use quiverkit::module::{Algebra, EngineConfig, Isomorphism, ModuleError, WalkError};
use quiverkit::suites::{self, Candidate};
use quiverkit::{BoundQuiver, QuiverError};

mod report;
mod specifier;

use specifier::ModuleSpec;

/// Bad input: exit status 2.
#[derive(Debug)]
pub struct Invalid(pub String);

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Invalid {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Human,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GpMethod {
    Kalck,
    Ext,
    OmegaTau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleOp {
    Tau,
    Syzygy,
    Top,
    Radical,
    Socle,
    Ext,
    Iso,
}

/// Gorenstein and 2-Calabi-Yau tilted analysis of monomial bound quiver algebras.
#[derive(Debug, Parser)]
#[command(name = "quiverkit", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Seed for randomized isomorphism tests.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on enumerations: nonzero paths and string length.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full structural report of a quiver document.
    Analyze { path: PathBuf },
    /// The 2-CY tilted classification only.
    Classify { path: PathBuf },
    /// Gorenstein-projective indecomposables.
    Gp {
        path: PathBuf,
        #[arg(long, value_enum)]
        method: GpMethod,
        /// Gorenstein dimension to test against; defaults to the computed one.
        #[arg(long)]
        m: Option<usize>,
        /// Run every applicable method and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// A module-calculus operation.
    #[command(group(ArgGroup::new("base").required(true).args(["string", "simple", "proj", "inj", "module"])))]
    Module {
        path: PathBuf,
        #[arg(long)]
        string: Option<String>,
        #[arg(long)]
        simple: Option<String>,
        #[arg(long)]
        proj: Option<String>,
        #[arg(long)]
        inj: Option<String>,
        /// A specifier such as "omega^3 tau string:epsilon".
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_enum)]
        op: ModuleOp,
        /// Second module for ext and iso; ext defaults to the regular module.
        #[arg(long)]
        with: Option<String>,
        /// Power of the syzygy.
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Degree of Ext.
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Bound quiver of an (m+2)-angulation.
    Angulate {
        path: PathBuf,
        /// Also write the quiver document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Property suites; exit status 3 when a property fails.
    Verify {
        path: PathBuf,
        /// Required for quiver documents to run the angulation checks.
        #[arg(long)]
        m: Option<usize>,
    },
}

struct Outcome {
    report: Map<String, Value>,
    dot: Option<String>,
    code: u8,
}

impl Outcome {
    fn ok(report: Map<String, Value>) -> Outcome {
        Outcome {
            report,
            dot: None,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut header = None;
    match run(&cli, &mut header) {
        Ok(mut outcome) => {
            outcome
                .report
                .insert("exit_status".into(), json!(outcome.code));
            emit(&cli, &outcome.report, outcome.dot.as_deref());
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("error: {e:#}");
            if let Some(mut report) = header {
                let kind = if code == 2 { "validation" } else { "internal" };
                report.insert(
                    "error".into(),
                    json!({"kind": kind, "messages": messages(&e)}),
                );
                report.insert("exit_status".into(), json!(code));
                emit(&cli, &report, None);
            }
            ExitCode::from(code)
        }
    }
}

fn emit(cli: &Cli, report: &Map<String, Value>, dot: Option<&str>) {
    let value = Value::Object(report.clone());
    let text = match (cli.format, dot) {
        (Format::Dot, Some(d)) => d.to_string(),
        (Format::Human, _) => report::human(&value),
        _ => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn messages(e: &anyhow::Error) -> Vec<String> {
    for cause in e.chain() {
        if let Some(QuiverError::Validation(vs)) = cause.downcast_ref::<QuiverError>() {
            return vs.iter().map(ToString::to_string).collect();
        }
        if let Some(AngulationError::Validation(vs)) = cause.downcast_ref::<AngulationError>() {
            return vs.clone();
        }
    }
    vec![format!("{e:#}")]
}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<Invalid>()
            || cause.is::<QuiverError>()
            || cause.is::<AngulationError>()
            || cause.is::<WalkError>()
            || cause.is::<serde_json::Error>()
            || cause.is::<std::io::Error>()
        {
            return 2;
        }
        if let Some(m) = cause.downcast_ref::<ModuleError>() {
            return match m {
                ModuleError::Quiver(_)
                | ModuleError::InvalidWalk(_)
                | ModuleError::UnknownVertex(_)
                | ModuleError::ProjectiveSummand(_)
                | ModuleError::NotGentle
                | ModuleError::NotGorensteinProjective
                | ModuleError::Shape { .. }
                | ModuleError::RelationViolated(_) => 2,
                ModuleError::ResolutionDepthExceeded { .. } => 1,
            };
        }
    }
    1
}

fn config(cli: &Cli) -> EngineConfig {
    let mut c = EngineConfig::default();
    if let Some(s) = cli.seed {
        c.seed = s;
    }
    if let Some(cap) = cli.cap {
        c.path_cap = cap;
    }
    c
}

fn read(path: &PathBuf, command: &str, header: &mut Option<Map<String, Value>>) -> Result<String> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    *header = Some(report::envelope(
        command,
        &path.display().to_string(),
        &bytes,
    ));
    String::from_utf8(bytes)
        .map_err(|_| anyhow!(Invalid(format!("{} is not UTF-8", path.display()))))
}

fn load_algebra(text: &str, config: &EngineConfig) -> Result<(BoundQuiver, Algebra)> {
    let bq = BoundQuiver::parse_json(text)?;
    let alg = Algebra::with_config(bq.clone(), config.clone())?;
    Ok((bq, alg))
}

fn run(cli: &Cli, header: &mut Option<Map<String, Value>>) -> Result<Outcome> {
    let config = config(cli);
    match &cli.command {
        Command::Analyze { path } => {
            let text = read(path, "analyze", header)?;
            let (bq, alg) = load_algebra(&text, &config)?;
            let mut r = header.clone().unwrap();
            let profile = gentle_profile(&bq);
            let c = classify(&bq, &config);
            r.insert("quiver".into(), report::quiver(&bq));
            r.insert("gentle".into(), report::gentle(&bq, &profile));
            r.insert(
                "gorenstein_dimension".into(),
                report::gorenstein(&c.gorenstein),
            );
            r.insert(
                "global_dimension".into(),
                json!(alg.global_dimension().to_string()),
            );
            r.insert(
                "singularity_invariants".into(),
                match &c.decomposition {
                    Ok(d) => report::invariants(&singularity_invariants(d)),
                    Err(_) => Value::Null,
                },
            );
            r.insert("classification".into(), report::classification(&bq, &c));
            Ok(Outcome {
                report: r,
                dot: Some(bq.to_dot()),
                code: 0,
            })
        }
        Command::Classify { path } => {
            let text = read(path, "classify", header)?;
            let (bq, _) = load_algebra(&text, &config)?;
            let mut r = header.clone().unwrap();
            r.insert(
                "classification".into(),
                report::classification(&bq, &classify(&bq, &config)),
            );
            Ok(Outcome::ok(r))
        }
        Command::Gp {
            path,
            method,
            m,
            cross_check,
        } => {
            let text = read(path, "gp", header)?;
            let (bq, alg) = load_algebra(&text, &config)?;
            let mut r = header.clone().unwrap();
            cmd_gp(cli, &bq, &alg, *method, *m, *cross_check, &mut r)
        }
        Command::Module {
            path,
            string,
            simple,
            proj,
            inj,
            module,
            op,
            with,
            power,
            degree,
        } => {
            let text = read(path, "module", header)?;
            let (_, alg) = load_algebra(&text, &config)?;
            let spec = match (string, simple, proj, inj, module) {
                (Some(w), ..) => format!("string:{w}"),
                (_, Some(x), ..) => format!("simple:{x}"),
                (_, _, Some(x), ..) => format!("proj:{x}"),
                (_, _, _, Some(x), _) => format!("inj:{x}"),
                (.., Some(s)) => s.clone(),
                _ => bail!(Invalid("no module given".into())),
            };
            let mut r = header.clone().unwrap();
            cmd_module(&alg, &spec, *op, with.as_deref(), *power, *degree, &mut r)?;
            Ok(Outcome::ok(r))
        }
        Command::Angulate { path, out } => {
            let text = read(path, "angulate", header)?;
            let t = Angulation::parse_json(&text)?;
            let doc = quiver_document_from_angulation(&t);
            let mut r = header.clone().unwrap();
            r.insert("m".into(), json!(t.m()));
            r.insert("quiver".into(), serde_json::to_value(&doc)?);
            let mut dot = None;
            if doc.vertices.is_empty() {
                r.insert("properties".into(), Value::Null);
            } else {
                let bq = BoundQuiver::from_document(&doc)?;
                let props = match verify_angulation_properties(&bq, t.m(), &config) {
                    Ok(p) => json!({"holds": true, "report": p}),
                    Err(v) => json!({"holds": false, "violation": v.to_string()}),
                };
                r.insert("properties".into(), props);
                dot = Some(bq.to_dot());
            }
            if let Some(out) = out {
                let json = serde_json::to_string_pretty(&doc)? + "\n";
                std::fs::write(out, json).with_context(|| format!("writing {}", out.display()))?;
            }
            Ok(Outcome {
                report: r,
                dot,
                code: 0,
            })
        }
        Command::Verify { path, m } => {
            let text = read(path, "verify", header)?;
            let mut r = header.clone().unwrap();
            cmd_verify(cli, &text, *m, &config, &mut r)
        }
    }
}

fn label_set(cands: &[Candidate]) -> BTreeSet<String> {
    cands.iter().map(|c| c.label.clone()).collect()
}

fn gp_entry(alg: &Algebra, c: &Candidate) -> Value {
    json!({
        "module": c.label,
        "dimension_vector": alg.format_dims(&c.module),
    })
}

fn cmd_gp(
    cli: &Cli,
    bq: &BoundQuiver,
    alg: &Algebra,
    method: GpMethod,
    m: Option<usize>,
    cross_check: bool,
    r: &mut Map<String, Value>,
) -> Result<Outcome> {
    let gorenstein = gorenstein_dimension(bq, alg.config());
    let d = match (&gorenstein, m) {
        (_, Some(m)) => Some(m),
        (Ok(g), None) => Some(g.value),
        (Err(_), None) => None,
    };
    let (cands, partial) = alg.module_candidates(cli.cap);
    let kalck = || -> Result<Vec<Candidate>> {
        let walks = alg
            .kalck_gp_modules()
            .map_err(|e| Invalid(format!("method kalck is inapplicable: {e}")))?;
        Ok(walks.iter().map(|w| alg.string_candidate(w)).collect())
    };
    let homological = |omega_tau: bool| -> Result<(Vec<Candidate>, Vec<Candidate>)> {
        let Some(d) = d else {
            let why = gorenstein
                .as_ref()
                .err()
                .map(ToString::to_string)
                .unwrap_or_default();
            bail!(Invalid(format!("no Gorenstein certificate: {why}")));
        };
        let mut gp = Vec::new();
        let mut projective = Vec::new();
        for c in &cands {
            if alg.is_projective(&c.module) {
                projective.push(c.clone());
                continue;
            }
            let holds = if omega_tau {
                alg.omega_tau_test(&c.module, d)
            } else {
                alg.gp_membership_exact(&c.module, d)?
            };
            if holds {
                gp.push(c.clone());
            }
        }
        Ok((gp, projective))
    };
    let name = |m: GpMethod| match m {
        GpMethod::Kalck => "kalck",
        GpMethod::Ext => "ext",
        GpMethod::OmegaTau => "omega-tau",
    };
    let (gp, projective) = match method {
        GpMethod::Kalck => (kalck()?, None),
        GpMethod::Ext => {
            let (g, p) = homological(false)?;
            (g, Some(p))
        }
        GpMethod::OmegaTau => {
            let (g, p) = homological(true)?;
            (g, Some(p))
        }
    };
    r.insert("method".into(), json!(name(method)));
    r.insert("m".into(), json!(d));
    if method != GpMethod::Kalck {
        r.insert(
            "candidates".into(),
            json!({"count": cands.len(), "complete": !partial}),
        );
    }
    r.insert("count".into(), json!(gp.len()));
    r.insert(
        "gorenstein_projective".into(),
        json!(gp.iter().map(|c| gp_entry(alg, c)).collect::<Vec<_>>()),
    );
    if let Some(p) = &projective {
        r.insert(
            "projective".into(),
            json!(p.iter().map(|c| c.label.clone()).collect::<Vec<_>>()),
        );
    }
    let mut code = 0;
    if cross_check {
        let mut results = Map::new();
        let mut sets = Vec::new();
        let mut run_method = |m: GpMethod, set: BTreeSet<String>| {
            results.insert(name(m).into(), json!(set.iter().collect::<Vec<_>>()));
            sets.push(set);
        };
        if gentle_profile(bq).is_gentle {
            let k = kalck()?;
            run_method(GpMethod::Kalck, label_set(&k));
        }
        if d.is_some() {
            for (m, omega_tau) in [(GpMethod::Ext, false), (GpMethod::OmegaTau, true)] {
                let (g, _) = homological(omega_tau)?;
                run_method(m, label_set(&g));
            }
        }
        let agree = sets.windows(2).all(|w| w[0] == w[1]);
        r.insert(
            "cross_check".into(),
            json!({"agree": agree, "methods": results}),
        );
        if !agree {
            eprintln!("error: GP methods disagree");
            code = 1;
        }
    }
    Ok(Outcome {
        report: std::mem::take(r),
        dot: None,
        code,
    })
}

fn cmd_module(
    alg: &Algebra,
    spec: &str,
    op: ModuleOp,
    with: Option<&str>,
    power: usize,
    degree: usize,
    r: &mut Map<String, Value>,
) -> Result<()> {
    let m = ModuleSpec::parse(spec)?.build(alg)?;
    r.insert(
        "module".into(),
        json!({"spec": spec, "value": report::module(alg, &m)}),
    );
    let other = with
        .map(|s| ModuleSpec::parse(s).and_then(|p| p.build(alg)))
        .transpose()?;
    let (name, result) = match op {
        ModuleOp::Tau => ("tau", report::module(alg, &alg.tau(&m)?)),
        ModuleOp::Syzygy => ("syzygy", report::module(alg, &alg.syzygy_power(&m, power))),
        ModuleOp::Top => ("top", report::module(alg, &alg.top(&m).0)),
        ModuleOp::Radical => ("radical", report::module(alg, &alg.radical(&m).0)),
        ModuleOp::Socle => ("socle", report::module(alg, &alg.socle(&m).0)),
        ModuleOp::Ext => {
            let n = other.unwrap_or_else(|| alg.regular());
            let dim = alg.ext_dim(&m, &n, degree)?;
            (
                "ext",
                json!({"degree": degree, "with": with.unwrap_or("regular"), "dim": dim}),
            )
        }
        ModuleOp::Iso => {
            let n = other.ok_or_else(|| Invalid("--op iso needs --with".into()))?;
            let outcome = alg.is_isomorphic(&m, &n);
            let kind = match outcome {
                Isomorphism::Certificate(_) => "certificate",
                Isomorphism::NotIsomorphic => "not_isomorphic",
                Isomorphism::ProbablyNot => "probably_not",
            };
            (
                "iso",
                json!({
                    "with": with,
                    "other": report::module(alg, &n),
                    "isomorphic": outcome.holds(),
                    "evidence": kind,
                }),
            )
        }
    };
    if name == "syzygy" {
        r.insert("power".into(), json!(power));
    }
    r.insert("op".into(), json!(name));
    r.insert("result".into(), result);
    Ok(())
}

fn check(name: &str, witnesses: Vec<String>) -> Value {
    json!({"name": name, "holds": witnesses.is_empty(), "witnesses": witnesses})
}

fn cmd_verify(
    cli: &Cli,
    text: &str,
    m: Option<usize>,
    config: &EngineConfig,
    r: &mut Map<String, Value>,
) -> Result<Outcome> {
    let raw: Value = serde_json::from_str(text)?;
    let (bq, m) = if raw.get("faces").is_some() {
        let t = Angulation::parse_json(text)?;
        if m.is_some_and(|m| m != t.m()) {
            bail!(Invalid(format!(
                "--m disagrees with the document's m = {}",
                t.m()
            )));
        }
        let doc = quiver_document_from_angulation(&t);
        (BoundQuiver::from_document(&doc)?, Some(t.m()))
    } else {
        (BoundQuiver::parse_json(text)?, m)
    };
    let alg = Algebra::with_config(bq.clone(), config.clone())?;
    let (cands, partial) = alg.module_candidates(cli.cap);
    let mut checks = Vec::new();
    if let Some(m) = m {
        let props = verify_angulation_properties(&bq, m, config);
        let prop_ok = props.is_ok();
        checks.push(check(
            "angulation_properties",
            props.err().map(|v| v.to_string()).into_iter().collect(),
        ));
        if prop_ok {
            let disc = suites::gp_equivalence(&alg, m, &cands)?;
            checks.push(check(
                "gp_criteria_agree",
                disc.iter()
                    .map(|d| {
                        format!(
                            "{}: omega-tau {}, ext {}, kalck {}",
                            d.label,
                            d.omega_tau,
                            d.ext,
                            d.kalck.map_or("-".to_string(), |k| k.to_string())
                        )
                    })
                    .collect(),
            ));
        }
    }
    checks.push(check("nakayama", suites::nakayama_check(&alg)));
    checks.push(check(
        "syzygy_bookkeeping",
        suites::syzygy_bookkeeping(&alg, &cands),
    ));
    checks.push(check(
        "relation_compliance",
        suites::relation_compliance(&alg, &cands),
    ));
    let failed = checks.iter().any(|c| c["holds"] == json!(false));
    r.insert("m".into(), json!(m));
    r.insert(
        "candidates".into(),
        json!({"count": cands.len(), "complete": !partial}),
    );
    r.insert("checks".into(), Value::Array(checks));
    r.insert("holds".into(), json!(!failed));
    if failed {
        eprintln!("error: a property check failed");
    }
    Ok(Outcome {
        report: std::mem::take(r),
        dot: None,
        code: if failed { 3 } else { 0 },
    })
}
