//! Command-line front end: parse inputs, run the computations, emit
//! reports as JSON or text.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a well-formed
//! but negative verdict (failed cocycle check, unsolvable system, invalid
//! character...), 2 for input or schema errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use catrep::algebra::{check_associativity, center_dimension, twisted_drinfeld_double};
use catrep::character::{basic_character, character_to_module, joint_trace, verify_character};
use catrep::cochain::{is_cocycle, Cochain};
use catrep::cohomology::{cohomology_invariants, solve_coboundary};
use catrep::error::Error as CoreError;
use catrep::format::{
    build_cochain, CharacterJson, CochainJson, CochainSpecJson, DecompositionReportJson,
    GroupJson, GroupoidCochainJson, LabelJson, StructureConstantsJson, TwoGroupInstanceJson,
};
use catrep::group::{enumerate_subgroups, load_group, FiniteGroup};
use catrep::inertia::{build_inertia, is_groupoid_2cocycle, transgress2, transgress3};
use catrep::modcat::{enumerate_indecomposables, induce, obstruction, verify_decomposition};
use catrep::scalar::{ModularEmbedding, Scalar};
use catrep::twogroup::{verify_hom, verify_modification, verify_transformation, TwoGroupModification};
use catrep::cochain::ExponentScalar;

#[derive(Parser)]
#[command(
    name = "catrep",
    about = "Cocycles on finite groups, inertia-groupoid transgression, twisted Drinfeld doubles, categorical characters and module-category labels",
    version
)]
struct Cli {
    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the JSON report to this path as well.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Coefficient modulus N (commands that need one and get no file).
    #[arg(long, global = true)]
    modulus: Option<u32>,

    /// Lift factor Q for coboundary solving; defaults to the group order.
    #[arg(long, global = true)]
    lift_factor: Option<u32>,

    /// Prime for the modular scalar embedding.
    #[arg(long, global = true)]
    prime: Option<u64>,

    /// Default seed for seeded random cochain specs that omit one.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for the verification scans (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a group (constructor string or JSON file) and summarize it.
    Group { group: String },
    /// Check the cocycle identity of a cochain file.
    CocycleCheck { cochain: PathBuf },
    /// Solve d(theta) = z over Z/(N*Q) for a cocycle file.
    CocycleSolve { cochain: PathBuf },
    /// Invariant factors of H^k(G, Z/N) for k = 1..3.
    Cohomology {
        group: String,
        /// Restrict to a single degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Transgress a degree-2 or degree-3 cochain to the inertia groupoid.
    Transgress { cochain: PathBuf },
    /// Build the twisted Drinfeld double of the cocycle's group.
    Double { alpha: PathBuf },
    /// Center dimension of the twisted Drinfeld double over F_p.
    DoubleCenter { alpha: PathBuf },
    /// Build the one-dimensional character family of a 2-cochain.
    CharacterBasic { theta: PathBuf },
    /// Verify a character file against a 3-cocycle file.
    CharacterVerify {
        character: PathBuf,
        alpha: PathBuf,
    },
    /// Joint trace (2-character) of a character file.
    JointTrace { character: PathBuf },
    /// Verify a two-group homomorphism, transformation or modification.
    TwogroupVerify { instance: PathBuf },
    /// Enumerate module-category labels (H, theta) up to equivalence.
    ModcatEnumerate { alpha: PathBuf },
    /// Induce a label file to the ambient group of a cocycle file.
    ModcatInduce { alpha: PathBuf, label: PathBuf },
    /// Verify a decomposition report against an expected simple count.
    ModcatVerify {
        alpha: PathBuf,
        report: PathBuf,
        #[arg(long)]
        expected_total: usize,
    },
}

/// Verdict-style outcome: exit 1 when `valid` is false.
struct Outcome {
    report: Value,
    valid: Option<bool>,
}

enum CliError {
    Input(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // ignore failure: the pool may already be initialized in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&outcome.report)
                    .expect("report serializes"),
                Format::Text => render_text(&outcome.report),
            };
            println!("{}", rendered);
            if let Some(path) = &cli.out {
                let body = serde_json::to_string_pretty(&outcome.report)
                    .expect("report serializes");
                if let Err(e) = fs::write(path, body + "\n") {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return ExitCode::from(2);
                }
            }
            match outcome.valid {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Group { group } => cmd_group(group),
        Command::CocycleCheck { cochain } => cmd_cocycle_check(cli, cochain),
        Command::CocycleSolve { cochain } => cmd_cocycle_solve(cli, cochain),
        Command::Cohomology { group, degree } => cmd_cohomology(cli, group, *degree),
        Command::Transgress { cochain } => cmd_transgress(cli, cochain),
        Command::Double { alpha } => cmd_double(cli, alpha),
        Command::DoubleCenter { alpha } => cmd_double_center(cli, alpha),
        Command::CharacterBasic { theta } => cmd_character_basic(cli, theta),
        Command::CharacterVerify { character, alpha } => {
            cmd_character_verify(cli, character, alpha)
        }
        Command::JointTrace { character } => cmd_joint_trace(cli, character),
        Command::TwogroupVerify { instance } => cmd_twogroup_verify(cli, instance),
        Command::ModcatEnumerate { alpha } => cmd_modcat_enumerate(cli, alpha),
        Command::ModcatInduce { alpha, label } => cmd_modcat_induce(cli, alpha, label),
        Command::ModcatVerify {
            alpha,
            report,
            expected_total,
        } => cmd_modcat_verify(cli, alpha, report, *expected_total),
    }
}

fn load_group_arg(arg: &str) -> Result<Arc<FiniteGroup>, CliError> {
    if let Ok(g) = load_group(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path)?;
        let j: GroupJson = serde_json::from_str(&text)?;
        return Ok(j.build()?);
    }
    Err(CliError::Input(format!(
        "'{}' is neither a group constructor nor a readable file",
        arg
    )))
}

fn load_cochain_file(cli: &Cli, path: &Path) -> Result<Cochain, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
    let mut spec: CochainSpecJson = serde_json::from_str(&text)?;
    inject_default_seed(&mut spec, cli.seed);
    Ok(build_cochain(&spec)?)
}

fn inject_default_seed(spec: &mut CochainSpecJson, seed: u64) {
    match spec {
        CochainSpecJson::Random { random } => {
            if random.seed.is_none() {
                random.seed = Some(seed);
            }
        }
        CochainSpecJson::Inflation { inflation } => {
            inject_default_seed(&mut inflation.inner, seed)
        }
        CochainSpecJson::External { external } => {
            inject_default_seed(&mut external.left, seed);
            inject_default_seed(&mut external.right, seed);
        }
        _ => {}
    }
}

fn lift_factor_for(cli: &Cli, group: &FiniteGroup) -> u32 {
    cli.lift_factor.unwrap_or(group.order() as u32)
}

fn cmd_group(arg: &str) -> Result<Outcome, CliError> {
    let g = load_group_arg(arg)?;
    let classes = g.conjugacy_classes();
    let mut report = base_report("group");
    report.insert("name".into(), json!(g.name()));
    report.insert("order".into(), json!(g.order()));
    report.insert("abelian".into(), json!(g.is_abelian()));
    report.insert("conjugacy_classes".into(), json!(classes.len()));
    if g.order() <= 24 {
        let subgroup_classes = enumerate_subgroups(&g, None)?;
        report.insert("subgroup_classes".into(), json!(subgroup_classes.len()));
        report.insert(
            "subgroups".into(),
            json!(subgroup_classes
                .iter()
                .map(|c| c.iter().map(|h| h.members().to_vec()).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
        );
    }
    Ok(Outcome {
        report: Value::Object(report),
        valid: None,
    })
}

fn cmd_cocycle_check(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let c = load_cochain_file(cli, path)?;
    let verdict = is_cocycle(&c)?;
    let mut report = base_report("cocycle-check");
    report.insert("degree".into(), json!(c.degree()));
    report.insert("modulus".into(), json!(c.modulus()));
    report.insert("group_order".into(), json!(c.group().order()));
    report.insert("normalized".into(), json!(c.is_normalized()));
    report.insert("valid".into(), json!(verdict.is_cocycle));
    report.insert("cocycle".into(), json!(verdict.is_cocycle));
    if let Some(w) = &verdict.witness {
        report.insert("witness".into(), json!(w));
    }
    Ok(Outcome {
        report: Value::Object(report),
        valid: Some(verdict.is_cocycle),
    })
}

fn cmd_cocycle_solve(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let z = load_cochain_file(cli, path)?;
    let q = lift_factor_for(cli, z.group());
    let solution = solve_coboundary(&z, q)?;
    let mut report = base_report("cocycle-solve");
    report.insert("lift_factor".into(), json!(q));
    report.insert("lifted_modulus".into(), json!(z.modulus() * q));
    match solution {
        Some(theta) => {
            report.insert("valid".into(), json!(true));
            report.insert(
                "theta".into(),
                serde_json::to_value(CochainJson::from_cochain(&theta))?,
            );
            Ok(Outcome {
                report: Value::Object(report),
                valid: Some(true),
            })
        }
        None => {
            report.insert("valid".into(), json!(false));
            report.insert("message".into(), json!("no coboundary witness"));
            Ok(Outcome {
                report: Value::Object(report),
                valid: Some(false),
            })
        }
    }
}

fn cmd_cohomology(cli: &Cli, group: &str, degree: Option<usize>) -> Result<Outcome, CliError> {
    let g = load_group_arg(group)?;
    let modulus = cli
        .modulus
        .ok_or_else(|| CliError::Input("--modulus is required for cohomology".into()))?;
    let degrees: Vec<usize> = match degree {
        Some(k) => vec![k],
        None => vec![1, 2, 3],
    };
    let mut invariants = Map::new();
    for k in degrees {
        match cohomology_invariants(&g, modulus, k) {
            Ok(f) => {
                invariants.insert(format!("H{}", k), json!(f));
            }
            Err(CoreError::ResourceBound(msg)) => {
                invariants.insert(format!("H{}", k), json!({ "skipped": msg }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut report = base_report("cohomology");
    report.insert("group".into(), json!(g.name()));
    report.insert("modulus".into(), json!(modulus));
    report.insert("invariants".into(), Value::Object(invariants));
    Ok(Outcome {
        report: Value::Object(report),
        valid: None,
    })
}

fn cmd_transgress(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let c = load_cochain_file(cli, path)?;
    let mut report = base_report("transgress");
    let inertia = build_inertia(Arc::clone(c.group()));
    report.insert("objects".into(), json!(inertia.object_count()));
    report.insert("arrows".into(), json!(inertia.arrow_count()));
    report.insert("components".into(), json!(inertia.components().len()));
    match c.degree() {
        2 => {
            let tau = transgress2(&c)?;
            report.insert(
                "transgression".into(),
                serde_json::to_value(GroupoidCochainJson::from_degree1(&tau))?,
            );
            Ok(Outcome {
                report: Value::Object(report),
                valid: None,
            })
        }
        3 => {
            let psi = transgress3(&c)?;
            let verdict = is_groupoid_2cocycle(&psi);
            report.insert("groupoid_cocycle".into(), json!(verdict.is_cocycle));
            report.insert(
                "transgression".into(),
                serde_json::to_value(GroupoidCochainJson::from_degree2(&psi))?,
            );
            Ok(Outcome {
                report: Value::Object(report),
                valid: Some(verdict.is_cocycle),
            })
        }
        d => Err(CliError::Input(format!(
            "transgression needs degree 2 or 3, got {}",
            d
        ))),
    }
}

fn cmd_double(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let alpha = load_cochain_file(cli, path)?;
    let g = Arc::clone(alpha.group());
    let sc = twisted_drinfeld_double(&g, &alpha)?;
    let assoc = check_associativity(&sc);
    let mut report = base_report("double");
    report.insert("group".into(), json!(g.name()));
    report.insert("dimension".into(), json!(sc.dim()));
    report.insert("modulus".into(), json!(sc.modulus()));
    report.insert("associative".into(), json!(assoc.is_associative));
    report.insert("valid".into(), json!(assoc.is_associative));
    report.insert(
        "structure_constants".into(),
        serde_json::to_value(StructureConstantsJson::from_structure_constants(&sc))?,
    );
    Ok(Outcome {
        report: Value::Object(report),
        valid: Some(assoc.is_associative),
    })
}

fn cmd_double_center(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let alpha = load_cochain_file(cli, path)?;
    let g = Arc::clone(alpha.group());
    let sc = twisted_drinfeld_double(&g, &alpha)?;
    let floor = (sc.dim() as u64) * sc.modulus() as u64;
    let primes: Vec<u64> = match cli.prime {
        Some(p) => vec![p],
        None => ModularEmbedding::admissible_primes(sc.modulus(), floor, 3),
    };
    let mut dims = Vec::new();
    for &p in &primes {
        let emb = ModularEmbedding::new(p, sc.modulus())?;
        dims.push(center_dimension(&sc, &emb)?);
    }
    let stable = dims.windows(2).all(|w| w[0] == w[1]);
    let mut report = base_report("double-center");
    report.insert("group".into(), json!(g.name()));
    report.insert("dimension".into(), json!(sc.dim()));
    report.insert("primes".into(), json!(primes));
    report.insert("center_dimensions".into(), json!(dims));
    report.insert("center_dimension".into(), json!(dims[0]));
    report.insert("valid".into(), json!(stable));
    Ok(Outcome {
        report: Value::Object(report),
        valid: Some(stable),
    })
}

fn cmd_character_basic(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let theta = load_cochain_file(cli, path)?;
    let g = Arc::clone(theta.group());
    let c = basic_character(&g, &theta)?;
    let mut report = base_report("character-basic");
    report.insert("group".into(), json!(g.name()));
    report.insert("total_dimension".into(), json!(c.total_dimension()));
    report.insert(
        "character".into(),
        serde_json::to_value(CharacterJson::from_character(&c))?,
    );
    Ok(Outcome {
        report: Value::Object(report),
        valid: None,
    })
}

fn cmd_character_verify(
    cli: &Cli,
    character_path: &Path,
    alpha_path: &Path,
) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(character_path)
        .map_err(|e| CliError::Input(format!("{}: {}", character_path.display(), e)))?;
    let cj: CharacterJson = serde_json::from_str(&text)?;
    let c = cj.to_character()?;
    let alpha = load_cochain_file(cli, alpha_path)?;
    let r = verify_character(&c, &alpha)?;
    let mut report = base_report("character-verify");
    report.insert("valid".into(), json!(r.valid));
    report.insert("checked".into(), json!(r.checked));
    report.insert("witnesses".into(), json!(r.witnesses));
    report.insert("invariant_failures".into(), json!(r.invariant_failures));
    Ok(Outcome {
        report: Value::Object(report),
        valid: Some(r.valid),
    })
}

fn scalar_to_json(modulus: u32, s: &Scalar) -> Value {
    match s {
        Scalar::Exact(c) => {
            for e in 0..modulus {
                if *c == catrep::scalar::CycInt::root_power(modulus, e) {
                    return json!({ "e": e });
                }
            }
            let z = c.to_complex();
            json!({ "re": z.re, "im": z.im })
        }
        Scalar::Float(z) => json!({ "re": z.re, "im": z.im }),
    }
}

fn cmd_joint_trace(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let _ = cli;
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
    let cj: CharacterJson = serde_json::from_str(&text)?;
    let c = cj.to_character()?;
    let chi = joint_trace(&c);
    let mut table = Map::new();
    for ((g, h), v) in &chi.entries {
        table.insert(format!("{},{}", g, h), scalar_to_json(c.modulus(), v));
    }
    let mut report = base_report("joint-trace");
    report.insert("commuting_pairs".into(), json!(chi.entries.len()));
    report.insert("table".into(), Value::Object(table));
    Ok(Outcome {
        report: Value::Object(report),
        valid: None,
    })
}

fn cmd_twogroup_verify(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let _ = cli;
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
    let instance: TwoGroupInstanceJson = serde_json::from_str(&text)?;
    let (kind, r) = match &instance {
        TwoGroupInstanceJson::Hom { hom } => {
            let h = hom.to_hom()?;
            ("hom", verify_hom(&h)?)
        }
        TwoGroupInstanceJson::Transformation {
            from,
            to,
            transformation,
        } => {
            let from = from.to_hom()?;
            let to = to.to_hom()?;
            let t = transformation.to_transformation(&from)?;
            ("transformation", verify_transformation(&t, &from, &to)?)
        }
        TwoGroupInstanceJson::Modification {
            from,
            to,
            t1,
            t2,
            omega,
        } => {
            let from = from.to_hom()?;
            let to = to.to_hom()?;
            let t1 = t1.to_transformation(&from)?;
            let t2 = t2.to_transformation(&from)?;
            let m = TwoGroupModification {
                omega: ExponentScalar::new(to.target.modulus(), *omega as i64),
            };
            ("modification", verify_modification(&m, &t1, &t2, &to)?)
        }
    };
    let mut report = base_report("twogroup-verify");
    report.insert("kind".into(), json!(kind));
    report.insert("valid".into(), json!(r.valid));
    report.insert("checked".into(), json!(r.checked));
    report.insert(
        "witnesses".into(),
        json!(r
            .witnesses
            .iter()
            .map(|w| json!({ "kind": w.kind, "tuple": w.tuple }))
            .collect::<Vec<_>>()),
    );
    Ok(Outcome {
        report: Value::Object(report),
        valid: Some(r.valid),
    })
}

fn cmd_modcat_enumerate(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let alpha = load_cochain_file(cli, path)?;
    let g = Arc::clone(alpha.group());
    let q = lift_factor_for(cli, &g);
    let labels = enumerate_indecomposables(&g, &alpha, q)?;
    let mut report = base_report("modcat-enumerate");
    report.insert("group".into(), json!(g.name()));
    report.insert("lift_factor".into(), json!(q));
    report.insert(
        "heuristic_note".into(),
        json!(format!(
            "theta classes computed at lift factor {}; equivalence uses a further lift by {}",
            q, q
        )),
    );
    report.insert("label_count".into(), json!(labels.len()));
    report.insert(
        "labels".into(),
        serde_json::to_value(
            labels
                .iter()
                .map(LabelJson::from_label)
                .collect::<Vec<_>>(),
        )?,
    );
    // obstruction summary per subgroup class
    let mut obstructions = Vec::new();
    for class in enumerate_subgroups(&g, Some(16))? {
        let h = &class[0];
        obstructions.push(json!({
            "subgroup": h.members(),
            "admits_label": obstruction(&alpha, h, q)?,
        }));
    }
    report.insert("subgroup_classes".into(), json!(obstructions));
    Ok(Outcome {
        report: Value::Object(report),
        valid: None,
    })
}

fn cmd_modcat_induce(cli: &Cli, alpha_path: &Path, label_path: &Path) -> Result<Outcome, CliError> {
    let alpha = load_cochain_file(cli, alpha_path)?;
    let g = Arc::clone(alpha.group());
    let q = lift_factor_for(cli, &g);
    let text = fs::read_to_string(label_path)
        .map_err(|e| CliError::Input(format!("{}: {}", label_path.display(), e)))?;
    let lj: LabelJson = serde_json::from_str(&text)?;
    let label = lj.to_label(&g)?;
    let descriptor = induce(&alpha, q, &label)?;
    let mut report = base_report("modcat-induce");
    report.insert("group".into(), json!(g.name()));
    report.insert("subgroup".into(), json!(label.subgroup.members()));
    report.insert("index".into(), json!(label.subgroup.index_in_parent()));
    report.insert("simple_count".into(), json!(descriptor.simple_count));
    report.insert(
        "label".into(),
        serde_json::to_value(LabelJson::from_label(&descriptor.label))?,
    );
    Ok(Outcome {
        report: Value::Object(report),
        valid: None,
    })
}

fn cmd_modcat_verify(
    cli: &Cli,
    alpha_path: &Path,
    report_path: &Path,
    expected_total: usize,
) -> Result<Outcome, CliError> {
    let alpha = load_cochain_file(cli, alpha_path)?;
    let g = Arc::clone(alpha.group());
    let q = lift_factor_for(cli, &g);
    let text = fs::read_to_string(report_path)
        .map_err(|e| CliError::Input(format!("{}: {}", report_path.display(), e)))?;
    let rj: DecompositionReportJson = serde_json::from_str(&text)?;
    let decomposition = rj.to_report(&g)?;
    let verdict = verify_decomposition(&alpha, q, &decomposition, expected_total)?;
    let mut report = base_report("modcat-verify");
    report.insert("expected_total".into(), json!(expected_total));
    report.insert("total".into(), json!(verdict.total));
    report.insert("invalid_items".into(), json!(verdict.invalid_items));
    report.insert("valid".into(), json!(verdict.valid));
    Ok(Outcome {
        report: Value::Object(report),
        valid: Some(verdict.valid),
    })
}

fn base_report(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m
}

/// Plain-text rendering: one line per top-level key, nested values as JSON.
fn render_text(report: &Value) -> String {
    let Value::Object(map) = report else {
        return report.to_string();
    };
    let mut lines = Vec::new();
    for (k, v) in map {
        match v {
            Value::String(s) => lines.push(format!("{}: {}", k, s)),
            Value::Bool(b) => lines.push(format!("{}: {}", k, b)),
            Value::Number(n) => lines.push(format!("{}: {}", k, n)),
            other => {
                let compact = serde_json::to_string(other).unwrap_or_default();
                if compact.len() <= 100 {
                    lines.push(format!("{}: {}", k, compact));
                } else {
                    lines.push(format!("{}: ({} bytes of JSON)", k, compact.len()));
                }
            }
        }
    }
    lines.join("\n")
}
