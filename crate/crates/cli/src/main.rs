mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nalg::catalog::{self, FamilyId, FamilyTag};
use nalg::deformation::{self, TruncatedDeformation};
use nalg::format::{self, PairDocument};
use nalg::identity::{self, IdentityKind, IdentityReport};
use nalg::polar;
use nalg::scalar::parse_scalar;
use nalg::structure::{self, Subspace};
use nalg::Algebra;
use serde_json::{json, Value};

use render::{
    header_json, header_text, report_json, subspace_json, subspace_text, to_pretty, witness_json, witness_text,
};

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(name = "nalg", version, about = "Exact checks for nonassociative algebras given by structure constants")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities on an algebra file (all basic kinds if none given).
    Check {
        file: PathBuf,
        #[arg(long = "identity", short = 'i', value_name = "KIND")]
        identities: Vec<String>,
    },
    /// Report centers, derived subalgebra, product span, grading and the
    /// polarization verdict.
    Analyze { file: PathBuf },
    /// Split an algebra into its commutative part and bracket.
    Polarize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recombine a pair file into an algebra.
    Depolarize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List or build catalog algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Expand both symmetric Leibniz identities of a truncated deformation.
    Deform {
        base: PathBuf,
        #[arg(long = "phi", value_name = "FILE")]
        phis: Vec<PathBuf>,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Check the Poisson conclusions for an order-1 deformation direction.
    #[command(name = "verify-deformation", alias = "verify-theorem5")]
    VerifyDeformation {
        base: PathBuf,
        #[arg(long)]
        phi: PathBuf,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Build {
        tag: String,
        #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_param)]
        params: Vec<(String, String)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected NAME=VALUE, got {s:?}"))
}

enum CheckKind {
    Basic(IdentityKind),
    CommutatorDerivation,
    FourABullet,
    PoissonDepolarized,
    NonassociativePoisson,
    Poisson,
    CenterContainments,
    Structure,
}

const EXTRA_KINDS: [&str; 7] = [
    "commutator_derivation",
    "four_a_bullet",
    "poisson_depolarized",
    "nonassociative_poisson",
    "poisson",
    "center_containments",
    "structure",
];

impl CheckKind {
    fn parse(name: &str) -> CliResult<Self> {
        if let Ok(kind) = name.parse::<IdentityKind>() {
            return Ok(CheckKind::Basic(kind));
        }
        Ok(match name {
            "commutator_derivation" => CheckKind::CommutatorDerivation,
            "four_a_bullet" => CheckKind::FourABullet,
            "poisson_depolarized" => CheckKind::PoissonDepolarized,
            "nonassociative_poisson" => CheckKind::NonassociativePoisson,
            "poisson" => CheckKind::Poisson,
            "center_containments" => CheckKind::CenterContainments,
            "structure" => CheckKind::Structure,
            _ => {
                let known: Vec<&str> = IdentityKind::ALL
                    .iter()
                    .map(|k| k.name())
                    .chain(EXTRA_KINDS)
                    .collect();
                return Err(format!("unknown identity kind {name:?} (known: {})", known.join(", ")).into());
            }
        })
    }

    fn run(&self, a: &Algebra) -> IdentityReport {
        match self {
            CheckKind::Basic(kind) => identity::check_identity(a, *kind),
            CheckKind::CommutatorDerivation => identity::check_commutator_derivation(a),
            CheckKind::FourABullet => identity::four_a_bullet_identity_check(a),
            CheckKind::PoissonDepolarized => identity::poisson_depolarized_identity(a),
            CheckKind::NonassociativePoisson => polar::is_nonassociative_poisson(&polar::polarize(a)),
            CheckKind::Poisson => polar::is_poisson(&polar::polarize(a)),
            CheckKind::CenterContainments => structure::check_center_containments(a),
            CheckKind::Structure => {
                let v = structure::structure_verdict(a);
                IdentityReport::new("structure", v.witness)
            }
        }
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

fn emit(json_mode: bool, value: Value, text: String) {
    if json_mode {
        print!("{}", to_pretty(&value));
    } else {
        print!("{text}");
    }
}

fn check(json_mode: bool, file: &Path, identities: &[String]) -> CliResult<bool> {
    let a = format::read_algebra(file)?;
    let kinds: Vec<CheckKind> = if identities.is_empty() {
        IdentityKind::ALL.into_iter().map(CheckKind::Basic).collect()
    } else {
        identities.iter().map(|s| CheckKind::parse(s)).collect::<CliResult<_>>()?
    };
    let reports: Vec<IdentityReport> = kinds.iter().map(|k| k.run(&a)).collect();
    let all = reports.iter().all(IdentityReport::holds);
    let path = display(file);
    let mut text = header_text(&path, &a);
    for r in &reports {
        text.push_str(&r.describe(None));
        text.push('\n');
    }
    let mut value = header_json(&path, &a);
    value["reports"] = reports.iter().map(report_json).collect();
    value["holds"] = Value::Bool(all);
    emit(json_mode, value, text);
    Ok(all)
}

fn analyze(json_mode: bool, file: &Path) -> CliResult<bool> {
    let a = format::read_algebra(file)?;
    let p = polar::polarize(&a);
    let summary: Vec<IdentityReport> = [
        IdentityKind::Commutative,
        IdentityKind::Skew,
        IdentityKind::Associative,
        IdentityKind::WeaklyAssociative,
        IdentityKind::SymmetricLeibniz,
        IdentityKind::LieAdmissible,
    ]
    .into_iter()
    .map(|k| identity::check_identity(&a, k))
    .collect();
    let spaces: Vec<(&str, Subspace)> = vec![
        ("center", structure::center_of(a.mult())),
        ("bullet_center", structure::center_of(p.bullet())),
        ("bracket_center", structure::center_of(p.bracket())),
        ("bullet_products", structure::product_span(p.bullet())),
        ("derived", structure::derived_subalgebra(p.bracket())?),
    ];
    let graded = structure::graded_basis(&a).ok();
    let verdict = structure::structure_verdict(&a);
    let containments = structure::check_center_containments(&a);

    let path = display(file);
    let mut text = header_text(&path, &a);
    text.push_str("identities:\n");
    for r in &summary {
        text.push_str(&format!("  {}\n", r.describe(None)));
    }
    text.push_str("subspaces:\n");
    for (name, s) in &spaces {
        text.push_str(&format!("  {name}: {}\n", subspace_text(s)));
    }
    match &graded {
        Some(g) => text.push_str(&format!(
            "grading: A1 {}; A2 {}\n",
            subspace_text(&g.part1),
            subspace_text(&g.part2)
        )),
        None => text.push_str("grading: none (commutative part is not two-step nilpotent)\n"),
    }
    text.push_str("polarization:\n");
    for (name, flag) in verdict.flags() {
        text.push_str(&format!("  {name}: {flag}\n"));
    }
    text.push_str(&format!("  symmetric_leibniz: {}\n", verdict.is_symmetric_leibniz));
    let verdict_report = IdentityReport::new("structure", verdict.witness.clone());
    if !verdict_report.holds() {
        text.push_str(&format!("  {}\n", verdict_report.describe(None)));
    }
    text.push_str(&format!("{}\n", containments.describe(None)));

    let mut value = header_json(&path, &a);
    value["identities"] = summary.iter().map(report_json).collect();
    value["subspaces"] = spaces
        .iter()
        .map(|(name, s)| (name.to_string(), subspace_json(s)))
        .collect::<serde_json::Map<_, _>>()
        .into();
    value["grading"] = match &graded {
        Some(g) => json!({ "A1": subspace_json(&g.part1), "A2": subspace_json(&g.part2) }),
        None => Value::Null,
    };
    let mut flags = serde_json::Map::new();
    for (name, flag) in verdict.flags() {
        flags.insert(name.to_string(), Value::Bool(flag));
    }
    flags.insert("symmetric_leibniz".into(), Value::Bool(verdict.is_symmetric_leibniz));
    value["polarization"] = Value::Object(flags);
    value["structure"] = report_json(&verdict_report);
    value["center_containments"] = report_json(&containments);
    emit(json_mode, value, text);
    Ok(true)
}

fn write_or_print(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn polarize(file: &Path, output: Option<&Path>) -> CliResult<bool> {
    let a = format::read_algebra(file)?;
    let doc = PairDocument {
        pair: polar::polarize(&a),
        label: a.label().map(str::to_string),
        names: a.names().map(<[String]>::to_vec),
    };
    write_or_print(output, &format::pair_to_json(&doc))?;
    Ok(true)
}

fn depolarize(file: &Path, output: Option<&Path>) -> CliResult<bool> {
    let doc = format::read_pair(file)?;
    let mut a = polar::depolarize(&doc.pair);
    if let Some(label) = doc.label {
        a = a.with_label(label);
    }
    if let Some(names) = doc.names {
        a = a.with_names(names);
    }
    write_or_print(output, &format::algebra_to_json(&a))?;
    Ok(true)
}

fn catalog_list(json_mode: bool) -> CliResult<bool> {
    let mut text = String::new();
    let mut entries = Vec::new();
    for tag in FamilyTag::ALL {
        let params: Vec<String> = tag.params().iter().map(|(n, d)| format!("{n}={d}")).collect();
        text.push_str(&format!(
            "{:<12} dim {}  basis {}  params [{}]\n    {}\n",
            tag.name(),
            tag.dim(),
            tag.basis_names().join(","),
            params.join(", "),
            tag.description()
        ));
        entries.push(json!({
            "tag": tag.name(),
            "dim": tag.dim(),
            "names": tag.basis_names(),
            "params": tag.params().iter().map(|(n, d)| json!({"name": n, "default": d.to_string()})).collect::<Vec<_>>(),
            "description": tag.description(),
        }));
    }
    emit(json_mode, Value::Array(entries), text);
    Ok(true)
}

fn catalog_build(tag: &str, params: &[(String, String)], output: Option<&Path>) -> CliResult<bool> {
    let tag: FamilyTag = tag.parse()?;
    let mut id = FamilyId::new(tag);
    for (name, value) in params {
        id.set(name, parse_scalar(value)?)?;
    }
    let a = catalog::build(&id)?;
    write_or_print(output, &format::algebra_to_json(&a))?;
    Ok(true)
}

fn deform(json_mode: bool, base: &Path, phis: &[PathBuf], order: usize) -> CliResult<bool> {
    let algebra = format::read_algebra(base)?;
    let maps = phis
        .iter()
        .map(|p| Ok(format::read_algebra(p)?.into_mult()))
        .collect::<CliResult<Vec<_>>>()?;
    let d = TruncatedDeformation::new(algebra, maps, order)?;
    let report = deformation::truncated_identity_check(&d);

    let mut text = format!("base: {} (dim {})\n", display(base), d.dim());
    for (k, p) in phis.iter().enumerate() {
        text.push_str(&format!("phi{}: {}\n", k + 1, display(p)));
    }
    text.push_str(&format!("order: {order}\n"));
    let mut degrees = Vec::new();
    for deg in &report.degrees {
        let witness = deg.witness().map(|(_, w)| w);
        let line = witness.as_ref().map_or_else(|| "holds".to_string(), witness_text);
        text.push_str(&format!("t^{}: {line}\n", deg.degree));
        degrees.push(json!({
            "degree": deg.degree,
            "holds": deg.holds(),
            "witness": witness.as_ref().map(witness_json),
        }));
    }
    let summary = report.summary();
    text.push_str(&format!("{}\n", summary.describe(None)));
    let value = json!({
        "base": display(base),
        "phis": phis.iter().map(|p| display(p)).collect::<Vec<_>>(),
        "order": order,
        "degrees": degrees,
        "first_failing_degree": report.first_failing_degree(),
        "summary": report_json(&summary),
    });
    emit(json_mode, value, text);
    Ok(report.holds())
}

fn verify_deformation(json_mode: bool, base: &Path, phi: &Path) -> CliResult<bool> {
    let algebra = format::read_algebra(base)?;
    let phi1 = format::read_algebra(phi)?.into_mult();
    let report = deformation::verify_deformation_theorem(&algebra, &phi1)?;
    let mut text = format!("base: {} (dim {})\nphi1: {}\n", display(base), algebra.dim(), display(phi));
    for r in report.parts() {
        text.push_str(&format!("{}\n", r.describe(None)));
    }
    let value = json!({
        "base": display(base),
        "phi1": display(phi),
        "reports": report.parts().iter().map(|r| report_json(r)).collect::<Vec<_>>(),
        "holds": report.holds(),
    });
    emit(json_mode, value, text);
    Ok(report.holds())
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("NALG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("NALG_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<bool> {
    configure_threads()?;
    let json_mode = cli.json;
    match cli.command {
        Command::Check { file, identities } => check(json_mode, &file, &identities),
        Command::Analyze { file } => analyze(json_mode, &file),
        Command::Polarize { file, output } => polarize(&file, output.as_deref()),
        Command::Depolarize { file, output } => depolarize(&file, output.as_deref()),
        Command::Catalog { action } => match action {
            CatalogAction::List => catalog_list(json_mode),
            CatalogAction::Build { tag, params, output } => catalog_build(&tag, &params, output.as_deref()),
        },
        Command::Deform { base, phis, order } => deform(json_mode, &base, &phis, order),
        Command::VerifyDeformation { base, phi } => verify_deformation(json_mode, &base, &phi),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
