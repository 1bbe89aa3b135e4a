//! CLI for constructing, decomposing and analyzing quasi group codes.
//!
//! Exit codes: 0 success, 2 validation error, 3 verification failure.

use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qgc::config::{field_spec_string, write_bundle, Bundle, JobConfig};
use qgc::{
    griesmer_max_d, selfdual_construct, selfdual_exists, selfdual_violation, verify_module,
    BlockRing, DistanceOptions, Field, FiniteGroup, GroupAlgebra, LinearCode, Strategy,
};

#[derive(Parser)]
#[command(name = "qgc", about = "quasi group codes: blocks, concatenation, self-duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DistanceArgs {
    /// Distance method: auto, exhaustive, information-set, upper-sample
    #[arg(long, default_value = "auto")]
    method: String,
    /// Worker threads for distance enumeration (1 = sequential, 0 = all cores)
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Seed recorded in reports and used by randomized selections
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Optional time budget in seconds for information-set search
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the central primitive idempotents and block generator matrices
    Blocks {
        #[arg(long)]
        group: String,
        #[arg(long)]
        field: String,
        /// Write a JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Assemble a code from a job config and report its parameters
    Construct {
        #[arg(long)]
        config: PathBuf,
        /// Write the generator matrix (and a .bundle.toml next to it)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        dist: DistanceArgs,
    },
    /// Construct a self-dual quasi-G code, or report the violated case
    Selfdual {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify that a code is a quasi-G module and print the witness
    Verify {
        /// Matrix file ("N k q" header)
        #[arg(long)]
        code: Option<PathBuf>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        index: Option<usize>,
        /// Bundle file (alternative to --code/--group/--index)
        #[arg(long)]
        bundle: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decompose a verified quasi-G code into its blockwise outer components
    Decompose {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {}", msg);
            ExitCode::from(3)
        }
    }
}

enum CliError {
    Validation(String),
    Verification(String),
}

impl From<qgc::Error> for CliError {
    fn from(e: qgc::Error) -> Self {
        match e {
            qgc::Error::NotAModule
            | qgc::Error::NotFree(_)
            | qgc::Error::NotAHomomorphism
            | qgc::Error::NotMultiplicative
            | qgc::Error::NotUnital
            | qgc::Error::NotInjective => CliError::Verification(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn distance_options(args: &DistanceArgs) -> Result<DistanceOptions, CliError> {
    Ok(DistanceOptions {
        strategy: Strategy::parse(&args.method)?,
        threads: args.threads,
        seed: args.seed,
        budget: args.budget.map(std::time::Duration::from_secs),
        samples: 10_000,
    })
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> CliResult {
    if let Some(p) = path {
        std::fs::write(p, format!("{:#}\n", value))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Blocks { group, field, json } => cmd_blocks(&group, &field, &json),
        Command::Construct {
            config,
            out,
            json,
            dist,
        } => cmd_construct(&config, &out, &json, &dist),
        Command::Selfdual {
            field,
            group,
            index,
            out,
            json,
        } => cmd_selfdual(&field, &group, index, &out, &json),
        Command::Verify {
            code,
            group,
            index,
            bundle,
            json,
        } => cmd_verify(&code, &group, &index, &bundle, &json),
        Command::Decompose {
            code,
            group,
            index,
            json,
        } => cmd_decompose(&code, &group, index, &json),
    }
}

fn cmd_blocks(group: &str, field: &str, json_path: &Option<PathBuf>) -> CliResult {
    let field = Field::parse_spec(field)?;
    let group = FiniteGroup::parse_spec(group)?;
    let alg = GroupAlgebra::new(field.clone(), group.clone());
    let idems = alg.central_primitive_idempotents();
    let mut blocks_json = Vec::new();
    println!(
        "group {} of order {}, field GF({}): {} block(s)",
        group.spec_string(),
        group.order(),
        field.q(),
        idems.len()
    );
    for (i, f) in idems.iter().enumerate() {
        let block = BlockRing::new(&alg, f)?;
        let code = block.block_code();
        println!("f{} = {}", i, alg.fmt_element(f));
        let coeffs: Vec<String> = f
            .coeffs
            .iter()
            .map(|&c| field.fmt_element(c))
            .collect();
        println!("   phi(f{}) = ({})", i, coeffs.join(" "));
        println!("   dim B{} = {}", i, block.dim());
        for r in 0..code.dim() {
            let row: Vec<String> = code
                .generator()
                .row(r)
                .iter()
                .map(|&c| field.fmt_element(c))
                .collect();
            println!("   B{},{} = {}", i, r + 1, row.join(" "));
        }
        blocks_json.push(json!({
            "idempotent": alg.fmt_element(f),
            "phi": coeffs,
            "dim": block.dim(),
        }));
    }
    write_json(
        json_path,
        &json!({
            "command": "blocks",
            "group": group.spec_string(),
            "field": field_spec_string(&field),
            "blocks": blocks_json,
        }),
    )
}

fn cmd_construct(
    config: &Path,
    out: &Option<PathBuf>,
    json_path: &Option<PathBuf>,
    dist: &DistanceArgs,
) -> CliResult {
    let job = JobConfig::from_path(config)?;
    let resolved = job.resolve()?;
    let code = resolved.assemble()?;
    let n = code.length();
    let k = code.dim();
    let opts = distance_options(dist)?;
    let (d_text, d_json) = if k == 0 {
        ("-".to_string(), json!(null))
    } else {
        let report = code.code.min_distance(&opts)?;
        if report.exact {
            let d = report.upper;
            let cap = griesmer_max_d(n, k, code.algebra.field.q());
            let griesmer = if d == cap {
                format!("meets the Griesmer bound ({} = {})", d, cap)
            } else {
                format!("Griesmer bound allows up to {}", cap)
            };
            (
                format!("{} ({}; {})", d, report.method, griesmer),
                json!({"exact": d, "method": report.method, "griesmer_max_d": cap, "seed": report.seed}),
            )
        } else {
            (
                format!(
                    "in [{}, {}] ({})",
                    report.lower, report.upper, report.method
                ),
                json!({"lower": report.lower, "upper": report.upper, "method": report.method, "seed": report.seed}),
            )
        }
    };
    let self_dual = k > 0 && code.is_self_dual();
    println!(
        "[{},{},{}], self-dual: {}",
        n,
        k,
        d_text,
        if self_dual { "yes" } else { "no" }
    );
    if let Some(out) = out {
        let mut buf = Vec::new();
        code.code.write_matrix(&mut buf)?;
        std::fs::write(out, &buf)?;
        let bundle = out.with_extension("bundle.toml");
        let matrix_name = out
            .file_name()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_default();
        write_bundle(
            &bundle,
            &code.algebra.field,
            &code.algebra.group,
            code.index,
            &matrix_name,
            &code.coord_of,
        )?;
    }
    write_json(
        json_path,
        &json!({
            "command": "construct",
            "length": n,
            "dimension": k,
            "distance": d_json,
            "self_dual": self_dual,
        }),
    )
}

fn cmd_selfdual(
    field: &str,
    group: &str,
    index: usize,
    out: &Option<PathBuf>,
    json_path: &Option<PathBuf>,
) -> CliResult {
    let field = Field::parse_spec(field)?;
    let group = FiniteGroup::parse_spec(group)?;
    if !selfdual_exists(&field, &group, index) {
        let why = selfdual_violation(&field, &group, index);
        println!("none: {}", why);
        write_json(
            json_path,
            &json!({
                "command": "selfdual",
                "exists": false,
                "reason": why,
            }),
        )?;
        return Ok(());
    }
    let code = selfdual_construct(&field, &group, index)?;
    println!(
        "self-dual [{},{}] quasi group code for {} of index {}",
        code.length(),
        code.dim(),
        group.spec_string(),
        index
    );
    if let Some(out) = out {
        let mut buf = Vec::new();
        code.code.write_matrix(&mut buf)?;
        std::fs::write(out, &buf)?;
    }
    write_json(
        json_path,
        &json!({
            "command": "selfdual",
            "exists": true,
            "length": code.length(),
            "dimension": code.dim(),
        }),
    )
}

fn load_code(path: &Path) -> Result<(LinearCode, Field), CliError> {
    let file = std::fs::File::open(path)?;
    Ok(LinearCode::read_matrix(BufReader::new(file))?)
}

fn cmd_verify(
    code: &Option<PathBuf>,
    group: &Option<String>,
    index: &Option<usize>,
    bundle: &Option<PathBuf>,
    json_path: &Option<PathBuf>,
) -> CliResult {
    let (code, field, group, index, labeling) = if let Some(bpath) = bundle {
        let b = Bundle::from_path(bpath)?;
        let dir = bpath.parent().unwrap_or(Path::new("."));
        let (code, field) = load_code(&dir.join(&b.matrix))?;
        let group = FiniteGroup::parse_spec(&b.group)?;
        let labeling = if b.labeling.is_empty() {
            (0..code.length()).collect()
        } else {
            b.labeling.clone()
        };
        (code, field, group, b.index, labeling)
    } else {
        let (Some(cpath), Some(gspec), Some(idx)) = (code, group, index) else {
            return Err(CliError::Validation(
                "verify needs --bundle or all of --code/--group/--index".into(),
            ));
        };
        let (code, field) = load_code(cpath)?;
        let group = FiniteGroup::parse_spec(gspec)?;
        let labeling = (0..code.length()).collect();
        (code, field, group, *idx, labeling)
    };
    let alg = GroupAlgebra::new(field, group);
    match verify_module(&code, &alg, index, &labeling) {
        Ok(witness) => {
            println!("module: yes; orbits: {}", witness.orbits.len());
            write_json(
                json_path,
                &json!({
                    "command": "verify",
                    "module": true,
                    "orbits": witness.orbits.len(),
                    "representatives": witness.representatives,
                }),
            )
        }
        Err(e) => {
            println!("module: no");
            write_json(
                json_path,
                &json!({"command": "verify", "module": false}),
            )?;
            Err(CliError::Verification(e.to_string()))
        }
    }
}

fn cmd_decompose(
    code_path: &Path,
    group: &str,
    index: usize,
    json_path: &Option<PathBuf>,
) -> CliResult {
    let (code, field) = load_code(code_path)?;
    let group = FiniteGroup::parse_spec(group)?;
    let alg = GroupAlgebra::new(field, group);
    let labeling: Vec<usize> = (0..code.length()).collect();
    verify_module(&code, &alg, index, &labeling)?;
    let q = qgc::QuasiGroupCode {
        algebra: alg.clone(),
        index,
        code,
        coord_of: labeling,
    };
    let idems = alg.central_primitive_idempotents();
    let parts = q.decompose(&idems)?;
    let mut dims = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let dim = match part {
            qgc::Part::Direct { rows, .. } => rows.len(),
            qgc::Part::Presented { .. } => unreachable!("decompose yields direct parts"),
        };
        println!("block {}: outer K-dimension {}", i, dim);
        dims.push(dim);
    }
    write_json(
        json_path,
        &json!({
            "command": "decompose",
            "block_dims": dims,
        }),
    )
}
