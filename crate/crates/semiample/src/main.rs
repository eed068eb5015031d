//! Command-line front end: parse surface/pencil descriptions from JSON,
//! run the decision procedures, and emit a single JSON report on stdout
//! with a human-readable summary on stderr.
//!
//! Exit codes: 0 success (including "yes" verdicts), 2 usage or parse
//! error, 3 mathematical "no" verdict, 4 capability limit.

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use semiample::decision::{classify_surface, find_block, is_semiample, Answer, NefAssumption};
use semiample::pencil::{
    is_reduced_on_random_lines, node_test, singularity_report, singular_parameters,
    HomogeneousForm, PencilMember,
};
use semiample::piclattice::{
    enumerate_negative_classes, euler_characteristic, DivisorClass, GramMatrix,
};
use semiample::restriction::{restrict, SurfaceModel};
use semiample::{Error, Result};

const DEFAULT_NEG_CURVE_BOUND: i64 = 3;

#[derive(Parser)]
#[command(
    name = "semiample",
    about = "Exact decision procedures for semiampleness of nef divisors on \
             blow-ups of the plane at points of a cubic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Path to a JSON input file, or an inline JSON object
    #[arg(long, global = true)]
    input: Option<String>,
    /// Degree bound (neg-curves enumeration; nef pre-check for `check`)
    #[arg(long, global = true)]
    bound: Option<i64>,
    /// Number of random lines for reducedness checks
    #[arg(long, global = true, default_value_t = 20)]
    trials: u32,
    /// Seed for all randomized subroutines
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format (only json is supported)
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Decide whether every nef divisor is semiample (or one given divisor)
    Check,
    /// Restrict a divisor class to the anticanonical curve
    Restrict,
    /// Euler characteristic of a divisor class by Riemann-Roch
    Chi,
    /// Enumerate (-1)- and (-2)-classes up to a degree bound
    NegCurves,
    /// Find a block: an effective combination pairing strictly below
    /// min{0, -K.C} with every curve of a negative-definite configuration
    Block,
    /// Singular members of a pencil of plane curves, with per-member
    /// singular-point and node reports
    PencilSingular,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckInput {
    surface: SurfaceModel,
    divisor: Option<DivisorClass>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RestrictInput {
    surface: SurfaceModel,
    divisor: DivisorClass,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChiInput {
    divisor: DivisorClass,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NegCurvesInput {
    r: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockInput {
    gram: GramMatrix,
    k_degrees: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PencilInput {
    f0: HomogeneousForm,
    finf: HomogeneousForm,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(&cli));
}

fn run(cli: &Cli) -> i32 {
    if cli.format != "json" {
        eprintln!("error: unsupported format {:?} (only json)", cli.format);
        return 2;
    }
    let text = match load_input(cli) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match execute(cli, &text) {
        Ok((doc, summary, code)) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
            eprintln!("{summary}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Capability(_) | Error::UnsupportedKind(_) => 4,
                _ => 2,
            }
        }
    }
}

fn load_input(cli: &Cli) -> std::result::Result<String, String> {
    let arg = cli
        .input
        .as_deref()
        .ok_or_else(|| "--input <path or inline JSON> is required".to_string())?;
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("input does not parse: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Internal(format!("report serialization: {e}")))
}

fn execute(cli: &Cli, text: &str) -> Result<(Value, String, i32)> {
    match cli.command {
        Command::Check => check(cli, text),
        Command::Restrict => cmd_restrict(text),
        Command::Chi => chi(text),
        Command::NegCurves => neg_curves(cli, text),
        Command::Block => block(text),
        Command::PencilSingular => pencil_singular(cli, text),
    }
}

fn check(cli: &Cli, text: &str) -> Result<(Value, String, i32)> {
    let input: CheckInput = parse(text)?;
    let verdict = match &input.divisor {
        None => classify_surface(&input.surface)?,
        Some(d) => {
            let surface = match &input.surface {
                SurfaceModel::Concrete(c) => c,
                SurfaceModel::Abstract(_) => {
                    return Err(Error::UnsupportedKind(
                        "per-divisor check needs a concrete surface".into(),
                    ))
                }
            };
            let nef = match cli.bound {
                Some(b) => NefAssumption::CheckedUpTo(b),
                None => NefAssumption::Asserted,
            };
            is_semiample(surface, d, nef)?
        }
    };
    let code = if verdict.answer == Answer::No { 3 } else { 0 };
    let summary = format!(
        "answer: {:?}, branch: {:?}, witnesses: {}",
        verdict.answer,
        verdict.branch,
        verdict.witnesses.len()
    );
    Ok((to_value(&verdict)?, summary, code))
}

fn cmd_restrict(text: &str) -> Result<(Value, String, i32)> {
    let input: RestrictInput = parse(text)?;
    let surface = match &input.surface {
        SurfaceModel::Concrete(c) => c,
        SurfaceModel::Abstract(_) => {
            return Err(Error::UnsupportedKind(
                "restriction needs a concrete surface".into(),
            ))
        }
    };
    let rc = restrict(surface, &input.divisor)?;
    let summary = format!("degree {} restriction computed", rc.degree);
    Ok((to_value(&rc)?, summary, 0))
}

fn chi(text: &str) -> Result<(Value, String, i32)> {
    let input: ChiInput = parse(text)?;
    let chi = euler_characteristic(&input.divisor)?;
    Ok((json!({ "chi": chi }), format!("chi = {chi}"), 0))
}

fn neg_curves(cli: &Cli, text: &str) -> Result<(Value, String, i32)> {
    let input: NegCurvesInput = parse(text)?;
    let bound = cli.bound.unwrap_or(DEFAULT_NEG_CURVE_BOUND);
    if bound < 0 {
        return Err(Error::Config("--bound must be nonnegative".into()));
    }
    let classes = enumerate_negative_classes(input.r, bound);
    let summary = format!(
        "{} negative classes for r = {} up to degree {bound}",
        classes.len(),
        input.r
    );
    let doc = json!({
        "r": input.r,
        "bound": bound,
        "count": classes.len(),
        "classes": classes,
    });
    Ok((doc, summary, 0))
}

fn block(text: &str) -> Result<(Value, String, i32)> {
    let input: BlockInput = parse(text)?;
    let solution = find_block(&input.gram, &input.k_degrees)?;
    let summary = format!(
        "block found with {} multiplicities",
        input.k_degrees.len()
    );
    Ok((to_value(&solution)?, summary, 0))
}

fn pencil_singular(cli: &Cli, text: &str) -> Result<(Value, String, i32)> {
    let input: PencilInput = parse(text)?;
    let report = singular_parameters(&input.f0, &input.finf)?;
    let mut members = Vec::new();
    for param in &report.parameters {
        let member = PencilMember::new(*param, &input.f0, &input.finf)?;
        let rep = singularity_report(member.form(), &report.fixed_singular_points)?;
        let nodes: Vec<Value> = rep
            .points
            .iter()
            .chain(rep.excluded_points.iter())
            .map(|p| {
                json!({
                    "point": p,
                    "kind": node_test(member.form(), p),
                })
            })
            .collect();
        let reduced = is_reduced_on_random_lines(member.form(), cli.trials, cli.seed)?;
        members.push(json!({
            "parameter": param,
            "report": rep,
            "points": nodes,
            "reduced_on_random_lines": reduced,
        }));
    }
    let summary = format!(
        "{} singular parameters: {}",
        report.parameters.len(),
        report
            .parameters
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    let doc = json!({
        "parameters": report.parameters,
        "unresolved": report.unresolved,
        "fixed_singular_points": report.fixed_singular_points,
        "undetectable_fixed_points": report.undetectable_fixed_points,
        "residual_degree": report.residual_degree,
        "members": members,
    });
    Ok((doc, summary, 0))
}
