//! `packperim`: generate, verify, measure and bound packings of homothets.

mod gen;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use packperim::bounds::{bound_report, fit_scaling, BoundError, Model};
use packperim::model::{load, render_svg, save, PackingDoc};
use packperim::verify::{packing_metrics, verify_packing_eps};
use packperim::{Scalar, DEFAULT_EPS};
use serde::Serialize;

use gen::{GenArgs, Kind};

#[derive(Parser, Debug)]
#[command(name = "packperim", version, about = "Packings of homothetic convex bodies and their total perimeter")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Prop1,
    Prop2,
    Prop4,
    Prop5,
    Thm6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FitModel {
    Sqrt,
    Log,
    Loglog,
}

impl From<FitModel> for Model {
    fn from(m: FitModel) -> Model {
        match m {
            FitModel::Sqrt => Model::Sqrt,
            FitModel::Log => Model::Log,
            FitModel::Loglog => Model::LogLog,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a packing and write it as JSON.
    Generate {
        kind: Kind,
        #[command(flatten)]
        args: GenArgs,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check containment, disjointness and optionally boundary contact.
    Verify {
        file: PathBuf,
        #[arg(long)]
        require_boundary_contact: bool,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
    },
    /// Total perimeter and escape distances.
    Measure { file: PathBuf },
    /// Evaluate an upper bound and compare it with the measured perimeter.
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        /// Escape sum to use instead of the measured one.
        #[arg(long, value_parser = parse_scalar)]
        esc: Option<Scalar>,
    },
    /// Generate a family over a parameter list and fit its growth rate.
    Scale {
        kind: Kind,
        #[arg(long, value_delimiter = ',', required = true)]
        param_list: Vec<u64>,
        #[arg(long, value_enum)]
        model: FitModel,
        #[command(flatten)]
        args: GenArgs,
    },
    /// Draw a packing as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    Scalar::parse_any(s).map_err(|e| e.to_string())
}

/// Failure classes mapped onto exit codes.
enum Outcome {
    Ok,
    /// A geometric or soundness check did not hold.
    Failed,
}

fn print_json<T: Serialize>(v: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn read(path: &Path) -> Result<PackingDoc> {
    load(path).with_context(|| format!("loading {}", path.display()))
}

fn write_doc(doc: &PackingDoc, out: Option<&Path>) -> Result<()> {
    let text = save(doc);
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct ScaleResult {
    kind: String,
    param: String,
    params: Vec<u64>,
    #[serde(flatten)]
    fit: packperim::bounds::FitResult,
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Generate { kind, args, out } => {
            let doc = gen::generate(kind, &args)?;
            write_doc(&doc, out.as_deref())?;
            Ok(Outcome::Ok)
        }
        Command::Verify {
            file,
            require_boundary_contact,
            eps,
        } => {
            let doc = read(&file)?;
            let report = verify_packing_eps(&doc, require_boundary_contact, eps);
            print_json(&report)?;
            for c in report.checks.iter().filter(|c| !c.pass) {
                if let Some(w) = &c.witness {
                    eprintln!("{} failed: bodies {:?}, {} = {}", c.name, w.bodies, w.quantity, w.value);
                }
            }
            Ok(if report.summary { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Measure { file } => {
            let doc = read(&file)?;
            match packing_metrics(&doc) {
                Ok(m) => {
                    print_json(&m)?;
                    Ok(Outcome::Ok)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(Outcome::Failed)
                }
            }
        }
        Command::Bounds { file, which, esc } => {
            let doc = read(&file)?;
            let name = which.to_possible_value().expect("named").get_name().to_string();
            match bound_report(&doc, &name, esc) {
                Ok(r) => {
                    print_json(&r)?;
                    if !r.sound() {
                        eprintln!("bound {name} is below the measured perimeter by {}", -r.slack.clone());
                    }
                    Ok(if r.sound() { Outcome::Ok } else { Outcome::Failed })
                }
                Err(e @ BoundError::Unknown(_)) => Err(e.into()),
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(Outcome::Failed)
                }
            }
        }
        Command::Scale {
            kind,
            param_list,
            model,
            args,
        } => {
            let param = kind.size_param();
            if args_sets(&args, param) {
                anyhow::bail!("--{param} is set by --param-list");
            }
            let mut samples = Vec::new();
            for &v in &param_list {
                let doc = gen::generate(kind, &args.with_size(kind, v)?)?;
                let m = packing_metrics(&doc)?;
                samples.push((doc.len() as f64, m.total_perimeter.to_f64()));
            }
            let fit = fit_scaling(&samples, model.into())?;
            print_json(&ScaleResult {
                kind: kind.to_possible_value().expect("named").get_name().to_string(),
                param: param.to_string(),
                params: param_list,
                fit,
            })?;
            Ok(Outcome::Ok)
        }
        Command::Render { file, out, width } => {
            let doc = read(&file)?;
            std::fs::write(&out, render_svg(&doc, width)).with_context(|| format!("writing {}", out.display()))?;
            Ok(Outcome::Ok)
        }
    }
}

fn args_sets(a: &GenArgs, param: &str) -> bool {
    match param {
        "n" => a.n.is_some(),
        "Q" => a.q.is_some(),
        "K" => a.k.is_some(),
        "lambda" => a.lambda.is_some(),
        _ => a.depth.is_some(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
