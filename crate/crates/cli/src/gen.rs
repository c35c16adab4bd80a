use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use packperim::generators::*;
use packperim::geom::{Body, ConvexPolygon};
use packperim::model::{load_body_str, unit_square, PackingDoc};
use packperim::{Mode, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Grid,
    Ford,
    Apollonian,
    Greedy,
    ExplicitDisks,
    SquareLayers,
    LayersGeneral,
    SlopedSquares,
}

#[derive(Args, Clone, Debug, Default)]
pub struct GenArgs {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long = "Q")]
    pub q: Option<u64>,
    #[arg(long = "K")]
    pub k: Option<u32>,
    #[arg(long)]
    pub lambda: Option<u32>,
    #[arg(long, value_parser = parse_real)]
    pub slope: Option<f64>,
    #[arg(long)]
    pub depth: Option<u32>,
    #[arg(long, value_parser = parse_real)]
    pub r1: Option<f64>,
    #[arg(long, value_parser = parse_real)]
    pub r2: Option<f64>,
    /// JSON file holding one body object.
    #[arg(long)]
    pub body: Option<PathBuf>,
    /// JSON file holding one polygon body object.
    #[arg(long)]
    pub container: Option<PathBuf>,
    #[arg(long)]
    pub edge: Option<usize>,
}

/// Accepts `p/q` as well as decimal notation.
pub fn parse_real(s: &str) -> Result<f64, String> {
    Scalar::parse_any(s).map(|v| v.to_f64()).map_err(|e| e.to_string())
}

impl Kind {
    fn allowed(self) -> &'static [&'static str] {
        match self {
            Kind::Grid => &["n", "body", "container"],
            Kind::Ford => &["Q"],
            Kind::Apollonian => &["n", "r1", "r2"],
            Kind::Greedy => &["n"],
            Kind::ExplicitDisks => &["K"],
            Kind::SquareLayers => &["lambda"],
            Kind::LayersGeneral => &["body", "container", "edge", "lambda"],
            Kind::SlopedSquares => &["slope", "depth"],
        }
    }

    /// The parameter swept by `scale`.
    pub fn size_param(self) -> &'static str {
        match self {
            Kind::Grid | Kind::Apollonian | Kind::Greedy => "n",
            Kind::Ford => "Q",
            Kind::ExplicitDisks => "K",
            Kind::SquareLayers | Kind::LayersGeneral => "lambda",
            Kind::SlopedSquares => "depth",
        }
    }
}

impl GenArgs {
    fn given(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let flags: [(&'static str, bool); 11] = [
            ("n", self.n.is_some()),
            ("Q", self.q.is_some()),
            ("K", self.k.is_some()),
            ("lambda", self.lambda.is_some()),
            ("slope", self.slope.is_some()),
            ("depth", self.depth.is_some()),
            ("r1", self.r1.is_some()),
            ("r2", self.r2.is_some()),
            ("body", self.body.is_some()),
            ("container", self.container.is_some()),
            ("edge", self.edge.is_some()),
        ];
        for (name, set) in flags {
            if set {
                out.push(name);
            }
        }
        out
    }

    /// Rejects flags that do not apply to `kind`.
    pub fn check(&self, kind: Kind) -> Result<()> {
        for flag in self.given() {
            if !kind.allowed().contains(&flag) {
                bail!("--{flag} does not apply to {}", kind.to_possible_value().unwrap().get_name());
            }
        }
        Ok(())
    }

    /// Sets the swept parameter of `kind` to `v`.
    pub fn with_size(&self, kind: Kind, v: u64) -> Result<GenArgs> {
        let mut a = self.clone();
        let small = || u32::try_from(v).context("parameter value too large");
        match kind.size_param() {
            "n" => a.n = Some(v),
            "Q" => a.q = Some(v),
            "K" => a.k = Some(small()?),
            "lambda" => a.lambda = Some(small()?),
            _ => a.depth = Some(small()?),
        }
        Ok(a)
    }
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.with_context(|| format!("--{flag} is required"))
}

fn read_body(path: &PathBuf) -> Result<Body> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_body_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn body_or_square(path: &Option<PathBuf>) -> Result<Body> {
    match path {
        Some(p) => read_body(p),
        None => Ok(Body::Polygon(unit_square(Mode::Exact))),
    }
}

fn container_or_square(path: &Option<PathBuf>) -> Result<ConvexPolygon> {
    match body_or_square(path)? {
        Body::Polygon(p) => Ok(p),
        Body::Disk(_) => bail!("the container must be a polygon"),
    }
}

pub fn generate(kind: Kind, a: &GenArgs) -> Result<PackingDoc> {
    a.check(kind)?;
    let doc = match kind {
        Kind::Grid => gen_grid_translates(&body_or_square(&a.body)?, &container_or_square(&a.container)?, required(a.n, "n")?)?,
        Kind::Ford => gen_ford(required(a.q, "Q")?)?,
        Kind::Apollonian => gen_apollonian_chain(
            a.r1.unwrap_or(0.5),
            a.r2.unwrap_or(0.5),
            required(a.n, "n")? as usize,
        )?,
        Kind::Greedy => gen_greedy_square(required(a.n, "n")? as usize)?,
        Kind::ExplicitDisks => gen_explicit_disks(required(a.k, "K")?)?,
        Kind::SquareLayers => gen_square_layers(required(a.lambda, "lambda")?)?,
        Kind::LayersGeneral => gen_layers_general(
            &body_or_square(&a.body)?,
            &container_or_square(&a.container)?,
            a.edge.unwrap_or(0),
            required(a.lambda, "lambda")?,
        )?,
        Kind::SlopedSquares => gen_sloped_squares(required(a.slope, "slope")?, required(a.depth, "depth")?)?,
    };
    Ok(doc)
}
