use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Model {
    Sqrt,
    Log,
    #[serde(rename = "LOGLOG")]
    LogLog,
}

impl Model {
    /// `g(n)`: `√n`, `log₂ n` or `log₂ n / log₂ log₂ n`.
    pub fn g(self, n: f64) -> f64 {
        match self {
            Model::Sqrt => n.sqrt(),
            Model::Log => n.log2(),
            Model::LogLog => n.log2() / n.log2().log2(),
        }
    }
}

impl std::str::FromStr for Model {
    type Err = FitError;

    fn from_str(s: &str) -> Result<Model, FitError> {
        match s.to_ascii_lowercase().as_str() {
            "sqrt" => Ok(Model::Sqrt),
            "log" => Ok(Model::Log),
            "loglog" => Ok(Model::LogLog),
            _ => Err(FitError::UnknownModel(s.to_string())),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum FitError {
    #[error("need at least 3 samples, got {0}")]
    TooFewSamples(usize),
    #[error("LOGLOG needs n >= 4, got {0}")]
    SmallN(f64),
    #[error("all samples have the same g(n)")]
    Degenerate,
    #[error("unknown model {0:?}")]
    UnknownModel(String),
}

/// `per ≈ a·g(n) + b` by ordinary least squares.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitResult {
    pub model: Model,
    pub a: f64,
    pub b: f64,
    /// Root-mean-square residual.
    pub residual: f64,
    pub r_squared: f64,
    pub samples: Vec<(f64, f64)>,
}

impl FitResult {
    /// The LOG slope re-expressed per natural log: `per ≈ (a/ln 2)·ln n`.
    pub fn slope_per_ln(&self) -> f64 {
        self.a / std::f64::consts::LN_2
    }
}

pub fn fit_scaling(samples: &[(f64, f64)], model: Model) -> Result<FitResult, FitError> {
    if samples.len() < 3 {
        return Err(FitError::TooFewSamples(samples.len()));
    }
    if model == Model::LogLog {
        if let Some(&(n, _)) = samples.iter().find(|s| s.0.is_nan() || s.0 < 4.0) {
            return Err(FitError::SmallN(n));
        }
    }
    let xs: Vec<f64> = samples.iter().map(|&(n, _)| model.g(n)).collect();
    let ys: Vec<f64> = samples.iter().map(|&(_, p)| p).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 {
        return Err(FitError::Degenerate);
    }
    let a = sxy / sxx;
    let b = my - a * mx;
    let ss_res: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - a * x - b).powi(2)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    Ok(FitResult {
        model,
        a,
        b,
        residual: (ss_res / m).sqrt(),
        r_squared,
        samples: samples.to_vec(),
    })
}
