//! Closed-form perimeter bounds, totient sums and growth-rate fits.

mod fit;
mod totient;

use serde::Serialize;

use crate::geom::{area, perimeter, support_side, Body, ConvexPolygon, Direction, GeomError, Support};
use crate::model::PackingDoc;
use crate::scalar::{Mode, Scalar};
use crate::verify::{ceil_log2, is_parallel, packing_metrics, verify_packing, DepthProfile, VerifyError};

pub use fit::{fit_scaling, FitError, FitResult, Model};
pub use totient::{totient, totient_sq_sum, totient_sum, totients};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("the reference body is a disk and has no sides")]
    NoSides,
    #[error("container is not parallel to the body")]
    NotParallel,
    #[error("n must be at least {0}")]
    TooFew(u64),
    #[error("document has no reference body")]
    MissingReference,
    #[error("bound {0} requires every body to touch the container boundary")]
    NeedsContact(&'static str),
    #[error("unknown bound {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    let (a, b) = Scalar::unify(a, b);
    a * b
}

fn add(a: &Scalar, b: &Scalar) -> Scalar {
    let (a, b) = Scalar::unify(a, b);
    a + b
}

fn div(a: &Scalar, b: &Scalar) -> Scalar {
    let (a, b) = Scalar::unify(a, b);
    a / b
}

fn max2(a: &Scalar, b: &Scalar) -> Scalar {
    let (a, b) = Scalar::unify(a, b);
    a.max(b)
}

/// `per(C)²/area(C)`.
fn shape_factor(c: &Body) -> Scalar {
    div(&perimeter(c).square(), &area(c))
}

fn int(v: u64, like: &Scalar) -> Scalar {
    Scalar::int(v as i64, like.mode())
}

/// `per(C)·√(area(D)/area(C))·√n`.
pub fn bound_prop1(c: &Body, d: &ConvexPolygon, n: u64) -> Scalar {
    let ratio = div(&d.area(), &area(c)).sqrt();
    let root_n = Scalar::int(n as i64, Mode::Exact).sqrt();
    mul(&mul(&perimeter(c), &ratio), &root_n)
}

/// `(1 + 2·per(C)²/area(C)·⌈log n⌉)·per(D)`.
pub fn bound_prop2(c: &Body, d: &ConvexPolygon, n: u64) -> Scalar {
    let s = shape_factor(c);
    let k = int(ceil_log2(n) as u64 * 2, &s);
    let factor = add(&Scalar::one(s.mode()), &(k * &s));
    mul(&factor, &d.perimeter())
}

/// `ρ'(C) = per(C)/(shortest side of C)`.
pub fn rho_prime(c: &Body) -> Result<Scalar, BoundError> {
    let p = c.as_polygon().ok_or(BoundError::NoSides)?;
    let shortest = p
        .edges()
        .map(|e| e.length())
        .reduce(|a, b| {
            let (a, b) = Scalar::unify(&a, &b);
            a.min(b)
        })
        .expect("nonempty");
    Ok(div(&p.perimeter(), &shortest))
}

/// `ρ'(C)·per(D)`.
pub fn bound_prop4(c: &Body, d: &ConvexPolygon) -> Result<Scalar, BoundError> {
    Ok(mul(&rho_prime(c)?, &d.perimeter()))
}

/// `esc + (1 + 6·per(C)²/area(C)·⌈log n⌉)·per(D)`.
pub fn bound_prop5(c: &Body, d: &ConvexPolygon, n: u64, esc: &Scalar) -> Scalar {
    let s = shape_factor(c);
    let k = int(ceil_log2(n) as u64 * 6, &s);
    let factor = add(&Scalar::one(s.mode()), &(k * &s));
    add(esc, &mul(&factor, &d.perimeter()))
}

/// Length of `{p + t·v : t ≥ 0} ∩ C` for `p` on the boundary of `C` and
/// `v` pointing into `C`.
fn chord(c: &ConvexPolygon, p: &crate::geom::Point, v: &crate::geom::Point) -> Scalar {
    // Each edge u→w keeps t with orient(u,w,p) + t·cross(w-u, v) ≥ 0.
    let mut t_max: Option<Scalar> = None;
    for e in c.edges() {
        let rate = e.vector().cross(v);
        if rate.is_negative() {
            let base = crate::geom::orient(&e.a, &e.b, p);
            let t = -(base / rate);
            t_max = Some(match t_max {
                None => t,
                Some(m) => m.min(t),
            });
        }
    }
    let t = t_max.unwrap_or_else(|| Scalar::zero(p.mode()));
    mul(&t, &v.norm())
}

/// `(ρ1, ρ2)` for the side `c` of `C` selected by direction `d`:
/// `ρ1 = per(C)/|c|` and `ρ2 = min(|h1|,|h2|)/|b|`, with `b` the middle half
/// of `c` and `h1`, `h2` the chords of `C` perpendicular to `c` through the
/// endpoints of `b`.
pub fn thm6_constants(c: &Body, d: &Direction) -> Result<(Scalar, Scalar), BoundError> {
    let poly = c.as_polygon().ok_or(BoundError::NoSides)?;
    let side = match support_side(c, d) {
        Support::Side(s) => s,
        Support::Point(_) => return Err(BoundError::NotParallel),
    };
    let rho1 = div(&poly.perimeter(), &side.length());
    let b = side.middle_half();
    let inward = side.vector().perp();
    let h1 = chord(poly, &b.a, &inward);
    let h2 = chord(poly, &b.b, &inward);
    let (h1, h2) = Scalar::unify(&h1, &h2);
    let rho2 = div(&h1.min(h2), &b.length());
    Ok((rho1, rho2))
}

/// `λ = 2⌈log n / log log n⌉` (base 2).
pub fn thm6_lambda(n: u64) -> Result<u64, BoundError> {
    if n < 4 {
        return Err(BoundError::TooFew(4));
    }
    let l = (n as f64).log2();
    Ok(2 * (l / l.log2() - 1e-12).ceil() as u64)
}

/// `max_a 2ρ1(a)·max(2, 1/ρ2(a))·(per(D) + esc)·λ` over the sides `a` of `D`.
pub fn bound_thm6(c: &Body, d: &ConvexPolygon, n: u64, esc: &Scalar) -> Result<Scalar, BoundError> {
    if !is_parallel(d, c) {
        return Err(BoundError::NotParallel);
    }
    let lambda = thm6_lambda(n)?;
    let mut best: Option<Scalar> = None;
    for e in d.edges() {
        let (rho1, rho2) = thm6_constants(c, &e.direction()?)?;
        let two = Scalar::int(2, rho1.mode());
        let rho = mul(&(&two * &rho1), &max2(&Scalar::int(2, rho2.mode()), &div(&Scalar::one(rho2.mode()), &rho2)));
        best = Some(match best {
            None => rho,
            Some(b) => max2(&b, &rho),
        });
    }
    let rho = best.expect("polygon has edges");
    let total = add(&d.perimeter(), esc);
    Ok(mul(&mul(&rho, &total), &int(lambda, &rho)))
}

/// Per-`k` comparison of `|I_k|` with `|a|·λ^{λ−k}` for `k ≥ λ+1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eq12Row {
    pub k: usize,
    pub measure: Scalar,
    pub cap: Scalar,
    pub slack: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eq12Report {
    pub lambda: u32,
    pub rows: Vec<Eq12Row>,
    pub holds: bool,
}

pub fn check_eq12(profile: &DepthProfile, a_length: &Scalar, lambda: u32) -> Eq12Report {
    let mut rows = Vec::new();
    for k in (lambda as usize + 1)..=profile.measures.len() {
        let measure = profile.measures[k - 1].clone();
        let exp = lambda as i32 - k as i32;
        let base = Scalar::int(lambda as i64, a_length.mode());
        let mut pow = Scalar::one(a_length.mode());
        for _ in 0..exp.unsigned_abs() {
            pow = pow * &base;
        }
        if exp < 0 {
            pow = Scalar::one(a_length.mode()) / pow;
        }
        let cap = mul(a_length, &pow);
        let slack = {
            let (c, m) = Scalar::unify(&cap, &measure);
            c - m
        };
        rows.push(Eq12Row { k, measure, cap, slack });
    }
    let holds = rows.iter().all(|r| !r.slack.is_negative());
    Eq12Report { lambda, rows, holds }
}

/// A bound evaluated on a document and compared with its measured `per(S)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound: String,
    pub n: usize,
    /// `n` as fed to the formula (`thm6` needs `n ≥ 4`).
    pub n_used: u64,
    pub per_c: Scalar,
    pub area_c: Scalar,
    pub per_d: Scalar,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub esc: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho1: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho2: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    pub value: Scalar,
    pub measured: Scalar,
    pub slack: Scalar,
}

impl BoundReport {
    pub fn sound(&self) -> bool {
        !self.slack.is_negative()
    }
}

/// Evaluates bound `which` (`prop1`, `prop2`, `prop4`, `prop5`, `thm6`) on
/// `doc`. `esc` overrides the measured escape sum.
pub fn bound_report(doc: &PackingDoc, which: &str, esc: Option<Scalar>) -> Result<BoundReport, BoundError> {
    let c = doc.reference_body.as_ref().ok_or(BoundError::MissingReference)?;
    let d = &doc.container;
    let metrics = packing_metrics(doc)?;
    let n = doc.len();
    let esc_value = esc.unwrap_or_else(|| metrics.total_escape.clone());
    let needs_contact = |name: &'static str| -> Result<(), BoundError> {
        if verify_packing(doc, true).check("boundary_contact").is_some_and(|c| c.pass) {
            Ok(())
        } else {
            Err(BoundError::NeedsContact(name))
        }
    };
    let mut n_used = n as u64;
    let (mut rho1, mut rho2, mut lambda, mut esc_out) = (None, None, None, None);
    let value = match which {
        "prop1" => bound_prop1(c, d, n_used.max(1)),
        "prop2" => {
            needs_contact("prop2")?;
            bound_prop2(c, d, n_used.max(1))
        }
        "prop4" => {
            needs_contact("prop4")?;
            if !is_parallel(d, c) {
                return Err(BoundError::NotParallel);
            }
            bound_prop4(c, d)?
        }
        "prop5" => {
            esc_out = Some(esc_value.clone());
            bound_prop5(c, d, n_used.max(1), &esc_value)
        }
        "thm6" => {
            n_used = n_used.max(4);
            esc_out = Some(esc_value.clone());
            let v = bound_thm6(c, d, n_used, &esc_value)?;
            let (r1, r2) = thm6_constants(c, &d.edge(0).direction()?)?;
            rho1 = Some(r1);
            rho2 = Some(r2);
            lambda = Some(thm6_lambda(n_used)?);
            v
        }
        other => return Err(BoundError::Unknown(other.to_string())),
    };
    let measured = metrics.total_perimeter.clone();
    let slack = {
        let (v, m) = Scalar::unify(&value, &measured);
        v - m
    };
    Ok(BoundReport {
        bound: which.to_string(),
        n,
        n_used,
        per_c: perimeter(c),
        area_c: area(c),
        per_d: d.perimeter(),
        esc: esc_out,
        rho1,
        rho2,
        lambda,
        value,
        measured,
        slack,
    })
}
