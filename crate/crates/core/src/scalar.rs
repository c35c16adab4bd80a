//! Dual-mode numbers.
//!
//! A [`Scalar`] is either an exact arbitrary-precision rational or an `f64`.
//! The two never mix implicitly: arithmetic between an exact and a float
//! operand panics, and the `try_*` variants report [`ScalarError::MixedModes`].
//! Callers that deliberately leave the rationals (square roots, π) convert
//! with [`Scalar::to_float`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Default tolerance for FLOAT comparisons.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalarError {
    #[error("mixed scalar modes")]
    MixedModes,
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-finite float {0}")]
    NonFinite(f64),
    #[error("cannot parse rational {0:?}: expected \"p/q\"")]
    BadRational(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Float => f.write_str("float"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn ratio(num: i64, den: i64) -> Scalar {
        Scalar::Exact(BigRational::new(num.into(), den.into()))
    }

    pub fn int(v: i64, mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::from_integer(v.into())),
            Mode::Float => Scalar::Float(v as f64),
        }
    }

    pub fn zero(mode: Mode) -> Scalar {
        Scalar::int(0, mode)
    }

    pub fn one(mode: Mode) -> Scalar {
        Scalar::int(1, mode)
    }

    /// `num/den` in the given mode.
    pub fn frac(num: i64, den: i64, mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::ratio(num, den),
            Mode::Float => Scalar::Float(num as f64 / den as f64),
        }
    }

    pub fn float(v: f64) -> Result<Scalar, ScalarError> {
        if v.is_finite() {
            Ok(Scalar::Float(v))
        } else {
            Err(ScalarError::NonFinite(v))
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => ratio_to_f64(r),
            Scalar::Float(v) => *v,
        }
    }

    /// Explicit conversion to FLOAT mode.
    pub fn to_float(&self) -> Scalar {
        Scalar::Float(self.to_f64())
    }

    /// Converts to `mode`. Only EXACT → FLOAT (or identity) is possible.
    pub fn to_mode(&self, mode: Mode) -> Result<Scalar, ScalarError> {
        match (self, mode) {
            (_, m) if m == self.mode() => Ok(self.clone()),
            (Scalar::Exact(_), Mode::Float) => Ok(self.to_float()),
            _ => Err(ScalarError::MixedModes),
        }
    }

    pub fn same_mode(&self, other: &Scalar) -> Result<Mode, ScalarError> {
        if self.mode() == other.mode() {
            Ok(self.mode())
        } else {
            Err(ScalarError::MixedModes)
        }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a + b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a + b)),
            _ => Err(ScalarError::MixedModes),
        }
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a - b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a - b)),
            _ => Err(ScalarError::MixedModes),
        }
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a * b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a * b)),
            _ => Err(ScalarError::MixedModes),
        }
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a / b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a / b)),
            _ => Err(ScalarError::MixedModes),
        }
    }

    pub fn try_cmp(&self, o: &Scalar) -> Result<Ordering, ScalarError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(a.cmp(b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(a.total_cmp(b)),
            _ => Err(ScalarError::MixedModes),
        }
    }

    /// Tolerant comparison: FLOAT values within `eps·max(1,|a|,|b|)` compare
    /// equal; EXACT values ignore `eps`.
    pub fn cmp_tol(&self, o: &Scalar, eps: f64) -> Ordering {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            (Scalar::Float(a), Scalar::Float(b)) => float_cmp_tol(*a, *b, eps),
            _ => mixed_panic(),
        }
    }

    pub fn eq_tol(&self, o: &Scalar, eps: f64) -> bool {
        self.cmp_tol(o, eps) == Ordering::Equal
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            Scalar::Exact(r) => r.numer().sign().cmp(&num_bigint::Sign::NoSign),
            Scalar::Float(v) => v.partial_cmp(&0.0).unwrap_or(Ordering::Equal),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn half(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r / BigInt::from(2)),
            Scalar::Float(v) => Scalar::Float(v / 2.0),
        }
    }

    pub fn min(self, o: Scalar) -> Scalar {
        if o < self {
            o
        } else {
            self
        }
    }

    pub fn max(self, o: Scalar) -> Scalar {
        if o > self {
            o
        } else {
            self
        }
    }

    /// Square root. Stays EXACT when the argument is the square of a
    /// rational, otherwise falls back to FLOAT.
    pub fn sqrt(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => match rational_sqrt(r) {
                Some(s) => Scalar::Exact(s),
                None => Scalar::Float(ratio_to_f64(r).sqrt()),
            },
            Scalar::Float(v) => Scalar::Float(v.sqrt()),
        }
    }

    /// `self · 2^k` for possibly negative `k`.
    pub fn mul_pow2(&self, k: i32) -> Scalar {
        match self {
            Scalar::Exact(r) => {
                let p = BigInt::one() << k.unsigned_abs();
                if k >= 0 {
                    Scalar::Exact(r * p)
                } else {
                    Scalar::Exact(r / p)
                }
            }
            Scalar::Float(v) => Scalar::Float(v * 2f64.powi(k)),
        }
    }

    /// True if the value is an integer (FLOAT: exactly integral).
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_integer(),
            Scalar::Float(v) => v.fract() == 0.0,
        }
    }

    /// Sums a sequence of scalars that all share `mode`.
    ///
    /// EXACT sums are accumulated per denominator first, which keeps the
    /// intermediate rationals small for families like Ford disks.
    pub fn sum<'a, I>(mode: Mode, items: I) -> Result<Scalar, ScalarError>
    where
        I: IntoIterator<Item = &'a Scalar>,
    {
        match mode {
            Mode::Float => {
                let mut acc = 0.0;
                for s in items {
                    match s {
                        Scalar::Float(v) => acc += v,
                        Scalar::Exact(_) => return Err(ScalarError::MixedModes),
                    }
                }
                Ok(Scalar::Float(acc))
            }
            Mode::Exact => {
                let mut by_den: HashMap<BigInt, BigInt> = HashMap::new();
                for s in items {
                    match s {
                        Scalar::Exact(r) => {
                            *by_den.entry(r.denom().clone()).or_insert_with(BigInt::zero) +=
                                r.numer();
                        }
                        Scalar::Float(_) => return Err(ScalarError::MixedModes),
                    }
                }
                let mut dens: Vec<_> = by_den.into_iter().collect();
                dens.sort();
                let total = dens
                    .into_iter()
                    .fold(BigRational::zero(), |acc, (d, n)| acc + BigRational::new(n, d));
                Ok(Scalar::Exact(total))
            }
        }
    }

    /// Sums scalars of either mode, converting everything to FLOAT as soon
    /// as one FLOAT term is present.
    pub fn sum_promoting<'a, I>(items: I) -> Scalar
    where
        I: IntoIterator<Item = &'a Scalar>,
        I::IntoIter: Clone,
    {
        let it = items.into_iter();
        if it.clone().all(Scalar::is_exact) {
            Scalar::sum(Mode::Exact, it).expect("all exact")
        } else {
            Scalar::Float(it.map(Scalar::to_f64).sum())
        }
    }

    /// Brings two scalars to a common mode by converting EXACT to FLOAT when
    /// the modes differ.
    pub fn unify(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        if a.mode() == b.mode() {
            (a.clone(), b.clone())
        } else {
            (a.to_float(), b.to_float())
        }
    }

    pub fn parse_rational(s: &str) -> Result<Scalar, ScalarError> {
        let t = s.trim();
        let valid = !t.is_empty()
            && t.split('/').count() <= 2
            && t.split('/').all(|p| {
                let p = p.strip_prefix('-').unwrap_or(p);
                !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit())
            });
        if !valid {
            return Err(ScalarError::BadRational(s.to_string()));
        }
        BigRational::from_str(t)
            .map(Scalar::Exact)
            .map_err(|_| ScalarError::BadRational(s.to_string()))
    }

    /// Parses either `p/q` (EXACT) or a decimal literal (FLOAT).
    pub fn parse_any(s: &str) -> Result<Scalar, ScalarError> {
        Scalar::parse_rational(s).or_else(|_| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| ScalarError::BadRational(s.to_string()))
                .and_then(Scalar::float)
        })
    }
}

fn mixed_panic() -> ! {
    panic!("mixed scalar modes")
}

pub(crate) fn float_cmp_tol(a: f64, b: f64, eps: f64) -> Ordering {
    let scale = 1f64.max(a.abs()).max(b.abs());
    if (a - b).abs() <= eps * scale {
        Ordering::Equal
    } else {
        a.total_cmp(&b)
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division for values outside the direct range.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                match (self, o) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => mixed_panic(),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Ordering panics on mixed modes, like the arithmetic operators.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, o: &Scalar) -> Option<Ordering> {
        match self.try_cmp(o) {
            Ok(ord) => Some(ord),
            Err(_) => mixed_panic(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(v) => write!(f, "{v}"),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Scalar {
        Scalar::Exact(r)
    }
}

/// EXACT values serialize as `"p/q"` strings, FLOAT values as JSON numbers.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) => s.serialize_str(&r.to_string()),
            Scalar::Float(v) => s.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Num(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => Scalar::parse_rational(&s).map_err(serde::de::Error::custom),
            Raw::Num(v) => Scalar::float(v).map_err(serde::de::Error::custom),
        }
    }
}
