use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::geom::{Body, ConvexPolygon, Disk, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::{Mode, Scalar};

use super::{out_of_range, GenError};

/// Radius `1/(2q²)` of the Ford disks with denominator `q`.
pub fn ford_radius(q: u64) -> Scalar {
    Scalar::Exact(BigRational::new(1.into(), BigInt::from(2) * BigInt::from(q) * BigInt::from(q)))
}

fn raw(n: BigInt, d: &BigInt) -> Scalar {
    Scalar::Exact(BigRational::new_raw(n, d.clone()))
}

/// The disk at `0/1` followed by every `C_{p,q}` with `1 ≤ p ≤ q ≤ Q` and
/// `gcd(p,q) = 1`, ordered by `q` then `p`, so `gen_ford(Q)` is a prefix of
/// `gen_ford(Q+1)`.
///
/// The container is `[-1/2, 3/2] × [0, 1]`: the disks at `0/1` and `1/1`
/// have radius `1/2` and stick out of the unit square.
pub fn gen_ford(q_max: u64) -> Result<PackingDoc, GenError> {
    if q_max < 1 {
        return Err(out_of_range("Q must be at least 1"));
    }
    let half = Scalar::ratio(1, 2);
    let mut bodies = vec![Body::Disk(Disk::new(Point::ratio((0, 1), (1, 2)), half)?)];
    for q in 1..=q_max {
        // Entries are built in lowest terms directly: p/q with gcd 1, and
        // 1/(2q²).
        let qb = BigInt::from(q);
        let den = BigInt::from(2) * &qb * &qb;
        let r = raw(BigInt::from(1), &den);
        for p in 1..=q {
            if p.gcd(&q) != 1 {
                continue;
            }
            let center = Point {
                x: raw(BigInt::from(p), &qb),
                y: r.clone(),
            };
            bodies.push(Body::Disk(Disk::new(center, r.clone())?));
        }
    }
    let container = ConvexPolygon::rect(Scalar::ratio(-1, 2), Scalar::ratio(0, 1), Scalar::ratio(3, 2), Scalar::ratio(1, 1))?;
    let reference = Body::Disk(Disk::new(Point::origin(Mode::Exact), Scalar::ratio(1, 1))?);
    Ok(PackingDoc::from_parts(container, bodies, Some(reference), "ford", params! {"Q" => q_max}))
}
