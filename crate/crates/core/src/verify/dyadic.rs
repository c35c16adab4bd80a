use serde::Serialize;

use crate::geom::{area, perimeter};
use crate::model::PackingDoc;
use crate::scalar::Scalar;

use super::VerifyError;

/// `⌈log₂ n⌉` on integers; `0` for `n ≤ 1`.
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DyadicRow {
    pub k: u32,
    pub count: usize,
    /// `(per(C)²/area(C))·2^k`.
    pub bound: Scalar,
    pub perimeter: Scalar,
    /// `per(S_k) ≤ |S_k|·per(D)/2^{k-1}`.
    pub perimeter_cap: Scalar,
    pub holds: bool,
}

/// Perimeter classes `per(D)/2^k < per(C_i) ≤ per(D)/2^{k-1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DyadicCertificate {
    pub rows: Vec<DyadicRow>,
    pub leftover_count: usize,
    pub leftover_perimeter: Scalar,
    pub holds: bool,
}

fn cmp_promoting(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    let (a, b) = Scalar::unify(a, b);
    a.partial_cmp(&b).expect("comparable")
}

fn promote_sum(items: &[Scalar], zero: &Scalar) -> Scalar {
    if items.is_empty() {
        zero.clone()
    } else {
        Scalar::sum_promoting(items)
    }
}

/// Rows run over `k = 1..=max(1, ⌈log₂ n⌉)`; bodies with perimeter at most
/// `per(D)/2^{k_max}` form the leftover class `S_0`.
pub fn dyadic_certificate(doc: &PackingDoc) -> Result<DyadicCertificate, VerifyError> {
    let c = doc.reference_body.as_ref().ok_or(VerifyError::MissingReference)?;
    let per_d = doc.container.perimeter();
    let per_c = perimeter(c);
    let (pc, ac) = Scalar::unify(&per_c, &area(c));
    let shape = pc.square() / ac;
    let kmax = ceil_log2(doc.bodies.len() as u64).max(1);
    let zero = Scalar::zero(per_d.mode());

    let mut classes: Vec<Vec<Scalar>> = vec![Vec::new(); kmax as usize + 1];
    for b in &doc.bodies {
        let p = perimeter(b);
        let k = (1..=kmax)
            .find(|&k| cmp_promoting(&p, &per_d.mul_pow2(-(k as i32))).is_gt())
            .unwrap_or(0);
        classes[k as usize].push(p);
    }
    let rows: Vec<DyadicRow> = (1..=kmax)
        .map(|k| {
            let items = &classes[k as usize];
            let bound = shape.mul_pow2(k as i32);
            let per = promote_sum(items, &zero);
            let cap = per_d.mul_pow2(1 - k as i32) * &Scalar::int(items.len() as i64, per_d.mode());
            let count_ok = cmp_promoting(&Scalar::int(items.len() as i64, bound.mode()), &bound).is_le();
            let per_ok = cmp_promoting(&per, &cap).is_le();
            DyadicRow {
                k,
                count: items.len(),
                bound,
                perimeter: per,
                perimeter_cap: cap,
                holds: count_ok && per_ok,
            }
        })
        .collect();
    let holds = rows.iter().all(|r| r.holds);
    Ok(DyadicCertificate {
        rows,
        leftover_count: classes[0].len(),
        leftover_perimeter: promote_sum(&classes[0], &zero),
        holds,
    })
}
