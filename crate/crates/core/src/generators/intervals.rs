//! Recursive allocation of sub-intervals of a body's projection interval,
//! kept away from the point where the body touches the boundary.

use serde::Serialize;

use crate::scalar::Scalar;

/// A closed interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: Scalar,
    pub hi: Scalar,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar) -> Interval {
        Interval { lo, hi }
    }

    pub fn len(&self) -> Scalar {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Distance from `x` to the nearest point of the interval.
    pub fn distance_to(&self, x: &Scalar) -> Scalar {
        if x < &self.lo {
            &self.lo - x
        } else if x > &self.hi {
            x - &self.hi
        } else {
            Scalar::zero(x.mode())
        }
    }
}

/// One step of the quarter/half rule on the residual `j` around `touch`.
///
/// If `touch` lies in the central quarter of `j`, the allocation is the
/// left and right quarters and the residual the middle half; otherwise the
/// allocation is the half away from `touch` and the residual the half
/// containing it.
pub fn allocate_step(j: &Interval, touch: &Scalar) -> (Vec<Interval>, Interval) {
    let len = j.len();
    let at = |num: i32| &j.lo + &len.mul_pow2(-3) * &Scalar::int(num as i64, len.mode());
    let (c_lo, c_hi) = (at(3), at(5));
    if touch < &c_lo {
        let mid = at(4);
        (vec![Interval::new(mid.clone(), j.hi.clone())], Interval::new(j.lo.clone(), mid))
    } else if touch > &c_hi {
        let mid = at(4);
        (vec![Interval::new(j.lo.clone(), mid.clone())], Interval::new(mid, j.hi.clone()))
    } else {
        let (q1, q3) = (at(2), at(6));
        (
            vec![Interval::new(j.lo.clone(), q1.clone()), Interval::new(q3.clone(), j.hi.clone())],
            Interval::new(q1, q3),
        )
    }
}

/// Allocation state of one body: its touch abscissa `x_p`, projection
/// `I(Q)`, the residual `J_k(Q)` and the intervals `I_1(Q), I_2(Q), …`
/// handed out so far.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalRecord {
    pub touch: Scalar,
    pub projection: Interval,
    pub residual: Interval,
    pub allocated: Vec<Vec<Interval>>,
}

impl IntervalRecord {
    pub fn new(touch: Scalar, projection: Interval) -> IntervalRecord {
        IntervalRecord {
            residual: projection.clone(),
            touch,
            projection,
            allocated: Vec::new(),
        }
    }

    /// Index `k` of the next allocation `I_k(Q)`.
    pub fn next_k(&self) -> usize {
        self.allocated.len() + 1
    }

    /// Computes `I_k(Q)` for the next `k` and shrinks the residual.
    pub fn advance(&mut self) -> &[Interval] {
        let (alloc, rest) = allocate_step(&self.residual, &self.touch);
        self.residual = rest;
        self.allocated.push(alloc);
        self.allocated.last().expect("just pushed")
    }
}
