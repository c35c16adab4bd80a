//! Small linear programs solved by vertex enumeration. Dimensions are 2 or 3
//! and constraint counts stay in the tens, so enumerating every basis is
//! cheap and keeps EXACT inputs exact.

use crate::scalar::{Mode, Scalar};

use super::body::ConvexPolygon;
use super::frame::EdgeFrame;
use super::point::Point;
use super::GeomError;

/// `coef · z ≥ rhs`.
#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coef: Vec<Scalar>,
    pub rhs: Scalar,
}

fn solve(rows: &[&Constraint], dim: usize) -> Option<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|c| {
            let mut r = c.coef.clone();
            r.push(c.rhs.clone());
            r
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())?;
        if let Scalar::Float(v) = m[pivot][col] {
            if v.abs() < 1e-14 {
                return None;
            }
        }
        m.swap(col, pivot);
        for r in 0..dim {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for k in col..=dim {
                    let sub = &f * &m[col][k];
                    m[r][k] = &m[r][k] - &sub;
                }
            }
        }
    }
    Some((0..dim).map(|i| &m[i][dim] / &m[i][i]).collect())
}

fn feasible(z: &[Scalar], cons: &[Constraint]) -> bool {
    cons.iter().all(|c| {
        let lhs = c
            .coef
            .iter()
            .zip(z)
            .map(|(a, b)| a * b)
            .reduce(|a, b| a + b)
            .expect("nonempty");
        match &lhs {
            Scalar::Exact(_) => lhs >= c.rhs,
            Scalar::Float(v) => *v >= c.rhs.to_f64() - 1e-12 * (1.0 + v.abs()),
        }
    })
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Maximizes `z[objective]` over the polytope. When the optimum is attained
/// on a face, returns the midpoint of the lexicographically smallest and
/// largest optimal vertices.
pub(crate) fn maximize(dim: usize, cons: &[Constraint], objective: usize) -> Option<Vec<Scalar>> {
    let mut best: Option<(Scalar, Vec<Scalar>, Vec<Scalar>)> = None;
    combinations(cons.len(), dim, &mut |idx| {
        let rows: Vec<&Constraint> = idx.iter().map(|&i| &cons[i]).collect();
        let Some(z) = solve(&rows, dim) else { return };
        if !feasible(&z, cons) {
            return;
        }
        let val = z[objective].clone();
        let lex = |a: &[Scalar], b: &[Scalar]| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.partial_cmp(y).unwrap())
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        };
        match &mut best {
            None => best = Some((val, z.clone(), z)),
            Some((bv, lo, hi)) => {
                let cmp = match (&val, &*bv) {
                    (Scalar::Float(a), Scalar::Float(b)) => crate::scalar::float_cmp_tol(*a, *b, 1e-12),
                    _ => val.partial_cmp(bv).unwrap(),
                };
                match cmp {
                    std::cmp::Ordering::Greater => {
                        *bv = val;
                        *lo = z.clone();
                        *hi = z;
                    }
                    std::cmp::Ordering::Equal => {
                        if lex(&z, lo).is_lt() {
                            *lo = z.clone();
                        }
                        if lex(&z, hi).is_gt() {
                            *hi = z;
                        }
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
        }
    });
    best.map(|(_, lo, hi)| lo.iter().zip(&hi).map(|(a, b)| (a + b).half()).collect())
}

/// Constraints keeping the four corners of `[x,x+t]×[y,y+t]` inside `poly`,
/// as rows over `(x, y, t)`.
fn square_constraints(poly: &ConvexPolygon) -> Vec<Constraint> {
    let mut out = Vec::new();
    for e in poly.edges() {
        let v = e.vector();
        for (dx, dy) in [(0, 0), (1, 0), (1, 1), (0, 1)] {
            let mode = v.x.mode();
            let t = &v.x * &Scalar::int(dy, mode) - &v.y * &Scalar::int(dx, mode);
            out.push(Constraint {
                coef: vec![-&v.y, v.x.clone(), t],
                rhs: &v.x * &e.a.y - &v.y * &e.a.x,
            });
        }
    }
    out
}

/// A largest axis-aligned square inside `poly`: `(lower-left corner, side)`.
pub fn max_inscribed_square(poly: &ConvexPolygon) -> Result<(Point, Scalar), GeomError> {
    let cons = square_constraints(poly);
    let z = maximize(3, &cons, 2).ok_or(GeomError::Infeasible("no inscribed square"))?;
    if !z[2].is_positive() {
        return Err(GeomError::Infeasible("no inscribed square"));
    }
    Ok((Point { x: z[0].clone(), y: z[1].clone() }, z[2].clone()))
}

/// A largest square standing on edge `index` of `poly`, axis-aligned in that
/// edge's frame. Returns the frame, the square's left abscissa in the frame
/// and its side.
pub fn max_square_on_edge(poly: &ConvexPolygon, index: usize) -> Result<(EdgeFrame, Scalar, Scalar), GeomError> {
    let frame = EdgeFrame::of_edge(poly, index)?;
    let local = frame.polygon_to_frame(poly);
    let mode: Mode = frame.mode();
    // Fix y = 0 by dropping that column.
    let cons: Vec<Constraint> = square_constraints(&local)
        .into_iter()
        .map(|c| Constraint {
            coef: vec![c.coef[0].clone(), c.coef[2].clone()],
            rhs: c.rhs,
        })
        .chain(std::iter::once(Constraint {
            coef: vec![Scalar::zero(mode), Scalar::one(mode)],
            rhs: Scalar::zero(mode),
        }))
        .collect();
    let z = maximize(2, &cons, 1).ok_or(GeomError::Infeasible("no square on edge"))?;
    if !z[1].is_positive() {
        return Err(GeomError::Infeasible("no square on edge"));
    }
    Ok((frame, z[0].clone(), z[1].clone()))
}
