use crate::geom::{max_square_on_edge, Body, ConvexPolygon, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::{Mode, Scalar};

use super::{out_of_range, GenError};

/// Extra room `m = max(0, 1/λ − 3/8)` on the left, right and top of the unit
/// square, so that the layer-1 square is nearest to the bottom edge.
pub fn layer_margin(lambda: u32) -> Scalar {
    let m = Scalar::ratio(1, lambda as i64) - Scalar::ratio(3, 8);
    if m.is_positive() {
        m
    } else {
        Scalar::zero(Mode::Exact)
    }
}

/// Lower-left corners and sides of the λ-layer squares, layer by layer.
fn layer_squares(lambda: u32) -> Vec<(Point, Scalar)> {
    let l = lambda as i64;
    let mut out = Vec::new();
    for j in 1..=lambda {
        let count = (2 * l).pow(j - 1);
        let side = Scalar::ratio(1, 4 * count);
        let height = Scalar::ratio(1, 2i64.pow(j - 1) * l.pow(j));
        // Squares tile the span [3/8, 5/8] of the layer-1 square.
        for i in 0..count {
            let x = Scalar::ratio(3, 8) + &side * &Scalar::int(i, Mode::Exact);
            out.push((Point { x, y: height.clone() }, side.clone()));
        }
    }
    out
}

fn check_lambda(lambda: u32) -> Result<(), GenError> {
    if !(1..=6).contains(&lambda) {
        return Err(out_of_range("lambda must be in 1..=6"));
    }
    Ok(())
}

/// Layer `j = 1..λ` holds `(2λ)^{j-1}` squares of side `1/(4(2λ)^{j-1})` at
/// height `1/(2^{j-1}λ^j)`.
///
/// The container is `[-m, 1+m] × [0, 1+2m]` with `m` from [`layer_margin`]
/// (the unit square for `λ ≥ 3`).
pub fn gen_square_layers(lambda: u32) -> Result<PackingDoc, GenError> {
    check_lambda(lambda)?;
    let m = layer_margin(lambda);
    let one = Scalar::one(Mode::Exact);
    let container = ConvexPolygon::rect(-&m, Scalar::zero(Mode::Exact), &one + &m, &one + &m.mul_pow2(1))?;
    let bodies = layer_squares(lambda)
        .into_iter()
        .map(|(p, s)| ConvexPolygon::square(&p, &s).map(Body::Polygon))
        .collect::<Result<Vec<_>, _>>()?;
    let reference = Body::Polygon(ConvexPolygon::unit_square(Mode::Exact));
    Ok(PackingDoc::from_parts(
        container,
        bodies,
        Some(reference),
        "square-layers",
        params! {"lambda" => lambda},
    ))
}

/// The λ-layer construction inside the maximal square `U(a)` on edge
/// `a_index` of `d`, with each square replaced by the largest homothet of
/// `c` that fits in it, standing on the square's bottom side and centered
/// horizontally.
///
/// Coordinates are EXACT when every input is EXACT and the edge length is
/// rational; otherwise FLOAT.
pub fn gen_layers_general(c: &Body, d: &ConvexPolygon, a_index: usize, lambda: u32) -> Result<PackingDoc, GenError> {
    check_lambda(lambda)?;
    let exact = c.mode() == Mode::Exact && d.mode() == Mode::Exact;
    let (frame, x0, side) = max_square_on_edge(d, a_index)?;
    let mode = if exact { frame.mode() } else { Mode::Float };
    let conv = |s: &Scalar| s.to_mode(mode).expect("to float");
    let (x0, side) = (conv(&x0), conv(&side));
    let m = conv(&layer_margin(lambda));
    let one = Scalar::one(mode);
    // Layer container [-m, 1+m] × [0, 1+2m] onto U(a) = [x0, x0+side] × [0, side].
    let k = &side / &(&one + &m.mul_pow2(1));
    let c_frame = frame.body_to_frame(&if mode == Mode::Float { c.to_float() } else { c.clone() });
    let (lo, hi) = c_frame.bbox();
    let (cw, ch) = (&hi.x - &lo.x, &hi.y - &lo.y);
    let c_side = cw.clone().max(ch);
    let mut bodies = Vec::new();
    for (p, s) in layer_squares(lambda) {
        let ux = &x0 + &(&(&conv(&p.x) + &m) * &k);
        let uy = &conv(&p.y) * &k;
        let us = &conv(&s) * &k;
        let mu = &us / &c_side;
        // Bounding box of mu·C_frame + t: bottom at uy, centered in [ux, ux+us].
        let tx = &ux + &(&us - &(&cw * &mu)).half() - &lo.x * &mu;
        let ty = &uy - &lo.y * &mu;
        let t = Point { x: tx, y: ty };
        let placed = c_frame.map_points(|q| &q.scale(&mu) + &t, &mu);
        let world = frame.body_from_frame(&placed);
        bodies.push(if mode == Mode::Float { world.to_float() } else { world });
    }
    let container = if mode == Mode::Float { d.to_float() } else { d.clone() };
    let reference = if mode == Mode::Float { c.to_float() } else { c.clone() };
    Ok(PackingDoc::from_parts(
        container,
        bodies,
        Some(reference),
        "layers-general",
        params! {"edge" => a_index, "lambda" => lambda},
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_two_layout() {
        let doc = gen_square_layers(2).unwrap();
        assert_eq!(doc.len(), 5);
        let first = doc.bodies[0].as_polygon().unwrap();
        assert_eq!(first.vertices()[0], Point::ratio((3, 8), (1, 2)));
        assert_eq!(first.perimeter(), Scalar::ratio(1, 1));
        for b in &doc.bodies[1..] {
            let p = b.as_polygon().unwrap();
            assert_eq!(p.vertices()[0].y, Scalar::ratio(1, 8));
            assert_eq!(p.perimeter(), Scalar::ratio(1, 4));
        }
    }

    #[test]
    fn counts() {
        for l in 1..=4u32 {
            let expect: usize = (1..=l).map(|j| (2 * l as usize).pow(j - 1)).sum();
            assert_eq!(gen_square_layers(l).unwrap().len(), expect);
        }
        assert!(gen_square_layers(0).is_err());
        assert!(gen_square_layers(7).is_err());
    }

    #[test]
    fn margins() {
        assert_eq!(layer_margin(1), Scalar::ratio(5, 8));
        assert_eq!(layer_margin(2), Scalar::ratio(1, 8));
        assert_eq!(layer_margin(3), Scalar::ratio(0, 1));
    }
}
