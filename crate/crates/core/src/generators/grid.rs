use crate::geom::{max_inscribed_square, Body, ConvexPolygon, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::{Mode, Scalar};

use super::{out_of_range, GenError};

fn ceil_sqrt(n: u64) -> u64 {
    let mut g = (n as f64).sqrt() as u64;
    while g * g < n {
        g += 1;
    }
    while g > 0 && (g - 1) * (g - 1) >= n {
        g -= 1;
    }
    g
}

/// `n` translates of the largest homothet of `c` that fits a cell of the
/// `⌈√n⌉ × ⌈√n⌉` grid on a maximal axis-aligned square in `d`, placed
/// row by row from the bottom-left cell and centered in their cells.
pub fn gen_grid_translates(c: &Body, d: &ConvexPolygon, n: u64) -> Result<PackingDoc, GenError> {
    if n < 1 {
        return Err(out_of_range("n must be at least 1"));
    }
    let mode = if c.mode() == Mode::Exact && d.mode() == Mode::Exact { Mode::Exact } else { Mode::Float };
    let (c, d) = match mode {
        Mode::Exact => (c.clone(), d.clone()),
        Mode::Float => (c.to_float(), d.to_float()),
    };
    let (origin, side) = max_inscribed_square(&d)?;
    let g = ceil_sqrt(n);
    let cell = &side / &Scalar::int(g as i64, mode);
    let (lo, hi) = c.bbox();
    let mu = &cell / &c.bounding_square_side();
    let center = Point {
        x: (&lo.x + &hi.x).half(),
        y: (&lo.y + &hi.y).half(),
    };
    let mut bodies = Vec::with_capacity(n as usize);
    for i in 0..n {
        let (row, col) = ((i / g) as i64, (i % g) as i64);
        let cx = &origin.x + &(&cell * &(Scalar::int(col, mode) + Scalar::frac(1, 2, mode)));
        let cy = &origin.y + &(&cell * &(Scalar::int(row, mode) + Scalar::frac(1, 2, mode)));
        let t = Point {
            x: cx - &center.x * &mu,
            y: cy - &center.y * &mu,
        };
        bodies.push(c.map_points(|p| &p.scale(&mu) + &t, &mu));
    }
    Ok(PackingDoc::from_parts(d, bodies, Some(c), "grid", params! {"n" => n}))
}
