#![allow(dead_code)]

use std::io::Write;

use packperim::generators::*;
use packperim::geom::{Body, ConvexPolygon, Point};
use packperim::model::PackingDoc;
use packperim::{Mode, Scalar};

/// Writes a result line straight to the process stdout so it shows up even
/// when the test harness captures output.
pub fn report(id: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{id} {verdict} {detail}");
    let _ = out.flush();
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

pub fn triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point::int(0, 0, Mode::Exact),
        Point::int(2, 0, Mode::Exact),
        Point::int(0, 1, Mode::Exact),
    ])
    .unwrap()
}

/// One document per generator family with small parameters.
pub fn generator_matrix() -> Vec<(String, PackingDoc)> {
    let square = ConvexPolygon::unit_square(Mode::Exact);
    let mut out = vec![
        ("ford(12)".to_string(), gen_ford(12).unwrap()),
        ("apollonian(1/2,1/2,60)".to_string(), gen_apollonian_chain(0.5, 0.5, 60).unwrap()),
        ("apollonian(0.3,0.8,40)".to_string(), gen_apollonian_chain(0.3, 0.8, 40).unwrap()),
        ("explicit(2)".to_string(), gen_explicit_disks(2).unwrap()),
        ("greedy(20)".to_string(), gen_greedy_square(20).unwrap()),
        (
            "grid(triangle in square, 10)".to_string(),
            gen_grid_translates(&Body::Polygon(triangle()), &square, 10).unwrap(),
        ),
        (
            "grid(square in triangle, 7)".to_string(),
            gen_grid_translates(&Body::Polygon(square.clone()), &triangle(), 7).unwrap(),
        ),
        (
            "layers-general(square in triangle, edge 0, 2)".to_string(),
            gen_layers_general(&Body::Polygon(square.clone()), &triangle(), 0, 2).unwrap(),
        ),
        ("sloped(1/2, 4)".to_string(), gen_sloped_squares(0.5, 4).unwrap()),
    ];
    for l in 1..=4 {
        out.push((format!("square-layers({l})"), gen_square_layers(l).unwrap()));
    }
    out
}
