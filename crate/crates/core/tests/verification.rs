mod common;

use common::q;
use packperim::generators::*;
use packperim::geom::{apply_homothety, Body, ConvexPolygon, Point};
use packperim::model::PackingDoc;
use packperim::verify::{depth_profile, dyadic_certificate, verify_packing};
use packperim::{Mode, Scalar};
use proptest::prelude::*;

fn rescaled(doc: &PackingDoc, mu: &Scalar) -> PackingDoc {
    let mut out = doc.clone();
    out.container = ConvexPolygon::new(doc.container.vertices().iter().map(|v| v.scale(mu)).collect()).unwrap();
    out.bodies = doc
        .bodies
        .iter()
        .map(|b| apply_homothety(b, mu, &Point::origin(Mode::Exact)).unwrap())
        .collect();
    out
}

fn translated(b: &Body, dx: Scalar) -> Body {
    apply_homothety(b, &Scalar::one(Mode::Exact), &Point { x: dx, y: Scalar::zero(Mode::Exact) }).unwrap()
}

fn exact_docs() -> Vec<PackingDoc> {
    vec![
        gen_ford(8).unwrap(),
        gen_explicit_disks(2).unwrap(),
        gen_square_layers(3).unwrap(),
        gen_grid_translates(&Body::Polygon(common::triangle()), &packperim::model::unit_square(Mode::Exact), 5).unwrap(),
    ]
}

#[test]
fn exact_rescaling_preserves_verdicts() {
    for doc in exact_docs() {
        let base = verify_packing(&doc, true);
        for mu in [q(1, 3), q(7, 2), q(1000, 1)] {
            let r = verify_packing(&rescaled(&doc, &mu), true);
            let verdicts = |r: &packperim::verify::VerificationReport| r.checks.iter().map(|c| c.pass).collect::<Vec<_>>();
            assert_eq!(verdicts(&base), verdicts(&r), "{}", doc.metadata.generator);
        }
    }
}

#[test]
fn adjacent_tangent_bodies_overlap_after_any_push() {
    // Neighbours in the same class of the explicit construction touch.
    let doc = gen_explicit_disks(2).unwrap();
    let (i, j) = (9, 10);
    for delta in [q(1, 1_000_000_000), q(1, 1 << 40)] {
        let mut bad = doc.clone();
        bad.bodies[i] = translated(&doc.bodies[i], delta);
        let r = verify_packing(&bad, false);
        let check = r.check("disjointness").unwrap();
        assert!(!check.pass);
        assert_eq!(check.witness.as_ref().unwrap().bodies, vec![i, j]);
    }
    // Layer squares tile edge to edge.
    let doc = gen_square_layers(3).unwrap();
    let mut bad = doc.clone();
    bad.bodies[2] = translated(&doc.bodies[2], q(-1, 1 << 50));
    let check = verify_packing(&bad, false).check("disjointness").unwrap().clone();
    assert_eq!(check.witness.unwrap().bodies, vec![1, 2]);
}

#[test]
fn overlapping_pair_is_reported_with_its_depth() {
    let mut doc = gen_square_layers(2).unwrap();
    doc.bodies[2] = translated(&doc.bodies[2], q(-1, 16));
    let w = verify_packing(&doc, false).check("disjointness").unwrap().witness.clone().unwrap();
    assert_eq!(w.bodies, vec![1, 2]);
    assert_eq!(w.value, q(1, 16));
}

#[test]
fn depth_measures_double_count_projections() {
    let square = Body::Polygon(packperim::model::unit_square(Mode::Exact));
    let docs = vec![
        gen_square_layers(3).unwrap(),
        gen_square_layers(4).unwrap(),
        gen_layers_general(&square, &common::triangle(), 0, 3).unwrap(),
        gen_layers_general(&square, &common::triangle(), 1, 2).unwrap(),
    ];
    for doc in docs {
        for edge in 0..doc.container.len() {
            let Ok(p) = depth_profile(&doc, edge, &q(2, 1), &q(1000, 1)) else {
                continue;
            };
            let proj: Vec<Scalar> = p.projections.iter().map(|(a, b)| b - a).collect();
            let lhs = if proj.is_empty() { 0.0 } else { Scalar::sum_promoting(&proj).to_f64() };
            let rhs = if p.measures.is_empty() { 0.0 } else { Scalar::sum_promoting(&p.measures).to_f64() };
            assert!((lhs - rhs).abs() <= 1e-12 * lhs.max(1.0), "edge {edge}: {lhs} vs {rhs}");
            if doc.mode() == Mode::Exact {
                assert_eq!(Scalar::sum(Mode::Exact, &proj).unwrap(), Scalar::sum(Mode::Exact, &p.measures).unwrap());
            }
        }
    }
}

#[test]
fn dyadic_classes_partition_the_bodies() {
    for doc in [gen_ford(15).unwrap(), gen_explicit_disks(3).unwrap(), gen_greedy_square(40).unwrap()] {
        let cert = dyadic_certificate(&doc).unwrap();
        let counted: usize = cert.rows.iter().map(|r| r.count).sum::<usize>() + cert.leftover_count;
        assert_eq!(counted, doc.len());
        assert!(cert.holds);
        assert!(cert.rows.iter().all(|r| r.holds));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdicts_ignore_body_order(seed in any::<u64>(), which in 0usize..4) {
        let mut doc = exact_docs().swap_remove(which);
        // Push one body onto another so there is something to find.
        let n = doc.len();
        if n > 1 && seed % 2 == 0 {
            let k = (seed as usize / 2) % (n - 1);
            doc.bodies[k + 1] = doc.bodies[k].clone();
        }
        let base = verify_packing(&doc, true);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut shuffled = doc.clone();
        shuffled.bodies = perm.iter().map(|&i| doc.bodies[i].clone()).collect();
        let r = verify_packing(&shuffled, true);
        for (a, b) in base.checks.iter().zip(&r.checks) {
            prop_assert_eq!(a.pass, b.pass);
            if let (Some(wa), Some(wb)) = (&a.witness, &b.witness) {
                let mut mapped: Vec<usize> = wb.bodies.iter().map(|&i| perm[i]).collect();
                mapped.sort();
                if a.name == "disjointness" {
                    // The only overlap is the duplicated pair.
                    prop_assert_eq!(&mapped, &wa.bodies);
                    prop_assert_eq!(&wa.value, &wb.value);
                }
            }
        }
    }
}
