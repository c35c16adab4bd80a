//! End-to-end acceptance checks. Every test prints one `ACnn PASS|FAIL` line.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::{generator_matrix, q, report};
use packperim::bounds::{bound_report, check_eq12, fit_scaling, thm6_constants, totient_sq_sum, Model};
use packperim::generators::*;
use packperim::geom::{Body, Disk, Point};
use packperim::model::{load_str, save, PackingDoc};
use packperim::verify::{depth_profile, is_parallel, packing_metrics, verify_packing};
use packperim::{Mode, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coprime pairs `0 ≤ p ≤ q ≤ Q`, counted by brute force.
fn coprime_pairs(q_max: u64) -> u64 {
    (1..=q_max).map(|qq| (0..=qq).filter(|&p| gcd(p, qq) == 1).count() as u64).sum()
}

#[test]
fn ac01_ford_counts() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for qq in 1..=500u64 {
        let n = gen_ford(qq).unwrap().len() as u64;
        if n != coprime_pairs(qq) {
            bad.push(qq);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = bad.is_empty() && secs < 5.0;
    report("AC01", pass, &format!("Ford body counts for Q<=500: mismatches={bad:?} time={secs:.2}s (limit 5s)"));
    assert!(pass);
}

#[test]
fn ac02_ford_perimeter_identity() {
    // Sum of 1/q² over the disks of gen_ford(1000), accumulated per q in
    // generation order, against 1 + Σφ(q)/q² for every Q.
    let doc = gen_ford(1000).unwrap();
    let mut per_q: BTreeMap<u64, Vec<Scalar>> = BTreeMap::new();
    for b in &doc.bodies {
        let d = b.as_disk().unwrap();
        let den = d.center().x.as_rational().unwrap().denom().clone();
        let den: u64 = den.try_into().unwrap();
        per_q.entry(den.max(1)).or_default().push(b.perimeter_pi_coefficient().unwrap());
    }
    let mut running = Scalar::zero(Mode::Exact);
    let mut mismatches = Vec::new();
    for (&qq, coefs) in &per_q {
        running = running + Scalar::sum(Mode::Exact, coefs).unwrap();
        if qq == 1 {
            // 0/1 and 1/1 share q = 1.
            assert_eq!(coefs.len(), 2);
        }
        if running != Scalar::one(Mode::Exact) + totient_sq_sum(qq) {
            mismatches.push(qq);
        }
    }
    // Spot checks that whole documents agree with the prefix sums.
    for qq in [1u64, 2, 7, 50, 1000] {
        let coef = packing_metrics(&gen_ford(qq).unwrap()).unwrap().perimeter_pi_coefficient.unwrap();
        if coef != Scalar::one(Mode::Exact) + totient_sq_sum(qq) {
            mismatches.push(qq);
        }
    }
    let identity = mismatches.is_empty() && per_q.len() == 1000;
    let coef = running.to_f64();
    let asymptote = 6.0 / std::f64::consts::PI.powi(2) * 1000f64.ln() + 1.0;
    let rel = (coef - asymptote).abs() / asymptote;
    let near = rel <= 0.05;
    report(
        "AC02",
        identity && near,
        &format!(
            "exact identity for Q<=1000: {} (mismatches={mismatches:?}); coefficient {coef:.4} vs (6/pi^2)lnQ+1 = {asymptote:.4}, rel {rel:.4} (limit 0.05)",
            if identity { "holds" } else { "fails" }
        ),
    );
    assert!(identity, "exact identity failed at {mismatches:?}");
    assert!(near, "relative gap {rel:.4} to (6/pi^2)lnQ+1 exceeds 0.05");
}

#[test]
fn ac03_ford_apollonian_equivalence() {
    let chain = gen_apollonian_chain(0.5, 0.5, 100).unwrap();
    let mut a: Vec<f64> = chain.bodies.iter().map(|b| b.as_disk().unwrap().radius().to_f64()).collect();
    // 1 + Σ_{q≤20} φ(q) = 129 ≥ 100 and radii shrink with q.
    let ford = gen_ford(20).unwrap();
    let mut f: Vec<f64> = ford.bodies.iter().map(|b| b.as_disk().unwrap().radius().to_f64()).collect();
    a.sort_by(|x, y| y.total_cmp(x));
    f.sort_by(|x, y| y.total_cmp(x));
    f.truncate(100);
    let worst = a.iter().zip(&f).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    let pass = a.len() == 100 && worst <= 1e-9;
    report("AC03", pass, &format!("apollonian(1/2,1/2,100) vs 100 largest Ford radii: max diff {worst:.3e} (limit 1e-9)"));
    assert!(pass);
}

#[test]
fn ac04_ford_log_growth() {
    let mut samples = Vec::new();
    for qq in [10u64, 32, 100, 316, 1000] {
        let doc = gen_ford(qq).unwrap();
        let m = packing_metrics(&doc).unwrap();
        // Oracle: π(1 + Σφ(q)/q²).
        let oracle = std::f64::consts::PI * (1.0 + totient_sq_sum(qq).to_f64());
        assert!((m.total_perimeter.to_f64() - oracle).abs() < 1e-9 * oracle);
        samples.push((doc.len() as f64, m.total_perimeter.to_f64()));
    }
    let fit = fit_scaling(&samples, Model::Log).unwrap();
    let target = 3.0 / std::f64::consts::PI;
    let slope = fit.slope_per_ln();
    let rel = (slope - target).abs() / target;
    let pass = rel <= 0.10;
    report("AC04", pass, &format!("Ford LOG fit slope vs ln n = {slope:.4}, 3/pi = {target:.4}, rel {rel:.4} (limit 0.10)"));
    assert!(pass);
}

#[test]
fn ac05_chain_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..50 {
        let r1 = rng.gen_range(0.05..1.0);
        let r2 = rng.gen_range(0.05..1.0);
        let s1 = r1 + rng.gen_range(0.0..1.0) * (1.0 - r1);
        let s2 = r2 + rng.gen_range(0.0..1.0) * (1.0 - r2);
        let small = packing_metrics(&gen_apollonian_chain(r1, r2, 200).unwrap()).unwrap().total_perimeter.to_f64();
        let large = packing_metrics(&gen_apollonian_chain(s1, s2, 200).unwrap()).unwrap().total_perimeter.to_f64();
        worst = worst.max(small - large);
    }
    let pass = worst <= 1e-9;
    report("AC05", pass, &format!("50 ordered radius pairs, n=200: max per(small)-per(large) = {worst:.3e} (limit 1e-9)"));
    assert!(pass);
}

#[test]
fn ac06_greedy() {
    let start = Instant::now();
    let disks = greedy_disks(50).unwrap();
    let first_ok = (disks[0].2 - 0.5).abs() <= 1e-12;
    let corner_ok = disks[1..5].iter().all(|d| (d.2 - corner_radius()).abs() <= 1e-9);
    let mut chain_ok = true;
    let mut margins = Vec::new();
    for n in [10usize, 25, 50] {
        let greedy = packing_metrics(&gen_greedy_square(n).unwrap()).unwrap().total_perimeter.to_f64();
        let chain = packing_metrics(&gen_apollonian_chain(0.5, corner_radius(), n).unwrap()).unwrap().total_perimeter.to_f64();
        chain_ok &= greedy >= chain;
        margins.push(greedy - chain);
    }
    let full = gen_greedy_square(50).unwrap();
    let mut bad_prefix = None;
    for k in 1..=50 {
        let mut prefix = full.clone();
        prefix.bodies.truncate(k);
        if !verify_packing(&prefix, true).summary {
            bad_prefix = Some(k);
            break;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = first_ok && corner_ok && chain_ok && bad_prefix.is_none() && secs < 60.0;
    report(
        "AC06",
        pass,
        &format!(
            "greedy: first=1/2 {first_ok}, corners {corner_ok}, per(greedy)-per(chain) at n=10,25,50 = {margins:.4?}, failing prefix {bad_prefix:?}, time {secs:.2}s (limit 60s)"
        ),
    );
    assert!(pass);
}

#[test]
fn ac07_explicit_construction() {
    let mut detail = Vec::new();
    let mut pass = true;
    for k_max in 0..=4u32 {
        let alloc = explicit_allocation(k_max).unwrap();
        let mut class_sums: Vec<Scalar> = vec![Scalar::zero(Mode::Exact); k_max as usize + 1];
        for (k, _, d) in &alloc.disks {
            class_sums[*k] = &class_sums[*k] + d;
        }
        for k in 1..=k_max as usize {
            pass &= class_sums[k] == q(1, 2);
            pass &= alloc.class_count(k) == 16usize.pow(k as u32) / 2;
        }
        let total = class_sums.into_iter().reduce(|a, b| a + b).unwrap();
        pass &= total == Scalar::one(Mode::Exact) + q(k_max as i64, 2);
        let doc = gen_explicit_disks(k_max).unwrap();
        let report = verify_packing(&doc, true);
        pass &= doc.mode() == Mode::Exact && report.summary;
        detail.push(format!("K={k_max}: n={} verified={}", doc.len(), report.summary));
    }
    report("AC07", pass, &format!("explicit 1/16^k disks, exact class sums and counts; {}", detail.join(", ")));
    assert!(pass);
}

#[test]
fn ac08_square_layers() {
    let mut pass = true;
    let mut detail = Vec::new();
    for l in 1..=5u32 {
        let doc = gen_square_layers(l).unwrap();
        let m = packing_metrics(&doc).unwrap();
        let count: usize = (1..=l).map(|j| (2 * l as usize).pow(j - 1)).sum();
        let verified = verify_packing(&doc, false).summary;
        let c = doc.reference_body.as_ref().unwrap();
        let (_, rho2) = thm6_constants(c, &doc.container.edge(0).direction().unwrap()).unwrap();
        let lam = Scalar::int(l as i64, Mode::Exact);
        let a = doc.container.edge(0).length();
        let mut eq12 = true;
        for r2 in [rho2, q(1000, 1)] {
            let profile = depth_profile(&doc, 0, &lam, &r2).unwrap();
            eq12 &= check_eq12(&profile, &a, l).holds;
        }
        let ok = m.total_escape == q(1, 1)
            && m.total_perimeter == q(l as i64, 1)
            && doc.len() == count
            && verified
            && eq12;
        pass &= ok;
        detail.push(format!("lambda={l}: esc={} per={} n={} ok={ok}", m.total_escape, m.total_perimeter, doc.len()));
    }
    report("AC08", pass, &detail.join("; "));
    assert!(pass);
}

#[test]
fn ac09_bound_soundness() {
    let mut failures = Vec::new();
    let mut evaluated = 0;
    for (name, doc) in generator_matrix() {
        let contact = verify_packing(&doc, true).summary;
        assert!(verify_packing(&doc, false).summary, "{name} does not verify");
        let c = doc.reference_body.as_ref().unwrap();
        let polygon_parallel = c.as_polygon().is_some() && is_parallel(&doc.container, c);
        let mut which = vec!["prop1", "prop5"];
        if contact {
            which.push("prop2");
        }
        if polygon_parallel && contact {
            which.push("prop4");
        }
        if polygon_parallel {
            which.push("thm6");
        }
        for w in which {
            let r = bound_report(&doc, w, None).unwrap();
            evaluated += 1;
            if !r.sound() {
                failures.push(format!("{name}/{w}: slack {}", r.slack));
            }
        }
    }
    let pass = failures.is_empty();
    report("AC09", pass, &format!("{evaluated} bound evaluations over the generator matrix; negative slack: {failures:?}"));
    assert!(pass);
}

/// Longest run of consecutive entries `≥ 0.5·median`.
fn longest_run_above_half_median(values: &[f64]) -> usize {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 { sorted[n / 2] } else { (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0 };
    let (mut best, mut cur) = (0, 0);
    for &v in values {
        cur = if v >= 0.5 * median { cur + 1 } else { 0 };
        best = best.max(cur);
    }
    best
}

#[test]
fn ac10_sloped_squares() {
    let mut pass = true;
    let mut detail = Vec::new();
    for s in [0.25, 0.5, 1.0] {
        let run = sloped_squares(s, 8).unwrap();
        let verified = verify_packing(&run.doc, false).summary;
        let streak = longest_run_above_half_median(&run.class_perimeters);
        let (mut cn, mut cp) = (0.0, 0.0);
        let samples: Vec<(f64, f64)> = run
            .class_counts
            .iter()
            .zip(&run.class_perimeters)
            .map(|(&n, &p)| {
                cn += n as f64;
                cp += p;
                (cn, cp)
            })
            .collect();
        let fit = fit_scaling(&samples, Model::Log).unwrap();
        let ok = verified && streak >= 6 && fit.a > 0.0 && fit.r_squared >= 0.9;
        pass &= ok;
        detail.push(format!(
            "s={s}: n={} verified={verified} streak={streak} (need 6) slope={:.4} R2={:.4} (need 0.9)",
            run.doc.len(),
            fit.a,
            fit.r_squared
        ));
    }
    report("AC10", pass, &detail.join("; "));
    assert!(pass);
}

fn random_disks(n: usize, r: f64, seed: u64) -> PackingDoc {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cell = 2.0 * r;
    let g = (1.0 / cell).ceil() as usize;
    let mut grid: Vec<Vec<(f64, f64)>> = vec![Vec::new(); g * g];
    let mut bodies = Vec::with_capacity(n);
    while bodies.len() < n {
        let x = rng.gen_range(r..1.0 - r);
        let y = rng.gen_range(r..1.0 - r);
        let (cx, cy) = ((x / cell) as usize, (y / cell) as usize);
        let mut free = true;
        for i in cx.saturating_sub(1)..=(cx + 1).min(g - 1) {
            for j in cy.saturating_sub(1)..=(cy + 1).min(g - 1) {
                free &= grid[i * g + j].iter().all(|&(u, v)| (u - x).hypot(v - y) > 2.0 * r * (1.0 + 1e-9));
            }
        }
        if free {
            grid[cx * g + cy].push((x, y));
            bodies.push(Body::Disk(Disk::new(Point::float(x, y), Scalar::Float(r)).unwrap()));
        }
    }
    let reference = Body::Disk(Disk::new(Point::float(0.0, 0.0), Scalar::Float(1.0)).unwrap());
    PackingDoc::new(
        packperim::model::unit_square(Mode::Float),
        bodies,
        Some(reference),
        "random",
        Default::default(),
    )
    .unwrap()
}

#[test]
fn ac11_verifier_performance() {
    let doc = random_disks(10_000, 0.002, 11);
    let start = Instant::now();
    let r = verify_packing(&doc, false);
    let secs = start.elapsed().as_secs_f64();
    let pass = r.summary && secs < 10.0;
    report("AC11", pass, &format!("10^4 random float disks verified={} in {secs:.3}s (limit 10s)", r.summary));
    assert!(pass);
}

#[test]
fn ac12_round_trip() {
    let mut unstable = Vec::new();
    let mut docs = generator_matrix();
    docs.push(("explicit(3)".to_string(), gen_explicit_disks(3).unwrap()));
    docs.push(("ford(40)".to_string(), gen_ford(40).unwrap()));
    for (name, doc) in &docs {
        let first = save(doc);
        let second = save(&load_str(&first).unwrap());
        if first != second {
            unstable.push(name.clone());
        }
    }
    let pass = unstable.is_empty();
    report("AC12", pass, &format!("save-load-save over {} generated docs; unstable: {unstable:?}", docs.len()));
    assert!(pass);
}
