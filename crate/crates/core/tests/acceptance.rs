//! Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use logconvex::convexity::{bisection, is_log_concave, is_log_convex, log_check_from, Mode, Parity};
use logconvex::exact_arith::scalar::{rat, rat_int};
use logconvex::exact_arith::{Int, IntPoly, Rat, RatPoly, SurdExpr};
use logconvex::qpolys::{
    check_c1_c2, check_thm_t_qlcx, gen_poly_seq, q_log_convex_check, transform_preserves_lcx_probe,
    TriangleRec,
};
use logconvex::recurrence_analysis::{
    bisection_analysis, bisection_shapes, c_plus_residual, check_thm_c_minus, check_thm_c_plus,
    check_thm_crit_plus, compute_abc, eq8_residual, BisectionShape, Mu,
};
use logconvex::sequences::{gen_named, gen_triangle, named_recurrence, Recurrence3, Sign};
use logconvex::transforms::{ordinary_convolution, pinned_convolution_counterexample, verify_identity, IDENTITY_NAMES};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{took:.2?}"))
}

fn rec(name: &str) -> Recurrence3 {
    named_recurrence(name).expect("catalogue recurrence")
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// 100 distinct sample points in `2..=1000`, reproducible.
fn sample_ns(seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ns = std::collections::BTreeSet::new();
    while ns.len() < 100 {
        ns.insert(rng.gen_range(2..=1000usize));
    }
    ns.into_iter().collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases: &[(&str, &[i64])] = &[
        ("motzkin", &[1, 1]),
        ("fine", &[1, 0]),
        ("fine_shifted", &[1, 2, 6, 18]),
        ("delannoy", &[1, 3, 13]),
        ("little_schroder", &[1, 1, 3]),
        ("derangements", &[1, 0, 1, 2, 9]),
        ("directed_animals", &[1, 1, 2]),
        ("polyhexes", &[1, 1, 3]),
        ("cubic_walks", &[1, 4, 17]),
        ("euler", &[1, 1, 1, 2]),
    ];
    for (name, prefix) in cases {
        let z = gen_named(name, prefix.len() - 1).map_err(|e| e.to_string())?;
        ensure(z.values() == ints(prefix).as_slice(), || format!("{name}: got {z}"))?;
    }
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let names: &[(&str, usize)] = &[
        ("motzkin", 0),
        ("fine", 2),
        ("derangements", 2),
        ("directed_animals", 0),
        ("delannoy", 0),
        ("little_schroder", 0),
        ("large_schroder", 0),
        ("polyhexes", 0),
        ("cubic_walks", 0),
        ("catalan", 0),
        ("central_binomial", 0),
        ("bell", 0),
        ("ordered_bell", 0),
        ("two_colored_bell", 0),
    ];
    for &(name, from) in names {
        let z = gen_named(name, 2000).map_err(|e| e.to_string())?;
        let r = log_check_from(&z, Mode::Convex, from).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{name}: {:?}", r.first_violation))?;
    }
    within(start, Duration::from_secs(30))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let m = check_thm_crit_plus(&rec("motzkin"), 500).map_err(|e| e.to_string())?;
    ensure(m.certified(), || format!("motzkin not certified: {m:?}"))?;

    let fine = rec("fine_shifted");
    let stated = |n: i64| rat(2 * (20 * n * n + 151 * n + 171), (n + 3) * (n + 5));
    let derived = |n: i64| rat(42 * (n + 1), (n + 3) * (n + 5));
    let mut mismatches = Vec::new();
    let mut derived_ok = true;
    for n in sample_ns(3) {
        let r = eq8_residual(&fine, n).map_err(|e| e.to_string())?;
        let ni = n as i64;
        if r != SurdExpr::rational(stated(ni)) {
            mismatches.push(n);
        }
        derived_ok &= r == SurdExpr::rational(derived(ni));
    }
    ensure(mismatches.is_empty(), || {
        format!(
            "fine residual differs from 2(20n^2+151n+171)/((n+3)(n+5)) at {} of 100 samples (first n = {}); \
             exact residual is 42(n+1)/((n+3)(n+5)) at {} samples; the stated form is what b_n = 7n+6 gives, \
             the recurrence has b_n = 7n+16; both are positive, so the certificate itself holds",
            mismatches.len(),
            mismatches[0],
            if derived_ok { "all" } else { "not all" }
        )
    })?;
    within(start, Duration::from_secs(60))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let cases: [(&str, &str, fn(i64) -> Rat); 2] = [
        ("derangements_shifted", "(2n+5)/2", |n| rat(2 * n + 1, 4)),
        ("directed_animals", "6n/(2n+1)", |n| rat(9 * (n - 1), (2 * n - 1) * (2 * n + 3))),
    ];
    for (name, mu_text, closed) in cases {
        let r = rec(name);
        let mu = Mu::parse(mu_text).map_err(|e| e.to_string())?;
        let cert = check_thm_c_plus(&r, &mu, 500).map_err(|e| e.to_string())?;
        ensure(cert.certified(), || format!("{name}: {cert:?}"))?;
        for n in sample_ns(4) {
            let got = c_plus_residual(&r, &mu, n).map_err(|e| e.to_string())?;
            ensure(got == closed(n as i64), || format!("{name}: residual at n = {n} is {got}"))?;
        }
    }
    within(start, Duration::from_secs(60))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let triples: &[(&str, [i64; 3], usize, Option<&str>)] = &[
        ("delannoy", [3, -1, 3], 0, Some("ii")),
        ("little_schroder", [9, -3, 9], 0, Some("ii")),
        ("polyhexes", [45, -15, 9], 1, None),
        ("cubic_walks", [144, -36, 12], 0, None),
    ];
    for &(name, abc, anchor, condition) in triples {
        let r = rec(name);
        let t = compute_abc(&r).map_err(|e| e.to_string())?;
        ensure((t.a.clone(), t.b.clone(), t.c.clone()) == (rat_int(abc[0]), rat_int(abc[1]), rat_int(abc[2])), || {
            format!("{name}: (A,B,C) = ({}, {}, {})", t.a, t.b, t.c)
        })?;
        let cert = check_thm_c_minus(&r, 200, anchor, Mode::Convex).map_err(|e| e.to_string())?;
        ensure(cert.certified(), || format!("{name} anchor {anchor}: {cert:?}"))?;
        if let Some(c) = condition {
            ensure(cert.values["condition"] == c, || format!("{name}: condition {}", cert.values["condition"]))?;
        }
    }
    within(start, Duration::from_secs(5))
}

fn criterion_6() -> Outcome {
    use BisectionShape::{LogConcave, LogConvex};
    for (name, even, odd) in [
        ("fibonacci", LogConvex, LogConcave),
        ("lucas", LogConcave, LogConvex),
        ("pell", LogConvex, LogConcave),
    ] {
        let cert = bisection_analysis(&rec(name), 60).map_err(|e| e.to_string())?;
        ensure(cert.certified() && bisection_shapes(&cert) == Some((even, odd)), || format!("{name}: {cert:?}"))?;
        // independent look at the generated bisections
        let z = gen_named(name, 80).map_err(|e| e.to_string())?;
        for (parity, shape) in [(Parity::Even, even), (Parity::Odd, odd)] {
            let half = bisection(&z, parity).map_err(|e| e.to_string())?;
            let ok = match shape {
                LogConvex => is_log_convex(&half),
                _ => is_log_concave(&half),
            }
            .map_err(|e| e.to_string())?
            .holds();
            ensure(ok, || format!("{name} {parity:?} bisection is not {shape:?}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..50 {
        let (a, b, c) = (rng.gen_range(1..=9i64), rng.gen_range(1..=9i64), rng.gen_range(1..=9i64));
        let (z0, z1) = (rng.gen_range(1..=20i64), rng.gen_range(1..=20i64));
        // z_{n+1} = (b z_n + c z_{n-1}) / a, exactly
        let mut z = vec![rat_int(z0), rat_int(z1)];
        for n in 1..5 {
            let next = (rat_int(b) * &z[n] + rat_int(c) * &z[n - 1]) / rat_int(a);
            z.push(next);
        }
        let seed = &z[0] * &z[2] - &z[1] * &z[1];
        let (a, b, c) = (rat_int(a), rat_int(b), rat_int(c));
        let even = &a * &a * (&z[0] * &z[4] - &z[2] * &z[2]) == &b * &b * &seed;
        let odd = &a * &a * &a * (&z[1] * &z[5] - &z[3] * &z[3]) == -(&b * &b * &c * &seed);
        ensure(even && odd, || format!("instance {i}: even {even}, odd {odd}"))?;
        let r = Recurrence3::new(
            RatPoly::constant(a.clone()),
            RatPoly::constant(b.clone()),
            RatPoly::constant(c.clone()),
            Sign::Plus,
            vec![z[0].clone(), z[1].clone()],
        );
        let cert = bisection_analysis(&r, 30).map_err(|e| e.to_string())?;
        ensure(cert.hypothesis("even_identity").unwrap().holds && cert.hypothesis("odd_identity").unwrap().holds, || {
            format!("instance {i}: analyzer disagrees")
        })?;
    }
    Ok("3 families, 50 random recurrences".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    for (family, n) in [("bell", 200), ("eulerian", 200), ("q_schroder", 100), ("q_delannoy", 100), ("narayana", 100)] {
        let ps = gen_poly_seq(family, n).map_err(|e| e.to_string())?;
        let r = q_log_convex_check(&ps).map_err(|e| e.to_string())?;
        ensure(r.holds() && r.range_checked == (1, n - 1), || format!("{family}: {:?}", r.first_violation))?;
    }
    let mv = gen_poly_seq("morgan_voyce", 501).map_err(|e| e.to_string())?;
    let q = IntPoly::from_i64(&[0, 1]);
    for n in 1..=500 {
        ensure(mv.difference(n) == q, || format!("morgan-voyce difference at n = {n} is {}", mv.difference(n)))?;
    }
    within(start, Duration::from_secs(600))
}

fn criterion_8() -> Outcome {
    let s2 = TriangleRec::stirling2();
    ensure(s2.quantities() == [Rat::zero(), Rat::zero(), Rat::one()], || format!("{:?}", s2.quantities()))?;
    let e = TriangleRec::eulerian();
    // p n + r k + s with (p, r, s) = (1, -1, 1), i.e. n - k + 1
    ensure(e.linear_condition() == [rat_int(1), rat_int(-1), rat_int(1)], || format!("{:?}", e.linear_condition()))?;
    ensure(e.quantities().iter().all(|q| *q >= Rat::zero()), || format!("{:?}", e.quantities()))?;
    for (name, tr, tri) in [("stirling2", s2, "stirling2"), ("eulerian", e, "eulerian")] {
        let cert = check_thm_t_qlcx(&tr, 100).map_err(|err| err.to_string())?;
        ensure(cert.certified(), || format!("{name}: {cert:?}"))?;
        let rows = tr.triangle(100).ok_or("non-integral rows")?;
        let expected = gen_triangle(tri, 100).map_err(|err| err.to_string())?;
        ensure(rows.rows() == expected.rows(), || format!("{name}: rows differ from the catalogue"))?;
        let polys = logconvex::qpolys::PolySeq::new(rows.row_polys());
        ensure(q_log_convex_check(&polys).map_err(|err| err.to_string())?.holds(), || format!("{name}: rows fail"))?;
    }
    Ok("stirling2 (0,0,1); eulerian n-k+1".into())
}

fn criterion_9() -> Outcome {
    let t = gen_triangle("morgan_voyce", 61).map_err(|e| e.to_string())?;
    let cert = check_c1_c2(&t, 60).map_err(|e| e.to_string())?;
    ensure(cert.certified(), || format!("{cert:?}"))?;
    let probe = transform_preserves_lcx_probe(&t, 100, 12, 9, None);
    ensure(probe.holds() && probe.checked == 100, || format!("{:?}", probe.failures.first()))?;
    Ok(format!("c2 {}", cert.values["c2_status"]))
}

fn criterion_10() -> Outcome {
    let f = gen_named("fibonacci", 200).map_err(|e| e.to_string())?;
    let cx = is_log_convex(&f).map_err(|e| e.to_string())?;
    let cv = is_log_concave(&f).map_err(|e| e.to_string())?;
    ensure(!cx.holds() && !cv.holds(), || "fibonacci passed a check".into())?;
    ensure(cx.first_violation.as_ref().unwrap().indices == [1, 2, 3], || format!("{cx:?}"))?;
    ensure(cv.first_violation.as_ref().unwrap().indices == [0, 1, 2], || format!("{cv:?}"))?;
    let z = f.values();
    for n in 1..200 {
        let d = &z[n - 1] * &z[n + 1] - &z[n] * &z[n];
        let expected = if n % 2 == 1 { Int::one() } else { -Int::one() };
        ensure(d == expected, || format!("n = {n}: {d}"))?;
    }
    let ce = pinned_convolution_counterexample();
    ensure(is_log_convex(&ce.x).unwrap().holds() && is_log_convex(&ce.y).unwrap().holds(), || "inputs".into())?;
    let product = ordinary_convolution(&ce.x, &ce.y).map_err(|e| e.to_string())?;
    ensure(product == ce.product && !is_log_convex(&product).unwrap().holds(), || format!("{product}"))?;
    Ok("alternation through n = 199; (1,1,1)*(1,1,1) = (1,2,3)".into())
}

fn criterion_11() -> Outcome {
    for name in IDENTITY_NAMES {
        let r = verify_identity(name, 50).map_err(|e| e.to_string())?;
        ensure(r.holds() && r.range.1 == 50, || format!("{name}: {:?}", r.first_mismatch))?;
    }
    Ok(format!("{} identities", IDENTITY_NAMES.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("catalogue prefixes", criterion_1),
        ("log-convexity suite to 2000", criterion_2),
        ("lambda criterion: motzkin and fine residual", criterion_3),
        ("mu criterion: derangements and directed animals", criterion_4),
        ("determinant criterion (A, B, C)", criterion_5),
        ("bisections", criterion_6),
        ("q-log-convex families", criterion_7),
        ("triangle recurrence quantities", criterion_8),
        ("morgan-voyce curvature hypotheses", criterion_9),
        ("negative controls", criterion_10),
        ("identity suite", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
