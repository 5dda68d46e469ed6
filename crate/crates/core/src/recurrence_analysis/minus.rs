//! Criteria for `a_n z_{n+1} = b_n z_n - c_n z_{n-1}` with linear
//! coefficients, and the bisections of constant-coefficient plus recurrences.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::convexity::{log_check, Mode};
use crate::error::{Error, Result};
use crate::exact_arith::scalar::{rat_int, rat_to_string};
use crate::exact_arith::{Rat, RatPoly};
use crate::sequences::{Recurrence3, Seq, Sign};

use super::certificate::{Certificate, Hypothesis, Verdict};
use super::{label, require_sign, seeds_hypothesis, terms_to, zero_c_note};

/// Determinants of the linear coefficient pairs `(x_0, x_1)` of
/// `alpha, beta, gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbcTriple {
    #[serde(serialize_with = "ser_rat")]
    pub a: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub b: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub c: Rat,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

fn linear_parts(p: &RatPoly) -> Result<(Rat, Rat)> {
    if p.degree().unwrap_or(0) > 1 {
        return Err(Error::NonlinearCoefficients);
    }
    Ok((p.coeff(0), p.coeff(1)))
}

/// `A = beta_0 gamma_1 - beta_1 gamma_0`, `B = gamma_0 alpha_1 - gamma_1 alpha_0`,
/// `C = alpha_0 beta_1 - alpha_1 beta_0`.
pub fn compute_abc(rec: &Recurrence3) -> Result<AbcTriple> {
    let (a0, a1) = linear_parts(&rec.alpha)?;
    let (b0, b1) = linear_parts(&rec.beta)?;
    let (g0, g1) = linear_parts(&rec.gamma)?;
    let t = AbcTriple {
        a: &b0 * &g1 - &b1 * &g0,
        b: &g0 * &a1 - &g1 * &a0,
        c: &a0 * &b1 - &a1 * &b0,
    };
    assert!(abc_identity_holds(rec, &t), "a_n A + b_n B + c_n C must vanish identically");
    Ok(t)
}

/// `a_n A + b_n B + c_n C = 0` as a polynomial in `n`.
pub fn abc_identity_holds(rec: &Recurrence3, t: &AbcTriple) -> bool {
    rec.alpha
        .scale(&t.a)
        .add(&rec.beta.scale(&t.b))
        .add(&rec.gamma.scale(&t.c))
        .is_zero()
}

/// Which of the three alternatives holds, checked in order.
fn condition(t: &AbcTriple, combo: &Rat, mode: Mode) -> Option<&'static str> {
    let (b, c) = (&t.b, &t.c);
    let ac = &t.a * c;
    let b2 = b * b;
    let zero = Rat::zero();
    match mode {
        Mode::Convex => {
            if *b >= zero && *c >= zero {
                Some("i")
            } else if b.is_negative() && c.is_positive() && ac >= b2 && *combo >= zero {
                Some("ii")
            } else if b.is_positive() && c.is_negative() && ac <= b2 && *combo >= zero {
                Some("iii")
            } else {
                None
            }
        }
        Mode::Concave => {
            if *b <= zero && *c <= zero {
                Some("i")
            } else if b.is_negative() && c.is_positive() && ac <= b2 && *combo <= zero {
                Some("ii")
            } else if b.is_positive() && c.is_negative() && ac >= b2 && *combo <= zero {
                Some("iii")
            } else {
                None
            }
        }
    }
}

/// The determinant criterion anchored at `anchor = m`: coefficients admissible
/// on `[max(m, 1), n_max]`, `z_m, z_{m+1}, z_{m+2}` log-convex (log-concave in
/// `Mode::Concave`) and one of the three sign conditions, whose seed test
/// uses `z_m B + z_{m+1} C`. For `m > 0` the prefix `z_0 .. z_{m+2}` is
/// checked directly.
pub fn check_thm_c_minus(
    rec: &Recurrence3,
    n_max: usize,
    anchor: usize,
    mode: Mode,
) -> Result<Certificate> {
    require_sign(rec, Sign::Minus)?;
    let t = compute_abc(rec)?;
    let from = anchor.max(1);
    let n_max = n_max.max(from);
    rec.check_coefficients(from, n_max)?;
    let z = terms_to(rec, n_max.max(anchor + 2))?;
    let theorem = match mode {
        Mode::Convex => "c_minus",
        Mode::Concave => "c_minus_lc",
    };
    let mut cert = Certificate::new(theorem, &label(rec), (anchor, n_max));
    cert.value("A", rat_to_string(&t.a));
    cert.value("B", rat_to_string(&t.b));
    cert.value("C", rat_to_string(&t.c));
    cert.value("AC", rat_to_string(&(&t.a * &t.c)));
    cert.value("B^2", rat_to_string(&(&t.b * &t.b)));
    cert.value("anchor", anchor);

    let positive = z.iter().position(|v| !v.is_positive());
    let mut hp = Hypothesis::new("positive_terms", true).over(0, z.len() - 1);
    if let Some(i) = positive {
        hp = hp.failing_at(i, format!("z_{i} = {}", rat_to_string(&z[i])));
    }
    cert.push(hp);
    cert.push(seeds_hypothesis(&z, anchor, 3, mode));
    cert.push(recurrence_from(rec, &z, anchor + 1));
    if anchor > 0 {
        let mut h = seeds_hypothesis(&z, 0, anchor + 3, mode);
        h.name = "prefix".into();
        cert.push(h);
    }

    let combo = &z[anchor] * &t.b + &z[anchor + 1] * &t.c;
    cert.value("anchor_combination", rat_to_string(&combo));
    let chosen = condition(&t, &combo, mode);
    cert.value("condition", chosen.unwrap_or("none"));
    let mut hc = Hypothesis::new("condition", chosen.is_some());
    if chosen.is_none() {
        hc = hc.failing_at(
            anchor,
            format!(
                "no condition holds: B = {}, C = {}, AC = {}, B^2 = {}, z_m B + z_(m+1) C = {}",
                rat_to_string(&t.b),
                rat_to_string(&t.c),
                rat_to_string(&(&t.a * &t.c)),
                rat_to_string(&(&t.b * &t.b)),
                rat_to_string(&combo)
            ),
        );
    }
    cert.push(hc);
    zero_c_note(&mut cert, rec, from, n_max);
    Ok(cert.conclude(match mode {
        Mode::Convex => Verdict::LogConvex,
        Mode::Concave => Verdict::LogConcave,
    }))
}

/// The induction needs `z_{m+2}` onwards to come from the recurrence. Indices
/// whose successor is a seed were not produced by it, so the relation is
/// checked on those seeds directly.
fn recurrence_from(rec: &Recurrence3, z: &[Rat], from: usize) -> Hypothesis {
    let first = rec.start.max(rec.initial.len() - 1);
    let h = Hypothesis::new("recurrence_from_anchor", true).over(from, first.max(from));
    for n in from..first.min(z.len() - 1) {
        let rhs = match rec.sign {
            Sign::Plus => rec.b(n) * &z[n] + rec.c(n) * &z[n - 1],
            Sign::Minus => rec.b(n) * &z[n] - rec.c(n) * &z[n - 1],
        };
        let lhs = rec.a(n) * &z[n + 1];
        if lhs != rhs {
            return h.failing_at(
                n,
                format!("seed z_{} = {} does not satisfy the recurrence", n + 1, rat_to_string(&z[n + 1])),
            );
        }
    }
    h
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BisectionShape {
    LogConvex,
    LogConcave,
    /// Seeds with `z_0 z_2 = z_1^2`: both bisections are geometric.
    Both,
}

fn constant(p: &RatPoly) -> Result<Rat> {
    if p.degree().unwrap_or(0) > 0 {
        return Err(Error::NonConstantCoefficients);
    }
    Ok(p.coeff(0))
}

/// Squares a constant-coefficient plus recurrence into
/// `a^2 z_{n+2} = (b^2 + 2ac) z_n - c^2 z_{n-2}`, checks that relation and the
/// two seed identities on the generated terms, and reads the shape of each
/// bisection off the seeds `z_0, z_1, z_2`.
pub fn bisection_analysis(rec: &Recurrence3, n_max: usize) -> Result<Certificate> {
    require_sign(rec, Sign::Plus)?;
    let a = constant(&rec.alpha)?;
    let b = constant(&rec.beta)?;
    let c = constant(&rec.gamma)?;
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::InadmissibleRecurrence(
            "bisection analysis needs positive constants a, b, c".into(),
        ));
    }
    let n_max = n_max.max(6);
    let z = terms_to(rec, n_max)?;
    let mut cert = Certificate::new("bisection", &label(rec), (0, n_max));
    let two = rat_int(2);
    let sq_b = &b * &b + &two * &a * &c;
    let sq_c = &c * &c;
    let a2 = &a * &a;
    cert.value("squared_a", rat_to_string(&a2));
    cert.value("squared_b", rat_to_string(&sq_b));
    cert.value("squared_c", rat_to_string(&sq_c));

    let mut hs = Hypothesis::new("squared_recurrence", true).over(2, n_max - 2);
    if let Some(n) = (2..=n_max - 2).find(|&n| &a2 * &z[n + 2] != &sq_b * &z[n] - &sq_c * &z[n - 2]) {
        hs = hs.failing_at(n, "squared recurrence violated");
    }
    cert.push(hs);

    let seed = &z[0] * &z[2] - &z[1] * &z[1];
    let lhs1 = &a2 * (&z[0] * &z[4] - &z[2] * &z[2]);
    let rhs1 = &b * &b * &seed;
    let lhs2 = &a2 * &a * (&z[1] * &z[5] - &z[3] * &z[3]);
    let rhs2 = -(&b * &b * &c * &seed);
    cert.value("even_identity", format!("{} = {}", rat_to_string(&lhs1), rat_to_string(&rhs1)));
    cert.value("odd_identity", format!("{} = {}", rat_to_string(&lhs2), rat_to_string(&rhs2)));
    let mut h1 = Hypothesis::new("even_identity", lhs1 == rhs1);
    if lhs1 != rhs1 {
        h1 = h1.failing_at(4, "a^2 (z0 z4 - z2^2) != b^2 (z0 z2 - z1^2)");
    }
    cert.push(h1);
    let mut h2 = Hypothesis::new("odd_identity", lhs2 == rhs2);
    if lhs2 != rhs2 {
        h2 = h2.failing_at(5, "a^3 (z1 z5 - z3^2) != b^2 c (z1^2 - z0 z2)");
    }
    cert.push(h2);

    let (even, odd) = match seed.cmp(&Rat::zero()) {
        std::cmp::Ordering::Greater => (BisectionShape::LogConvex, BisectionShape::LogConcave),
        std::cmp::Ordering::Less => (BisectionShape::LogConcave, BisectionShape::LogConvex),
        std::cmp::Ordering::Equal => (BisectionShape::Both, BisectionShape::Both),
    };
    cert.value("even", shape_name(even));
    cert.value("odd", shape_name(odd));

    // The conclusion on the generated prefix, as a soundness check.
    for (name, parity, shape) in [("even_prefix", 0, even), ("odd_prefix", 1, odd)] {
        let sub: Vec<Rat> = z.iter().skip(parity).step_by(2).cloned().collect();
        let seq = Seq::new(sub);
        let mut h = Hypothesis::new(name, true).over(0, seq.len() - 1);
        for mode in modes(shape) {
            let r = log_check(&seq, mode, false)?;
            if let Some(v) = r.first_violation {
                h = h.failing_at(v.indices[1], format!("{mode:?} fails at {:?}", v.indices));
                break;
            }
        }
        cert.push(h);
    }
    Ok(cert.conclude(match even {
        BisectionShape::LogConcave => Verdict::LogConcave,
        _ => Verdict::LogConvex,
    }))
}

fn modes(shape: BisectionShape) -> Vec<Mode> {
    match shape {
        BisectionShape::LogConvex => vec![Mode::Convex],
        BisectionShape::LogConcave => vec![Mode::Concave],
        BisectionShape::Both => vec![Mode::Convex, Mode::Concave],
    }
}

fn shape_name(s: BisectionShape) -> &'static str {
    match s {
        BisectionShape::LogConvex => "log_convex",
        BisectionShape::LogConcave => "log_concave",
        BisectionShape::Both => "both",
    }
}

/// Reads back the per-bisection shapes recorded by [`bisection_analysis`].
pub fn bisection_shapes(cert: &Certificate) -> Option<(BisectionShape, BisectionShape)> {
    let parse = |s: &str| match s {
        "log_convex" => Some(BisectionShape::LogConvex),
        "log_concave" => Some(BisectionShape::LogConcave),
        "both" => Some(BisectionShape::Both),
        _ => None,
    };
    Some((parse(cert.values.get("even")?)?, parse(cert.values.get("odd")?)?))
}
