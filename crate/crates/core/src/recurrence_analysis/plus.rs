//! Criteria for `a_n z_{n+1} = b_n z_n + c_n z_{n-1}`.

use std::cmp::Ordering;

use num_traits::Signed;
use rayon::prelude::*;

use crate::convexity::Mode;
use crate::error::{Error, Result};
use crate::exact_arith::scalar::rat_to_string;
use crate::exact_arith::{QuadSurd, Rat, SurdExpr};
use crate::sequences::{Recurrence3, Sign};

use super::certificate::{Certificate, Hypothesis, Verdict};
use super::mu::Mu;
use super::{label, require_sign, seeds_hypothesis, terms_to, zero_c_note};

/// `lambda_n = (b_n + sqrt(b_n^2 + 4 a_n c_n)) / (2 a_n)`.
pub fn lambda_n(rec: &Recurrence3, n: usize) -> Result<QuadSurd> {
    require_sign(rec, Sign::Plus)?;
    rec.check_coefficients(n, n)?;
    Ok(QuadSurd::positive_root(&rec.a(n), &rec.b(n), &rec.c(n)))
}

/// `a lambda^2 - b lambda - c`, exactly zero for a correct root.
pub fn lambda_residual(rec: &Recurrence3, n: usize, lambda: &QuadSurd) -> SurdExpr {
    let l = lambda.to_expr();
    l.mul(&l)
        .scale(&rec.a(n))
        .sub(&l.scale(&rec.b(n)))
        .sub(&SurdExpr::rational(rec.c(n)))
}

/// `lambda_from ..= lambda_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSeq {
    pub from: usize,
    pub values: Vec<QuadSurd>,
}

impl LambdaSeq {
    pub fn compute(rec: &Recurrence3, from: usize, to: usize) -> Result<Self> {
        require_sign(rec, Sign::Plus)?;
        rec.check_coefficients(from, to)?;
        let values = (from..=to)
            .into_par_iter()
            .map(|n| QuadSurd::positive_root(&rec.a(n), &rec.b(n), &rec.c(n)))
            .collect();
        Ok(LambdaSeq { from, values })
    }

    pub fn get(&self, n: usize) -> &QuadSurd {
        &self.values[n - self.from]
    }
}

fn ratios(z: &[Rat]) -> Result<Vec<Rat>> {
    if let Some(i) = z.iter().position(|v| !v.is_positive()) {
        return Err(Error::ZeroTerm(i));
    }
    Ok(z.windows(2).map(|w| &w[1] / &w[0]).collect())
}

/// `x_{n-1} <= lambda_n <= x_n` for `1 <= n <= n_max`, `x_n = z_{n+1} / z_n`.
pub fn check_interlacing(rec: &Recurrence3, n_max: usize) -> Result<Certificate> {
    let lambda = LambdaSeq::compute(rec, 1, n_max)?;
    let z = terms_to(rec, n_max + 1)?;
    let x = ratios(&z)?;
    let mut cert = Certificate::new("interlacing", &label(rec), (1, n_max));
    let failure = (1..=n_max).into_par_iter().find_first(|&n| {
        let l = lambda.get(n);
        l.cmp_rat(&x[n - 1]) == Ordering::Less || l.cmp_rat(&x[n]) == Ordering::Greater
    });
    let mut h = Hypothesis::new("interlacing", true).over(1, n_max);
    if let Some(n) = failure {
        h = h.failing_at(
            n,
            format!(
                "x_{} = {}, lambda_{n} = {} ~ {:.6}, x_{n} = {}",
                n - 1,
                rat_to_string(&x[n - 1]),
                lambda.get(n),
                lambda.get(n).to_f64(),
                rat_to_string(&x[n])
            ),
        );
    }
    cert.push(h);
    zero_c_note(&mut cert, rec, 1, n_max);
    Ok(cert.conclude(Verdict::LogConvex))
}

/// `a_n lambda_{n-1} lambda_{n+1} - b_n lambda_{n-1} - c_n` for `n >= 2`.
pub fn eq8_residual(rec: &Recurrence3, n: usize) -> Result<SurdExpr> {
    let prev = lambda_n(rec, n - 1)?.to_expr();
    let next = lambda_n(rec, n + 1)?.to_expr();
    Ok(residual_from(rec, n, &prev, &next))
}

fn residual_from(rec: &Recurrence3, n: usize, prev: &SurdExpr, next: &SurdExpr) -> SurdExpr {
    prev.mul(next)
        .scale(&rec.a(n))
        .sub(&prev.scale(&rec.b(n)))
        .sub(&SurdExpr::rational(rec.c(n)))
}

fn lambda_criterion(rec: &Recurrence3, n_max: usize, mode: Mode) -> Result<Certificate> {
    let n_max = n_max.max(2);
    let lambda = LambdaSeq::compute(rec, 1, n_max + 1)?;
    let z = terms_to(rec, 3.max(n_max))?;
    let (theorem, verdict, wanted) = match mode {
        Mode::Convex => ("crit_plus", Verdict::LogConvex, 1),
        Mode::Concave => ("lc_plus", Verdict::LogConcave, -1),
    };
    let mut cert = Certificate::new(theorem, &label(rec), (0, n_max));
    cert.push(seeds_hypothesis(&z, 0, 4, mode));
    let failure = (2..=n_max).into_par_iter().find_map_first(|n| {
        let r = residual_from(rec, n, &lambda.get(n - 1).to_expr(), &lambda.get(n + 1).to_expr());
        let s = r.sign();
        (s != 0 && s != wanted).then_some((n, r))
    });
    let mut h = Hypothesis::new("eq8", true).over(2, n_max);
    if let Some((n, r)) = failure {
        h = h.failing_at(n, format!("residual = {r} ~ {:.6e}", r.to_f64()));
    }
    cert.push(h);
    zero_c_note(&mut cert, rec, 1, n_max + 1);
    Ok(cert.conclude(verdict))
}

/// Seeds `z_0..z_3` log-convex and the `lambda` inequality `>= 0` for `2 <= n <= n_max`.
pub fn check_thm_crit_plus(rec: &Recurrence3, n_max: usize) -> Result<Certificate> {
    lambda_criterion(rec, n_max, Mode::Convex)
}

/// Log-concave dual: seeds log-concave and the inequality `<= 0`.
pub fn check_thm_lc_plus(rec: &Recurrence3, n_max: usize) -> Result<Certificate> {
    lambda_criterion(rec, n_max, Mode::Concave)
}

/// `a_n mu_{n-1} mu_{n+1} - b_n mu_{n-1} - c_n`.
pub fn c_plus_residual(rec: &Recurrence3, mu: &Mu, n: usize) -> Result<Rat> {
    let prev = mu_at(mu, n - 1)?;
    let next = mu_at(mu, n + 1)?;
    Ok(rec.a(n) * &prev * next - rec.b(n) * &prev - rec.c(n))
}

fn mu_at(mu: &Mu, n: usize) -> Result<Rat> {
    match mu.at(n) {
        Some(v) if v.is_positive() => Ok(v),
        _ => Err(Error::NonPositiveMu(n)),
    }
}

/// The three `mu` conditions: `mu_n <= lambda_n`, the two seed ratios, and
/// `a_n mu_{n-1} mu_{n+1} >= b_n mu_{n-1} + c_n`.
pub fn check_thm_c_plus(rec: &Recurrence3, mu: &Mu, n_max: usize) -> Result<Certificate> {
    let n_max = n_max.max(2);
    for n in 1..=n_max + 1 {
        mu_at(mu, n)?;
    }
    let lambda = LambdaSeq::compute(rec, 1, n_max + 1)?;
    let z = terms_to(rec, n_max.max(2))?;
    let mut cert = Certificate::new("c_plus", &label(rec), (1, n_max));
    cert.value("mu", mu);

    let mut h1 = Hypothesis::new("mu_le_lambda", true).over(1, n_max);
    let fail1 = (1..=n_max)
        .into_par_iter()
        .find_first(|&n| lambda.get(n).cmp_rat(&mu.at(n).expect("checked")) == Ordering::Less);
    if let Some(n) = fail1 {
        h1 = h1.failing_at(
            n,
            format!(
                "mu_{n} = {} > lambda_{n} = {} ~ {:.6}",
                rat_to_string(&mu.at(n).expect("checked")),
                lambda.get(n),
                lambda.get(n).to_f64()
            ),
        );
    }
    cert.push(h1);

    let mut h2 = Hypothesis::new("seed_ratios", true).over(0, 2);
    for n in 1..=2 {
        let bound = mu.at(n).expect("checked") * &z[n - 1];
        if z[n] > bound {
            h2 = h2.failing_at(
                n,
                format!("z_{n} = {} > mu_{n} z_{} = {}", z[n], n - 1, rat_to_string(&bound)),
            );
            break;
        }
    }
    cert.push(h2);

    let mut h3 = Hypothesis::new("mu_inequality", true).over(2, n_max);
    let fail3 = (2..=n_max).into_par_iter().find_map_first(|n| {
        let r = c_plus_residual(rec, mu, n).expect("mu checked positive");
        r.is_negative().then_some((n, r))
    });
    if let Some((n, r)) = fail3 {
        h3 = h3.failing_at(n, format!("residual = {}", rat_to_string(&r)));
    }
    cert.push(h3);
    zero_c_note(&mut cert, rec, 1, n_max + 1);
    Ok(cert.conclude(Verdict::LogConvex))
}

/// Candidate `mu_n` as dyadic lower bounds of `lambda_n` at `bits` of
/// precision. Unverified until [`MuSuggestion::verify`] passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuSuggestion {
    pub mu: Mu,
    pub verified: bool,
}

impl MuSuggestion {
    /// Runs the full `mu` check through `n_max` and records the outcome.
    pub fn verify(&mut self, rec: &Recurrence3, n_max: usize) -> Result<Certificate> {
        let cert = check_thm_c_plus(rec, &self.mu, n_max)?;
        self.verified = cert.certified();
        Ok(cert)
    }
}

pub fn suggest_mu(rec: &Recurrence3, n_max: usize, bits: u32) -> Result<MuSuggestion> {
    let lambda = LambdaSeq::compute(rec, 1, n_max + 1)?;
    let values = lambda
        .values
        .iter()
        .map(|l| match l.to_rat() {
            Some(r) => r,
            None => l.lower_bound(bits),
        })
        .collect();
    Ok(MuSuggestion {
        mu: Mu::Table(values),
        verified: false,
    })
}

/// Smallest instance of `(n + p) z_{n+1} = b z_n + c z_{n-1}`, `z_0 = z_1 = 1`,
/// with `p, b, c` in `1..=3` (lexicographic) that the log-concave
/// `lambda` criterion certifies through `n_max`.
pub fn search_lc_plus_fixture(n_max: usize) -> Option<Recurrence3> {
    for p in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                let rec = Recurrence3::from_i64(&[p, 1], &[b], &[c], Sign::Plus, &[1, 1])
                    .with_name(format!("lc_fixture_{p}_{b}_{c}"));
                if check_thm_lc_plus(&rec, n_max).ok()?.certified() {
                    return Some(rec);
                }
            }
        }
    }
    None
}

/// The pinned result of [`search_lc_plus_fixture`].
pub fn lc_plus_fixture() -> Recurrence3 {
    Recurrence3::from_i64(&[1, 1], &[1], &[1], Sign::Plus, &[1, 1]).with_name("lc_fixture_1_1_1")
}
