//! Named polynomial families, each built from its own recurrence or sum.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::PolySeq;
use crate::error::{Error, Result};
use crate::exact_arith::scalar::binomial;
use crate::exact_arith::{Int, IntPoly};
use crate::sequences::catalogue::{catalan_closed_form, central_binomial_closed_form};

pub const FAMILY_NAMES: &[&str] = &[
    "bell",
    "eulerian",
    "morgan_voyce",
    "narayana",
    "q_schroder",
    "q_delannoy",
    "q_factorial",
];

/// `P_0 ..= P_{n_max}` of the named family.
pub fn gen_poly_seq(name: &str, n_max: usize) -> Result<PolySeq> {
    let polys = match name {
        "bell" => bell(n_max),
        "eulerian" => eulerian(n_max),
        "morgan_voyce" => morgan_voyce(n_max),
        "narayana" => narayana(n_max),
        "q_schroder" => diagonal_sum(n_max, catalan_closed_form(n_max).values()),
        "q_delannoy" => diagonal_sum(n_max, central_binomial_closed_form(n_max).values()),
        "q_factorial" => q_factorial(n_max),
        _ => return Err(Error::UnknownFamily(name.to_string())),
    };
    Ok(PolySeq::new(polys).with_name(name))
}

fn q() -> IntPoly {
    IntPoly::from_i64(&[0, 1])
}

/// `B_{n+1} = q B_n + q B_n'`.
fn bell(n_max: usize) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::one()];
    for n in 0..n_max {
        let b = &out[n];
        out.push(b.add(&b.derivative()).shift(1));
    }
    out
}

/// `A_n = n q A_{n-1} + q (1 - q) A_{n-1}'`.
fn eulerian(n_max: usize) -> Vec<IntPoly> {
    let q_one_minus_q = IntPoly::from_i64(&[0, 1, -1]);
    let mut out = vec![IntPoly::one()];
    for n in 1..=n_max {
        let a = &out[n - 1];
        let next = a
            .shift(1)
            .scale(&Int::from(n))
            .add(&q_one_minus_q.mul(&a.derivative()));
        out.push(next);
    }
    out
}

/// `A_{n+1} = (2 + q) A_n - A_{n-1}`, `A_0 = 1`, `A_1 = 1 + q`.
fn morgan_voyce(n_max: usize) -> Vec<IntPoly> {
    let two_plus_q = IntPoly::from_i64(&[2, 1]);
    let mut out = vec![IntPoly::one(), IntPoly::from_i64(&[1, 1])];
    for n in 1..n_max {
        let next = two_plus_q.mul(&out[n]).sub(&out[n - 1]);
        out.push(next);
    }
    out.truncate(n_max + 1);
    out
}

/// `(n+1) N_n = (2n-1)(1+q) N_{n-1} - (n-2)(1-q)^2 N_{n-2}`, `N_0 = 1`, `N_1 = q`.
fn narayana(n_max: usize) -> Vec<IntPoly> {
    let one_plus_q = IntPoly::from_i64(&[1, 1]);
    let one_minus_q_sq = IntPoly::from_i64(&[1, -2, 1]);
    let mut out = vec![IntPoly::one(), q()];
    for n in 2..=n_max {
        let rhs = one_plus_q
            .mul(&out[n - 1])
            .scale(&Int::from(2 * n - 1))
            .sub(&one_minus_q_sq.mul(&out[n - 2]).scale(&Int::from(n - 2)));
        let d = Int::from(n + 1);
        let coeffs = rhs
            .coeffs()
            .iter()
            .map(|c| {
                let (quot, rem) = c.div_rem(&d);
                assert!(rem.is_zero(), "inexact division at n = {n}");
                quot
            })
            .collect();
        out.push(IntPoly::new(coeffs));
    }
    out.truncate(n_max + 1);
    out
}

/// `sum_k binom(n+k, n-k) w_k q^{n-k}`.
fn diagonal_sum(n_max: usize, w: &[Int]) -> Vec<IntPoly> {
    (0..=n_max)
        .map(|n| {
            let mut coeffs = vec![Int::zero(); n + 1];
            for (k, wk) in w.iter().enumerate().take(n + 1) {
                coeffs[n - k] = binomial((n + k) as i64, (n - k) as i64) * wk;
            }
            IntPoly::new(coeffs)
        })
        .collect()
}

/// `(n)_q! = prod_{k=1}^{n} (1 + q + ... + q^{k-1})`.
fn q_factorial(n_max: usize) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::one()];
    for k in 1..=n_max {
        let bracket = IntPoly::new(vec![Int::one(); k]);
        let next = out[k - 1].mul(&bracket);
        out.push(next);
    }
    out
}
