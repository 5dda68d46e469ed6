//! Named sequences and triangles.
//!
//! Sequences defined by a three-term recurrence are exposed as
//! [`Recurrence3`] values so the analyzers can consume them directly; the rest
//! are generated by their defining sums or by an equivalent O(n^2) array.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::scalar::{binomial, binomial_row, factorials};
use crate::exact_arith::Int;

use super::recurrence::{gen_from_recurrence3, Recurrence3, Sign};
use super::seq::{Seq, Triangle};

/// Every name accepted by [`gen_named`].
pub const SEQUENCE_NAMES: &[&str] = &[
    "motzkin",
    "fine",
    "fine_shifted",
    "derangements",
    "derangements_shifted",
    "directed_animals",
    "delannoy",
    "little_schroder",
    "large_schroder",
    "polyhexes",
    "cubic_walks",
    "catalan",
    "central_binomial",
    "fibonacci",
    "lucas",
    "pell",
    "lucas_classical",
    "pell_classical",
    "fibonacci_classical",
    "bell",
    "ordered_bell",
    "two_colored_bell",
    "euler",
    "factorial",
];

pub const TRIANGLE_NAMES: &[&str] = &[
    "binomial",
    "stirling2",
    "stirling1",
    "eulerian",
    "narayana",
    "morgan_voyce",
    "squared_binomial",
];

/// The catalogue recurrence for `name`, if the sequence has one.
///
/// Recurrences stated with `z_n` on the left are re-indexed so that every
/// entry has the shape `a_n z_{n+1} = b_n z_n +/- c_n z_{n-1}`.
pub fn named_recurrence(name: &str) -> Option<Recurrence3> {
    use Sign::{Minus, Plus};
    let rec = match name {
        // (n+3) M_{n+1} = (2n+3) M_n + 3n M_{n-1}
        "motzkin" => Recurrence3::from_i64(&[3, 1], &[3, 2], &[0, 3], Plus, &[1, 1]),
        // 2(n+1) f_n = (7n-5) f_{n-1} + 2(2n-1) f_{n-2}
        "fine" => Recurrence3::from_left_indexed(&[2, 2], &[-5, 7], &[-2, 4], Plus, &[1, 0], 2),
        // z_n = f_{n+2}: 2(n+4) z_{n+1} = (7n+16) z_n + 2(2n+5) z_{n-1}
        "fine_shifted" => {
            Recurrence3::from_i64(&[8, 2], &[16, 7], &[10, 4], Plus, &[1, 2]).with_offset(2)
        }
        // d_{n+1} = n (d_n + d_{n-1})
        "derangements" => Recurrence3::from_i64(&[1], &[0, 1], &[0, 1], Plus, &[1, 0]),
        // z_n = d_{n+2}: z_{n+1} = (n+2)(z_n + z_{n-1})
        "derangements_shifted" => {
            Recurrence3::from_i64(&[1], &[2, 1], &[2, 1], Plus, &[1, 2]).with_offset(2)
        }
        // (n+1) A_{n+1} = 2(n+1) A_n + 3(n-1) A_{n-1}
        "directed_animals" => Recurrence3::from_i64(&[1, 1], &[2, 2], &[-3, 3], Plus, &[1, 1]),
        // n D(n) = 3(2n-1) D(n-1) - (n-1) D(n-2)
        "delannoy" => Recurrence3::from_left_indexed(&[0, 1], &[-3, 6], &[-1, 1], Minus, &[1, 3], 2),
        // (n+2) z_{n+1} = 3(2n+1) z_n - (n-1) z_{n-1}
        "little_schroder" => Recurrence3::from_i64(&[2, 1], &[3, 6], &[-1, 1], Minus, &[1, 1]),
        "large_schroder" => Recurrence3::from_i64(&[2, 1], &[3, 6], &[-1, 1], Minus, &[1, 2]),
        // (n+1) h_n = 3(2n-1) h_{n-1} - 5(n-2) h_{n-2}
        "polyhexes" => {
            Recurrence3::from_left_indexed(&[1, 1], &[-3, 6], &[-10, 5], Minus, &[1, 1], 2)
        }
        // (n+2) w_n = 4(2n+1) w_{n-1} - 12(n-1) w_{n-2}
        "cubic_walks" => {
            Recurrence3::from_left_indexed(&[2, 1], &[4, 8], &[-12, 12], Minus, &[1, 4], 2)
        }
        // (n+2) C_{n+1} = 2(2n+1) C_n
        "catalan" => Recurrence3::from_i64(&[2, 1], &[2, 4], &[], Plus, &[1, 1]),
        // (n+1) b(n+1) = 2(2n+1) b(n)
        "central_binomial" => Recurrence3::from_i64(&[1, 1], &[2, 4], &[], Plus, &[1, 2]),
        "fibonacci" => Recurrence3::from_i64(&[1], &[1], &[1], Plus, &[1, 1]),
        "lucas" => Recurrence3::from_i64(&[1], &[1], &[1], Plus, &[1, 3]),
        "pell" => Recurrence3::from_i64(&[1], &[2], &[1], Plus, &[1, 2]),
        "fibonacci_classical" => Recurrence3::from_i64(&[1], &[1], &[1], Plus, &[0, 1]),
        "lucas_classical" => Recurrence3::from_i64(&[1], &[1], &[1], Plus, &[2, 1]),
        "pell_classical" => Recurrence3::from_i64(&[1], &[2], &[1], Plus, &[0, 1]),
        _ => return None,
    };
    Some(rec.with_name(name))
}

/// Exact prefix `z_0 .. z_{n_max}` of a catalogue sequence.
pub fn gen_named(name: &str, n_max: usize) -> Result<Seq<Int>> {
    let seq = match name {
        "catalan" => {
            let closed = catalan_closed_form(n_max);
            let rec = recurrence_prefix(name, n_max)?;
            assert_eq!(closed.values(), rec.values(), "Catalan closed form disagrees with its recurrence");
            closed
        }
        "central_binomial" => {
            let closed = central_binomial_closed_form(n_max);
            let rec = recurrence_prefix(name, n_max)?;
            assert_eq!(closed.values(), rec.values(), "central binomial closed form disagrees with its recurrence");
            closed
        }
        "bell" => bell_by_triangle(n_max),
        "ordered_bell" => ordered_bell(n_max),
        "two_colored_bell" => two_colored_bell(n_max),
        "euler" => euler_by_boustrophedon(n_max),
        "factorial" => Seq::new(factorials(n_max)),
        _ if named_recurrence(name).is_some() => recurrence_prefix(name, n_max)?,
        _ => return Err(Error::UnknownSequence(name.to_string())),
    };
    Ok(seq.with_name(name))
}

fn recurrence_prefix(name: &str, n_max: usize) -> Result<Seq<Int>> {
    let rec = named_recurrence(name).ok_or_else(|| Error::UnknownSequence(name.to_string()))?;
    let out = gen_from_recurrence3(&rec, n_max)?;
    Ok(out
        .terms
        .to_int()
        .expect("catalogue recurrences produce integers"))
}

pub fn catalan_closed_form(n_max: usize) -> Seq<Int> {
    Seq::new(
        (0..=n_max as i64)
            .map(|n| binomial(2 * n, n) / (n + 1))
            .collect(),
    )
}

pub fn central_binomial_closed_form(n_max: usize) -> Seq<Int> {
    Seq::new((0..=n_max as i64).map(|n| binomial(2 * n, n)).collect())
}

/// Bell numbers through the Bell (Aitken) triangle: O(n^2) additions.
pub fn bell_by_triangle(n_max: usize) -> Seq<Int> {
    let mut out = vec![Int::one()];
    let mut row = vec![Int::one()];
    for _ in 1..=n_max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty row").clone());
        for v in &row {
            let s = next.last().expect("nonempty row") + v;
            next.push(s);
        }
        out.push(next[0].clone());
        row = next;
    }
    Seq::new(out)
}

/// Bell numbers from `B_{n+1} = sum_k binom(n, k) B_k`.
pub fn bell_by_binomial_recurrence(n_max: usize) -> Seq<Int> {
    let mut out = vec![Int::one()];
    for n in 0..n_max {
        let row = binomial_row(n);
        let next = row
            .iter()
            .zip(&out)
            .fold(Int::zero(), |acc, (c, b)| acc + c * b);
        out.push(next);
    }
    Seq::new(out)
}

/// Ordered Bell numbers `sum_k k! S(n, k)`, through the surjection numbers
/// `T(n, k) = k! S(n, k)`, which satisfy `T(n, k) = k (T(n-1, k) + T(n-1, k-1))`.
pub fn ordered_bell(n_max: usize) -> Seq<Int> {
    row_sums_of(n_max, |k, same, left| (same + left) * k)
}

/// `S_n = sum_k 2^k S(n, k)`, through `U(n, k) = 2^k S(n, k)` with
/// `U(n, k) = k U(n-1, k) + 2 U(n-1, k-1)`.
pub fn two_colored_bell(n_max: usize) -> Seq<Int> {
    row_sums_of(n_max, |k, same, left| same * k + left * 2u32)
}

/// Row sums of a triangle built row by row from `T(0, 0) = 1` and
/// `T(n, k) = step(k, T(n-1, k), T(n-1, k-1))`, keeping one row in memory.
fn row_sums_of(n_max: usize, step: impl Fn(usize, &Int, &Int) -> Int) -> Seq<Int> {
    let zero = Int::zero();
    let mut row = vec![Int::one()];
    let mut out = vec![Int::one()];
    for n in 1..=n_max {
        let next: Vec<Int> = (0..=n)
            .map(|k| {
                let same = row.get(k).unwrap_or(&zero);
                let left = if k == 0 { &zero } else { &row[k - 1] };
                step(k, same, left)
            })
            .collect();
        out.push(next.iter().fold(Int::zero(), |acc, v| acc + v));
        row = next;
    }
    Seq::new(out)
}

/// Euler (up/down) numbers by the Seidel boustrophedon: O(n^2) additions.
pub fn euler_by_boustrophedon(n_max: usize) -> Seq<Int> {
    let mut out = vec![Int::one()];
    let mut prev = vec![Int::one()];
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(Int::zero());
        for k in 1..=n {
            let v = &row[k - 1] + &prev[n - k];
            row.push(v);
        }
        out.push(row[n].clone());
        prev = row;
    }
    Seq::new(out)
}

/// Euler numbers from `2 E_{n+1} = sum_k binom(n, k) E_k E_{n-k}` for `n >= 1`,
/// `E_0 = E_1 = 1`. Each halving is checked to be exact.
pub fn euler_by_convolution(n_max: usize) -> Seq<Int> {
    let mut out = vec![Int::one(), Int::one()];
    for n in 1..n_max {
        let row = binomial_row(n);
        let sum = (0..=n).fold(Int::zero(), |acc, k| acc + &row[k] * &out[k] * &out[n - k]);
        assert!(
            (&sum % 2u32).is_zero(),
            "odd convolution sum at n = {n}"
        );
        out.push(sum / 2u32);
    }
    out.truncate(n_max + 1);
    Seq::new(out)
}

/// Named triangle with rows `0..=n_max`.
pub fn gen_triangle(name: &str, n_max: usize) -> Result<Triangle> {
    let t = match name {
        "binomial" => pascal(n_max),
        "stirling2" => stirling2(n_max),
        "stirling1" => stirling1(n_max),
        "eulerian" => eulerian(n_max),
        "narayana" => narayana(n_max),
        "morgan_voyce" => Triangle::from_fn(n_max, |n, k| binomial((n + k) as i64, (n - k) as i64)),
        "squared_binomial" => Triangle::from_fn(n_max, |n, k| {
            let b = binomial(n as i64, k as i64);
            &b * &b
        }),
        _ => return Err(Error::UnknownTriangle(name.to_string())),
    };
    Ok(t.with_name(name))
}

fn pascal(n_max: usize) -> Triangle {
    Triangle::new((0..=n_max).map(binomial_row).collect())
}

/// Builds rows from `T(0,0) = 1` and `T(n, k) = f(n, k, T(n-1, k), T(n-1, k-1))`.
fn by_row_recurrence(n_max: usize, f: impl Fn(usize, usize, &Int, &Int) -> Int) -> Triangle {
    let zero = Int::zero();
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let same = prev.get(k).unwrap_or(&zero);
                let left = if k == 0 { &zero } else { &prev[k - 1] };
                f(n, k, same, left)
            })
            .collect();
        rows.push(row);
    }
    Triangle::new(rows)
}

/// `S(n+1, k) = k S(n, k) + S(n, k-1)`.
fn stirling2(n_max: usize) -> Triangle {
    by_row_recurrence(n_max, |_, k, same, left| same * k + left)
}

/// Signless first kind, `c(n+1, k) = n c(n, k) + c(n, k-1)`.
fn stirling1(n_max: usize) -> Triangle {
    by_row_recurrence(n_max, |n, _, same, left| same * (n - 1) + left)
}

/// Signless Stirling numbers of the first kind from
/// `c(n, k) = sum_{j=k}^{n} binom(n-1, j-1) (n-j)! c(j-1, k-1)` for `1 <= k <= n`.
pub fn stirling1_by_summation(n_max: usize) -> Triangle {
    let fact = factorials(n_max);
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 1..=n_max {
        let mut row = vec![Int::zero(); n + 1];
        for (k, slot) in row.iter_mut().enumerate().skip(1) {
            let mut acc = Int::zero();
            for j in k..=n {
                let prev = rows[j - 1].get(k - 1).cloned().unwrap_or_default();
                acc += binomial(n as i64 - 1, j as i64 - 1) * &fact[n - j] * prev;
            }
            *slot = acc;
        }
        rows.push(row);
    }
    Triangle::new(rows)
}

/// `A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1)`, `A(0, 0) = 1`.
fn eulerian(n_max: usize) -> Triangle {
    by_row_recurrence(n_max, |n, k, same, left| same * k + left * (n + 1 - k))
}

/// `N(n, k) = binom(n, k) binom(n, k-1) / n`, with `N(0, 0) = 1`.
fn narayana(n_max: usize) -> Triangle {
    Triangle::from_fn(n_max, |n, k| {
        if n == 0 {
            return Int::one();
        }
        let (n, k) = (n as i64, k as i64);
        binomial(n, k) * binomial(n, k - 1) / n
    })
}
