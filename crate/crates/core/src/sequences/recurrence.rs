//! Three-term recurrences `a_n z_{n+1} = b_n z_n +/- c_n z_{n-1}` with
//! polynomial coefficients.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::scalar::rat_int;
use crate::exact_arith::{Int, Rat, RatPoly};

use super::seq::Seq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `a_n z_{n+1} = b_n z_n + c_n z_{n-1}`
    Plus,
    /// `a_n z_{n+1} = b_n z_n - c_n z_{n-1}`
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence3 {
    pub alpha: RatPoly,
    pub beta: RatPoly,
    pub gamma: RatPoly,
    pub sign: Sign,
    /// `z_0, z_1, ...`; at least two values.
    pub initial: Vec<Rat>,
    /// Smallest `n` at which the recurrence produces `z_{n+1}`.
    pub start: usize,
    /// Absolute index of `z_0`, for shifted views such as `z_n = f_{n+2}`.
    pub offset: usize,
    pub name: Option<String>,
}

/// Output of unrolling a recurrence. Terms are rational; `first_inexact`
/// flags the first index where a division left a fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceTerms {
    pub terms: Seq<Rat>,
    pub first_inexact: Option<usize>,
}

impl RecurrenceTerms {
    pub fn is_integral(&self) -> bool {
        self.first_inexact.is_none()
    }
}

impl Recurrence3 {
    pub fn new(alpha: RatPoly, beta: RatPoly, gamma: RatPoly, sign: Sign, initial: Vec<Rat>) -> Self {
        assert!(initial.len() >= 2, "need at least z_0 and z_1");
        Recurrence3 {
            alpha,
            beta,
            gamma,
            sign,
            initial,
            start: 1,
            offset: 0,
            name: None,
        }
    }

    /// Integer coefficient lists `[c0, c1, ...]` meaning `c0 + c1 n + ...`.
    pub fn from_i64(alpha: &[i64], beta: &[i64], gamma: &[i64], sign: Sign, initial: &[i64]) -> Self {
        Self::new(
            RatPoly::from_i64(alpha),
            RatPoly::from_i64(beta),
            RatPoly::from_i64(gamma),
            sign,
            initial.iter().map(|&v| rat_int(v)).collect(),
        )
    }

    /// A recurrence written with `z_n` on the left,
    /// `a'_n z_n = b'_n z_{n-1} +/- c'_n z_{n-2}`, re-indexed by `n -> n + 1`.
    /// `start` is the smallest `n` of the original form.
    pub fn from_left_indexed(
        alpha: &[i64],
        beta: &[i64],
        gamma: &[i64],
        sign: Sign,
        initial: &[i64],
        start: usize,
    ) -> Self {
        let one = rat_int(1);
        let shift = |c: &[i64]| RatPoly::from_i64(c).compose_affine(&one);
        let mut rec = Self::new(
            shift(alpha),
            shift(beta),
            shift(gamma),
            sign,
            initial.iter().map(|&v| rat_int(v)).collect(),
        );
        rec.start = start.saturating_sub(1).max(1);
        rec
    }

    pub fn with_start(mut self, start: usize) -> Self {
        self.start = start;
        self
    }

    pub fn with_offset(mut self, offset: usize) -> Self {
        self.offset = offset;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn a(&self, n: usize) -> Rat {
        self.alpha.eval(&rat_int(n as i64))
    }

    pub fn b(&self, n: usize) -> Rat {
        self.beta.eval(&rat_int(n as i64))
    }

    pub fn c(&self, n: usize) -> Rat {
        self.gamma.eval(&rat_int(n as i64))
    }

    /// Index of the first term produced by the recurrence rather than seeded.
    pub fn first_generated(&self) -> usize {
        self.initial.len().max(self.start + 1)
    }

    /// Positivity of the coefficients on `[from, to]`: `a_n, b_n > 0` and
    /// `c_n >= 0` (a vanishing `c_n` is admissible and only strengthens every
    /// inequality in the criteria).
    pub fn check_coefficients(&self, from: usize, to: usize) -> Result<()> {
        for n in from..=to {
            if !self.a(n).is_positive() {
                return Err(Error::NonPositiveCoefficient { which: "a", n });
            }
            if !self.b(n).is_positive() {
                return Err(Error::NonPositiveCoefficient { which: "b", n });
            }
            if self.c(n).is_negative() {
                return Err(Error::NonPositiveCoefficient { which: "c", n });
            }
        }
        Ok(())
    }

    /// Largest degree among the three coefficient polynomials.
    pub fn max_degree(&self) -> usize {
        [&self.alpha, &self.beta, &self.gamma]
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }
}

/// Unrolls `rec` to `z_0 .. z_{n_max}` (local indices).
pub fn gen_from_recurrence3(rec: &Recurrence3, n_max: usize) -> Result<RecurrenceTerms> {
    let mut values: Vec<Rat> = rec.initial.iter().take(n_max + 1).cloned().collect();
    let mut first_inexact = values.iter().position(|v| !v.is_integer());
    let seeded = rec.first_generated();
    // Seeds may stop short of the first index the recurrence can produce.
    if values.len() < seeded.min(n_max + 1) {
        return Err(Error::Validation {
            field: "initial".into(),
            message: format!("need {} initial values for start = {}", seeded, rec.start),
        });
    }
    // Integer recurrences stay in integers until a division leaves a
    // remainder; normalizing huge fractions at every step is the slow part.
    let mut ints: Option<Vec<Int>> =
        first_inexact.is_none().then(|| values.iter().map(|v| v.to_integer()).collect());
    let len = |ints: &Option<Vec<Int>>, values: &Vec<Rat>| ints.as_ref().map_or(values.len(), |v| v.len());
    while len(&ints, &values) <= n_max {
        let n = len(&ints, &values) - 1;
        let (a, b, c) = (rec.a(n), rec.b(n), rec.c(n));
        if a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient(n));
        }
        if let Some(iv) = ints.as_mut() {
            if a.is_integer() && b.is_integer() && c.is_integer() {
                let bz = b.to_integer() * &iv[n];
                let cz = c.to_integer() * &iv[n - 1];
                let rhs = match rec.sign {
                    Sign::Plus => bz + cz,
                    Sign::Minus => bz - cz,
                };
                let (q, r) = rhs.div_rem(&a.to_integer());
                if r.is_zero() {
                    iv.push(q);
                    continue;
                }
            }
            values = iv.iter().cloned().map(Rat::from_integer).collect();
            ints = None;
        }
        let bz = b * &values[n];
        let cz = c * &values[n - 1];
        let rhs = match rec.sign {
            Sign::Plus => bz + cz,
            Sign::Minus => bz - cz,
        };
        let next = rhs / a;
        if first_inexact.is_none() && !next.is_integer() {
            first_inexact = Some(n + 1);
        }
        values.push(next);
    }
    if let Some(iv) = ints {
        values = iv.into_iter().map(Rat::from_integer).collect();
    }
    let mut terms = Seq::new(values).with_offset(rec.offset);
    if let Some(name) = &rec.name {
        terms = terms.with_name(name.clone());
    }
    Ok(RecurrenceTerms {
        terms,
        first_inexact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::scalar::rat;

    fn ints(terms: &RecurrenceTerms) -> Vec<i64> {
        use num_traits::ToPrimitive;
        terms.terms.values().iter().map(|v| v.to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn motzkin() {
        let rec = Recurrence3::from_i64(&[3, 1], &[3, 2], &[0, 3], Sign::Plus, &[1, 1]);
        let out = gen_from_recurrence3(&rec, 6).unwrap();
        assert!(out.is_integral());
        assert_eq!(ints(&out), [1, 1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn delannoy_left_indexed() {
        // n D(n) = 3(2n-1) D(n-1) - (n-1) D(n-2)
        let rec = Recurrence3::from_left_indexed(&[0, 1], &[-3, 6], &[-1, 1], Sign::Minus, &[1, 3], 2);
        assert_eq!(rec.alpha, RatPoly::from_i64(&[1, 1]));
        assert_eq!(rec.beta, RatPoly::from_i64(&[3, 6]));
        assert_eq!(rec.gamma, RatPoly::from_i64(&[0, 1]));
        assert_eq!(ints(&gen_from_recurrence3(&rec, 4).unwrap()), [1, 3, 13, 63, 321]);
    }

    #[test]
    fn fine_left_indexed() {
        // 2(n+1) f_n = (7n-5) f_{n-1} + 2(2n-1) f_{n-2}
        let rec = Recurrence3::from_left_indexed(&[2, 2], &[-5, 7], &[-2, 4], Sign::Plus, &[1, 0], 2);
        assert_eq!(ints(&gen_from_recurrence3(&rec, 5).unwrap()), [1, 0, 1, 2, 6, 18]);
    }

    #[test]
    fn inexact_division_is_flagged() {
        // 2 z_{n+1} = z_n + z_{n-1}
        let rec = Recurrence3::from_i64(&[2], &[1], &[1], Sign::Plus, &[1, 2]);
        let out = gen_from_recurrence3(&rec, 3).unwrap();
        assert_eq!(out.first_inexact, Some(2));
        assert_eq!(out.terms.values()[2], rat(3, 2));
        assert!(out.terms.to_int().is_none());
    }

    #[test]
    fn zero_leading_coefficient() {
        let rec = Recurrence3::from_i64(&[-3, 1], &[1], &[1], Sign::Plus, &[1, 1]);
        assert_eq!(gen_from_recurrence3(&rec, 5), Err(Error::ZeroLeadingCoefficient(3)));
    }
}
