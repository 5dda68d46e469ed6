//! Dense univariate polynomials with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::{Int, Rat, Scalar};

/// Coefficient `i` multiplies `q^i`. Trailing zeros are never stored, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T: Scalar = Int> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<Int>;
pub type RatPoly = Poly<Rat>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * q^power`.
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero above the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i);
            if let Some(o) = other.coeffs.get(i) {
                c.add_ref(o);
            }
            out.push(c);
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i);
            if let Some(o) = other.coeffs.get(i) {
                c.sub_ref(o);
            }
            out.push(c);
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&T::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Horner evaluation at an element of the coefficient ring.
    pub fn eval_at(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_ref(c);
        }
        acc
    }

    /// Exact rational evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_rat();
        }
        acc
    }

    /// `f(shift + q)` as a polynomial in `q`, by Horner's scheme in the ring.
    pub fn compose_affine(&self, shift: &T) -> Self {
        let lin = Self::new(vec![shift.clone(), T::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Exact rational coefficients.
    pub fn to_rat(&self) -> RatPoly {
        Poly::new(self.coeffs.iter().map(|c| c.to_rat()).collect())
    }

    /// First power carrying a negative coefficient, if any.
    pub fn first_negative_coeff(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_neg())
    }

    /// `(true, None)` when every coefficient is nonnegative, otherwise the
    /// smallest offending power.
    pub fn coeffs_nonneg(&self) -> (bool, Option<usize>) {
        match self.first_negative_coeff() {
            None => (true, None),
            Some(i) => (false, Some(i)),
        }
    }
}

impl RatPoly {
    /// Converts back to integer coefficients when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(super::scalar::rat_to_int)
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

pub fn poly_mul<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Poly<T> {
    f.mul(g)
}

pub fn poly_sub<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Poly<T> {
    f.sub(g)
}

pub fn poly_eval<T: Scalar>(f: &Poly<T>, x: &Rat) -> Rat {
    f.eval(x)
}

pub fn poly_derivative<T: Scalar>(f: &Poly<T>) -> Poly<T> {
    f.derivative()
}

/// `f(shift + q)` with a rational shift.
pub fn poly_compose_affine<T: Scalar>(f: &Poly<T>, shift: &Rat) -> RatPoly {
    f.to_rat().compose_affine(shift)
}

pub fn coeffs_nonneg<T: Scalar>(f: &Poly<T>) -> (bool, Option<usize>) {
    f.coeffs_nonneg()
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        Poly::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        Poly::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        Poly::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_neg() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::scalar::{rat, rat_int};

    fn p(c: &[i64]) -> IntPoly {
        Poly::from_i64(c)
    }

    #[test]
    fn multiply_q_factorial_three() {
        assert_eq!(poly_mul(&p(&[1, 1]), &p(&[1, 1, 1])), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn subtract_self_is_zero() {
        let f = p(&[3, 0, -2, 7]);
        let z = poly_sub(&f, &f);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn narayana_three_shifted_by_one() {
        // N_3(1+q) = r_3(q)
        let shifted = poly_compose_affine(&p(&[0, 1, 3, 1]), &rat_int(1));
        assert_eq!(shifted.to_int().unwrap(), p(&[5, 10, 6, 1]));
    }

    #[test]
    fn derivative_and_eval() {
        let f = p(&[1, 2, 0, 4]);
        assert_eq!(poly_derivative(&f), p(&[2, 0, 12]));
        assert_eq!(poly_eval(&f, &rat(1, 2)), rat(5, 2));
        assert!(poly_derivative(&p(&[9])).is_zero());
    }

    #[test]
    fn nonneg_coefficients() {
        assert_eq!(coeffs_nonneg(&p(&[1, 2, 0, 1])), (true, None));
        assert_eq!(coeffs_nonneg(&p(&[0, 1, -1])), (false, Some(2)));
        // A_0 A_2 - A_1^2 for the Morgan-Voyce polynomials is exactly q.
        let d = poly_sub(&poly_mul(&p(&[1]), &p(&[1, 3, 1])), &poly_mul(&p(&[1, 1]), &p(&[1, 1])));
        assert_eq!(d, p(&[0, 1]));
        assert_eq!(coeffs_nonneg(&d), (true, None));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2q + q^3");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
