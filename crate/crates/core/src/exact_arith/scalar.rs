//! Integer and rational scalars, plus the small amount of glue that lets
//! sequences, polynomials and transforms be written once for both.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// An exact ordered ring element. Implemented for [`Int`] and [`Rat`].
pub trait Scalar:
    Clone
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + From<Int>
    + Send
    + Sync
{
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_ref(&mut self, other: &Self);
    fn sub_ref(&mut self, other: &Self);
    fn to_rat(&self) -> Rat;
    fn from_i64(v: i64) -> Self {
        Self::from(Int::from(v))
    }
    fn is_neg(&self) -> bool {
        *self < Self::zero()
    }
}

impl Scalar for Int {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn to_rat(&self) -> Rat {
        Rat::from_integer(self.clone())
    }
}

impl Scalar for Rat {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self = &*self - other;
    }
    fn to_rat(&self) -> Rat {
        self.clone()
    }
}

/// `num/den` as a normalized rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Exact rational order, decided by cross-multiplication over positive
/// denominators.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

pub fn sign<T: Scalar>(x: &T) -> i8 {
    match x.cmp(&T::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Returns the integer value if the rational has denominator one.
pub fn rat_to_int(x: &Rat) -> Option<Int> {
    if x.is_integer() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// `binom(n, k)` for machine-sized arguments; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<Int> {
    let mut row = Vec::with_capacity(n + 1);
    let mut cur = Int::one();
    row.push(cur.clone());
    for k in 0..n {
        cur = cur * (n - k) / (k + 1);
        row.push(cur.clone());
    }
    row
}

pub fn factorials(n_max: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut cur = Int::one();
    out.push(cur.clone());
    for i in 1..=n_max {
        cur *= i;
        out.push(cur.clone());
    }
    out
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &Int) -> Int {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

pub fn is_perfect_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Decomposes a positive integer as `n = s^2 * f` with `f` squarefree.
///
/// Trial division runs up to the cube root of what remains; the cofactor left
/// after that has at most two prime factors, so it is either squarefree or a
/// perfect square of a prime.
pub fn squarefree_decompose(n: &Int) -> (Int, Int) {
    assert!(n.is_positive(), "squarefree_decompose needs n > 0");
    let mut rest = n.clone();
    let mut square_root = Int::one();
    let mut core = Int::one();
    let mut p = Int::from(2u32);
    loop {
        if &p * &p * &p > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square_root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += if p == Int::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > Int::one() {
        if is_perfect_square(&rest) {
            square_root *= rest.sqrt();
        } else {
            core *= rest;
        }
    }
    (square_root, core)
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Shortest exact decimal rendering: integers as digits, rationals as `p/q`.
pub fn rat_to_string(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p` or `p/q` into a rational.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => text.parse::<Int>().ok().map(Rat::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_cmp_examples() {
        assert_eq!(rat_cmp(&rat(3, 2), &rat(3, 2)), Ordering::Equal);
        // Fine-shift lambda_3 and lambda_4: 22/7 and 26/8.
        assert_eq!(rat_cmp(&rat(22, 7), &rat(26, 8)), Ordering::Less);
        assert_eq!(rat_cmp(&rat(-1, 3), &rat(0, 1)), Ordering::Less);
    }

    #[test]
    fn squarefree_parts() {
        let cases = [(1, 1, 1), (8, 2, 2), (72, 6, 2), (73, 1, 73), (49, 7, 1), (2 * 3 * 25 * 49, 35, 6)];
        for (n, s, f) in cases {
            assert_eq!(squarefree_decompose(&Int::from(n)), (Int::from(s), Int::from(f)), "n = {n}");
        }
        // prime squared above the trial-division bound
        let p = Int::from(1_000_003u64);
        assert_eq!(squarefree_decompose(&(&p * &p * 3)), (p.clone(), Int::from(3)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), Int::from(20));
        assert_eq!(binomial(3, 5), Int::zero());
        assert_eq!(binomial_row(4), [1, 4, 6, 4, 1].map(Int::from).to_vec());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rat("12"), Some(rat_int(12)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }
}
