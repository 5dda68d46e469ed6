//! Quadratic surds `p + q*sqrt(d)` and sums of square roots over the
//! rationals, with exact sign determination.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{rat_to_string, squarefree_decompose, Int, Rat};

/// `p + q*sqrt(d)` with `d` squarefree. A rational value always carries
/// `q = 0, d = 1`, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadSurd {
    p: Rat,
    q: Rat,
    d: Int,
}

impl QuadSurd {
    pub fn rational(p: Rat) -> Self {
        QuadSurd {
            p,
            q: Rat::zero(),
            d: Int::one(),
        }
    }

    /// `p + q*sqrt(radicand)` for a nonnegative rational radicand. The radicand
    /// is reduced to its squarefree kernel; perfect squares fold into `p`.
    pub fn new(p: Rat, q: Rat, radicand: &Rat) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        if radicand.is_zero() || q.is_zero() {
            return Self::rational(p);
        }
        // sqrt(u/v) = sqrt(u*v)/v
        let uv = radicand.numer() * radicand.denom();
        let (s, f) = squarefree_decompose(&uv);
        let q = q * Rat::new(s, radicand.denom().clone());
        if f.is_one() {
            Self::rational(p + q)
        } else {
            QuadSurd { p, q, d: f }
        }
    }

    /// `(b + sqrt(b^2 + 4ac)) / (2a)`: the positive root of
    /// `a x^2 - b x - c = 0` when `a > 0`, `c >= 0`, and not both `b, c` zero.
    pub fn positive_root(a: &Rat, b: &Rat, c: &Rat) -> Self {
        let two_a = a * Rat::from_integer(Int::from(2));
        let disc = b * b + a * c * Rat::from_integer(Int::from(4));
        Self::new(b / &two_a, Rat::one() / &two_a, &disc)
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn radicand(&self) -> &Int {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.p.clone())
    }

    pub fn to_expr(&self) -> SurdExpr {
        let mut e = SurdExpr::rational(self.p.clone());
        e.add_term(self.q.clone(), self.d.clone());
        e
    }

    pub fn sign(&self) -> i8 {
        self.to_expr().sign()
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        let diff = self.to_expr().sub(&SurdExpr::rational(r.clone()));
        sign_to_ordering(diff.sign())
    }

    pub fn cmp_surd(&self, other: &QuadSurd) -> Ordering {
        sign_to_ordering(self.to_expr().sub(&other.to_expr()).sign())
    }

    /// Floor of the value as a rational with denominator `2^bits`.
    pub fn lower_bound(&self, bits: u32) -> Rat {
        self.to_expr().enclose(bits).0
    }

    pub fn to_f64(&self) -> f64 {
        self.to_expr().to_f64()
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", rat_to_string(&self.p))
        } else {
            write!(
                f,
                "{} + {}*sqrt({})",
                rat_to_string(&self.p),
                rat_to_string(&self.q),
                self.d
            )
        }
    }
}

fn sign_to_ordering(s: i8) -> Ordering {
    s.cmp(&0)
}

/// A finite sum `sum_i t_i * sqrt(d_i)` with rational `t_i` and distinct
/// squarefree `d_i` (`d = 1` is the rational part). Distinct squarefree
/// square roots are linearly independent over the rationals, so the value is
/// zero exactly when no term survives.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SurdExpr {
    terms: BTreeMap<Int, Rat>,
}

impl SurdExpr {
    pub fn zero() -> Self {
        SurdExpr::default()
    }

    pub fn rational(r: Rat) -> Self {
        let mut e = SurdExpr::zero();
        e.add_term(r, Int::one());
        e
    }

    /// `t * sqrt(d)` for any positive integer `d`.
    pub fn term(t: Rat, d: &Int) -> Self {
        let (s, f) = squarefree_decompose(d);
        let mut e = SurdExpr::zero();
        e.add_term(t * Rat::from_integer(s), f);
        e
    }

    fn add_term(&mut self, t: Rat, squarefree: Int) {
        if t.is_zero() {
            return;
        }
        match self.terms.entry(squarefree) {
            Entry::Vacant(v) => {
                v.insert(t);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + t;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Int, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, t) in &other.terms {
            out.add_term(t.clone(), d.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, t) in &other.terms {
            out.add_term(-t.clone(), d.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = SurdExpr::zero();
        for (d, t) in &self.terms {
            out.add_term(t * c, d.clone());
        }
        out
    }

    /// Product; `sqrt(a)*sqrt(b) = g*sqrt((a/g)(b/g))` with `g = gcd(a, b)`
    /// keeps radicands squarefree without factoring.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SurdExpr::zero();
        for (da, ta) in &self.terms {
            for (db, tb) in &other.terms {
                let g = da.gcd(db);
                let radicand = (da / &g) * (db / &g);
                out.add_term(ta * tb * Rat::from_integer(g), radicand);
            }
        }
        out
    }

    /// Rational interval `[lo, hi]` containing the value, from bracketing each
    /// square root to within `2^-bits`.
    pub fn enclose(&self, bits: u32) -> (Rat, Rat) {
        let scale = Int::one() << bits;
        let scale_sq = &scale * &scale;
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for (d, t) in &self.terms {
            if d.is_one() {
                lo += t;
                hi += t;
                continue;
            }
            let floor = (d * &scale_sq).sqrt();
            let r_lo = Rat::new(floor.clone(), scale.clone());
            let r_hi = Rat::new(floor + 1, scale.clone());
            if t.is_positive() {
                lo += t * &r_lo;
                hi += t * &r_hi;
            } else {
                lo += t * &r_hi;
                hi += t * &r_lo;
            }
        }
        (lo, hi)
    }

    /// Exact sign. Zero is decided algebraically; otherwise the enclosure is
    /// refined until it excludes zero, which must happen since the value is
    /// nonzero.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.terms.len() == 1 {
            let t = self.terms.values().next().expect("one term");
            return if t.is_positive() { 1 } else { -1 };
        }
        let mut bits = 32;
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let (lo, hi) = self.enclose(64);
        ((lo + hi) / Rat::from_integer(Int::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

pub fn surd_sign(e: &SurdExpr) -> i8 {
    e.sign()
}

impl fmt::Display for SurdExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, t)| {
                if d.is_one() {
                    rat_to_string(t)
                } else {
                    format!("{}*sqrt({})", rat_to_string(t), d)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
