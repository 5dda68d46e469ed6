//! Exact log-convexity / log-concavity predicates.
//!
//! Checks use the product form `z_{k-1} z_{k+1}` against `z_k^2`, so zero
//! terms are handled literally. Ratio forms are only used where the caller
//! guarantees strictly positive terms.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::scalar::rat_to_string;
use crate::exact_arith::{Int, Rat, Scalar};
use crate::sequences::{Seq, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `z_{k-1} z_{k+1} >= z_k^2`
    Convex,
    /// `z_{k-1} z_{k+1} <= z_k^2`
    Concave,
}

impl Mode {
    /// Whether `outer` against `inner` satisfies the mode's inequality.
    fn accepts<T: Ord>(self, outer: &T, inner: &T, strict: bool) -> bool {
        match (self, outer.cmp(inner)) {
            (_, Ordering::Equal) => !strict,
            (Mode::Convex, ord) => ord == Ordering::Greater,
            (Mode::Concave, ord) => ord == Ordering::Less,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
pub enum Status {
    Holds,
    Fails,
    HoldsFromIndex(usize),
}

/// A failed inequality: the indices involved (a triple `k-1, k, k+1` for
/// sequences, `(i, j, k, l)` for triangle minors) and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    /// `z_{k-1} z_{k+1}` (or `a(i,k) a(j,l)` for a minor)
    pub outer: Rat,
    /// `z_k^2` (or `a(i,l) a(j,k)`)
    pub inner: Rat,
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Violation", 3)?;
        st.serialize_field("indices", &self.indices)?;
        st.serialize_field("outer", &rat_to_string(&self.outer))?;
        st.serialize_field("inner", &rat_to_string(&self.inner))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub status: Status,
    pub first_violation: Option<Violation>,
    /// Inclusive range of interior indices (or rows) examined.
    pub range_checked: (usize, usize),
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        !matches!(self.status, Status::Fails)
    }
}

fn check_nonneg<T: Scalar>(z: &Seq<T>) -> Result<()> {
    match z.values().iter().position(|v| v.is_neg()) {
        Some(i) => Err(Error::NegativeTerm(i + z.offset())),
        None => Ok(()),
    }
}

/// Adjacent-triple check in either mode, optionally strict.
pub fn log_check<T: Scalar>(z: &Seq<T>, mode: Mode, strict: bool) -> Result<CheckReport> {
    if z.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            have: z.len(),
        });
    }
    check_nonneg(z)?;
    let v = z.values();
    let off = z.offset();
    let first_violation = (1..v.len() - 1).find_map(|k| {
        let outer = v[k - 1].mul_ref(&v[k + 1]);
        let inner = v[k].mul_ref(&v[k]);
        (!mode.accepts(&outer, &inner, strict)).then(|| Violation {
            indices: vec![off + k - 1, off + k, off + k + 1],
            outer: outer.to_rat(),
            inner: inner.to_rat(),
        })
    });
    Ok(CheckReport {
        status: if first_violation.is_some() {
            Status::Fails
        } else {
            Status::Holds
        },
        first_violation,
        range_checked: (off + 1, off + v.len() - 2),
    })
}

pub fn is_log_convex<T: Scalar>(z: &Seq<T>) -> Result<CheckReport> {
    log_check(z, Mode::Convex, false)
}

pub fn is_log_concave<T: Scalar>(z: &Seq<T>) -> Result<CheckReport> {
    log_check(z, Mode::Concave, false)
}

/// Checks the tail `z_from, z_from+1, ...`; a passing result reports
/// `HoldsFromIndex(from)` when `from` is past the first stored index.
pub fn log_check_from<T: Scalar>(z: &Seq<T>, mode: Mode, from: usize) -> Result<CheckReport> {
    let tail = z.tail(from)?;
    let mut report = log_check(&tail, mode, false)?;
    if report.holds() && from > z.offset() {
        report.status = Status::HoldsFromIndex(from);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    /// `x_n = z_{n+1} / z_n`
    pub ratios: Vec<Rat>,
    pub increasing: bool,
    pub decreasing: bool,
}

/// Exact successive ratios with a (non-strict) monotonicity verdict.
pub fn ratio_sequence<T: Scalar>(z: &Seq<T>) -> Result<RatioReport> {
    if let Some(i) = z.values().iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroTerm(i + z.offset()));
    }
    check_nonneg(z)?;
    let ratios: Vec<Rat> = z
        .values()
        .windows(2)
        .map(|w| w[1].to_rat() / w[0].to_rat())
        .collect();
    let increasing = ratios.windows(2).all(|w| w[0] <= w[1]);
    let decreasing = ratios.windows(2).all(|w| w[0] >= w[1]);
    Ok(RatioReport {
        ratios,
        increasing,
        decreasing,
    })
}

/// Sign sequence of a 2x2 sign-regular Hankel matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignPair(pub i8, pub i8);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sr2Report {
    /// Every sign sequence the prefix satisfies: `(1, 1)` log-convex,
    /// `(1, -1)` log-concave, both for a geometric prefix, none otherwise.
    pub signs: Vec<SignPair>,
    pub convex_violation: Option<Violation>,
    pub concave_violation: Option<Violation>,
    /// Number of leading terms examined.
    pub window: usize,
}

/// Brute-force `a_m a_n` against `a_{m-k} a_{n+k}` for all
/// `1 <= k <= m <= n` with `n + k < window`.
pub fn sr2_window_check<T: Scalar>(z: &Seq<T>, window: usize) -> Result<Sr2Report> {
    if window < 2 || z.len() < window {
        return Err(Error::TooShort {
            needed: window.max(2),
            have: z.len(),
        });
    }
    check_nonneg(z)?;
    let v = &z.values()[..window];
    let off = z.offset();
    let mut convex_violation = None;
    let mut concave_violation = None;
    for m in 1..window {
        for n in m..window {
            for k in 1..=m {
                if n + k >= window {
                    break;
                }
                let inner = v[m].mul_ref(&v[n]);
                let outer = v[m - k].mul_ref(&v[n + k]);
                let witness = || Violation {
                    indices: vec![off + m - k, off + m, off + n, off + n + k],
                    outer: outer.to_rat(),
                    inner: inner.to_rat(),
                };
                if convex_violation.is_none() && outer < inner {
                    convex_violation = Some(witness());
                }
                if concave_violation.is_none() && outer > inner {
                    concave_violation = Some(witness());
                }
            }
        }
    }
    let mut signs = Vec::new();
    if convex_violation.is_none() {
        signs.push(SignPair(1, 1));
    }
    if concave_violation.is_none() {
        signs.push(SignPair(1, -1));
    }
    Ok(Sr2Report {
        signs,
        convex_violation,
        concave_violation,
        window,
    })
}

/// All 2x2 minors `a(i,k) a(j,l) - a(i,l) a(j,k)`, `i < j`, `k < l`, over rows
/// `0..=rows` are nonnegative.
pub fn is_tp2_triangle(t: &Triangle, rows: usize) -> Result<CheckReport> {
    if rows >= t.num_rows() {
        return Err(Error::TooShort {
            needed: rows + 1,
            have: t.num_rows(),
        });
    }
    let cols = rows + 1;
    let get = |n: usize, k: usize| -> Int { t.get(n as i64, k as i64) };
    for i in 0..=rows {
        for j in i + 1..=rows {
            for k in 0..cols {
                for l in k + 1..cols {
                    let outer = get(i, k) * get(j, l);
                    let inner = get(i, l) * get(j, k);
                    if outer < inner {
                        return Ok(CheckReport {
                            status: Status::Fails,
                            first_violation: Some(Violation {
                                indices: vec![i, j, k, l],
                                outer: Rat::from_integer(outer),
                                inner: Rat::from_integer(inner),
                            }),
                            range_checked: (0, rows),
                        });
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        status: Status::Holds,
        first_violation: None,
        range_checked: (0, rows),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// `z_{2m}` or `z_{2m+1}` by absolute index; the result's offset is the
/// smallest `m` whose source index is stored.
pub fn bisection<T: Scalar>(z: &Seq<T>, parity: Parity) -> Result<Seq<T>> {
    if z.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            have: z.len(),
        });
    }
    let p = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let off = z.offset();
    let values: Vec<T> = z
        .values()
        .iter()
        .enumerate()
        .filter(|(i, _)| (off + i) % 2 == p)
        .map(|(_, v)| v.clone())
        .collect();
    let first_m = if off <= p { 0 } else { (off - p).div_ceil(2) };
    let mut out = Seq::new(values).with_offset(first_m);
    if let Some(name) = z.name() {
        out = out.with_name(format!("{name}_{}", if p == 0 { "even" } else { "odd" }));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TailReport {
    /// Smallest absolute index `N` with `z_N, z_N+1, ...` log-convex inside the prefix.
    pub index: usize,
    /// Always true: the answer is relative to the stored prefix.
    pub prefix_relative: bool,
}

pub fn find_logconvex_tail<T: Scalar>(z: &Seq<T>) -> Result<TailReport> {
    if z.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            have: z.len(),
        });
    }
    check_nonneg(z)?;
    let v = z.values();
    let last_bad = (1..v.len() - 1)
        .rev()
        .find(|&k| v[k - 1].mul_ref(&v[k + 1]) < v[k].mul_ref(&v[k]));
    Ok(TailReport {
        index: z.offset() + last_bad.unwrap_or(0),
        prefix_relative: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::scalar::rat;
    use crate::sequences::{gen_named, gen_triangle};

    fn s(v: &[i64]) -> Seq<Int> {
        Seq::from_i64(v)
    }

    #[test]
    fn log_convex_examples() {
        assert!(is_log_convex(&s(&[1, 1, 2, 4, 9, 21, 51])).unwrap().holds());
        let fib = is_log_convex(&s(&[1, 1, 2, 3, 5, 8])).unwrap();
        assert_eq!(fib.status, Status::Fails);
        let w = fib.first_violation.unwrap();
        assert_eq!(w.indices, [1, 2, 3]);
        assert_eq!((w.outer, w.inner), (rat(3, 1), rat(4, 1)));
        assert!(is_log_convex(&s(&[5, 5, 5])).unwrap().holds());
        assert!(!log_check(&s(&[5, 5, 5]), Mode::Convex, true).unwrap().holds());
    }

    #[test]
    fn log_concave_examples() {
        assert!(is_log_concave(&s(&[1, 4, 6, 4, 1])).unwrap().holds());
        assert!(is_log_concave(&s(&[1, 3, 8, 21])).unwrap().holds());
        let r = is_log_concave(&s(&[1, 1, 2])).unwrap();
        assert_eq!(r.first_violation.unwrap().indices, [0, 1, 2]);
    }

    #[test]
    fn errors() {
        assert_eq!(is_log_convex(&s(&[1, 2])), Err(Error::TooShort { needed: 3, have: 2 }));
        assert_eq!(is_log_convex(&s(&[1, -2, 3])), Err(Error::NegativeTerm(1)));
        assert_eq!(ratio_sequence(&s(&[1, 0, 1])), Err(Error::ZeroTerm(1)));
    }

    #[test]
    fn zeros_are_literal() {
        // 0 * x >= 0^2
        assert!(is_log_convex(&s(&[1, 0, 1])).unwrap().holds());
        assert!(!is_log_convex(&s(&[0, 1, 0])).unwrap().holds());
    }

    #[test]
    fn ratios() {
        let r = ratio_sequence(&s(&[1, 1, 2, 5, 14])).unwrap();
        assert_eq!(r.ratios, [rat(1, 1), rat(2, 1), rat(5, 2), rat(14, 5)]);
        assert!(r.increasing && !r.decreasing);
        let r = ratio_sequence(&s(&[1, 2, 6, 20])).unwrap();
        assert_eq!(r.ratios, [rat(2, 1), rat(3, 1), rat(10, 3)]);
        let r = ratio_sequence(&s(&[3, 3, 3])).unwrap();
        assert!(r.increasing && r.decreasing);
    }

    #[test]
    fn sr2_examples() {
        let motzkin = gen_named("motzkin", 11).unwrap();
        assert_eq!(sr2_window_check(&motzkin, 12).unwrap().signs, [SignPair(1, 1)]);
        let row: Seq<Int> = Seq::new(crate::exact_arith::scalar::binomial_row(6));
        assert_eq!(sr2_window_check(&row, 7).unwrap().signs, [SignPair(1, -1)]);
        let fib = gen_named("fibonacci", 11).unwrap();
        assert!(sr2_window_check(&fib, 12).unwrap().signs.is_empty());
    }

    #[test]
    fn tp2_examples() {
        assert!(is_tp2_triangle(&gen_triangle("binomial", 30).unwrap(), 30).unwrap().holds());
        assert!(is_tp2_triangle(&gen_triangle("stirling2", 20).unwrap(), 20).unwrap().holds());
        let mut t = gen_triangle("binomial", 4).unwrap();
        t.set(2, 1, Int::from(-2));
        let r = is_tp2_triangle(&t, 4).unwrap();
        assert_eq!(r.status, Status::Fails);
        let w = r.first_violation.unwrap();
        let (i, j, k, l) = (w.indices[0] as i64, w.indices[1] as i64, w.indices[2] as i64, w.indices[3] as i64);
        assert_eq!(Rat::from_integer(t.get(i, k) * t.get(j, l)), w.outer);
        assert_eq!(Rat::from_integer(t.get(i, l) * t.get(j, k)), w.inner);
        assert!(w.outer < w.inner);
    }

    #[test]
    fn bisections() {
        let fib = gen_named("fibonacci", 9).unwrap();
        let even = bisection(&fib, Parity::Even).unwrap();
        assert_eq!(even.values(), s(&[1, 2, 5, 13, 34]).values());
        assert!(is_log_convex(&even).unwrap().holds());
        let pell = gen_named("pell", 9).unwrap();
        assert!(is_log_concave(&bisection(&pell, Parity::Odd).unwrap()).unwrap().holds());
        let lucas = gen_named("lucas", 5).unwrap();
        let le = bisection(&lucas, Parity::Even).unwrap();
        assert_eq!(le.values(), s(&[1, 4, 11]).values());
        assert!(is_log_concave(&le).unwrap().holds());
        // shifted source: z starts at absolute index 3
        let shifted = s(&[10, 11, 12, 13]).with_offset(3);
        let odd = bisection(&shifted, Parity::Odd).unwrap();
        assert_eq!((odd.values(), odd.offset()), (s(&[10, 12]).values(), 1));
        let even = bisection(&shifted, Parity::Even).unwrap();
        assert_eq!((even.values(), even.offset()), (s(&[11, 13]).values(), 2));
    }

    #[test]
    fn tails() {
        assert_eq!(find_logconvex_tail(&s(&[1, 0, 1, 2, 6, 18, 57])).unwrap().index, 2);
        assert_eq!(find_logconvex_tail(&s(&[1, 0, 1, 2, 9, 44])).unwrap().index, 2);
        assert_eq!(find_logconvex_tail(&s(&[1, 1, 2, 4, 9])).unwrap().index, 0);
    }

    #[test]
    fn from_index() {
        let fine = gen_named("fine", 50).unwrap();
        assert!(!is_log_convex(&fine).unwrap().holds());
        let r = log_check_from(&fine, Mode::Convex, 2).unwrap();
        assert_eq!(r.status, Status::HoldsFromIndex(2));
    }
}
