//! Sequence operators: sums, convolutions and triangle transforms.
//!
//! Every operator requires matching offsets and lengths and keeps the
//! input offset on its output.

mod identities;

pub use identities::{verify_identity, IdentityReport, Mismatch, IDENTITY_NAMES};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::scalar::binomial_row;
use crate::exact_arith::{Int, Scalar};
use crate::sequences::{gen_triangle, Seq, Triangle};

fn same_shape<T: Scalar>(x: &Seq<T>, y: &Seq<T>) -> Result<()> {
    if x.offset() != y.offset() {
        return Err(Error::OffsetMismatch {
            left: x.offset(),
            right: y.offset(),
        });
    }
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

fn rebuild<T: Scalar>(x: &Seq<T>, values: Vec<T>) -> Seq<T> {
    Seq::new(values).with_offset(x.offset())
}

pub fn componentwise_sum<T: Scalar>(x: &Seq<T>, y: &Seq<T>) -> Result<Seq<T>> {
    same_shape(x, y)?;
    let values = x
        .values()
        .iter()
        .zip(y.values())
        .map(|(a, b)| {
            let mut v = a.clone();
            v.add_ref(b);
            v
        })
        .collect();
    Ok(rebuild(x, values))
}

/// `z_n = sum_k binom(n, k) x_k y_{n-k}`, indices local to the prefix.
pub fn binomial_convolution<T: Scalar>(x: &Seq<T>, y: &Seq<T>) -> Result<Seq<T>> {
    same_shape(x, y)?;
    let (xv, yv) = (x.values(), y.values());
    let values = (0..xv.len())
        .map(|n| {
            binomial_row(n)
                .into_iter()
                .enumerate()
                .fold(T::zero(), |acc, (k, c)| {
                    acc + T::from(c).mul_ref(&xv[k].mul_ref(&yv[n - k]))
                })
        })
        .collect();
    Ok(rebuild(x, values))
}

/// `z_n = sum_k x_k y_{n-k}`.
pub fn ordinary_convolution<T: Scalar>(x: &Seq<T>, y: &Seq<T>) -> Result<Seq<T>> {
    same_shape(x, y)?;
    let (xv, yv) = (x.values(), y.values());
    let values = (0..xv.len())
        .map(|n| (0..=n).fold(T::zero(), |acc, k| acc + xv[k].mul_ref(&yv[n - k])))
        .collect();
    Ok(rebuild(x, values))
}

/// `z_n = sum_k a(n, k) x_k` for every stored row of `t`.
pub fn triangle_transform<T: Scalar>(t: &Triangle, x: &Seq<T>) -> Result<Seq<T>> {
    if x.len() < t.num_rows() {
        return Err(Error::LengthMismatch {
            left: t.num_rows(),
            right: x.len(),
        });
    }
    let xv = x.values();
    let values = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(xv)
                .filter(|(a, _)| !a.is_zero())
                .fold(T::zero(), |acc, (a, v)| acc + T::from(a.clone()).mul_ref(v))
        })
        .collect();
    Ok(rebuild(x, values))
}

/// [`triangle_transform`] with the catalogue triangle `name`, sized to `x`.
pub fn named_transform<T: Scalar>(name: &str, x: &Seq<T>) -> Result<Seq<T>> {
    if x.is_empty() {
        return Ok(x.clone());
    }
    triangle_transform(&gen_triangle(name, x.len() - 1)?, x)
}

pub fn binomial_transform<T: Scalar>(x: &Seq<T>) -> Result<Seq<T>> {
    named_transform("binomial", x)
}

pub fn stirling2_transform<T: Scalar>(x: &Seq<T>) -> Result<Seq<T>> {
    named_transform("stirling2", x)
}

pub fn stirling1_transform<T: Scalar>(x: &Seq<T>) -> Result<Seq<T>> {
    named_transform("stirling1", x)
}

/// `z_n = sum_k binom(n+k, n-k) x_k`.
pub fn morgan_voyce_transform<T: Scalar>(x: &Seq<T>) -> Result<Seq<T>> {
    named_transform("morgan_voyce", x)
}

pub fn narayana_transform<T: Scalar>(x: &Seq<T>) -> Result<Seq<T>> {
    named_transform("narayana", x)
}

pub fn eulerian_transform<T: Scalar>(x: &Seq<T>) -> Result<Seq<T>> {
    named_transform("eulerian", x)
}

/// Two log-convex sequences whose ordinary convolution is not log-convex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionCounterexample {
    pub x: Seq<Int>,
    pub y: Seq<Int>,
    pub product: Seq<Int>,
}

/// The pinned witness: `(1,1,1) * (1,1,1) = (1,2,3)` and `1 * 3 < 2^2`.
pub fn pinned_convolution_counterexample() -> ConvolutionCounterexample {
    let x = Seq::from_i64(&[1, 1, 1]);
    let y = x.clone();
    let product = Seq::from_i64(&[1, 2, 3]);
    ConvolutionCounterexample { x, y, product }
}

/// Bounded search over length-3 log-convex sequences with entries in
/// `1..=max_entry`, in lexicographic order of `(x, y)`.
pub fn search_convolution_counterexample(max_entry: i64) -> Option<ConvolutionCounterexample> {
    let lcx = |v: &[i64]| v[0] * v[2] >= v[1] * v[1];
    let mut candidates = Vec::new();
    for a in 1..=max_entry {
        for b in 1..=max_entry {
            for c in 1..=max_entry {
                if lcx(&[a, b, c]) {
                    candidates.push([a, b, c]);
                }
            }
        }
    }
    for x in &candidates {
        for y in &candidates {
            let z = [x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[1] * y[1] + x[2] * y[0]];
            if !lcx(&z) {
                return Some(ConvolutionCounterexample {
                    x: Seq::from_i64(x),
                    y: Seq::from_i64(y),
                    product: Seq::from_i64(&z),
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_log_convex;
    use crate::exact_arith::scalar::factorials;
    use crate::exact_arith::Rat;
    use crate::sequences::gen_named;

    fn s(v: &[i64]) -> Seq<Int> {
        Seq::from_i64(v)
    }

    #[test]
    fn sums() {
        let z = componentwise_sum(&s(&[1, 1, 2, 4, 9]), &s(&[1, 1, 2, 5, 14])).unwrap();
        assert_eq!(z, s(&[2, 2, 4, 9, 23]));
        let x = s(&[1, 1, 2, 4, 9]);
        assert_eq!(componentwise_sum(&x, &s(&[0; 5])).unwrap(), x);
        assert_eq!(
            componentwise_sum(&x, &s(&[1, 2])),
            Err(Error::LengthMismatch { left: 5, right: 2 })
        );
        assert_eq!(
            componentwise_sum(&x, &x.clone().with_offset(2)),
            Err(Error::OffsetMismatch { left: 0, right: 2 })
        );
    }

    #[test]
    fn convolutions() {
        let bell = s(&[1, 1, 2, 5, 15]);
        assert_eq!(binomial_convolution(&bell, &bell).unwrap(), s(&[1, 2, 6, 22, 94]));
        let cat = s(&[1, 1, 2, 5, 14]);
        assert_eq!(ordinary_convolution(&cat, &cat).unwrap(), s(&[1, 2, 5, 14, 42]));
        let delta = s(&[1, 0, 0, 0, 0]);
        assert_eq!(binomial_convolution(&cat, &delta).unwrap(), cat);
        assert_eq!(ordinary_convolution(&cat, &delta).unwrap(), cat);
    }

    #[test]
    fn halved_euler_recurrence() {
        let e = gen_named("euler", 20).unwrap();
        let z: Vec<Rat> = e.values().iter().map(|v| Rat::new(v.clone(), Int::from(2))).collect();
        for n in 1..20 {
            let prefix: Seq<Rat> = Seq::new(z[..=n].to_vec());
            let conv = binomial_convolution(&prefix, &prefix).unwrap();
            assert_eq!(conv.values()[n], z[n + 1], "n = {n}");
        }
    }

    #[test]
    fn triangle_transforms() {
        let fact: Seq<Int> = Seq::new(factorials(4));
        assert_eq!(stirling2_transform(&fact).unwrap(), s(&[1, 1, 3, 13, 75]));
        assert_eq!(morgan_voyce_transform(&s(&[1, 1, 2, 5, 14])).unwrap(), s(&[1, 2, 6, 22, 90]));
        assert_eq!(morgan_voyce_transform(&s(&[1; 5])).unwrap(), s(&[1, 2, 5, 13, 34]));
        assert_eq!(binomial_transform(&s(&[1, 1, 1])).unwrap(), s(&[1, 2, 4]));
        let t = gen_triangle("binomial", 4).unwrap();
        assert_eq!(
            triangle_transform(&t, &s(&[1, 1])),
            Err(Error::LengthMismatch { left: 5, right: 2 })
        );
    }

    #[test]
    fn convolution_counterexample_is_pinned() {
        let found = search_convolution_counterexample(4).unwrap();
        assert_eq!(found, pinned_convolution_counterexample());
        assert!(is_log_convex(&found.x).unwrap().holds());
        assert!(is_log_convex(&found.y).unwrap().holds());
        assert_eq!(ordinary_convolution(&found.x, &found.y).unwrap(), found.product);
        assert!(!is_log_convex(&found.product).unwrap().holds());
    }
}
