//! Classical identities, each side built by a different generator.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::scalar::factorials;
use crate::exact_arith::{Int, IntPoly, Poly, Rat};
use crate::sequences::catalogue::{bell_by_triangle, ordered_bell, two_colored_bell};
use crate::sequences::{gen_named, gen_triangle, Seq};

use super::{binomial_convolution, triangle_transform};

pub const IDENTITY_NAMES: &[&str] = &[
    "delannoy_via_morgan_voyce",
    "schroder_via_morgan_voyce",
    "fib_even_via_morgan_voyce",
    "central_binomial_via_squared_binomials",
    "delannoy_via_squared_binomials",
    "catalan_via_narayana",
    "schroder_via_narayana",
    "frobenius",
    "q_schroder_via_narayana_shift",
    "ordered_bell_via_eulerian",
    "two_colored_bell",
    "bell_via_stirling",
    "halved_euler",
];

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityReport {
    pub name: String,
    /// Inclusive range of `n` compared.
    pub range: (usize, usize),
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn compare<T: PartialEq + ToString>(name: &str, from: usize, lhs: &[T], rhs: &[T]) -> IdentityReport {
    assert_eq!(lhs.len(), rhs.len());
    let first_mismatch = (from..lhs.len())
        .find(|&n| lhs[n] != rhs[n])
        .map(|n| Mismatch {
            n,
            lhs: lhs[n].to_string(),
            rhs: rhs[n].to_string(),
        });
    IdentityReport {
        name: name.to_string(),
        range: (from, lhs.len() - 1),
        first_mismatch,
    }
}

fn powers_of_two(n_max: usize) -> Seq<Int> {
    Seq::new((0..=n_max).map(|k| Int::one() << k).collect())
}

fn tt(triangle: &str, x: &Seq<Int>) -> Result<Vec<Int>> {
    let t = gen_triangle(triangle, x.len() - 1)?;
    Ok(triangle_transform(&t, x)?.into_values())
}

fn named(name: &str, n_max: usize) -> Result<Vec<Int>> {
    Ok(gen_named(name, n_max)?.into_values())
}

/// `r_n(q) = sum_k binom(n+k, n-k) C_k q^{n-k}`.
fn q_schroder_by_sum(n_max: usize) -> Result<Vec<IntPoly>> {
    let mv = gen_triangle("morgan_voyce", n_max)?;
    let cat = gen_named("catalan", n_max)?;
    Ok((0..=n_max)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|j| &mv.row(n)[n - j] * &cat.values()[n - j])
                .collect();
            Poly::new(coeffs)
        })
        .collect())
}

/// `q sum_{k=1}^{n} k! S(n, k) (q-1)^{n-k}`.
fn frobenius_rhs(n_max: usize) -> Result<Vec<IntPoly>> {
    let s2 = gen_triangle("stirling2", n_max)?;
    let fact = factorials(n_max);
    let q_minus_one = IntPoly::from_i64(&[-1, 1]);
    let q = IntPoly::from_i64(&[0, 1]);
    Ok((0..=n_max)
        .map(|n| {
            let sum = (1..=n).fold(IntPoly::zero(), |acc, k| {
                let c = &fact[k] * &s2.row(n)[k];
                acc.add(&q_minus_one.pow(n - k).scale(&c))
            });
            q.mul(&sum)
        })
        .collect())
}

/// Compares both sides of `name` for `n <= n_max`.
pub fn verify_identity(name: &str, n_max: usize) -> Result<IdentityReport> {
    let ones = || Seq::new(vec![Int::one(); n_max + 1]);
    let report = match name {
        "delannoy_via_morgan_voyce" => {
            let b = gen_named("central_binomial", n_max)?;
            compare(name, 0, &named("delannoy", n_max)?, &tt("morgan_voyce", &b)?)
        }
        "schroder_via_morgan_voyce" => {
            let c = gen_named("catalan", n_max)?;
            compare(name, 0, &named("large_schroder", n_max)?, &tt("morgan_voyce", &c)?)
        }
        "fib_even_via_morgan_voyce" => {
            let fib = named("fibonacci", 2 * n_max)?;
            let even: Vec<Int> = fib.into_iter().step_by(2).collect();
            compare(name, 0, &even, &tt("morgan_voyce", &ones())?)
        }
        "central_binomial_via_squared_binomials" => compare(
            name,
            0,
            &named("central_binomial", n_max)?,
            &tt("squared_binomial", &ones())?,
        ),
        "delannoy_via_squared_binomials" => compare(
            name,
            0,
            &named("delannoy", n_max)?,
            &tt("squared_binomial", &powers_of_two(n_max))?,
        ),
        "catalan_via_narayana" => {
            compare(name, 0, &named("catalan", n_max)?, &tt("narayana", &ones())?)
        }
        "schroder_via_narayana" => compare(
            name,
            0,
            &named("large_schroder", n_max)?,
            &tt("narayana", &powers_of_two(n_max))?,
        ),
        "frobenius" => {
            let eulerian = gen_triangle("eulerian", n_max)?.row_polys();
            compare(name, 1, &eulerian, &frobenius_rhs(n_max)?)
        }
        "q_schroder_via_narayana_shift" => {
            let one = Int::one();
            let shifted: Vec<IntPoly> = gen_triangle("narayana", n_max)?
                .row_polys()
                .iter()
                .map(|p| p.compose_affine(&one))
                .collect();
            compare(name, 0, &q_schroder_by_sum(n_max)?, &shifted)
        }
        "ordered_bell_via_eulerian" => {
            let two = Int::from(2);
            let half: Vec<Int> = gen_triangle("eulerian", n_max)?
                .row_polys()
                .iter()
                .map(|p| p.eval_at(&two) / 2u32)
                .collect();
            compare(name, 1, &ordered_bell(n_max).into_values(), &half)
        }
        "two_colored_bell" => {
            let bell = bell_by_triangle(n_max);
            let conv = binomial_convolution(&bell, &bell)?.into_values();
            compare(name, 0, &conv, &two_colored_bell(n_max).into_values())
        }
        "bell_via_stirling" => compare(
            name,
            0,
            &bell_by_triangle(n_max).into_values(),
            &gen_triangle("stirling2", n_max)?.row_sums().into_values(),
        ),
        // z_n = E_n / 2 satisfies z_{n+1} = sum_k binom(n, k) z_k z_{n-k} for n >= 1;
        // compared as the sequence z_{n+1} against the convolution at n.
        "halved_euler" => {
            let e = gen_named("euler", n_max + 1)?;
            let z: Vec<Rat> = e
                .values()
                .iter()
                .map(|v| Rat::new(v.clone(), Int::from(2)))
                .collect();
            let zs = Seq::new(z[..=n_max].to_vec());
            let conv = binomial_convolution(&zs, &zs)?.into_values();
            compare(name, 1.min(n_max), &z[1..], &conv)
        }
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_holds_to_fifty() {
        for name in IDENTITY_NAMES {
            let r = verify_identity(name, 50).unwrap();
            assert!(r.holds(), "{name}: {:?}", r.first_mismatch);
            assert_eq!(r.range.1, 50, "{name}");
        }
    }

    #[test]
    fn halved_euler_fails_at_zero() {
        // 2 E_1 = 2 but E_0^2 = 1: the relation starts at n = 1.
        let e = gen_named("euler", 1).unwrap();
        assert_ne!(&e.values()[1] * 2u32, &e.values()[0] * &e.values()[0]);
    }

    #[test]
    fn unknown_identity() {
        assert_eq!(verify_identity("nope", 5), Err(Error::UnknownIdentity("nope".into())));
    }

    #[test]
    fn mismatch_is_reported() {
        let r = compare("t", 0, &[1, 2, 3], &[1, 2, 4]);
        assert_eq!(r.first_mismatch, Some(Mismatch { n: 2, lhs: "3".into(), rhs: "4".into() }));
    }
}
