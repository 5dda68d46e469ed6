//! Seeded random corpora of log-convex and log-concave integer sequences.
//!
//! A sequence is built from a sorted list of small positive rational ratios
//! `r_0 <= r_1 <= ...` as `z_{n+1} = r_n z_n`, then scaled by the product of
//! the ratio denominators so every term is an integer. Sorting the ratios
//! upward gives log-convexity by construction; downward gives log-concavity.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convexity::Mode;
use crate::exact_arith::{Int, Rat};
use crate::sequences::Seq;

/// Numerators are drawn from `1..=MAX_NUM`, denominators from `1..=MAX_DEN`.
const MAX_NUM: i64 = 12;
const MAX_DEN: i64 = 4;

fn one_sequence(rng: &mut ChaCha8Rng, len: usize, mode: Mode) -> Seq<Int> {
    let mut ratios: Vec<Rat> = (1..len)
        .map(|_| {
            let p = rng.gen_range(1..=MAX_NUM);
            let q = rng.gen_range(1..=MAX_DEN);
            Rat::new(Int::from(p), Int::from(q))
        })
        .collect();
    ratios.sort();
    if mode == Mode::Concave {
        ratios.reverse();
    }
    let scale: Int = ratios.iter().map(|r| r.denom().clone()).product();
    let start = rng.gen_range(1..=5);
    let mut term = Rat::from_integer(scale * start);
    let mut values = vec![term.to_integer()];
    for r in &ratios {
        term = &term * r;
        debug_assert!(term.is_integer());
        values.push(term.to_integer());
    }
    Seq::new(values)
}

/// `count` sequences of length `len` in `mode`, reproducible from `seed`.
pub fn generate(seed: u64, count: usize, len: usize, mode: Mode) -> Vec<Seq<Int>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| one_sequence(&mut rng, len, mode)).collect()
}

pub fn log_convex_corpus(seed: u64, count: usize, len: usize) -> Vec<Seq<Int>> {
    generate(seed, count, len, Mode::Convex)
}

pub fn log_concave_corpus(seed: u64, count: usize, len: usize) -> Vec<Seq<Int>> {
    generate(seed, count, len, Mode::Concave)
}

/// Positive log-convex weights `u_k` for the weighted transform probe.
pub fn weight_sequence(seed: u64, len: usize) -> Seq<Int> {
    log_convex_corpus(seed ^ 0x5eed, 1, len)
        .pop()
        .unwrap_or_else(|| Seq::new(vec![Int::one(); len]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::{is_log_concave, is_log_convex};

    #[test]
    fn corpora_have_the_promised_shape() {
        for z in log_convex_corpus(7, 200, 12) {
            assert_eq!(z.len(), 12);
            assert!(z.values().iter().all(|v| v > &Int::from(0)));
            assert!(is_log_convex(&z).unwrap().holds());
        }
        for z in log_concave_corpus(7, 200, 12) {
            assert!(is_log_concave(&z).unwrap().holds());
        }
    }

    #[test]
    fn seeded() {
        assert_eq!(log_convex_corpus(3, 5, 8), log_convex_corpus(3, 5, 8));
        assert_ne!(log_convex_corpus(3, 5, 8), log_convex_corpus(4, 5, 8));
    }
}
