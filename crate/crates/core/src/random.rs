//! Seeded random instances.
//!
//! Entries are rationals `p/q` with `p ∈ [-9, 9]` and `q ∈ [1, 9]`. Each
//! trial gets its own stream derived from `(seed, trial)`, so results do not
//! depend on how trials are scheduled.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Ring, Scalar};
use crate::matrix::SquareMatrix;
use crate::word::{Letter, Word};

pub type TrialRng = ChaCha8Rng;

pub fn rng_for(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let p: i64 = rng.gen_range(-9..=9);
    let q: i64 = rng.gen_range(1..=9);
    Scalar::new(p.into(), q.into())
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let x = random_scalar(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_skew_matrix<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix<Scalar> {
    let mut m = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let x = random_scalar(rng);
            m.set(j, i, x.neg());
            m.set(i, j, x);
        }
    }
    m
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Vec<Vec<Scalar>> {
    (0..rows).map(|_| (0..cols).map(|_| random_scalar(rng)).collect()).collect()
}

pub fn random_square<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix<Scalar> {
    SquareMatrix::from_fn(n, |_, _| random_scalar(rng))
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> SquareMatrix<Scalar> {
    SquareMatrix::from_fn(n, |_, _| Scalar::from_int(rng.gen_range(-bound..=bound)))
}

/// `n` distinct random rationals.
pub fn random_points<R: Rng>(rng: &mut R, n: usize) -> Vec<Scalar> {
    let mut pts: Vec<Scalar> = Vec::with_capacity(n);
    while pts.len() < n {
        let x = random_scalar(rng);
        if !pts.contains(&x) {
            pts.push(x);
        }
    }
    pts
}

/// The letters `0..n` in random order.
pub fn shuffled_letters<R: Rng>(rng: &mut R, n: usize) -> Vec<Letter> {
    let mut ls: Vec<Letter> = (0..n as u32).map(Letter).collect();
    ls.shuffle(rng);
    ls
}

/// Splits a shuffled run of `0..total` into consecutive words of the given
/// lengths.
pub fn random_words<R: Rng>(rng: &mut R, total: usize, lengths: &[usize]) -> Vec<Word> {
    let ls = shuffled_letters(rng, total);
    let mut at = 0;
    lengths
        .iter()
        .map(|&len| {
            let w = Word::new(ls[at..at + len].to_vec());
            at += len;
            w
        })
        .collect()
}
