#![allow(dead_code)]

use num_rational::BigRational;
use pfaff_core::{Ring, Scalar, SquareMatrix};
use proptest::prelude::*;

pub fn q(p: i64, d: i64) -> Scalar {
    BigRational::new(p.into(), d.into())
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, d)| q(p, d))
}

pub fn skew(n: usize) -> impl Strategy<Value = SquareMatrix<Scalar>> {
    prop::collection::vec(scalar(), n * n.saturating_sub(1) / 2).prop_map(move |upper| {
        let mut m = SquareMatrix::zeros(n);
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let x = it.next().unwrap();
                m.set(j, i, x.neg());
                m.set(i, j, x);
            }
        }
        m
    })
}

pub fn square(n: usize) -> impl Strategy<Value = SquareMatrix<Scalar>> {
    prop::collection::vec(scalar(), n * n).prop_map(move |v| {
        let mut it = v.into_iter();
        SquareMatrix::from_fn(n, |_, _| it.next().unwrap())
    })
}

/// Sign of a permutation of `0..n`, by counting cycles.
pub fn perm_sign(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Pfaffian by expansion along the first index, straight from the definition.
pub fn oracle_pf(m: &SquareMatrix<Scalar>, idx: &[usize]) -> Scalar {
    if idx.is_empty() {
        return Scalar::one();
    }
    if idx.len() % 2 == 1 {
        return Scalar::zero();
    }
    let mut total = Scalar::zero();
    for j in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(k, _)| k + 1 != j).map(|(_, &v)| v).collect();
        let term = m.get(idx[0], idx[j]).mul(&oracle_pf(m, &rest));
        total = if j % 2 == 1 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// Determinant by the Leibniz sum over all permutations.
pub fn leibniz_det(m: &SquareMatrix<Scalar>) -> Scalar {
    let n = m.dim();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Scalar::zero();
    loop {
        let mut term = Scalar::from_int(perm_sign(&perm) as i64);
        for (i, &p) in perm.iter().enumerate() {
            term = term.mul(m.get(i, p));
        }
        total = total.add(&term);
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
