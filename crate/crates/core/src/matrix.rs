use std::fmt;

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};

/// Dense square matrix over any ring, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![R::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::shape(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            data.extend(row);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::shape(format!("cannot multiply {0}x{0} by {1}x{1}", self.n, rhs.n)));
        }
        Ok(Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(R::zero(), |acc, k| acc.add(&self.get(i, k).mul(rhs.get(k, j))))
        }))
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.n {
            return Err(Error::shape(format!("vector of length {} for dimension {}", v.len(), self.n)));
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).fold(R::zero(), |acc, k| acc.add(&self.get(i, k).mul(&v[k]))))
            .collect())
    }

    /// Checks `m[i][j] = -m[j][i]` (and hence a zero diagonal), naming the
    /// first offending pair.
    pub fn check_skew(&self) -> Result<()> {
        for i in 0..self.n {
            for j in i..self.n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if !a.add(b).is_zero() {
                    return Err(Error::NotSkew { i, j, a: a.to_string(), b: b.to_string() });
                }
            }
        }
        Ok(())
    }

    pub fn is_skew(&self) -> bool {
        self.check_skew().is_ok()
    }

    /// The principal submatrix on the given indices, in the given order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn det(&self) -> R {
        R::determinant(self)
    }
}

impl<R: Ring> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Division-free determinant: Laplace expansion along rows, memoized on the
/// set of columns already used. `O(n 2^n)` ring operations; zero entries are
/// skipped, which matters for sparse symbolic matrices.
pub fn det_laplace<R: Ring>(m: &SquareMatrix<R>) -> R {
    let n = m.dim();
    assert!(n < 28, "Laplace expansion limited to dimension < 28, got {n}");
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(R::one());
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = R::zero();
        let mut any = false;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = m.get(row, col);
            if entry.is_zero() {
                continue;
            }
            let Some(minor) = &dp[mask & !(1 << col)] else { continue };
            let higher = (mask >> (col + 1)).count_ones();
            let term = entry.mul(minor);
            acc = if higher % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            any = true;
        }
        if any && !acc.is_zero() {
            dp[mask] = Some(acc);
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(R::zero)
}

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact, so intermediate entries stay minors of the input.
pub fn det_bareiss(m: &SquareMatrix<Scalar>) -> Scalar {
    let n = m.dim();
    if n == 0 {
        return Scalar::one();
    }
    let mut a: Vec<Vec<Scalar>> = m.rows().map(|r| r.to_vec()).collect();
    let mut prev = Scalar::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Scalar::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div(&prev).expect("Bareiss divisor is a nonzero earlier pivot");
            }
            a[i][k] = Scalar::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;

    fn int_matrix(rows: &[&[i64]]) -> SquareMatrix<Scalar> {
        SquareMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect(),
        )
        .unwrap()
    }

    /// Leibniz formula over all permutations.
    fn det_leibniz(m: &SquareMatrix<Scalar>) -> Scalar {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.dim();
        let mut total = Scalar::zero();
        for p in perms(n) {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term = (0..n).fold(Scalar::one(), |acc, i| acc.mul(m.get(i, p[i])));
            total = if inv % 2 == 0 { total.add(&term) } else { total.sub(&term) };
        }
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(SquareMatrix::<Scalar>::identity(3).det(), Scalar::from_int(1));
        assert_eq!(int_matrix(&[&[1, 2], &[3, 4]]).det(), Scalar::from_int(-2));
        assert_eq!(SquareMatrix::<Scalar>::zeros(0).det(), Scalar::from_int(1));
        let skew = int_matrix(&[&[0, 1, 2, 3], &[-1, 0, 4, 5], &[-2, -4, 0, 6], &[-3, -5, -6, 0]]);
        assert_eq!(skew.det(), Scalar::from_int(64));
        assert_eq!(det_laplace(&skew), Scalar::from_int(64));
        assert_eq!(det_leibniz(&skew), Scalar::from_int(64));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = int_matrix(&[&[0, 2, 1], &[3, 0, 4], &[5, 6, 0]]);
        assert_eq!(det_bareiss(&m), det_leibniz(&m));
        let singular = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[7, 8, 9]]);
        assert_eq!(det_bareiss(&singular), Scalar::zero());
    }

    #[test]
    fn bareiss_matches_leibniz_on_grid() {
        // all 3x3 matrices with entries in {-1, 0, 1} sharing a fixed first row
        for code in 0..3i64.pow(6) {
            let mut c = code;
            let mut cell = || {
                let v = c % 3 - 1;
                c /= 3;
                v
            };
            let m = int_matrix(&[&[1, -1, 1], &[cell(), cell(), cell()], &[cell(), cell(), cell()]]);
            assert_eq!(det_bareiss(&m), det_leibniz(&m));
            assert_eq!(det_laplace(&m), det_leibniz(&m));
        }
    }

    #[test]
    fn symbolic_determinant() {
        let m = SquareMatrix::from_fn(2, |i, j| MultiPoly::var(i as u32, j as u32 + 2));
        let expected = MultiPoly::var(0, 2)
            .mul(&MultiPoly::var(1, 3))
            .sub(&MultiPoly::var(0, 3).mul(&MultiPoly::var(1, 2)));
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn skew_check_names_pair() {
        let m = int_matrix(&[&[0, 1], &[2, 0]]);
        match m.check_skew() {
            Err(Error::NotSkew { i: 0, j: 1, a, b }) => {
                assert_eq!((a.as_str(), b.as_str()), ("1", "2"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(int_matrix(&[&[1]]).check_skew().is_err());
        assert!(int_matrix(&[&[0, 3], &[-3, 0]]).is_skew());
    }
}
