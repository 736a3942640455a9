//! Skew forms and the Pfaffian engines.
//!
//! Three engines compute `f[α]`:
//!
//! * [`pf_matchings`] sums signed products over all canonical perfect
//!   matchings. It is the reference oracle.
//! * [`pf_recursive`] expands along the first letter, canonicalizing every
//!   subword by sorting so that subproblems are memoized on letter sets.
//! * [`pf_elimination`] reduces a skew rational matrix by symmetric pivoting,
//!   `O(n³)` field operations.
//!
//! The first two work over any [`Ring`]; elimination needs division.

use std::collections::HashMap;

use crate::algebra::{MultiPoly, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::word::{first_repeat, sign_of, Letter, Word};

/// Source of the entries `f[xy]`. Implementations must satisfy
/// `entry(x, x) = 0` and `entry(y, x) = -entry(x, y)`.
pub trait SkewForm {
    type Value: Ring;

    fn entry(&self, x: Letter, y: Letter) -> Self::Value;

    /// Rejects letters outside the form's index set.
    fn check_letter(&self, _x: Letter) -> Result<()> {
        Ok(())
    }
}

impl<F: SkewForm + ?Sized> SkewForm for &F {
    type Value = F::Value;

    fn entry(&self, x: Letter, y: Letter) -> Self::Value {
        (**self).entry(x, y)
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        (**self).check_letter(x)
    }
}

/// A form backed by a skew-symmetric matrix; letter `i` is row/column `i`.
#[derive(Clone, Debug)]
pub struct MatrixForm<R> {
    m: SquareMatrix<R>,
}

impl<R: Ring> MatrixForm<R> {
    pub fn new(m: SquareMatrix<R>) -> Result<Self> {
        m.check_skew()?;
        Ok(MatrixForm { m })
    }

    pub fn matrix(&self) -> &SquareMatrix<R> {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// The word `0 1 … n-1` covering the whole matrix.
    pub fn full_word(&self) -> Word {
        Word::from_ids(0..self.m.dim() as u32)
    }
}

impl<R: Ring> SkewForm for MatrixForm<R> {
    type Value = R;

    fn entry(&self, x: Letter, y: Letter) -> R {
        self.m.get(x.0 as usize, y.0 as usize).clone()
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        if (x.0 as usize) < self.m.dim() {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange { letter: x, dim: self.m.dim() })
        }
    }
}

/// The generic form `f[xy] = g(x,y)` over independent indeterminates.
/// Pfaffian identities that vanish here hold for every skew form.
#[derive(Clone, Copy, Debug, Default)]
pub struct GenericForm;

impl SkewForm for GenericForm {
    type Value = MultiPoly;

    fn entry(&self, x: Letter, y: Letter) -> MultiPoly {
        MultiPoly::var(x.0, y.0)
    }
}

/// A form given by a rule evaluated only on pairs `x < y`; the diagonal and
/// the lower triangle follow from skew symmetry.
pub struct RuleForm<R, F> {
    rule: F,
    dim: Option<usize>,
    _ring: std::marker::PhantomData<fn() -> R>,
}

impl<R: Ring, F: Fn(Letter, Letter) -> R> RuleForm<R, F> {
    pub fn new(rule: F) -> Self {
        RuleForm { rule, dim: None, _ring: std::marker::PhantomData }
    }

    /// Restricts the index set to letters `< dim`.
    pub fn with_dim(rule: F, dim: usize) -> Self {
        RuleForm { rule, dim: Some(dim), _ring: std::marker::PhantomData }
    }
}

impl<R: Ring, F: Fn(Letter, Letter) -> R> SkewForm for RuleForm<R, F> {
    type Value = R;

    fn entry(&self, x: Letter, y: Letter) -> R {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => (self.rule)(x, y),
            std::cmp::Ordering::Greater => (self.rule)(y, x).neg(),
            std::cmp::Ordering::Equal => R::zero(),
        }
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        match self.dim {
            Some(dim) if x.0 as usize >= dim => Err(Error::LetterOutOfRange { letter: x, dim }),
            _ => Ok(()),
        }
    }
}

/// Restriction of a form to the letters of `alpha`, as a skew matrix.
pub fn skew_matrix<F: SkewForm>(form: &F, alpha: &Word) -> Result<SquareMatrix<F::Value>> {
    check_letters(form, alpha)?;
    let ls = alpha.letters();
    Ok(SquareMatrix::from_fn(ls.len(), |i, j| form.entry(ls[i], ls[j])))
}

fn check_letters<F: SkewForm>(form: &F, alpha: &Word) -> Result<()> {
    alpha.letters().iter().try_for_each(|&x| form.check_letter(x))
}

fn check_even(alpha: &Word) -> Result<()> {
    if alpha.len() % 2 == 1 {
        Err(Error::OddLength(alpha.len()))
    } else {
        Ok(())
    }
}

/// `f[α]` as the signed sum over canonical perfect matchings.
pub fn pf_matchings<F: SkewForm>(form: &F, alpha: &Word) -> Result<F::Value> {
    check_even(alpha)?;
    check_letters(form, alpha)?;
    if first_repeat(alpha.letters()).is_some() {
        return Ok(F::Value::zero());
    }
    let mut total = F::Value::zero();
    crate::word::enumerate_matchings(alpha)?.for_each_raw(|pairs, sorted, sign| {
        let mut term = F::Value::one();
        for &(a, b) in pairs {
            let e = form.entry(sorted[a], sorted[b]);
            if e.is_zero() {
                return;
            }
            term = term.mul(&e);
        }
        total = if sign > 0 { total.add(&term) } else { total.sub(&term) };
    });
    Ok(total)
}

/// `f[α]` by the cyclic expansion
/// `f[x₁…x₂ₙ] = Σⱼ f[x₁xⱼ] f[xⱼ₊₁…x₂ₙ x₂…xⱼ₋₁]`.
///
/// Each subword is replaced by its sorted form times the sign of that sort,
/// and results are memoized on the sorted letter set (a bitmask over the
/// sorted letters of `α`), so at most `2^|α|` states are visited.
pub fn pf_recursive<F: SkewForm>(form: &F, alpha: &Word) -> Result<F::Value> {
    check_even(alpha)?;
    check_letters(form, alpha)?;
    if first_repeat(alpha.letters()).is_some() {
        return Ok(F::Value::zero());
    }
    if alpha.len() > 64 {
        return Err(Error::WordTooLong(alpha.len()));
    }
    let mut sorted = alpha.letters().to_vec();
    sorted.sort_unstable();
    let outer = sign_of(alpha.letters(), &sorted);
    let mut engine = Recursive { form, sorted: &sorted, memo: HashMap::new() };
    let full = if sorted.len() == 64 { u64::MAX } else { (1u64 << sorted.len()) - 1 };
    Ok(engine.eval(full).signed(outer))
}

struct Recursive<'a, F: SkewForm> {
    form: &'a F,
    sorted: &'a [Letter],
    memo: HashMap<u64, F::Value>,
}

impl<F: SkewForm> Recursive<'_, F> {
    fn eval(&mut self, mask: u64) -> F::Value {
        if mask == 0 {
            return F::Value::one();
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let word: Vec<usize> = (0..self.sorted.len()).filter(|&k| mask >> k & 1 == 1).collect();
        let first = word[0];
        let mut total = F::Value::zero();
        for j in 1..word.len() {
            let e = self.form.entry(self.sorted[first], self.sorted[word[j]]);
            if e.is_zero() {
                continue;
            }
            // x_{j+1} … x_{2n} x_2 … x_{j-1}, then sort it
            let rotated: Vec<Letter> =
                word[j + 1..].iter().chain(&word[1..j]).map(|&k| self.sorted[k]).collect();
            let mut canon = rotated.clone();
            canon.sort_unstable();
            let s = sign_of(&rotated, &canon);
            let sub = self.eval(mask & !(1 << first) & !(1 << word[j]));
            if sub.is_zero() {
                continue;
            }
            let term = e.mul(&sub);
            total = if s > 0 { total.add(&term) } else { total.sub(&term) };
        }
        self.memo.insert(mask, total.clone());
        total
    }
}

/// Pfaffian of a skew rational matrix by symmetric elimination.
///
/// At each step a nonzero entry is brought to position `(k, k+1)` by a
/// simultaneous row/column swap (negating the Pfaffian), then congruence
/// operations clear rows `k` and `k+1`, leaving a `2×2` block whose entry
/// multiplies into the result.
pub fn pf_elimination(m: &SquareMatrix<Scalar>) -> Result<Scalar> {
    m.check_skew()?;
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut a: Vec<Vec<Scalar>> = m.rows().map(|r| r.to_vec()).collect();
    let mut pf = Scalar::one();
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&p| !a[k][p].is_zero()) else {
            return Ok(Scalar::zero());
        };
        if p != k + 1 {
            swap_symmetric(&mut a, k + 1, p);
            pf = pf.neg();
        }
        let pivot = a[k][k + 1].clone();
        pf = pf.mul(&pivot);
        let inv = Scalar::one() / &pivot;
        // Clear a[k][i] with column k+1, then a[k+1][i] with column k.
        for i in k + 2..n {
            let c = a[k][i].mul(&inv);
            if !c.is_zero() {
                add_congruent(&mut a, i, k + 1, &c.neg(), k);
            }
            let d = a[k + 1][i].mul(&inv);
            if !d.is_zero() {
                add_congruent(&mut a, i, k, &d, k);
            }
        }
    }
    Ok(pf)
}

fn swap_symmetric(a: &mut [Vec<Scalar>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i += c·row_j and col_i += c·col_j, restricted to indices `>= from`.
/// Preserves skew symmetry and the Pfaffian.
fn add_congruent(a: &mut [Vec<Scalar>], i: usize, j: usize, c: &Scalar, from: usize) {
    let n = a.len();
    for t in from..n {
        let v = a[j][t].mul(c);
        a[i][t] = a[i][t].add(&v);
    }
    for t in from..n {
        let v = a[t][j].mul(c);
        a[t][i] = a[t][i].add(&v);
    }
}

/// Determinant over any ring; rationals use fraction-free elimination, other
/// rings a memoized cofactor expansion.
pub fn det<R: Ring>(m: &SquareMatrix<R>) -> R {
    m.det()
}
