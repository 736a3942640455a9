//! Word-level Pfaffian identities as residuals (left side minus right side).
//!
//! Every function here returns exactly zero for every skew form. Evaluated on
//! [`GenericForm`](crate::pfaffian::GenericForm) a zero residual is the zero
//! polynomial, which proves the identity for the given word lengths.

use num_bigint::BigInt;

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::pfaffian::{pf_elimination, pf_recursive, skew_matrix, SkewForm};
use crate::word::{enumerate_matchings, first_repeat, remove_letters, sign, sign_of, Letter, Word};

fn pf<F: SkewForm>(form: &F, w: &Word) -> Result<F::Value> {
    pf_recursive(form, w)
}

fn require_distinct(w: &Word) -> Result<()> {
    match first_repeat(w.letters()) {
        Some(x) => Err(Error::RepeatedLetter(x)),
        None => Ok(()),
    }
}

fn require_even(name: &str, w: &Word) -> Result<()> {
    if w.len() % 2 == 1 {
        Err(Error::shape(format!("|{name}| = {} must be even", w.len())))
    } else {
        Ok(())
    }
}

fn require_member(x: Letter, w: &Word) -> Result<()> {
    if w.contains(x) {
        Ok(())
    } else {
        Err(Error::NotInWord(x))
    }
}

fn pair(x: Letter, y: Letter) -> Word {
    Word::new(vec![x, y])
}

/// Tanner: `f[α]f[αβ] = Σ_y s(β,xy) f[αxy] f[αβ\xy]` for any `x ∈ β`.
pub fn tanner_residual<F: SkewForm>(form: &F, alpha: &Word, beta: &Word, x: Letter) -> Result<F::Value> {
    require_member(x, beta)?;
    let ab = alpha.concat(beta);
    require_distinct(&ab)?;
    require_even("α", alpha)?;
    require_even("β", beta)?;
    let lhs = pf(form, alpha)?.mul(&pf(form, &ab)?);
    let mut rhs = F::Value::zero();
    for &y in beta.letters() {
        let s = sign(beta, &pair(x, y));
        if s == 0 {
            continue;
        }
        let left = pf(form, &alpha.concat(&pair(x, y)))?;
        let right = pf(form, &remove_letters(&ab, &[x, y]))?;
        rhs = rhs.add(&left.mul(&right).signed(s));
    }
    Ok(lhs.sub(&rhs))
}

/// Expansion along an arbitrary letter: `f[β] = Σ_y s(β,xy) f[xy] f[β\xy]`.
pub fn expansion_residual<F: SkewForm>(form: &F, beta: &Word, x: Letter) -> Result<F::Value> {
    require_member(x, beta)?;
    require_even("β", beta)?;
    let mut rhs = F::Value::zero();
    for &y in beta.letters() {
        let s = sign(beta, &pair(x, y));
        if s == 0 {
            continue;
        }
        let term = form.entry(x, y).mul(&pf(form, &remove_letters(beta, &[x, y]))?);
        rhs = rhs.add(&term.signed(s));
    }
    Ok(pf(form, beta)?.sub(&rhs))
}

/// Expansion averaged over every choice of `x`:
/// `f[β] = (1/|β|) Σ_x Σ_y s(β,xy) f[xy] f[β\xy]`. Needs a field.
pub fn averaged_expansion_residual<F>(form: &F, beta: &Word) -> Result<F::Value>
where
    F: SkewForm,
    F::Value: Field,
{
    if beta.is_empty() {
        return Err(Error::shape("averaged expansion needs a nonempty β"));
    }
    require_even("β", beta)?;
    let mut total = F::Value::zero();
    for &x in beta.letters() {
        for &y in beta.letters() {
            let s = sign(beta, &pair(x, y));
            if s == 0 {
                continue;
            }
            let term = form.entry(x, y).mul(&pf(form, &remove_letters(beta, &[x, y]))?);
            total = total.add(&term.signed(s));
        }
    }
    let len = F::Value::from_int(beta.len() as i64);
    Ok(pf(form, beta)?.sub(&total.div(&len)?))
}

fn check_pair_shape(alpha: &Word, beta: &Word) -> Result<u32> {
    if beta.is_empty() {
        return Err(Error::shape("β must be nonempty"));
    }
    require_even("α", alpha)?;
    require_even("β", beta)?;
    require_distinct(&alpha.concat(beta))?;
    Ok((beta.len() / 2) as u32)
}

/// Law of extensible minors:
/// `f[α]^(n-1) f[αβ] = Σ_{μ∈M(β)} s(β,μ) Π f[α xᵢyᵢ]` with `|β| = 2n`.
pub fn minor_product_residual<F: SkewForm>(form: &F, alpha: &Word, beta: &Word) -> Result<F::Value> {
    let n = check_pair_shape(alpha, beta)?;
    let lhs = pf(form, alpha)?.pow(n - 1).mul(&pf(form, &alpha.concat(beta))?);
    let mut rhs = F::Value::zero();
    for m in enumerate_matchings(beta)? {
        let mut term = F::Value::one();
        for &(x, y) in &m.pairs {
            term = term.mul(&pf(form, &alpha.concat(&pair(x, y)))?);
            if term.is_zero() {
                break;
            }
        }
        rhs = rhs.add(&term.signed(m.sign));
    }
    Ok(lhs.sub(&rhs))
}

/// Law of complementaries:
/// `f[α] f[αβ]^(n-1) = Σ_{μ∈M(β)} s(β,μ) Π s(β,xᵢyᵢ) f[αβ \ xᵢyᵢ]`.
///
/// The factors `s(β,xᵢyᵢ)` make each term independent of how the pairs are
/// oriented. They are all `+1` when `β` is in increasing order.
pub fn complementary_residual<F: SkewForm>(form: &F, alpha: &Word, beta: &Word) -> Result<F::Value> {
    let n = check_pair_shape(alpha, beta)?;
    let ab = alpha.concat(beta);
    let lhs = pf(form, alpha)?.mul(&pf(form, &ab)?.pow(n - 1));
    let mut rhs = F::Value::zero();
    for m in enumerate_matchings(beta)? {
        let mut term = F::Value::one();
        for &(x, y) in &m.pairs {
            term = term.mul(&pf(form, &remove_letters(&ab, &[x, y]))?.signed(sign_of(beta.letters(), &[x, y])));
            if term.is_zero() {
                break;
            }
        }
        rhs = rhs.add(&term.signed(m.sign));
    }
    Ok(lhs.sub(&rhs))
}

fn check_wenzel_shape(alpha: &Word, beta: &Word, gamma: &Word) -> Result<()> {
    require_distinct(&alpha.concat(beta).concat(gamma))?;
    if (alpha.len() + beta.len()) % 2 == 1 || (alpha.len() + gamma.len()) % 2 == 1 {
        return Err(Error::shape("|αβ| and |αγ| must both be even"));
    }
    Ok(())
}

/// Wenzel's identity for two words sharing `α`:
///
/// `f[αβ]f[αγ] = Σ_{y∈β} s(β,xy) f[αβ\xy] f[αγxy]
///             + Σ_{y∈γ} s(β,x)s(γ,y) f[αy β\x] f[αx γ\y]`.
pub fn wenzel_residual<F: SkewForm>(
    form: &F,
    alpha: &Word,
    beta: &Word,
    gamma: &Word,
    x: Letter,
) -> Result<F::Value> {
    require_member(x, beta)?;
    check_wenzel_shape(alpha, beta, gamma)?;
    let ab = alpha.concat(beta);
    let ag = alpha.concat(gamma);
    let lhs = pf(form, &ab)?.mul(&pf(form, &ag)?);

    let mut rhs = F::Value::zero();
    for &y in beta.letters() {
        let s = sign(beta, &pair(x, y));
        if s == 0 {
            continue;
        }
        let left = pf(form, &remove_letters(&ab, &[x, y]))?;
        let right = pf(form, &ag.concat(&pair(x, y)))?;
        rhs = rhs.add(&left.mul(&right).signed(s));
    }
    let sx = sign_of(beta.letters(), &[x]);
    let beta_x = remove_letters(beta, &[x]);
    for &y in gamma.letters() {
        let s = sx * sign_of(gamma.letters(), &[y]);
        if s == 0 {
            continue;
        }
        let left = pf(form, &alpha.with(y).concat(&beta_x))?;
        let right = pf(form, &alpha.with(x).concat(&remove_letters(gamma, &[y])))?;
        rhs = rhs.add(&left.mul(&right).signed(s));
    }
    Ok(lhs.sub(&rhs))
}

/// A base form extended by a cancelling word: fresh letters `x'ⱼ` with
/// `f[xⱼx'ⱼ] = 1` and every other entry involving a fresh letter zero.
pub struct CancellingForm<F> {
    base: F,
    gamma: Vec<Letter>,
    fresh: Vec<Letter>,
}

impl<F: SkewForm> CancellingForm<F> {
    /// `fresh[j]` becomes the partner of `gamma[j]`. Fresh letters must be
    /// distinct and must not occur in `used`.
    pub fn new(base: F, gamma: &Word, fresh: &Word, used: &Word) -> Result<Self> {
        if gamma.len() != fresh.len() {
            return Err(Error::shape("one fresh letter is needed per letter of γ"));
        }
        require_distinct(fresh)?;
        if let Some(&c) = fresh.letters().iter().find(|l| used.contains(**l) || gamma.contains(**l)) {
            return Err(Error::Domain(format!("fresh letter {c} collides with a letter in use")));
        }
        Ok(CancellingForm { base, gamma: gamma.letters().to_vec(), fresh: fresh.letters().to_vec() })
    }

    /// The cancelling word `γ' = x'ₖ … x'₁`.
    pub fn cancelling_word(&self) -> Word {
        self.fresh.iter().rev().copied().collect()
    }

    fn fresh_index(&self, l: Letter) -> Option<usize> {
        self.fresh.iter().position(|&f| f == l)
    }
}

impl<F: SkewForm> SkewForm for CancellingForm<F> {
    type Value = F::Value;

    fn entry(&self, x: Letter, y: Letter) -> F::Value {
        match (self.fresh_index(x), self.fresh_index(y)) {
            (None, None) => self.base.entry(x, y),
            (None, Some(j)) if self.gamma[j] == x => F::Value::one(),
            (Some(j), None) if self.gamma[j] == y => F::Value::one().neg(),
            _ => F::Value::zero(),
        }
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        match self.fresh_index(x) {
            Some(_) => Ok(()),
            None => self.base.check_letter(x),
        }
    }
}

/// Fresh letters allocated just above the largest letter of `used`.
pub fn fresh_letters(used: &Word, count: usize) -> Word {
    let start = used.max_letter().map_or(0, |l| l.0 + 1);
    Word::from_ids(start..start + count as u32)
}

/// `f[αβ] - f[αγγ'β]` over the form extended by a cancelling word for `γ`.
pub fn cancelling_extension_check<F: SkewForm>(
    form: &F,
    alpha: &Word,
    beta: &Word,
    gamma: &Word,
) -> Result<F::Value> {
    check_wenzel_shape(alpha, beta, gamma)?;
    let used = alpha.concat(beta).concat(gamma);
    let fresh = fresh_letters(&used, gamma.len());
    let ext = CancellingForm::new(form, gamma, &fresh, &used)?;
    let long = alpha.concat(gamma).concat(&ext.cancelling_word()).concat(beta);
    Ok(pf(&ext, &alpha.concat(beta))?.sub(&pf(&ext, &long)?))
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        BigInt::from(0)
    } else {
        num_integer::binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// All `size`-element subsets of `pool`, in lexicographic order.
fn subsets(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], size: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == size {
            out.push(acc.clone());
            return;
        }
        let need = size - acc.len();
        for i in 0..pool.len() {
            if pool.len() - i < need {
                break;
            }
            acc.push(pool[i]);
            go(&pool[i + 1..], size, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, size, &mut Vec::new(), &mut out);
    out
}

/// Brill: `C(n-1,k) f[α] = Σ s(α, α_S) f[α_S] f[α \ α_S]`, summed over the
/// position sets `S`, `|S| = 2k`, that leave out the first letter of `α`.
pub fn brill_residual<F: SkewForm>(form: &F, alpha: &Word, k: u32) -> Result<F::Value> {
    require_even("α", alpha)?;
    require_distinct(alpha)?;
    let n = (alpha.len() / 2) as u32;
    if k > n {
        return Err(Error::shape(format!("k = {k} exceeds n = {n}")));
    }
    let coeff = if n == 0 { BigInt::from(1) } else { binomial(u64::from(n - 1), u64::from(k)) };
    let lhs = F::Value::from_bigint(&coeff).mul(&pf(form, alpha)?);
    let positions: Vec<usize> = (1..alpha.len()).collect();
    let letters = alpha.letters();
    let mut rhs = F::Value::zero();
    for set in subsets(&positions, 2 * k as usize) {
        let sub: Word = set.iter().map(|&p| letters[p]).collect();
        let s = sign(alpha, &sub);
        let a = pf(form, &sub)?;
        if a.is_zero() {
            continue;
        }
        let b = pf(form, &remove_letters(alpha, sub.letters()))?;
        rhs = rhs.add(&a.mul(&b).signed(s));
    }
    Ok(lhs.sub(&rhs))
}

/// Cayley: the skew determinant on `α` is `f[α]²`.
pub fn cayley_square_residual<F: SkewForm>(form: &F, alpha: &Word) -> Result<F::Value> {
    require_even("α", alpha)?;
    require_distinct(alpha)?;
    let d = skew_matrix(form, alpha)?.det();
    let p = pf(form, alpha)?;
    Ok(d.sub(&p.mul(&p)))
}

/// The bordered skew matrix with rows `x·rest` and columns `y·rest`.
pub fn bordered_matrix<F: SkewForm>(form: &F, x: Letter, y: Letter, rest: &Word) -> SquareMatrix<F::Value> {
    let rows: Vec<Letter> = std::iter::once(x).chain(rest.letters().iter().copied()).collect();
    let cols: Vec<Letter> = std::iter::once(y).chain(rest.letters().iter().copied()).collect();
    SquareMatrix::from_fn(rows.len(), |i, j| form.entry(rows[i], cols[j]))
}

/// Cayley's bordered determinant: with `n = |rest| + 1` the bordered matrix
/// has determinant `f[x·rest] f[y·rest]` for even `n` and
/// `f[xy·rest] f[rest]` for odd `n`.
pub fn cayley_bordered_residual<F: SkewForm>(form: &F, x: Letter, y: Letter, rest: &Word) -> Result<F::Value> {
    require_distinct(rest)?;
    if rest.contains(x) || rest.contains(y) {
        return Err(Error::shape("x and y must not occur in the rest word"));
    }
    for l in [x, y].iter().chain(rest.letters()) {
        form.check_letter(*l)?;
    }
    let n = rest.len() + 1;
    let d = bordered_matrix(form, x, y, rest).det();
    let rhs = if n % 2 == 0 {
        let xr = Word::new(vec![x]).concat(rest);
        let yr = Word::new(vec![y]).concat(rest);
        pf(form, &xr)?.mul(&pf(form, &yr)?)
    } else {
        pf(form, &pair(x, y).concat(rest))?.mul(&pf(form, rest)?)
    };
    Ok(d.sub(&rhs))
}

/// Solves `Σ_j f[ij] z_j = b_i` for a skew matrix of even dimension by the
/// Pfaffian Cramer rule: `z_j` is the Pfaffian with letter `j` replaced by a
/// fresh letter `0` carrying `f[i0] = b_i`, divided by `f[1…2n]`.
pub fn solve_skew_cramer(m: &SquareMatrix<Scalar>, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
    m.check_skew()?;
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if rhs.len() != n {
        return Err(Error::shape(format!("right-hand side of length {} for dimension {n}", rhs.len())));
    }
    let denom = pf_elimination(m)?;
    if denom.is_zero() {
        return Err(Error::Singular);
    }
    (0..n)
        .map(|j| {
            let mj = SquareMatrix::from_fn(n, |a, b| match (a == j, b == j) {
                (false, false) => m.get(a, b).clone(),
                (false, true) => rhs[a].clone(),
                (true, false) => rhs[b].neg(),
                (true, true) => Scalar::zero(),
            });
            pf_elimination(&mj)?.div(&denom)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;
    use crate::pfaffian::{pf_matchings, GenericForm, MatrixForm};
    use crate::random::{random_skew_matrix, rng_for};

    fn w(ids: &[u32]) -> Word {
        Word::from_ids(ids.iter().copied())
    }

    fn numeric(seed: u64, dim: usize) -> MatrixForm<Scalar> {
        MatrixForm::new(random_skew_matrix(&mut rng_for(seed, 0), dim)).unwrap()
    }

    #[test]
    fn tanner_small_cases() {
        let f = numeric(1, 8);
        assert!(tanner_residual(&f, &w(&[0, 1]), &w(&[2, 3]), Letter(3)).unwrap().is_zero());
        assert!(tanner_residual(&GenericForm, &Word::empty(), &w(&[0, 1, 2, 3]), Letter(0)).unwrap().is_zero());
        assert!(tanner_residual(&GenericForm, &w(&[4, 5]), &w(&[0, 1, 2, 3]), Letter(2)).unwrap().is_zero());
    }

    #[test]
    fn tanner_any_x() {
        let f = numeric(2, 8);
        let beta = w(&[5, 2, 7, 0]);
        for &x in beta.letters() {
            assert!(tanner_residual(&f, &w(&[3, 6]), &beta, x).unwrap().is_zero());
        }
    }

    #[test]
    fn tanner_errors() {
        let f = numeric(3, 8);
        assert_eq!(tanner_residual(&f, &w(&[0, 1]), &w(&[2, 3]), Letter(5)), Err(Error::NotInWord(Letter(5))));
        assert!(matches!(
            tanner_residual(&f, &w(&[0]), &w(&[2, 3, 4]), Letter(2)),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            tanner_residual(&f, &w(&[0, 1]), &w(&[1, 3]), Letter(3)),
            Err(Error::RepeatedLetter(_))
        ));
    }

    #[test]
    fn expansion_cases() {
        let f = numeric(4, 6);
        assert!(expansion_residual(&f, &w(&[4, 1]), Letter(4)).unwrap().is_zero());
        assert!(expansion_residual(&GenericForm, &w(&[0, 1, 2, 3]), Letter(0)).unwrap().is_zero());
        assert!(expansion_residual(&f, &w(&[3, 0, 5, 1, 4, 2]), Letter(5)).unwrap().is_zero());
    }

    #[test]
    fn averaged_expansion_cases() {
        let f = numeric(5, 6);
        assert!(averaged_expansion_residual(&f, &w(&[1, 2])).unwrap().is_zero());
        assert!(averaged_expansion_residual(&f, &w(&[0, 3, 1, 2])).unwrap().is_zero());
        assert!(averaged_expansion_residual(&f, &w(&[0, 3, 3, 2])).unwrap().is_zero());
        assert!(averaged_expansion_residual(&f, &Word::empty()).is_err());
    }

    #[test]
    fn minor_product_and_complementary() {
        let f = numeric(6, 10);
        assert!(minor_product_residual(&f, &w(&[0, 1]), &w(&[2, 3])).unwrap().is_zero());
        assert!(minor_product_residual(&GenericForm, &w(&[4, 5]), &w(&[0, 1, 2, 3])).unwrap().is_zero());
        assert!(minor_product_residual(&f, &w(&[9, 1]), &w(&[2, 8, 3, 0, 6, 5])).unwrap().is_zero());
        assert!(complementary_residual(&f, &w(&[0, 1]), &w(&[2, 3])).unwrap().is_zero());
        assert!(complementary_residual(&GenericForm, &Word::empty(), &w(&[0, 1, 2, 3])).unwrap().is_zero());
        assert!(complementary_residual(&f, &w(&[7, 4]), &w(&[1, 9, 2, 3])).unwrap().is_zero());
        assert!(complementary_residual(&GenericForm, &w(&[4, 5]), &w(&[0, 1, 2, 3])).unwrap().is_zero());
        assert!(complementary_residual(&GenericForm, &Word::empty(), &w(&[0, 1, 2, 3, 4, 5])).unwrap().is_zero());
        assert!(minor_product_residual(&f, &w(&[0, 1]), &Word::empty()).is_err());
    }

    #[test]
    fn wenzel_cases() {
        let f = numeric(7, 10);
        // γ = ε reduces to Tanner
        assert!(wenzel_residual(&f, &w(&[0, 1]), &w(&[2, 3, 4, 5]), &Word::empty(), Letter(3))
            .unwrap()
            .is_zero());
        assert!(wenzel_residual(&GenericForm, &w(&[0]), &w(&[1, 2, 3]), &w(&[4, 5, 6]), Letter(1))
            .unwrap()
            .is_zero());
        assert!(wenzel_residual(&f, &w(&[8, 2, 5]), &w(&[0, 9, 1]), &w(&[4, 7, 3]), Letter(1))
            .unwrap()
            .is_zero());
        assert!(wenzel_residual(&f, &w(&[0]), &w(&[1, 2]), &w(&[4, 5, 6]), Letter(1)).is_err());
    }

    #[test]
    fn wenzel_matches_expanded_example() {
        // α = a odd, β = xyz, γ = uvw written out term by term
        let f = GenericForm;
        let (a, x, y, z, u, v, ww) = (0u32, 1, 2, 3, 4, 5, 6);
        let p = |ids: &[u32]| pf_matchings(&f, &w(ids)).unwrap();
        let lhs = p(&[a, x, y, z]).mul(&p(&[a, u, v, ww]));
        let rhs = p(&[a, z])
            .mul(&p(&[a, u, v, ww, x, y]))
            .sub(&p(&[a, y]).mul(&p(&[a, u, v, ww, x, z])))
            .add(&p(&[a, u, y, z]).mul(&p(&[a, x, v, ww])))
            .sub(&p(&[a, v, y, z]).mul(&p(&[a, x, u, ww])))
            .add(&p(&[a, ww, y, z]).mul(&p(&[a, x, u, v])));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancelling_cases() {
        let f = numeric(8, 8);
        assert!(cancelling_extension_check(&f, &w(&[0]), &w(&[1, 2, 3]), &w(&[4])).unwrap().is_zero());
        assert!(cancelling_extension_check(&f, &w(&[0, 1]), &w(&[2, 3]), &Word::empty()).unwrap().is_zero());
        assert!(cancelling_extension_check(&GenericForm, &w(&[0]), &w(&[1, 2, 3]), &w(&[4, 5, 6]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn cancelling_form_rejects_collisions() {
        let used = w(&[0, 1, 2]);
        assert!(CancellingForm::new(GenericForm, &w(&[2]), &w(&[1]), &used).is_err());
        assert!(CancellingForm::new(GenericForm, &w(&[2]), &w(&[2]), &used).is_err());
        assert!(CancellingForm::new(GenericForm, &w(&[1, 2]), &w(&[7, 7]), &used).is_err());
        let ext = CancellingForm::new(GenericForm, &w(&[1, 2]), &w(&[7, 8]), &used).unwrap();
        assert_eq!(ext.cancelling_word(), w(&[8, 7]));
        assert_eq!(ext.entry(Letter(1), Letter(7)), MultiPoly::one());
        assert_eq!(ext.entry(Letter(7), Letter(1)), MultiPoly::one().neg());
        assert!(ext.entry(Letter(2), Letter(7)).is_zero());
        assert!(ext.entry(Letter(7), Letter(8)).is_zero());
    }

    #[test]
    fn cancelling_composed_with_tanner_gives_wenzel() {
        let f = numeric(9, 8);
        let (alpha, beta, gamma) = (w(&[0]), w(&[1, 2, 3]), w(&[4, 5, 6]));
        let x = Letter(2);
        let used = alpha.concat(&beta).concat(&gamma);
        let ext = CancellingForm::new(&f, &gamma, &fresh_letters(&used, 3), &used).unwrap();
        let ag = alpha.concat(&gamma);
        let gb = ext.cancelling_word().concat(&beta);
        // (5.3): Tanner on the extended word, whose left side equals f[αβ] f[αγ]
        assert!(tanner_residual(&ext, &ag, &gb, x).unwrap().is_zero());
        let tanner_lhs = pf(&ext, &ag).unwrap().mul(&pf(&ext, &ag.concat(&gb)).unwrap());
        let wenzel_lhs = pf(&f, &alpha.concat(&beta)).unwrap().mul(&pf(&f, &ag).unwrap());
        assert_eq!(tanner_lhs, wenzel_lhs);
        assert!(wenzel_residual(&f, &alpha, &beta, &gamma, x).unwrap().is_zero());
    }

    #[test]
    fn brill_cases() {
        let f = numeric(10, 6);
        for n in 1..=3u32 {
            let alpha = Word::from_ids(0..2 * n);
            for k in 0..=n {
                assert!(brill_residual(&f, &alpha, k).unwrap().is_zero(), "n={n} k={k}");
            }
        }
        assert!(brill_residual(&GenericForm, &w(&[0, 1, 2, 3]), 1).unwrap().is_zero());
        assert!(brill_residual(&f, &w(&[0, 1]), 2).is_err());
        assert!(brill_residual(&f, &Word::empty(), 0).unwrap().is_zero());
    }

    #[test]
    fn brill_full_range_carries_binomial_n_k() {
        let f = numeric(11, 6);
        let alpha = w(&[3, 0, 5, 1, 4, 2]);
        let n = 3u64;
        let positions: Vec<usize> = (0..6).collect();
        for k in 0..=n {
            let mut total = Scalar::zero();
            for set in subsets(&positions, 2 * k as usize) {
                let sub: Word = set.iter().map(|&p| alpha.letters()[p]).collect();
                let term = pf(&f, &sub).unwrap().mul(&pf(&f, &remove_letters(&alpha, sub.letters())).unwrap());
                total = total.add(&term.signed(sign(&alpha, &sub)));
            }
            let expected = Scalar::from_bigint(&binomial(n, k)).mul(&pf(&f, &alpha).unwrap());
            assert_eq!(total, expected, "k={k}");
        }
    }

    #[test]
    fn cayley_square_cases() {
        let f = numeric(12, 6);
        assert!(cayley_square_residual(&f, &w(&[2, 5])).unwrap().is_zero());
        let fixture = MatrixForm::new(crate::pfaffian::tests::fixture()).unwrap();
        assert!(cayley_square_residual(&fixture, &w(&[0, 1, 2, 3])).unwrap().is_zero());
        assert!(cayley_square_residual(&GenericForm, &w(&[0, 1, 2, 3, 4, 5])).unwrap().is_zero());
    }

    #[test]
    fn cayley_bordered_cases() {
        let f = numeric(13, 8);
        // n = 2, rest = z: det [[f[xy], f[xz]], [f[zy], 0]] = f[xz] f[yz]
        let (x, y, z) = (Letter(0), Letter(1), Letter(2));
        let m = bordered_matrix(&f, x, y, &Word::new(vec![z]));
        assert_eq!(m.det(), f.entry(x, z).mul(&f.entry(y, z)));
        assert!(cayley_bordered_residual(&f, x, y, &Word::new(vec![z])).unwrap().is_zero());
        // x = y, n even: the square of f[x·rest]
        let rest = w(&[3, 5, 6]);
        assert!(cayley_bordered_residual(&f, Letter(7), Letter(7), &rest).unwrap().is_zero());
        assert!(cayley_square_residual(&f, &w(&[7, 3, 5, 6])).unwrap().is_zero());
        assert!(cayley_bordered_residual(&GenericForm, x, y, &w(&[2, 3])).unwrap().is_zero());
        assert!(cayley_bordered_residual(&f, x, y, &w(&[4, 0])).is_err());
    }

    #[test]
    fn cramer_2x2() {
        let m = SquareMatrix::from_fn(2, |i, j| Scalar::from_int(match (i, j) {
            (0, 1) => 1,
            (1, 0) => -1,
            _ => 0,
        }));
        let b = vec![Scalar::from_int(5), Scalar::new(3.into(), 7.into())];
        let z = solve_skew_cramer(&m, &b).unwrap();
        assert_eq!(z, vec![b[1].neg(), b[0].clone()]);
        assert_eq!(m.mul_vec(&z).unwrap(), b);
    }

    #[test]
    fn cramer_zero_rhs_and_singular() {
        let m = crate::pfaffian::tests::fixture();
        let z = solve_skew_cramer(&m, &vec![Scalar::zero(); 4]).unwrap();
        assert!(z.iter().all(|v| v.is_zero()));
        let singular = SquareMatrix::<Scalar>::zeros(4);
        assert_eq!(solve_skew_cramer(&singular, &vec![Scalar::one(); 4]), Err(Error::Singular));
    }
}
