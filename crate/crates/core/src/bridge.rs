//! Determinants as Pfaffians of bipartite forms.
//!
//! Rows and columns are two disjoint halves of the index set: row `x` is the
//! letter `2x`, column `x̄` is `2x + 1`, and entries within a half vanish. The
//! minor on rows `α` and columns `β` is then the Pfaffian `f[α β̄ᴿ]`, where
//! `β̄ᴿ` is the reversed, barred column word.
//!
//! The minor-level identities below are written against any [`SkewForm`],
//! reading `f[α,β]` as `f[α β̄ᴿ]`. On a [`BipartiteForm`] they are classical
//! determinant identities; on a general form they are Pfaffian identities.

use crate::algebra::{MultiPoly, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::pfaffian::{pf_elimination, pf_recursive, SkewForm};
use crate::word::{reverse_complement, sign_of, Letter, Word};

/// A rectangular matrix `A` viewed as a bipartite skew form:
/// `f[x ȳ] = A[x][y]`, `f[ȳ x] = -A[x][y]`, same-part entries zero.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteForm<R> {
    rows: usize,
    cols: usize,
    a: Vec<R>,
}

impl<R: Ring> BipartiteForm<R> {
    pub fn new(a: Vec<Vec<R>>) -> Result<Self> {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        if let Some(bad) = a.iter().position(|r| r.len() != cols) {
            return Err(Error::shape(format!("row {bad} has {} entries, expected {cols}", a[bad].len())));
        }
        Ok(BipartiteForm { rows, cols, a: a.into_iter().flatten().collect() })
    }

    pub fn from_square(m: &SquareMatrix<R>) -> Self {
        BipartiteForm { rows: m.dim(), cols: m.dim(), a: m.rows().flat_map(|r| r.iter().cloned()).collect() }
    }

    pub fn get(&self, x: usize, y: usize) -> &R {
        &self.a[x * self.cols + y]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
}

impl BipartiteForm<MultiPoly> {
    /// Independent indeterminates `A[x][y] = g(2x, 2y+1)`, up to sign.
    pub fn generic(rows: usize, cols: usize) -> Self {
        let a = (0..rows)
            .flat_map(|x| (0..cols).map(move |y| MultiPoly::var(Letter::row(x as u32).0, Letter::bar(y as u32).0)))
            .collect();
        BipartiteForm { rows, cols, a }
    }
}

impl<R: Ring> SkewForm for BipartiteForm<R> {
    type Value = R;

    fn entry(&self, x: Letter, y: Letter) -> R {
        match (x.is_barred(), y.is_barred()) {
            (false, true) => self.get(x.base() as usize, y.base() as usize).clone(),
            (true, false) => self.get(y.base() as usize, x.base() as usize).neg(),
            _ => R::zero(),
        }
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        let (idx, dim) = if x.is_barred() { (x.base(), self.cols) } else { (x.base(), self.rows) };
        if (idx as usize) < dim {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange { letter: x, dim })
        }
    }
}

/// The word `α β̄ᴿ` encoding the minor on rows `alpha`, columns `beta`.
pub fn minor_word(alpha: &[u32], beta: &[u32]) -> Word {
    let rows: Word = alpha.iter().map(|&x| Letter::row(x)).collect();
    let cols: Word = beta.iter().map(|&y| Letter::row(y)).collect();
    rows.concat(&reverse_complement(&cols).expect("row letters are never barred"))
}

/// `f[α,β] = f[α β̄ᴿ]`: the minor of rows `alpha` and columns `beta`.
pub fn det_via_pf<F: SkewForm>(form: &F, alpha: &[u32], beta: &[u32]) -> Result<F::Value> {
    if alpha.len() != beta.len() {
        return Err(Error::shape(format!("{} rows but {} columns", alpha.len(), beta.len())));
    }
    pf_recursive(form, &minor_word(alpha, beta))
}

fn ids(w: &[u32]) -> Vec<Letter> {
    w.iter().map(|&x| Letter(x)).collect()
}

fn s(alpha: &[u32], beta: &[u32]) -> i8 {
    sign_of(&ids(alpha), &ids(beta))
}

fn cat(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().chain(b).copied().collect()
}

fn without(a: &[u32], drop: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|x| !drop.contains(x)).collect()
}

fn require_distinct(name: &str, w: &[u32]) -> Result<()> {
    let mut v = w.to_vec();
    v.sort_unstable();
    if v.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::shape(format!("{name} has a repeated index")));
    }
    Ok(())
}

fn require_same_len(a: &[u32], b: &[u32]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::shape(format!("word lengths differ: {} vs {}", a.len(), b.len())));
    }
    Ok(())
}

/// Desnanot:
/// `f[α,β] f[αγ,βδ] = Σ_{y∈δ} s(γ,x) s(δ,y) f[αx,βy] f[αγ\x, βδ\y]`.
pub fn desnanot_residual<F: SkewForm>(
    form: &F,
    alpha: &[u32],
    beta: &[u32],
    gamma: &[u32],
    delta: &[u32],
    x: u32,
) -> Result<F::Value> {
    if !gamma.contains(&x) {
        return Err(Error::NotInWord(Letter(x)));
    }
    require_same_len(alpha, beta)?;
    require_same_len(gamma, delta)?;
    let (ag, bd) = (cat(alpha, gamma), cat(beta, delta));
    require_distinct("αγ", &ag)?;
    require_distinct("βδ", &bd)?;
    let lhs = det_via_pf(form, alpha, beta)?.mul(&det_via_pf(form, &ag, &bd)?);
    let sx = s(gamma, &[x]);
    let ag_x = without(&ag, &[x]);
    let mut rhs = F::Value::zero();
    for &y in delta {
        let sign = sx * s(delta, &[y]);
        let a = det_via_pf(form, &cat(alpha, &[x]), &cat(beta, &[y]))?;
        if a.is_zero() {
            continue;
        }
        let b = det_via_pf(form, &ag_x, &without(&bd, &[y]))?;
        rhs = rhs.add(&a.mul(&b).signed(sign));
    }
    Ok(lhs.sub(&rhs))
}

fn check_adjugate_shape(alpha: &[u32], beta: &[u32], xs: &[u32], ys: &[u32]) -> Result<u32> {
    require_same_len(alpha, beta)?;
    require_same_len(xs, ys)?;
    if xs.is_empty() {
        return Err(Error::shape("need at least one extra row and column"));
    }
    require_distinct("αx", &cat(alpha, xs))?;
    require_distinct("βy", &cat(beta, ys))?;
    Ok(xs.len() as u32)
}

/// Jacobi's adjugate-minor identity:
/// `f[α,β] f[αx₁…xₙ, βy₁…yₙ]^(n-1) = det( f[α (x\xᵢ), β (y\yⱼ)] )`.
pub fn jacobi_adjugate_residual<F: SkewForm>(
    form: &F,
    alpha: &[u32],
    beta: &[u32],
    xs: &[u32],
    ys: &[u32],
) -> Result<F::Value> {
    let n = check_adjugate_shape(alpha, beta, xs, ys)?;
    let full = det_via_pf(form, &cat(alpha, xs), &cat(beta, ys))?;
    let lhs = det_via_pf(form, alpha, beta)?.mul(&full.pow(n - 1));
    let mut cells = Vec::with_capacity((n * n) as usize);
    for &xi in xs {
        for &yj in ys {
            cells.push(det_via_pf(form, &cat(alpha, &without(xs, &[xi])), &cat(beta, &without(ys, &[yj])))?);
        }
    }
    let mut it = cells.into_iter();
    let m = SquareMatrix::from_fn(n as usize, |_, _| it.next().expect("n*n cells"));
    Ok(lhs.sub(&m.det()))
}

/// Sylvester: `f[α,β]^(n-1) f[αx₁…xₙ, βy₁…yₙ] = det( f[αxᵢ, βyⱼ] )`.
pub fn sylvester_residual<F: SkewForm>(
    form: &F,
    alpha: &[u32],
    beta: &[u32],
    xs: &[u32],
    ys: &[u32],
) -> Result<F::Value> {
    let n = check_adjugate_shape(alpha, beta, xs, ys)?;
    let lhs = det_via_pf(form, alpha, beta)?.pow(n - 1).mul(&det_via_pf(form, &cat(alpha, xs), &cat(beta, ys))?);
    let mut cells = Vec::with_capacity((n * n) as usize);
    for &xi in xs {
        for &yj in ys {
            cells.push(det_via_pf(form, &cat(alpha, &[xi]), &cat(beta, &[yj]))?);
        }
    }
    let mut it = cells.into_iter();
    let m = SquareMatrix::from_fn(n as usize, |_, _| it.next().expect("n*n cells"));
    Ok(lhs.sub(&m.det()))
}

/// Dodgson condensation. Layer 0 is all ones, layer 1 the input, and
/// `f_{k+1}[x,y] = (f_k[x,y] f_k[x+1,y+1] - f_k[x,y+1] f_k[x+1,y]) / f_{k-1}[x+1,y+1]`.
/// The single entry of layer `n` is the determinant.
pub fn dodgson_condense(m: &SquareMatrix<Scalar>) -> Result<Scalar> {
    dodgson_condense_with(m, |_, _| {})
}

/// As [`dodgson_condense`], calling `observe(k, layer_k)` for every layer
/// `k >= 1` as it is produced. Only two layers are held at a time.
pub fn dodgson_condense_with(
    m: &SquareMatrix<Scalar>,
    mut observe: impl FnMut(usize, &SquareMatrix<Scalar>),
) -> Result<Scalar> {
    let n = m.dim();
    if n == 0 {
        return Ok(Scalar::one());
    }
    let mut prev = SquareMatrix::from_fn(n + 1, |_, _| Scalar::one());
    let mut cur = m.clone();
    observe(1, &cur);
    for k in 1..n {
        let size = n - k;
        let mut next = SquareMatrix::zeros(size);
        for x in 0..size {
            for y in 0..size {
                let pivot = prev.get(x + 1, y + 1);
                if pivot.is_zero() {
                    return Err(Error::ZeroPivot { layer: k - 1, row: x + 1, col: y + 1 });
                }
                let minor = cur.get(x, y).mul(cur.get(x + 1, y + 1)).sub(&cur.get(x, y + 1).mul(cur.get(x + 1, y)));
                next.set(x, y, minor / pivot);
            }
        }
        observe(k + 1, &next);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur.get(0, 0).clone())
}

fn minors_product<F: SkewForm>(form: &F, rows: &[u32], a: &[u32], b: &[u32]) -> Result<F::Value> {
    Ok(det_via_pf(form, rows, a)?.mul(&det_via_pf(form, rows, b)?))
}

fn check_indices(cols: &[u32], want: usize) -> Result<()> {
    if cols.len() != want {
        return Err(Error::shape(format!("expected {want} column indices, got {}", cols.len())));
    }
    Ok(())
}

/// Fontaine: `f[ab,12]f[ab,34] - f[ab,13]f[ab,24] + f[ab,14]f[ab,23]`.
pub fn fontaine_residual<F: SkewForm>(form: &F, a: u32, b: u32, cols: &[u32]) -> Result<F::Value> {
    check_indices(cols, 4)?;
    let r = [a, b];
    let c = |i: usize, j: usize| [cols[i], cols[j]];
    Ok(minors_product(form, &r, &c(0, 1), &c(2, 3))?
        .sub(&minors_product(form, &r, &c(0, 2), &c(1, 3))?)
        .add(&minors_product(form, &r, &c(0, 3), &c(1, 2))?))
}

/// The Pfaffian product `f[ab] f[ab 1̄2̄3̄4̄]` equal to the Fontaine sum for
/// every skew form; zero on a bipartite form.
pub fn fontaine_product<F: SkewForm>(form: &F, a: u32, b: u32, cols: &[u32]) -> Result<F::Value> {
    check_indices(cols, 4)?;
    let ab = Word::new(vec![Letter::row(a), Letter::row(b)]);
    let bars: Word = cols.iter().map(|&c| Letter::bar(c)).collect();
    Ok(pf_recursive(form, &ab)?.mul(&pf_recursive(form, &ab.concat(&bars))?))
}

/// Bezout: `f[abc,123]f[abc,456] - f[abc,124]f[abc,356]
/// + f[abc,125]f[abc,346] - f[abc,126]f[abc,345]`.
pub fn bezout_residual<F: SkewForm>(form: &F, rows: &[u32], cols: &[u32]) -> Result<F::Value> {
    check_indices(rows, 3)?;
    check_indices(cols, 6)?;
    let c = |i: &[usize]| i.iter().map(|&k| cols[k]).collect::<Vec<u32>>();
    let terms = [
        (c(&[0, 1, 2]), c(&[3, 4, 5])),
        (c(&[0, 1, 3]), c(&[2, 4, 5])),
        (c(&[0, 1, 4]), c(&[2, 3, 5])),
        (c(&[0, 1, 5]), c(&[2, 3, 4])),
    ];
    let mut total = F::Value::zero();
    for (k, (p, q)) in terms.iter().enumerate() {
        let t = minors_product(form, rows, p, q)?;
        total = if k % 2 == 0 { total.add(&t) } else { total.sub(&t) };
    }
    Ok(total)
}

/// The Pfaffian companion of the Bezout sum, valid for every skew form.
/// With `A = abc`, `B = 3̄2̄1̄`, `G = 6̄5̄4̄` and `x = 3̄` it is the first sum of
/// Wenzel's identity for `f[AB] f[AG]`, `Σ_{y∈B} s(B,xy) f[AB\xy] f[AGxy]`.
/// Its Pfaffians have unequal numbers of rows and columns, so it vanishes on
/// a bipartite form.
pub fn bezout_product<F: SkewForm>(form: &F, rows: &[u32], cols: &[u32]) -> Result<F::Value> {
    check_indices(rows, 3)?;
    check_indices(cols, 6)?;
    let a: Word = rows.iter().map(|&r| Letter::row(r)).collect();
    let b: Word = cols[..3].iter().rev().map(|&c| Letter::bar(c)).collect();
    let g: Word = cols[3..].iter().rev().map(|&c| Letter::bar(c)).collect();
    let x = Letter::bar(cols[2]);
    let ab = a.concat(&b);
    let ag = a.concat(&g);
    let mut total = F::Value::zero();
    for &y in b.letters() {
        let sgn = sign_of(b.letters(), &[x, y]);
        if sgn == 0 {
            continue;
        }
        let left = pf_recursive(form, &crate::word::remove_letters(&ab, &[x, y]))?;
        let right = pf_recursive(form, &ag.concat(&Word::new(vec![x, y])))?;
        total = total.add(&left.mul(&right).signed(sgn));
    }
    Ok(total)
}

/// Desnanot's five-column identity:
/// `f[ab,12]f[abc,345] - f[ab,13]f[abc,245] + f[ab,14]f[abc,235] - f[ab,15]f[abc,234]`.
/// Column indices may repeat; with column 5 equal to column 1 this is the
/// three-term special case.
pub fn desnanot_five_residual<F: SkewForm>(form: &F, rows: &[u32], cols: &[u32]) -> Result<F::Value> {
    check_indices(rows, 3)?;
    check_indices(cols, 5)?;
    let ab = &rows[..2];
    let c = |i: &[usize]| i.iter().map(|&k| cols[k]).collect::<Vec<u32>>();
    let terms = [
        (c(&[0, 1]), c(&[2, 3, 4])),
        (c(&[0, 2]), c(&[1, 3, 4])),
        (c(&[0, 3]), c(&[1, 2, 4])),
        (c(&[0, 4]), c(&[1, 2, 3])),
    ];
    let mut total = F::Value::zero();
    for (k, (p, q)) in terms.iter().enumerate() {
        let t = det_via_pf(form, ab, p)?.mul(&det_via_pf(form, rows, q)?);
        total = if k % 2 == 0 { total.add(&t) } else { total.sub(&t) };
    }
    Ok(total)
}

/// The Pfaffian form of the five-column sum, valid for every skew form:
/// `f[ab] f[abc 1̄2̄3̄4̄5̄] + f[ab 1̄ c] f[ab 2̄3̄4̄5̄]`.
pub fn desnanot_five_product<F: SkewForm>(form: &F, rows: &[u32], cols: &[u32]) -> Result<F::Value> {
    check_indices(rows, 3)?;
    check_indices(cols, 5)?;
    let (a, b, c) = (Letter::row(rows[0]), Letter::row(rows[1]), Letter::row(rows[2]));
    let bar = |k: usize| Letter::bar(cols[k]);
    let ab = Word::new(vec![a, b]);
    let first = pf_recursive(form, &ab)?
        .mul(&pf_recursive(form, &Word::new(vec![a, b, c, bar(0), bar(1), bar(2), bar(3), bar(4)]))?);
    let second = pf_recursive(form, &Word::new(vec![a, b, bar(0), c]))?
        .mul(&pf_recursive(form, &Word::new(vec![a, b, bar(1), bar(2), bar(3), bar(4)]))?);
    Ok(first.add(&second))
}

/// `I_n ⊗ [[0,1],[-1,0]]`.
pub fn standard_symplectic(dim: usize) -> SquareMatrix<Scalar> {
    SquareMatrix::from_fn(dim, |i, j| {
        if i / 2 != j / 2 {
            Scalar::zero()
        } else {
            match (i % 2, j % 2) {
                (0, 1) => Scalar::one(),
                (1, 0) => Scalar::one().neg(),
                _ => Scalar::zero(),
            }
        }
    })
}

/// Returns `(Pf(AᵀQA), det A)` for a `2n×2n` matrix; the two agree.
pub fn brioschi_pf(a: &SquareMatrix<Scalar>) -> Result<(Scalar, Scalar)> {
    let n = a.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let b = a.transpose().mul(&standard_symplectic(n))?.mul(a)?;
    Ok((pf_elimination(&b)?, a.det()))
}
