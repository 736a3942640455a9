//! Skew forms whose Pfaffians have a product closed form.

use num_integer::binomial;

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::pfaffian::{pf_matchings, SkewForm};
use crate::word::{Letter, Word};

/// `f[xy] = (x - y) / (c + b(x + y) + a·xy)` on a list of points, letter `i`
/// standing for the `i`-th point.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalForm {
    points: Vec<Scalar>,
    params: (Scalar, Scalar, Scalar),
}

/// The Blaschke operator `(x - y) / (1 - xy)`.
pub fn blaschke_form(points: &[Scalar]) -> Result<RationalForm> {
    RationalForm::build(points, (Scalar::from_int(-1), Scalar::zero(), Scalar::one()))
}

/// The family with parameters `(a, b, c)`, which must satisfy `b² = ac ± 1`.
pub fn family_form(points: &[Scalar], a: Scalar, b: Scalar, c: Scalar) -> Result<RationalForm> {
    let gap = b.mul(&b).sub(&a.mul(&c));
    if gap != Scalar::one() && gap != Scalar::from_int(-1) {
        return Err(Error::Domain(format!("b² - ac = {gap}, expected 1 or -1")));
    }
    RationalForm::build(points, (a, b, c))
}

impl RationalForm {
    fn build(points: &[Scalar], params: (Scalar, Scalar, Scalar)) -> Result<Self> {
        let form = RationalForm { points: points.to_vec(), params };
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::Domain(format!("points {i} and {j} coincide")));
                }
                if form.denominator(&points[i], &points[j]).is_zero() {
                    return Err(Error::Domain(format!("pole at points {i} and {j}")));
                }
            }
        }
        Ok(form)
    }

    fn denominator(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let (a, b, c) = &self.params;
        c.add(&b.mul(&x.add(y))).add(&a.mul(&x.mul(y)))
    }

    pub fn points(&self) -> &[Scalar] {
        &self.points
    }

    pub fn params(&self) -> (&Scalar, &Scalar, &Scalar) {
        (&self.params.0, &self.params.1, &self.params.2)
    }
}

impl SkewForm for RationalForm {
    type Value = Scalar;

    fn entry(&self, x: Letter, y: Letter) -> Scalar {
        if x == y {
            return Scalar::zero();
        }
        let (p, q) = (&self.points[x.0 as usize], &self.points[y.0 as usize]);
        p.sub(q).div(&self.denominator(p, q)).expect("poles are rejected at construction")
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        check_point(x, self.points.len())
    }
}

fn check_point(x: Letter, dim: usize) -> Result<()> {
    if (x.0 as usize) < dim {
        Ok(())
    } else {
        Err(Error::LetterOutOfRange { letter: x, dim })
    }
}

/// `f_k[xy] = (x - y)^k` for odd `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerForm {
    points: Vec<Scalar>,
    k: u32,
}

impl PowerForm {
    pub fn new(points: &[Scalar], k: u32) -> Result<Self> {
        if k % 2 == 0 {
            return Err(Error::Domain(format!("(x - y)^{k} is symmetric, not skew")));
        }
        Ok(PowerForm { points: points.to_vec(), k })
    }
}

impl SkewForm for PowerForm {
    type Value = Scalar;

    fn entry(&self, x: Letter, y: Letter) -> Scalar {
        Ring::pow(&self.points[x.0 as usize].sub(&self.points[y.0 as usize]), self.k)
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        check_point(x, self.points.len())
    }
}

/// `Π_{i<j} f[xᵢxⱼ]` over the letters of `alpha`.
pub fn product_pf<F: SkewForm>(form: &F, alpha: &Word) -> Result<F::Value> {
    if alpha.len() % 2 == 1 {
        return Err(Error::OddLength(alpha.len()));
    }
    let ls = alpha.letters();
    let mut acc = F::Value::one();
    for (i, &x) in ls.iter().enumerate() {
        form.check_letter(x)?;
        for &y in &ls[i + 1..] {
            acc = acc.mul(&form.entry(x, y));
        }
    }
    Ok(acc)
}

/// `f[wx]f[yz] + f[wy]f[zx] + f[wz]f[xy] - f[wx]f[wy]f[wz]f[xy]f[xz]f[yz]`,
/// zero exactly when the product formula holds on `wxyz`.
pub fn n4_criterion_residual<F: SkewForm>(form: &F, w: Letter, x: Letter, y: Letter, z: Letter) -> Result<F::Value> {
    let ls = [w, x, y, z];
    for (i, &l) in ls.iter().enumerate() {
        form.check_letter(l)?;
        if ls[..i].contains(&l) {
            return Err(Error::RepeatedLetter(l));
        }
    }
    let f = |p: Letter, q: Letter| form.entry(p, q);
    let pairs = f(w, x).mul(&f(y, z)).add(&f(w, y).mul(&f(z, x))).add(&f(w, z).mul(&f(x, y)));
    let all = [f(w, x), f(w, y), f(w, z), f(x, y), f(x, z), f(y, z)].iter().fold(F::Value::one(), |acc, v| acc.mul(v));
    Ok(pairs.sub(&all))
}

/// The Pfaffian of `(x - y)^k` on the points named by `alpha`.
///
/// For `k = n - 1` this is `(-1)^C(n/2, 2) · Π_{i<n/2} C(n-1, i) · Π_{i<j}(xᵢ - xⱼ)`;
/// for odd `k < n - 1` it vanishes. Any other odd `k` is computed by matchings.
pub fn torelli_pf(points: &[Scalar], k: u32, alpha: &Word) -> Result<Scalar> {
    let form = PowerForm::new(points, k)?;
    let n = alpha.len();
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    for &x in alpha.letters() {
        form.check_letter(x)?;
    }
    if n == 0 {
        return Ok(Scalar::one());
    }
    if alpha.has_repeats() {
        return Ok(Scalar::zero());
    }
    if (k as usize) + 1 < n {
        return Ok(Scalar::zero());
    }
    if k as usize == n - 1 {
        let half = (n / 2) as u64;
        let mut coeff = Scalar::from_int(if binomial(half, 2) % 2 == 0 { 1 } else { -1 });
        for i in 0..half {
            coeff = coeff.mul(&Scalar::from_int(binomial(n as i64 - 1, i as i64)));
        }
        let ls = alpha.letters();
        let mut vandermonde = Scalar::one();
        for (i, x) in ls.iter().enumerate() {
            for y in &ls[i + 1..] {
                vandermonde = vandermonde.mul(&points[x.0 as usize].sub(&points[y.0 as usize]));
            }
        }
        return Ok(coeff.mul(&vandermonde));
    }
    pf_matchings(&form, alpha)
}
