use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Ring, Scalar};
use crate::error::{Error, Result};

/// The generic skew entry `g(i,j)`, always stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    i: u32,
    j: u32,
}

impl Var {
    /// Canonicalizes the ordered pair `(i, j)`.
    ///
    /// Returns the sign relating `g(i,j)` to the stored variable, or `None`
    /// on the diagonal where the generic entry is zero.
    pub fn canonical(i: u32, j: u32) -> Option<(i8, Var)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Some((1, Var { i, j })),
            std::cmp::Ordering::Greater => Some((-1, Var { i: j, j: i })),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn new(i: u32, j: u32) -> Option<Var> {
        (i < j).then_some(Var { i, j })
    }

    pub fn pair(self) -> (u32, u32) {
        (self.i, self.j)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({},{})", self.i, self.j)
    }
}

/// A product of variables, kept as a sorted multiset.
///
/// Monomials compare lexicographically on that sorted list; a proper prefix
/// sorts first, so ties are broken by total degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Var>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<Var>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Polynomial with integer coefficients in the generic skew entries.
///
/// The term map never holds a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// A raw term: a list of ordered index pairs and a coefficient. Pairs may be
/// out of order or diagonal; normalization takes care of both.
pub type RawTerm = (Vec<(u32, u32)>, BigInt);

impl MultiPoly {
    /// The generic entry `g(i,j)`, respecting skew symmetry: `g(j,i)` with
    /// `j > i` is `-g(i,j)` and `g(i,i)` is zero.
    pub fn var(i: u32, j: u32) -> Self {
        match Var::canonical(i, j) {
            None => Self::zero(),
            Some((sign, v)) => {
                let mut terms = BTreeMap::new();
                terms.insert(Monomial(vec![v]), BigInt::from(sign));
                MultiPoly { terms }
            }
        }
    }

    /// Builds the normal form of a sum of raw terms.
    pub fn normalize(raw: impl IntoIterator<Item = RawTerm>) -> Self {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        'term: for (factors, coeff) in raw {
            let mut negate = false;
            let mut vars = Vec::with_capacity(factors.len());
            for (i, j) in factors {
                match Var::canonical(i, j) {
                    None => continue 'term,
                    Some((sign, v)) => {
                        negate ^= sign < 0;
                        vars.push(v);
                    }
                }
            }
            let coeff = if negate { -coeff } else { coeff };
            *terms.entry(Monomial::from_vars(vars)).or_insert_with(BigInt::zero) += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { terms }
    }

    /// The terms in normal order, in the raw shape accepted by
    /// [`MultiPoly::normalize`].
    pub fn raw_terms(&self) -> Vec<RawTerm> {
        self.terms
            .iter()
            .map(|(m, c)| (m.0.iter().map(|v| v.pair()).collect(), c.clone()))
            .collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every variable occurring in the polynomial, sorted and deduplicated.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Substitutes an exact value for every variable.
    pub fn eval(&self, assignment: &HashMap<Var, Scalar>) -> Result<Scalar> {
        self.eval_with(|v| assignment.get(&v).cloned())
    }

    pub fn eval_with(&self, mut value: impl FnMut(Var) -> Option<Scalar>) -> Result<Scalar> {
        let mut cache: HashMap<Var, Scalar> = HashMap::new();
        let mut total = <Scalar as Ring>::zero();
        for (mono, coeff) in &self.terms {
            let mut t = Scalar::from_integer(coeff.clone());
            for v in &mono.0 {
                let x = match cache.get(v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(*v).ok_or(Error::Unassigned(*v))?;
                        cache.insert(*v, x.clone());
                        x
                    }
                };
                t *= x;
            }
            total += t;
        }
        Ok(total)
    }

    fn map_coeffs(&self, f: impl Fn(&BigInt) -> BigInt) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }

    fn add_scaled(&self, rhs: &Self, negate: bool) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let slot = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        MultiPoly { terms }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }

    fn one() -> Self {
        Self::from_bigint(&BigInt::one())
    }

    fn from_bigint(n: &BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !n.is_zero() {
            terms.insert(Monomial::one(), n.clone());
        }
        MultiPoly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, false)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, true)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *terms.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { terms }
    }

    fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
}

impl fmt::Display for MultiPoly {
    /// Writes `c*g(i,j)*g(k,l) + ...` in ascending monomial order. The
    /// coefficient is always written; constants are bare integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mono, coeff)) in self.terms.iter().enumerate() {
            match (idx, coeff.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}", coeff.abs())?;
            for v in &mono.0 {
                write!(f, "*{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("polynomial", "empty input"));
        }
        let mut raw = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for idx in 1..=bytes.len() {
            if idx == bytes.len() || bytes[idx] == b'+' || bytes[idx] == b'-' {
                raw.push(parse_term(&compact[start..idx])?);
                start = idx;
            }
        }
        Ok(MultiPoly::normalize(raw))
    }
}

fn parse_term(term: &str) -> Result<RawTerm> {
    let (negate, body) = match term.as_bytes().first() {
        Some(b'+') => (false, &term[1..]),
        Some(b'-') => (true, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(Error::parse("polynomial", format!("empty term in {term:?}")));
    }
    let mut coeff = BigInt::one();
    let mut factors = Vec::new();
    for (k, factor) in body.split('*').enumerate() {
        if let Some(args) = factor.strip_prefix("g(").and_then(|s| s.strip_suffix(')')) {
            let (i, j) = args
                .split_once(',')
                .ok_or_else(|| Error::parse("polynomial", format!("bad variable {factor:?}")))?;
            let parse = |s: &str| {
                s.parse::<u32>()
                    .map_err(|e| Error::parse("polynomial", format!("bad index {s:?}: {e}")))
            };
            factors.push((parse(i)?, parse(j)?));
        } else if k == 0 {
            coeff = factor
                .parse::<BigInt>()
                .map_err(|e| Error::parse("polynomial", format!("bad coefficient {factor:?}: {e}")))?;
        } else {
            return Err(Error::parse("polynomial", format!("unexpected factor {factor:?}")));
        }
    }
    Ok((factors, if negate { -coeff } else { coeff }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u32, j: u32) -> MultiPoly {
        MultiPoly::var(i, j)
    }

    fn pf4() -> MultiPoly {
        g(1, 2).mul(&g(3, 4)).sub(&g(1, 3).mul(&g(2, 4))).add(&g(1, 4).mul(&g(2, 3)))
    }

    #[test]
    fn normalize_cancels() {
        let p = MultiPoly::normalize(vec![
            (vec![(1, 2)], BigInt::from(1)),
            (vec![(1, 2)], BigInt::from(-1)),
        ]);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn normalize_applies_skew_symmetry() {
        let p = MultiPoly::normalize(vec![(vec![(2, 1)], BigInt::from(1))]);
        assert_eq!(p, g(1, 2).neg());
        assert!(MultiPoly::normalize(vec![(vec![(3, 3), (1, 2)], BigInt::from(4))]).is_zero());
        assert!(g(5, 5).is_zero());
    }

    #[test]
    fn normalize_merges_commuted_monomials() {
        let p = MultiPoly::normalize(vec![
            (vec![(1, 2), (3, 4)], BigInt::from(2)),
            (vec![(3, 4), (1, 2)], BigInt::from(3)),
        ]);
        assert_eq!(p.to_string(), "5*g(1,2)*g(3,4)");
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = pf4().mul(&pf4()).sub(&g(2, 7));
        assert_eq!(MultiPoly::normalize(p.raw_terms()), p);
    }

    #[test]
    fn eval_examples() {
        let empty = HashMap::new();
        assert_eq!(MultiPoly::zero().eval(&empty).unwrap(), Scalar::from_integer(0.into()));

        let mut a = HashMap::new();
        a.insert(Var::new(1, 2).unwrap(), Scalar::new(3.into(), 2.into()));
        assert_eq!(g(1, 2).eval(&a).unwrap(), Scalar::new(3.into(), 2.into()));

        let ones: HashMap<Var, Scalar> =
            pf4().variables().into_iter().map(|v| (v, Scalar::from_integer(1.into()))).collect();
        assert_eq!(pf4().eval(&ones).unwrap(), Scalar::from_integer(1.into()));
    }

    #[test]
    fn eval_reports_missing_variable() {
        let mut a = HashMap::new();
        a.insert(Var::new(1, 2).unwrap(), Scalar::from_integer(1.into()));
        let err = g(1, 2).mul(&g(3, 4)).eval(&a).unwrap_err();
        assert_eq!(err, Error::Unassigned(Var::new(3, 4).unwrap()));
        assert!(err.to_string().contains("g(3,4)"));
    }

    #[test]
    fn text_round_trip() {
        let p = pf4().mul(&g(0, 9)).sub(&MultiPoly::from_int(7)).add(&g(1, 2).pow(2));
        let text = p.to_string();
        let back: MultiPoly = text.parse().unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_string(), text);
        assert_eq!(pf4().to_string(), "1*g(1,2)*g(3,4) - 1*g(1,3)*g(2,4) + 1*g(1,4)*g(2,3)");
        assert_eq!("-2*g(2,1)".parse::<MultiPoly>().unwrap(), g(1, 2).mul(&MultiPoly::from_int(2)));
        assert!("3*h(1,2)".parse::<MultiPoly>().is_err());
        assert!("".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn monomial_order_is_deterministic() {
        let p = g(3, 4).add(&g(1, 2).mul(&g(3, 4))).add(&g(1, 2));
        let order: Vec<usize> = p.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(order, vec![1, 2, 1]);
    }
}
