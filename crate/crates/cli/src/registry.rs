//! The named identities the `verify` commands know how to check.
//!
//! Each entry resolves its shape flags against its own defaults, draws one
//! random exact-rational instance per call, and returns the residual. The
//! symbolic variant evaluates the same residual over generic indeterminates.

use pfaff_core::bridge::{self, BipartiteForm};
use pfaff_core::closed::{self, PowerForm};
use pfaff_core::identities as id;
use pfaff_core::matrix::det_bareiss;
use pfaff_core::random::{
    random_matrix, random_points, random_scalar, random_skew_matrix, random_square, random_words, shuffled_letters, TrialRng,
};
use pfaff_core::{
    pf_matchings, pf_recursive, Error, GenericForm, Letter, MatrixForm, MultiPoly, Ring, Scalar,
    SquareMatrix, Word,
};
use serde::{Serialize, Serializer};

use crate::{usage, CliError, CliResult};

/// Largest number of letters the symbolic mode will expand.
pub const SYMBOLIC_LETTER_BOUND: usize = 10;

/// Shape flags as given on the command line.
#[derive(Clone, Debug, Default)]
pub struct ShapeArgs {
    pub alpha_len: Option<usize>,
    pub beta_len: Option<usize>,
    pub gamma_len: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<u32>,
    pub params: Option<(Scalar, Scalar, Scalar)>,
}

/// Shape flags after defaults, restricted to the ones an identity uses.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Shape {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "params_text")]
    pub params: Option<(Scalar, Scalar, Scalar)>,
}

fn params_text<S: Serializer>(p: &Option<(Scalar, Scalar, Scalar)>, s: S) -> Result<S::Ok, S::Error> {
    let (a, b, c) = p.as_ref().expect("skipped when absent");
    [a.to_string(), b.to_string(), c.to_string()].serialize(s)
}

impl Shape {
    fn a(&self) -> usize {
        self.alpha_len.unwrap_or(0)
    }
    fn b(&self) -> usize {
        self.beta_len.unwrap_or(0)
    }
    fn g(&self) -> usize {
        self.gamma_len.unwrap_or(0)
    }
    fn n(&self) -> usize {
        self.n.unwrap_or(0)
    }
    fn params(&self) -> (Scalar, Scalar, Scalar) {
        self.params.clone().expect("resolved with params")
    }
}

/// One random draw: either a residual, or a rejected instance that failed a
/// precondition (a vanishing divisor, a pole) and must be redrawn.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Residual(Scalar),
    Resample,
}

type Resolve = fn(&ShapeArgs) -> CliResult<Shape>;
type Numeric = fn(&Shape, &mut TrialRng) -> CliResult<Outcome>;
type Symbolic = fn(&Shape) -> CliResult<MultiPoly>;

pub struct Identity {
    pub name: &'static str,
    pub about: &'static str,
    resolve: Resolve,
    numeric: Numeric,
    symbolic: Option<Symbolic>,
}

impl Identity {
    pub fn resolve(&self, args: &ShapeArgs) -> CliResult<Shape> {
        (self.resolve)(args)
    }

    pub fn numeric_trial(&self, shape: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
        (self.numeric)(shape, rng)
    }

    pub fn has_symbolic(&self) -> bool {
        self.symbolic.is_some()
    }

    pub fn symbolic(&self, shape: &Shape) -> CliResult<MultiPoly> {
        match self.symbolic {
            Some(f) => f(shape),
            None => usage(format!("{} has no symbolic mode; use `verify {}`", self.name, self.name)),
        }
    }
}

pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|i| i.name).collect()
}

pub fn lookup(name: &str) -> CliResult<&'static Identity> {
    REGISTRY.iter().find(|i| i.name == name).ok_or_else(|| CliError::UnknownIdentity(name.to_string()))
}

pub static REGISTRY: &[Identity] = &[
    Identity { name: "tanner", about: "f[α]f[αβ] = Σ s(β,xy) f[αxy] f[αβ\\xy]", resolve: r_alpha_beta::<2, 4>, numeric: n_tanner, symbolic: Some(s_tanner) },
    Identity { name: "expansion", about: "f[β] = Σ s(β,xy) f[xy] f[β\\xy]", resolve: r_beta::<4>, numeric: n_expansion, symbolic: Some(s_expansion) },
    Identity { name: "averaged-expansion", about: "f[β] = (1/|β|) Σ_x Σ_y s(β,xy) f[xy] f[β\\xy]", resolve: r_beta::<4>, numeric: n_averaged, symbolic: None },
    Identity { name: "minor-product", about: "f[α]^(n-1) f[αβ] = Σ_μ s(β,μ) Π f[αxᵢyᵢ]", resolve: r_alpha_beta::<2, 4>, numeric: n_minor_product, symbolic: Some(s_minor_product) },
    Identity { name: "complementary", about: "f[α] f[αβ]^(n-1) = Σ_μ s(β,μ) Π s(β,xᵢyᵢ) f[αβ\\xᵢyᵢ]", resolve: r_alpha_beta::<2, 4>, numeric: n_complementary, symbolic: Some(s_complementary) },
    Identity { name: "wenzel", about: "f[αβ]f[αγ] for words sharing α", resolve: r_wenzel, numeric: n_wenzel, symbolic: Some(s_wenzel) },
    Identity { name: "cancelling", about: "f[αβ] = f[αγγ'β] with a cancelling word γ'", resolve: r_wenzel, numeric: n_cancelling, symbolic: Some(s_cancelling) },
    Identity { name: "brill", about: "C(n-1,k) f[α] = Σ s(α,α_S) f[α_S] f[α\\α_S]", resolve: r_brill, numeric: n_brill, symbolic: Some(s_brill) },
    Identity { name: "cayley-square", about: "det of the skew matrix on α = f[α]²", resolve: r_alpha::<4>, numeric: n_cayley_square, symbolic: Some(s_cayley_square) },
    Identity { name: "cayley-bordered", about: "bordered skew determinant as a product of two Pfaffians", resolve: r_n::<3>, numeric: n_cayley_bordered, symbolic: Some(s_cayley_bordered) },
    Identity { name: "cramer", about: "Pfaffian Cramer rule for Σ_j f[ij] z_j = b_i", resolve: r_n::<2>, numeric: n_cramer, symbolic: None },
    Identity { name: "desnanot", about: "f[α,β] f[αγ,βδ] = Σ s(γ,x)s(δ,y) f[αx,βy] f[αγ\\x,βδ\\y]", resolve: r_desnanot, numeric: n_desnanot, symbolic: Some(s_desnanot) },
    Identity { name: "jacobi-adjugate", about: "f[α,β] f[αx,βy]^(n-1) = det f[α(x\\xᵢ), β(y\\yⱼ)]", resolve: r_alpha_n::<1, 2>, numeric: n_jacobi, symbolic: Some(s_jacobi) },
    Identity { name: "sylvester", about: "f[α,β]^(n-1) f[αx,βy] = det f[αxᵢ, βyⱼ]", resolve: r_alpha_n::<1, 2>, numeric: n_sylvester, symbolic: Some(s_sylvester) },
    Identity { name: "fontaine", about: "f[ab,12]f[ab,34] - f[ab,13]f[ab,24] + f[ab,14]f[ab,23] = 0", resolve: r_none, numeric: n_fontaine, symbolic: Some(s_fontaine) },
    Identity { name: "bezout", about: "three-row, six-column vanishing sum of minor products", resolve: r_none, numeric: n_bezout, symbolic: Some(s_bezout) },
    Identity { name: "desnanot-five", about: "two- and three-row minors over five columns", resolve: r_none, numeric: n_desnanot_five, symbolic: Some(s_desnanot_five) },
    Identity { name: "brioschi", about: "Pf(AᵀQA) = det A", resolve: r_n::<2>, numeric: n_brioschi, symbolic: Some(s_brioschi) },
    Identity { name: "blaschke", about: "Pfaffian of (x-y)/(1-xy) is the product over pairs", resolve: r_n::<6>, numeric: n_blaschke, symbolic: None },
    Identity { name: "family", about: "Pfaffian of (x-y)/(c+b(x+y)+axy), b² = ac ± 1, is the product over pairs", resolve: r_family, numeric: n_family, symbolic: None },
    Identity { name: "torelli", about: "Pfaffian of (x-y)^k in closed form", resolve: r_torelli, numeric: n_torelli, symbolic: None },
    Identity { name: "n4-criterion", about: "the four-point condition for the product formula", resolve: r_n4, numeric: n_n4, symbolic: None },
];

// ---- shape resolution ----

fn even(name: &str, v: usize) -> CliResult<usize> {
    if v % 2 == 0 {
        Ok(v)
    } else {
        usage(format!("{name} must be even, got {v}"))
    }
}

fn positive(name: &str, v: usize) -> CliResult<usize> {
    if v > 0 {
        Ok(v)
    } else {
        usage(format!("{name} must be positive"))
    }
}

fn r_none(_: &ShapeArgs) -> CliResult<Shape> {
    Ok(Shape::default())
}

fn r_alpha<const A: usize>(args: &ShapeArgs) -> CliResult<Shape> {
    let a = even("--alpha-len", args.alpha_len.unwrap_or(A))?;
    Ok(Shape { alpha_len: Some(a), ..Shape::default() })
}

fn r_beta<const B: usize>(args: &ShapeArgs) -> CliResult<Shape> {
    let b = positive("--beta-len", even("--beta-len", args.beta_len.unwrap_or(B))?)?;
    Ok(Shape { beta_len: Some(b), ..Shape::default() })
}

fn r_alpha_beta<const A: usize, const B: usize>(args: &ShapeArgs) -> CliResult<Shape> {
    let a = even("--alpha-len", args.alpha_len.unwrap_or(A))?;
    let b = positive("--beta-len", even("--beta-len", args.beta_len.unwrap_or(B))?)?;
    Ok(Shape { alpha_len: Some(a), beta_len: Some(b), ..Shape::default() })
}

fn r_n<const N: usize>(args: &ShapeArgs) -> CliResult<Shape> {
    Ok(Shape { n: Some(args.n.unwrap_or(N)), ..Shape::default() })
}

fn r_alpha_n<const A: usize, const N: usize>(args: &ShapeArgs) -> CliResult<Shape> {
    let n = positive("--n", args.n.unwrap_or(N))?;
    Ok(Shape { alpha_len: Some(args.alpha_len.unwrap_or(A)), n: Some(n), ..Shape::default() })
}

fn r_wenzel(args: &ShapeArgs) -> CliResult<Shape> {
    let (a, b, g) = (args.alpha_len.unwrap_or(1), args.beta_len.unwrap_or(3), args.gamma_len.unwrap_or(3));
    positive("--beta-len", b)?;
    if (a + b) % 2 == 1 || (a + g) % 2 == 1 {
        return usage("--alpha-len + --beta-len and --alpha-len + --gamma-len must both be even");
    }
    Ok(Shape { alpha_len: Some(a), beta_len: Some(b), gamma_len: Some(g), ..Shape::default() })
}

fn r_brill(args: &ShapeArgs) -> CliResult<Shape> {
    let n = args.n.unwrap_or(3);
    if let Some(k) = args.k {
        if k as usize > n {
            return usage(format!("--k {k} exceeds --n {n}"));
        }
    }
    Ok(Shape { n: Some(n), k: args.k, ..Shape::default() })
}

fn r_desnanot(args: &ShapeArgs) -> CliResult<Shape> {
    let g = positive("--gamma-len", args.gamma_len.unwrap_or(2))?;
    Ok(Shape { alpha_len: Some(args.alpha_len.unwrap_or(1)), gamma_len: Some(g), ..Shape::default() })
}

fn int_triple(a: i64, b: i64, c: i64) -> (Scalar, Scalar, Scalar) {
    (Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c))
}

fn check_family(p: &(Scalar, Scalar, Scalar)) -> CliResult<()> {
    closed::family_form(&[], p.0.clone(), p.1.clone(), p.2.clone()).map(drop).or_else(|e| usage(e.to_string()))
}

fn r_family(args: &ShapeArgs) -> CliResult<Shape> {
    let params = args.params.clone().unwrap_or_else(|| int_triple(0, 1, 2));
    check_family(&params)?;
    Ok(Shape { n: Some(even("--n", args.n.unwrap_or(6))?), params: Some(params), ..Shape::default() })
}

fn r_n4(args: &ShapeArgs) -> CliResult<Shape> {
    let params = args.params.clone().unwrap_or_else(|| int_triple(-1, 0, 1));
    check_family(&params)?;
    Ok(Shape { params: Some(params), ..Shape::default() })
}

fn r_torelli(args: &ShapeArgs) -> CliResult<Shape> {
    let n = even("--n", args.n.unwrap_or(4))?;
    let k = args.k.unwrap_or(n.max(1) as u32 - 1);
    if k % 2 == 0 {
        return usage(format!("--k must be odd, got {k}"));
    }
    Ok(Shape { n: Some(n), k: Some(k), ..Shape::default() })
}

// ---- instance helpers ----

fn residual(r: Scalar) -> CliResult<Outcome> {
    Ok(Outcome::Residual(r))
}

/// The first nonzero value, or zero.
fn first_nonzero(values: impl IntoIterator<Item = Scalar>) -> Scalar {
    values.into_iter().find(|v| !v.is_zero()).unwrap_or_else(Scalar::zero)
}

/// A random skew form on `0..total` and a random split of those letters.
fn skew_instance(rng: &mut TrialRng, lengths: &[usize]) -> (MatrixForm<Scalar>, Vec<Word>) {
    let total = lengths.iter().sum();
    let form = MatrixForm::new(random_skew_matrix(rng, total)).expect("generated skew");
    let words = random_words(rng, total, lengths);
    (form, words)
}

/// Consecutive words `0..a`, `a..a+b`, … for the symbolic mode.
fn consecutive(lengths: &[usize]) -> CliResult<Vec<Word>> {
    let total: usize = lengths.iter().sum();
    within_bound(total)?;
    let mut at = 0u32;
    Ok(lengths
        .iter()
        .map(|&len| {
            let w = Word::from_ids(at..at + len as u32);
            at += len as u32;
            w
        })
        .collect())
}

fn within_bound(letters: usize) -> CliResult<()> {
    if letters > SYMBOLIC_LETTER_BOUND {
        return usage(format!(
            "{letters} letters exceeds the symbolic bound of {SYMBOLIC_LETTER_BOUND}; use numeric `verify` for larger shapes"
        ));
    }
    Ok(())
}

fn first(w: &Word) -> Letter {
    w.letters()[0]
}

fn indices(ls: &[Letter]) -> Vec<u32> {
    ls.iter().map(|l| l.0).collect()
}

// ---- numeric trials and symbolic residuals ----

fn n_tanner(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.a(), s.b()]);
    residual(id::tanner_residual(&f, &w[0], &w[1], first(&w[1]))?)
}

fn s_tanner(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[s.a(), s.b()])?;
    Ok(id::tanner_residual(&GenericForm, &w[0], &w[1], first(&w[1]))?)
}

fn n_expansion(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.b()]);
    residual(id::expansion_residual(&f, &w[0], first(&w[0]))?)
}

fn s_expansion(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[s.b()])?;
    Ok(id::expansion_residual(&GenericForm, &w[0], first(&w[0]))?)
}

fn n_averaged(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.b()]);
    residual(id::averaged_expansion_residual(&f, &w[0])?)
}

fn n_minor_product(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.a(), s.b()]);
    residual(id::minor_product_residual(&f, &w[0], &w[1])?)
}

fn s_minor_product(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[s.a(), s.b()])?;
    Ok(id::minor_product_residual(&GenericForm, &w[0], &w[1])?)
}

fn n_complementary(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.a(), s.b()]);
    residual(id::complementary_residual(&f, &w[0], &w[1])?)
}

fn s_complementary(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[s.a(), s.b()])?;
    Ok(id::complementary_residual(&GenericForm, &w[0], &w[1])?)
}

fn n_wenzel(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.a(), s.b(), s.g()]);
    residual(id::wenzel_residual(&f, &w[0], &w[1], &w[2], first(&w[1]))?)
}

fn s_wenzel(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[s.a(), s.b(), s.g()])?;
    Ok(id::wenzel_residual(&GenericForm, &w[0], &w[1], &w[2], first(&w[1]))?)
}

fn n_cancelling(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.a(), s.b(), s.g()]);
    residual(id::cancelling_extension_check(&f, &w[0], &w[1], &w[2])?)
}

fn s_cancelling(s: &Shape) -> CliResult<MultiPoly> {
    // the cancelling word adds |γ| fresh letters
    within_bound(s.a() + s.b() + 2 * s.g())?;
    let w = consecutive(&[s.a(), s.b(), s.g()])?;
    Ok(id::cancelling_extension_check(&GenericForm, &w[0], &w[1], &w[2])?)
}

fn brill_ks(s: &Shape) -> Vec<u32> {
    match s.k {
        Some(k) => vec![k],
        None => (0..=s.n() as u32).collect(),
    }
}

fn n_brill(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[2 * s.n()]);
    let rs = brill_ks(s).into_iter().map(|k| id::brill_residual(&f, &w[0], k)).collect::<Result<Vec<_>, _>>()?;
    residual(first_nonzero(rs))
}

fn s_brill(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[2 * s.n()])?;
    for k in brill_ks(s) {
        let r = id::brill_residual(&GenericForm, &w[0], k)?;
        if !r.is_zero() {
            return Ok(r);
        }
    }
    Ok(MultiPoly::zero())
}

fn n_cayley_square(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (f, w) = skew_instance(rng, &[s.a()]);
    residual(id::cayley_square_residual(&f, &w[0])?)
}

fn s_cayley_square(s: &Shape) -> CliResult<MultiPoly> {
    let w = consecutive(&[s.a()])?;
    Ok(id::cayley_square_residual(&GenericForm, &w[0])?)
}

fn n_cayley_bordered(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let n = positive("--n", s.n())?;
    let (f, w) = skew_instance(rng, &[1, 1, n - 1]);
    residual(id::cayley_bordered_residual(&f, first(&w[0]), first(&w[1]), &w[2])?)
}

fn s_cayley_bordered(s: &Shape) -> CliResult<MultiPoly> {
    let n = positive("--n", s.n())?;
    let w = consecutive(&[1, 1, n - 1])?;
    Ok(id::cayley_bordered_residual(&GenericForm, first(&w[0]), first(&w[1]), &w[2])?)
}

/// Cramer's rule through ordinary determinants, independent of Pfaffians.
fn determinant_solve(m: &SquareMatrix<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
    let d = det_bareiss(m);
    (0..m.dim())
        .map(|j| {
            let mj = SquareMatrix::from_fn(m.dim(), |r, c| if c == j { b[r].clone() } else { m.get(r, c).clone() });
            det_bareiss(&mj) / &d
        })
        .collect()
}

fn n_cramer(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let dim = 2 * positive("--n", s.n())?;
    let m = random_skew_matrix(rng, dim);
    let b: Vec<Scalar> = (0..dim).map(|_| random_scalar(rng)).collect();
    let z = match id::solve_skew_cramer(&m, &b) {
        Ok(z) => z,
        Err(Error::Singular) => return Ok(Outcome::Resample),
        Err(e) => return Err(e.into()),
    };
    let mz = m.mul_vec(&z)?;
    let direct = determinant_solve(&m, &b);
    let system = mz.iter().zip(&b).map(|(l, r)| l.sub(r));
    let agreement = z.iter().zip(&direct).map(|(l, r)| l.sub(r));
    residual(first_nonzero(system.chain(agreement)))
}

struct DesnanotWords {
    alpha: Vec<u32>,
    beta: Vec<u32>,
    gamma: Vec<u32>,
    delta: Vec<u32>,
}

fn desnanot_split(rows: &[u32], cols: &[u32], a: usize) -> DesnanotWords {
    DesnanotWords { alpha: rows[..a].to_vec(), gamma: rows[a..].to_vec(), beta: cols[..a].to_vec(), delta: cols[a..].to_vec() }
}

fn random_square_bipartite(rng: &mut TrialRng, d: usize) -> (BipartiteForm<Scalar>, Vec<u32>, Vec<u32>) {
    let bf = BipartiteForm::from_square(&random_square(rng, d));
    let rows = indices(&shuffled_letters(rng, d));
    let cols = indices(&shuffled_letters(rng, d));
    (bf, rows, cols)
}

fn in_order(d: usize) -> Vec<u32> {
    (0..d as u32).collect()
}

fn n_desnanot(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (bf, rows, cols) = random_square_bipartite(rng, s.a() + s.g());
    let w = desnanot_split(&rows, &cols, s.a());
    residual(bridge::desnanot_residual(&bf, &w.alpha, &w.beta, &w.gamma, &w.delta, w.gamma[0])?)
}

fn s_desnanot(s: &Shape) -> CliResult<MultiPoly> {
    let d = s.a() + s.g();
    within_bound(2 * d)?;
    let w = desnanot_split(&in_order(d), &in_order(d), s.a());
    Ok(bridge::desnanot_residual(&BipartiteForm::generic(d, d), &w.alpha, &w.beta, &w.gamma, &w.delta, w.gamma[0])?)
}

fn n_jacobi(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (bf, rows, cols) = random_square_bipartite(rng, s.a() + s.n());
    let w = desnanot_split(&rows, &cols, s.a());
    residual(bridge::jacobi_adjugate_residual(&bf, &w.alpha, &w.beta, &w.gamma, &w.delta)?)
}

fn s_jacobi(s: &Shape) -> CliResult<MultiPoly> {
    let d = s.a() + s.n();
    within_bound(2 * d)?;
    let w = desnanot_split(&in_order(d), &in_order(d), s.a());
    Ok(bridge::jacobi_adjugate_residual(&BipartiteForm::generic(d, d), &w.alpha, &w.beta, &w.gamma, &w.delta)?)
}

fn n_sylvester(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (bf, rows, cols) = random_square_bipartite(rng, s.a() + s.n());
    let w = desnanot_split(&rows, &cols, s.a());
    residual(bridge::sylvester_residual(&bf, &w.alpha, &w.beta, &w.gamma, &w.delta)?)
}

fn s_sylvester(s: &Shape) -> CliResult<MultiPoly> {
    let d = s.a() + s.n();
    within_bound(2 * d)?;
    let w = desnanot_split(&in_order(d), &in_order(d), s.a());
    Ok(bridge::sylvester_residual(&BipartiteForm::generic(d, d), &w.alpha, &w.beta, &w.gamma, &w.delta)?)
}

fn random_rect(rng: &mut TrialRng, rows: usize, cols: usize) -> (BipartiteForm<Scalar>, Vec<u32>) {
    let bf = BipartiteForm::new(random_matrix(rng, rows, cols)).expect("rectangular");
    (bf, indices(&shuffled_letters(rng, cols)))
}

fn n_fontaine(_: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (bf, cols) = random_rect(rng, 2, 4);
    residual(bridge::fontaine_residual(&bf, 0, 1, &cols)?)
}

fn s_fontaine(_: &Shape) -> CliResult<MultiPoly> {
    Ok(bridge::fontaine_residual(&BipartiteForm::generic(2, 4), 0, 1, &in_order(4))?)
}

fn n_bezout(_: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (bf, cols) = random_rect(rng, 3, 6);
    residual(bridge::bezout_residual(&bf, &[0, 1, 2], &cols)?)
}

fn s_bezout(_: &Shape) -> CliResult<MultiPoly> {
    Ok(bridge::bezout_residual(&BipartiteForm::generic(3, 6), &[0, 1, 2], &in_order(6))?)
}

fn n_desnanot_five(_: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (bf, cols) = random_rect(rng, 3, 5);
    residual(bridge::desnanot_five_residual(&bf, &[0, 1, 2], &cols)?)
}

fn s_desnanot_five(_: &Shape) -> CliResult<MultiPoly> {
    Ok(bridge::desnanot_five_residual(&BipartiteForm::generic(3, 5), &[0, 1, 2], &in_order(5))?)
}

fn n_brioschi(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let a = random_square(rng, 2 * s.n());
    let (p, d) = bridge::brioschi_pf(&a)?;
    residual(p.sub(&d))
}

fn s_brioschi(s: &Shape) -> CliResult<MultiPoly> {
    let dim = 2 * s.n();
    within_bound(2 * dim)?;
    let a = SquareMatrix::from_fn(dim, |i, j| MultiPoly::var(2 * i as u32, 2 * j as u32 + 1));
    let q = bridge::standard_symplectic(dim).map(|x| MultiPoly::from_bigint(x.numer()));
    let b = a.transpose().mul(&q)?.mul(&a)?;
    let form = MatrixForm::new(b)?;
    Ok(pf_recursive(&form, &form.full_word())?.sub(&a.det()))
}

fn points_or_resample<F>(rng: &mut TrialRng, n: usize, build: impl Fn(&[Scalar]) -> pfaff_core::Result<F>) -> CliResult<Option<F>> {
    let pts = random_points(rng, n);
    match build(&pts) {
        Ok(f) => Ok(Some(f)),
        Err(Error::Domain(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn product_residual<F: pfaff_core::SkewForm<Value = Scalar>>(f: &F, n: usize) -> CliResult<Outcome> {
    let alpha = Word::from_ids(0..n as u32);
    residual(pf_matchings(f, &alpha)?.sub(&closed::product_pf(f, &alpha)?))
}

fn n_blaschke(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    match points_or_resample(rng, even("--n", s.n())?, closed::blaschke_form)? {
        Some(f) => product_residual(&f, s.n()),
        None => Ok(Outcome::Resample),
    }
}

fn n_family(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (a, b, c) = s.params();
    match points_or_resample(rng, s.n(), |pts| closed::family_form(pts, a.clone(), b.clone(), c.clone()))? {
        Some(f) => product_residual(&f, s.n()),
        None => Ok(Outcome::Resample),
    }
}

fn n_torelli(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let k = s.k.expect("resolved");
    let pts = random_points(rng, s.n());
    let alpha = Word::from_ids(0..s.n() as u32);
    let power = PowerForm::new(&pts, k)?;
    residual(closed::torelli_pf(&pts, k, &alpha)?.sub(&pf_matchings(&power, &alpha)?))
}

fn n_n4(s: &Shape, rng: &mut TrialRng) -> CliResult<Outcome> {
    let (a, b, c) = s.params();
    match points_or_resample(rng, 4, |pts| closed::family_form(pts, a.clone(), b.clone(), c.clone()))? {
        Some(f) => {
            let [w, x, y, z] = [0, 1, 2, 3].map(Letter);
            residual(closed::n4_criterion_residual(&f, w, x, y, z)?)
        }
        None => Ok(Outcome::Resample),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfaff_core::random::rng_for;

    #[test]
    fn every_identity_passes_at_its_defaults() {
        for ident in REGISTRY {
            let shape = ident.resolve(&ShapeArgs::default()).unwrap();
            let mut rng = rng_for(3, 0);
            let mut found = false;
            for _ in 0..20 {
                match ident.numeric_trial(&shape, &mut rng).unwrap() {
                    Outcome::Residual(r) => {
                        assert!(r.is_zero(), "{}: {r}", ident.name);
                        found = true;
                        break;
                    }
                    Outcome::Resample => {}
                }
            }
            assert!(found, "{} never produced an admissible instance", ident.name);
        }
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names = names();
        assert_eq!(names.len(), 22);
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 22);
    }

    #[test]
    fn shape_validation() {
        let t = lookup("tanner").unwrap();
        assert!(t.resolve(&ShapeArgs { alpha_len: Some(1), ..ShapeArgs::default() }).is_err());
        assert!(lookup("torelli").unwrap().resolve(&ShapeArgs { k: Some(2), ..ShapeArgs::default() }).is_err());
        let bad = int_triple(0, 0, 1);
        assert!(lookup("family").unwrap().resolve(&ShapeArgs { params: Some(bad), ..ShapeArgs::default() }).is_err());
        assert!(matches!(lookup("nope"), Err(CliError::UnknownIdentity(_))));
    }

    #[test]
    fn symbolic_bound() {
        let t = lookup("tanner").unwrap();
        let shape = t.resolve(&ShapeArgs { alpha_len: Some(6), beta_len: Some(6), ..ShapeArgs::default() }).unwrap();
        let err = t.symbolic(&shape).unwrap_err();
        assert!(err.to_string().contains("numeric"), "{err}");
        assert!(lookup("blaschke").unwrap().symbolic(&Shape::default()).is_err());
    }
}
