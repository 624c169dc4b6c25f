//! Identity catalog and the exhaustive checker.
//!
//! An identity is a list of parts; each part takes a tuple of basis words and returns
//! equations `lhs = rhs` between tensors. The domain of a part of arity `k` on a window
//! of length `L` is every `k`-tuple of normalized words whose slot counts sum to at most
//! `L` (and whose degrees sum to at most the degree bound, if any). Outputs are computed
//! in full, never clipped to the window.
//!
//! Cochain identities range over tuples of elementary cochains instead, written as
//! words `a[a₁…aₙ]`; the identities are multilinear, so this domain is exhaustive.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::OnceLock;

use exactlinalg::Field;
use rayon::prelude::*;

use crate::bv::{
    bullet, bullet_shifted, g_coleibniz, g_frob, gers, h, h_bullet, h_frob, h_theta_b, k_one_b, k_op, s_cobracket,
    theta, theta_b_split,
};
use crate::cochain::{Cochain, CochainOps, DualOps, Functional};
use crate::comb::LinComb;
use crate::frobenius::FrobeniusAlgebra;
use crate::hochschild::{chain_to_tensor, Chain, Complex, Tensor, Truncation, Word};
use crate::relative::{RelativeComplex, StarForm};
use crate::report::{Counterexample, IdentityReport, Status};
use crate::ChainError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityName {
    DSquared,
    BSquared,
    DbAnticommute,
    Degrees,
    I1,
    I2,
    I3,
    I4,
    I5,
    ShiftedAssociativity,
    I6,
    I7,
    I8,
    I9,
    I10,
    StarForms,
    BSplit,
    RelativeSubcomplex,
    RelativeDegrees,
    RelativeBracket,
    R1,
    R2,
    R3,
    R4,
    R5,
    CochainDSquared,
    CupLeibniz,
    CupAssociativity,
    Gerstenhaber,
    TildeRoundTrip,
    TildeD,
    TildeCup,
    TildeCirc,
    BDualSquared,
}

impl IdentityName {
    pub const ALL: [IdentityName; 34] = [
        IdentityName::DSquared,
        IdentityName::BSquared,
        IdentityName::DbAnticommute,
        IdentityName::Degrees,
        IdentityName::I1,
        IdentityName::I2,
        IdentityName::I3,
        IdentityName::I4,
        IdentityName::I5,
        IdentityName::ShiftedAssociativity,
        IdentityName::I6,
        IdentityName::I7,
        IdentityName::I8,
        IdentityName::I9,
        IdentityName::I10,
        IdentityName::StarForms,
        IdentityName::BSplit,
        IdentityName::RelativeSubcomplex,
        IdentityName::RelativeDegrees,
        IdentityName::RelativeBracket,
        IdentityName::R1,
        IdentityName::R2,
        IdentityName::R3,
        IdentityName::R4,
        IdentityName::R5,
        IdentityName::CochainDSquared,
        IdentityName::CupLeibniz,
        IdentityName::CupAssociativity,
        IdentityName::Gerstenhaber,
        IdentityName::TildeRoundTrip,
        IdentityName::TildeD,
        IdentityName::TildeCup,
        IdentityName::TildeCirc,
        IdentityName::BDualSquared,
    ];

    pub fn name(self) -> &'static str {
        use IdentityName::*;
        match self {
            DSquared => "D2",
            BSquared => "B2",
            DbAnticommute => "DB",
            Degrees => "degrees",
            I1 => "I1",
            I2 => "I2",
            I3 => "I3",
            I4 => "I4",
            I5 => "I5",
            ShiftedAssociativity => "shifted_assoc",
            I6 => "I6",
            I7 => "I7",
            I8 => "I8",
            I9 => "I9",
            I10 => "I10",
            StarForms => "star_forms",
            BSplit => "B_split",
            RelativeSubcomplex => "rel_subcomplex",
            RelativeDegrees => "rel_degrees",
            RelativeBracket => "rel_bracket",
            R1 => "R1",
            R2 => "R2",
            R3 => "R3",
            R4 => "R4",
            R5 => "R5",
            CochainDSquared => "cochain_d2",
            CupLeibniz => "cup_leibniz",
            CupAssociativity => "cup_assoc",
            Gerstenhaber => "gerstenhaber",
            TildeRoundTrip => "tilde_roundtrip",
            TildeD => "tilde_D",
            TildeCup => "tilde_cup",
            TildeCirc => "tilde_circ",
            BDualSquared => "B_dual2",
        }
    }

    /// Identities on the relative complex; they need a graded commutative algebra.
    pub fn is_relative(self) -> bool {
        use IdentityName::*;
        matches!(self, StarForms | BSplit | RelativeSubcomplex | RelativeDegrees | RelativeBracket | R1 | R2 | R3 | R4 | R5)
    }

    /// Identities that pass through `f ↦ f̃`; they need a pairing.
    pub fn needs_pairing(self) -> bool {
        use IdentityName::*;
        matches!(self, TildeRoundTrip | TildeD | TildeCup | TildeCirc | BDualSquared)
    }

    fn parts<F: Field>(self) -> Vec<Part<F>> {
        use IdentityName::*;
        let abs = |arity, eval| Part { arity, domain: Domain::Words, eval };
        let rel = |arity, eval| Part { arity, domain: Domain::RelativeWords, eval };
        let coch = |arity, slack, eval| Part { arity, domain: Domain::Cochains { slack }, eval };
        match self {
            DSquared => vec![abs(1, d_squared)],
            BSquared => vec![abs(1, b_squared)],
            DbAnticommute => vec![abs(1, db)],
            Degrees => vec![abs(1, degrees_unary), abs(2, degrees_binary)],
            I1 => vec![abs(1, i1)],
            I2 => vec![abs(1, i2)],
            I3 => vec![abs(1, i3)],
            I4 => vec![abs(1, i4)],
            I5 => vec![abs(2, i5_chain_map), abs(3, i5_assoc)],
            ShiftedAssociativity => vec![abs(3, shifted_assoc)],
            I6 => vec![abs(2, i6)],
            I7 => vec![abs(2, i7)],
            I8 => vec![abs(3, i8)],
            I9 => vec![abs(2, i9)],
            I10 => vec![abs(2, i10)],
            StarForms => vec![rel(2, star_forms)],
            BSplit => vec![rel(2, b_split)],
            RelativeSubcomplex => vec![rel(1, rel_subcomplex)],
            RelativeDegrees => vec![rel(2, rel_degrees), rel(3, rel_degrees_h3)],
            RelativeBracket => vec![rel(2, rel_bracket)],
            R1 => vec![rel(2, r1)],
            R2 => vec![rel(3, r2)],
            R3 => vec![rel(2, r3)],
            R4 => vec![rel(2, r4)],
            R5 => vec![rel(3, r5_strict), rel(3, r5_h3)],
            CochainDSquared => vec![coch(1, 0, cochain_d_squared)],
            CupLeibniz => vec![coch(2, 0, cup_leibniz)],
            CupAssociativity => vec![coch(3, 0, cup_assoc)],
            Gerstenhaber => vec![coch(2, 0, gerstenhaber)],
            TildeRoundTrip => vec![coch(1, 0, tilde_round_trip)],
            TildeD => vec![coch(1, -1, tilde_d)],
            TildeCup => vec![coch(2, 0, tilde_cup)],
            TildeCirc => vec![coch(2, 1, tilde_circ)],
            BDualSquared => vec![abs(1, b_dual_squared)],
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityName {
    type Err = ChainError;
    fn from_str(s: &str) -> Result<Self, ChainError> {
        IdentityName::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| ChainError::UnknownOperation(s.into()))
    }
}

/// One equation of an identity evaluated on one input.
#[derive(Clone, Debug)]
pub struct Equation<F> {
    pub label: &'static str,
    pub lhs: Tensor<F>,
    pub rhs: Tensor<F>,
}

type Eval<F> = fn(&Ctx<F>, &[&Word]) -> Vec<Equation<F>>;

/// Where the inputs of a part range.
#[derive(Clone, Copy, Debug)]
enum Domain {
    /// Normalized words, slot counts summing to at most `L`.
    Words,
    /// Words with at least one slot.
    RelativeWords,
    /// Elementary cochains of arity at most [`MAX_COCHAIN_ARITY`], arities summing to
    /// at most `L + slack`. The cochain `a[a₁…aₙ]` sends `(a₁…aₙ)` to `a`.
    Cochains { slack: i64 },
}

pub const MAX_COCHAIN_ARITY: usize = 2;

/// Evaluation context: the complex, with cochain and dual operators built on demand.
pub struct Ctx<'a, F> {
    complex: Complex<'a, F>,
    max_length: usize,
    ops: OnceLock<CochainOps<'a, F>>,
    dual: OnceLock<DualOps<'a, F>>,
}

impl<'a, F: Field> Ctx<'a, F> {
    fn new(alg: &'a FrobeniusAlgebra<F>, max_length: usize) -> Self {
        Ctx { complex: Complex::new(alg), max_length, ops: OnceLock::new(), dual: OnceLock::new() }
    }

    fn ops(&self) -> &CochainOps<'a, F> {
        self.ops.get_or_init(|| CochainOps::new(self.complex.alg))
    }

    /// Exact on words of length at most the window.
    fn dual(&self) -> &DualOps<'a, F> {
        self.dual.get_or_init(|| DualOps::new(self.complex.alg, self.max_length))
    }

    fn cochain(&self, w: &Word) -> Cochain<F> {
        Cochain::elementary(self.complex.alg, w)
    }

    fn tilde(&self, f: &Cochain<F>) -> Functional<F> {
        self.ops().tilde(f).expect("pairing checked before evaluation")
    }
}

impl<'a, F> Deref for Ctx<'a, F> {
    type Target = Complex<'a, F>;
    fn deref(&self) -> &Complex<'a, F> {
        &self.complex
    }
}

struct Part<F> {
    arity: usize,
    domain: Domain,
    eval: Eval<F>,
}

fn eq<F>(label: &'static str, lhs: Tensor<F>, rhs: Tensor<F>) -> Equation<F> {
    Equation { label, lhs, rhs }
}

fn eqc<F: Field>(label: &'static str, lhs: Chain<F>, rhs: Chain<F>) -> Equation<F> {
    eq(label, chain_to_tensor(&lhs), chain_to_tensor(&rhs))
}

fn one<F: Field>(w: &Word) -> Chain<F> {
    Chain::single(w.clone(), F::one())
}

fn bil<K: Ord + Clone, F: Field>(
    xs: &Chain<F>,
    ys: &Chain<F>,
    f: &impl Fn(&Word, &Word) -> LinComb<K, F>,
) -> LinComb<K, F> {
    let mut out = LinComb::new();
    for (x, a) in xs {
        for (y, b) in ys {
            out.add_scaled(&f(x, y), &(a.clone() * b.clone()));
        }
    }
    out
}

/// `f(Dx, y) + (-1)^{|x|} f(x, Dy)`.
fn leibniz<K: Ord + Clone, F: Field>(
    c: &Complex<F>,
    d: &impl Fn(&Word) -> Chain<F>,
    x: &Word,
    y: &Word,
    f: &impl Fn(&Word, &Word) -> LinComb<K, F>,
) -> LinComb<K, F> {
    bil(&d(x), &one(y), f).plus(&bil(&one(x), &d(y), f).signed(c.degree(x)))
}

fn d_squared<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    vec![eqc("D∘D = 0", c.d_chain(&c.d(w[0])), Chain::new())]
}

fn b_squared<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    vec![eqc("B∘B = 0", c.b_chain(&c.b(w[0])), Chain::new())]
}

fn db<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    vec![eqc("DB + BD = 0", c.d_chain(&c.b(w[0])).plus(&c.b_chain(&c.d(w[0]))), Chain::new())]
}

/// Terms of `t` whose total degree is not `expected`.
fn off_degree<F: Field>(c: &Complex<F>, t: &Tensor<F>, expected: i64) -> Tensor<F> {
    t.iter().filter(|(k, _)| c.tensor_degree(k) != expected).map(|(k, v)| (k.clone(), v.clone())).collect()
}

fn degree_eq<F: Field>(c: &Complex<F>, label: &'static str, t: Tensor<F>, expected: i64) -> Equation<F> {
    eq(label, off_degree(c, &t, expected), Tensor::new())
}

fn degrees_unary<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (w, m) = (w[0], c.m());
    let n = c.degree(w);
    vec![
        degree_eq(c, "|D| = 1", chain_to_tensor(&c.d(w)), n + 1),
        degree_eq(c, "|B| = -1", chain_to_tensor(&c.b(w)), n - 1),
        degree_eq(c, "|θ| = m", theta(c, w), n + m),
        degree_eq(c, "|h| = m - 1", h(c, w), n + m - 1),
        degree_eq(c, "|S| = m - 1", s_cobracket(c, w), n + m - 1),
        degree_eq(c, "|H| = m - 2", h_theta_b(c, w), n + m - 2),
        degree_eq(c, "|G| = 2m - 2", g_coleibniz(c, w), n + 2 * m - 2),
    ]
}

fn degrees_binary<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, m) = (w[0], w[1], c.m());
    let n = c.degree(x) + c.degree(y);
    vec![
        degree_eq(c, "|•| = m", chain_to_tensor(&bullet(c, x, y)), n + m),
        degree_eq(c, "|K| = m - 1", chain_to_tensor(&k_op(c, x, y)), n + m - 1),
        degree_eq(c, "|{,}| = m - 1", chain_to_tensor(&gers(c, x, y)), n + m - 1),
        degree_eq(c, "|H•| = m - 2", chain_to_tensor(&h_bullet(c, x, y)), n + m - 2),
        degree_eq(c, "|K(1⊗B)| = m - 2", chain_to_tensor(&k_one_b(c, x, y)), n + m - 2),
        degree_eq(c, "|Hᵣ| = 2m - 1", h_frob(c, x, y), n + 2 * m - 1),
        degree_eq(c, "|Gᵣ| = 2m - 1", g_frob(c, x, y), n + 2 * m - 1),
    ]
}

fn i1<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let w = w[0];
    let lhs = c.d(w).apply(|v| theta(c, v));
    let rhs = c.d_tensor(&theta(c, w)).signed(c.m());
    vec![eq("θD = (-1)^m (D⊗1 + 1⊗D)θ", lhs, rhs)]
}

fn i2<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (w, m) = (w[0], c.m());
    let th = theta(c, w);
    let lhs = c.d_tensor(&h(c, w)).minus(&c.d(w).apply(|v| h(c, v)).signed(m + 1));
    let rhs = c.tau(&th).signed(m).minus(&th);
    vec![eq("[D, h] = (-1)^m τθ - θ", lhs, rhs)]
}

fn i3<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (w, m) = (w[0], c.m());
    let lhs = c.d_tensor(&h_theta_b(c, w)).minus(&c.d(w).apply(|v| h_theta_b(c, v)).signed(m));
    let (_, tb2) = theta_b_split(c, w);
    let b1 = c.apply_chain_at(&theta(c, w), 0, -1, |v| c.b(v));
    let rhs = h(c, w).signed(m).plus(&tb2).minus(&b1.signed(m));
    vec![eq("[D, H] = (-1)^m h + (θB)₂ - (-1)^m (B⊗1)θ", lhs, rhs)]
}

fn i4<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (w, m) = (w[0], c.m());
    let th = theta(c, w);
    let hw = h(c, w);
    let tau_h = |v: &Word| c.tau(&h(c, v));
    let strict_lhs = c.apply_at(&hw, 0, m, |v| theta(c, v));
    let strict_rhs = c
        .permute(&c.apply_at(&th, 0, m - 1, |v| h(c, v)), &[0, 2, 1])
        .plus(&c.apply_at(&th, 1, m - 1, |v| h(c, v)));
    let lhs = c.d_tensor(&g_coleibniz(c, w)).minus(&c.d(w).apply(|v| g_coleibniz(c, v)));
    let rhs = c
        .apply_at(&c.tau(&hw), 0, m, |v| theta(c, v))
        .minus(&c.permute(&c.apply_at(&th, 0, m - 1, tau_h), &[0, 2, 1]))
        .minus(&c.apply_at(&th, 1, m - 1, tau_h))
        .signed(m);
    vec![
        eq("(θ⊗1)h = (1⊗τ)(h⊗1)θ + (1⊗h)θ", strict_lhs, strict_rhs),
        eq("[D, G] = (-1)^m ((θ⊗1)τh - (1⊗τ)(τh⊗1)θ - (1⊗τh)θ)", lhs, rhs),
    ]
}

fn i5_chain_map<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y) = (w[0], w[1]);
    let f = |a: &Word, b: &Word| bullet(c, a, b);
    let lhs = c.d_chain(&bullet(c, x, y));
    let rhs = leibniz(c, &|v| c.d(v), x, y, &f).signed(c.m());
    vec![eqc("D(x•y) = (-1)^m (Dx•y + (-1)^|x| x•Dy)", lhs, rhs)]
}

fn i5_assoc<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, z) = (w[0], w[1], w[2]);
    let lhs = bullet(c, y, z).apply(|v| bullet(c, x, v));
    let rhs = bullet(c, x, y).apply(|u| bullet(c, u, z)).signed(c.m() * c.degree(x) + c.m());
    vec![eqc("x•(y•z) = (-1)^{m|x|+m} (x•y)•z", lhs, rhs)]
}

fn shifted_assoc<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, z) = (w[0], w[1], w[2]);
    let lhs = bullet_shifted(c, y, z).apply(|v| bullet_shifted(c, x, v));
    let rhs = bullet_shifted(c, x, y).apply(|u| bullet_shifted(c, u, z));
    vec![eqc("x•'(y•'z) = (x•'y)•'z", lhs, rhs)]
}

fn i6<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, m) = (w[0], w[1], c.m());
    let k = |a: &Word, b: &Word| k_op(c, a, b);
    let lhs = c.d_chain(&k_op(c, x, y)).minus(&leibniz(c, &|v| c.d(v), x, y, &k).signed(m - 1));
    let rhs = bullet(c, x, y).minus(&bullet(c, y, x).signed(c.degree(x) * c.degree(y) + m));
    vec![eqc("[D, K] = x•y - (-1)^{|x||y|+m} y•x", lhs, rhs)]
}

fn i7<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, m) = (w[0], w[1], c.m());
    let (dx, dy) = (c.degree(x), c.degree(y));
    let hom = |a: &Word, b: &Word| h_bullet(c, a, b).plus(&k_one_b(c, a, b).signed(m + 1));
    let bl = |a: &Word, b: &Word| bullet(c, a, b);
    let lhs = c.d_chain(&hom(x, y)).minus(&leibniz(c, &|v| c.d(v), x, y, &hom).signed(m));
    let rhs = gers(c, x, y)
        .minus(&c.b_chain(&bullet(c, x, y)))
        .minus(&bil(&one(x), &c.b(y), &bl).signed(m + dx));
    vec![
        eqc("[D, H + (-1)^{m+1} K(1⊗B)] = {x,y} - B(x•y) - (-1)^{m+|x|} x•By", lhs, rhs),
        eqc("Bx•y = 0", bil(&c.b(x), &one(y), &bl), Chain::new()),
        eqc("{x,y} = (-1)^{|x||y|+m} {y,x}", gers(c, x, y), gers(c, y, x).signed(dx * dy + m)),
    ]
}

fn i8<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, z, m) = (w[0], w[1], w[2], c.m());
    let (dx, dy) = (c.degree(x), c.degree(y));
    let s = (m - 1 + dx) * dy;
    let yz = bullet(c, y, z);
    let k_right = yz.apply(|v| k_op(c, x, v));
    let k_right_rhs = k_op(c, x, z).apply(|v| bullet(c, y, v)).signed(s);
    let k_left = yz.apply(|u| k_op(c, u, x));
    let k_left_rhs = k_op(c, z, x).apply(|v| bullet(c, y, v)).signed(s + dx * dy + m);
    let lhs = yz.apply(|v| gers(c, x, v));
    let rhs = gers(c, x, y)
        .apply(|u| bullet(c, u, z))
        .plus(&gers(c, x, z).apply(|v| bullet(c, y, v)).signed(s));
    vec![
        eqc("K(x, y•z) = ± y•K(x,z)", k_right, k_right_rhs),
        eqc("K(y•z, x) = ± y•K(z,x)", k_left, k_left_rhs),
        eqc("{x, y•z} = {x,y}•z + (-1)^{(m-1+|x|)|y|} y•{x,z}", lhs, rhs),
    ]
}

fn i9<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, m) = (w[0], w[1], c.m());
    let mut p = Tensor::new();
    let mut y_on_theta = Tensor::new();
    for (key, cu) in &theta(c, x) {
        let du = c.degree(&key[0]);
        for (r, cr) in &bullet(c, &key[1], y) {
            p.add_signed(vec![key[0].clone(), r.clone()], cu.clone() * cr.clone(), m * du + m);
        }
        for (r, cr) in &bullet(c, y, &key[1]) {
            let e = m * du + c.degree(&key[1]) * c.degree(y);
            y_on_theta.add_signed(vec![key[0].clone(), r.clone()], cu.clone() * cr.clone(), e);
        }
    }
    let target = bullet(c, x, y).apply(|v| theta(c, v)).minus(&p);
    let hr = |a: &Word, b: &Word| h_frob(c, a, b);
    let lhs = c.d_tensor(&hr(x, y)).plus(&leibniz(c, &|v| c.d(v), x, y, &hr));
    let theta_yx = bullet(c, y, x).apply(|v| theta(c, v)).signed(m + c.degree(x) * c.degree(y));
    let mut out = vec![
        eq("[D, Hᵣ] = θ(x•y) - (-1)^m (1⊗•)(θ⊗1)", lhs, target.clone()),
        eq("(1⊗y•)θx = (-1)^{m+|x||y|} θ(y•x)", y_on_theta, theta_yx),
    ];
    if x.is_empty() {
        // words without slots span a subcomplex, so G alone is a homotopy there
        let g = |a: &Word, b: &Word| g_frob(c, a, b);
        let lhs = c.d_tensor(&g(x, y)).plus(&leibniz(c, &|v| c.d(v), x, y, &g));
        out.push(eq("[D, Gᵣ] = θ(x•y) - (-1)^m (1⊗•)(θ⊗1)", lhs, target));
    }
    out
}

fn i10<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (x, y, m) = (w[0], w[1], c.m());
    let lhs = bullet(c, x, y).apply(|v| theta(c, v)).signed(m);
    let mut rhs = Tensor::new();
    for (key, cu) in &theta(c, y) {
        for (r, cr) in &bullet(c, x, &key[0]) {
            rhs.add_signed(vec![r.clone(), key[1].clone()], cu.clone() * cr.clone(), m * c.degree(x));
        }
    }
    vec![eq("(-1)^m θ(x•y) = (•⊗1)(1⊗θ)", lhs, rhs)]
}

fn rc<'a, F: Field>(c: &Complex<'a, F>) -> RelativeComplex<'a, F> {
    RelativeComplex::unchecked(c.alg)
}

fn star_forms<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y) = (rc(c), w[0], w[1]);
    let left = r.star_form(x, y, StarForm::Left);
    vec![
        eqc("∗ via δ(a₀b₀) = ∗ via δ(a₀)", r.star_form(x, y, StarForm::Product), left.clone()),
        eqc("∗ via δ(b₀) = ∗ via δ(a₀)", r.star_form(x, y, StarForm::Right), left),
    ]
}

fn b_split<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y) = (rc(c), w[0], w[1]);
    let (b1, b2) = r.b_split(x, y);
    vec![eqc("B₁ + B₂ = B(x∗y)", b1.plus(&b2), c.b_chain(&r.star(x, y)))]
}

fn rel_subcomplex<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let short: Chain<F> = c.d(w[0]).into_iter().filter(|(k, _)| k.is_empty()).collect();
    vec![eqc("D preserves length ≥ 1", short, Chain::new())]
}

fn rel_degrees<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y, m) = (rc(c), w[0], w[1], c.m());
    let n = c.degree(x) + c.degree(y);
    vec![
        degree_eq(c, "|∗| = m - 1", chain_to_tensor(&r.star(x, y)), n + m - 1),
        degree_eq(c, "|T| = m - 2", chain_to_tensor(&r.t_op(x, y)), n + m - 2),
        degree_eq(c, "|Hrel| = m - 3", chain_to_tensor(&r.h_rel(x, y)), n + m - 3),
    ]
}

fn rel_degrees_h3<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, m) = (rc(c), c.m());
    let n = w.iter().map(|v| c.degree(v)).sum::<i64>();
    vec![degree_eq(c, "|H₃| = 2m - 4", chain_to_tensor(&r.h3(w[0], w[1], w[2])), n + 2 * m - 4)]
}

fn rel_bracket<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y) = (rc(c), w[0], w[1]);
    let e = c.m() - 1 + c.degree(x) * c.degree(y);
    vec![eqc("{x,y} = (-1)^{m-1+|x||y|} {y,x}", r.bracket(x, y), r.bracket(y, x).signed(e))]
}

fn r1<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y) = (rc(c), w[0], w[1]);
    let lhs = r.star(x, y).apply(|v| r.d_rel(v));
    let rhs = leibniz(c, &|v| r.d_rel(v), x, y, &|a, b| r.star(a, b)).signed(c.m() - 1);
    vec![eqc("D(x∗y) = (-1)^{m-1} (Dx∗y + (-1)^|x| x∗Dy)", lhs, rhs)]
}

fn r2<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y, z) = (rc(c), w[0], w[1], w[2]);
    let lhs = r.star(x, y).apply(|u| r.star(u, z));
    let rhs = r.star(y, z).apply(|v| r.star(x, v)).signed((c.m() - 1) * (c.degree(x) + 1));
    vec![eqc("(x∗y)∗z = (-1)^{(m-1)(|x|+1)} x∗(y∗z)", lhs, rhs)]
}

fn r3<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y, m) = (rc(c), w[0], w[1], c.m());
    let lhs = r
        .t_op(x, y)
        .apply(|v| r.d_rel(v))
        .minus(&leibniz(c, &|v| r.d_rel(v), x, y, &|a, b| r.t_op(a, b)).signed(m));
    let rhs = r.star(x, y).minus(&r.star(y, x).signed(c.degree(x) * c.degree(y) + m - 1));
    vec![eqc("[D, T] = x∗y - (-1)^{|x||y|+m-1} y∗x", lhs, rhs)]
}

fn r4<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y, m) = (rc(c), w[0], w[1], c.m());
    let lhs = r
        .h_rel(x, y)
        .apply(|v| r.d_rel(v))
        .minus(&leibniz(c, &|v| r.d_rel(v), x, y, &|a, b| r.h_rel(a, b)).signed(m - 1));
    let (b1, _) = r.b_split(x, y);
    let x_by = bil(&one(x), &c.b(y), &|a, b| r.star(a, b));
    let rhs = b1.minus(&r.t_op(x, y)).plus(&x_by.signed(m + c.degree(x)));
    vec![eqc("[D, H] = B₁ - T + (-1)^{m+|x|} x∗By", lhs, rhs)]
}

fn r5_strict<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, x, y, z, m) = (rc(c), w[0], w[1], w[2], c.m());
    let (dx, dy) = (c.degree(x), c.degree(y));
    let lhs = r.star(y, z).apply(|v| r.t_op(x, v));
    let rhs = r
        .t_op(x, y)
        .apply(|u| r.star(u, z))
        .plus(&r.t_op(x, z).apply(|v| r.star(y, v)).signed((m + dx) * dy))
        .signed((m + 1) * dx);
    vec![eqc("T(x, y∗z) = ± (T(x,y)∗z + (-1)^{(m+|x|)|y|} y∗T(x,z))", lhs, rhs)]
}

/// Inputs are `(y, z, x)`.
fn r5_h3<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (r, y, z, x, m) = (rc(c), w[0], w[1], w[2], c.m());
    let (dx, dy, dz) = (c.degree(x), c.degree(y), c.degree(z));
    let h3 = r.h3(y, z, x);
    let mut inner = Chain::new();
    for (v, a) in &r.d_rel(y) {
        inner.add_scaled(&r.h3(v, z, x), a);
    }
    for (v, a) in &r.d_rel(z) {
        inner.add_scaled(&r.h3(y, v, x).signed(dy), a);
    }
    for (v, a) in &r.d_rel(x) {
        inner.add_scaled(&r.h3(y, z, v).signed(dy + dz), a);
    }
    let lhs = h3.apply(|v| r.d_rel(v)).minus(&inner);
    let rhs = r
        .t_op(y, x)
        .apply(|u| r.star(u, z))
        .signed(dx * dz)
        .plus(&r.t_op(z, x).apply(|v| r.star(y, v)).signed(m * dy))
        .minus(&r.star(y, z).apply(|u| r.t_op(u, x)));
    vec![eqc("[D, H₃] = -T(y∗z, x) + (-1)^{|x||z|} T(y,x)∗z + (-1)^{m|y|} y∗T(z,x)", lhs, rhs)]
}

fn eqf<F: Field>(label: &'static str, lhs: &Cochain<F>, rhs: &Cochain<F>) -> Equation<F> {
    eqc(label, lhs.values().clone(), rhs.values().clone())
}

fn eqv<F: Field>(label: &'static str, lhs: &Functional<F>, rhs: &Functional<F>) -> Equation<F> {
    eqc(label, lhs.values().clone(), rhs.values().clone())
}

fn cochain_d_squared<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (ops, f) = (c.ops(), c.cochain(w[0]));
    vec![eqf("d²f = 0", &ops.d(&ops.d(&f)), &Cochain::zero(f.degree() + 2))]
}

fn cup_leibniz<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (ops, f, g) = (c.ops(), c.cochain(w[0]), c.cochain(w[1]));
    let lhs = ops.d(&ops.cup(&f, &g));
    let rhs = ops.cup(&ops.d(&f), &g).plus(&ops.cup(&f, &ops.d(&g)).signed(f.degree()));
    vec![eqf("d(f∪g) = df∪g + (-1)^{|f|} f∪dg", &lhs, &rhs)]
}

fn cup_assoc<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (ops, f, g, k) = (c.ops(), c.cochain(w[0]), c.cochain(w[1]), c.cochain(w[2]));
    vec![eqf("(f∪g)∪k = f∪(g∪k)", &ops.cup(&ops.cup(&f, &g), &k), &ops.cup(&f, &ops.cup(&g, &k)))]
}

fn gerstenhaber<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (ops, f, g) = (c.ops(), c.cochain(w[0]), c.cochain(w[1]));
    let (p, q) = (f.degree(), g.degree());
    let lhs = ops
        .d(&ops.circ(&f, &g))
        .minus(&ops.circ(&ops.d(&f), &g))
        .plus(&ops.circ(&f, &ops.d(&g)).signed(p));
    let rhs = ops.cup(&g, &f).signed(p + p * q).minus(&ops.cup(&f, &g).signed(p));
    vec![eqf(
        "d(f∘g) - df∘g + (-1)^{|f|} f∘dg = (-1)^{|f|+|f||g|} g∪f - (-1)^{|f|} f∪g",
        &lhs,
        &rhs,
    )]
}

fn tilde_round_trip<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let f = c.cochain(w[0]);
    vec![eqf("untilde(f̃) = f", &c.ops().untilde(&c.tilde(&f)), &f)]
}

fn tilde_d<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let f = c.cochain(w[0]);
    let lhs = c.tilde(&c.ops().d(&f));
    vec![eqv("(df)~ = D^∨ f̃", &lhs, &c.dual().d_dual(&c.tilde(&f)))]
}

fn tilde_cup<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (f, g) = (c.cochain(w[0]), c.cochain(w[1]));
    let lhs = c.tilde(&c.ops().cup(&f, &g));
    vec![eqv("(f∪g)~ = f̃ ⊙ g̃", &lhs, &c.dual().odot(&c.tilde(&f), &c.tilde(&g)))]
}

fn tilde_circ<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let (f, g) = (c.cochain(w[0]), c.cochain(w[1]));
    let lhs = c.tilde(&c.ops().circ(&f, &g));
    vec![eqv("(f∘g)~ = μ(f̃ ⊗ g̃) h", &lhs, &c.dual().h_product(&c.tilde(&f), &c.tilde(&g)))]
}

fn b_dual_squared<F: Field>(c: &Ctx<F>, w: &[&Word]) -> Vec<Equation<F>> {
    let dual = c.dual();
    let phi = Functional::basis(0, w[0]);
    vec![eqv("B^∨B^∨ δ_w = 0", &dual.b_dual(&dual.b_dual(&phi)), &Functional::new(-2, Chain::new()))]
}

/// Flattened tuples of indices into `pool` (sorted by length) with slot total ≤ `L`.
fn tuples<F: Field>(c: &Complex<F>, pool: &[&Word], arity: usize, l: usize, max_degree: Option<i64>) -> Vec<u32> {
    let upto: Vec<usize> = (0..=l).map(|r| pool.partition_point(|w| w.len() <= r)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(arity);
    #[allow(clippy::too_many_arguments)]
    fn go<F: Field>(
        c: &Complex<F>,
        pool: &[&Word],
        upto: &[usize],
        arity: usize,
        budget: usize,
        deg: i64,
        max_degree: Option<i64>,
        cur: &mut Vec<u32>,
        out: &mut Vec<u32>,
    ) {
        if cur.len() == arity {
            if max_degree.map_or(true, |dm| deg <= dm) {
                out.extend_from_slice(cur);
            }
            return;
        }
        for (i, w) in pool[..upto[budget]].iter().enumerate() {
            cur.push(i as u32);
            go(c, pool, upto, arity, budget - w.len(), deg + c.degree(w), max_degree, cur, out);
            cur.pop();
        }
    }
    go(c, pool, &upto, arity, l, 0, max_degree, &mut cur, &mut out);
    out
}

/// Checks `id` on `alg`. Relative identities require a graded commutative algebra.
pub fn check_identity<F: Field>(
    alg: &FrobeniusAlgebra<F>,
    algebra_name: &str,
    id: IdentityName,
    t: &Truncation,
) -> Result<IdentityReport, ChainError> {
    if id.is_relative() {
        RelativeComplex::new(alg)?;
    }
    if id.needs_pairing() && !alg.has_pairing() {
        return Err(ChainError::NoPairing);
    }
    Ok(check_identity_unguarded(alg, algebra_name, id, t))
}

/// As [`check_identity`] without the commutativity guard, for exhibiting failures.
pub fn check_identity_unguarded<F: Field>(
    alg: &FrobeniusAlgebra<F>,
    algebra_name: &str,
    id: IdentityName,
    t: &Truncation,
) -> IdentityReport {
    let c = Ctx::new(alg, t.max_length);
    let mut inputs = 0;
    let mut counterexample = None;
    for part in id.parts::<F>() {
        let (budget, cap, max_degree) = match part.domain {
            Domain::Words | Domain::RelativeWords => (t.max_length as i64, t.max_length, t.max_degree),
            Domain::Cochains { slack } => (t.max_length as i64 + slack, MAX_COCHAIN_ARITY, None),
        };
        if budget < 0 {
            continue;
        }
        let budget = budget as usize;
        let words = c.enumerate_words(&Truncation::new(budget.min(cap)));
        let pool: Vec<&Word> =
            words.iter().filter(|w| !matches!(part.domain, Domain::RelativeWords) || !w.is_empty()).collect();
        let flat = tuples(&c, &pool, part.arity, budget, max_degree);
        inputs += flat.len() / part.arity;
        if counterexample.is_some() {
            continue;
        }
        counterexample = flat.par_chunks(part.arity).find_map_first(|idx| {
            let tuple: Vec<&Word> = idx.iter().map(|&i| pool[i as usize]).collect();
            (part.eval)(&c, &tuple).into_iter().find(|e| e.lhs != e.rhs).map(|e| Counterexample {
                input: tuple.iter().map(|w| c.word_name(w)).collect::<Vec<_>>().join(", "),
                equation: e.label.to_string(),
                lhs: c.dump_tensor(&e.lhs),
                rhs: c.dump_tensor(&e.rhs),
            })
        });
    }
    let status = if counterexample.is_some() {
        Status::Fail
    } else if inputs == 0 {
        Status::NeedsLargerWindow
    } else {
        Status::Pass
    };
    IdentityReport { identity: id.name().to_string(), algebra: algebra_name.to_string(), window: *t, status, inputs, counterexample }
}

/// Evaluates the equations of `id` on one input tuple.
pub fn evaluate<F: Field>(alg: &FrobeniusAlgebra<F>, id: IdentityName, inputs: &[&Word]) -> Result<Vec<Equation<F>>, ChainError> {
    if id.needs_pairing() && !alg.has_pairing() {
        return Err(ChainError::NoPairing);
    }
    let total: usize = inputs.iter().map(|w| w.len()).sum();
    let c = Ctx::new(alg, total + 1);
    let parts: Vec<Part<F>> = id.parts();
    let matching: Vec<&Part<F>> = parts.iter().filter(|p| p.arity == inputs.len()).collect();
    if matching.is_empty() {
        return Err(ChainError::Arity { expected: parts[0].arity, got: inputs.len() });
    }
    Ok(matching.iter().flat_map(|p| (p.eval)(&c, inputs)).collect())
}
