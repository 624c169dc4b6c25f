//! Hochschild cochains `C^*(A, A)`, the cup and circle products, the cochain
//! differential, and the passage `f ↦ f̃` to functionals on chains.
//!
//! A cochain is stored as a linear combination of words: the value `a` at the inputs
//! `(a₁, …, aₙ)` is the term `a[a₁…aₙ]`. A functional `φ ∈ Hom(C_*(A, A), k)` is a
//! [`Chain`] whose coefficients are the values of `φ` on basis words.
//!
//! Degrees of functionals are carried over from cochains: `deg f̃ = deg f`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use exactlinalg::Field;

use crate::bv::{h, theta};
use crate::frobenius::FrobeniusAlgebra;
use crate::hochschild::{Chain, Complex, Tensor, Truncation, Word};
use crate::ChainError;

fn word(parts: &[&[u16]]) -> Word {
    Word::new(parts.concat())
}

/// A homogeneous normalized cochain; arity is read off the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain<F> {
    degree: i64,
    values: Chain<F>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: i64) -> Self {
        Cochain { degree, values: Chain::new() }
    }

    /// Takes `values` as written: the caller guarantees homogeneity.
    pub fn from_values(degree: i64, values: Chain<F>) -> Self {
        Cochain { degree, values }
    }

    /// The cochain sending `(a₁…aₙ)` to `a` and every other basis input to zero.
    pub fn elementary(alg: &FrobeniusAlgebra<F>, w: &Word) -> Self {
        let c = Complex::new(alg);
        let degree = c.deg(w.letters()[0]) - c.sum_deg(w.slots()) + w.len() as i64;
        Cochain { degree, values: Chain::single(w.clone(), F::one()) }
    }

    /// Element of `A` as an arity-0 cochain.
    pub fn constant(alg: &FrobeniusAlgebra<F>, a: usize) -> Self {
        Self::elementary(alg, &Word::from_parts(a, &[]))
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn values(&self) -> &Chain<F> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn plus(&self, other: &Self) -> Self {
        Cochain { degree: self.degree, values: self.values.plus(&other.values) }
    }

    pub fn minus(&self, other: &Self) -> Self {
        Cochain { degree: self.degree, values: self.values.minus(&other.values) }
    }

    pub fn signed(&self, e: i64) -> Self {
        Cochain { degree: self.degree, values: self.values.signed(e) }
    }
}

/// A finitely supported functional on chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional<F> {
    degree: i64,
    values: Chain<F>,
}

impl<F: Field> Functional<F> {
    pub fn new(degree: i64, values: Chain<F>) -> Self {
        Functional { degree, values }
    }

    /// `δ_w`: one on `w`, zero on every other basis word.
    pub fn basis(degree: i64, w: &Word) -> Self {
        Functional { degree, values: Chain::single(w.clone(), F::one()) }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn values(&self) -> &Chain<F> {
        &self.values
    }

    pub fn eval(&self, w: &Word) -> F {
        self.values.coeff(w)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }
}

/// Cochain operations on one algebra.
pub struct CochainOps<'a, F> {
    c: Complex<'a, F>,
    /// `factors[t]`: pairs of non-unit `(a, b, k)` with `ab ∋ k t`.
    factors: Vec<Vec<(u16, u16, F)>>,
    /// `lifts[t]`: `(a, k)` with `d a ∋ k t`.
    lifts: Vec<Vec<(u16, F)>>,
}

impl<'a, F: Field> CochainOps<'a, F> {
    pub fn new(alg: &'a FrobeniusAlgebra<F>) -> Self {
        let n = alg.dim();
        let mut factors = vec![Vec::new(); n];
        let mut lifts = vec![Vec::new(); n];
        for a in 1..n {
            for b in 1..n {
                for (t, k) in alg.mul(a, b) {
                    factors[*t].push((a as u16, b as u16, k.clone()));
                }
            }
            for (t, k) in alg.d(a) {
                lifts[*t].push((a as u16, k.clone()));
            }
        }
        CochainOps { c: Complex::new(alg), factors, lifts }
    }

    pub fn complex(&self) -> &Complex<'a, F> {
        &self.c
    }

    fn shifted(&self, ins: &[u16]) -> i64 {
        self.c.sum_deg(ins) + ins.len() as i64
    }

    /// `(f ∪ g)(a, b) = (-1)^{|g| Σ(|aᵢ|+1)} f(a) g(b)`.
    pub fn cup(&self, f: &Cochain<F>, g: &Cochain<F>) -> Cochain<F> {
        let alg = self.c.alg;
        let mut out = Chain::new();
        for (wf, cf) in f.values.iter() {
            let e = g.degree * self.shifted(wf.slots());
            for (wg, cg) in g.values.iter() {
                for (t, k) in alg.mul(wf.a0(), wg.a0()) {
                    let key = word(&[&[*t as u16], wf.slots(), wg.slots()]);
                    out.add_signed(key, cf.clone() * cg.clone() * k.clone(), e);
                }
            }
        }
        Cochain { degree: f.degree + g.degree, values: out }
    }

    /// `f ∘ g = Σⱼ (-1)^{(|g|+1) Σ_{i≤j}(|aᵢ|+1)} f(a₁…aⱼ, g(…), …)`, with `g` projected to `Ā`.
    pub fn circ(&self, f: &Cochain<F>, g: &Cochain<F>) -> Cochain<F> {
        let mut by_out: BTreeMap<u16, Vec<(&Word, &F)>> = BTreeMap::new();
        for (wg, cg) in g.values.iter() {
            by_out.entry(wg.letters()[0]).or_default().push((wg, cg));
        }
        let mut out = Chain::new();
        for (wf, cf) in f.values.iter() {
            let sl = wf.slots();
            for j in 0..sl.len() {
                let Some(inner) = by_out.get(&sl[j]) else { continue };
                let e = (g.degree + 1) * self.shifted(&sl[..j]);
                for (wg, cg) in inner {
                    let key = word(&[&[wf.letters()[0]], &sl[..j], wg.slots(), &sl[j + 1..]]);
                    out.add_signed(key, cf.clone() * (*cg).clone(), e);
                }
            }
        }
        Cochain { degree: f.degree + g.degree - 1, values: out }
    }

    /// `[f, g] = f ∘ g - (-1)^{(|f|+1)(|g|+1)} g ∘ f`.
    pub fn bracket(&self, f: &Cochain<F>, g: &Cochain<F>) -> Cochain<F> {
        self.circ(f, g).minus(&self.circ(g, f).signed((f.degree + 1) * (g.degree + 1)))
    }

    /// Internal part: `d_A f(a) + Σᵢ (-1)^{εᵢ} f(…, d aᵢ, …)`,
    /// `εᵢ = |f| + |a₁| + … + |aᵢ₋₁| - i + 1`.
    pub fn d0(&self, f: &Cochain<F>) -> Cochain<F> {
        let alg = self.c.alg;
        let mut out = Chain::new();
        for (wf, cf) in f.values.iter() {
            let sl = wf.slots();
            for (t, k) in alg.d(wf.a0()) {
                out.add_term(word(&[&[*t as u16], sl]), cf.clone() * k.clone());
            }
            for i in 0..sl.len() {
                let e = f.degree + self.c.sum_deg(&sl[..i]) - i as i64;
                for (a, k) in &self.lifts[sl[i] as usize] {
                    let key = word(&[&[wf.letters()[0]], &sl[..i], &[*a], &sl[i + 1..]]);
                    out.add_signed(key, cf.clone() * k.clone(), e);
                }
            }
        }
        Cochain { degree: f.degree + 1, values: out }
    }

    /// External part:
    /// `-(-1)^{(|a₁|+1)|f|} a₁ f(a₂…) - Σᵢ (-1)^{εᵢ} f(…, aᵢ₋₁aᵢ, …) + (-1)^{εₙ₊₁} f(…aₙ) aₙ₊₁`.
    pub fn d1(&self, f: &Cochain<F>) -> Cochain<F> {
        let alg = self.c.alg;
        let n_basis = alg.dim();
        let fd = f.degree;
        let mut out = Chain::new();
        for (wf, cf) in f.values.iter() {
            let (b0, sl) = (wf.a0(), wf.slots());
            let n = sl.len();
            for a1 in 1..n_basis {
                for (t, k) in alg.mul(a1, b0) {
                    let key = word(&[&[*t as u16, a1 as u16], sl]);
                    out.add_signed(key, cf.clone() * k.clone(), (alg.deg(a1) + 1) * fd + 1);
                }
            }
            for j in 0..n {
                for (a, b, k) in &self.factors[sl[j] as usize] {
                    let e = fd + self.c.sum_deg(&sl[..j]) + self.c.deg(*a) - j as i64 - 1;
                    let key = word(&[&[b0 as u16], &sl[..j], &[*a, *b], &sl[j + 1..]]);
                    out.add_signed(key, cf.clone() * k.clone(), e + 1);
                }
            }
            let e = fd + self.c.sum_deg(sl) - n as i64;
            for an in 1..n_basis {
                for (t, k) in alg.mul(b0, an) {
                    let key = word(&[&[*t as u16], sl, &[an as u16]]);
                    out.add_signed(key, cf.clone() * k.clone(), e);
                }
            }
        }
        Cochain { degree: fd + 1, values: out }
    }

    pub fn d(&self, f: &Cochain<F>) -> Cochain<F> {
        self.d0(f).plus(&self.d1(f))
    }

    /// `f̃(a₀[a₁…aₙ]) = (-1)^{(|a₀|+1)|f|} ⟨a₀, f(a₁…aₙ)⟩`.
    pub fn tilde(&self, f: &Cochain<F>) -> Result<Functional<F>, ChainError> {
        let alg = self.c.alg;
        if !alg.has_pairing() {
            return Err(ChainError::NoPairing);
        }
        let mut out = Chain::new();
        for (wf, cf) in f.values.iter() {
            for a0 in 0..alg.dim() {
                if let Some(p) = alg.pairing(a0, wf.a0()) {
                    out.add_signed(word(&[&[a0 as u16], wf.slots()]), cf.clone() * p, (alg.deg(a0) + 1) * f.degree);
                }
            }
        }
        Ok(Functional { degree: f.degree, values: out })
    }

    /// Inverse of [`tilde`](Self::tilde):
    /// `f(a) = Σ_{δ(1) = 1'⊗1''} (-1)^{|φ|(1+|1''|) + m|1'|} φ(1''[a]) 1'`.
    pub fn untilde(&self, phi: &Functional<F>) -> Cochain<F> {
        let alg = self.c.alg;
        let m = self.c.m();
        let mut out = Chain::new();
        for (w, v) in phi.values.iter() {
            for (p, q, k) in alg.cop(0) {
                if *q != w.a0() {
                    continue;
                }
                let e = phi.degree * (1 + alg.deg(*q)) + m * alg.deg(*p);
                out.add_signed(word(&[&[*p as u16], w.slots()]), v.clone() * k.clone(), e);
            }
        }
        Cochain { degree: phi.degree, values: out }
    }
}

type ChainTranspose<F> = BTreeMap<Word, Vec<(Word, F)>>;
type TensorTranspose<F> = BTreeMap<Word, Vec<(Word, Word, F)>>;

/// Dual operators on functionals, exact on words of length at most `max_length`.
pub struct DualOps<'a, F> {
    c: Complex<'a, F>,
    words: Vec<Word>,
    d_t: OnceLock<ChainTranspose<F>>,
    b_t: OnceLock<ChainTranspose<F>>,
    theta_t: OnceLock<TensorTranspose<F>>,
    h_t: OnceLock<TensorTranspose<F>>,
}

impl<'a, F: Field> DualOps<'a, F> {
    pub fn new(alg: &'a FrobeniusAlgebra<F>, max_length: usize) -> Self {
        let c = Complex::new(alg);
        let words = c.enumerate_words(&Truncation::new(max_length));
        DualOps {
            c,
            words,
            d_t: OnceLock::new(),
            b_t: OnceLock::new(),
            theta_t: OnceLock::new(),
            h_t: OnceLock::new(),
        }
    }

    fn chain_t(&self, op: impl Fn(&Word) -> Chain<F>) -> ChainTranspose<F> {
        let mut t: ChainTranspose<F> = BTreeMap::new();
        for w in &self.words {
            for (v, k) in op(w).iter() {
                t.entry(v.clone()).or_default().push((w.clone(), k.clone()));
            }
        }
        t
    }

    fn tensor_t(&self, op: impl Fn(&Word) -> Tensor<F>) -> TensorTranspose<F> {
        let mut t: TensorTranspose<F> = BTreeMap::new();
        for w in &self.words {
            for (uv, k) in op(w).iter() {
                t.entry(uv[0].clone()).or_default().push((w.clone(), uv[1].clone(), k.clone()));
            }
        }
        t
    }

    fn pull(&self, phi: &Functional<F>, t: &ChainTranspose<F>) -> Chain<F> {
        let mut out = Chain::new();
        for (v, pv) in phi.values.iter() {
            for (w, k) in t.get(v).into_iter().flatten() {
                out.add_term(w.clone(), pv.clone() * k.clone());
            }
        }
        out
    }

    /// `Σ_{op(w) = u⊗v} (-1)^{s|u|} φ(u) ψ(v)`.
    fn pull2(&self, phi: &Functional<F>, psi: &Functional<F>, s: i64, t: &TensorTranspose<F>) -> Chain<F> {
        let mut out = Chain::new();
        for (u, pu) in phi.values.iter() {
            let e = s * self.c.degree(u);
            for (w, v, k) in t.get(u).into_iter().flatten() {
                let pv = psi.eval(v);
                if !pv.is_zero() {
                    out.add_signed(w.clone(), pu.clone() * pv * k.clone(), e);
                }
            }
        }
        out
    }

    /// `D^∨φ = (-1)^{|φ|} φ ∘ D`.
    pub fn d_dual(&self, phi: &Functional<F>) -> Functional<F> {
        let t = self.d_t.get_or_init(|| self.chain_t(|w| self.c.d(w)));
        Functional { degree: phi.degree + 1, values: self.pull(phi, t).signed(phi.degree) }
    }

    /// `B^∨φ = (-1)^{|φ|} φ ∘ B`.
    pub fn b_dual(&self, phi: &Functional<F>) -> Functional<F> {
        let t = self.b_t.get_or_init(|| self.chain_t(|w| self.c.b(w)));
        Functional { degree: phi.degree - 1, values: self.pull(phi, t).signed(phi.degree) }
    }

    /// `φ ⊙ ψ = (-1)^{m(|ψ|+1)} μ(φ ⊗ ψ) θ`, the Koszul sign taken with `|ψ| + m`.
    pub fn odot(&self, phi: &Functional<F>, psi: &Functional<F>) -> Functional<F> {
        let m = self.c.m();
        let t = self.theta_t.get_or_init(|| self.tensor_t(|w| theta(&self.c, w)));
        let values = self.pull2(phi, psi, psi.degree + m, t).signed(m * (psi.degree + 1));
        Functional { degree: phi.degree + psi.degree, values }
    }

    /// `(-1)^{(m+1)(|ψ|+1) + m|φ|} μ(φ ⊗ ψ) h`, the Koszul sign taken with `|ψ|`.
    pub fn h_product(&self, phi: &Functional<F>, psi: &Functional<F>) -> Functional<F> {
        let m = self.c.m();
        let t = self.h_t.get_or_init(|| self.tensor_t(|w| h(&self.c, w)));
        let e = (m + 1) * (psi.degree + 1) + m * phi.degree;
        let values = self.pull2(phi, psi, psi.degree, t).signed(e);
        Functional { degree: phi.degree + psi.degree - 1, values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use exactlinalg::Q;

    fn w(a: &[u16]) -> Word {
        Word::new(a.to_vec())
    }

    fn elementary_up_to(alg: &FrobeniusAlgebra<Q>, arity: usize) -> Vec<Cochain<Q>> {
        let c = Complex::new(alg);
        c.enumerate_words(&Truncation::new(arity)).iter().map(|x| Cochain::elementary(alg, x)).collect()
    }

    #[test]
    fn cup_unit_and_nilpotency() {
        let a = fixtures::x3d2();
        let ops = CochainOps::new(&a);
        let one = Cochain::constant(&a, 0);
        // x ↦ x²
        let sq = Cochain::elementary(&a, &w(&[2, 1]));
        assert_eq!(ops.cup(&one, &sq), sq);
        assert_eq!(ops.cup(&sq, &one), sq);
        assert!(ops.cup(&sq, &sq).is_zero());
    }

    #[test]
    fn arity_zero_cochains() {
        let a = fixtures::ext();
        let ops = CochainOps::new(&a);
        for u in 0..a.dim() {
            for v in 0..a.dim() {
                let (cu, cv) = (Cochain::constant(&a, u), Cochain::constant(&a, v));
                let prod: Chain<Q> = a.mul(u, v).iter().map(|(t, k)| (w(&[*t as u16]), k.clone())).collect();
                assert_eq!(ops.cup(&cu, &cv).values(), &prod);
                assert!(ops.bracket(&cu, &cv).is_zero());
            }
        }
    }

    #[test]
    fn circ_with_constant_inserts_it() {
        let a = fixtures::x3d2();
        let ops = CochainOps::new(&a);
        let f = Cochain::elementary(&a, &w(&[2, 1]));
        let g = Cochain::constant(&a, 1);
        assert_eq!(ops.circ(&f, &g).values(), &Chain::single(w(&[2]), Q::from_i64(1)));
        assert!(ops.circ(&g, &f).is_zero());
    }

    #[test]
    fn differential_squares_to_zero() {
        for a in [fixtures::x3d2(), fixtures::ext(), fixtures::trivext(), fixtures::dga()] {
            let ops = CochainOps::new(&a);
            for f in elementary_up_to(&a, 2) {
                assert!(ops.d(&ops.d(&f)).is_zero(), "{:?}", f.values());
            }
        }
    }

    #[test]
    fn tilde_of_unit_is_the_trace() {
        let a = fixtures::x3d2();
        let ops = CochainOps::new(&a);
        let t = ops.tilde(&Cochain::constant(&a, 0)).unwrap();
        let expect: Chain<Q> = (0..a.dim()).filter_map(|i| a.pairing(i, 0).map(|p| (w(&[i as u16]), p))).collect();
        assert_eq!(t.values(), &expect);
    }

    #[test]
    fn tilde_round_trip() {
        let a = fixtures::x3d2();
        let ops = CochainOps::new(&a);
        for f in elementary_up_to(&a, 3) {
            assert_eq!(ops.untilde(&ops.tilde(&f).unwrap()), f);
        }
    }

    #[test]
    fn odot_with_zero() {
        let a = fixtures::x3d2();
        let dual = DualOps::new(&a, 3);
        let phi = Functional::basis(0, &w(&[1, 1]));
        assert!(dual.odot(&phi, &Functional::new(1, Chain::new())).is_zero());
    }

    #[test]
    fn b_dual_squares_to_zero() {
        let a = fixtures::ext();
        let c = Complex::new(&a);
        let dual = DualOps::new(&a, 3);
        for x in c.enumerate_words(&Truncation::new(3)) {
            let phi = Functional::basis(0, &x);
            assert!(dual.b_dual(&dual.b_dual(&phi)).is_zero());
        }
    }
}
