//! The relative complex `C̃_*(A, A) = ⊕_{n≥1} A ⊗ Ā^{⊗n}` of a commutative algebra,
//! its product `∗` and the homotopies `T`, `H`, `H₃`.

use std::ops::Deref;

use exactlinalg::Field;

use crate::frobenius::FrobeniusAlgebra;
use crate::hochschild::{Chain, Complex, Word};
use crate::sign::Koszul;
use crate::ChainError;

fn word(parts: &[&[u16]]) -> Word {
    Word::new(parts.concat())
}

/// A [`Complex`] known to come from a graded commutative algebra.
#[derive(Clone, Copy, Debug)]
pub struct RelativeComplex<'a, F> {
    inner: Complex<'a, F>,
}

impl<'a, F> Deref for RelativeComplex<'a, F> {
    type Target = Complex<'a, F>;
    fn deref(&self) -> &Complex<'a, F> {
        &self.inner
    }
}

/// Which of the three equal expressions for `x ∗ y` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarForm {
    /// Through `δ(a₀b₀)`.
    Product,
    /// Through `δ(a₀)`.
    Left,
    /// Through `δ(b₀)`.
    Right,
}

impl<'a, F: Field> RelativeComplex<'a, F> {
    pub fn new(alg: &'a FrobeniusAlgebra<F>) -> Result<Self, ChainError> {
        if !alg.is_commutative() {
            let bad = alg
                .validate(crate::frobenius::Level::Commutative)
                .get("graded_commutativity")
                .and_then(|r| r.counterexample.clone())
                .unwrap_or_default();
            return Err(ChainError::NotCommutative(bad));
        }
        Ok(RelativeComplex { inner: Complex::new(alg) })
    }

    /// Skips the commutativity check; used to exhibit failures on non-examples.
    pub fn unchecked(alg: &'a FrobeniusAlgebra<F>) -> Self {
        RelativeComplex { inner: Complex::new(alg) }
    }

    pub fn complex(&self) -> &Complex<'a, F> {
        &self.inner
    }

    /// `D` followed by dropping words without slots.
    pub fn d_rel(&self, w: &Word) -> Chain<F> {
        self.d(w).into_iter().filter(|(k, _)| !k.is_empty()).collect()
    }

    pub fn star(&self, x: &Word, y: &Word) -> Chain<F> {
        self.star_form(x, y, StarForm::Left)
    }

    pub fn star_form(&self, x: &Word, y: &Word, form: StarForm) -> Chain<F> {
        let alg = self.alg;
        let mut out = Chain::new();
        let (a0, sl) = (x.a0(), x.slots());
        let (b0, bl) = (y.a0(), y.slots());
        let s = self.sum_deg(sl) + sl.len() as i64;
        let db0 = alg.deg(b0);
        match form {
            StarForm::Left => {
                for (p, q, c) in alg.cop(a0) {
                    for (t, ct) in alg.mul(*q, b0) {
                        if *t == 0 {
                            continue;
                        }
                        let e = alg.deg(*p) + (alg.deg(*q) + 1) * s;
                        out.add_signed(word(&[&[*p as u16], sl, &[*t as u16], bl]), c.clone() * ct.clone(), e);
                    }
                }
            }
            StarForm::Product => {
                for (ab, cab) in alg.mul(a0, b0) {
                    for (p, q, c) in alg.cop(*ab) {
                        if *q == 0 {
                            continue;
                        }
                        let e = alg.deg(*p) + (alg.deg(*q) + db0 + 1) * s;
                        out.add_signed(word(&[&[*p as u16], sl, &[*q as u16], bl]), cab.clone() * c.clone(), e);
                    }
                }
            }
            StarForm::Right => {
                for (p, q, c) in alg.cop(b0) {
                    if *q == 0 {
                        continue;
                    }
                    for (t, ct) in alg.mul(a0, *p) {
                        let e = (self.m() + 1) * alg.deg(a0) + alg.deg(*p) + (alg.deg(*q) + db0 + 1) * s;
                        out.add_signed(word(&[&[*t as u16], sl, &[*q as u16], bl]), c.clone() * ct.clone(), e);
                    }
                }
            }
        }
        out
    }

    /// The terms of `T(x, y)` with the insertion index `i` of each.
    pub fn t_terms(&self, x: &Word, y: &Word) -> Vec<(Word, F, usize)> {
        let alg = self.alg;
        let mut out = Vec::new();
        let (a0, sl) = (x.a0(), x.slots());
        let (b0, bl) = (y.a0() as u16, y.slots());
        let s = self.sum_deg(sl) + sl.len() as i64;
        let m = self.m();
        for (p, q, c) in alg.cop(a0) {
            if *p == 0 || *q == 0 {
                continue;
            }
            let (dp, dq) = (alg.deg(*p), alg.deg(*q));
            let mut pre = self.deg(b0);
            for i in 0..=bl.len() {
                if i > 0 {
                    pre += self.deg(bl[i - 1]) + 1;
                }
                let mu = pre * (m + alg.deg(a0) + s) + dp + (dq + 1) * s;
                let w = word(&[&[b0], &bl[..i], &[*p as u16], sl, &[*q as u16], &bl[i..]]);
                out.push((w, c.clone() * F::sign(mu), i));
            }
        }
        out
    }

    /// Homotopy for commutativity of `∗`.
    pub fn t_op(&self, x: &Word, y: &Word) -> Chain<F> {
        self.t_terms(x, y).into_iter().map(|(w, c, _)| (w, c)).collect()
    }

    /// `{x, y} = T(x, y) + (-1)^{m-1+|x||y|} T(y, x)`.
    pub fn bracket(&self, x: &Word, y: &Word) -> Chain<F> {
        let e = self.m() - 1 + self.degree(x) * self.degree(y);
        self.t_op(x, y).plus(&self.t_op(y, x).signed(e))
    }

    /// `B(x ∗ y) = B₁ + B₂`, split by where the rotation starts: `B₁` starts inside the
    /// `y` block, `B₂` inside the `x` block.
    pub fn b_split(&self, x: &Word, y: &Word) -> (Chain<F>, Chain<F>) {
        let p = x.len();
        let (mut b1, mut b2) = (Chain::new(), Chain::new());
        for (w, c) in &self.star(x, y) {
            let n = w.len();
            b1.add_scaled(&self.b_partial(w, p + 2..n + 2), c);
            b2.add_scaled(&self.b_partial(w, 1..p + 2), c);
        }
        (b1, b2)
    }

    /// Homotopy between `T` and `B₁ - (-1)^{m-1+|x|} x ∗ By`.
    pub fn h_rel(&self, x: &Word, y: &Word) -> Chain<F> {
        let mut out = Chain::new();
        for (w, c, i) in self.t_terms(x, y) {
            out.add_scaled(&self.b_partial(&w, 1..i + 2), &c);
        }
        out
    }

    /// Homotopy for the Leibniz rule of `T` in its first argument, with inputs `(y, z, x)`.
    pub fn h3(&self, y: &Word, z: &Word, x: &Word) -> Chain<F> {
        let alg = self.alg;
        let mut out = Chain::new();
        let (b0, bl) = (y.a0(), y.slots());
        let (c0, cl) = (z.a0(), z.slots());
        let (a0, al) = (x.a0() as u16, x.slots());
        let (q, r, p) = (bl.len() as u32, cl.len() as u32, al.len());
        const BP: u32 = 1;
        const BPP: u32 = 2;
        const CP: u32 = 3;
        const CPP: u32 = 4;
        const A0: u32 = 5;
        let bn = |k: u32| 100 + k;
        let cn = |k: u32| 200 + k;
        let an = |k: u32| 300 + k;
        let e0 = self.m() * self.degree(y);
        for (b1, b2, cb) in alg.cop(b0) {
            if *b1 == 0 || *b2 == 0 {
                continue;
            }
            for (c1, c2, cc) in alg.cop(c0) {
                if *c1 == 0 || *c2 == 0 {
                    continue;
                }
                let mut items = vec![(BP, alg.deg(*b1)), (BPP, alg.deg(*b2))];
                items.extend(bl.iter().enumerate().map(|(k, &b)| (bn(k as u32), self.deg(b) - 1)));
                items.push((CP, alg.deg(*c1)));
                items.push((CPP, alg.deg(*c2)));
                items.extend(cl.iter().enumerate().map(|(k, &c)| (cn(k as u32), self.deg(c) - 1)));
                items.push((A0, self.deg(a0)));
                items.extend(al.iter().enumerate().map(|(k, &a)| (an(k as u32), self.deg(a) - 1)));
                let mut kz = Koszul::new(items);
                kz.twist(e0).suspend(BP).suspend(BPP).suspend(CP).suspend(CPP);
                for i in 0..=p {
                    for j in i..=p {
                        let mut target = vec![A0];
                        target.extend((0..i as u32).map(an));
                        target.push(BP);
                        target.extend((0..q).map(bn));
                        target.push(BPP);
                        target.extend((i as u32..j as u32).map(an));
                        target.push(CP);
                        target.extend((0..r).map(cn));
                        target.push(CPP);
                        target.extend((j as u32..p as u32).map(an));
                        let e = kz.finish(&target);
                        let w = word(&[
                            &[a0],
                            &al[..i],
                            &[*b1 as u16],
                            bl,
                            &[*b2 as u16],
                            &al[i..j],
                            &[*c1 as u16],
                            cl,
                            &[*c2 as u16],
                            &al[j..],
                        ]);
                        out.add_signed(w, cb.clone() * cc.clone(), e);
                    }
                }
            }
        }
        out
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

    #[test]
    fn refuses_noncommutative() {
        let a = fixtures::trivext();
        assert!(matches!(RelativeComplex::new(&a), Err(ChainError::NotCommutative(_))));
        let b = fixtures::broken_noncommutative();
        assert!(RelativeComplex::new(&b).is_err());
    }

    #[test]
    fn star_of_unit_words() {
        // terms of δ(1) with 1'' in a slot: 1⊗x² and x⊗x, each with sign (-1)^{|1'| + 3(|1''|+1)}
        let a = fixtures::x3d2();
        let r = RelativeComplex::new(&a).unwrap();
        let x = w(&[0, 1]);
        let got = r.star(&x, &x);
        let expect: Chain<Q> = [(w(&[0, 1, 2, 1]), Q::from_i64(-1)), (w(&[1, 1, 1, 1]), Q::from_i64(-1))].into_iter().collect();
        assert_eq!(got, expect);
        for form in [StarForm::Product, StarForm::Right] {
            assert_eq!(r.star_form(&x, &x, form), got);
        }
    }

    #[test]
    fn t_ranges_over_insertion_points() {
        let a = fixtures::x3d2();
        let r = RelativeComplex::new(&a).unwrap();
        let terms = r.t_terms(&w(&[0, 1]), &w(&[0, 2, 1]));
        assert!(terms.iter().all(|(t, _, _)| t.len() == 5));
        assert_eq!(terms.iter().map(|t| t.2).max(), Some(2));
    }
}
