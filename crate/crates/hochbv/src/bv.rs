//! Chain-level coproduct `θ`, product `•`, bracket, and the homotopies relating them.
//!
//! Words are `a₀[a₁,…,aₙ]`; for a coproduct term `δ(a) = Σ a'⊗a''` the Sweedler legs
//! are written `p = a'`, `q = a''`. Terms that would put the unit into a slot are dropped.

use std::str::FromStr;

use exactlinalg::Field;

use crate::hochschild::{chain_to_tensor, Chain, Complex, Tensor, Word};
use crate::sign::Koszul;
use crate::ChainError;

fn word(parts: &[&[u16]]) -> Word {
    Word::new(parts.concat())
}

/// `θ(a₀[a₁…aₙ]) = Σ (-1)^{|a₀'|σᵢ} a₀''[a₁…aᵢ] ⊗ a₀'[aᵢ₊₁…aₙ]`, `σᵢ = |a₀''| + Σ_{k≤i}|a_k| + i`.
pub fn theta<F: Field>(c: &Complex<F>, w: &Word) -> Tensor<F> {
    let mut out = Tensor::new();
    let sl = w.slots();
    for (p, q, k) in c.alg.cop(w.a0()) {
        let (p, q) = (*p as u16, *q as u16);
        let mut sigma = c.deg(q);
        for i in 0..=sl.len() {
            if i > 0 {
                sigma += c.deg(sl[i - 1]) + 1;
            }
            let key = vec![word(&[&[q], &sl[..i]]), word(&[&[p], &sl[i..]])];
            out.add_signed(key, k.clone(), c.deg(p) * sigma);
        }
    }
    out
}

/// Homotopy for cocommutativity of `θ`, of degree `m + 1`.
pub fn h<F: Field>(c: &Complex<F>, w: &Word) -> Tensor<F> {
    let mut out = Tensor::new();
    let full = w.letters();
    let sl = w.slots();
    let n = sl.len();
    let m = c.m();
    for (p, q, k) in c.alg.cop(0) {
        if *q == 0 {
            continue;
        }
        let (p, q) = (*p as u16, *q as u16);
        for i in 0..=n {
            let head = c.sum_deg(&full[..=i]) + i as i64;
            for j in i + 1..=n + 1 {
                let mid = c.sum_deg(&sl[i..j - 1]) + (j - i - 1) as i64;
                let tail = c.sum_deg(&sl[j - 1..]) + (n + 1 - j) as i64;
                let t = c.deg(q) * c.deg(p) + (m + 1) * head + (c.deg(p) + mid) * tail;
                let key = vec![word(&[&full[..=i], &[q], &sl[j - 1..]]), word(&[&[p], &sl[i..j - 1]])];
                out.add_signed(key, k.clone(), t);
            }
        }
    }
    out
}

/// `S = h + (-1)^m τh`.
pub fn s_cobracket<F: Field>(c: &Complex<F>, w: &Word) -> Tensor<F> {
    let hw = h(c, w);
    hw.plus(&c.tau(&hw).signed(c.m()))
}

/// The two halves of `θB`: `(θB)₁` keeps the old `a₀` in the second factor, `(θB)₂` in the first.
pub fn theta_b_split<F: Field>(c: &Complex<F>, w: &Word) -> (Tensor<F>, Tensor<F>) {
    let (mut o1, mut o2) = (Tensor::new(), Tensor::new());
    for (bw, e, pos) in c.b_tagged(w) {
        let s = F::sign(e);
        for (key, v) in &theta(c, &bw) {
            let target = if pos <= key[0].len() { &mut o2 } else { &mut o1 };
            target.add_term(key.clone(), v.clone() * s.clone());
        }
    }
    (o1, o2)
}

/// Homotopy between `h` and `(θB)₂ - (-1)^m (B⊗1)θ`.
pub fn h_theta_b<F: Field>(c: &Complex<F>, w: &Word) -> Tensor<F> {
    let mut out = Tensor::new();
    let full = w.letters();
    let sl = w.slots();
    let n = sl.len();
    for (p, q, cf) in c.alg.cop(0) {
        if *q == 0 {
            continue;
        }
        let (p, q) = (*p as u16, *q as u16);
        let (dp, dq) = (c.deg(p), c.deg(q));
        for i in 0..=n {
            for j in i + 1..=n + 1 {
                let (mid, tail) = (&sl[i..j - 1], &sl[j - 1..]);
                let (sm, st) = (c.sum_deg(mid), c.sum_deg(tail));
                let (ii, jj, nn) = (i as i64, j as i64, n as i64);
                for k in 0..=i {
                    let (head, pre) = (&sl[k..i], &full[..=k]);
                    let w1 = word(&[&[0], head, &[q], tail, pre]);
                    if !w1.is_normalized() {
                        continue;
                    }
                    let kk = k as i64;
                    let sh = c.sum_deg(head);
                    let nu = (sm + jj - ii + 1) * (st + nn - jj + 1)
                        + (c.sum_deg(pre) + kk + 1) * (sh + st + nn - jj + ii - kk + 1)
                        + dp * (dq + c.sum_deg(&full[..=i]) + st + nn - jj + ii)
                        + (dq + 1) * (sh + ii - kk);
                    out.add_signed(vec![w1, word(&[&[p], mid])], cf.clone(), nu);
                }
            }
        }
    }
    out
}

const P1: u32 = 10_001;
const Q1: u32 = 10_002;
const P2: u32 = 10_003;
const Q2: u32 = 10_004;

/// Homotopy for co-Leibniz, landing in the triple tensor.
pub fn g_coleibniz<F: Field>(c: &Complex<F>, w: &Word) -> Tensor<F> {
    let mut out = Tensor::new();
    let a0 = w.letters()[0];
    let sl = w.slots();
    let n = sl.len();
    let m = c.m();
    let items: Vec<(u32, i64)> =
        std::iter::once((0, c.deg(a0))).chain((1..=n).map(|k| (k as u32, c.deg(sl[k - 1]) - 1))).collect();
    let cop: Vec<_> = c.alg.cop(0).iter().filter(|(p, _, _)| *p != 0).collect();
    let labels = |r: std::ops::RangeInclusive<usize>| r.map(|t| t as u32).collect::<Vec<_>>();
    for l in 0..=n {
        for i in l..=n {
            for j in i..=n {
                for k in j..=n {
                    let mut target = vec![Q1];
                    target.extend(labels(l + 1..=i));
                    target.push(Q2);
                    target.extend(labels(j + 1..=k));
                    target.push(0);
                    target.extend(labels(1..=l));
                    target.push(P1);
                    target.extend(labels(i + 1..=j));
                    target.push(P2);
                    target.extend(labels(k + 1..=n));
                    for (p1, q1, c1) in &cop {
                        for (p2, q2, c2) in &cop {
                            let (p1, q1, p2, q2) = (*p1 as u16, *q1 as u16, *p2 as u16, *q2 as u16);
                            let after1 = if l == 0 { None } else { Some(l as u32) };
                            let after2 = if j == l { Q1 } else { j as u32 };
                            let e = Koszul::new(items.iter().copied())
                                .insert(after1, (P1, c.deg(p1)), (Q1, c.deg(q1)), m)
                                .insert(Some(after2), (P2, c.deg(p2)), (Q2, c.deg(q2)), m)
                                .suspend(P1)
                                .suspend(P2)
                                .finish(&target);
                            let key = vec![
                                word(&[&[q1], &sl[l..i]]),
                                word(&[&[q2], &sl[j..k]]),
                                word(&[&[a0], &sl[..l], &[p1], &sl[i..j], &[p2], &sl[k..]]),
                            ];
                            out.add_signed(key, c1.clone() * c2.clone(), e);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `x • y`: zero unless `x` has no slots; `a₀[] • b₀[b…] = Σ (-1)^{|a₀'||a₀''|} (a₀''a₀'b₀)[b…]`.
pub fn bullet<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Chain<F> {
    let mut out = Chain::new();
    if !x.is_empty() {
        return out;
    }
    let alg = c.alg;
    for (p, q, k) in alg.cop(x.a0()) {
        let s = F::sign(alg.deg(*p) * alg.deg(*q)) * k.clone();
        for (r, c1) in alg.mul(*q, *p) {
            for (t, c2) in alg.mul(*r, y.a0()) {
                let mut v = y.letters().to_vec();
                v[0] = *t as u16;
                out.add_term(Word::new(v), s.clone() * c1.clone() * c2.clone());
            }
        }
    }
    out
}

/// The product pulled back along the shift by `m`: `x •' y = (-1)^{m|x|} x • y`.
pub fn bullet_shifted<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Chain<F> {
    bullet(c, x, y).signed(crate::sign::pullback_exponent(c.m(), c.degree(x)))
}

/// Homotopy for commutativity of `•`, of degree `m - 1`.
pub fn k_op<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Chain<F> {
    let mut out = Chain::new();
    let sl = x.slots();
    let sa = c.sum_deg(sl) + sl.len() as i64;
    for (p, q, k) in c.alg.cop(x.a0()) {
        let e = (c.alg.deg(*p) + 1) * (c.alg.deg(*q) + sa);
        for (t, c2) in c.alg.mul(*p, y.a0()) {
            if *t == 0 {
                continue;
            }
            out.add_signed(word(&[&[*q as u16], sl, &[*t as u16], y.slots()]), k.clone() * c2.clone(), e);
        }
    }
    out
}

/// `{x, y} = K(x, y) + (-1)^{|x||y|+m} K(y, x)`.
pub fn gers<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Chain<F> {
    let e = c.degree(x) * c.degree(y) + c.m();
    k_op(c, x, y).plus(&k_op(c, y, x).signed(e))
}

/// `K(1⊗B)(x⊗y) = (-1)^{|x|} K(x, By)`.
pub fn k_one_b<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Chain<F> {
    c.b(y).apply(|yb| k_op(c, x, yb)).signed(c.degree(x))
}

/// Homotopy relating the bracket to the deviation of `B` from being a derivation of `•`.
pub fn h_bullet<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Chain<F> {
    let mut out = Chain::new();
    let sl = x.slots();
    let (b0, bl) = (y.a0() as u16, y.slots());
    let pn = sl.len() as i64;
    let qn = bl.len();
    let sa = c.sum_deg(sl);
    for (p, q, cf) in c.alg.cop(x.a0()) {
        if *q == 0 {
            continue;
        }
        let (dp, dq) = (c.alg.deg(*p), c.alg.deg(*q));
        for (k2, c2) in c.alg.mul(*p, b0 as usize) {
            if *k2 == 0 {
                continue;
            }
            for k in 1..=qn + 1 {
                let (head, tail) = (&bl[..k - 1], &bl[k - 1..]);
                let kk = k as i64;
                let al = (dp + 1) * (dq + sa + pn)
                    + (c.sum_deg(tail) + qn as i64 - kk - 1)
                        * (dp + dq + sa + c.deg(b0) + c.sum_deg(head) + kk + pn + 1);
                let w = word(&[&[0], tail, &[*q as u16], sl, &[*k2 as u16], head]);
                out.add_signed(w, cf.clone() * c2.clone(), al);
            }
        }
    }
    out
}

/// Right-module homotopy on inputs where `x` has no slots.
pub fn g_frob<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Tensor<F> {
    let mut out = Tensor::new();
    if !x.is_empty() {
        return out;
    }
    let alg = c.alg;
    let m = c.m();
    let (b0, bl) = (y.a0(), y.slots());
    let n = bl.len();
    for (p, q, cf) in alg.cop(x.a0()) {
        let (dp, dq) = (alg.deg(*p), alg.deg(*q));
        for (p1, q1, c1) in alg.cop(0) {
            let (dp1, dq1) = (alg.deg(*p1), alg.deg(*q1));
            for (k0, v0) in alg.mul(*p, b0) {
                if *k0 == 0 {
                    continue;
                }
                for (k1, v1) in alg.mul(*q, *p1) {
                    let coef = cf.clone() * c1.clone() * v0.clone() * v1.clone();
                    let mut acc = 0;
                    for k in 0..=n {
                        if k > 0 {
                            acc += c.deg(bl[k - 1]) + 1;
                        }
                        let e = dq1 + dp * dq + m * dq + (dp1 + dq) * (dq1 + dp + alg.deg(b0) + acc);
                        let key = vec![word(&[&[*q1 as u16, *k0 as u16], &bl[..k]]), word(&[&[*k1 as u16], &bl[k..]])];
                        out.add_signed(key, coef.clone(), e);
                    }
                }
            }
        }
    }
    out
}

/// `(1⊗K)(θ⊗1)(x⊗y) = Σ_{θx = u⊗v} (-1)^{(m-1)|u|} u ⊗ K(v, y)`.
pub fn k_after_theta<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Tensor<F> {
    let mut out = Tensor::new();
    for (key, cu) in &theta(c, x) {
        let e = (c.m() - 1) * c.degree(&key[0]);
        for (r, cr) in &k_op(c, &key[1], y) {
            out.add_signed(vec![key[0].clone(), r.clone()], cu.clone() * cr.clone(), e);
        }
    }
    out
}

/// Right-module homotopy on all inputs: `(-1)^m (θK - (1⊗K)(θ⊗1))`.
pub fn h_frob<F: Field>(c: &Complex<F>, x: &Word, y: &Word) -> Tensor<F> {
    k_op(c, x, y).apply(|v| theta(c, v)).minus(&k_after_theta(c, x, y)).signed(c.m())
}

/// Named homotopies and cobracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homotopy {
    HCocom,
    HThetaB,
    GCoLeibniz,
    KCom,
    HBullet,
    HFrobR,
    GFrobR,
    SCobracket,
}

impl Homotopy {
    pub const ALL: [Homotopy; 8] = [
        Homotopy::HCocom,
        Homotopy::HThetaB,
        Homotopy::GCoLeibniz,
        Homotopy::KCom,
        Homotopy::HBullet,
        Homotopy::HFrobR,
        Homotopy::GFrobR,
        Homotopy::SCobracket,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Homotopy::HCocom => "h_cocom",
            Homotopy::HThetaB => "H_thetaB",
            Homotopy::GCoLeibniz => "G_coLeibniz",
            Homotopy::KCom => "K_com",
            Homotopy::HBullet => "H_bullet",
            Homotopy::HFrobR => "H_frobR",
            Homotopy::GFrobR => "G_frobR",
            Homotopy::SCobracket => "S_cobracket",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Homotopy::HCocom | Homotopy::HThetaB | Homotopy::GCoLeibniz | Homotopy::SCobracket => 1,
            _ => 2,
        }
    }
}

impl FromStr for Homotopy {
    type Err = ChainError;
    fn from_str(s: &str) -> Result<Self, ChainError> {
        Homotopy::ALL.into_iter().find(|h| h.name() == s).ok_or_else(|| ChainError::UnknownOperation(s.into()))
    }
}

/// Evaluates a named homotopy on basis words.
pub fn apply_homotopy<F: Field>(c: &Complex<F>, name: Homotopy, inputs: &[&Word]) -> Result<Tensor<F>, ChainError> {
    if inputs.len() != name.arity() {
        return Err(ChainError::Arity { expected: name.arity(), got: inputs.len() });
    }
    let x = inputs[0];
    Ok(match name {
        Homotopy::HCocom => h(c, x),
        Homotopy::HThetaB => h_theta_b(c, x),
        Homotopy::GCoLeibniz => g_coleibniz(c, x),
        Homotopy::SCobracket => s_cobracket(c, x),
        Homotopy::KCom => chain_to_tensor(&k_op(c, x, inputs[1])),
        Homotopy::HBullet => chain_to_tensor(&h_bullet(c, x, inputs[1])),
        Homotopy::HFrobR => h_frob(c, x, inputs[1]),
        Homotopy::GFrobR => g_frob(c, x, inputs[1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use exactlinalg::Q;

    fn w(a: &[u16]) -> Word {
        Word::new(a.to_vec())
    }

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn theta_of_length_zero_word() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        let t = theta(&c, &w(&[0]));
        let expect: Tensor<Q> =
            [(vec![w(&[2]), w(&[0])], q(1)), (vec![w(&[1]), w(&[1])], q(1)), (vec![w(&[0]), w(&[2])], q(1))]
                .into_iter()
                .collect();
        assert_eq!(t, expect);
        assert!(theta(&c, &w(&[2, 1])).iter().all(|(k, _)| k.len() == 2));
    }

    #[test]
    fn bullet_examples() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        assert_eq!(bullet(&c, &w(&[0]), &w(&[0])), Chain::single(w(&[2]), q(3)));
        assert!(bullet(&c, &w(&[1, 1]), &w(&[0])).is_zero());
        let b = fixtures::x2d1();
        assert!(bullet(&Complex::new(&b), &w(&[1]), &w(&[0])).is_zero());
    }

    #[test]
    fn homotopy_names_round_trip() {
        for h in Homotopy::ALL {
            assert_eq!(h.name().parse::<Homotopy>().unwrap(), h);
        }
        assert!("nope".parse::<Homotopy>().is_err());
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        assert!(apply_homotopy(&c, Homotopy::KCom, &[&w(&[0])]).is_err());
    }

    #[test]
    fn g_shape() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        let x = w(&[1, 2]);
        for (key, _) in &g_coleibniz(&c, &x) {
            assert_eq!(key.len(), 3);
            assert_eq!(key.iter().map(Word::len).sum::<usize>(), x.len() + 2);
        }
    }
}
