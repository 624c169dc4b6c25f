//! Library operators against the naive evaluator in `common`.

mod common;

use common::{Oracle, V, V2};
use exactlinalg::{Field, Q};
use hochbv::{bv, fixtures, Chain, Complex, QAlgebra, Tensor, Word};

fn lib(c: &Chain<Q>) -> V {
    c.iter().map(|(w, k)| (w.letters().iter().map(|&x| x as usize).collect(), k.clone())).collect()
}

fn lib2(t: &Tensor<Q>) -> V2 {
    let conv = |w: &Word| w.letters().iter().map(|&x| x as usize).collect::<Vec<_>>();
    t.iter().map(|(ws, k)| ((conv(&ws[0]), conv(&ws[1])), k.clone())).collect()
}

fn word(w: &[usize]) -> Word {
    Word::new(w.iter().map(|&x| x as u16).collect())
}

fn name_word(a: &QAlgebra, names: &[&str]) -> Vec<usize> {
    names.iter().map(|n| a.index_of(n).unwrap()).collect()
}

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

#[test]
fn operators_agree_with_the_library() {
    for name in fixtures::SYMMETRIC.iter().chain(fixtures::BROKEN) {
        let a = fixtures::load::<Q>(name).unwrap();
        let o = Oracle { a: &a };
        let c = Complex::new(&a);
        let l = if a.dim() > 4 { 2 } else { 3 };
        let words = o.words(l);
        for w in &words {
            let lw = word(w);
            assert_eq!(o.d(w), lib(&c.d(&lw)), "{name} D {w:?}");
            assert_eq!(o.b(w), lib(&c.b(&lw)), "{name} B {w:?}");
            assert_eq!(o.theta(w), lib2(&bv::theta(&c, &lw)), "{name} theta {w:?}");
        }
        for x in words.iter().filter(|w| w.len() == 1) {
            for y in words.iter().filter(|w| w.len() <= 2) {
                assert_eq!(o.bullet(x, y), lib(&bv::bullet(&c, &word(x), &word(y))), "{name} bullet {x:?} {y:?}");
            }
        }
    }
}

#[test]
fn frozen_values() {
    let a = fixtures::x3d2();
    let o = Oracle { a: &a };
    let c = Complex::new(&a);
    let w = |s: &[&str]| name_word(&a, s);

    assert!(o.d(&w(&["1", "x"])).is_empty());
    assert!(c.d(&word(&w(&["1", "x"]))).is_zero());
    assert!(o.d(&w(&["x", "x"])).is_empty());
    assert!(c.d(&word(&w(&["x", "x"]))).is_zero());

    let bx = V::from([(w(&["1", "x"]), q(1))]);
    assert_eq!(o.b(&w(&["x"])), bx);
    assert_eq!(lib(&c.b(&word(&w(&["x"])))), bx);

    let theta: V2 = [
        (["x2"].as_slice(), ["1", "x"].as_slice()),
        (&["x"], &["x", "x"]),
        (&["1"], &["x2", "x"]),
        (&["x2", "x"], &["1"]),
        (&["x", "x"], &["x"]),
        (&["1", "x"], &["x2"]),
    ]
    .into_iter()
    .map(|(l, r)| ((w(l), w(r)), q(1)))
    .collect();
    assert_eq!(o.theta(&w(&["1", "x"])), theta);
    assert_eq!(lib2(&bv::theta(&c, &word(&w(&["1", "x"])))), theta);

    let one = w(&["1"]);
    let b11 = V::from([(w(&["x2"]), q(3))]);
    assert_eq!(o.bullet(&one, &one), b11);
    assert_eq!(lib(&bv::bullet(&c, &word(&one), &word(&one))), b11);

    let x2 = a.index_of("x2").unwrap();
    assert_eq!(a.central_element(0).iter().map(|(k, v)| (*k, v.clone())).collect::<Vec<_>>(), vec![(x2, q(3))]);

    let b = fixtures::x2d1();
    let ob = Oracle { a: &b };
    let (bx, b1) = (name_word(&b, &["x"]), name_word(&b, &["1"]));
    assert!(ob.bullet(&bx, &b1).is_empty());
    assert!(bv::bullet(&Complex::new(&b), &word(&bx), &word(&b1)).is_zero());
}

