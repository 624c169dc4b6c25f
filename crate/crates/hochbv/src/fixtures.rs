//! Shipped algebras.
//!
//! | name | algebra | m |
//! |---|---|---|
//! | `k` | ground field, `δ = 0` | 0 |
//! | `x2d1`, `x2d2` | `k[x]/x²`, `|x| = 1, 2` | 1, 2 |
//! | `x3d2` | `k[x]/x³`, `|x| = 2` | 4 |
//! | `x4d2` | `k[x]/x⁴`, `|x| = 2` | 6 |
//! | `ext` | exterior algebra on `u, v`, `|u| = |v| = 1` | 2 |
//! | `s1s2` | free graded commutative on `a, b` mod `a², b²`, `|a| = 1, |b| = 2` | 3 |
//! | `trivext` | `B ⊕ B^∨[5]` for `B = k⟨x,y⟩/(x², y², yx)`, not commutative | 5 |
//! | `dga` | as `s1s2` with `d e = x` | 3 |
//! | `broken_nonsymmetric` | `k[x]/x³` with `δ(1) = 1⊗x² + 2x⊗x + x²⊗1`, `δ(a) = aδ(1)` | 4 |
//! | `broken_noncommutative` | `u, v` odd with `uv = vu`, coproduct of `ext` | 2 |
//!
//! Each pairing-derived fixture also ships its closed form as `<name>.closed.json`.

use exactlinalg::{Field, Q};

use crate::frobenius::{ClosedData, FrobeniusAlgebra};
use crate::schema::AlgebraFile;

const OPEN: &[(&str, &str)] = &[
    ("k", include_str!("../fixtures/k.json")),
    ("x2d1", include_str!("../fixtures/x2d1.json")),
    ("x2d2", include_str!("../fixtures/x2d2.json")),
    ("x3d2", include_str!("../fixtures/x3d2.json")),
    ("x4d2", include_str!("../fixtures/x4d2.json")),
    ("ext", include_str!("../fixtures/ext.json")),
    ("s1s2", include_str!("../fixtures/s1s2.json")),
    ("trivext", include_str!("../fixtures/trivext.json")),
    ("dga", include_str!("../fixtures/dga.json")),
    ("broken_nonsymmetric", include_str!("../fixtures/broken_nonsymmetric.json")),
    ("broken_noncommutative", include_str!("../fixtures/broken_noncommutative.json")),
];

const CLOSED: &[(&str, &str)] = &[
    ("x2d1", include_str!("../fixtures/x2d1.closed.json")),
    ("x2d2", include_str!("../fixtures/x2d2.closed.json")),
    ("x3d2", include_str!("../fixtures/x3d2.closed.json")),
    ("x4d2", include_str!("../fixtures/x4d2.closed.json")),
    ("ext", include_str!("../fixtures/ext.closed.json")),
    ("s1s2", include_str!("../fixtures/s1s2.closed.json")),
    ("trivext", include_str!("../fixtures/trivext.closed.json")),
    ("dga", include_str!("../fixtures/dga.closed.json")),
];

/// Symmetric open Frobenius fixtures.
pub const SYMMETRIC: &[&str] = &["k", "x2d1", "x2d2", "x3d2", "x4d2", "ext", "s1s2", "trivext", "dga"];
/// Commutative symmetric fixtures.
pub const COMMUTATIVE: &[&str] = &["k", "x2d1", "x2d2", "x3d2", "x4d2", "ext", "s1s2", "dga"];
pub const BROKEN: &[&str] = &["broken_nonsymmetric", "broken_noncommutative"];

pub fn names() -> impl Iterator<Item = &'static str> {
    OPEN.iter().map(|(n, _)| *n)
}

pub fn closed_names() -> impl Iterator<Item = &'static str> {
    CLOSED.iter().map(|(n, _)| *n)
}

pub fn json(name: &str) -> Option<&'static str> {
    OPEN.iter().find(|(n, _)| *n == name).map(|(_, j)| *j)
}

pub fn closed_json(name: &str) -> Option<&'static str> {
    CLOSED.iter().find(|(n, _)| *n == name).map(|(_, j)| *j)
}

pub fn load<F: Field>(name: &str) -> Option<FrobeniusAlgebra<F>> {
    let text = json(name)?;
    Some(AlgebraFile::from_json(text).and_then(|f| f.to_algebra()).expect("shipped fixture is well formed"))
}

pub fn load_closed<F: Field>(name: &str) -> Option<ClosedData<F>> {
    let text = closed_json(name)?;
    Some(AlgebraFile::from_json(text).and_then(|f| f.to_closed()).expect("shipped fixture is well formed"))
}

fn q(name: &str) -> FrobeniusAlgebra<Q> {
    load(name).expect("shipped fixture")
}

pub fn ground() -> FrobeniusAlgebra<Q> {
    q("k")
}

pub fn x2d1() -> FrobeniusAlgebra<Q> {
    q("x2d1")
}

pub fn x2d2() -> FrobeniusAlgebra<Q> {
    q("x2d2")
}

pub fn x3d2() -> FrobeniusAlgebra<Q> {
    q("x3d2")
}

pub fn x4d2() -> FrobeniusAlgebra<Q> {
    q("x4d2")
}

pub fn ext() -> FrobeniusAlgebra<Q> {
    q("ext")
}

pub fn s1s2() -> FrobeniusAlgebra<Q> {
    q("s1s2")
}

pub fn trivext() -> FrobeniusAlgebra<Q> {
    q("trivext")
}

pub fn dga() -> FrobeniusAlgebra<Q> {
    q("dga")
}

pub fn broken_nonsymmetric() -> FrobeniusAlgebra<Q> {
    q("broken_nonsymmetric")
}

pub fn broken_noncommutative() -> FrobeniusAlgebra<Q> {
    q("broken_noncommutative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{derive_open_from_closed, Level};

    #[test]
    fn shipped_open_files_match_derivation() {
        for name in closed_names() {
            let derived = derive_open_from_closed(load_closed::<Q>(name).unwrap()).unwrap();
            let shipped = q(name);
            assert_eq!(derived.to_data().coproduct, shipped.to_data().coproduct, "{name}");
            assert_eq!(derived.to_data().counit, shipped.to_data().counit, "{name}");
        }
    }

    #[test]
    fn fixture_levels() {
        for name in SYMMETRIC {
            let r = q(name).validate(Level::SymmetricOpen);
            assert!(r.passed(), "{name}\n{r}");
        }
        for name in COMMUTATIVE {
            assert!(q(name).is_commutative(), "{name}");
        }
        assert!(!trivext().is_commutative());
        assert!(!broken_nonsymmetric().validate(Level::SymmetricOpen).passed());
        assert!(!broken_noncommutative().is_commutative());
    }
}
