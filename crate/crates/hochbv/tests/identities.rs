use std::time::Instant;

use exactlinalg::Q;
use hochbv::checks::{check_identity, check_identity_unguarded, IdentityName};
use hochbv::{fixtures, CheckStatus, Truncation};

fn window(id: IdentityName) -> usize {
    use IdentityName::*;
    match id {
        DSquared | BSquared | DbAnticommute => 4,
        I9 | I10 => 2,
        _ => 3,
    }
}

fn run(names: &[&str], ids: impl Iterator<Item = IdentityName> + Clone) {
    let mut failures = Vec::new();
    for name in names {
        let a = fixtures::load::<Q>(name).unwrap();
        for id in ids.clone() {
            if (id.is_relative() && !a.is_commutative()) || (id.needs_pairing() && !a.has_pairing()) {
                continue;
            }
            let t0 = Instant::now();
            let r = check_identity(&a, name, id, &Truncation::new(window(id))).unwrap();
            eprintln!("{name:8} {id:14} {:?} {} inputs {:.2?}", r.status, r.inputs, t0.elapsed());
            if r.status == CheckStatus::Fail {
                failures.push(format!("{r:#?}"));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn absolute_identities_on_symmetric_fixtures() {
    run(fixtures::SYMMETRIC, IdentityName::ALL.into_iter().filter(|i| !i.is_relative()));
}

#[test]
fn relative_identities_on_commutative_fixtures() {
    run(fixtures::COMMUTATIVE, IdentityName::ALL.into_iter().filter(|i| i.is_relative()));
}

#[test]
fn negative_controls() {
    let a = fixtures::broken_nonsymmetric();
    for id in [IdentityName::I2, IdentityName::I6] {
        let r = check_identity(&a, "broken_nonsymmetric", id, &Truncation::new(2)).unwrap();
        assert_eq!(r.status, CheckStatus::Fail, "{id}");
        eprintln!("{r:#?}");
    }
    let b = fixtures::broken_noncommutative();
    let r = check_identity_unguarded(&b, "broken_noncommutative", IdentityName::R3, &Truncation::new(2));
    assert_eq!(r.status, CheckStatus::Fail);
    eprintln!("{r:#?}");
}

#[test]
fn r5_with_length_two_inputs() {
    for name in ["x2d1", "x3d2", "ext", "s1s2", "dga"] {
        let a = fixtures::load::<Q>(name).unwrap();
        let t0 = Instant::now();
        let r = check_identity(&a, name, IdentityName::R5, &Truncation::new(4)).unwrap();
        eprintln!("{name:8} R5 L=4 {:?} {} inputs {:.2?}", r.status, r.inputs, t0.elapsed());
        assert_eq!(r.status, CheckStatus::Pass, "{r:#?}");
    }
}
