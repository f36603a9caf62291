use super::builtin::*;
use super::*;
use crate::coeff::{sym, Coefficient};
use proptest::prelude::*;

fn g(alg: &std::sync::Arc<AlgebraTable>, n: &str) -> Expr {
    Expr::generator(alg, n).unwrap()
}

#[test]
fn momentum_position_swap() {
    let d = deformed();
    let e = Expr::word(&d, &["ph1", "xh1"]).unwrap().normal_order();
    let expected = Expr::word(&d, &["xh1", "ph1"]).unwrap()
        - Expr::scalar(&d, Coefficient::i() * Coefficient::symbol(sym::HBAR));
    assert_eq!(e, expected);
    assert_eq!(e.render(), "xh1*ph1 - i*hbar");
}

#[test]
fn ordered_word_is_unchanged() {
    let d = deformed();
    let w = Expr::word(&d, &["xh1", "xh2", "ph2"]).unwrap();
    assert!(w.is_normalized());
    assert_eq!(w.normal_order(), w);
}

#[test]
fn hat_creator_annihilator_identity() {
    let h = hatbose();
    let lhs = Expr::word(&h, &["adj(ah2)", "ah1"]).unwrap();
    let rhs = Expr::word(&h, &["ah1", "adj(ah2)"]).unwrap() - Expr::scalar(&h, hat_mixing());
    assert!(expr_equal(&lhs, &rhs).unwrap());
}

#[test]
fn generator_commutators() {
    let d = deformed();
    let c = commutator(&g(&d, "xh1"), &g(&d, "xh2")).unwrap();
    let xi2 = Coefficient::symbol(sym::XI).pow_int(2).unwrap();
    assert_eq!(c.as_scalar(), Some(Coefficient::i() * xi2 * Coefficient::symbol(sym::THETA)));
    for n in d.generators() {
        assert!(commutator(&g(&d, n), &g(&d, n)).unwrap().is_zero());
    }
}

#[test]
fn mechanical_momenta_in_symmetric_gauge() {
    let u = undeformed();
    let q_c = Coefficient::symbol("q") * Coefficient::symbol("c").inv().unwrap();
    let b = Coefficient::symbol("B3");
    let half_b = &b * &Coefficient::frac(1, 2);
    // A1 = -B3 x2 / 2, A2 = B3 x1 / 2
    let a1 = g(&u, "x2").scale(&-&half_b);
    let a2 = g(&u, "x1").scale(&half_b);
    let p1 = g(&u, "p1") - a1.scale(&q_c);
    let p2 = g(&u, "p2") - a2.scale(&q_c);
    let c = commutator(&p1, &p2).unwrap();
    let expected = Coefficient::i() * Coefficient::symbol(sym::HBAR) * q_c * b;
    assert_eq!(c.as_scalar(), Some(expected));
}

#[test]
fn adjoint_examples() {
    let h = hatbose();
    assert_eq!(g(&h, "ah1").adjoint(), g(&h, "adj(ah1)"));
    let d = deformed();
    let ih = Expr::scalar(&d, Coefficient::i() * Coefficient::symbol(sym::HBAR));
    assert_eq!(ih.adjoint(), -ih);
}

#[test]
fn vacuum_values() {
    let h = hatbose();
    let e = Expr::word(&h, &["ah1", "adj(ah1)"]).unwrap();
    assert_eq!(vacuum_expectation(&e).unwrap(), Coefficient::one());
    let e = Expr::word(&h, &["ah2", "adj(ah1)"]).unwrap();
    assert_eq!(vacuum_expectation(&e).unwrap(), -hat_mixing());
    assert_eq!(vacuum_expectation_by_action(&e).unwrap(), -hat_mixing());
    let d = deformed();
    assert!(matches!(vacuum_expectation(&g(&d, "xh1")), Err(AlgebraError::NoVacuumDeclared(_))));
}

#[test]
fn mismatch_is_reported() {
    let a = g(&deformed(), "xh1");
    let b = g(&undeformed(), "x1");
    assert!(matches!(commutator(&a, &b), Err(AlgebraError::AlgebraMismatch { .. })));
    assert!(matches!(expr_equal(&a, &b), Err(AlgebraError::AlgebraMismatch { .. })));
}

#[test]
fn registration_rejects_inconsistent_adjoint() {
    // [a, adj(a)] = i is not invariant under the adjoint
    let r = AlgebraBuilder::new("bad")
        .generator("adj(a)")
        .generator("a")
        .adjoint("a", "adj(a)")
        .annihilator("a")
        .commutator("a", "adj(a)", Coefficient::i())
        .build();
    assert!(matches!(r, Err(AlgebraError::InvalidAlgebra { .. })));
    let r = AlgebraBuilder::new("bad").generator("a").generator("adj(a)").adjoint("a", "adj(a)").annihilator("a").build();
    assert!(matches!(r, Err(AlgebraError::InvalidAlgebra { .. })));
}

#[test]
fn display_round_trips_through_names() {
    let h = hatbose();
    let e = (g(&h, "adj(ah1)") * g(&h, "ah1")).scale(&Coefficient::frac(-1, 2)) + Expr::identity(&h);
    assert_eq!(e.render(), "-(1/2)*adj(ah1)*ah1 + 1");
}

fn random_word(alg: std::sync::Arc<AlgebraTable>) -> impl Strategy<Value = Expr> {
    let n = alg.len() as u8;
    prop::collection::vec(prop::collection::vec(0..n, 0..=8), 1..4).prop_map(move |ws| {
        Expr::from_terms(&alg, ws.into_iter().enumerate().map(|(k, w)| (Word(w), Coefficient::int(k as i64 + 1))))
    })
}

fn any_algebra() -> impl Strategy<Value = std::sync::Arc<AlgebraTable>> {
    prop::sample::select(ALL.to_vec()).prop_map(|n| lookup(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn confluence((alg, e, seed) in any_algebra().prop_flat_map(|a| (Just(a.clone()), random_word(a), any::<u64>()))) {
        let _ = alg;
        let mut state = seed | 1;
        let shuffled = e.normal_order_with(|d| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            d[(state % d.len() as u64) as usize]
        });
        let last = e.normal_order_with(|d| d[d.len() - 1]);
        prop_assert_eq!(&shuffled, &e.normal_order());
        prop_assert_eq!(&last, &e.normal_order());
        prop_assert!(shuffled.is_normalized());
    }

    #[test]
    fn jacobi((alg, i, j, k) in any_algebra().prop_flat_map(|a| {
        let n = a.len() as u8;
        (Just(a), 0..n, 0..n, 0..n)
    })) {
        let (a, b, c) = (Expr::letter(&alg, i), Expr::letter(&alg, j), Expr::letter(&alg, k));
        let t1 = commutator(&commutator(&a, &b).unwrap(), &c).unwrap();
        let t2 = commutator(&commutator(&b, &c).unwrap(), &a).unwrap();
        let t3 = commutator(&commutator(&c, &a).unwrap(), &b).unwrap();
        prop_assert!((t1 + t2 + t3).normal_order().is_zero());
    }

    #[test]
    fn adjoint_is_an_antihomomorphic_involution(
        (a, b) in any_algebra().prop_flat_map(|a| (random_word(a.clone()), random_word(a)))
    ) {
        prop_assert_eq!(a.adjoint().adjoint(), a.normal_order());
        let lhs = (&a * &b).adjoint();
        let rhs = (&b.adjoint() * &a.adjoint()).normal_order();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vacuum_routes_agree(e in random_word(hatbose())) {
        prop_assert_eq!(vacuum_expectation(&e).unwrap(), vacuum_expectation_by_action(&e).unwrap());
    }
}
