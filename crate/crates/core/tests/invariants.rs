use proptest::prelude::*;

use ncweyl::algebra::{builtin, Expr, Word};
use ncweyl::coeff::{bindings, sym, Coefficient};
use ncweyl::constraint::{fix_gamma_oscillator, SystemSpec};
use ncweyl::exec::Execution;
use ncweyl::fock::{numeric_checks, oscillator_spectrum, realize, FockConfig, Params, Route};
use ncweyl::parser::parse_coefficient;
use ncweyl::relations::maps::c2_solved;
use ncweyl::relations::{run_catalog, CheckStatus};

fn c(t: &str) -> Coefficient {
    parse_coefficient(t).unwrap()
}

#[test]
fn c2_matches_c2_prime_on_the_constraint() {
    let r = fix_gamma_oscillator().unwrap();
    let on = bindings([(sym::ETA, &r.k * &Coefficient::symbol(sym::THETA))]);
    let c2 = c2_solved().subst(&on).unwrap();
    assert!((&c2 - &r.c2_prime).is_zero(), "{}", c2.render());
}

#[test]
fn theta_over_eta_is_theta_free() {
    let r = fix_gamma_oscillator().unwrap();
    let theta = Coefficient::symbol(sym::THETA);
    let ratio = theta.div(&(&r.k * &theta)).unwrap();
    assert!(!ratio.symbols().iter().any(|s| s.name() == sym::THETA));
    assert!((&ratio - &r.k.inv().unwrap()).is_zero());
    assert_eq!(SystemSpec::oscillator().dimension_of(&ratio).unwrap(), ncweyl::constraint::dim(-2, 0, 2));
}

#[test]
fn catalog_independent_of_execution() {
    assert_eq!(run_catalog(None, Execution::Sequential), run_catalog(None, Execution::Parallel));
    assert!(run_catalog(None, Execution::Sequential).iter().all(|r| r.status != CheckStatus::Fail));
}

fn deformed_expr() -> impl Strategy<Value = Expr> {
    let alg = builtin::deformed();
    proptest::collection::vec((proptest::collection::vec(0u8..4, 0..=3), -3i64..=3, any::<bool>()), 1..=4).prop_map(
        move |ts| {
            let mut e = Expr::zero(&alg);
            for (w, n, imag) in ts {
                let mut z = Coefficient::int(n);
                if imag {
                    z = z * c("i*theta");
                }
                e = e + Expr::from_terms(&alg, [(Word(w), z)]);
            }
            e
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn shadows_hold_across_parameters(theta in 0.0f64..0.5, eta in 0.0f64..0.5) {
        let cfg = FockConfig::new(12, 2, Params { theta, eta, ..Params::default() }).unwrap();
        for r in numeric_checks(&cfg) {
            prop_assert!(r.status != CheckStatus::Fail, "{:?}", r);
        }
    }

    #[test]
    fn hermiticity(e in deformed_expr(), theta in 0.0f64..0.5, eta in 0.0f64..0.5) {
        let cfg = FockConfig::new(8, 2, Params { theta, eta, ..Params::default() }).unwrap();
        for route in [Route::Bopp, Route::LadderDirect] {
            let a = realize(&e, &cfg, route).unwrap().adjoint();
            let b = realize(&e.adjoint(), &cfg, route).unwrap();
            prop_assert!(a.sub(&b).unwrap().max_abs() < 1e-12);
        }
    }

    #[test]
    fn zero_point_is_unshifted(theta in 0.0f64..0.3, mu in 0.5f64..2.0, omega in 0.5f64..2.0) {
        let p = Params::on_constraint(1.0, theta, mu, omega);
        prop_assume!(p.splitting_ratio() < 0.5);
        let cfg = FockConfig::new(16, 2, p).unwrap();
        let s = oscillator_spectrum(&cfg).unwrap();
        prop_assert!((s.eigenvalues[0] - p.hbar * p.omega).abs() < 1e-10, "{}", s.eigenvalues[0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 3, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn spectrum_scaling(theta in 0.0f64..0.1) {
        let cfg = FockConfig::new(40, 2, Params::on_constraint(1.0, theta, 1.0, 1.0)).unwrap();
        let s = oscillator_spectrum(&cfg).unwrap();
        prop_assert!(s.all_matched());
        prop_assert!(s.max_residual() < 1e-8, "{}", s.max_residual());
    }
}
