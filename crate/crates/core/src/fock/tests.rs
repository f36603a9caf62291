use super::*;
use crate::algebra::builtin::{self, hat_mixing};
use crate::algebra::{AlgebraBuilder, Expr};
use crate::parser::{coeff, parse};
use crate::relations::maps::tilde_phase_space;

fn cfg(n: usize, theta: f64, eta: f64) -> FockConfig {
    FockConfig::new(n, 2, Params { theta, eta, ..Params::default() }).unwrap()
}

fn c(re: f64, im: f64) -> c64 {
    c64::new(re, im)
}

#[test]
fn ladder_matrices() {
    let k = cfg(6, 0.0, 0.0);
    let (a1, a1d, a2, a2d) = build_ladders(&k);
    assert!((a1.mul(&a1d).unwrap().get(0, 0) - c(1.0, 0.0)).norm() < 1e-15);
    let comm = a1.commutator(&a1d).unwrap();
    for i in 0..k.dim() {
        let (n1, _) = k.levels(i);
        let want = if n1 <= k.n - 2 { 1.0 } else { -((k.n - 1) as f64) };
        assert!((comm.get(i, i) - c(want, 0.0)).norm() < 1e-12, "{i}");
    }
    assert_eq!(a1.commutator(&a2).unwrap().max_abs(), 0.0);
    assert!(a2d.sub(&a2.adjoint()).unwrap().max_abs() == 0.0);
}

#[test]
fn realized_ladders_match_built_ones() {
    let k = cfg(6, 0.1, 0.1);
    let b = builtin::bose();
    let (a1, _, _, a2d) = build_ladders(&k);
    let r1 = realize_bose(&Expr::generator(&b, "a1").unwrap(), &k).unwrap();
    let r2 = realize_bose(&Expr::generator(&b, "adj(a2)").unwrap(), &k).unwrap();
    assert_eq!(r1.sub(&a1).unwrap().max_abs(), 0.0);
    assert_eq!(r2.sub(&a2d).unwrap().max_abs(), 0.0);
}

#[test]
fn commutative_position() {
    let k = cfg(8, 0.0, 0.0);
    let d = builtin::deformed();
    let x = realize(&Expr::generator(&d, "xh1").unwrap(), &k, Route::Bopp).unwrap();
    let (a1, a1d, _, _) = build_ladders(&k);
    let c2 = 1.0 / (k.params.mu * k.params.omega);
    let want = a1.add(&a1d).unwrap().scale(c((k.params.hbar * c2 / 2.0).sqrt(), 0.0));
    assert!(x.sub(&want).unwrap().max_abs() < 1e-14);
}

#[test]
fn position_commutator_on_buffered_block() {
    let k = cfg(20, 0.1, 0.1);
    let e = parse("comm(xh1, xh2)", "deformed").unwrap();
    let m = realize(&e, &k, Route::Bopp).unwrap();
    let z = k.eval(&coeff("i*xi^2*theta")).unwrap();
    let dev = m.sub(&FockOperator::identity(k.n).scale(z)).unwrap().max_on(&k.buffered());
    assert!(dev < 1e-10, "{dev}");
    let d = builtin::deformed();
    let x1 = realize(&Expr::generator(&d, "xh1").unwrap(), &k, Route::Bopp).unwrap();
    let x2 = realize(&Expr::generator(&d, "xh2").unwrap(), &k, Route::Bopp).unwrap();
    assert!(commutator_residual(&x1, &x2, &coeff("i*xi^2*theta"), &k).unwrap() < 1e-10);
}

#[test]
fn hat_ladder_routes_agree() {
    let k = cfg(20, 0.1, 0.1);
    let h = builtin::hatbose();
    let a = Expr::generator(&h, "ah1").unwrap();
    let x = realize(&a, &k, Route::Bopp).unwrap();
    let y = realize(&a, &k, Route::LadderDirect).unwrap();
    assert!(x.sub(&y).unwrap().max_on(&k.buffered()) < 1e-10);
}

#[test]
fn residuals_of_known_commutators() {
    let k = cfg(20, 0.1, 0.1);
    let h = builtin::hatbose();
    let a1 = realize(&Expr::generator(&h, "ah1").unwrap(), &k, Route::Bopp).unwrap();
    let a2d = realize(&Expr::generator(&h, "adj(ah2)").unwrap(), &k, Route::Bopp).unwrap();
    assert_eq!(commutator_residual(&a1, &a1, &Coefficient::zero(), &k).unwrap(), 0.0);
    assert!(commutator_residual(&a1, &a2d, &hat_mixing(), &k).unwrap() < 1e-10);
    let (xt, pt) = tilde_phase_space();
    let x = realize(&xt, &k, Route::Bopp).unwrap();
    let pd = realize(&pt, &k, Route::Bopp).unwrap().adjoint();
    assert!(commutator_residual(&x, &pd, &Coefficient::zero(), &k).unwrap() < 1e-10);
}

#[test]
fn residual_shrinks_with_buffer() {
    let mut last = f64::INFINITY;
    for b in 1..=6 {
        let k = FockConfig::new(10, b, Params::default()).unwrap();
        let h = builtin::hatbose();
        let n1 = parse("adj(ah1)*ah1", "hatbose").unwrap();
        let a = realize(&n1, &k, Route::Bopp).unwrap();
        let x = realize(&Expr::generator(&h, "adj(ah1)").unwrap(), &k, Route::Bopp).unwrap();
        let r = commutator_residual(&a, &x, &Coefficient::zero(), &k).unwrap();
        assert!(r <= last);
        last = r;
    }
}

#[test]
fn commutative_spectrum() {
    let k = FockConfig::new(12, 2, Params { theta: 0.0, eta: 0.0, ..Params::default() }).unwrap();
    let s = oscillator_spectrum(&k).unwrap();
    assert_eq!(&s.eigenvalues[..6].iter().map(|v| v.round() as i64).collect::<Vec<_>>(), &[1, 2, 2, 3, 3, 3]);
    assert!(s.all_matched());
    assert!(s.max_residual() < 1e-12, "{}", s.max_residual());
}

#[test]
fn deformed_spectrum() {
    let k = cfg(20, 0.1, 0.1);
    let s = oscillator_spectrum(&k).unwrap();
    assert!(s.constrained && s.all_matched());
    assert!((s.label(0, 0).unwrap().lambda - 1.0).abs() < 1e-10);
    let e10 = s.label(1, 0).unwrap().lambda;
    let e01 = s.label(0, 1).unwrap().lambda;
    assert!(e10 > e01);
    let xi2 = 1.0 / (1.0 + 0.01 / 4.0);
    assert!((e10 - e01 - 2.0 * xi2 * 0.1).abs() < 1e-10);
    assert!((e10 - e01 - 0.199_501_246_882_793).abs() < 1e-12);
    assert!(s.route_difference.unwrap() < 1e-10);
    assert!(s.to_csv().starts_with("n1,n2,lambda,formula,residual\n0,0,"));
}

#[test]
fn off_constraint_is_flagged() {
    let k = cfg(12, 0.1, 0.3);
    let s = oscillator_spectrum(&k).unwrap();
    assert!(!s.constrained);
}

#[test]
fn hat_and_tilde_grams() {
    let k = cfg(20, 0.1, 0.1);
    let g = hat_state_gram(&k, 3).unwrap();
    let z = g.entry((1, 0), (0, 1)).unwrap();
    assert!((z.norm() - 0.099_750_623_441_396_5).abs() < 1e-10, "{z}");
    assert!(z.im > 0.0);
    assert!(tilde_state_gram(&k, 3).unwrap().identity_deviation() < 1e-10);
    let flat = cfg(20, 0.0, 0.0);
    assert!(hat_state_gram(&flat, 3).unwrap().identity_deviation() < 1e-12);
}

#[test]
fn numeric_checks_pass_at_defaults() {
    let k = cfg(20, 0.1, 0.1);
    let r = numeric_checks(&k);
    let bad: Vec<_> = r.iter().filter(|x| !x.passed()).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(r.iter().all(|x| x.id.starts_with(NUMERIC_PREFIX)));
}

#[test]
fn sequential_and_parallel_agree() {
    let k = cfg(10, 0.1, 0.1);
    let h = crate::relations::maps::oscillator_hamiltonian();
    let a = realize(&h, &k.with_exec(crate::exec::Execution::Sequential), Route::Bopp).unwrap();
    let b = realize(&h, &k.with_exec(crate::exec::Execution::Parallel), Route::Bopp).unwrap();
    assert_eq!(a.sub(&b).unwrap().max_abs(), 0.0);
}

#[test]
fn invalid_configurations() {
    assert!(matches!(FockConfig::new(3, 1, Params::default()), Err(FockError::InvalidConfig(_))));
    assert!(matches!(FockConfig::new(8, 0, Params::default()), Err(FockError::InvalidConfig(_))));
    assert!(matches!(FockConfig::new(8, 7, Params::default()), Err(FockError::InvalidConfig(_))));
    let bad = Params { hbar: f64::NAN, ..Params::default() };
    assert!(matches!(FockConfig::new(8, 2, bad), Err(FockError::InvalidConfig(_))));
    let neg = Params { theta: -0.1, ..Params::default() };
    assert!(matches!(FockConfig::new(8, 2, neg), Err(FockError::InvalidConfig(_))));
}

#[test]
fn unreachable_and_unbound() {
    let k = cfg(6, 0.1, 0.1);
    let alg = AlgebraBuilder::new("custom").generator("z").build().unwrap();
    let z = Expr::generator(&alg, "z").unwrap();
    assert!(matches!(realize(&z, &k, Route::Bopp), Err(FockError::UnreachableAlgebra(_))));
    let u = builtin::undeformed();
    let e = Expr::scalar(&u, coeff("B3"));
    assert!(matches!(realize(&e, &k, Route::Bopp), Err(FockError::Coeff(_))));
}

#[test]
fn hat_routes_need_both_deformations() {
    for (theta, eta) in [(0.0, 0.1), (0.1, 0.0)] {
        let k = cfg(8, theta, eta);
        let h = builtin::hatbose();
        let a = Expr::generator(&h, "ah1").unwrap();
        assert!(matches!(realize(&a, &k, Route::Bopp), Err(FockError::RouteUnavailable(_))));
        let x = parse("xh1", "deformed").unwrap();
        assert!(realize(&x, &k, Route::Bopp).is_ok());
        assert!(matches!(realize(&x, &k, Route::LadderDirect), Err(FockError::RouteUnavailable(_))));
        let s = oscillator_spectrum(&k).unwrap();
        assert!(s.route_difference.is_none());
        let r = numeric_checks(&k);
        assert!(r.iter().all(|x| x.passed()), "{r:#?}");
        let noted = r.iter().find(|x| x.id == "num_eq_3_5").unwrap();
        assert_eq!(noted.status, crate::relations::CheckStatus::Noted);
    }
}

#[test]
fn export_is_row_major() {
    let k = cfg(4, 0.0, 0.0);
    let (a1, _, _, _) = build_ladders(&k);
    let text = a1.export();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 16);
    let first: Vec<&str> = rows[0].split(',').collect();
    assert_eq!(first.len(), 16);
    // <0,0| a1 |1,0> = 1 sits in column index(1,0) = 4
    assert!(first[4].starts_with("1.0000000000000000e0 "));
}
