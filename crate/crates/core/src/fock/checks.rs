//! Matrix shadows of the catalog identities.

use crate::algebra::builtin::{self, hat_mixing};
use crate::algebra::{AlgebraTable, Expr};
use crate::coeff::{sym, Coefficient};
use crate::parser::{coeff, parse};
use crate::relations::maps::{bose_in_undeformed, oscillator_hamiltonian, primed_ladders, tilde_phase_space};
use crate::relations::{CheckRecord, CheckStatus};

use super::realize::{realize, Route};
use super::spectrum::{hat_state_gram, oscillator_spectrum, tilde_state_gram};
use super::{commutator_residual, FockConfig, FockError, FockOperator};

/// Id prefix shared by all numeric checks.
pub const NUMERIC_PREFIX: &str = "num_";

/// Buffered residual bound for identities.
pub const TOLERANCE: f64 = 1e-10;
/// Entrywise bound for `realize(e)^dagger = realize(adj(e))`.
pub const HERMITICITY_TOLERANCE: f64 = 1e-12;
/// Bound for labelled eigenvalues against the level formula.
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;

fn record(id: &str, description: &str, value: f64, tol: f64) -> CheckRecord {
    let ok = value.is_finite() && value < tol;
    CheckRecord {
        id: id.into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        anchor: "numeric shadow".into(),
        description: description.into(),
        residual: Some(format!("{value:.3e}")),
        detail: Some(format!("tolerance {tol:.0e}")),
    }
}

fn failed(id: &str, description: &str, e: &FockError) -> CheckRecord {
    let status = match e {
        FockError::RouteUnavailable(_) => CheckStatus::Noted,
        _ => CheckStatus::Fail,
    };
    CheckRecord {
        id: id.into(),
        status,
        anchor: "numeric shadow".into(),
        description: description.into(),
        residual: None,
        detail: Some(e.to_string()),
    }
}

/// Max residual of every commutator against `expected(i, j)`.
fn table_residual(
    ops: &[FockOperator],
    expected: impl Fn(usize, usize) -> Coefficient,
    cfg: &FockConfig,
) -> Result<f64, FockError> {
    let mut worst = 0.0f64;
    for i in 0..ops.len() {
        for j in 0..ops.len() {
            worst = worst.max(commutator_residual(&ops[i], &ops[j], &expected(i, j), cfg)?);
        }
    }
    Ok(worst)
}

fn generators(alg: &std::sync::Arc<AlgebraTable>, cfg: &FockConfig, route: Route) -> Result<Vec<FockOperator>, FockError> {
    alg.generators().iter().map(|g| realize(&Expr::generator(alg, g)?, cfg, route)).collect()
}

fn algebra_table(alg: &std::sync::Arc<AlgebraTable>, cfg: &FockConfig, route: Route) -> Result<f64, FockError> {
    let ops = generators(alg, cfg, route)?;
    table_residual(&ops, |i, j| alg.commutator(i as u8, j as u8), cfg)
}

fn deformed_pairs(names: [&str; 2], cfg: &FockConfig) -> Result<f64, FockError> {
    let d = builtin::deformed();
    let ops = [
        realize(&Expr::generator(&d, &format!("{}1", names[0]))?, cfg, Route::Bopp)?,
        realize(&Expr::generator(&d, &format!("{}2", names[0]))?, cfg, Route::Bopp)?,
        realize(&Expr::generator(&d, &format!("{}1", names[1]))?, cfg, Route::Bopp)?,
        realize(&Expr::generator(&d, &format!("{}2", names[1]))?, cfg, Route::Bopp)?,
    ];
    let table = d.clone();
    let idx = |n: &str| table.lookup(n).expect("generator");
    let names4 = [
        format!("{}1", names[0]),
        format!("{}2", names[0]),
        format!("{}1", names[1]),
        format!("{}2", names[1]),
    ];
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 2..4 {
            let exp = table.commutator(idx(&names4[i]), idx(&names4[j]));
            worst = worst.max(commutator_residual(&ops[i], &ops[j], &exp, cfg)?);
        }
    }
    Ok(worst)
}

fn tilde_phase(cfg: &FockConfig) -> Result<f64, FockError> {
    let (xt, pt) = tilde_phase_space();
    let x = realize(&xt, cfg, Route::Bopp)?;
    let p = realize(&pt, cfg, Route::Bopp)?;
    let (xd, pd) = (x.adjoint(), p.adjoint());
    let cases = [
        (&x, &xd, "xi^2*theta"),
        (&p, &pd, "-xi^2*eta"),
        (&x, &p, "i*hbar"),
        (&xd, &pd, "i*hbar"),
        (&x, &pd, "0"),
        (&xd, &p, "0"),
    ];
    let mut worst = 0.0f64;
    for (a, b, e) in cases {
        worst = worst.max(commutator_residual(a, b, &coeff(e), cfg)?);
    }
    Ok(worst)
}

fn bosonic(ops: &[FockOperator; 2], cfg: &FockConfig) -> Result<f64, FockError> {
    let all = [ops[0].clone(), ops[1].clone(), ops[0].adjoint(), ops[1].adjoint()];
    // a1, a2, adj(a1), adj(a2)
    table_residual(
        &all,
        |i, j| match (i, j) {
            (0, 2) | (1, 3) => Coefficient::one(),
            (2, 0) | (3, 1) => -Coefficient::one(),
            _ => Coefficient::zero(),
        },
        cfg,
    )
}

fn undeformed_ladders(cfg: &FockConfig) -> Result<f64, FockError> {
    let m = bose_in_undeformed(&Coefficient::symbol(sym::C2P));
    let ops = [realize(m.image("a1")?, cfg, Route::Bopp)?, realize(m.image("a2")?, cfg, Route::Bopp)?];
    bosonic(&ops, cfg)
}

fn primed(cfg: &FockConfig) -> Result<f64, FockError> {
    let (ap, _) = primed_ladders(&Coefficient::symbol(sym::C2P));
    let ops = [realize(&ap[0], cfg, Route::Bopp)?, realize(&ap[1], cfg, Route::Bopp)?];
    bosonic(&ops, cfg)
}

fn route_exprs() -> Vec<Expr> {
    let d = builtin::deformed();
    let h = builtin::hatbose();
    let mut v: Vec<Expr> = ["xh1", "xh2", "ph1", "ph2"].iter().map(|g| Expr::generator(&d, g).expect("generator")).collect();
    v.extend(["ah1", "ah2"].iter().map(|g| Expr::generator(&h, g).expect("generator")));
    v.push(oscillator_hamiltonian());
    v
}

fn routes(cfg: &FockConfig) -> Result<f64, FockError> {
    let p = cfg.buffered();
    let mut worst = 0.0f64;
    for e in route_exprs() {
        let a = realize(&e, cfg, Route::Bopp)?;
        let b = realize(&e, cfg, Route::LadderDirect)?;
        worst = worst.max(a.sub(&b)?.max_on(&p));
    }
    Ok(worst)
}

fn hermiticity(cfg: &FockConfig) -> Result<f64, FockError> {
    let mut exprs = route_exprs();
    exprs.push(parse("xh1*ph2*xh2 - i*theta*ph1", "deformed").expect("valid"));
    exprs.push(parse("at1*adj(at2) + at2", "tilde").expect("valid"));
    let mut worst = 0.0f64;
    for e in exprs {
        for route in [Route::Bopp, Route::LadderDirect] {
            let a = match realize(&e, cfg, route) {
                Ok(m) => m.adjoint(),
                Err(FockError::RouteUnavailable(_)) => continue,
                Err(err) => return Err(err),
            };
            let b = realize(&e.adjoint(), cfg, route)?;
            worst = worst.max(a.sub(&b)?.max_abs());
        }
    }
    Ok(worst)
}

fn hat_gram(cfg: &FockConfig) -> Result<f64, FockError> {
    let g = hat_state_gram(cfg, 3)?;
    let z = g.entry((1, 0), (0, 1)).expect("state present");
    let expected = cfg.eval(&hat_mixing())?;
    Ok((z - expected).norm())
}

fn tilde_gram(cfg: &FockConfig) -> Result<f64, FockError> {
    Ok(tilde_state_gram(cfg, 3)?.identity_deviation())
}

type Shadow = fn(&FockConfig) -> Result<f64, FockError>;

const SHADOWS: &[(&str, &str, Shadow, f64)] = &[
    ("num_eq_2_1_xx", "[xh_i, xh_j] on the buffered block", |c| deformed_pairs(["xh", "xh"], c), TOLERANCE),
    ("num_eq_2_1_pp", "[ph_i, ph_j] on the buffered block", |c| deformed_pairs(["ph", "ph"], c), TOLERANCE),
    ("num_eq_2_1_xp", "[xh_i, ph_j] on the buffered block", |c| deformed_pairs(["xh", "ph"], c), TOLERANCE),
    ("num_eq_3_5", "deformed bosonic algebra of the hat ladders built from xh, ph", |c| algebra_table(&builtin::hatbose(), c, Route::Bopp), TOLERANCE),
    ("num_eq_3_8", "tilde bosonic algebra", |c| algebra_table(&builtin::tilde(), c, Route::LadderDirect), TOLERANCE),
    ("num_eq_4_3", "tilde phase-space commutators", tilde_phase, TOLERANCE),
    ("num_eq_5_1", "undeformed ladders built from x, p", undeformed_ladders, TOLERANCE),
    ("num_fn_a_prime", "ladders a'_i are bosonic", primed, TOLERANCE),
    ("num_routes", "Bopp and ladder-direct realizations agree on xh, ph, ah and H", routes, TOLERANCE),
    ("num_hermiticity", "realize(e)^dagger = realize(adj(e))", hermiticity, HERMITICITY_TOLERANCE),
    ("num_hat_gram", "hat (1,0)-(0,1) overlap against the symbolic value", hat_gram, TOLERANCE),
    ("num_tilde_gram", "tilde states are orthonormal, m + n <= 3", tilde_gram, TOLERANCE),
];

fn spectrum_records(cfg: &FockConfig) -> Vec<CheckRecord> {
    let ids = ["num_spectrum_levels", "num_spectrum_ground"];
    let descs = ["labelled eigenvalues against hbar (alpha1 omega n1 + alpha2 omega n2 + omega)", "ground state equals hbar omega"];
    let s = match oscillator_spectrum(cfg) {
        Ok(s) => s,
        Err(e) => return ids.iter().zip(descs).map(|(i, d)| failed(i, d, &e)).collect(),
    };
    if !s.constrained {
        return ids
            .iter()
            .zip(descs)
            .map(|(i, d)| CheckRecord {
                id: (*i).into(),
                status: CheckStatus::Noted,
                anchor: "numeric shadow".into(),
                description: d.into(),
                residual: Some(format!("{:.3e}", s.max_residual())),
                detail: Some("eta is off the oscillator constraint; the level formula is not expected to hold".into()),
            })
            .collect();
    }
    let ground = s.label(0, 0).map_or(f64::INFINITY, |l| l.residual);
    let levels = if s.all_matched() { s.max_residual() } else { f64::INFINITY };
    vec![record(ids[0], descs[0], levels, SPECTRUM_TOLERANCE), record(ids[1], descs[1], ground, TOLERANCE)]
}

/// Every numeric check at this configuration, in a fixed order.
pub fn numeric_checks(cfg: &FockConfig) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = crate::exec::map(cfg.exec, SHADOWS, |(id, desc, f, tol)| match f(cfg) {
        Ok(v) => record(id, desc, v, *tol),
        Err(e) => failed(id, desc, &e),
    });
    out.extend(spectrum_records(cfg));
    out
}
