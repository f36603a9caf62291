//! From symbolic expressions to matrices.

use std::sync::OnceLock;

use faer::{c64, Mat};

use crate::algebra::builtin::{self, BOSE, DEFORMED, HATBOSE, TILDE, UNDEFORMED};
use crate::algebra::{substitute, Expr, SubstMap};
use crate::coeff::{sym, Coefficient};
use crate::exec;
use crate::relations::maps::{
    bopp_standard, deformed_in_hat, hat_in_bose, hat_ladder, tilde_in_hat, undeformed_in_bose,
};

use super::{FockConfig, FockError, FockOperator};

/// How deformed objects reach the undeformed ladders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Through the Bopp shift and `x, p` in terms of `a, adj(a)` with `c2'`.
    Bopp,
    /// Through the inverse hat ladders and the hat modes in terms of `a`.
    LadderDirect,
}

struct Chains {
    undeformed: SubstMap,
    deformed: [SubstMap; 2],
    hatbose: [SubstMap; 2],
    tilde: [SubstMap; 2],
}

fn chains() -> &'static Chains {
    static C: OnceLock<Chains> = OnceLock::new();
    C.get_or_init(|| {
        let (c1, c2) = (Coefficient::symbol(sym::C1), Coefficient::symbol(sym::C2));
        let undeformed = undeformed_in_bose(&Coefficient::symbol(sym::C2P));
        let compose = |a: &SubstMap, b: &SubstMap| a.then(b).expect("composable built-in maps");
        let d_bopp = compose(&bopp_standard(), &undeformed);
        let d_ladder = compose(&deformed_in_hat(&c1, &c2), &hat_in_bose());
        let h_bopp = compose(&hat_ladder(&c1, &c2), &d_bopp);
        let h_ladder = hat_in_bose();
        let t_bopp = compose(&tilde_in_hat(), &h_bopp);
        let t_ladder = compose(&tilde_in_hat(), &h_ladder);
        Chains { undeformed, deformed: [d_bopp, d_ladder], hatbose: [h_bopp, h_ladder], tilde: [t_bopp, t_ladder] }
    })
}

/// `e` rewritten over the undeformed bosonic algebra, still symbolic.
pub fn bose_image(e: &Expr, route: Route) -> Result<Expr, FockError> {
    let k = match route {
        Route::Bopp => 0,
        Route::LadderDirect => 1,
    };
    let c = chains();
    let name = e.algebra().name();
    let map = match name {
        BOSE if e.algebra() == &builtin::bose() => return Ok(e.normal_order()),
        UNDEFORMED => &c.undeformed,
        DEFORMED => &c.deformed[k],
        HATBOSE => &c.hatbose[k],
        TILDE => &c.tilde[k],
        _ => return Err(FockError::UnreachableAlgebra(name.into())),
    };
    if e.algebra() != map.source() {
        return Err(FockError::UnreachableAlgebra(name.into()));
    }
    Ok(substitute(e, map)?)
}

fn needs_hat_ladders(e: &Expr, route: Route) -> bool {
    match e.algebra().name() {
        HATBOSE | TILDE => true,
        DEFORMED => route == Route::LadderDirect,
        _ => false,
    }
}

/// Matrix of an expression over the undeformed bosonic algebra: each word
/// is the product of the truncated ladder matrices.
pub fn realize_bose(e: &Expr, cfg: &FockConfig) -> Result<FockOperator, FockError> {
    let alg = e.algebra();
    if alg != &builtin::bose() {
        return Err(FockError::UnreachableAlgebra(alg.name().into()));
    }
    // (mode, raises) per generator letter
    let kind: Vec<(usize, bool)> = (0..alg.len() as u8)
        .map(|g| {
            let name = alg.generator_name(g);
            let mode = if name.contains('1') { 0 } else { 1 };
            (mode, alg.is_creator(g))
        })
        .collect();
    let terms: Vec<(Vec<u8>, c64)> = e
        .eval_coefficients(&cfg.params.bindings())?
        .into_iter()
        .map(|(w, z)| (w.letters().to_vec(), z))
        .collect();
    let n = cfg.n as i64;
    let cols = exec::map_range(cfg.exec, cfg.dim(), |k| {
        let (a, b) = cfg.levels(k);
        let mut col = vec![c64::new(0.0, 0.0); cfg.dim()];
        'terms: for (w, z) in &terms {
            let mut lv = [a as i64, b as i64];
            let mut amp = *z;
            for &g in w.iter().rev() {
                let (mode, up) = kind[g as usize];
                if up {
                    lv[mode] += 1;
                    if lv[mode] >= n {
                        continue 'terms;
                    }
                    amp *= (lv[mode] as f64).sqrt();
                } else {
                    if lv[mode] == 0 {
                        continue 'terms;
                    }
                    amp *= (lv[mode] as f64).sqrt();
                    lv[mode] -= 1;
                }
            }
            col[cfg.index(lv[0] as usize, lv[1] as usize)] += amp;
        }
        col
    });
    Ok(FockOperator { n: cfg.n, matrix: Mat::from_fn(cfg.dim(), cfg.dim(), |i, j| cols[j][i]) })
}

/// Matrix of `e` via the chosen route.
pub fn realize(e: &Expr, cfg: &FockConfig, route: Route) -> Result<FockOperator, FockError> {
    if !cfg.params.hat_ladders_exist() && needs_hat_ladders(e, route) {
        return Err(FockError::RouteUnavailable(format!(
            "algebra `{}` via {route:?} needs hat ladders, which do not exist when exactly one of theta, eta is zero",
            e.algebra().name()
        )));
    }
    realize_bose(&bose_image(e, route)?, cfg)
}
