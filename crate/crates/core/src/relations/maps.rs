//! Substitution maps between the registered algebras, and the constants
//! they are built from.

use std::collections::BTreeMap;

use crate::algebra::builtin::{bose, deformed, hatbose, tilde, undeformed};
use crate::algebra::{Expr, SubstMap};
use crate::coeff::{bindings, sym, Coefficient, Symbol};
use crate::parser::coeff;

fn images(pairs: Vec<(&str, Expr)>) -> Vec<(String, Expr)> {
    pairs.into_iter().map(|(n, e)| (n.to_string(), e)).collect()
}

fn g(alg: &std::sync::Arc<crate::algebra::AlgebraTable>, name: &str) -> Expr {
    Expr::generator(alg, name).expect("built-in generator")
}

/// `theta^(1/2) eta^(1/2)`.
pub fn sqrt_theta_eta() -> Coefficient {
    coeff("theta^(1/2)*eta^(1/2)")
}

/// `xi^2 theta^(1/2) eta^(1/2) / hbar`, the tilde splitting ratio.
pub fn splitting_ratio() -> Coefficient {
    coeff("xi^2*theta^(1/2)*eta^(1/2)/hbar")
}

/// `c2 = (theta/eta)^(1/2)`.
pub fn c2_solved() -> Coefficient {
    coeff("theta^(1/2)*eta^(-1/2)")
}

/// `c1 = (2 hbar c2)^(-1/2)` at the solved `c2`.
pub fn c1_solved() -> Coefficient {
    coeff("2^(-1/2)*hbar^(-1/2)*theta^(-1/4)*eta^(1/4)")
}

/// `alpha1, alpha2 = 1 +- xi^2 (theta eta)^(1/2) / hbar`.
pub fn alpha_bindings() -> BTreeMap<Symbol, Coefficient> {
    let r = splitting_ratio();
    bindings([(sym::ALPHA1, Coefficient::one() + r.clone()), (sym::ALPHA2, Coefficient::one() - r)])
}

/// Bopp shift `xh_i = f (x_i - theta/(2 hbar) eps_ij p_j)`,
/// `ph_i = f (p_i + eta/(2 hbar) eps_ij x_j)` into the undeformed algebra.
pub fn bopp(f: &Coefficient, theta: &Coefficient, eta: &Coefficient) -> SubstMap {
    let u = undeformed();
    let half_hbar = Coefficient::frac(1, 2) * Coefficient::symbol(sym::HBAR).inv().expect("nonzero");
    let t = theta * &half_hbar;
    let e = eta * &half_hbar;
    let m = vec![
        ("xh1", (g(&u, "x1") - g(&u, "p2").scale(&t)).scale(f)),
        ("xh2", (g(&u, "x2") + g(&u, "p1").scale(&t)).scale(f)),
        ("ph1", (g(&u, "p1") + g(&u, "x2").scale(&e)).scale(f)),
        ("ph2", (g(&u, "p2") - g(&u, "x1").scale(&e)).scale(f)),
    ];
    SubstMap::new(&deformed(), &u, images(m)).expect("complete map")
}

/// The Bopp shift with the scaling factor `xi`.
pub fn bopp_standard() -> SubstMap {
    bopp(&Coefficient::symbol(sym::XI), &Coefficient::symbol(sym::THETA), &Coefficient::symbol(sym::ETA))
}

/// The Bopp shift with the scaling factor replaced by 1.
pub fn bopp_unscaled() -> SubstMap {
    bopp(&Coefficient::one(), &Coefficient::symbol(sym::THETA), &Coefficient::symbol(sym::ETA))
}

/// Position and momentum through bosonic ladders with free parameter `c2p`:
/// `x_i = (hbar c2p / 2)^(1/2) (a_i + adj(a_i))`,
/// `p_i = -i (hbar / (2 c2p))^(1/2) (a_i - adj(a_i))`.
pub fn undeformed_in_bose(c2p: &Coefficient) -> SubstMap {
    let b = bose();
    let hbar = Coefficient::symbol(sym::HBAR);
    let cx = (&hbar * c2p * Coefficient::frac(1, 2)).sqrt().expect("monomial c2p");
    let cp = -Coefficient::i() * (&hbar * Coefficient::frac(1, 2) * c2p.inv().expect("nonzero")).sqrt().expect("monomial c2p");
    let mut m = Vec::new();
    for k in ["1", "2"] {
        let a = g(&b, &format!("a{k}"));
        let ad = g(&b, &format!("adj(a{k})"));
        m.push((format!("x{k}"), (&a + &ad).scale(&cx)));
        m.push((format!("p{k}"), (&a - &ad).scale(&cp)));
    }
    SubstMap::new(&undeformed(), &b, m).expect("complete map")
}

/// `a_i = (2 hbar c2p)^(-1/2) (x_i + i c2p p_i)`.
pub fn bose_in_undeformed(c2p: &Coefficient) -> SubstMap {
    let u = undeformed();
    let c1p = c1_for(c2p);
    let ic = Coefficient::i() * c2p.clone();
    let m = vec![
        ("a1", (g(&u, "x1") + g(&u, "p1").scale(&ic)).scale(&c1p)),
        ("a2", (g(&u, "x2") + g(&u, "p2").scale(&ic)).scale(&c1p)),
    ];
    SubstMap::with_adjoints(&bose(), &u, images(m)).expect("complete map")
}

/// `(2 hbar c2)^(-1/2)` for a monomial `c2`.
pub fn c1_for(c2: &Coefficient) -> Coefficient {
    (Coefficient::int(2) * Coefficient::symbol(sym::HBAR) * c2.clone())
        .pow(crate::coeff::Exponent::new(-1, 2))
        .expect("monomial c2")
}

/// `ah_i = c1 (xh_i + i c2 ph_i)`.
pub fn hat_ladder(c1: &Coefficient, c2: &Coefficient) -> SubstMap {
    let d = deformed();
    let ic = Coefficient::i() * c2.clone();
    let m = vec![
        ("ah1", (g(&d, "xh1") + g(&d, "ph1").scale(&ic)).scale(c1)),
        ("ah2", (g(&d, "xh2") + g(&d, "ph2").scale(&ic)).scale(c1)),
    ];
    SubstMap::with_adjoints(&hatbose(), &d, images(m)).expect("complete map")
}

/// Inverse of [`hat_ladder`]: `xh_i = (ah_i + adj(ah_i)) / (2 c1)`,
/// `ph_i = -i (ah_i - adj(ah_i)) / (2 c1 c2)`.
pub fn deformed_in_hat(c1: &Coefficient, c2: &Coefficient) -> SubstMap {
    let h = hatbose();
    let inv2c1 = (Coefficient::int(2) * c1.clone()).inv().expect("nonzero");
    let p = -Coefficient::i() * (Coefficient::int(2) * c1.clone() * c2.clone()).inv().expect("nonzero");
    let mut m = Vec::new();
    for k in ["1", "2"] {
        let a = g(&h, &format!("ah{k}"));
        let ad = g(&h, &format!("adj(ah{k})"));
        m.push((format!("xh{k}"), (&a + &ad).scale(&inv2c1)));
        m.push((format!("ph{k}"), (&a - &ad).scale(&p)));
    }
    SubstMap::new(&deformed(), &h, m).expect("complete map")
}

/// Hat modes through undeformed ones:
/// `ah_i = xi (a_i + (i/(2 hbar)) (theta eta)^(1/2) eps_ij a_j)`.
pub fn hat_in_bose() -> SubstMap {
    let b = bose();
    let xi = Coefficient::symbol(sym::XI);
    let k = coeff("i/(2*hbar)*theta^(1/2)*eta^(1/2)");
    let m = vec![
        ("ah1", (g(&b, "a1") + g(&b, "a2").scale(&k)).scale(&xi)),
        ("ah2", (g(&b, "a2") - g(&b, "a1").scale(&k)).scale(&xi)),
    ];
    SubstMap::with_adjoints(&hatbose(), &b, images(m)).expect("complete map")
}

/// `at1 = (2 alpha1)^(-1/2) (ah1 + i ah2)`, `at2 = (2 alpha2)^(-1/2) (ah1 - i ah2)`.
pub fn tilde_in_hat() -> SubstMap {
    let h = hatbose();
    let i = Coefficient::i();
    let m = vec![
        ("at1", (g(&h, "ah1") + g(&h, "ah2").scale(&i)).scale(&coeff("(2*alpha1)^(-1/2)"))),
        ("at2", (g(&h, "ah1") - g(&h, "ah2").scale(&i)).scale(&coeff("(2*alpha2)^(-1/2)"))),
    ];
    SubstMap::with_adjoints(&tilde(), &h, images(m)).expect("complete map")
}

/// Inverse of [`tilde_in_hat`].
pub fn hat_in_tilde() -> SubstMap {
    let t = tilde();
    let s1 = coeff("(2*alpha1)^(1/2)");
    let s2 = coeff("(2*alpha2)^(1/2)");
    let half = Coefficient::frac(1, 2);
    let m = vec![
        ("ah1", (g(&t, "at1").scale(&s1) + g(&t, "at2").scale(&s2)).scale(&half)),
        ("ah2", (g(&t, "at1").scale(&s1) - g(&t, "at2").scale(&s2)).scale(&(half * -Coefficient::i()))),
    ];
    SubstMap::with_adjoints(&hatbose(), &t, images(m)).expect("complete map")
}

/// `(b1, b2) = (ah1 + i ah2, ah1 - i ah2)`: the tilde modes without their
/// normalization `(2 alpha_i)^(-1/2)`.
pub fn unnormalized_tilde() -> [Expr; 2] {
    let h = hatbose();
    let i = Coefficient::i();
    [g(&h, "ah1") + g(&h, "ah2").scale(&i), g(&h, "ah1") - g(&h, "ah2").scale(&i)]
}

/// `xt = (xh1 + i xh2)/2^(1/2)`, `pt = (ph1 - i ph2)/2^(1/2)`.
pub fn tilde_phase_space() -> (Expr, Expr) {
    let d = deformed();
    let r = coeff("2^(-1/2)");
    let i = Coefficient::i();
    let xt = (g(&d, "xh1") + g(&d, "xh2").scale(&i)).scale(&r);
    let pt = (g(&d, "ph1") - g(&d, "ph2").scale(&i)).scale(&r);
    (xt, pt)
}

/// `p_i p_i / (2 mu) + mu omega^2 x_i x_i / 2` over the deformed algebra.
pub fn oscillator_hamiltonian() -> Expr {
    let d = deformed();
    let kin = coeff("1/(2*mu)");
    let pot = coeff("mu*omega^2/2");
    let p2 = g(&d, "ph1") * g(&d, "ph1") + g(&d, "ph2") * g(&d, "ph2");
    let x2 = g(&d, "xh1") * g(&d, "xh1") + g(&d, "xh2") * g(&d, "xh2");
    (p2.scale(&kin) + x2.scale(&pot)).normal_order()
}

/// The same Hamiltonian over the undeformed algebra.
pub fn undeformed_oscillator() -> Expr {
    let u = undeformed();
    let kin = coeff("1/(2*mu)");
    let pot = coeff("mu*omega^2/2");
    let p2 = g(&u, "p1") * g(&u, "p1") + g(&u, "p2") * g(&u, "p2");
    let x2 = g(&u, "x1") * g(&u, "x1") + g(&u, "x2") * g(&u, "x2");
    (p2.scale(&kin) + x2.scale(&pot)).normal_order()
}

/// Returns `(a', a'')` images over the deformed algebra: the ladder
/// operators that are bosonic for any `theta, eta`, and their `eta = 0`
/// form.
pub fn primed_ladders(c2p: &Coefficient) -> ([Expr; 2], [Expr; 2]) {
    let d = deformed();
    let i = Coefficient::i();
    let hbar_inv2 = coeff("1/(2*hbar)");
    let ce = c2p * &Coefficient::symbol(sym::ETA) * hbar_inv2.clone();
    let th = Coefficient::symbol(sym::THETA) * hbar_inv2;
    // nu = xi (1 - theta eta / (4 hbar^2))
    let one_minus = coeff("1 - theta*eta/(4*hbar^2)");
    let nu_inv = Coefficient::symbol(sym::XI).inv().expect("nonzero") * one_minus.inv().expect("nonzero");
    let pre = c1_for(c2p);
    let ic = &i * c2p;
    let x = |k: &str| g(&d, &format!("xh{k}"));
    let p = |k: &str| g(&d, &format!("ph{k}"));
    let a1 = x("1") - x("2").scale(&(&i * &ce)) + p("1").scale(&ic) + p("2").scale(&th);
    let a2 = x("2") + x("1").scale(&(&i * &ce)) + p("2").scale(&ic) - p("1").scale(&th);
    let s = &pre * &nu_inv;
    let primed = [a1.scale(&s), a2.scale(&s)];
    let b1 = x("1") + p("1").scale(&ic) + p("2").scale(&th);
    let b2 = x("2") + p("2").scale(&ic) - p("1").scale(&th);
    (primed, [b1.scale(&pre), b2.scale(&pre)])
}
