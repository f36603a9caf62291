//! Fock states as creator polynomials acting on the vacuum.
//!
//! A state is an [`Expr`] whose words contain only creators; it stands for
//! that polynomial applied to `|0>`.

use crate::algebra::{Expr, Word};
use crate::coeff::Coefficient;

/// `e|0>`: normal-orders and drops every word that still contains an
/// annihilator (those end in one and kill the vacuum).
pub fn on_vacuum(e: &Expr) -> Expr {
    let alg = e.algebra().clone();
    let n = e.normal_order();
    Expr::from_terms(
        &alg,
        n.terms()
            .filter(|(w, _)| w.letters().iter().all(|&g| alg.is_creator(g)))
            .map(|(w, c)| (w.clone(), c.clone())),
    )
}

/// `op` applied to a state.
pub fn apply(op: &Expr, state: &Expr) -> Expr {
    on_vacuum(&(op * state))
}

/// `c1^m c2^n |0>` for creator expressions `c1`, `c2`.
pub fn creator_state(c1: &Expr, c2: &Expr, m: usize, n: usize) -> Expr {
    let alg = c1.algebra();
    let mut s = Expr::identity(alg);
    for _ in 0..n {
        s = apply(c2, &s);
    }
    for _ in 0..m {
        s = apply(c1, &s);
    }
    s
}

/// `<bra|ket>` for two states, by letting the adjoint of each bra word
/// act on the ket one annihilator at a time.
pub fn overlap(bra: &Expr, ket: &Expr) -> Coefficient {
    let alg = ket.algebra().clone();
    let mut total = Coefficient::zero();
    for (w, c) in bra.terms() {
        let mut s = ket.clone();
        // (g1 g2 .. gk)^dagger = gk^dagger .. g1^dagger; g1^dagger acts first
        for &g in w.letters() {
            let ann = Expr::letter(&alg, alg.adjoint_of(g));
            s = apply(&ann, &s);
            if s.is_zero() {
                break;
            }
        }
        total = &total + &(&c.conj() * &s.coefficient_of(&Word::identity()));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::{bose, hat_mixing, hatbose};
    use crate::algebra::{inner_product, Expr};

    #[test]
    fn bosonic_norms() {
        let b = bose();
        let c1 = Expr::generator(&b, "adj(a1)").unwrap();
        let c2 = Expr::generator(&b, "adj(a2)").unwrap();
        let s = creator_state(&c1, &c2, 2, 1);
        assert_eq!(overlap(&s, &s), Coefficient::int(2));
        assert!(overlap(&creator_state(&c1, &c2, 1, 0), &creator_state(&c1, &c2, 0, 1)).is_zero());
    }

    #[test]
    fn agrees_with_vacuum_inner_product() {
        let h = hatbose();
        let c1 = Expr::generator(&h, "adj(ah1)").unwrap();
        let c2 = Expr::generator(&h, "adj(ah2)").unwrap();
        let p = creator_state(&c1, &c2, 1, 0);
        let q = creator_state(&c1, &c2, 0, 1);
        assert_eq!(overlap(&p, &q), hat_mixing());
        assert_eq!(overlap(&p, &q), inner_product(&p, &q).unwrap());
        let p = creator_state(&c1, &c2, 2, 1);
        let q = creator_state(&c1, &c2, 1, 2);
        assert_eq!(overlap(&p, &q), inner_product(&p, &q).unwrap());
    }
}
