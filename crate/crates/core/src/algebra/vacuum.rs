use std::collections::BTreeMap;

use crate::coeff::Coefficient;

use super::expr::{Expr, Word};
use super::AlgebraError;

fn require_vacuum(e: &Expr) -> Result<(), AlgebraError> {
    if e.algebra().has_vacuum() {
        Ok(())
    } else {
        Err(AlgebraError::NoVacuumDeclared(e.algebra().name().to_string()))
    }
}

/// `<0|e|0>`: the identity coefficient of the normal-ordered form. With
/// creators ordered before annihilators, every other normal-ordered word
/// starts with a creator or ends with an annihilator.
pub fn vacuum_expectation(e: &Expr) -> Result<Coefficient, AlgebraError> {
    require_vacuum(e)?;
    Ok(e.normal_order().identity_coefficient())
}

/// `<0|e|0>` computed by letting each word act on the vacuum from the
/// right. Annihilators are pushed through the creators already applied
/// using only the commutators, so this does not rely on normal ordering of
/// mixed words.
pub fn vacuum_expectation_by_action(e: &Expr) -> Result<Coefficient, AlgebraError> {
    require_vacuum(e)?;
    let alg = e.algebra();
    let mut total = Coefficient::zero();
    for (w, c) in e.terms() {
        // state: sum of creator words applied to |0>
        let mut state: BTreeMap<Vec<u8>, Coefficient> = BTreeMap::from([(Vec::new(), c.clone())]);
        for &g in w.letters().iter().rev() {
            let mut next: BTreeMap<Vec<u8>, Coefficient> = BTreeMap::new();
            let mut push = |k: Vec<u8>, v: Coefficient| {
                if v.is_zero() {
                    return;
                }
                let slot = next.entry(k).or_insert_with(Coefficient::zero);
                *slot = &*slot + &v;
            };
            for (word, v) in &state {
                if alg.is_annihilator(g) {
                    // g c_1..c_k|0> = sum_j [g, c_j] c_1..^c_j..c_k|0>
                    for j in 0..word.len() {
                        let z = alg.commutator(g, word[j]);
                        if z.is_zero() {
                            continue;
                        }
                        let mut rest = word.clone();
                        rest.remove(j);
                        push(rest, v * &z);
                    }
                } else {
                    let mut grown = Vec::with_capacity(word.len() + 1);
                    grown.push(g);
                    grown.extend_from_slice(word);
                    push(grown, v.clone());
                }
            }
            state = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        if let Some(v) = state.get(&Vec::new()) {
            total = &total + v;
        }
    }
    Ok(total)
}

/// `<p|q> = <0| p^dagger q |0>` for states `p|0>`, `q|0>`.
pub fn inner_product(p: &Expr, q: &Expr) -> Result<Coefficient, AlgebraError> {
    vacuum_expectation(&p.adjoint().checked_mul(q)?)
}

/// Unnormalized two-mode state `(c1)^m (c2)^n |0>` as a creator word.
pub fn fock_word(e_c1: u8, e_c2: u8, m: usize, n: usize) -> Word {
    let mut v = vec![e_c1; m];
    v.extend(std::iter::repeat_n(e_c2, n));
    Word(v)
}
