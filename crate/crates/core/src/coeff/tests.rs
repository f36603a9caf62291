use super::*;
use proptest::prelude::*;

fn s(n: &str) -> Coefficient {
    Coefficient::symbol(n)
}

fn half(n: &str) -> Coefficient {
    Coefficient::symbol_pow(n, 1, 2)
}

#[test]
fn renders_deformation_constant() {
    let c = Coefficient::i() * s("xi").pow_int(2).unwrap() * half("theta") * half("eta")
        * s("hbar").inv().unwrap();
    assert_eq!(c.render(), "(i/hbar)*xi^2*theta^(1/2)*eta^(1/2)");
    assert_eq!((-c).render(), "-(i/hbar)*xi^2*theta^(1/2)*eta^(1/2)");
    assert_eq!((Coefficient::i() * s("hbar")).render(), "i*hbar");
    assert_eq!(Coefficient::zero().render(), "0");
}

#[test]
fn fraction_renders_with_parentheses() {
    let d = Coefficient::one() + s("theta");
    let c = Coefficient::one().div(&d).unwrap();
    assert_eq!(c.render(), "(1)/(theta + 1)");
}

#[test]
fn sqrt_two_is_exact() {
    let r = Coefficient::int(2).sqrt().unwrap();
    assert_eq!(&r * &r, Coefficient::int(2));
    let inv = Coefficient::int(2).pow(Exponent::new(-1, 2)).unwrap();
    assert_eq!(&inv * &r, Coefficient::one());
    assert_eq!(inv.render(), "(1/2)*2^(1/2)");
}

#[test]
fn xi_reduction_of_even_power() {
    // xi^2 (1 + theta eta / (4 hbar^2)) = 1
    let d = Coefficient::one() + s("theta") * s("eta") * Coefficient::frac(1, 4) * s("hbar").pow_int(-2).unwrap();
    let e = s("xi").pow_int(2).unwrap() * d;
    assert_eq!(e.xi_reduce().unwrap(), Coefficient::one());
}

#[test]
fn xi_reduction_reports_odd_power() {
    let e = s("xi").pow_int(3).unwrap();
    match e.xi_reduce() {
        Err(CoeffError::OddXiPower { reduced }) => {
            let x = s("xi").xi_reduced();
            assert_eq!(x, s("xi"));
            assert!(reduced.contains(&Symbol::new("xi")));
            assert!(reduced.contains(&Symbol::new("theta")));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn substitution_errors() {
    let e = half("alpha1");
    let b = bindings([("alpha1", Coefficient::one() + s("theta"))]);
    assert!(matches!(e.subst(&b), Err(CoeffError::FractionalPowerOfSum { .. })));
    let e = s("theta").inv().unwrap();
    let b = bindings([("theta", Coefficient::zero())]);
    assert_eq!(e.subst(&b), Err(CoeffError::DivisionByZero));
    let b = bindings([("theta", Coefficient::zero())]);
    assert_eq!(half("theta").subst(&b).unwrap(), Coefficient::zero());
}

#[test]
fn monomial_binding_distributes_over_radicals() {
    // eta -> mu^2 omega^2 theta inside sqrt(theta eta)
    let e = half("theta") * half("eta");
    let b = bindings([("eta", s("mu").pow_int(2).unwrap() * s("omega").pow_int(2).unwrap() * s("theta"))]);
    assert_eq!(e.subst(&b).unwrap(), s("mu") * s("omega") * s("theta"));
}

#[test]
fn evaluation() {
    let e = (Coefficient::one() + s("theta")).div(&s("hbar")).unwrap() * half("eta");
    let v = values([("theta", 0.5), ("hbar", 2.0), ("eta", 4.0)]);
    assert!((e.eval(&v).unwrap().re - 1.5).abs() < 1e-15);
    assert_eq!(s("mu").eval(&v), Err(CoeffError::UnboundSymbol("mu".into())));
    let v = values([("eta", -1.0)]);
    assert_eq!(half("eta").eval(&v), Err(CoeffError::NegativeFractionalPower("eta".into())));
}

#[test]
fn collect_by_symbol() {
    let e = s("theta") * s("eta") + s("eta") * Coefficient::int(3) + Coefficient::one();
    let parts = e.collect(&Symbol::new("eta")).unwrap();
    assert_eq!(parts[&Exponent::from_integer(1)], s("theta") + Coefficient::int(3));
    assert_eq!(parts[&Exponent::zero()], Coefficient::one());
}

fn arb_coeff() -> impl Strategy<Value = Coefficient> {
    let names = ["theta", "eta", "hbar", "xi"];
    let term = (-3i64..=3, 0i64..=1, prop::collection::vec((0usize..4, -2i64..=2, 1i64..=2), 0..3)).prop_map(
        move |(re, im, fs)| {
            let mut c = Coefficient::from(GaussianRational::new(
                BigRational::from_integer(re.into()),
                BigRational::from_integer(im.into()),
            ));
            for (k, n, d) in fs {
                c = c * Coefficient::symbol_pow(names[k], n, d);
            }
            c
        },
    );
    prop::collection::vec(term, 1..4).prop_map(|ts| ts.into_iter().fold(Coefficient::zero(), |a, b| a + b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_roundtrip(a in arb_coeff(), b in arb_coeff()) {
        prop_assume!(!b.is_zero());
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q * b, a);
    }

    #[test]
    fn conjugation_is_an_involution(a in arb_coeff(), b in arb_coeff()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
    }
}
