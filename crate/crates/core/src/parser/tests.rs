use super::*;
use crate::algebra::builtin::{self, hat_mixing};
use crate::algebra::expr_equal;
use crate::coeff::sym;
use proptest::prelude::*;

#[test]
fn commutator_of_positions() {
    let e = parse("comm(xh1, xh2)", "deformed").unwrap();
    let expected = Coefficient::i() * Coefficient::symbol(sym::XI).pow_int(2).unwrap() * Coefficient::symbol(sym::THETA);
    assert_eq!(e.as_scalar(), Some(expected));
}

#[test]
fn defining_relation_vanishes() {
    assert!(parse("xh1*ph1 - ph1*xh1 - i*hbar", "deformed").unwrap().is_zero());
}

#[test]
fn number_operator_is_already_normal() {
    let e = parse("adj(ah1)*ah1", "hatbose").unwrap();
    assert_eq!(e.render(), "adj(ah1)*ah1");
    let e = parse("ah1*adj(ah1)", "hatbose").unwrap();
    assert_eq!(e.render(), "adj(ah1)*ah1 + 1");
}

#[test]
fn render_examples() {
    let d = builtin::deformed();
    assert_eq!(Expr::zero(&d).render(), "0");
    assert_eq!(parse("i*hbar", "deformed").unwrap().render(), "i*hbar");
    let h = builtin::hatbose();
    assert_eq!(Expr::scalar(&h, hat_mixing()).render(), "(i/hbar)*xi^2*theta^(1/2)*eta^(1/2)");
}

#[test]
fn rational_numbers_and_powers() {
    let c = parse_coefficient("3/4*theta^(1/2)*theta^(1/2)").unwrap();
    assert_eq!(c, Coefficient::frac(3, 4) * Coefficient::symbol("theta"));
    let c = parse_coefficient("2^(-1/2)*2^(1/2)").unwrap();
    assert!(c.is_one());
}

#[test]
fn errors_carry_positions() {
    match parse("xh1 + * ph1", "deformed") {
        Err(ParseError::Syntax { line: 1, col: 7, .. }) => {}
        other => panic!("{other:?}"),
    }
    match parse("xh1 +\n  zz", "deformed") {
        Err(ParseError::UnknownGenerator { name, line: 2, col: 3 }) => assert_eq!(name, "zz"),
        other => panic!("{other:?}"),
    }
    assert_eq!(parse("x1", "nope"), Err(ParseError::UnknownAlgebra("nope".into())));
    assert!(matches!(parse("xh1/ph1", "deformed"), Err(ParseError::Invalid { .. })));
    assert!(matches!(parse("xh1^(1/2)", "deformed"), Err(ParseError::Invalid { .. })));
    assert!(matches!(parse("(xh1", "deformed"), Err(ParseError::Syntax { .. })));
}

#[test]
fn identity_of_the_hat_swap() {
    let a = parse("adj(ah2)*ah1", "hatbose").unwrap();
    let b = parse("ah1*adj(ah2) - (i/hbar)*xi^2*theta^(1/2)*eta^(1/2)", "hatbose").unwrap();
    assert!(expr_equal(&a, &b).unwrap());
}

#[test]
fn decimal_parsing() {
    assert_eq!(parse_rational("0.25"), Some(BigRational::new(1.into(), 4.into())));
    assert_eq!(parse_rational("-3/6"), Some(BigRational::new((-1).into(), 2.into())));
    assert_eq!(parse_rational("1e3"), None);
    assert_eq!(parse_rational("."), None);
}

/// Random syntax trees written back as text, for the precedence oracle.
#[derive(Clone, Debug)]
enum T {
    Num(i64),
    Sym(&'static str),
    Gen(&'static str),
    Neg(Box<T>),
    Add(Box<T>, Box<T>),
    Sub(Box<T>, Box<T>),
    Mul(Box<T>, Box<T>),
    Pow(Box<T>, u32),
}

fn arb_tree() -> impl Strategy<Value = T> {
    let leaf = prop_oneof![
        (0i64..5).prop_map(T::Num),
        prop::sample::select(vec!["theta", "eta", "hbar"]).prop_map(T::Sym),
        prop::sample::select(vec!["xh1", "xh2", "ph1", "ph2"]).prop_map(T::Gen),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| T::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..3).prop_map(|(a, k)| T::Pow(Box::new(a), k)),
        ]
    })
}

fn full(t: &T) -> String {
    match t {
        T::Num(n) => n.to_string(),
        T::Sym(s) | T::Gen(s) => s.to_string(),
        T::Neg(a) => format!("(-{})", full(a)),
        T::Add(a, b) => format!("({} + {})", full(a), full(b)),
        T::Sub(a, b) => format!("({} - {})", full(a), full(b)),
        T::Mul(a, b) => format!("({} * {})", full(a), full(b)),
        T::Pow(a, k) => format!("({})^{k}", full(a)),
    }
}

/// Minimal parentheses: 0 = sum level, 1 = product level, 2 = unary, 3 = atom.
fn minimal(t: &T, ctx: u8) -> String {
    let (prec, s) = match t {
        T::Num(n) => (3, n.to_string()),
        T::Sym(s) | T::Gen(s) => (3, s.to_string()),
        T::Neg(a) => (2, format!("-{}", minimal(a, 2))),
        T::Add(a, b) => (0, format!("{} + {}", minimal(a, 0), minimal(b, 1))),
        T::Sub(a, b) => (0, format!("{} - {}", minimal(a, 0), minimal(b, 1))),
        T::Mul(a, b) => (1, format!("{}*{}", minimal(a, 1), minimal(b, 2))),
        T::Pow(a, k) => (3, format!("{}^{k}", minimal(a, 4))),
    };
    if prec < ctx {
        format!("({s})")
    } else {
        s
    }
}

/// Direct construction, independent of the parser.
fn build(t: &T) -> Expr {
    let d = builtin::deformed();
    match t {
        T::Num(n) => Expr::scalar(&d, Coefficient::int(*n)),
        T::Sym(s) => Expr::scalar(&d, Coefficient::symbol(s)),
        T::Gen(g) => Expr::generator(&d, g).unwrap(),
        T::Neg(a) => -build(a),
        T::Add(a, b) => build(a) + build(b),
        T::Sub(a, b) => build(a) - build(b),
        T::Mul(a, b) => build(a) * build(b),
        T::Pow(a, k) => {
            let base = build(a);
            (0..*k).fold(Expr::identity(&d), |acc, _| acc * base.clone())
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn precedence_matches_oracle(t in arb_tree()) {
        let oracle = build(&t).normal_order();
        prop_assert_eq!(&parse(&full(&t), "deformed").unwrap(), &oracle);
        prop_assert_eq!(&parse(&minimal(&t, 0), "deformed").unwrap(), &oracle);
    }

    #[test]
    fn render_round_trip(t in arb_tree()) {
        let e = build(&t).normal_order();
        let back = parse(&e.render(), "deformed").unwrap();
        prop_assert_eq!(back, e);
    }
}
