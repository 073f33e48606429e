use fockdec::VPolynomial;
use proptest::prelude::*;

fn v(text: &str) -> VPolynomial {
    text.parse().unwrap()
}

fn arb_poly() -> impl Strategy<Value = VPolynomial> {
    prop::collection::vec((-4..=4i32, -5..=5i64), 0..5).prop_map(|terms| VPolynomial::from_terms(&terms))
}

#[test]
fn display_forms() {
    assert_eq!(VPolynomial::from_terms(&[(3, 1), (1, 1)]).to_string(), "v^3+v");
    assert_eq!(VPolynomial::zero().to_string(), "0");
    assert_eq!(VPolynomial::one().to_string(), "1");
    assert_eq!(VPolynomial::monomial(2, 1).to_string(), "2v");
    assert_eq!(v("v^3+v"), VPolynomial::from_terms(&[(1, 1), (3, 1)]));
}

#[test]
fn evaluation_and_derivative() {
    let d = v("v^3+v");
    assert_eq!(d.eval_one(), 2);
    assert_eq!(d.derivative_at_one(), 4);
    assert!(d.in_n_v() && d.has_parity(1) && !d.has_parity(0));
    assert!(v("v^2+1").has_parity(0));
}

#[test]
fn quantum_integers() {
    assert_eq!(VPolynomial::quantum_integer(2), VPolynomial::from_terms(&[(-1, 1), (1, 1)]));
    let f3 = VPolynomial::quantum_factorial(3);
    assert_eq!(f3.div_exact(&VPolynomial::quantum_integer(3)).unwrap(), VPolynomial::quantum_factorial(2));
    assert!(VPolynomial::one().div_exact(&VPolynomial::quantum_integer(2)).is_err());
}

proptest! {
    #[test]
    fn text_round_trip(p in arb_poly()) {
        prop_assert_eq!(p.to_string().parse::<VPolynomial>().unwrap(), p);
    }

    #[test]
    fn bar_is_an_involution(p in arb_poly()) {
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!(p.bar().eval_one(), p.eval_one());
    }

    #[test]
    fn shift_and_scale(p in arb_poly(), k in -3..=3i32, c in -3..=3i64) {
        prop_assert_eq!(p.shift(k).shift(-k), p.clone());
        prop_assert_eq!(p.scale(c).eval_one(), c * p.eval_one());
    }
}
