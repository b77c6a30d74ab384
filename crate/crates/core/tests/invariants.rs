use proptest::prelude::*;

use aqg::catalog::{self, Builtin};
use aqg::dual::DualPair;
use aqg::format::{parse_algebra_file, parse_element, parse_report};
use aqg::fourier::Fourier;
use aqg::hopf::HopfAlgebra;
use aqg::{BasisId, Cyclotomic as Q, Element, Scalar};

fn hopf(name: &str) -> HopfAlgebra<Q> {
    match catalog::builtin::<Q>(name, 3).unwrap() {
        Builtin::Hopf(h) => h,
        Builtin::Pair(_) => unreachable!(),
    }
}

/// A sum of small rational multiples of powers of ζ₆.
fn scalar() -> impl Strategy<Value = Q> {
    proptest::collection::vec((-4i64..5, 1i64..4, 0u32..6), 1..4).prop_map(|terms| {
        terms.into_iter().fold(Q::zero(), |acc, (n, d, k)| {
            acc + Q::fraction(n, d) * Q::zeta_pow(6, k)
        })
    })
}

fn element(dim: usize) -> impl Strategy<Value = Element<Q>> {
    proptest::collection::vec(-3i64..4, dim).prop_map(|c| {
        Element::from_terms(
            c.into_iter()
                .enumerate()
                .map(|(i, x)| (BasisId(i as i64), Q::integer(x))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((a * inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_text_round_trips(a in scalar()) {
        let back: Q = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn h4_antipode_is_anti_multiplicative(x in element(4), y in element(4)) {
        let h = hopf("h4");
        prop_assert_eq!(h.antipode(&h.mul(&x, &y)), h.mul(&h.antipode(&y), &h.antipode(&x)));
        prop_assert_eq!(h.antipode_inv(&h.antipode(&x)), x.clone());
        prop_assert_eq!(h.counit(&h.mul(&x, &y)), h.counit(&x) * h.counit(&y));
    }

    #[test]
    fn coproduct_is_multiplicative_on_taft(x in element(9), y in element(9)) {
        let h = hopf("taft:3");
        let lhs = h.coproduct(&h.mul(&x, &y)).unwrap();
        let rhs = h.tensor_mul(&h.coproduct(&x).unwrap(), &h.coproduct(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fourier_round_trips_on_taft(x in element(9)) {
        let f = Fourier::new(DualPair::build(&hopf("taft:3")).unwrap());
        prop_assert_eq!(f.inverse(&f.transform(&x)), x.clone());
        prop_assert_eq!(f.inverse_alt(&f.transform_alt(&x)), x);
    }

    #[test]
    fn shown_elements_parse_back(x in element(9)) {
        let h = hopf("taft:3");
        let back = parse_element(&h.show(&x), h.algebra().basis()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn parsers_reject_without_panicking(s in "[0-9z/^*+() _a-x-]{0,40}", t in ".{0,80}") {
        let h = hopf("h4");
        for text in [&s, &t] {
            let _ = text.parse::<Q>();
            let _ = parse_element(text, h.algebra().basis());
            let _ = parse_algebra_file(text);
            let _ = parse_report(text);
        }
    }
}
