//! Property tests for the exact-arithmetic kernel: field axioms on random
//! rational functions, canonical-form idempotence, and the compatibility of
//! the t → 0 limit with coefficient-wise substitution.

use fusionq::arith::{Poly, PolyQ, RatFuncT, RatQ, RatQT, Scalar};
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|coeffs| PolyQ::from_i64(&coeffs))
}

fn nonzero_poly_strategy() -> impl Strategy<Value = PolyQ> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratq_strategy() -> impl Strategy<Value = RatQ> {
    (poly_strategy(), nonzero_poly_strategy())
        .prop_map(|(num, den)| RatQ::new(num, den).expect("nonzero denominator"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn addition_associates(f in ratq_strategy(), g in ratq_strategy(), h in ratq_strategy()) {
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
    }

    #[test]
    fn multiplication_distributes(f in ratq_strategy(), g in ratq_strategy(), h in ratq_strategy()) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn multiplicative_inverse(f in ratq_strategy()) {
        if !Scalar::is_zero(&f) {
            prop_assert!(Scalar::is_one(&f.mul(&f.inv().unwrap())));
        }
    }

    #[test]
    fn normalization_is_idempotent(f in ratq_strategy()) {
        let again = RatQ::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        // structural canonical form: coprime integer parts, positive leading
        // denominator coefficient
        prop_assert!(f.den().leading().unwrap() > &fusionq::arith::rat(0, 1));
    }

    #[test]
    fn limit_matches_coefficientwise_substitution(
        nums in prop::collection::vec(-4i64..=4, 0..4),
        dens in prop::collection::vec(-4i64..=4, 1..4),
        d0 in 1i64..=5,
    ) {
        let num = Poly::new(nums.iter().map(|&c| RatQ::from_int(c)).collect());
        let mut den_coeffs: Vec<RatQ> = dens.iter().map(|&c| RatQ::from_int(c)).collect();
        den_coeffs.insert(0, RatQ::from_int(d0)); // nonzero constant term: no pole at 0
        let den = Poly::new(den_coeffs);
        let f = RatQT::new(num.clone(), den.clone()).unwrap();
        let via_limit = f.limit_t0().unwrap();
        let direct = num.coeff(0).div(&den.coeff(0)).unwrap();
        prop_assert_eq!(via_limit, direct);
    }

    #[test]
    fn t_layer_field_inverse(
        nums in prop::collection::vec(-4i64..=4, 1..4),
        dens in prop::collection::vec(-4i64..=4, 1..4),
    ) {
        let num = Poly::new(nums.iter().map(|&c| RatQ::from_int(c)).collect());
        let den = Poly::new(dens.iter().map(|&c| RatQ::from_int(c)).collect());
        if !num.is_zero() && !den.is_zero() {
            let f = RatFuncT::new(num, den).unwrap();
            if !Scalar::is_zero(&f) {
                prop_assert!(Scalar::is_one(&f.mul(&f.inv().unwrap())));
            }
        }
    }
}
