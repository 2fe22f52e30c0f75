use mirror_core::exact_series::int;
use mirror_core::periods::{
    annihilation_residuals, formal_monodromy, frobenius_basis, holomorphic_period, pf_operator, verify_basis,
    ThetaOperator,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

// (N m)! / (m!)^N straight from factorials
fn multinomial(degree: u32, m: u64) -> BigInt {
    factorial(degree as u64 * m) / factorial(m).pow(degree)
}

#[test]
fn holomorphic_period_is_multinomial() {
    for degree in 5..=8 {
        let f = holomorphic_period(degree, 8).unwrap();
        for m in 0..=8 {
            assert_eq!(f.coeff(m as usize), &(int(0) + multinomial(degree, m)), "N = {degree}, m = {m}");
        }
        assert!(pf_operator(degree).unwrap().apply(&f).is_zero());
    }
}

#[test]
fn frobenius_bases_certify() {
    for degree in 5..=8 {
        let basis = frobenius_basis(degree, 10).unwrap();
        verify_basis(&basis).unwrap();
        assert!(annihilation_residuals(&basis).unwrap().iter().all(|r| r.is_zero()));
        assert_eq!(basis.holomorphic(), holomorphic_period(degree, 10).unwrap());
        let mono = formal_monodromy(&basis).unwrap();
        assert!(mono.is_maximally_unipotent());
        assert_eq!(mono.weight_graded_degrees(), (0..degree as usize - 1).map(|k| 2 * k).collect::<Vec<_>>());
    }
}

proptest! {
    #[test]
    fn operator_json_roundtrip(degree in 5u32..=9) {
        let op = pf_operator(degree).unwrap();
        prop_assert_eq!(ThetaOperator::from_json(&op.to_json()).unwrap(), op);
    }

    #[test]
    fn truncation_is_consistent(degree in 5u32..=7, order in 1usize..8) {
        let long = holomorphic_period(degree, 8).unwrap();
        let short = holomorphic_period(degree, order).unwrap();
        for k in 0..=order {
            prop_assert_eq!(short.coeff(k), long.coeff(k));
        }
    }
}
