use num_traits::{One, Zero};

use super::rational::{int, ExactRational};
use super::series::{PowerSeries, Variable};
use crate::error::{precondition, Result};

/// `q^d + q^{2d} + ...` through order `order`, the expansion of `q^d/(1-q^d)`.
pub fn lambert_expand(d: i64, order: usize) -> Result<PowerSeries> {
    if d <= 0 {
        return precondition(format!("Lambert degree must be positive, got {d}"));
    }
    let mut c = vec![ExactRational::zero(); order + 1];
    for k in (d as usize..=order).step_by(d as usize) {
        c[k] = ExactRational::one();
    }
    Ok(PowerSeries::new(Variable::Q, c))
}

/// Numbers `n_1, n_2, ...` recovered from `c(q) = sum_d n_d d^l q^d/(1-q^d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambertInversion {
    /// `numbers[d - 1] = n_d`.
    pub numbers: Vec<ExactRational>,
    pub degree_power: u32,
    pub integral: bool,
}

impl LambertInversion {
    pub fn get(&self, d: usize) -> Option<&ExactRational> {
        d.checked_sub(1).and_then(|i| self.numbers.get(i))
    }
}

/// Inverts the multiple-cover expansion degree by degree:
/// `n_m = (c_m - sum_{d | m, d < m} n_d d^l) / m^l`.
///
/// The constant term of `c` must vanish. Non-integral results are reported
/// through the `integral` flag.
pub fn lambert_invert(c: &PowerSeries, degree_power: u32) -> Result<LambertInversion> {
    if !c.coeff(0).is_zero() {
        return precondition("Lambert inversion needs a zero constant term");
    }
    let t = c.order();
    let mut numbers: Vec<ExactRational> = Vec::with_capacity(t);
    let weight = |d: usize| int(d as i64).pow(degree_power as i32);
    for m in 1..=t {
        let mut acc = c.coeff(m).clone();
        for d in 1..m {
            if m % d == 0 {
                acc -= &numbers[d - 1] * weight(d);
            }
        }
        numbers.push(acc / weight(m));
    }
    let integral = numbers.iter().all(|n| n.denom().is_one());
    Ok(LambertInversion { numbers, degree_power, integral })
}

/// `sum_d n_d d^l q^d/(1-q^d)` through `order`; `numbers[d - 1] = n_d`.
pub fn lambert_synthesize(numbers: &[ExactRational], degree_power: u32, order: usize) -> PowerSeries {
    let mut c = vec![ExactRational::zero(); order + 1];
    for (i, n) in numbers.iter().enumerate() {
        let d = i + 1;
        if d > order || n.is_zero() {
            continue;
        }
        let w = n * int(d as i64).pow(degree_power as i32);
        let mut k = d;
        while k <= order {
            c[k] += &w;
            k += d;
        }
    }
    PowerSeries::new(Variable::Q, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::{parse_rational, rat};
    use proptest::prelude::*;

    fn q(c: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(Variable::Q, c)
    }

    #[test]
    fn expand_examples() {
        assert_eq!(lambert_expand(1, 3).unwrap(), q(&[0, 1, 1, 1]));
        assert_eq!(lambert_expand(2, 5).unwrap(), q(&[0, 0, 1, 0, 1, 0]));
        assert!(lambert_expand(4, 3).unwrap().is_zero());
        assert!(lambert_expand(0, 3).is_err());
        assert!(lambert_expand(-1, 3).is_err());
    }

    #[test]
    fn quintic_three_point_prefix() {
        let c = PowerSeries::new(
            Variable::Q,
            ["0", "2875", "4876875", "8564575000"].iter().map(|s| parse_rational(s).unwrap()).collect(),
        );
        let inv = lambert_invert(&c, 3).unwrap();
        assert!(inv.integral);
        assert_eq!(inv.numbers, vec![int(2875), int(609250), int(317206375)]);
    }

    #[test]
    fn geometric_gives_single_class() {
        let inv = lambert_invert(&lambert_expand(1, 6).unwrap(), 0).unwrap();
        assert_eq!(inv.numbers, vec![int(1), int(0), int(0), int(0), int(0), int(0)]);
    }

    #[test]
    fn non_integrality_is_flagged() {
        let inv = lambert_invert(&q(&[0, 1, 1]), 3).unwrap();
        assert!(inv.integral);
        assert_eq!(inv.numbers[1], rat(0, 1));
        let inv = lambert_invert(&q(&[0, 1, 2]), 3).unwrap();
        assert_eq!(inv.numbers[1], rat(1, 8));
        assert!(!inv.integral);
    }

    #[test]
    fn nonzero_constant_rejected() {
        assert!(lambert_invert(&q(&[5, 1]), 1).is_err());
    }

    proptest! {
        #[test]
        fn synthesis_roundtrip(v in proptest::collection::vec((-50i64..50, 1i64..5), 1..10), l in 0u32..4) {
            let numbers: Vec<ExactRational> = v.iter().map(|&(n, d)| rat(n, d)).collect();
            let order = numbers.len();
            let c = lambert_synthesize(&numbers, l, order);
            // the reconstruction oracle: sum of scaled single-class expansions
            let mut oracle = PowerSeries::zero(Variable::Q, order);
            for (i, n) in numbers.iter().enumerate() {
                let d = (i + 1) as i64;
                let w = n * int(d).pow(l as i32);
                oracle = oracle.add(&lambert_expand(d, order).unwrap().scale(&w)).unwrap();
            }
            prop_assert_eq!(&c, &oracle);
            prop_assert_eq!(lambert_invert(&c, l).unwrap().numbers, numbers);
        }
    }
}
