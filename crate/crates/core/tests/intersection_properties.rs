use mirror_core::exact_series::{int, ExactRational};
use mirror_core::intersection::{
    chern_sym_power, direct_sum, elementary_symmetric, integrate, is_reflexive, pieri_mult, polar_polytope,
    quotient, splitting_cohomology, ChernVector, GradedRing, GrassmannClass, LatticePolytope, MPoly, Partition,
    TruncatedPoly,
};
use proptest::prelude::*;

/// Degree of `Gr(k, n)` from the hook length formula: the number of
/// standard tableaux of the `k x (n-k)` rectangle.
fn hook_length_degree(k: u64, n: u64) -> ExactRational {
    let cells = k * (n - k);
    let mut num = int(1);
    for i in 1..=cells {
        num *= int(i as i64);
    }
    let mut den = int(1);
    for r in 0..k {
        for c in 0..n - k {
            den *= int(((k - r - 1) + (n - k - c - 1) + 1) as i64);
        }
    }
    num / den
}

#[test]
fn sigma_one_powers_match_hook_lengths() {
    for (k, n) in [(2, 4), (2, 5), (3, 6), (2, 6)] {
        let s1 = GrassmannClass::special(k, n, 1);
        let top = s1.pow((k * (n - k)) as u32);
        assert_eq!(integrate(&top), hook_length_degree(k as u64, n as u64), "Gr({k}, {n})");
    }
    assert_eq!(integrate(&GrassmannClass::special(2, 4, 1).pow(4)), int(2));
}

#[test]
fn poincare_duality() {
    for (k, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
        let cols = (n - k) as u32;
        let box_parts = Partition::in_box(k, cols);
        for a in &box_parts {
            for b in &box_parts {
                if a.size() + b.size() != (k as u32) * cols {
                    continue;
                }
                let prod = pieri_mult(
                    &GrassmannClass::schubert(k, n, a.clone()).unwrap(),
                    &GrassmannClass::schubert(k, n, b.clone()).unwrap(),
                )
                .unwrap();
                let expected = if *b == a.complement(k, cols) { int(1) } else { int(0) };
                assert_eq!(integrate(&prod), expected, "{a} * {b} on Gr({k}, {n})");
            }
        }
    }
}

/// `prod (1 + x_{i_1} + ... + x_{i_k})` over weakly increasing index tuples.
fn brute_force_sym(r: usize, k: usize, max_degree: usize) -> TruncatedPoly {
    fn tuples(r: usize, k: usize, start: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in start..r {
            for mut t in tuples(r, k - 1, i) {
                t.insert(0, i);
                out.push(t);
            }
        }
        out
    }
    let one = TruncatedPoly::new(MPoly::one(r), max_degree);
    tuples(r, k, 0).into_iter().fold(one.clone(), |acc, t| {
        let root = t.iter().fold(MPoly::zero(r), |p, &i| p.add(&MPoly::var(r, i)));
        acc.times(&TruncatedPoly::new(MPoly::one(r).add(&root), max_degree))
    })
}

#[test]
fn sym_power_matches_root_expansion() {
    for r in 1..=3usize {
        for k in 1..=5usize {
            let max_degree = 7;
            let classes = (1..=r).map(|i| TruncatedPoly::new(elementary_symmetric(r, i), max_degree)).collect();
            let c = ChernVector::new(r, classes).unwrap();
            let sym = chern_sym_power(&c, k as u32).unwrap();
            assert_eq!(sym.total(), brute_force_sym(r, k, max_degree), "rank {r}, k = {k}");
        }
    }
}

#[test]
fn direct_sum_matches_roots() {
    let d = 3;
    let roots = |vars: &[usize]| -> ChernVector<TruncatedPoly> {
        let mut total = TruncatedPoly::new(MPoly::one(3), d);
        for &v in vars {
            total = total.times(&TruncatedPoly::new(MPoly::one(3).add(&MPoly::var(3, v)), d));
        }
        ChernVector::from_total(vars.len(), &total).unwrap()
    };
    let sum = direct_sum(&roots(&[0, 1]), &roots(&[2])).unwrap();
    assert_eq!(sum, roots(&[0, 1, 2]));
}

fn class_strategy() -> impl Strategy<Value = ChernVector<GrassmannClass>> {
    (1usize..=3, proptest::collection::vec(-3i64..=3, 20)).prop_map(|(rank, seeds)| {
        let (k, n) = (2, 5);
        let mut it = seeds.into_iter();
        let classes = (1..=rank)
            .map(|deg| {
                Partition::in_box(k, 3)
                    .into_iter()
                    .filter(|p| p.size() as usize == deg)
                    .fold(GrassmannClass::zero(k, n), |acc, p| {
                        let c = int(it.next().unwrap_or(1));
                        acc.add(&GrassmannClass::schubert(k, n, p).unwrap().scale(&c)).unwrap()
                    })
            })
            .collect();
        ChernVector::new(rank, classes).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn whitney_sum_is_consistent(a in class_strategy(), b in class_strategy(), c in class_strategy()) {
        let ab = direct_sum(&a, &b).unwrap();
        prop_assert_eq!(ab.total(), a.total().times(&b.total()));
        prop_assert_eq!(&ab, &direct_sum(&b, &a).unwrap());
        prop_assert_eq!(direct_sum(&ab, &c).unwrap(), direct_sum(&a, &direct_sum(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(quotient(&ab, &b).unwrap(), a);
    }

    #[test]
    fn splitting_euler_characteristic(a in proptest::collection::vec(-20i64..20, 0..8)) {
        let s = splitting_cohomology(&a);
        prop_assert_eq!(s.h0 - s.h1, s.chi);
    }

    #[test]
    fn polar_is_an_involution_on_boxes(w in 1i64..4, h in 1i64..4) {
        let p = LatticePolytope::new(vec![vec![w, h], vec![w, -h], vec![-w, h], vec![-w, -h]]).unwrap();
        let polar = polar_polytope(&p).unwrap();
        if let Some(lattice) = polar.to_lattice() {
            prop_assert!(is_reflexive(&p).unwrap());
            let back = polar_polytope(&lattice).unwrap().to_lattice().unwrap();
            prop_assert_eq!(back, p);
        } else {
            prop_assert!(!is_reflexive(&p).unwrap());
        }
    }
}

#[test]
fn quintic_mirror_simplex_is_reflexive() {
    // fan polytope of P^4 and its polar, the Newton polytope of the quintic
    let p = LatticePolytope::from_text("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n-1 -1 -1 -1\n").unwrap();
    let polar = polar_polytope(&p).unwrap().to_lattice().unwrap();
    assert_eq!(polar.vertices().len(), 5);
    assert!(polar.vertices().contains(&vec![4, -1, -1, -1]));
    assert_eq!(polar_polytope(&polar).unwrap().to_lattice().unwrap(), p);
}
