use mirror_core::exact_series::{int, parse_rational, ExactRational};
use mirror_core::quantum::{
    avhs_connection, check_associativity, check_flatness, check_flop_invariance, correlation, cpn_ring, cy3_correlation,
    cy3_ring, cy_ring, flop_transform, quantum_product, synthetic_flop_model, CoefficientRingPolicy, CurveClass, GWTable,
    QuantumRing,
};
use mirror_core::yukawa::{compute_couplings, extract_instantons};
use mirror_core::{PowerSeries, Variable};
use proptest::prelude::*;

fn nums(xs: &[&str]) -> Vec<ExactRational> {
    xs.iter().map(|s| parse_rational(s).unwrap()).collect()
}

const QUINTIC_NUMBERS: [&str; 10] = [
    "2875",
    "609250",
    "317206375",
    "242467530000",
    "229305888887625",
    "248249742118022000",
    "295091050570845659250",
    "375632160937476603550000",
    "503840510416985243645106250",
    "704288164978454686113488249750",
];

const QUINTIC_YUKAWA: [&str; 11] = [
    "5",
    "2875",
    "4876875",
    "8564575000",
    "15517926796875",
    "28663236110956000",
    "53621944306062201000",
    "101216230345800061125625",
    "192323666400003538944396875",
    "367299732093982242625847031250",
    "704288164978454714776724365580000",
];

/// CP^3 with `Phi_L(z^2, z^2, z^3)` doubled.
fn corrupted_cp3() -> QuantumRing {
    let mut table = GWTable::new(3, vec![0, 2, 4, 6], 1).unwrap();
    let line = CurveClass(vec![1]);
    for [a, b, c] in [[1, 3, 3], [2, 2, 3]] {
        table.set(&line, 4, a, b, c, int(1)).unwrap();
    }
    table.set(&line, 4, 2, 2, 3, int(2)).unwrap();
    let classical = [([0, 0, 3], int(1)), ([0, 1, 2], int(1)), ([1, 1, 1], int(1))];
    QuantumRing::new(table, classical, CoefficientRingPolicy::Polynomial).unwrap()
}

#[test]
fn cpn_ring_relation() {
    for n in 1..=6 {
        let r = cpn_ring(n).unwrap();
        let z = r.basis(1);
        assert_eq!(r.power(&z, n as u32 + 1).unwrap(), r.q_power(&CurveClass(vec![1])).unwrap(), "CP^{n}");
        // below the relation the quantum powers are classical
        assert_eq!(r.power(&z, n as u32).unwrap(), r.basis(n));
    }
    let r = cpn_ring(4).unwrap();
    assert_eq!(quantum_product(&r.basis(3), &r.basis(2), &r).unwrap(), r.q_power(&CurveClass(vec![1])).unwrap());
}

#[test]
fn frobenius_structure() {
    let r = cpn_ring(3).unwrap();
    let one = r.identity();
    for i in 0..4 {
        let x = r.basis(i);
        assert_eq!(quantum_product(&one, &x, &r).unwrap(), x);
        for j in 0..4 {
            let y = r.basis(j);
            let xy = quantum_product(&x, &y, &r).unwrap();
            // epsilon(x * y) is the classical pairing
            assert_eq!(r.expectation(&xy).unwrap(), r.pair(&x, &y));
            for k in 0..4 {
                let z = r.basis(k);
                assert_eq!(r.pair(&xy, &z), correlation(&x, &y, &z, &r).unwrap());
            }
        }
    }
    // <z^a z^b z^c> = q when a + b + c = 2n + 1
    let c = correlation(&r.basis(2), &r.basis(2), &r.basis(3), &r).unwrap();
    assert_eq!(c, r.q_power(&CurveClass(vec![1])).unwrap().coeff(0).clone());
}

#[test]
fn associativity_defects() {
    for n in [2, 3] {
        let d = check_associativity(&cpn_ring(n).unwrap(), &int(4)).unwrap();
        assert!(d.is_zero(), "CP^{n}: {d:?}");
    }
    let d = check_associativity(&corrupted_cp3(), &int(4)).unwrap();
    assert!(!d.is_zero());
    let quintic = cy3_ring(&int(5), &nums(&QUINTIC_NUMBERS), 10).unwrap();
    assert!(check_associativity(&quintic, &int(10)).unwrap().is_zero());
}

#[test]
fn quintic_correlator_closes_the_loop() {
    let ring = cy3_ring(&int(5), &nums(&QUINTIC_NUMBERS), 10).unwrap();
    let hhh = ring.correlator(1, 1, 1).unwrap().to_series(10).unwrap();
    let expected = PowerSeries::new(Variable::Q, nums(&QUINTIC_YUKAWA));
    assert_eq!(hhh, expected);
    let numbers: Vec<_> =
        nums(&QUINTIC_NUMBERS).into_iter().enumerate().map(|(i, n)| (CurveClass(vec![i as i64 + 1]), n)).collect();
    let direct = cy3_correlation(&[vec![1], vec![1], vec![1]], &int(5), &numbers, 10).unwrap();
    assert_eq!(direct, expected);
    // and it is the B-model coupling
    let set = compute_couplings(3, 10).unwrap();
    assert_eq!(set.y1(1), &expected);

    // H * H = (<HHH>/5) H^2: the q-part is 2875 q / 5 + ...
    let hh = quantum_product(&ring.basis(1), &ring.basis(1), &ring).unwrap();
    assert_eq!(hh.coeff(2).coeff(&CurveClass(vec![1])), int(575));
    assert!(hh.coeff(0).is_zero() && hh.coeff(1).is_zero() && hh.coeff(3).is_zero());
}

#[test]
fn quintic_connection() {
    let order = 8;
    let ring = cy3_ring(&int(5), &nums(&QUINTIC_NUMBERS[..order]), order).unwrap();
    let conn = avhs_connection(&ring).unwrap();
    let set = compute_couplings(3, order).unwrap();
    let diag = conn.superdiagonal_series(0, order).unwrap();
    for (j, entry) in diag.iter().enumerate() {
        assert_eq!(&entry.scale(&int(5)), set.y1(j), "Y1_{j}");
    }
    assert_eq!(conn.nilpotency_index(), Some(4));
    assert!(conn.is_transversal());
    assert!(check_flatness(&conn, &int(order as i64)).is_flat());
}

#[test]
fn higher_dimensional_connections() {
    for (n, order) in [(4, 5), (5, 4), (6, 4)] {
        let set = compute_couplings(n, order).unwrap();
        let table = extract_instantons(&set).unwrap();
        let kappa = int(n as i64 + 2);
        let ring = cy_ring(n, &kappa, &table.gw_entries(), order).unwrap();
        let conn = avhs_connection(&ring).unwrap();
        for (j, entry) in conn.superdiagonal_series(0, order).unwrap().iter().enumerate() {
            assert_eq!(&entry.scale(&kappa), set.y1(j), "n = {n}, Y1_{j}");
        }
        assert_eq!(conn.nilpotency_index(), Some(n as u32 + 1));
        assert!(conn.is_transversal());
        assert!(check_flatness(&conn, &int(order as i64)).is_flat(), "n = {n}");
    }
}

#[test]
fn sixfold_associativity_is_the_secondary_relation() {
    let order = 4;
    let set = compute_couplings(6, order).unwrap();
    let table = extract_instantons(&set).unwrap();
    let mut entries = table.gw_entries();
    let ring = cy_ring(6, &int(8), &entries, order).unwrap();
    assert!(check_associativity(&ring, &int(order as i64)).unwrap().is_zero());
    // perturb n_1 of Y^2_2: <H^2 H^2 H^2> no longer matches (Y^1_2)^2 / Y^1_1
    let (_, numbers) = entries.iter_mut().find(|(k, _)| *k == [2, 2, 2]).unwrap();
    numbers[0] += int(1);
    let ring = cy_ring(6, &int(8), &entries, order).unwrap();
    assert!(!check_associativity(&ring, &int(order as i64)).unwrap().is_zero());
}

#[test]
fn cp2_connection_flat_and_corrupted_curved() {
    let conn = avhs_connection(&cpn_ring(2).unwrap()).unwrap();
    assert!(check_flatness(&conn, &int(5)).is_flat());
    assert_eq!(conn.nilpotency_index(), Some(3));
    assert!(!conn.is_transversal());
    let bad = avhs_connection(&corrupted_cp3()).unwrap();
    assert!(!check_flatness(&bad, &int(5)).is_flat());
}

proptest! {
    #[test]
    fn flop_is_an_involution_and_invariant(a in 1i64..4, b in 1i64..4, c in 1i64..4, n in -3i64..5) {
        prop_assume!(n != 0);
        let n = int(n);
        let Ok((m, g)) = synthetic_flop_model(a, b, c, &n) else { return Ok(()) };
        prop_assume!(g.is_primitive());
        let f = flop_transform(&m, &g, &n).unwrap();
        prop_assert_eq!(flop_transform(&f, &g.neg(), &n).unwrap(), m.clone());
        prop_assert!(check_flop_invariance(&m, &g, &n).unwrap());
        prop_assert!(!check_flop_invariance(&m, &g, &(n + int(1))).unwrap());
    }

    #[test]
    fn rank_one_cy3_rings_are_associative(ns in proptest::collection::vec(-50i64..50, 1..5), kappa in 1i64..10) {
        let numbers: Vec<_> = ns.iter().map(|&x| int(x)).collect();
        let ring = cy3_ring(&int(kappa), &numbers, 5).unwrap();
        prop_assert!(check_associativity(&ring, &int(5)).unwrap().is_zero());
        let conn = avhs_connection(&ring).unwrap();
        prop_assert!(check_flatness(&conn, &int(5)).is_flat());
    }
}
