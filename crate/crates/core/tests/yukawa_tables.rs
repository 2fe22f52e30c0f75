use mirror_core::exact_series::{parse_rational, ExactRational};
use mirror_core::periods::frobenius_basis;
use mirror_core::yukawa::{
    compute_couplings, extract_instantons, mirror_map, npoint_function, require_integral, resynthesize,
    yukawa_closed_form_check, distinguished_reduction,
};
use mirror_core::PowerSeries;

fn nums(xs: &[&str]) -> Vec<ExactRational> {
    xs.iter().map(|s| parse_rational(s).unwrap()).collect()
}

fn prefix(s: &PowerSeries, len: usize) -> Vec<ExactRational> {
    (0..len).map(|k| s.coeff(k).clone()).collect()
}

#[test]
fn quintic_instanton_numbers() {
    let set = compute_couplings(3, 10).unwrap();
    let table = extract_instantons(&set).unwrap();
    let e = table.entry(1, 1).unwrap();
    assert_eq!(e.inversion.degree_power, 3);
    assert_eq!(
        e.inversion.numbers,
        nums(&[
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
        ])
    );
    assert!(table.all_integral());
}

#[test]
fn npoint_functions() {
    let cases: [(usize, &[&str]); 4] = [
        (
            3,
            &[
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
            ],
        ),
        (
            4,
            &[
                "6",
                "120960",
                "4136832000",
                "148146924602880",
                "5420219848911544320",
                "200623934537137119778560",
                "7478994517395643259712737280",
            ],
        ),
        (5, &["7", "3727381", "2637885990187", "1927092954108108787", "1425153551321014327663291"]),
        (
            6,
            &[
                "8",
                "106975232",
                "1672023727001600",
                "26611692333081695092736",
                "426129121674687823674948571136",
            ],
        ),
    ];
    for (n, expected) in cases {
        let set = compute_couplings(n, expected.len() - 1).unwrap();
        let f = npoint_function(&set).unwrap();
        assert_eq!(prefix(&f, expected.len()), nums(expected), "n = {n}");
    }
}

#[test]
fn fourfold_couplings() {
    let set = compute_couplings(4, 5).unwrap();
    let t = extract_instantons(&set).unwrap();
    let e = t.entry(1, 1).unwrap();
    assert_eq!(e.inversion.degree_power, 2);
    assert_eq!(
        e.inversion.numbers,
        nums(&["60480", "440884080", "6255156277440", "117715791990353760", "2591176156368821985600"])
    );
}

#[test]
fn fivefold_couplings() {
    let set = compute_couplings(5, 4).unwrap();
    let t = extract_instantons(&set).unwrap();
    assert_eq!(
        t.entry(1, 1).unwrap().inversion.numbers,
        nums(&["1009792", "122239786088", "30528671745480104", "10378199509395886153216"])
    );
    assert_eq!(
        t.entry(1, 2).unwrap().inversion.numbers,
        nums(&["1707797", "510787745643", "222548537108926490", "113635631482486991647224"])
    );
    require_integral(&t).unwrap();
}

#[test]
fn sixfold_couplings() {
    let set = compute_couplings(6, 4).unwrap();
    let t = extract_instantons(&set).unwrap();
    assert_eq!(
        t.entry(1, 1).unwrap().inversion.numbers,
        nums(&["15984640", "33397159706624", "154090254047541417984", "1000674891265872131899670528"])
    );
    assert_eq!(
        t.entry(1, 2).unwrap().inversion.numbers,
        nums(&["37502976", "224340704157696", "2000750410187341381632", "21122119007324663457380794368"])
    );
    let y22 = t.entry(2, 2).unwrap();
    assert_eq!(y22.inversion.degree_power, 0);
    assert_eq!(
        y22.inversion.numbers,
        nums(&["59021312", "821654025830400", "12197109744970010814464", "186083410628492378226388631552"])
    );
    for e in &t.entries {
        assert_eq!(&resynthesize(6, e), if e.a == 2 { set.secondary().unwrap() } else { set.y1(e.b) });
    }
}

#[test]
fn closed_form_matches_reduction() {
    let b = frobenius_basis(5, 12).unwrap();
    let m = mirror_map(&b, 12).unwrap();
    let set = distinguished_reduction(&b, &m, 12).unwrap();
    let check = yukawa_closed_form_check(&b, &m, &set).unwrap();
    assert!(check.agrees());
}
