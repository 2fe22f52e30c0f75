use mirror_core::exact_series::{format_rational, int};
use mirror_core::intersection::{
    conic_count, count_lines_on_hypersurface, fermat_line_census, format_vertex, is_reflexive, polar_polytope,
    projective_space_cotangent_top, splitting_cohomology, LatticePolytope,
};
use mirror_core::periods::frobenius_basis;
use mirror_core::quantum::{
    avhs_connection, check_associativity, check_flatness, check_flop_invariance, cpn_ring, cy_ring, flop_identity_holds,
    flop_transform, quantum_product, synthetic_flop_model, Coefficient, CurveClass, QuantumElement, QuantumRing,
};
use mirror_core::yukawa::{
    compute_couplings, default_order, distinguished_reduction, extract_instantons, mirror_map, npoint_function,
    resynthesize, secondary_coupling, yukawa_closed_form_check, CouplingSet, InstantonTable,
};
use mirror_core::PowerSeries;

use crate::report::{Report, Table};
use crate::{CliError, Command, CountCommand, QringCommand};

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Mirror { dimension, order } => {
            let n = *dimension as usize;
            mirror(n, order.map_or_else(|| default_order(n), |o| o as usize))
        }
        Command::Count { which } => count(which),
        Command::Qring { which } => qring(which),
        Command::Polytope { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| CliError::Io(file.clone(), e))?;
            polytope(&text)
        }
    }
}

fn coeff_column(series: &PowerSeries, k: usize) -> String {
    format_rational(series.coeff(k))
}

fn mirror(n: usize, order: usize) -> Result<Report> {
    let mut report = Report::new("mirror");
    let basis = frobenius_basis(n as u32 + 2, order)?;
    let map = mirror_map(&basis, order)?;
    let mut set = distinguished_reduction(&basis, &map, order)?;
    report.check("Y^1_0 = n+2, Y^1_j = Y^1_{n-1-j}", set.check_invariants().is_ok());
    if n == 6 {
        let y22 = secondary_coupling(&set)?;
        set = set.with_secondary(y22);
    }
    let (npoint, table) = rayon::join(|| npoint_function(&set), || extract_instantons(&set));
    let (npoint, table) = (npoint?, table?);

    let mut columns = vec!["k".to_string(), "z(q)".to_string()];
    columns.extend((0..n).map(|j| format!("Y^1_{j}")));
    if set.secondary().is_some() {
        columns.push("Y^2_2".into());
    }
    columns.push("n-point".into());
    let mut series = Table::with_columns("series", columns);
    for k in 0..=order {
        let mut row = vec![k.to_string(), coeff_column(&map.z_of_q, k)];
        row.extend((0..n).map(|j| coeff_column(set.y1(j), k)));
        if let Some(y22) = set.secondary() {
            row.push(coeff_column(y22, k));
        }
        row.push(coeff_column(&npoint, k));
        series.push(row);
    }
    report.table(series);
    report.table(instanton_table(&table));

    report.check("instanton numbers integral", table.all_integral());
    let roundtrip = table.entries.iter().all(|e| {
        let target = if e.a == 2 { set.secondary() } else { Some(set.y1(e.b)) };
        target == Some(&resynthesize(n, e))
    });
    report.check("Lambert resynthesis exact", roundtrip);
    if n == 3 {
        let check = yukawa_closed_form_check(&basis, &map, &set)?;
        report.check("Y^1_1 = closed-form Yukawa coupling", check.agrees());
    }
    Ok(report)
}

fn instanton_table(table: &InstantonTable) -> Table {
    let mut columns = vec!["d".to_string()];
    columns.extend(table.entries.iter().map(|e| format!("n_d({})", e.label())));
    let mut out = Table::with_columns("instantons", columns);
    let depth = table.entries.iter().map(|e| e.inversion.numbers.len()).max().unwrap_or(0);
    for d in 1..=depth {
        let mut row = vec![d.to_string()];
        row.extend(table.entries.iter().map(|e| e.inversion.get(d).map_or_else(String::new, format_rational)));
        out.push(row);
    }
    out
}

fn count(which: &CountCommand) -> Result<Report> {
    let mut report = Report::new("count");
    let mut t = Table::new("count", &["quantity", "value"]);
    let mut row = |name: &str, v: String| t.push(vec![name.to_string(), v]);
    match which {
        CountCommand::CubicSurfaceLines => row("lines on a cubic surface", format_rational(&count_lines_on_hypersurface(3, 3)?)),
        CountCommand::QuinticLines => row("lines on a quintic threefold", format_rational(&count_lines_on_hypersurface(5, 4)?)),
        CountCommand::QuinticConics => {
            let c = conic_count()?;
            row("conics via Grothendieck relation", format_rational(&c.via_relation));
            row("conics via Segre pushforward", format_rational(&c.via_segre));
            report.check("both routes agree", c.via_relation == c.via_segre);
        }
        CountCommand::FermatCensus => {
            let c = fermat_line_census()?;
            row("isolated lines", c.first_type.to_string());
            row("one-parameter families", c.families.to_string());
            row("weighted total", c.katz_total.to_string());
            report.check("weighted total = 2875", c.katz_total == 2875);
        }
        CountCommand::PnCotangent { n } => {
            row(&format!("c_{n}(T*P^{n})"), format_rational(&projective_space_cotangent_top(*n as usize)?))
        }
        CountCommand::Splitting { degrees } => {
            let s = splitting_cohomology(degrees);
            row("h0", s.h0.to_string());
            row("h1", s.h1.to_string());
            row("chi", s.chi.to_string());
            report.check("chi = h0 - h1", s.chi == s.h0 - s.h1);
        }
    }
    report.tables.insert(0, t);
    Ok(report)
}

fn format_coefficient(c: &Coefficient) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = c
        .terms()
        .map(|(eta, x)| {
            let d = eta.0[0];
            let q = match d {
                0 => return format_rational(x),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            match format_rational(x).as_str() {
                "1" => q,
                "-1" => format!("-{q}"),
                s => format!("{s}*{q}"),
            }
        })
        .collect();
    parts.join(" + ")
}

fn format_element(x: &QuantumElement, labels: &[String]) -> String {
    let parts: Vec<String> = x
        .coeffs()
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            let s = format_coefficient(c);
            match (s.as_str(), l.as_str()) {
                (_, "1") => if c.terms().count() > 1 { format!("({s})") } else { s },
                ("1", _) => l.clone(),
                _ if c.terms().count() > 1 => format!("({s})*{l}"),
                _ => format!("{s}*{l}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn power_labels(symbol: &str, n: usize) -> Vec<String> {
    (0..=n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => symbol.to_string(),
            _ => format!("{symbol}^{k}"),
        })
        .collect()
}

fn qring(which: &QringCommand) -> Result<Report> {
    match which {
        QringCommand::Cpn { n, order } => cpn(*n as usize, *order),
        QringCommand::Cy3 { order } => cy3(*order as usize),
        QringCommand::FlopCheck { a, b, c, n_gamma } => flop(*a, *b, *c, *n_gamma),
        QringCommand::Avhs { dimension, order } => {
            let n = *dimension as usize;
            avhs(n, order.map_or_else(|| default_order(n).min(8), |o| o as usize))
        }
    }
}

fn cpn(n: usize, order: u32) -> Result<Report> {
    let mut report = Report::new("qring cpn");
    let ring = cpn_ring(n)?;
    let labels = power_labels("ζ", n);
    let z = ring.basis(1);
    let mut powers = Table::new("powers", &["k", "ζ^⋆k"]);
    let mut p = ring.identity();
    for k in 0..=n + 1 {
        powers.push(vec![k.to_string(), format_element(&p, &labels)]);
        p = quantum_product(&p, &z, &ring)?;
    }
    report.table(powers);
    let mut products = Table::new("products", &["i", "j", "ζ^i⋆ζ^j"]);
    for i in 0..=n {
        for j in i..=n {
            products.push(vec![i.to_string(), j.to_string(), format_element(&ring.basis_product(i, j)?, &labels)]);
        }
    }
    report.table(products);
    let relation = ring.power(&z, n as u32 + 1)? == ring.q_power(&CurveClass(vec![1]))?;
    report.check(format!("ζ^⋆{} = q·1l", n + 1), relation);
    let defect = check_associativity(&ring, &int(order as i64))?;
    report.check(format!("associativity defect = 0 through degree {order}"), defect.is_zero());
    Ok(report)
}

/// Ring on `1, H, ..., H^n` built from the B-model instanton numbers.
fn b_model_ring(n: usize, order: usize) -> Result<(CouplingSet, QuantumRing)> {
    let set = compute_couplings(n, order)?;
    let table = extract_instantons(&set)?;
    let ring = cy_ring(n, &int(n as i64 + 2), &table.gw_entries(), order)?;
    Ok((set, ring))
}

fn cy3(order: usize) -> Result<Report> {
    let mut report = Report::new("qring cy3");
    let (set, ring) = b_model_ring(3, order)?;
    let hhh = ring.correlator(1, 1, 1)?.to_series(order)?;
    let hh = quantum_product(&ring.basis(1), &ring.basis(1), &ring)?;
    let hh2 = hh.coeff(2).to_series(order)?;
    let mut t = Table::new("correlators", &["k", "<HHH>", "H⋆H / H^2", "Y^1_1"]);
    for k in 0..=order {
        t.push(vec![k.to_string(), coeff_column(&hhh, k), coeff_column(&hh2, k), coeff_column(set.y1(1), k)]);
    }
    report.table(t);
    report.check("<HHH> = Y^1_1", &hhh == set.y1(1));
    let defect = check_associativity(&ring, &int(order as i64))?;
    report.check("associativity defect = 0", defect.is_zero());
    Ok(report)
}

fn flop(a: i64, b: i64, c: i64, n_gamma: i64) -> Result<Report> {
    let mut report = Report::new("qring flop-check");
    let n = int(n_gamma);
    let (model, gamma) = synthetic_flop_model(a, b, c, &n)?;
    let flopped = flop_transform(&model, &gamma, &n)?;
    let mut t = Table::new("triple intersections", &["i", "j", "k", "D_iD_jD_k", "flopped"]);
    for i in 0..3 {
        for j in i..3 {
            for k in j..3 {
                let (before, after) = (model.kappa(i, j, k), flopped.kappa(i, j, k));
                t.push(vec![i.to_string(), j.to_string(), k.to_string(), format_rational(&before), format_rational(&after)]);
            }
        }
    }
    report.table(t);
    let mut g = Table::new("flopping class", &["class", "n"]);
    g.push(vec![gamma.to_string(), n_gamma.to_string()]);
    g.push(vec![gamma.neg().to_string(), format_rational(&flopped.instantons()[&gamma.neg()])]);
    report.table(g);
    report.check("q/(1-q) + 1/(q-1) = -1", flop_identity_holds());
    report.check("double flop is the identity", flop_transform(&flopped, &gamma.neg(), &n)? == model);
    report.check("invariant", check_flop_invariance(&model, &gamma, &n)?);
    report.check("perturbed n_Γ detected", !check_flop_invariance(&model, &gamma, &int(n_gamma + 1))?);
    Ok(report)
}

fn avhs(n: usize, order: usize) -> Result<Report> {
    let mut report = Report::new("qring avhs");
    let (set, ring) = b_model_ring(n, order)?;
    let conn = avhs_connection(&ring)?;
    let kappa = int(n as i64 + 2);
    let diag: Vec<PowerSeries> = conn.superdiagonal_series(0, order)?.iter().map(|s| s.scale(&kappa)).collect();
    let mut columns = vec!["k".to_string()];
    columns.extend((0..n).map(|j| format!("{kappa}·C[{j}][{}]", j + 1)));
    let mut t = Table::with_columns("superdiagonal", columns);
    for k in 0..=order {
        let mut row = vec![k.to_string()];
        row.extend(diag.iter().map(|s| coeff_column(s, k)));
        t.push(row);
    }
    report.table(t);
    let c0 = conn.at_q_zero(0);
    let mut m = Table::with_columns("C(0)", (0..c0.cols()).map(|c| c.to_string()).collect());
    for r in 0..c0.rows() {
        m.push(c0.row(r).iter().map(format_rational).collect());
    }
    report.table(m);
    report.check("superdiagonal = Y^1_j", diag.iter().enumerate().all(|(j, s)| s == set.y1(j)));
    report.check(format!("nilpotency index of C(0) = {}", n + 1), conn.nilpotency_index() == Some(n as u32 + 1));
    report.check("Griffiths transversality", conn.is_transversal());
    report.check("flatness defect = 0", check_flatness(&conn, &int(order as i64)).is_flat());
    Ok(report)
}

fn polytope(text: &str) -> Result<Report> {
    let mut report = Report::new("polytope");
    let p = LatticePolytope::from_text(text)?;
    let polar = polar_polytope(&p)?;
    let reflexive = is_reflexive(&p)?;
    let mut t = Table::new("polar vertices", &["vertex"]);
    for v in &polar.vertices {
        t.push(vec![format_vertex(v)]);
    }
    report.table(t);
    let mut s = Table::new("summary", &["property", "value"]);
    s.push(vec!["dimension".into(), p.dimension().to_string()]);
    s.push(vec!["vertices".into(), p.vertices().len().to_string()]);
    s.push(vec!["reflexive".into(), if reflexive { "yes" } else { "no" }.into()]);
    report.table(s);
    if let Some(q) = polar.to_lattice() {
        report.check("polar(polar(P)) = P", polar_polytope(&q)?.to_lattice().as_ref() == Some(&p));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_ring_elements() {
        let ring = cpn_ring(2).unwrap();
        let labels = power_labels("ζ", 2);
        let zz = quantum_product(&ring.basis(2), &ring.basis(2), &ring).unwrap();
        assert_eq!(format_element(&zz, &labels), "q*ζ");
        assert_eq!(format_element(&ring.basis(1), &labels), "ζ");
    }

    #[test]
    fn square_polar() {
        let r = polytope("1 1\n1 -1\n-1 1\n-1 -1\n").unwrap();
        let v: Vec<&str> = r.table_named("polar vertices").unwrap().rows.iter().map(|x| x[0].as_str()).collect();
        assert_eq!(v, ["-1 0", "0 -1", "0 1", "1 0"]);
        assert!(r.passed());
    }
}
