use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::poly::MPoly;
use crate::error::{Error, Result};
use crate::exact_series::{format_rational, ExactRational};

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(i)`.
    pub fn row(i: u32) -> Self {
        Partition(if i == 0 { vec![] } else { vec![i] })
    }

    /// The one-column partition `(1^i)`.
    pub fn column(i: usize) -> Self {
        Partition(vec![1; i])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.length() <= rows && self.0.first().map_or(true, |&c| c <= cols)
    }

    /// Complement inside the `rows x cols` box, read backwards.
    pub fn complement(&self, rows: usize, cols: u32) -> Self {
        let parts = (0..rows).rev().map(|i| cols - self.0.get(i).copied().unwrap_or(0)).collect();
        Partition::new(parts).expect("complement of a partition in a box is a partition")
    }

    /// All partitions fitting in the box.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn go(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).expect("built decreasing"));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                go(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Schur polynomial `s_lambda(x_1, ..., x_k)` as a sum over semistandard
/// tableaux.
pub fn schur_polynomial(lambda: &Partition, k: usize) -> MPoly {
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut out = MPoly::zero(k);
    if lambda.length() > k {
        return out;
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        k: usize,
        out: &mut MPoly,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u32; k];
            for row in grid.iter() {
                for &v in row {
                    e[v] += 1;
                }
            }
            out.add_term(e, ExactRational::one());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..k {
            grid[r][c] = v;
            fill(idx + 1, cells, grid, k, out);
        }
    }
    fill(0, &cells, &mut grid, k, &mut out);
    out
}

/// Multiplication table of `H^*(Gr(k, n))` in the Schubert basis, filled
/// lazily and shared between all classes on the same Grassmannian.
struct Structure {
    k: usize,
    n: usize,
    schur: HashMap<Partition, MPoly>,
    vandermonde: MPoly,
    products: Mutex<HashMap<(Partition, Partition), Vec<(Partition, ExactRational)>>>,
}

impl Structure {
    fn build(k: usize, n: usize) -> Self {
        let schur = Partition::in_box(k, (n - k) as u32).into_iter().map(|p| {
            let s = schur_polynomial(&p, k);
            (p, s)
        });
        let mut vandermonde = MPoly::one(k);
        for i in 0..k {
            for j in i + 1..k {
                vandermonde = vandermonde.mul(&MPoly::var(k, i).sub(&MPoly::var(k, j)));
            }
        }
        Structure { k, n, schur: schur.collect(), vandermonde, products: Mutex::new(HashMap::new()) }
    }

    /// Schur expansion of a symmetric polynomial via the alternant: the
    /// coefficient of `s_lambda` is that of `x^{lambda + delta}` in
    /// `f * prod_{i<j} (x_i - x_j)`. Classes outside the box vanish.
    fn expand(&self, f: &MPoly) -> BTreeMap<Partition, ExactRational> {
        let alt = f.mul(&self.vandermonde);
        let mut out = BTreeMap::new();
        for (e, c) in alt.terms() {
            if e.windows(2).any(|w| w[0] <= w[1]) {
                continue;
            }
            let parts: Vec<u32> = e.iter().enumerate().map(|(i, &x)| x - (self.k - 1 - i) as u32).collect();
            let p = Partition::new(parts).expect("strictly decreasing minus staircase");
            if p.fits(self.k, (self.n - self.k) as u32) {
                out.insert(p, c.clone());
            }
        }
        out
    }

    fn product(&self, a: &Partition, b: &Partition) -> Vec<(Partition, ExactRational)> {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(v) = self.products.lock().expect("poisoned").get(&key) {
            return v.clone();
        }
        let f = self.schur[&key.0].mul(&self.schur[&key.1]);
        let v: Vec<_> = self.expand(&f).into_iter().collect();
        self.products.lock().expect("poisoned").insert(key, v.clone());
        v
    }
}

fn structure(k: usize, n: usize) -> Arc<Structure> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Structure>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("poisoned");
    guard.entry((k, n)).or_insert_with(|| Arc::new(Structure::build(k, n))).clone()
}

/// A rational cohomology class on `Gr(k, n)`, the Grassmannian of
/// `k`-planes in `C^n`, in the Schubert basis `sigma_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannClass {
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, ExactRational>,
}

impl GrassmannClass {
    pub fn zero(k: usize, n: usize) -> Self {
        assert!(k <= n, "Gr({k}, {n}) is empty");
        GrassmannClass { k, n, terms: BTreeMap::new() }
    }

    pub fn one(k: usize, n: usize) -> Self {
        Self::schubert(k, n, Partition::empty()).expect("empty partition fits")
    }

    /// `sigma_lambda`.
    pub fn schubert(k: usize, n: usize, lambda: Partition) -> Result<Self> {
        if !lambda.fits(k, (n - k) as u32) {
            return Err(Error::Precondition(format!("{lambda} does not fit the {k}x{} box", n - k)));
        }
        let mut c = Self::zero(k, n);
        c.terms.insert(lambda, ExactRational::one());
        Ok(c)
    }

    /// Special Schubert class `sigma_i = c_i(Q)`.
    pub fn special(k: usize, n: usize, i: u32) -> Self {
        Self::schubert(k, n, Partition::row(i)).unwrap_or_else(|_| Self::zero(k, n))
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.k, self.n)
    }

    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> ExactRational {
        self.terms.get(lambda).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::AmbientMismatch(self.k, self.n, other.k, other.n));
        }
        Ok(())
    }

    fn insert(&mut self, p: Partition, c: ExactRational) {
        let slot = self.terms.entry(p.clone()).or_insert_with(ExactRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-ExactRational::one()))
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.k, self.n);
        }
        GrassmannClass { k: self.k, n: self.n, terms: self.terms.iter().map(|(p, c)| (p.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        pieri_mult(self, other)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.k, self.n), |acc, _| pieri_mult(&acc, self).expect("same ambient"))
    }

    /// Part of cohomological degree `2d` (partition size `d`).
    pub fn homogeneous_part(&self, d: u32) -> Self {
        GrassmannClass {
            k: self.k,
            n: self.n,
            terms: self.terms.iter().filter(|(p, _)| p.size() == d).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    /// The symmetric polynomial in the Chern roots of `U^*` representing
    /// this class.
    pub fn to_symmetric(&self) -> MPoly {
        let s = structure(self.k, self.n);
        self.terms.iter().fold(MPoly::zero(self.k), |acc, (p, c)| acc.add(&s.schur[p].scale(c)))
    }

    /// The class represented by a symmetric polynomial in the Chern roots
    /// of `U^*`.
    pub fn from_symmetric(k: usize, n: usize, f: &MPoly) -> Result<Self> {
        if f.nvars() != k {
            return Err(Error::Precondition(format!("expected {k} Chern roots, got {}", f.nvars())));
        }
        let s = structure(k, n);
        Ok(GrassmannClass { k, n, terms: s.expand(f) })
    }
}

/// Product in `H^*(Gr(k, n))`, by multiplying Schur polynomials in the
/// Chern roots of `U^*` and discarding partitions outside the box.
pub fn pieri_mult(a: &GrassmannClass, b: &GrassmannClass) -> Result<GrassmannClass> {
    a.check(b)?;
    let s = structure(a.k, a.n);
    let mut out = GrassmannClass::zero(a.k, a.n);
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            let cc = ca * cb;
            for (p, c) in s.product(pa, pb) {
                out.insert(p, &c * &cc);
            }
        }
    }
    Ok(out)
}

/// Degree of the top-class component (the full `k x (n-k)` box).
pub fn integrate(a: &GrassmannClass) -> ExactRational {
    let top = Partition::new(vec![(a.n - a.k) as u32; a.k]).expect("box is a partition");
    a.coeff(&top)
}

impl fmt::Display for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| if c.is_one() { format!("s{p}") } else { format!("{}*s{p}", format_rational(c)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
