use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact_series::ExactRational;

/// Polynomial over `Q` in a fixed number of variables, keyed by exponent
/// vectors; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, ExactRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, ExactRational::one())
    }

    pub fn constant(nvars: usize, c: ExactRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<u32>, c: ExactRational) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, ExactRational::one())
    }

    /// `sum_i c_i x_i`.
    pub fn linear(coeffs: &[ExactRational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(unit(n, i), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> ExactRational {
        self.terms.get(exps).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: ExactRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ExactRational::one()))
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with every term of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut acc: BTreeMap<Vec<u32>, ExactRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                if da + eb.iter().sum::<u32>() > max_degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(ExactRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MPoly { nvars: self.nvars, terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Replaces `x_i^k` by `x_i^{k-p}` times `c` whenever `k >= p`, until
    /// every exponent of `x_i` is below `p` (i.e. imposes `x_i^p = c`).
    pub fn reduce_power(&self, i: usize, p: u32, c: &ExactRational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, coeff) in &self.terms {
            let mut e = e.clone();
            let q = e[i] / p;
            e[i] %= p;
            out.add_term(e, coeff * num_traits::pow(c.clone(), q as usize));
        }
        out
    }

    /// Substitutes `x_i -> images[i]`, evaluated in any commutative ring
    /// given by `one`, `add`, `mul` and `scale`.
    pub fn evaluate<R: Clone>(
        &self,
        images: &[R],
        one: R,
        add: impl Fn(&R, &R) -> R,
        mul: impl Fn(&R, &R) -> R,
        scale: impl Fn(&R, &ExactRational) -> R,
        zero: R,
    ) -> R {
        assert_eq!(images.len(), self.nvars);
        let mut powers: Vec<Vec<R>> = images.iter().map(|x| vec![one.clone(), x.clone()]).collect();
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut m = one.clone();
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = mul(powers[i].last().expect("nonempty"), &images[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    m = mul(&m, &powers[i][k as usize]);
                }
            }
            acc = add(&acc, &scale(&m, c));
        }
        acc
    }

    /// Expresses a symmetric polynomial in the elementary symmetric
    /// polynomials: the result has variable `i` standing for `e_{i+1}`.
    /// Returns `None` if the input is not symmetric.
    pub fn to_elementary(&self) -> Option<MPoly> {
        let n = self.nvars;
        let elementary: Vec<MPoly> = (1..=n).map(|k| elementary_symmetric(n, k)).collect();
        let mut rest = self.clone();
        let mut out = MPoly::zero(n);
        // the lex-leading monomial of a symmetric polynomial has weakly
        // decreasing exponents; peel it off with a product of e_k's
        while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return None;
            }
            let mut e_exps = vec![0u32; n];
            let mut term = MPoly::one(n);
            for k in 0..n {
                let next = if k + 1 < n { lead[k + 1] } else { 0 };
                e_exps[k] = lead[k] - next;
                term = term.mul(&elementary[k].pow(e_exps[k]));
            }
            rest = rest.sub(&term.scale(&c));
            out.add_term(e_exps, c);
        }
        Some(out)
    }
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `e_k(x_1, ..., x_n)`.
pub fn elementary_symmetric(n: usize, k: usize) -> MPoly {
    let mut p = MPoly::zero(n);
    for subset in subsets(n, k) {
        let mut e = vec![0; n];
        for i in subset {
            e[i] = 1;
        }
        p.add_term(e, ExactRational::one());
    }
    p
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors `m` of length `n` with `sum m = k`.
pub fn compositions(n: usize, k: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut tail in compositions(n - 1, k - first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::int;

    #[test]
    fn power_sums_to_elementary() {
        // p_2 = e_1^2 - 2 e_2
        let p2 = MPoly::var(2, 0).pow(2).add(&MPoly::var(2, 1).pow(2));
        let e = p2.to_elementary().unwrap();
        assert_eq!(e.coeff(&[2, 0]), int(1));
        assert_eq!(e.coeff(&[0, 1]), int(-2));
        assert!(MPoly::var(2, 0).to_elementary().is_none());
    }

    #[test]
    fn reduction_of_powers() {
        let a = MPoly::var(1, 0).pow(7);
        assert_eq!(a.reduce_power(0, 5, &int(-1)), MPoly::var(1, 0).pow(2).scale(&int(-1)));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(subsets(5, 2).len(), 10);
    }
}
