use num_traits::One;

use super::poly::{subsets, MPoly};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational};

/// Lines on the Fermat quintic `x_0^5 + ... + x_4^5 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatCensus {
    /// Isolated lines `x_a = alpha x_b, x_c = beta x_d, x_e = 0` with
    /// `alpha^5 = beta^5 = -1`.
    pub first_type: u64,
    /// Cones `(u, alpha u, a v, b v, c v)` over the plane curve
    /// `a^5 + b^5 + c^5 = 0`, one per pair of coordinates and root `alpha`.
    pub families: u64,
    /// `5 * first_type + 20 * families` with the excess multiplicities.
    pub katz_total: u64,
}

/// Multiplicity attached to each isolated line.
pub const FIRST_TYPE_MULTIPLICITY: u64 = 5;
/// Contribution attached to each one-parameter family.
pub const FAMILY_CONTRIBUTION: u64 = 20;

/// Number of distinct roots of `t^5 + 1`: the derivative `5 t^4` vanishes
/// only at `t = 0`, which is not a root, so all five roots are simple.
fn roots_of_minus_one() -> Result<u64> {
    let at_zero = int(0).pow(5) + int(1);
    if at_zero.is_one() {
        Ok(5)
    } else {
        Err(Error::Verification("t^5 + 1 has a repeated root".into()))
    }
}

fn fermat(coords: &[MPoly]) -> MPoly {
    coords.iter().fold(MPoly::zero(coords[0].nvars()), |acc, x| acc.add(&x.pow(5)))
}

/// The three ways of splitting four coordinates into two pairs.
fn pairings(rest: &[usize]) -> [[(usize, usize); 2]; 3] {
    let [a, b, c, d] = [rest[0], rest[1], rest[2], rest[3]];
    [[(a, b), (c, d)], [(a, c), (b, d)], [(a, d), (b, c)]]
}

/// Enumerates both kinds of lines, substitutes each parametrization into
/// the Fermat quintic with the relations `alpha^5 = beta^5 = -1`, and
/// checks the residues.
pub fn fermat_line_census() -> Result<FermatCensus> {
    let roots = roots_of_minus_one()?;
    let minus_one = int(-1);

    // variables u, v, alpha, beta
    let var = |i| MPoly::var(4, i);
    let mut patterns = 0u64;
    for e in 0..5 {
        let rest: Vec<usize> = (0..5).filter(|&i| i != e).collect();
        for [(a, b), (c, d)] in pairings(&rest) {
            let mut x = vec![MPoly::zero(4); 5];
            x[a] = var(0);
            x[b] = var(2).mul(&var(0));
            x[c] = var(1);
            x[d] = var(3).mul(&var(1));
            let residue = fermat(&x).reduce_power(2, 5, &minus_one).reduce_power(3, 5, &minus_one);
            if !residue.is_zero() {
                return Err(Error::Verification(format!("line with x_{e} = 0 does not lie on the quintic")));
            }
            patterns += 1;
        }
    }
    let first_type = patterns * roots * roots;

    // variables u, v, alpha, a, b, c
    let var = |i| MPoly::var(6, i);
    let expected = var(3).pow(5).add(&var(4).pow(5)).add(&var(5).pow(5)).mul(&var(1).pow(5));
    let mut pairs = 0u64;
    for pair in subsets(5, 2) {
        let rest: Vec<usize> = (0..5).filter(|i| !pair.contains(i)).collect();
        let mut x = vec![MPoly::zero(6); 5];
        x[pair[0]] = var(0);
        x[pair[1]] = var(2).mul(&var(0));
        for (slot, &i) in rest.iter().enumerate() {
            x[i] = var(3 + slot).mul(&var(1));
        }
        let residue = fermat(&x).reduce_power(2, 5, &minus_one);
        if residue != expected {
            return Err(Error::Verification(format!("family on coordinates {pair:?} has the wrong residue")));
        }
        pairs += 1;
    }
    let families = pairs * roots;
    let katz_total = FIRST_TYPE_MULTIPLICITY * first_type + FAMILY_CONTRIBUTION * families;
    Ok(FermatCensus { first_type, families, katz_total })
}

/// The residue `(a^5 + b^5 + c^5) v^5` of the family through
/// `(u, -u, a v, b v, c v)`, in variables `u, v, a, b, c`.
pub fn second_type_residue() -> MPoly {
    let var = |i| MPoly::var(5, i);
    let x = [var(0), var(0).scale(&-ExactRational::one()), var(2).mul(&var(1)), var(3).mul(&var(1)), var(4).mul(&var(1))];
    fermat(&x)
}
