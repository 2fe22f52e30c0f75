use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::poly::subsets;
use crate::error::{Error, Result};
use crate::exact_series::{format_rational, int, ExactRational};
use crate::matrix::Matrix;

/// Convex hull of finitely many lattice points in `Z^r`, stored by its
/// vertices in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    vertices: Vec<Vec<i64>>,
}

/// Supporting inequality `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<ExactRational>,
    pub offset: ExactRational,
}

/// Polytope with rational vertices (the polar of a non-reflexive polytope).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    pub vertices: Vec<Vec<ExactRational>>,
}

impl RationalPolytope {
    pub fn is_integral(&self) -> bool {
        self.vertices.iter().flatten().all(|c| c.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticePolytope> {
        if !self.is_integral() {
            return None;
        }
        let pts = self.vertices.iter().map(|v| v.iter().map(|c| i64::try_from(c.to_integer()).expect("small")).collect()).collect();
        LatticePolytope::new(pts).ok()
    }
}

impl LatticePolytope {
    /// Convex hull of the given points; must be full-dimensional.
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        let r = points.first().map_or(0, Vec::len);
        if r == 0 || points.iter().any(|p| p.len() != r) {
            return Err(Error::Malformed("points must be nonempty vectors of equal length".into()));
        }
        let pts: Vec<Vec<ExactRational>> = to_rational(&points);
        let facets = facets_of(&pts)?;
        // a point is a vertex iff the normals of the facets through it span
        let mut vertices: BTreeSet<Vec<i64>> = BTreeSet::new();
        for (p, q) in points.iter().zip(&pts) {
            let active: Vec<Vec<ExactRational>> =
                facets.iter().filter(|f| dot(&f.normal, q) == f.offset).map(|f| f.normal.clone()).collect();
            if !active.is_empty() && Matrix::from_rows(active).rank() == r {
                vertices.insert(p.clone());
            }
        }
        Ok(LatticePolytope { vertices: vertices.into_iter().collect() })
    }

    /// One vertex per non-empty line, coordinates separated by whitespace;
    /// `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let p = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::Malformed(format!("line {}: `{t}` is not an integer", no + 1))))
                .collect::<Result<Vec<_>>>()?;
            points.push(p);
        }
        Self::new(points)
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn dimension(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn facets(&self) -> Result<Vec<Facet>> {
        facets_of(&to_rational(&self.vertices))
    }

    pub fn to_text(&self) -> String {
        self.vertices.iter().map(|v| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
    }
}

fn to_rational(points: &[Vec<i64>]) -> Vec<Vec<ExactRational>> {
    points.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()
}

fn dot(a: &[ExactRational], b: &[ExactRational]) -> ExactRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Brute force over `r`-subsets: each affinely independent subset spans a
/// hyperplane, kept when every point lies on one side of it.
fn facets_of(points: &[Vec<ExactRational>]) -> Result<Vec<Facet>> {
    let r = points[0].len();
    let origin_rank = {
        let base = &points[0];
        let diffs: Vec<Vec<ExactRational>> = points.iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        Matrix::from_rows(diffs).rank()
    };
    if origin_rank < r {
        return Err(Error::NotFullDimensional);
    }
    let mut found = BTreeSet::new();
    for subset in subsets(points.len(), r) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<ExactRational>> =
            subset[1..].iter().map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let kernel = if diffs.is_empty() { vec![vec![int(1)]] } else { Matrix::from_rows(diffs).nullspace() };
        if kernel.len() != 1 {
            continue;
        }
        let mut normal = kernel.into_iter().next().expect("one vector");
        let mut offset = dot(&normal, base);
        let values: Vec<ExactRational> = points.iter().map(|p| dot(&normal, p) - &offset).collect();
        let above = values.iter().any(|v| v.is_positive());
        let below = values.iter().any(|v| v.is_negative());
        if above && below {
            continue;
        }
        if above {
            normal = normal.iter().map(|c| -c).collect();
            offset = -offset;
        }
        // canonical scaling: first nonzero entry of the normal has modulus 1
        let lead = normal.iter().find(|c| !c.is_zero()).expect("nonzero normal").abs();
        let normal: Vec<ExactRational> = normal.iter().map(|c| c / &lead).collect();
        found.insert(Facet { normal, offset: offset / lead });
    }
    Ok(found.into_iter().collect())
}

/// `P° = { x : x . y >= -1 for all y in P }`. Each facet `a . y <= b` of
/// `P` (with `b > 0` as the origin is interior) gives the vertex `-a / b`.
pub fn polar_polytope(p: &LatticePolytope) -> Result<RationalPolytope> {
    let facets = p.facets()?;
    if facets.iter().any(|f| !f.offset.is_positive()) {
        return Err(Error::OriginNotInterior);
    }
    let mut vertices: Vec<Vec<ExactRational>> =
        facets.iter().map(|f| f.normal.iter().map(|a| -a / &f.offset).collect()).collect();
    vertices.sort();
    vertices.dedup();
    Ok(RationalPolytope { vertices })
}

/// Reflexive iff the polar has integral vertices.
pub fn is_reflexive(p: &LatticePolytope) -> Result<bool> {
    Ok(polar_polytope(p)?.is_integral())
}

pub fn format_vertex(v: &[ExactRational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}
