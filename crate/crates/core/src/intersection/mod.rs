//! Schubert calculus, Chern-class curve counts, splitting-type cohomology
//! and lattice-polytope polarity.

mod chern;
mod counts;
mod fermat;
mod grassmann;
mod poly;
mod polytope;
mod projective;

pub use chern::{
    chern_sym_power, direct_sum, dual_tautological, invert_total, quotient, twist, ChernVector, GradedRing, TruncatedPoly,
};
pub use counts::{
    conic_count, count_conics_on_quintic, count_lines_on_hypersurface, projective_space_cotangent_top, pullback,
    splitting_cohomology, ConicCount, SplittingCohomology,
};
pub use fermat::{fermat_line_census, second_type_residue, FermatCensus, FAMILY_CONTRIBUTION, FIRST_TYPE_MULTIPLICITY};
pub use grassmann::{integrate, pieri_mult, schur_polynomial, GrassmannClass, Partition};
pub use poly::{compositions, elementary_symmetric, subsets, MPoly};
pub use polytope::{format_vertex, is_reflexive, polar_polytope, Facet, LatticePolytope, RationalPolytope};
pub use projective::{segre_pushforward, ProjBundle, ProjBundleClass};
