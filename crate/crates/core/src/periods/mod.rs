//! Hypergeometric period series, the I-function, and the period map of the
//! A0 family together with its weighted-projective bookkeeping.

mod hyper;
mod ifunction;
mod series;
mod weighted;

pub use hyper::{appell_f4, gauss_2f1, gauss_2f1_derivatives, HypValue, DEFAULT_TOL};
pub use ifunction::{contributions_outside_quadrant, degree_rows, ifunction_fg, ifunction_rows, IFunction, NilCohClass};
pub use series::{appell_f4_coeffs, eta1_coeffs, gkz_recurrence_check, GkzFailure, GkzReport, TruncSeries2};
pub use weighted::{
    branch_relation_report, delta_abc, hilbert_relation_degree_check, lambda_mu_from_xy, period_map_a0,
    period_map_a0_complex, period_map_a0_homogeneous, wproj_homogeneity_check, BranchEval, BranchReport,
    DegreeReport, ModularRingData, WeightedPoint, a0_indeterminacy,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PeriodError {
    #[error("argument outside radius of convergence")]
    OutsideRadius,
    #[error("lower parameter is a nonpositive integer")]
    PoleParameter,
    #[error("series did not converge within {0} terms")]
    NotConverged(usize),
    #[error("indeterminacy center: the map is undefined at lambda = 1/4")]
    IndeterminacyCenter,
    #[error("weighted point has all coordinates zero")]
    ZeroPoint,
    #[error("coordinate and weight lists differ in length")]
    WeightArity,
    #[error("degree class has ⟨d,v⟩ < 0")]
    NegativeAnticanonicalDegree,
    #[error(transparent)]
    Gale(#[from] crate::galedisc::GaleError),
}
