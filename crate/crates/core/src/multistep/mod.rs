//! Models whose root symmetric functions are polynomials in `1/x`: the
//! classification, the weighted multiple-step model solved with the same
//! tools as Gessel's, and enumeration support for the remaining ones.

mod classify;
mod others;
mod weighted;

pub use classify::{
    classify_kernel_symmetry, finite_group_scan, is_nondegenerate, root_functions_xbar_polynomial, symmetry_evidence,
    ScanClass, ScanSummary, SymmetryEvidence,
};
pub use others::{enumerate_other_models, OtherModelReport};
pub use weighted::{
    weighted_dde, weighted_orbit_equations, weighted_table_size, WeightedBoundary, WeightedCheck, MAX_LAMBDA,
    WEIGHTED_LAMBDAS,
};
