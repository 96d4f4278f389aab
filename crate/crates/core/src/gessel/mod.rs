//! The algebraic solution of Gessel walks, mechanized as a chain of exact
//! truncated-series verifications against the walk-count oracle.

mod boundary;
mod chain;
mod cubic;
mod theorem;

pub use boundary::{build_boundary, BoundaryInvariants, BoundarySeries};
pub use cubic::{
    critical_series, cubic_discriminant, decoupled, decoupled_value, derive_discriminant_conditions,
    factorization_identity, pol, to_s, verify_critical, verify_cubic_dde, verify_discriminant, CriticalSeries,
    DiscriminantConditions, DiscriminantError, Factorization, VARS,
};
pub use theorem::{
    derive_q0y_from_kernel, kernel_curve_x, octic, parametrize, q00_closed_form, q0y_fraction, quartic,
    qxt0_fraction, r1_closed_form, r2_closed_form, t_alt_relation, t_relation, u_alt_relation, u_relation,
    v_relation, verify_annihilators, verify_parametrization, verify_theorem, z_alt_relation, ParametrizationSeries,
};
pub use chain::{verify_orbit_equations, verify_reconstructed_relation, verify_sum_identity, OrbitValues};

/// Table size needed to check the orbit identities through `t^order`:
/// substituting `Y1`, of valuation `-1`, halves the usable orders.
pub fn table_size(order: i64) -> usize {
    (2 * order.max(0) + 4) as usize
}

use crate::kernel::{build_kernel, kernel_roots};
use crate::report::CheckReport;
use crate::walks::{count_walks, StepModel};

/// The verifiable steps of the solution, in proof order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GesselCheck {
    Orbit,
    Sum,
    Reconstruct,
    Cubic,
    Critical,
    Annihilators,
    Discriminant,
    Theorem,
    Q0yBridge,
}

impl GesselCheck {
    pub const ALL: [GesselCheck; 9] = [
        GesselCheck::Orbit,
        GesselCheck::Sum,
        GesselCheck::Reconstruct,
        GesselCheck::Cubic,
        GesselCheck::Critical,
        GesselCheck::Annihilators,
        GesselCheck::Discriminant,
        GesselCheck::Theorem,
        GesselCheck::Q0yBridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GesselCheck::Orbit => "orbit",
            GesselCheck::Sum => "sum",
            GesselCheck::Reconstruct => "reconstruct",
            GesselCheck::Cubic => "cubic",
            GesselCheck::Critical => "critical",
            GesselCheck::Annihilators => "annihilators",
            GesselCheck::Discriminant => "discriminant",
            GesselCheck::Theorem => "theorem",
            GesselCheck::Q0yBridge => "q0y-bridge",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Walk-table size that makes every series in the check honest through
    /// `t^order`.
    pub fn table_size(self, order: i64) -> usize {
        let n = order.max(0) as usize;
        match self {
            GesselCheck::Orbit | GesselCheck::Sum | GesselCheck::Reconstruct => table_size(order),
            GesselCheck::Cubic | GesselCheck::Annihilators | GesselCheck::Q0yBridge => n + 4,
            GesselCheck::Critical => n + 8,
            GesselCheck::Discriminant => n + 16,
            GesselCheck::Theorem => n + 12,
        }
    }

    /// Runs the check against a freshly counted Gessel table.
    pub fn run(self, order: i64) -> CheckReport {
        let table = count_walks(&StepModel::gessel(), self.table_size(order));
        self.run_on(&table, order)
    }

    /// Runs the check against the given table, which may be corrupted.
    pub fn run_on(self, table: &crate::walks::WalkTable, order: i64) -> CheckReport {
        let b = build_boundary(table);
        let inv = BoundaryInvariants::from_boundary(&b);
        let roots = || {
            build_kernel(&StepModel::gessel()).and_then(|k| kernel_roots(&k, order + 4))
        };
        let with_roots = |f: fn(&BoundarySeries, &crate::kernel::KernelRoots, i64) -> CheckReport| match roots() {
            Ok(r) => f(&b, &r, order),
            Err(e) => CheckReport::error(self.name(), order, e),
        };
        match self {
            GesselCheck::Orbit => with_roots(verify_orbit_equations),
            GesselCheck::Sum => with_roots(verify_sum_identity),
            GesselCheck::Reconstruct => with_roots(verify_reconstructed_relation),
            GesselCheck::Cubic => verify_cubic_dde(&b, &inv, order),
            GesselCheck::Critical => verify_critical(&b, order),
            GesselCheck::Annihilators => verify_annihilators(&inv, order),
            GesselCheck::Discriminant => verify_discriminant(&inv, order),
            GesselCheck::Theorem => match parametrize(table.maxn() as i64) {
                Ok(p) => {
                    let mut parts = verify_parametrization(&p, order).parts;
                    parts.extend(verify_theorem(table, &p, order).parts);
                    CheckReport::from_parts("theorem", order, parts)
                }
                Err(e) => CheckReport::error("theorem", order, e),
            },
            GesselCheck::Q0yBridge => derive_q0y_from_kernel(table, order),
        }
    }
}
