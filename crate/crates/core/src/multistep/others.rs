use super::classify_kernel_symmetry;
use crate::kernel::{build_kernel, group_order, DEFAULT_GROUP_BOUND};
use crate::report::CheckReport;
use crate::walks::{count_walks, verify_functional_equation, StepModel};
use serde::Serialize;

/// Enumeration data for a model whose solution is not mechanized here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OtherModelReport {
    pub model: String,
    pub steps: String,
    pub symmetric_kernel: bool,
    pub group_order: Option<usize>,
    pub functional_equation: CheckReport,
    /// `q(0,0;n)` for `n = 0..=order`, in decimal.
    pub excursions: Vec<String>,
    pub note: &'static str,
}

fn note(model: &StepModel) -> &'static str {
    match model.name() {
        "w-se-ne" | "w-e-se-ne" => "D-finite and transcendental; no closed form is claimed",
        "g10a" | "g10b" => "algebraic via half-orbit sums; that solution is not implemented",
        _ => "algebraicity expected from analytic methods; out of scope",
    }
}

/// The two transcendental models with a symmetric kernel and the three
/// weighted models with a group of order 10.
pub fn enumerate_other_models(order: usize) -> Vec<OtherModelReport> {
    [StepModel::w_se_ne(), StepModel::w_e_se_ne(), StepModel::g10a(), StepModel::g10b(), StepModel::g10c()]
        .into_iter()
        .map(|m| {
            let table = count_walks(&m, order);
            OtherModelReport {
                model: m.name().to_string(),
                steps: m.describe(),
                symmetric_kernel: classify_kernel_symmetry(&m),
                group_order: build_kernel(&m).and_then(|k| group_order(&k, DEFAULT_GROUP_BOUND)).ok(),
                functional_equation: verify_functional_equation(&table),
                excursions: table.endpoint(0, 0).iter().map(|c| c.to_string()).collect(),
                note: note(&m),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders_and_equations() {
        let reports = enumerate_other_models(10);
        let orders: Vec<Option<usize>> = reports.iter().map(|r| r.group_order).collect();
        assert_eq!(orders, [Some(4), Some(4), Some(10), Some(10), Some(10)]);
        assert!(reports.iter().all(|r| r.functional_equation.pass));
        assert!(reports[0].symmetric_kernel && reports[1].symmetric_kernel);
        assert_eq!(reports[4].excursions.len(), 11);
    }
}
