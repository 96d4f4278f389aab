use crate::kernel::{build_kernel, group_order, kernel_roots};
use crate::series::LaurentSeries;
use crate::walks::{Step, StepModel, COMPASS};
use serde::Serialize;

/// Whether `(1,1)` is the only step with `dy = 1`, multiplicities ignored.
pub fn classify_kernel_symmetry(model: &StepModel) -> bool {
    let up: Vec<Step> = model.steps().filter(|((_, dy), _)| *dy == 1).map(|(s, _)| s).collect();
    up == [(1, 1)]
}

fn xbar_polynomial(s: &LaurentSeries, order: i64) -> bool {
    s.terms().filter(|(n, _)| *n <= order).all(|(_, p)| p.hi().map_or(true, |h| h <= 0))
}

/// Whether the sum and product of the kernel roots, computed as series
/// through `t^order`, have no positive powers of `x`. Models whose roots
/// are not Laurent series in `x` fail.
pub fn root_functions_xbar_polynomial(model: &StepModel, order: i64) -> bool {
    let Ok(k) = build_kernel(model) else { return false };
    let Ok(roots) = kernel_roots(&k, order) else { return false };
    xbar_polynomial(&roots.sum(), order) && xbar_polynomial(&roots.product(), order)
}

/// The predicate next to its independent cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryEvidence {
    pub model: String,
    pub steps: String,
    pub predicate: bool,
    pub xbar_polynomial: bool,
}

impl SymmetryEvidence {
    pub fn agrees(&self) -> bool {
        self.predicate == self.xbar_polynomial
    }
}

pub fn symmetry_evidence(model: &StepModel, order: i64) -> SymmetryEvidence {
    SymmetryEvidence {
        model: model.name().to_string(),
        steps: model.describe(),
        predicate: classify_kernel_symmetry(model),
        xbar_polynomial: root_functions_xbar_polynomial(model, order),
    }
}

/// Excludes step sets whose quadrant problem is empty, one-dimensional,
/// or equivalent to a half-plane problem.
pub fn is_nondegenerate(steps: &[Step]) -> bool {
    let any = |f: &dyn Fn(&Step) -> bool| steps.iter().any(f);
    let all = |f: &dyn Fn(&Step) -> bool| steps.iter().all(f);
    any(&|s| s.0 < 0)
        && any(&|s| s.0 > 0)
        && any(&|s| s.1 < 0)
        && any(&|s| s.1 > 0)
        && any(&|s| s.0 >= 0 && s.1 >= 0)
        && !all(&|s| s.0 >= s.1)
        && !all(&|s| s.0 <= s.1)
}

/// A nondegenerate step set up to the diagonal reflection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanClass {
    pub steps: String,
    pub group_order: usize,
    /// Whether the set or its reflection satisfies the predicate; `steps`
    /// shows the orientation that does.
    pub symmetric_kernel: bool,
    pub xbar_polynomial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub nondegenerate_sets: usize,
    pub classes: usize,
    pub finite_group: Vec<ScanClass>,
}

impl ScanSummary {
    pub fn symmetric_kernel(&self) -> impl Iterator<Item = &ScanClass> {
        self.finite_group.iter().filter(|c| c.symmetric_kernel)
    }
}

fn model_of(steps: &[Step]) -> StepModel {
    StepModel::new("scan", steps.iter().map(|&(a, b)| ((a as i64, b as i64), 1))).expect("small steps")
}

/// Runs over all unweighted small-step sets, keeps the nondegenerate ones
/// modulo the diagonal reflection, and applies the predicate to those with
/// a finite group of order at most `bound`.
pub fn finite_group_scan(bound: usize, order: i64) -> ScanSummary {
    let all: Vec<Step> = COMPASS.iter().map(|(_, s)| *s).collect();
    let mut nondegenerate = 0;
    let mut seen = std::collections::BTreeSet::new();
    let mut finite = Vec::new();
    for mask in 1u32..256 {
        let mut steps: Vec<Step> = (0..8).filter(|b| mask >> b & 1 == 1).map(|b| all[b]).collect();
        if !is_nondegenerate(&steps) {
            continue;
        }
        nondegenerate += 1;
        steps.sort();
        let mut flipped: Vec<Step> = steps.iter().map(|&(a, b)| (b, a)).collect();
        flipped.sort();
        let key = steps.clone().min(flipped.clone());
        if !seen.insert(key) {
            continue;
        }
        let m = model_of(&steps);
        let t = model_of(&flipped);
        let Ok(g) = build_kernel(&m).and_then(|k| group_order(&k, bound)) else { continue };
        // show the orientation that satisfies the predicate, if any
        let shown = if !classify_kernel_symmetry(&m) && classify_kernel_symmetry(&t) { &t } else { &m };
        finite.push(ScanClass {
            steps: shown.describe(),
            group_order: g,
            symmetric_kernel: classify_kernel_symmetry(&m) || classify_kernel_symmetry(&t),
            xbar_polynomial: root_functions_xbar_polynomial(&m, order) || root_functions_xbar_polynomial(&t, order),
        });
    }
    ScanSummary { nondegenerate_sets: nondegenerate, classes: seen.len(), finite_group: finite }
}
