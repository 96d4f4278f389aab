//! Residual reports shared by every verifier.

use crate::series::{Coeff, Series};
use serde::{Deserialize, Serialize};

/// Outcome of one identity checked to a t-order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartReport {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_sample: Option<String>,
}

impl PartReport {
    pub fn passed(name: impl Into<String>) -> Self {
        PartReport { name: name.into(), pass: true, first_failing_order: None, residual_sample: None }
    }

    pub fn failed(name: impl Into<String>, order: Option<i64>, sample: impl Into<String>) -> Self {
        PartReport { name: name.into(), pass: false, first_failing_order: order, residual_sample: Some(sample.into()) }
    }

    /// Passes when `residual` is known through `order` and vanishes there.
    pub fn zero<C: Coeff>(name: impl Into<String>, residual: &Series<C>, order: i64) -> Self {
        let name = name.into();
        if let Some((n, c)) = residual.terms().find(|(n, c)| *n <= order && !c.is_ring_zero()) {
            return PartReport::failed(name, Some(n), format!("t^{n}: {}", c.describe()));
        }
        if residual.order() < order {
            let known = residual.order();
            return PartReport::failed(name, Some(known + 1), format!("residual known only through t^{known}"));
        }
        PartReport::passed(name)
    }

    pub fn equal<C: Coeff>(name: impl Into<String>, lhs: &Series<C>, rhs: &Series<C>, order: i64) -> Self {
        PartReport::zero(name, &lhs.sub(rhs), order)
    }

    /// A boolean property that has no t-order attached.
    pub fn holds(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            PartReport::passed(name)
        } else {
            PartReport::failed(name, None, detail)
        }
    }
}

/// Outcome of a named check, made of one or more identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub order: i64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_sample: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartReport>,
}

impl CheckReport {
    pub fn from_parts(check: impl Into<String>, order: i64, parts: Vec<PartReport>) -> Self {
        let pass = parts.iter().all(|p| p.pass);
        let first_failing_order = parts.iter().filter(|p| !p.pass).filter_map(|p| p.first_failing_order).min();
        let residual_sample = parts
            .iter()
            .filter(|p| !p.pass)
            .min_by_key(|p| p.first_failing_order.unwrap_or(i64::MAX))
            .map(|p| format!("{}: {}", p.name, p.residual_sample.as_deref().unwrap_or("failed")));
        CheckReport { check: check.into(), order, pass, first_failing_order, residual_sample, parts }
    }

    /// A report for a computation that could not be carried out.
    pub fn error(check: impl Into<String>, order: i64, err: impl std::fmt::Display) -> Self {
        let check = check.into();
        let part = PartReport::failed(check.clone(), None, err.to_string());
        CheckReport::from_parts(check, order, vec![part])
    }

    pub fn part(&self, name: &str) -> Option<&PartReport> {
        self.parts.iter().find(|p| p.name == name)
    }

    pub fn failing_parts(&self) -> Vec<&str> {
        self.parts.iter().filter(|p| !p.pass).map(|p| p.name.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::UnivariateSeries;

    #[test]
    fn first_failure_wins() {
        let ok: UnivariateSeries = Series::zero(10);
        let bad: UnivariateSeries = Series::from_ints(0, &[0, 0, 0, 5], 10);
        let short: UnivariateSeries = Series::zero(4);
        let r = CheckReport::from_parts(
            "demo",
            10,
            vec![PartReport::zero("a", &ok, 10), PartReport::zero("b", &bad, 10), PartReport::zero("c", &short, 10)],
        );
        assert!(!r.pass);
        assert_eq!(r.first_failing_order, Some(3));
        assert_eq!(r.residual_sample.as_deref(), Some("b: t^3: 5"));
        assert_eq!(r.failing_parts(), vec!["b", "c"]);
        assert_eq!(r.part("c").unwrap().first_failing_order, Some(5));
    }
}
