//! The cubic equation satisfied by `R(x)`, the critical series of the
//! generalized quadratic method, and the discriminant conditions.

use super::chain::{lifted, xpow};
use super::{BoundaryInvariants, BoundarySeries};
use crate::report::{CheckReport, PartReport};
use crate::series::{
    int, lift, newton_implicit, rat, substitute_boundary, LaurentSeries, MPoly, PolyRelation, Series,
    SeriesError, SubstitutionCertificate, UnivariateSeries, Var,
};
use std::collections::BTreeMap;

/// Variables of every polynomial in this module: the unknown `x0 = R(x)`,
/// the invariants `x1 = S(0)`, `x2 = R'(0)`, `x3 = R''(0)`, then `t`, `x`,
/// and `s = x + 1/x`.
pub const VARS: [&str; 7] = ["x0", "x1", "x2", "x3", "t", "x", "s"];

fn parse(text: &str) -> MPoly {
    MPoly::parse(&VARS, text).expect("built-in polynomial parses")
}

/// `Pol(x0, x1, x2, x3, t, x)`, the cubic relation `Pol(R(x), S(0), R'(0), R''(0), t, x) = 0`.
pub fn pol() -> MPoly {
    parse(
        "x0^3 + (x1 + 3*x^-1 - t^-1)*x0^2
         + (2*x^-2 - x^-1*t^-1 + x*t^-1 - x^2 - 2*x2 + (2*x^-1 - t^-1)*x1)*x0
         - x3 - x2*(2*x1 + 2*x^-1 - t^-1) - x*x1*(x - t^-1) - x",
    )
}

/// `P(x)`, written with `x0 = R(x)`; it satisfies `P(x) = P(1/x)`.
pub fn decoupled() -> MPoly {
    parse(
        "x0^3 + (x1 + 3*x^-1 - t^-1)*x0^2
         + (2*x^-2 - x^-1*t^-1 + x*t^-1 - x^2 - 2*x2 + (2*x^-1 - t^-1)*x1)*x0
         - x^2*x1 + x*(2*x2 + x1*t^-1 - 1)",
    )
}

/// The symmetric Laurent polynomial that `P(x)` turns out to be.
pub fn decoupled_value() -> MPoly {
    parse("2*(x + x^-1)*x2 + x2*(2*x1 - t^-1) + x3")
}

fn t_series() -> LaurentSeries {
    lifted(&UnivariateSeries::t())
}

fn eval_x(p: &MPoly, r: &LaurentSeries, inv: &BoundaryInvariants) -> Result<LaurentSeries, SeriesError> {
    p.eval_series(&[
        ("x0", r.clone()),
        ("x1", lifted(&inv.s0)),
        ("x2", lifted(&inv.r1)),
        ("x3", lifted(&inv.r2)),
        ("t", t_series()),
        ("x", xpow(1)),
    ])
}

fn eval_at(p: &MPoly, x0: &UnivariateSeries, x: &UnivariateSeries, inv: &BoundaryInvariants) -> Result<UnivariateSeries, SeriesError> {
    p.eval_series(&[
        ("x0", x0.clone()),
        ("x1", inv.s0.clone()),
        ("x2", inv.r1.clone()),
        ("x3", inv.r2.clone()),
        ("t", UnivariateSeries::t()),
        ("x", x.clone()),
    ])
}

/// Checks the decoupled equation `P(x) = P(1/x)`, the closed form of
/// `P(x)`, and `Pol(R(x), S(0), R'(0), R''(0), t, x) = 0`.
pub fn verify_cubic_dde(b: &BoundarySeries, inv: &BoundaryInvariants, order: i64) -> CheckReport {
    let run = || -> Result<Vec<PartReport>, SeriesError> {
        let r = b.r_series();
        let p = eval_x(&decoupled(), &r, inv)?;
        let value = eval_x(&decoupled_value(), &r, inv)?;
        let residual = eval_x(&pol(), &r, inv)?;
        Ok(vec![
            PartReport::equal("P(x)=P(1/x)", &p, &p.reflect(), order),
            PartReport::equal("[x^1]P(x)=2R'(0)", &p.var_coeff(1), &inv.r1.scale(&int(2)), order),
            PartReport::equal("P(x)=2(x+1/x)R'(0)+R'(0)(2S(0)-1/t)+R''(0)", &p, &value, order),
            PartReport::zero("Pol(R(x),S(0),R'(0),R''(0),t,x)=0", &residual, order),
        ])
    };
    match run() {
        Ok(parts) => CheckReport::from_parts("cubic", order, parts),
        Err(e) => CheckReport::error("cubic", order, e),
    }
}

/// Outcome of the exact identity
/// `t x^2 (dPol/dx0 + x^2 dPol/dx) = (1-x)(1+x)(2tx^2+2t-x)(x0 x + x1 x + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub holds: bool,
    /// The variables among `x0..x3` the two sides actually involve.
    pub involves: Vec<String>,
    /// Readable statement of the ring in which the identity was checked.
    pub ring: String,
    pub difference: MPoly,
}

pub fn factorization_identity() -> Factorization {
    let p = pol();
    let combo = p.derivative("x0").add(&p.derivative("x").mul(&parse("x^2")));
    let lhs = parse("t*x^2").mul(&combo);
    let rhs = parse("(1 - x)*(1 + x)*(2*t*x^2 + 2*t - x)*(x0*x + x1*x + 1)");
    let difference = lhs.sub(&rhs);
    let involves: Vec<String> =
        ["x0", "x1", "x2", "x3"].iter().filter(|v| lhs.involves(v)).map(|v| v.to_string()).collect();
    let absent: Vec<&str> = ["x2", "x3"].into_iter().filter(|v| !lhs.involves(v)).collect();
    let ring = format!(
        "Q[x0, x1, x2, x3, t, 1/t, x, 1/x]; {} cancel{} from the left side",
        absent.join(" and "),
        if absent.len() == 1 { "s" } else { "" }
    );
    Factorization { holds: difference.is_zero(), involves, ring, difference }
}

/// The three critical series: `X1 = 1`, `X2 = -1`, and the power series
/// `X0` with `2 t X0^2 + 2 t - X0 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalSeries {
    pub x0: UnivariateSeries,
    pub x1: UnivariateSeries,
    pub x2: UnivariateSeries,
    pub factorization: Factorization,
}

pub fn critical_series(order: i64) -> Result<CriticalSeries, SeriesError> {
    let two_t = UnivariateSeries::t().scale(&int(2));
    let rel = PolyRelation::from_coeffs(vec![two_t.clone(), Series::constant(int(-1)), two_t]);
    let x0 = newton_implicit(&rel, int(0), order)?;
    Ok(CriticalSeries {
        x0,
        x1: Series::constant(int(1)),
        x2: Series::constant(int(-1)),
        factorization: factorization_identity(),
    })
}

fn r_at(b: &BoundarySeries, x: &UnivariateSeries) -> Result<UnivariateSeries, SeriesError> {
    if x.is_exact() && x.degree() == Some(0) {
        return Ok(b.r_series().eval_var(&x.coeff(0).unwrap()));
    }
    let composed = substitute_boundary(&b.r, &lift(x, Var::X), &SubstitutionCertificate::trivial((0, 0)))?;
    Ok(composed.var_coeff(0))
}

/// The factorization identity, and the cancellation of both partial
/// derivatives of `Pol` at each critical series with oracle data.
pub fn verify_critical(b: &BoundarySeries, order: i64) -> CheckReport {
    let inv = BoundaryInvariants::from_boundary(b);
    let run = || -> Result<Vec<PartReport>, SeriesError> {
        let crit = critical_series(order + 4)?;
        let f = &crit.factorization;
        let mut parts = vec![PartReport::holds(
            "factorization identity",
            f.holds,
            format!("difference {}", f.difference),
        )];
        let p = pol();
        let d0 = p.derivative("x0");
        let dx = p.derivative("x");
        for (name, x) in [("X0", &crit.x0), ("X1", &crit.x1), ("X2", &crit.x2)] {
            let rx = r_at(b, x)?;
            parts.push(PartReport::zero(format!("dPol/dx0 at {name}"), &eval_at(&d0, &rx, x, &inv)?, order));
            parts.push(PartReport::zero(format!("dPol/dx at {name}"), &eval_at(&dx, &rx, x, &inv)?, order));
        }
        Ok(parts)
    };
    match run() {
        Ok(parts) => CheckReport::from_parts("critical", order, parts),
        Err(e) => CheckReport::error("critical", order, e),
    }
}

/// The discriminant of `Pol` in `x0`, its rewriting in `s = x + 1/x`, and
/// its specializations at the three critical values of `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantConditions {
    pub disc: MPoly,
    pub disc_s: MPoly,
    /// `Disc` at `s = 2`, `s = -2` and `s = 1/(2t)`.
    pub relations: [MPoly; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiscriminantError {
    #[error("discriminant is not symmetric under x -> 1/x")]
    Asymmetric,
    #[error("cubic is not monic in x0")]
    NotMonic,
}

/// Discriminant of a monic cubic `x0^3 + b x0^2 + c x0 + d`.
pub fn cubic_discriminant(p: &MPoly) -> Result<MPoly, DiscriminantError> {
    let by_deg: BTreeMap<i32, MPoly> = p.collect("x0");
    let get = |k: i32| by_deg.get(&k).cloned().unwrap_or_else(|| p.constant_like(int(0)));
    if get(3) != p.constant_like(int(1)) || by_deg.keys().any(|&k| !(0..=3).contains(&k)) {
        return Err(DiscriminantError::NotMonic);
    }
    let (b, c, d) = (get(2), get(1), get(0));
    let b2 = b.mul(&b);
    let c2 = c.mul(&c);
    Ok(b2
        .mul(&c2)
        .sub(&c2.mul(&c).scale(&int(4)))
        .sub(&b2.mul(&b).mul(&d).scale(&int(4)))
        .sub(&d.mul(&d).scale(&int(27)))
        .add(&b.mul(&c).mul(&d).scale(&int(18))))
}

/// Rewrites a polynomial symmetric under `x -> 1/x` in terms of
/// `s = x + 1/x`, using `x^k + x^-k = D_k(s)` with
/// `D_k = s D_{k-1} - D_{k-2}`.
pub fn to_s(p: &MPoly) -> Result<MPoly, DiscriminantError> {
    if p.reflect("x") != *p {
        return Err(DiscriminantError::Asymmetric);
    }
    let by_x = p.collect("x");
    let s = MPoly::var(&VARS, "s");
    let max = by_x.keys().copied().max().unwrap_or(0).max(0);
    let mut dickson = vec![p.constant_like(int(2)), s.clone()];
    for k in 2..=max as usize {
        let next = s.mul(&dickson[k - 1]).sub(&dickson[k - 2]);
        dickson.push(next);
    }
    let mut out = p.constant_like(int(0));
    for (k, c) in by_x {
        if k == 0 {
            out = out.add(&c);
        } else if k > 0 {
            out = out.add(&c.mul(&dickson[k as usize]));
        }
    }
    Ok(out)
}

pub fn derive_discriminant_conditions() -> Result<DiscriminantConditions, DiscriminantError> {
    let disc = cubic_discriminant(&pol())?;
    let disc_s = to_s(&disc)?;
    let half_over_t = MPoly::zero(&VARS).monomial_like(rat(1, 2), &[("t", -1)]);
    let relations = [
        disc_s.substitute_value("s", &int(2)),
        disc_s.substitute_value("s", &int(-2)),
        disc_s.substitute("s", &half_over_t),
    ];
    Ok(DiscriminantConditions { disc, disc_s, relations })
}

/// The three discriminant relations vanish on the oracle invariants.
pub fn verify_discriminant(inv: &BoundaryInvariants, order: i64) -> CheckReport {
    let cond = match derive_discriminant_conditions() {
        Ok(c) => c,
        Err(e) => return CheckReport::error("discriminant", order, e),
    };
    let mut parts = vec![PartReport::passed("Disc symmetric in x and 1/x")];
    let zero = UnivariateSeries::zero(crate::series::EXACT);
    for (name, rel) in ["Disc at s=2", "Disc at s=-2", "Disc at s=1/(2t)"].iter().zip(&cond.relations) {
        match eval_at(rel, &zero, &zero, inv) {
            Ok(v) => parts.push(PartReport::zero(*name, &v, order)),
            Err(e) => parts.push(PartReport::failed(*name, None, e.to_string())),
        }
    }
    CheckReport::from_parts("discriminant", order, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gessel::build_boundary;
    use crate::walks::{count_walks, StepModel};

    #[test]
    fn pol_is_p_minus_its_value() {
        assert_eq!(pol(), decoupled().sub(&decoupled_value()));
    }

    #[test]
    fn factorization_is_exact() {
        let f = factorization_identity();
        assert!(f.holds, "{}", f.difference);
        assert_eq!(f.involves, vec!["x0", "x1"]);
        assert!(f.ring.contains("x2 and x3"));
    }

    #[test]
    fn x0_series() {
        let c = critical_series(7).unwrap();
        assert_eq!(c.x0, Series::from_ints(1, &[2, 0, 8, 0, 64, 0, 640], 7));
    }

    #[test]
    fn discriminant_is_symmetric() {
        let c = derive_discriminant_conditions().unwrap();
        assert!(!c.disc_s.involves("x"));
        assert!(!c.disc.involves("s"));
        assert!(to_s(&parse("x + 2*x^-1")).is_err());
        assert_eq!(to_s(&parse("x^2 + x^-2 + 3")).unwrap(), parse("s^2 + 1"));
    }

    #[test]
    fn cubic_chain_on_oracle() {
        let table = count_walks(&StepModel::gessel(), 20);
        let b = build_boundary(&table);
        let inv = BoundaryInvariants::from_boundary(&b);
        let r = verify_cubic_dde(&b, &inv, 12);
        assert!(r.pass, "{r:?}");
        let r = verify_critical(&b, 8);
        assert!(r.pass, "{r:?}");
    }
}
