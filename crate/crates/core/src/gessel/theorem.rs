//! Annihilating polynomials, the rational parametrization, and the closed
//! forms for `Q(0,0)`, `Q(xt,0)` and `Q(0,y)`.

use super::BoundaryInvariants;
use crate::report::{CheckReport, PartReport};
use crate::series::{
    compose, int, lift, newton_implicit, Coeff, LaurentPoly, LaurentSeries, MPoly, PolyRelation, Series, SeriesError,
    UnivariateSeries, Var,
};
use crate::walks::{boundary_sections, WalkTable};

const PVARS: [&str; 12] = ["T", "Z", "U", "V", "Tt", "Zt", "Ut", "R1", "S0", "t", "x", "y"];

fn parse(text: &str) -> MPoly {
    MPoly::parse(&PVARS, text).expect("built-in polynomial parses")
}

/// Collects `p` in `unknown` and evaluates each coefficient on `values`.
fn relation<C: Coeff>(p: &MPoly, unknown: &str, values: &[(&str, Series<C>)]) -> Result<PolyRelation<C>, SeriesError> {
    let by_deg = p.collect(unknown);
    let deg = by_deg.keys().copied().max().unwrap_or(0);
    let mut coeffs = vec![Series::zero(crate::series::EXACT); deg as usize + 1];
    for (k, c) in by_deg {
        assert!(k >= 0, "negative power of the unknown");
        coeffs[k as usize] = c.eval_series(values)?;
    }
    Ok(PolyRelation::from_coeffs(coeffs))
}

/// The quartic satisfied by `R'(0)`, in the variables `R1` and `t`.
pub fn quartic() -> MPoly {
    parse(
        "729*t^6*R1^4 + 243*t^4*(4*t^2 + 1)*R1^3 - 27*t^2*(14*t^4 + 19*t^2 - 1)*R1^2
         - (20*t^2 - 1)*(7*t^2 - 6*t + 1)*(7*t^2 + 6*t + 1)*R1 - t^2*(343*t^4 - 37*t^2 + 1)",
    )
}

/// The octic satisfied by `S(0)`, in the variables `S0` and `t`.
pub fn octic() -> MPoly {
    parse(
        "27*t^7*S0^8 + 108*t^6*S0^7 + 189*t^5*S0^6 + 189*t^4*S0^5 - 9*t^3*(32*t^4 + 28*t^2 - 13)*S0^4
         - 9*t^2*(64*t^4 + 56*t^2 - 5)*S0^3 - 2*t*(256*t^6 - 312*t^4 + 156*t^2 - 5)*S0^2
         - (32*t^2 - 1)*(4*t^2 - 6*t + 1)*(4*t^2 + 6*t + 1)*S0 - t*(256*t^6 + 576*t^4 - 48*t^2 + 1)",
    )
}

/// The quartic and octic annihilators vanish on the oracle invariants.
pub fn verify_annihilators(inv: &BoundaryInvariants, order: i64) -> CheckReport {
    let t = UnivariateSeries::t();
    let run = || -> Result<Vec<PartReport>, SeriesError> {
        let q = quartic().eval_series(&[("R1", inv.r1.clone()), ("t", t.clone())])?;
        let o = octic().eval_series(&[("S0", inv.s0.clone()), ("t", t.clone())])?;
        Ok(vec![PartReport::zero("quartic in R'(0)", &q, order), PartReport::zero("octic in S(0)", &o, order)])
    };
    match run() {
        Ok(parts) => CheckReport::from_parts("annihilators", order, parts),
        Err(e) => CheckReport::error("annihilators", order, e),
    }
}

/// The parametrizing series: `T, Z = sqrt(T), U` (coefficients in `x`),
/// `V` (coefficients in `y`), and the alternative `T~, Z~, U~`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametrizationSeries {
    pub t: UnivariateSeries,
    pub z: UnivariateSeries,
    pub u: LaurentSeries,
    pub v: LaurentSeries,
    pub t_alt: UnivariateSeries,
    pub z_alt: UnivariateSeries,
    pub u_alt: LaurentSeries,
    pub order: i64,
}

pub fn t_relation() -> MPoly {
    parse("(T - 1)*(T + 3)^3 - 256*t^2*T^3")
}

pub fn u_relation() -> MPoly {
    parse("16*T^2*(U^2 - T) - x*(U + U*T - 2*T)*(U^2 - 9*T + 8*T*U + T^2 - T*U^2)")
}

pub fn v_relation() -> MPoly {
    parse("1 - T + 3*V + V*T - y*V^2*(3 + V + T - V*T)")
}

pub fn t_alt_relation() -> MPoly {
    parse("Tt - t^2*(1 - Tt)*(1 + 3*Tt)^3")
}

pub fn z_alt_relation() -> MPoly {
    parse("Zt - Tt*(1 - Zt + Zt^2)")
}

pub fn u_alt_relation() -> MPoly {
    parse(
        "(Ut - 1)*Ut*(Zt - 1)*(Zt + 1)^3*(Zt^2 + Ut)
         - x*Zt*(Ut + Zt - Ut*Zt + Ut*Zt^2)*(Ut - Ut*Zt - Zt^3 + Ut*Zt^2)",
    )
}

fn xs(var: Var) -> LaurentSeries {
    Series::constant(LaurentPoly::monomial(var, int(1), 1))
}

pub fn parametrize(order: i64) -> Result<ParametrizationSeries, SeriesError> {
    let t = UnivariateSeries::t();
    let tser = newton_implicit(&relation(&t_relation(), "T", &[("t", t.clone())])?, int(1), order)?;
    let z = tser.sqrt()?;
    let lx = |s: &UnivariateSeries| lift(s, Var::X);
    let x = xs(Var::X);
    let u_rel = relation(&u_relation(), "U", &[("T", lx(&tser)), ("x", x.clone())])?;
    let u = newton_implicit(&u_rel, LaurentPoly::constant(Var::X, int(1)), order)?;
    let v_rel = relation(&v_relation(), "V", &[("T", lift(&tser, Var::Y)), ("y", xs(Var::Y))])?;
    let v = newton_implicit(&v_rel, LaurentPoly::zero_in(Var::Y), order)?;

    let t_alt = newton_implicit(&relation(&t_alt_relation(), "Tt", &[("t", t)])?, int(0), order)?;
    let z_alt = newton_implicit(&relation(&z_alt_relation(), "Zt", &[("Tt", t_alt.clone())])?, int(0), order)?;
    let ut_rel = relation(&u_alt_relation(), "Ut", &[("Zt", lx(&z_alt)), ("x", x)])?;
    let u_alt = newton_implicit(&ut_rel, LaurentPoly::constant(Var::X, int(1)), order)?;
    Ok(ParametrizationSeries { t: tser, z, u, v, t_alt, z_alt, u_alt, order })
}

/// Each parametrizing series satisfies its relation, and the two
/// parametrizations agree: both express `t^2` rationally, and eliminating
/// `t^2` between them gives `T = (1 + 3 T~)/(1 - T~)` and
/// `Z = (1 + Z~)/(1 - Z~)`.
pub fn verify_parametrization(p: &ParametrizationSeries, order: i64) -> CheckReport {
    let run = || -> Result<Vec<PartReport>, SeriesError> {
        let t = UnivariateSeries::t();
        let lx = |s: &UnivariateSeries| lift(s, Var::X);
        let one = UnivariateSeries::one();
        let vals_u: Vec<(&str, LaurentSeries)> = vec![("T", lx(&p.t)), ("U", p.u.clone()), ("x", xs(Var::X))];
        let vals_v: Vec<(&str, LaurentSeries)> =
            vec![("T", lift(&p.t, Var::Y)), ("V", p.v.clone()), ("y", xs(Var::Y))];
        let vals_ut: Vec<(&str, LaurentSeries)> = vec![("Zt", lx(&p.z_alt)), ("Ut", p.u_alt.clone()), ("x", xs(Var::X))];
        let t2 = t.mul(&t);
        let t2_from_t = p.t.sub(&one).mul(&p.t.add(&Series::constant(int(3))).pow(3)).div(&p.t.pow(3).scale(&int(256)))?;
        let t2_from_alt =
            p.t_alt.div(&one.sub(&p.t_alt).mul(&one.add(&p.t_alt.scale(&int(3))).pow(3)))?;
        Ok(vec![
            PartReport::zero("T relation", &t_relation().eval_series(&[("T", p.t.clone()), ("t", t.clone())])?, order),
            PartReport::equal("Z^2=T", &p.z.mul(&p.z), &p.t, order),
            PartReport::zero("U relation", &u_relation().eval_series(&vals_u)?, order),
            PartReport::zero("V relation", &v_relation().eval_series(&vals_v)?, order),
            PartReport::zero(
                "T~ relation",
                &t_alt_relation().eval_series(&[("Tt", p.t_alt.clone()), ("t", t.clone())])?,
                order,
            ),
            PartReport::zero(
                "Z~ relation",
                &z_alt_relation().eval_series(&[("Zt", p.z_alt.clone()), ("Tt", p.t_alt.clone())])?,
                order,
            ),
            PartReport::zero("U~ relation", &u_alt_relation().eval_series(&vals_ut)?, order),
            PartReport::holds(
                "constant terms",
                p.t.coeff(0) == Some(int(1))
                    && p.z.coeff(0) == Some(int(1))
                    && p.u.coeff(0) == Some(LaurentPoly::constant(Var::X, int(1)))
                    && p.v.valuation_bound() > 0
                    && p.t_alt.valuation_bound() > 0
                    && p.z_alt.valuation_bound() > 0
                    && p.u_alt.coeff(0) == Some(LaurentPoly::constant(Var::X, int(1))),
                "expected constant terms 1, 1, 1, 0, 0, 0, 1",
            ),
            PartReport::equal("t^2 from T", &t2_from_t, &t2, order),
            PartReport::equal("t^2 from T~", &t2_from_alt, &t2, order),
            PartReport::equal(
                "T(1-T~)=1+3T~",
                &p.t.mul(&one.sub(&p.t_alt)),
                &one.add(&p.t_alt.scale(&int(3))),
                order,
            ),
            PartReport::equal("Z(1-Z~)=1+Z~", &p.z.mul(&one.sub(&p.z_alt)), &one.add(&p.z_alt), order),
        ])
    };
    match run() {
        Ok(parts) => CheckReport::from_parts("parametrization", order, parts),
        Err(e) => CheckReport::error("parametrization", order, e),
    }
}

/// `Q(0,0) = 32 Z^3 (3 + 3Z - 3Z^2 + Z^3) / ((1+Z)(Z^2+3)^3)`.
pub fn q00_closed_form(p: &ParametrizationSeries) -> Result<UnivariateSeries, SeriesError> {
    let z = [("Z", p.z.clone())];
    let num = parse("32*Z^3*(3 + 3*Z - 3*Z^2 + Z^3)").eval_series(&z)?;
    let den = parse("(1 + Z)*(Z^2 + 3)^3").eval_series(&z)?;
    num.div(&den)
}

/// `R'(0) = (T-1)(21 - 6T + T^2)/(T+3)^3`.
pub fn r1_closed_form(p: &ParametrizationSeries) -> Result<UnivariateSeries, SeriesError> {
    let v = [("T", p.t.clone())];
    parse("(T - 1)*(21 - 6*T + T^2)").eval_series(&v)?.div(&parse("(T + 3)^3").eval_series(&v)?)
}

/// `R''(0) = 1024 t Z^3 (Z-1)(1 + 2Z + 7Z^2 - Z^4 - 2Z^5 + Z^6)/((1+Z)(3+Z^2)^6)`.
pub fn r2_closed_form(p: &ParametrizationSeries) -> Result<UnivariateSeries, SeriesError> {
    let v = [("Z", p.z.clone()), ("t", UnivariateSeries::t())];
    let num = parse("1024*t*Z^3*(Z - 1)*(1 + 2*Z + 7*Z^2 - Z^4 - 2*Z^5 + Z^6)").eval_series(&v)?;
    num.div(&parse("(1 + Z)*(3 + Z^2)^6").eval_series(&v)?)
}

/// Numerator and denominator of the closed form of `Q(xt,0)`.
pub fn qxt0_fraction(p: &ParametrizationSeries) -> Result<(LaurentSeries, LaurentSeries), SeriesError> {
    let v = [("T", lift(&p.t, Var::X)), ("Z", lift(&p.z, Var::X)), ("U", p.u.clone())];
    let m = "(T - 1)^2*U^3 + Z*(T - 1)*(T - 16*Z - 1)*U^2 - T*U*(T^2 + 16*Z*T - 82*T - 16*Z + 17)
             - Z*T*(T^2 - 18*T + 128*Z + 81)";
    let num = parse(&format!("16*T*(U + U*T - 2*T)*({m})")).eval_series(&v)?;
    let den = parse("(1 - T)*(T + 3)^3*(U + Z)*(U^2 - 9*T + 8*T*U + T^2 - T*U^2)").eval_series(&v)?;
    Ok((num, den))
}

/// Numerator and denominator of the closed form of `Q(0,y)`.
pub fn q0y_fraction(p: &ParametrizationSeries) -> Result<(LaurentSeries, LaurentSeries), SeriesError> {
    let v = [("T", lift(&p.t, Var::Y)), ("Z", lift(&p.z, Var::Y)), ("V", p.v.clone())];
    let n = "(Z - 1)^2*(T + 3)*V^3 + (T - 1)*(T + 2*Z - 7)*V^2 + (T - 1)*(T - 2*Z - 7)*V + (Z + 1)^2*(T + 3)";
    let num = parse(&format!("16*V*Z^3*(3 + V + T - V*T)*({n})")).eval_series(&v)?;
    let den = parse("(T - 1)*(T + 3)^3*(1 + V)^2*(1 + Z + V - V*Z)^2").eval_series(&v)?;
    Ok((num, den))
}

/// `section = num/den` through `t^order`, checked as `section * den = num`
/// through `t^(order + val(den))`. The leading coefficient of `den` is a
/// nonzero polynomial, so the two statements are equivalent.
fn fraction_part(name: &str, section: &LaurentSeries, num: &LaurentSeries, den: &LaurentSeries, order: i64) -> PartReport {
    let v = den.valuation_bound();
    let mut part = PartReport::equal(name, &section.mul(den), num, order + v);
    if let Some(n) = part.first_failing_order.as_mut() {
        *n -= v;
    }
    part
}

/// Claims (a)-(d): the closed forms for `Q(0,0)`, `Q(xt,0)` (including its
/// evenness in `t` and polynomial coefficients in `x`), `Q(0,y)`, and the
/// rational expressions for `R'(0)` and `R''(0)`.
pub fn verify_theorem(table: &WalkTable, p: &ParametrizationSeries, order: i64) -> CheckReport {
    let sec = boundary_sections(table);
    let inv = BoundaryInvariants::from_table(table);
    let run = || -> Result<Vec<PartReport>, SeriesError> {
        let qxt0 = sec.qx0.twist(1);
        let (xn, xd) = qxt0_fraction(p)?;
        let (yn, yd) = q0y_fraction(p)?;
        let even_oracle = qxt0.is_even() && qxt0.exponents_within(Some(0), None);
        Ok(vec![
            PartReport::equal("Q(0,0)", &q00_closed_form(p)?, &sec.q00, order),
            fraction_part("Q(xt,0)", &qxt0, &xn, &xd, order),
            PartReport::holds(
                "Q(xt,0) even in t with polynomial coefficients",
                even_oracle && qxt0.order() >= order,
                format!("odd or non-polynomial coefficient within t^{}", qxt0.order()),
            ),
            fraction_part("Q(0,y)", &sec.q0y, &yn, &yd, order),
            PartReport::equal("R'(0)", &r1_closed_form(p)?, &inv.r1, order),
            PartReport::equal("R''(0)", &r2_closed_form(p)?, &inv.r2, order),
        ])
    };
    match run() {
        Ok(parts) => CheckReport::from_parts("theorem", order, parts),
        Err(e) => CheckReport::error("theorem", order, e),
    }
}

/// The curve `K(xt, y) = 0` parametrized by `y`:
/// `X = (1+y)/y + t^2 (1+y) X^2`, with coefficients Laurent polynomials in `y`.
pub fn kernel_curve_x(order: i64) -> Result<LaurentSeries, SeriesError> {
    let y = |e: i64| LaurentPoly::monomial(Var::Y, int(1), e);
    let one_plus_y = LaurentPoly::from_terms(Var::Y, [(0, int(1)), (1, int(1))]);
    let rel = PolyRelation::from_coeffs(vec![
        Series::constant(one_plus_y.mul(&y(-1))),
        Series::constant(y(0).neg()),
        Series::monomial(one_plus_y.clone(), 2),
    ]);
    newton_implicit(&rel, one_plus_y.mul(&y(-1)), order)
}

/// The kernel equation written at `xt`:
/// `t(Q(xt,0) - Q(0,0)) + t(1+y)Q(0,y) = xt y` on the curve `K(xt,y) = 0`,
/// with `x = X(y)` from [`kernel_curve_x`].
pub fn derive_q0y_from_kernel(table: &WalkTable, order: i64) -> CheckReport {
    let sec = boundary_sections(table);
    let run = || -> Result<Vec<PartReport>, SeriesError> {
        let x = kernel_curve_x(order + 2)?;
        let qxt0 = compose(&sec.qx0.twist(1), &x, None)?;
        let q00 = lift(&sec.q00, Var::Y);
        let one_plus_y = Series::constant(LaurentPoly::from_terms(Var::Y, [(0, int(1)), (1, int(1))]));
        let lhs = qxt0.sub(&q00).shift(1).add(&one_plus_y.mul(&sec.q0y).shift(1));
        let rhs = x.mul(&xs(Var::Y)).shift(1);
        let kernel = parse("x*y - y - 1 - x^2*t^2*y - x^2*t^2*y^2")
            .eval_series(&[("x", x.clone()), ("y", xs(Var::Y)), ("t", lift(&UnivariateSeries::t(), Var::Y))])?;
        Ok(vec![
            PartReport::zero("x y K(X t, y)=0", &kernel, order),
            PartReport::equal("t(Q(Xt,0)-Q(0,0))+t(1+y)Q(0,y)=X t y", &lhs, &rhs, order),
            PartReport::holds("t^0 coefficients vanish", lhs.valuation_bound() >= 1, "nonzero t^0 term"),
        ])
    };
    match run() {
        Ok(parts) => CheckReport::from_parts("q0y-bridge", order, parts),
        Err(e) => CheckReport::error("q0y-bridge", order, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{count_walks, StepModel};

    #[test]
    fn parametrizing_series() {
        let p = parametrize(8).unwrap();
        assert_eq!(p.t, Series::from_ints(0, &[1, 0, 4, 0, 36, 0, 396, 0, 4788], 8));
        assert_eq!(p.z.truncate(4), Series::from_ints(0, &[1, 0, 2, 0, 16], 4));
        assert_eq!(p.t_alt.truncate(6), Series::from_ints(2, &[1, 0, 8, 0, 82], 6));
        let r = verify_parametrization(&p, 8);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn annihilators_and_theorem_small() {
        let table = count_walks(&StepModel::gessel(), 24);
        let inv = BoundaryInvariants::from_table(&table);
        assert!(verify_annihilators(&inv, 16).pass);
        let p = parametrize(24).unwrap();
        let r = verify_theorem(&table, &p, 12);
        assert!(r.pass, "{r:?}");
        let r = derive_q0y_from_kernel(&table, 12);
        assert!(r.pass, "{r:?}");
    }
}
