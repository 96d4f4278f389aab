//! The identities obtained by cancelling the kernel, and the relations
//! between `R(x)` and `R(1/x)` derived from them.

use super::BoundarySeries;
use crate::kernel::KernelRoots;
use crate::report::{CheckReport, PartReport};
use crate::series::{
    extract_x_part, int, substitute_boundary, BoundaryForm, ExtractMode, LaurentPoly, LaurentSeries, Rational, Series,
    SeriesError, SubstitutionCertificate, Var,
};
use num_traits::One;

pub(crate) fn xpow(k: i64) -> LaurentSeries {
    Series::constant(LaurentPoly::monomial(Var::X, int(1), k))
}

pub(crate) fn inv_t() -> LaurentSeries {
    Series::monomial(LaurentPoly::constant(Var::X, Rational::one()), -1)
}

pub(crate) fn lifted(s: &crate::series::UnivariateSeries) -> LaurentSeries {
    crate::series::lift(s, Var::X)
}

/// The boundary series evaluated at the components of the certified
/// orbit pairs.
#[derive(Debug, Clone)]
pub struct OrbitValues {
    pub y0: LaurentSeries,
    pub y1: LaurentSeries,
    pub r_x: LaurentSeries,
    pub r_xbar: LaurentSeries,
    pub r_xy0: LaurentSeries,
    pub s_y0: LaurentSeries,
    pub s_y1: LaurentSeries,
    pub s_x2y0: LaurentSeries,
    pub s_x2y1: LaurentSeries,
}

fn at(form: &BoundaryForm, inner: &LaurentSeries, cert: &SubstitutionCertificate) -> Result<LaurentSeries, SeriesError> {
    if inner.valuation_bound() >= 0 {
        substitute_boundary(form, inner, &SubstitutionCertificate::trivial((0, 0)))
    } else {
        substitute_boundary(form, inner, cert)
    }
}

impl OrbitValues {
    pub fn new(b: &BoundarySeries, roots: &KernelRoots) -> Result<Self, SeriesError> {
        let cert = &b.certificate;
        let x = xpow(1);
        let x2 = xpow(2);
        let xy0 = x.mul(&roots.y0);
        let r_x = b.r_series();
        Ok(OrbitValues {
            r_xbar: r_x.reflect(),
            r_xy0: at(&b.r, &xy0, cert)?,
            s_y0: at(&b.s, &roots.y0, cert)?,
            s_y1: at(&b.s, &roots.y1, cert)?,
            s_x2y0: at(&b.s, &x2.mul(&roots.y0), cert)?,
            s_x2y1: at(&b.s, &x2.mul(&roots.y1), cert)?,
            r_x,
            y0: roots.y0.clone(),
            y1: roots.y1.clone(),
        })
    }
}

fn run(
    check: &str,
    b: &BoundarySeries,
    roots: &KernelRoots,
    order: i64,
    body: impl FnOnce(&OrbitValues, &BoundarySeries) -> Vec<PartReport>,
) -> CheckReport {
    match OrbitValues::new(b, roots) {
        Ok(v) => CheckReport::from_parts(check, order, body(&v, b)),
        Err(e) => CheckReport::error(check, order, e),
    }
}

/// `R(x') + S(y') = x' y'` for the four substitutable pairs of the orbit of
/// `(x, Y0)`.
pub fn verify_orbit_equations(b: &BoundarySeries, roots: &KernelRoots, order: i64) -> CheckReport {
    run("orbit", b, roots, order, |v, _| orbit_parts(v, order))
}

pub(crate) fn orbit_parts(v: &OrbitValues, order: i64) -> Vec<PartReport> {
    let x = xpow(1);
    let xy0 = x.mul(&v.y0);
    vec![
        PartReport::equal("R(x)+S(Y0)=x*Y0", &v.r_x.add(&v.s_y0), &xy0, order),
        PartReport::equal("R(x*Y0)+S(Y1)=1/x", &v.r_xy0.add(&v.s_y1), &xpow(-1), order),
        PartReport::equal("R(1/x)+S(x^2*Y0)=x*Y0", &v.r_xbar.add(&v.s_x2y0), &xy0, order),
        PartReport::equal("R(x*Y0)+S(x^2*Y1)=x", &v.r_xy0.add(&v.s_x2y1), &x, order),
    ]
}

/// The sum `S(Y0) + S(Y1)` in terms of `R(1/x)`, its derived form for
/// `S(Y1) - x Y1`, and the x-constancy that produces it.
pub fn verify_sum_identity(b: &BoundarySeries, roots: &KernelRoots, order: i64) -> CheckReport {
    run("sum", b, roots, order, |v, b| sum_parts(v, b, order))
}

pub(crate) fn sum_parts(v: &OrbitValues, b: &BoundarySeries, order: i64) -> Vec<PartReport> {
    let s0 = lifted(&b.s0());
    let xbar = xpow(-1);
    let x = xpow(1);
    let lhs = v.s_y0.add(&v.s_y1);
    let constant = v.r_xbar.sub(&lhs).add(&xbar);
    let derived_rhs =
        v.r_x.add(&v.r_xbar).add(&xbar.scale(&int(2))).sub(&inv_t()).add(&x).add(&s0);
    vec![
        PartReport::equal("R(1/x)-S(Y0)-S(Y1)+1/x=-S(0)", &constant, &s0.neg(), order),
        PartReport::equal("S(Y0)+S(Y1)=R(1/x)+1/x+S(0)", &lhs, &v.r_xbar.add(&xbar).add(&s0), order),
        PartReport::equal("S(Y1)-x*Y1=R(x)+R(1/x)+2/x-1/t+x+S(0)", &v.s_y1.sub(&x.mul(&v.y1)), &derived_rhs, order),
    ]
}

/// The product `(S(Y0) - x Y0)(S(Y1) - x Y1)` and the quadratic relation
/// between `R(x)` and `R(1/x)` reconstructed from its non-negative part.
pub fn verify_reconstructed_relation(b: &BoundarySeries, roots: &KernelRoots, order: i64) -> CheckReport {
    run("reconstruct", b, roots, order, |v, b| reconstruct_parts(v, b, order))
}

pub(crate) fn reconstruct_parts(v: &OrbitValues, b: &BoundarySeries, order: i64) -> Vec<PartReport> {
    let s0u = b.s0();
    let s0 = lifted(&s0u);
    let r1 = lifted(&b.r1());
    let x = xpow(1);
    let xbar = xpow(-1);
    let it = inv_t();
    let two = int(2);
    let r = &v.r_x;
    let rb = &v.r_xbar;
    // 2/x - 1/t + x + S(0), and its reflection
    let cx = xbar.scale(&two).sub(&it).add(&x).add(&s0);
    let cxbar = x.scale(&two).sub(&it).add(&xbar).add(&s0);

    let prod_lhs = v.s_y0.sub(&x.mul(&v.y0)).mul(&v.s_y1.sub(&x.mul(&v.y1)));
    let prod_rhs = r.neg().mul(&r.add(rb).add(&xbar.scale(&two)).sub(&it).add(&x).add(&s0));

    let mixed = v.y0.mul(&v.s_y1).add(&v.y1.mul(&v.s_y0));
    let mixed_xbar = extract_x_part(&mixed, ExtractMode::Exponent(-1)).var_coeff(-1);
    let s0_over_t = s0u.shift(-1);

    let rrb = r.mul(rb);
    let nonneg_lhs = Series::one().add(&x.sub(&it).mul(&s0));
    let nonneg_rhs = r.mul(r).neg().sub(&extract_x_part(&rrb, ExtractMode::NonNeg)).sub(&cx.mul(r));

    let const_lhs = crate::series::UnivariateSeries::one().sub(&s0_over_t);
    let const_rhs = rrb.var_coeff(0).neg().sub(&b.r1().scale(&two));

    let quad_lhs = r.mul(r).add(&rrb).add(&rb.mul(rb)).add(&cx.mul(r)).add(&cxbar.mul(rb));
    let quad_rhs = r1.scale(&two).sub(&xbar.add(&x).sub(&it).mul(&s0)).sub(&Series::one());

    vec![
        PartReport::equal("(S(Y0)-x*Y0)(S(Y1)-x*Y1)=-R(x)(R(x)+R(1/x)+2/x-1/t+x+S(0))", &prod_lhs, &prod_rhs, order),
        PartReport::equal("[x^-1](Y0*S(Y1)+Y1*S(Y0))=S(0)/t", &mixed_xbar, &s0_over_t, order),
        PartReport::equal("[x^>=] product", &nonneg_lhs, &nonneg_rhs, order),
        PartReport::equal("1-S(0)/t=-[x^0]R(x)R(1/x)-2R'(0)", &const_lhs, &const_rhs, order),
        PartReport::equal("quadratic relation in R(x), R(1/x)", &quad_lhs, &quad_rhs, order),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gessel::{build_boundary, table_size};
    use crate::kernel::{build_kernel, kernel_roots};
    use crate::walks::{count_walks, StepModel};

    fn setup(order: i64) -> (BoundarySeries, KernelRoots) {
        let model = StepModel::gessel();
        let table = count_walks(&model, table_size(order));
        let roots = kernel_roots(&build_kernel(&model).unwrap(), order + 4).unwrap();
        (build_boundary(&table), roots)
    }

    #[test]
    fn chain_holds_at_order_8() {
        let (b, roots) = setup(8);
        for report in [
            verify_orbit_equations(&b, &roots, 8),
            verify_sum_identity(&b, &roots, 8),
            verify_reconstructed_relation(&b, &roots, 8),
        ] {
            assert!(report.pass, "{report:?}");
        }
    }

    #[test]
    fn x_constant_equals_minus_s0() {
        let (b, roots) = setup(6);
        let v = OrbitValues::new(&b, &roots).unwrap();
        let c = v.r_xbar.sub(&v.s_y0).sub(&v.s_y1).add(&xpow(-1));
        assert!(c.exponents_within(Some(0), Some(0)));
        assert!(c.var_coeff(0).truncate(6).eq_to_order(&b.s0().neg()));
    }
}
