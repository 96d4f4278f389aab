//! The kernel `K(x,y) = 1 - t S(x,y)` of a small-step model, its roots in
//! `y`, the group of birational involutions fixing it, and constant-term
//! extraction for symmetric functions of the roots.

mod certificate;
mod lemma;
mod modp;
mod orbit;
mod ratio;

pub use certificate::verify_substitutability;
pub use lemma::{symmetric_extract, LemmaOutcome};
pub use orbit::{
    group_order, group_orbit, verify_involutions, verify_kernel_invariance, Involution, OrbitElement, DEFAULT_GROUP_BOUND,
};

use crate::series::{int, LaurentPoly, LaurentSeries, MPoly, Rational, Series, SeriesError, Var};
use crate::walks::StepModel;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("model {0} is not quadratic in y: it needs steps with dy = 1 and dy = -1")]
    NotQuadratic(String),
    #[error("model {0} has no step with dx = {1}, so its group is not defined")]
    DegenerateGroup(String, i64),
    #[error("coefficient of y^2 in y*K is {0}, not a monomial in x; the roots are not Laurent series")]
    NonMonomialLeading(String),
    #[error("orbit does not close within {0} elements")]
    OrbitNotClosed(usize),
    #[error("polynomial is not symmetric in its two variables")]
    NotSymmetric,
    #[error("positive x-exponent {0} in a symmetric function of the roots")]
    PositiveExponent(i64),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `K(x,y) = 1 - t sum m x^dx y^dy`, stored by rows and by columns.
#[derive(Clone, PartialEq)]
pub struct Kernel {
    model: StepModel,
    /// `rows[dy + 1] = sum_{dx} m x^dx`
    rows: [LaurentPoly; 3],
    /// `cols[dx + 1] = sum_{dy} m y^dy`
    cols: [LaurentPoly; 3],
}

pub fn build_kernel(model: &StepModel) -> Result<Kernel, KernelError> {
    let row = |dy: i8| {
        LaurentPoly::from_terms(
            Var::X,
            model.steps().filter(|((_, b), _)| *b == dy).map(|((a, _), m)| (a as i64, int(m as i64))),
        )
    };
    let col = |dx: i8| {
        LaurentPoly::from_terms(
            Var::Y,
            model.steps().filter(|((a, _), _)| *a == dx).map(|((_, b), m)| (b as i64, int(m as i64))),
        )
    };
    let rows = [row(-1), row(0), row(1)];
    if rows[0].is_zero() || rows[2].is_zero() {
        return Err(KernelError::NotQuadratic(model.name().into()));
    }
    Ok(Kernel { model: model.clone(), rows, cols: [col(-1), col(0), col(1)] })
}

impl Kernel {
    pub fn model(&self) -> &StepModel {
        &self.model
    }

    /// `sum_{dx} m x^dx` over the steps with the given `dy`.
    pub fn row(&self, dy: i64) -> &LaurentPoly {
        &self.rows[(dy + 1) as usize]
    }

    /// `sum_{dy} m y^dy` over the steps with the given `dx`.
    pub fn col(&self, dx: i64) -> &LaurentPoly {
        &self.cols[(dx + 1) as usize]
    }

    /// The kernel as a polynomial in `x, y, t`.
    pub fn to_mpoly(&self) -> MPoly {
        let vars = ["x", "y", "t"];
        let one = MPoly::zero(&vars).constant_like(int(1));
        let mut k = one.clone();
        for ((dx, dy), m) in self.model.steps() {
            k = k.sub(&one.monomial_like(int(m as i64), &[("x", dx as i32), ("y", dy as i32), ("t", 1)]));
        }
        k
    }

    /// `Y0 + Y1 = (1 - t P0(x)) / (t P1(x))` as an exact series, when
    /// `P1` is a monomial.
    pub fn root_sum(&self) -> Option<LaurentSeries> {
        let inv = self.row(1).inverse_monomial()?;
        let one_minus: LaurentSeries = Series::exact(0, vec![LaurentPoly::constant(Var::X, int(1)), self.row(0).neg_poly()]);
        Some(one_minus.mul(&Series::monomial(inv, -1)))
    }

    /// `Y0 Y1 = P-1(x) / P1(x)` as an exact series, when `P1` is a monomial.
    pub fn root_product(&self) -> Option<LaurentSeries> {
        let inv = self.row(1).inverse_monomial()?;
        Some(Series::constant(self.row(-1).mul_poly(&inv)))
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for ((dx, dy), m) in self.model.steps() {
            let mut s = if m == 1 { String::new() } else { format!("{m}*") };
            let mut factors = Vec::new();
            for (v, e) in [("x", dx), ("y", dy)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^-1")),
                }
            }
            s.push_str(&factors.join("*"));
            terms.push(s);
        }
        write!(f, "1 - t*({})", terms.join(" + "))
    }
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kernel[{}]", self)
    }
}

/// The two roots in `y` of the kernel, as series in `t` with Laurent
/// polynomial coefficients in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelRoots {
    /// The power-series root.
    pub y0: LaurentSeries,
    /// The root with a `1/t` leading term.
    pub y1: LaurentSeries,
    pub order: i64,
}

/// Roots of `y K(x,y) = A y^2 + B y + C` by the quadratic formula, with
/// `A = -t P1(x)`, `B = 1 - t P0(x)`, `C = -t P-1(x)`.
pub fn kernel_roots(k: &Kernel, order: i64) -> Result<KernelRoots, KernelError> {
    let inv = k
        .row(1)
        .inverse_monomial()
        .ok_or_else(|| KernelError::NonMonomialLeading(format!("-t*({})", k.row(1))))?;
    let xp = |p: &LaurentPoly| p.clone();
    let b: LaurentSeries = Series::exact(0, vec![LaurentPoly::constant(Var::X, int(1)), xp(k.row(0)).neg_poly()]);
    let ac = Series::monomial(k.row(1).mul_poly(k.row(-1)), 2);
    let disc = b.mul(&b).sub(&ac.scale(&int(4))).truncate(order + 1);
    let root = disc.sqrt()?;
    // 1 / (2A) = -1/(2 P1) t^-1
    let half_inv_a = Series::monomial(inv.scale_poly(&Rational::new((-1).into(), 2.into())), -1);
    let y0 = b.neg().add(&root).mul(&half_inv_a);
    let y1 = b.neg().sub(&root).mul(&half_inv_a);
    Ok(KernelRoots { y0: y0.truncate(order), y1: y1.truncate(order), order })
}

impl KernelRoots {
    pub fn sum(&self) -> LaurentSeries {
        self.y0.add(&self.y1)
    }

    pub fn product(&self) -> LaurentSeries {
        self.y0.mul(&self.y1)
    }

    /// `K(x, y)` evaluated at a root, as a series.
    pub fn kernel_at(k: &Kernel, y: &LaurentSeries) -> Result<LaurentSeries, KernelError> {
        // y K(x,y) = y - t (P-1 + P0 y + P1 y^2)
        let c = |p: &LaurentPoly| Series::constant(p.clone());
        let s = c(k.row(-1)).add(&c(k.row(0)).mul(y)).add(&c(k.row(1)).mul(&y.mul(y)));
        let yk = y.sub(&s.shift(1));
        Ok(yk.mul(&y.inverse()?))
    }
}

trait PolyExt {
    fn inverse_monomial(&self) -> Option<LaurentPoly>;
    fn neg_poly(&self) -> LaurentPoly;
    fn mul_poly(&self, other: &LaurentPoly) -> LaurentPoly;
    fn scale_poly(&self, r: &Rational) -> LaurentPoly;
}

impl PolyExt for LaurentPoly {
    fn inverse_monomial(&self) -> Option<LaurentPoly> {
        crate::series::Coeff::inverse(self)
    }
    fn neg_poly(&self) -> LaurentPoly {
        crate::series::Coeff::neg(self)
    }
    fn mul_poly(&self, other: &LaurentPoly) -> LaurentPoly {
        crate::series::Coeff::mul(self, other)
    }
    fn scale_poly(&self, r: &Rational) -> LaurentPoly {
        crate::series::Coeff::scale(self, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::X, terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn kernel_display() {
        let k = build_kernel(&StepModel::kreweras()).unwrap();
        assert_eq!(k.to_string(), "1 - t*(x^-1 + y^-1 + x*y)");
    }

    #[test]
    fn gessel_roots() {
        let k = build_kernel(&StepModel::gessel()).unwrap();
        let r = kernel_roots(&k, 10).unwrap();
        assert_eq!(r.y0.valuation(), Some(1));
        assert_eq!(r.y0.coeff(1).unwrap(), xp(&[(-1, 1)]));
        assert_eq!(r.y1.valuation(), Some(-1));
        assert_eq!(r.y1.coeff(-1).unwrap(), xp(&[(-1, 1)]));
        assert!(r.product().eq_to_order(&Series::constant(xp(&[(-2, 1)]))));
        let expected: LaurentSeries = Series::exact(-1, vec![xp(&[(-1, 1)]), xp(&[(-2, -1), (0, -1)])]);
        assert!(r.sum().eq_to_order(&expected));
        assert!(r.sum().order() >= 9);
        for y in [&r.y0, &r.y1] {
            assert!(KernelRoots::kernel_at(&k, y).unwrap().is_zero());
        }
    }

    #[test]
    fn rejects_non_quadratic_and_non_monomial() {
        let horizontal = StepModel::from_compass("h", &[("E", 1), ("W", 1), ("S", 1)]);
        assert!(matches!(build_kernel(&horizontal), Err(KernelError::NotQuadratic(_))));
        let k = build_kernel(&StepModel::g10a()).unwrap();
        assert!(matches!(kernel_roots(&k, 5), Err(KernelError::NonMonomialLeading(_))));
    }
}
