use crate::kernel::verify_substitutability;
use crate::series::{
    int, LaurentPoly, LaurentSeries, Series, SubstitutionCertificate, UnivariateSeries, Var, BoundaryForm,
};
use crate::walks::{boundary_sections, WalkTable};

/// `R(x) = t (Q(x,0) - Q(0,0))` and `S(y) = t (1+y) Q(0,y)`, assembled from a
/// walk table, with the certificate for substituting series of
/// t-valuations `(1, -1)`.
#[derive(Debug, Clone)]
pub struct BoundarySeries {
    pub r: BoundaryForm,
    pub s: BoundaryForm,
    pub order: i64,
    pub certificate: SubstitutionCertificate,
}

pub fn build_boundary(table: &WalkTable) -> BoundarySeries {
    let sec = boundary_sections(table);
    let r = BoundaryForm {
        var: Var::X,
        prefactor: LaurentPoly::constant(Var::X, int(1)),
        section: sec.qx0,
        offset: sec.q00,
        t_shift: 1,
    };
    let s = BoundaryForm {
        var: Var::Y,
        prefactor: LaurentPoly::from_terms(Var::Y, [(0, int(1)), (1, int(1))]),
        section: sec.q0y,
        offset: Series::zero(crate::series::EXACT),
        t_shift: 1,
    };
    let order = r.order().min(s.order());
    BoundarySeries { r, s, order, certificate: verify_substitutability(table, (1, -1)) }
}

impl BoundarySeries {
    pub fn r_series(&self) -> LaurentSeries {
        self.r.series()
    }

    pub fn s_series(&self) -> LaurentSeries {
        self.s.series()
    }

    /// `S(0) = t Q(0,0)`.
    pub fn s0(&self) -> UnivariateSeries {
        self.s_series().var_coeff(0)
    }

    /// `R'(0) = t [x^1] Q(x,0)`.
    pub fn r1(&self) -> UnivariateSeries {
        self.r_series().var_coeff(1)
    }

    /// `R''(0) = 2 t [x^2] Q(x,0)`.
    pub fn r2(&self) -> UnivariateSeries {
        self.r_series().var_coeff(2).scale(&int(2))
    }
}

/// The three one-variable unknowns of the cubic equation for `R(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryInvariants {
    pub s0: UnivariateSeries,
    pub r1: UnivariateSeries,
    pub r2: UnivariateSeries,
}

impl BoundaryInvariants {
    pub fn from_boundary(b: &BoundarySeries) -> Self {
        BoundaryInvariants { s0: b.s0(), r1: b.r1(), r2: b.r2() }
    }

    pub fn from_table(table: &WalkTable) -> Self {
        Self::from_boundary(&build_boundary(table))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{count_walks, StepModel};

    #[test]
    fn small_orders() {
        let table = count_walks(&StepModel::gessel(), 3);
        let b = build_boundary(&table);
        let r = b.r_series();
        // x t^2 + x^2 t^3
        assert_eq!(r.valuation(), Some(2));
        assert_eq!(r.coeff(2).unwrap(), LaurentPoly::monomial(Var::X, int(1), 1));
        assert_eq!(r.coeff(3).unwrap(), LaurentPoly::monomial(Var::X, int(1), 2));
        assert_eq!(r.order(), 4);
        let s = b.s_series();
        assert_eq!(s.coeff(1).unwrap(), LaurentPoly::from_terms(Var::Y, [(0, int(1)), (1, int(1))]));
        assert!(s.coeff(2).unwrap().is_zero());
        assert_eq!(s.coeff(3).unwrap(), LaurentPoly::from_terms(Var::Y, [(0, int(2)), (1, int(3)), (2, int(1))]));
        let inv = BoundaryInvariants::from_boundary(&b);
        assert_eq!(inv.s0.truncate(2), Series::from_ints(1, &[1], 2));
        assert!(b.certificate.substitutable);
    }
}
