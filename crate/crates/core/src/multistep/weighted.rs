use crate::kernel::{build_kernel, kernel_roots, verify_substitutability, KernelRoots};
use crate::report::{CheckReport, PartReport};
use crate::series::{
    int, lift, substitute_boundary, BoundaryForm, LaurentPoly, LaurentSeries, Series, SeriesError,
    SubstitutionCertificate, UnivariateSeries, Var, EXACT,
};
use crate::walks::{boundary_sections, count_walks, StepModel, WalkTable};

/// Largest weight accepted by the command line. The code itself is generic.
pub const MAX_LAMBDA: u32 = 16;

/// The weights the weighted identities are checked for by default.
pub const WEIGHTED_LAMBDAS: [u32; 5] = [0, 1, 2, 3, 5];

/// `R(x) = t(1 + lambda x + x^2) Q(x,0) - t Q(0,0)` and
/// `S(y) = t(1+y) Q(0,y)` for the weighted model, read from its table.
#[derive(Debug, Clone)]
pub struct WeightedBoundary {
    pub r: BoundaryForm,
    pub s: BoundaryForm,
    pub lambda: u32,
    pub q00: UnivariateSeries,
    pub certificate: SubstitutionCertificate,
}

/// Table size for which the identities are honest through `t^order`.
pub fn weighted_table_size(order: i64) -> usize {
    (2 * order.max(0) + 4) as usize
}

impl WeightedBoundary {
    pub fn new(table: &WalkTable, lambda: u32) -> Self {
        let sec = boundary_sections(table);
        let l = int(lambda as i64);
        let r = BoundaryForm {
            var: Var::X,
            prefactor: LaurentPoly::from_terms(Var::X, [(0, int(1)), (1, l), (2, int(1))]),
            section: sec.qx0,
            offset: sec.q00.clone(),
            t_shift: 1,
        };
        let s = BoundaryForm {
            var: Var::Y,
            prefactor: LaurentPoly::from_terms(Var::Y, [(0, int(1)), (1, int(1))]),
            section: sec.q0y,
            offset: Series::zero(EXACT),
            t_shift: 1,
        };
        let certificate = verify_substitutability(table, (1, -1));
        WeightedBoundary { r, s, lambda, q00: sec.q00, certificate }
    }

    pub fn from_lambda(lambda: u32, order: i64) -> Self {
        Self::new(&count_walks(&StepModel::weighted(lambda), weighted_table_size(order)), lambda)
    }

    pub fn r_series(&self) -> LaurentSeries {
        self.r.series()
    }

    pub fn s_series(&self) -> LaurentSeries {
        self.s.series()
    }

    /// `R'(0) = t (lambda Q(0,0) + [x^1] Q(x,0))`.
    pub fn r1(&self) -> UnivariateSeries {
        self.r_series().var_coeff(1)
    }

    fn modulus(&self) -> LaurentPoly {
        LaurentPoly::from_terms(Var::X, [(0, int(1)), (1, int(self.lambda as i64)), (2, int(1))])
    }

    fn at(&self, form: &BoundaryForm, inner: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        if inner.valuation_bound() >= 0 {
            substitute_boundary(form, inner, &SubstitutionCertificate::trivial((0, 0)))
        } else {
            substitute_boundary(form, inner, &self.certificate)
        }
    }
}

fn xpow(k: i64) -> LaurentSeries {
    Series::constant(LaurentPoly::monomial(Var::X, int(1), k))
}

/// The pairs of the orbit of `(x, Y0)` at which both boundary series can
/// be evaluated.
struct Pairs {
    x: [LaurentSeries; 4],
    y: [LaurentSeries; 4],
}

impl Pairs {
    const LABELS: [&'static str; 4] = [
        "(x, Y0)",
        "(t(1+Y1)/(1+lambda*t), Y0)",
        "(t(1+Y0)/(1+lambda*t), Y1)",
        "(t(1+Y0)/(1+lambda*t), x/t+lambda*x-1)",
    ];

    fn new(lambda: u32, roots: &KernelRoots) -> Result<Self, SeriesError> {
        let l = int(lambda as i64);
        let one_plus: UnivariateSeries = Series::exact(0, vec![int(1), l.clone()]);
        let damp = lift(&one_plus.truncate(roots.order + 2).inverse()?, Var::X).shift(1);
        let one = xpow(0);
        let x1 = damp.mul(&one.add(&roots.y1));
        let x2 = damp.mul(&one.add(&roots.y0));
        // x/t + lambda x - 1
        let y4 = Series::exact(
            -1,
            vec![
                LaurentPoly::monomial(Var::X, int(1), 1),
                LaurentPoly::from_terms(Var::X, [(0, int(-1)), (1, l)]),
            ],
        );
        Ok(Pairs {
            x: [xpow(1), x1, x2.clone(), x2],
            y: [roots.y0.clone(), roots.y0.clone(), roots.y1.clone(), y4],
        })
    }
}

fn roots_for(lambda: u32, order: i64) -> Result<KernelRoots, crate::kernel::KernelError> {
    kernel_roots(&build_kernel(&StepModel::weighted(lambda))?, order + 4)
}

/// The four orbit equations `x'y' = R(x') + S(y')` and the two identities
/// `S(Y0) + S(Y1) = 1/x` and `x = S(x/t + lambda x - 1) - R(x)`.
pub fn weighted_orbit_equations(wb: &WeightedBoundary, roots: &KernelRoots, order: i64) -> CheckReport {
    let name = "orbit";
    let body = || -> Result<Vec<PartReport>, SeriesError> {
        let pairs = Pairs::new(wb.lambda, roots)?;
        let mut parts = Vec::new();
        let mut s_vals = Vec::new();
        for k in 0..4 {
            let r = wb.at(&wb.r, &pairs.x[k])?;
            let s = wb.at(&wb.s, &pairs.y[k])?;
            let lhs = pairs.x[k].mul(&pairs.y[k]);
            parts.push(PartReport::equal(format!("x'y'=R(x')+S(y') at {}", Pairs::LABELS[k]), &lhs, &r.add(&s), order));
            s_vals.push(s);
        }
        let s_y1 = wb.at(&wb.s, &roots.y1)?;
        parts.push(PartReport::equal("S(Y0)+S(Y1)=1/x", &s_vals[0].add(&s_y1), &xpow(-1), order));
        parts.push(PartReport::equal(
            "x=S(x/t+lambda*x-1)-R(x)",
            &xpow(1),
            &s_vals[3].sub(&wb.r_series()),
            order,
        ));
        Ok(parts)
    };
    match body() {
        Ok(parts) => CheckReport::from_parts(name, order, parts),
        Err(e) => CheckReport::error(name, order, e),
    }
}

/// The product of `S(Yi) - x Yi`, the equation it yields for `R(x)`, the
/// reduction of `R(x)` modulo `1 + lambda x + x^2` and the resulting
/// quadratic relation between `Q(0,0)` and `R'(0)`.
pub fn weighted_dde(wb: &WeightedBoundary, roots: &KernelRoots, order: i64) -> CheckReport {
    let name = "dde";
    let body = || -> Result<Vec<PartReport>, SeriesError> {
        let x = xpow(1);
        let r = wb.r_series();
        let l = int(wb.lambda as i64);
        let inv_t: LaurentSeries = Series::monomial(LaurentPoly::constant(Var::X, int(1)), -1);
        // R + 2x + 2/x - 1/t
        let bracket = r.add(&x.scale(&int(2))).add(&xpow(-1).scale(&int(2))).sub(&inv_t);
        let rhs = r.neg().mul(&bracket);

        let s_y0 = wb.at(&wb.s, &roots.y0)?;
        let s_y1 = wb.at(&wb.s, &roots.y1)?;
        let prod = s_y0.sub(&x.mul(&roots.y0)).mul(&s_y1.sub(&x.mul(&roots.y1)));

        let r1 = wb.r1();
        let poly = Series::constant(LaurentPoly::from_terms(Var::X, [(1, l.clone()), (2, int(1))]));
        let dde_rhs = rhs.add(&lift(&r1, Var::X).scale(&int(2)));

        let m = wb.modulus();
        let reduced = r.map(|p| p.rem_monic(&m));
        let minus_t_q00 = lift(&wb.q00.shift(1).neg(), Var::X);

        let q = &wb.q00;
        let t = UnivariateSeries::t();
        let quad_lhs = t.mul(&t).mul(&q.mul(q)).add(&t.scale(&(l * int(2))).add(&UnivariateSeries::one()).mul(q));
        let quad_rhs = r1.scale(&int(2)).add(&UnivariateSeries::one());

        Ok(vec![
            PartReport::equal("(S(Y0)-x*Y0)(S(Y1)-x*Y1)=-R(x)(R(x)+2x+2/x-1/t)", &prod, &rhs, order),
            PartReport::equal("lambda*x+x^2=-R(x)(R(x)+2x+2/x-1/t)+2R'(0)", &poly, &dde_rhs, order),
            PartReport::equal("R(x)=-t*Q(0,0) mod 1+lambda*x+x^2", &reduced, &minus_t_q00, order),
            PartReport::equal("t^2*Q(0,0)^2+(2*lambda*t+1)*Q(0,0)=2R'(0)+1", &quad_lhs, &quad_rhs, order),
        ])
    };
    match body() {
        Ok(parts) => CheckReport::from_parts(name, order, parts),
        Err(e) => CheckReport::error(name, order, e),
    }
}

/// The two groups of weighted identities, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightedCheck {
    Orbit,
    Dde,
}

impl WeightedCheck {
    pub const ALL: [WeightedCheck; 2] = [WeightedCheck::Orbit, WeightedCheck::Dde];

    pub fn name(self) -> &'static str {
        match self {
            WeightedCheck::Orbit => "orbit",
            WeightedCheck::Dde => "dde",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn run_on(self, wb: &WeightedBoundary, order: i64) -> CheckReport {
        match roots_for(wb.lambda, order) {
            Ok(roots) => match self {
                WeightedCheck::Orbit => weighted_orbit_equations(wb, &roots, order),
                WeightedCheck::Dde => weighted_dde(wb, &roots, order),
            },
            Err(e) => CheckReport::error(self.name(), order, e),
        }
    }

    pub fn run(self, lambda: u32, order: i64) -> CheckReport {
        self.run_on(&WeightedBoundary::from_lambda(lambda, order), order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unweighted_q00_starts_with_three_t_squared() {
        let wb = WeightedBoundary::from_lambda(0, 4);
        assert_eq!(wb.q00.truncate(3), Series::from_ints(0, &[1, 0, 3], 3));
    }

    #[test]
    fn identities_hold_for_small_weights() {
        for lambda in [0, 1, 2] {
            for check in WeightedCheck::ALL {
                let report = check.run(lambda, 8);
                assert!(report.pass, "lambda {lambda}: {report:?}");
            }
        }
    }

    #[test]
    fn orbit_has_four_usable_pairs() {
        let model = StepModel::weighted(1);
        let k = build_kernel(&model).unwrap();
        let roots = kernel_roots(&k, 10).unwrap();
        let table = count_walks(&model, 24);
        let orbit = crate::kernel::group_orbit(&k, &roots, &table, 16).unwrap();
        assert_eq!(orbit.len(), 6);
        assert_eq!(orbit.iter().filter(|e| e.substitutable()).count(), 4);
    }

    #[test]
    fn corrupted_table_fails() {
        let order = 8;
        let table = count_walks(&StepModel::weighted(1), weighted_table_size(order));
        let bad = table.with_entry(5, 1, 0, table.get(5, 1, 0) + 1);
        let wb = WeightedBoundary::new(&bad, 1);
        assert!(!WeightedCheck::Dde.run_on(&wb, order).pass);
        assert!(!WeightedCheck::Orbit.run_on(&wb, order).pass);
    }
}
