use super::{LaurentPoly, LaurentSeries, Rational, Series, SeriesError, UnivariateSeries, Var, EXACT};
use num_traits::{Signed, Zero};

/// Which part of each Laurent coefficient [`extract_x_part`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractMode {
    /// `[x^>=]`: exponents `>= 0`.
    NonNeg,
    /// `[x^<=]`: exponents `<= 0`.
    NonPos,
    /// `[x^k]`: a single exponent.
    Exponent(i64),
}

/// Coefficient-wise truncation of a series to the requested exponent range.
pub fn extract_x_part(f: &LaurentSeries, mode: ExtractMode) -> LaurentSeries {
    f.map(|p| match mode {
        ExtractMode::NonNeg => p.restrict(Some(0), None),
        ExtractMode::NonPos => p.restrict(None, Some(0)),
        ExtractMode::Exponent(k) => p.restrict(Some(k), Some(k)),
    })
}

/// Evidence that a pair `(x', y')` may be substituted into a walk
/// generating function `Q(x, y)`.
///
/// Produced by scanning a walk table: every nonzero monomial
/// `x^i y^j t^n` with `n >= 1` must satisfy
/// `n + i*val(x') + j*val(y') >= slope * n` for a positive `slope`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionCertificate {
    pub substitutable: bool,
    /// t-valuations of the substituted x- and y-components.
    pub valuations: (i64, i64),
    /// Smallest ratio `val / n` seen over the scanned monomials.
    pub slope: Rational,
    /// The monomial `(n, i, j)` realizing the smallest ratio.
    pub witness: Option<(usize, usize, usize)>,
    /// Valuation of the witness after substitution.
    pub witness_valuation: i64,
}

impl SubstitutionCertificate {
    /// Certificate for substituting series of non-negative valuation, which
    /// never needs a table scan.
    pub fn trivial(valuations: (i64, i64)) -> Self {
        assert!(valuations.0 >= 0 && valuations.1 >= 0);
        SubstitutionCertificate {
            substitutable: true,
            valuations,
            slope: Rational::from_integer(1.into()),
            witness: None,
            witness_valuation: 0,
        }
    }

    fn witness_string(&self) -> String {
        match self.witness {
            Some((n, i, j)) => format!("x^{i} y^{j} t^{n}"),
            None => "<none>".to_string(),
        }
    }
}

/// A boundary series of the form `t^shift * (prefactor(v) * section(v) - offset(t))`.
///
/// This is how `R(x)` and `S(y)` are assembled from sections of the walk
/// generating function, e.g. `S(y) = t (1+y) Q(0,y)` has prefactor `1+y`,
/// section `Q(0,y)`, no offset and shift 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryForm {
    pub var: Var,
    pub prefactor: LaurentPoly,
    pub section: LaurentSeries,
    pub offset: UnivariateSeries,
    pub t_shift: i64,
}

impl BoundaryForm {
    /// The boundary series in its own variable.
    pub fn series(&self) -> LaurentSeries {
        let pf = Series::constant(self.prefactor.clone());
        pf.mul(&self.section).sub(&lift(&self.offset, self.var)).shift(self.t_shift)
    }

    pub fn order(&self) -> i64 {
        self.series().order()
    }
}

/// Lifts a rational series into one with constant Laurent coefficients.
pub fn lift(s: &UnivariateSeries, var: Var) -> LaurentSeries {
    s.map(|c| LaurentPoly::constant(var, c.clone()))
}

/// Composes `outer(v; t)` with `v = inner`.
///
/// Every coefficient of `outer` must be a polynomial in its variable. When
/// `inner` has negative t-valuation, monomials of `outer` beyond its order
/// could still reach low t-orders; `slope` bounds them (`val >= slope * n`)
/// and the result order is capped accordingly.
pub fn compose(
    outer: &LaurentSeries,
    inner: &LaurentSeries,
    slope: Option<&Rational>,
) -> Result<LaurentSeries, SeriesError> {
    let mut degree = 0i64;
    for (_, p) in outer.terms() {
        if let Some(lo) = p.lo() {
            if lo < 0 {
                return Err(SeriesError::NegativeExponent(p.var(), lo));
            }
            degree = degree.max(p.hi().unwrap());
        }
    }
    let var = inner_var(inner);
    let v = inner.valuation_bound();
    // unknown monomials of outer land beyond `target`
    let target = if outer.is_exact() {
        EXACT
    } else if v >= 0 {
        outer.order()
    } else {
        let slope = slope.filter(|s| s.is_positive()).ok_or_else(|| SeriesError::Uncertified {
            witness: "no valuation bound supplied".into(),
            valuation: v.to_string(),
        })?;
        // t^n with n > order reaches valuation >= slope * n
        let bound = slope * Rational::from_integer((outer.order() + 1).into());
        i64::try_from(bound.ceil().to_integer()).unwrap_or(EXACT) - 1
    };
    // c_j(t) = [v^j] outer, taken as exact through the order of outer
    let sections: Vec<LaurentSeries> = (0..=degree)
        .map(|j| {
            let hi = outer.degree().unwrap_or(outer.start() - 1).min(outer.order());
            let terms: Vec<LaurentPoly> = (outer.start()..=hi)
                .map(|n| {
                    let c = outer.coeff(n).map(|p| p.coeff(j)).unwrap_or_else(Rational::zero);
                    LaurentPoly::constant(var, c)
                })
                .collect();
            Series::exact(outer.start(), terms)
        })
        .collect();
    // inner^j is needed through target - val(c_j), and inner^(j+1) is built from inner^j
    let mut need = vec![i64::MIN; sections.len()];
    let mut next = i64::MIN;
    for j in (0..sections.len()).rev() {
        let own = match sections[j].valuation() {
            Some(vc) => sat_sub(target, vc),
            None => i64::MIN,
        };
        need[j] = own.max(if next == i64::MIN { i64::MIN } else { sat_sub(next, v) });
        next = need[j];
    }
    let mut acc: LaurentSeries = Series::zero(target);
    let mut power: LaurentSeries = Series::one();
    for (j, c) in sections.iter().enumerate() {
        if j > 0 {
            if need[j] == i64::MIN {
                break;
            }
            power = power.mul(inner);
        }
        if need[j] != i64::MIN && need[j] < EXACT {
            power = power.truncate(need[j]);
        }
        if !c.is_zero() {
            acc = acc.add(&c.mul(&power));
        }
    }
    Ok(acc.truncate(target))
}

fn sat_sub(a: i64, b: i64) -> i64 {
    if a >= EXACT {
        EXACT
    } else {
        a - b
    }
}

fn inner_var(inner: &LaurentSeries) -> Var {
    inner.terms().map(|(_, p)| p).find(|p| !p.is_constant()).map(|p| p.var()).unwrap_or(Var::X)
}

/// Substitutes `inner` for the variable of a boundary series.
///
/// The substitution must be certified; for inner series of negative
/// t-valuation the certificate's slope decides how many orders of the
/// result are honest.
pub fn substitute_boundary(
    outer: &BoundaryForm,
    inner: &LaurentSeries,
    cert: &SubstitutionCertificate,
) -> Result<LaurentSeries, SeriesError> {
    if !cert.substitutable {
        return Err(SeriesError::Uncertified {
            witness: cert.witness_string(),
            valuation: cert.witness_valuation.to_string(),
        });
    }
    let certified = match outer.var {
        Var::X => cert.valuations.0,
        Var::Y => cert.valuations.1,
    };
    let v = inner.valuation_bound();
    if v < certified {
        return Err(SeriesError::CertificateMismatch { inner: v, certified });
    }
    let section = compose(&outer.section, inner, Some(&cert.slope))?;
    let prefactor = compose(&Series::constant(outer.prefactor.clone()), inner, None)?;
    let var = inner_var(inner);
    Ok(prefactor.mul(&section).sub(&lift(&outer.offset, var)).shift(outer.t_shift))
}

impl Series<LaurentPoly> {
    /// Substitutes `v -> 1/v` in every coefficient.
    pub fn reflect(&self) -> Self {
        self.map(|p| p.reflect())
    }

    /// Substitutes `v -> v * t^k`: the monomial `v^i t^n` becomes
    /// `v^i t^(n + k i)`. Coefficients must be polynomials and `k >= 0`.
    pub fn twist(&self, k: i64) -> Self {
        assert!(k >= 0, "twist exponent must be non-negative");
        let mut terms: Vec<(i64, i64, Rational)> = Vec::new();
        for (n, p) in self.terms() {
            for (i, c) in p.terms() {
                assert!(i >= 0, "twist needs polynomial coefficients");
                terms.push((n + k * i, i, c.clone()));
            }
        }
        let var = inner_var(self);
        let order = self.order();
        let lo = terms.iter().map(|t| t.0).min().unwrap_or(0);
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo).min(order).max(lo);
        let mut coeffs: Vec<Vec<(i64, Rational)>> = vec![Vec::new(); (hi - lo + 1) as usize];
        for (n, i, c) in terms {
            if n <= order {
                coeffs[(n - lo) as usize].push((i, c));
            }
        }
        Series::new(lo, coeffs.into_iter().map(|ts| LaurentPoly::from_terms(var, ts)).collect(), order)
    }

    /// Evaluates the coefficient variable at a rational value.
    pub fn eval_var(&self, at: &Rational) -> UnivariateSeries {
        self.map(|p| p.eval(at))
    }

    /// The coefficient of `v^k` as a rational series.
    pub fn var_coeff(&self, k: i64) -> UnivariateSeries {
        self.map(|p| p.coeff(k))
    }

    /// True when every coefficient has exponents only in `lo..=hi`.
    pub fn exponents_within(&self, lo: Option<i64>, hi: Option<i64>) -> bool {
        self.terms().all(|(_, p)| {
            lo.is_none_or(|l| p.lo().is_none_or(|e| e >= l)) && hi.is_none_or(|h| p.hi().is_none_or(|e| e <= h))
        })
    }

    /// Largest exponent appearing in any coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms().filter_map(|(_, p)| p.hi()).max()
    }

    /// Smallest exponent appearing in any coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms().filter_map(|(_, p)| p.lo()).min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn xp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::X, terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn nonneg_part_filters() {
        // x̄^2 + 3 + x t
        let f: LaurentSeries = Series::exact(0, vec![xp(&[(-2, 1), (0, 3)]), xp(&[(1, 1)])]);
        let g = extract_x_part(&f, ExtractMode::NonNeg);
        assert_eq!(g, Series::exact(0, vec![xp(&[(0, 3)]), xp(&[(1, 1)])]));
    }

    #[test]
    fn compose_polynomial_outer() {
        // outer = (1 + y) t, inner = 2t  ->  t + 2t^2
        let outer: LaurentSeries =
            Series::new(1, vec![LaurentPoly::from_terms(Var::Y, vec![(0, int(1)), (1, int(1))])], 6);
        let inner: LaurentSeries = Series::exact(1, vec![xp(&[(0, 2)])]);
        let got = compose(&outer, &inner, None).unwrap();
        assert_eq!(got, Series::new(1, vec![xp(&[(0, 1)]), xp(&[(0, 2)])], 6));
    }

    #[test]
    fn negative_valuation_needs_bound() {
        let outer: LaurentSeries = Series::new(2, vec![LaurentPoly::monomial(Var::Y, int(1), 1)], 6);
        let inner: LaurentSeries = Series::exact(-1, vec![xp(&[(-1, 1)])]);
        assert!(matches!(compose(&outer, &inner, None), Err(SeriesError::Uncertified { .. })));
        let half = Rational::new(1.into(), 2.into());
        let got = compose(&outer, &inner, Some(&half)).unwrap();
        // t^2 y -> x̄ t, unknown terms start at valuation >= 7/2
        assert_eq!(got.order(), 3);
        assert_eq!(got.coeff(1).unwrap(), xp(&[(-1, 1)]));
    }

    #[test]
    fn twist_reindexes() {
        let s: LaurentSeries = Series::new(0, vec![xp(&[(0, 1)]), xp(&[(1, 1)]), xp(&[(0, 2), (2, 1)])], 2);
        let tw = s.twist(1);
        assert_eq!(tw.coeff(2).unwrap(), xp(&[(0, 2), (1, 1)]));
        assert_eq!(tw.order(), 2);
        let exact: LaurentSeries = Series::exact(0, vec![xp(&[(3, 1)])]);
        assert_eq!(exact.twist(2).valuation(), Some(6));
        assert!(exact.twist(2).order() >= EXACT);
    }
}
