use super::{Coeff, Rational, SeriesError};
use num_traits::One;

/// Order marker for series that are exact polynomials in `t`.
pub const EXACT: i64 = i64::MAX / 8;

fn order_add(v: i64, order: i64) -> i64 {
    if order >= EXACT {
        EXACT
    } else {
        v + order
    }
}

/// Truncated series in `t` with a possibly negative starting exponent.
///
/// `coeffs[k]` is the coefficient of `t^(start + k)`. Coefficients between
/// the stored range and `order` are zero; coefficients beyond `order` are
/// unknown. An `order` of [`EXACT`] marks a polynomial in `t` (and in
/// `1/t`).
#[derive(Clone, PartialEq)]
pub struct Series<C> {
    start: i64,
    coeffs: Vec<C>,
    order: i64,
}

impl<C: Coeff> Series<C> {
    /// Series with coefficients for `t^start, t^(start+1), ...`, known
    /// through `t^order`. Stored coefficients past `order` are dropped.
    pub fn new(start: i64, mut coeffs: Vec<C>, order: i64) -> Self {
        let keep = (order - start + 1).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = Series { start, coeffs, order };
        s.normalize();
        s
    }

    /// Exact polynomial in `t, 1/t`.
    pub fn exact(start: i64, coeffs: Vec<C>) -> Self {
        Series::new(start, coeffs, EXACT)
    }

    pub fn zero(order: i64) -> Self {
        Series { start: 0, coeffs: Vec::new(), order }
    }

    pub fn one() -> Self {
        Series::constant(C::ring_one())
    }

    pub fn constant(c: C) -> Self {
        Series::exact(0, vec![c])
    }

    /// `c * t^k`, exact.
    pub fn monomial(c: C, k: i64) -> Self {
        Series::exact(k, vec![c])
    }

    /// Builds a series from a closure giving the coefficient of `t^n`.
    pub fn from_fn(start: i64, order: i64, f: impl FnMut(i64) -> C) -> Self {
        Series::new(start, (start..=order).map(f).collect(), order)
    }

    fn normalize(&mut self) {
        match self.coeffs.iter().position(|c| !c.is_ring_zero()) {
            None => {
                self.coeffs.clear();
                self.start = 0;
            }
            Some(k) => {
                if k > 0 {
                    self.coeffs.drain(..k);
                    self.start += k as i64;
                }
                while self.coeffs.last().is_some_and(|c| c.is_ring_zero()) {
                    self.coeffs.pop();
                }
            }
        }
    }

    /// Truncation order: coefficients are known through `t^order`.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT
    }

    /// Exponent of the first nonzero coefficient, or `None` when the series
    /// is zero through its order.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    /// Lower bound on the valuation: the true valuation, or `order + 1`
    /// when nothing nonzero is known.
    pub fn valuation_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order.saturating_add(1))
    }

    /// Highest exponent with a stored nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.start + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^n`, or `None` when `n` lies beyond the order.
    pub fn coeff(&self, n: i64) -> Option<C> {
        if n > self.order {
            return None;
        }
        Some(self.coeff_ref(n).cloned().unwrap_or_else(C::ring_zero))
    }

    fn coeff_ref(&self, n: i64) -> Option<&C> {
        let k = n - self.start;
        if k < 0 || k >= self.coeffs.len() as i64 {
            None
        } else {
            Some(&self.coeffs[k as usize])
        }
    }

    /// Nonzero stored terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_ring_zero())
            .map(move |(k, c)| (self.start + k as i64, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Series::new(self.start, self.coeffs.clone(), order)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series::new(self.start, self.coeffs.iter().map(f).collect(), self.order)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Series { start: self.start + k, coeffs: self.coeffs.clone(), order: order_add(k, self.order) }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let order = self.order.min(other.order);
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for s in [self, other] {
            if let Some(d) = s.degree() {
                lo = lo.min(s.start);
                hi = hi.max(d);
            }
        }
        if lo > hi {
            return Series::zero(order);
        }
        let hi = hi.min(order);
        if lo > hi {
            return Series::zero(order);
        }
        let coeffs = (lo..=hi)
            .map(|n| {
                let a = self.coeff_ref(n);
                let b = other.coeff_ref(n);
                match (a, b, negate) {
                    (Some(a), Some(b), false) => a.add(b),
                    (Some(a), Some(b), true) => a.sub(b),
                    (Some(a), None, _) => a.clone(),
                    (None, Some(b), false) => b.clone(),
                    (None, Some(b), true) => b.neg(),
                    (None, None, _) => C::ring_zero(),
                }
            })
            .collect();
        Series::new(lo, coeffs, order)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    /// Product; the order is the best one honestly determined by the
    /// factors' valuations and orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = order_add(self.valuation_bound(), other.order)
            .min(order_add(other.valuation_bound(), self.order));
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Series::zero(order);
        };
        let lo = self.start + other.start;
        let hi = (da + db).min(order);
        if lo > hi {
            return Series::zero(order);
        }
        let mut coeffs = vec![C::ring_zero(); (hi - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_ring_zero() {
                continue;
            }
            let room = (hi - lo) as usize;
            if i > room {
                break;
            }
            for (j, b) in other.coeffs.iter().take(room - i + 1).enumerate() {
                coeffs[i + j].add_mul(a, b);
            }
        }
        Series::new(lo, coeffs, order)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Series::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse.
    ///
    /// The leading coefficient must be invertible in the coefficient ring
    /// (a nonzero rational, or a single-term Laurent polynomial). The
    /// series must have a finite order; truncate exact inputs first.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.is_exact() {
            if self.coeffs.len() == 1 {
                let c = &self.coeffs[0];
                let inv = c.inverse().ok_or_else(|| SeriesError::NonMonomialLeading(c.describe()))?;
                return Ok(Series::monomial(inv, -self.start));
            }
            return Err(SeriesError::Unbounded);
        }
        let v = self.valuation().ok_or(SeriesError::ZeroSeries(self.order))?;
        let lead = &self.coeffs[0];
        let lead_inv = lead.inverse().ok_or_else(|| SeriesError::NonMonomialLeading(lead.describe()))?;
        // relative precision is preserved
        let rel = self.order - v;
        let mut out: Vec<C> = Vec::with_capacity(rel as usize + 1);
        out.push(lead_inv.clone());
        for n in 1..=rel as usize {
            let mut acc = C::ring_zero();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                acc.add_mul(&self.coeffs[k], &out[n - k]);
            }
            out.push(acc.mul(&lead_inv).neg());
        }
        Ok(Series::new(-v, out, rel - v))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0).unwrap_or_else(C::ring_zero);
        if self.valuation_bound() < 0 || c0 != C::ring_one() {
            return Err(SeriesError::SqrtConstantTerm(c0.describe()));
        }
        if self.is_exact() {
            return Err(SeriesError::Unbounded);
        }
        let half = Rational::new(1.into(), 2.into());
        let n_max = self.order;
        let mut out: Vec<C> = vec![C::ring_one()];
        for n in 1..=n_max {
            let mut acc = self.coeff(n).unwrap();
            let nu = n as usize;
            for i in 1..nu {
                acc = acc.sub(&out[i].mul(&out[nu - i]));
            }
            out.push(acc.scale(&half));
        }
        Ok(Series::new(0, out, n_max))
    }

    /// Evaluates a polynomial with series coefficients at `self`,
    /// `coeffs[k]` multiplying `self^k` (Horner).
    pub fn horner(&self, coeffs: &[Series<C>]) -> Series<C> {
        let mut acc = Series::zero(EXACT);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add(c);
        }
        acc
    }

    /// Compares two series through the smaller of their orders.
    pub fn eq_to_order(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// First exponent, within the shared order, where the two series
    /// differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        self.sub(other).valuation()
    }

    /// Whether the coefficients of `t^n` vanish for every odd `n` through
    /// the order.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(n, _)| n.rem_euclid(2) == 0)
    }
}

impl<C: Coeff> Series<C> {
    /// Applies a fallible map to every coefficient.
    pub fn try_map<D: Coeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Series<D>, E> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(Series::new(self.start, coeffs, self.order))
    }

    pub(crate) fn start(&self) -> i64 {
        self.start
    }
}

impl Series<Rational> {
    /// The series `t`.
    pub fn t() -> Self {
        Series::monomial(Rational::one(), 1)
    }

    /// Builds a rational series from integer coefficients starting at `t^start`.
    pub fn from_ints(start: i64, ints: &[i64], order: i64) -> Self {
        Series::new(start, ints.iter().map(|&n| Rational::from_integer(n.into())).collect(), order)
    }

    /// Evaluates an exact univariate polynomial `sum c_k s^k` at the series.
    pub fn eval_poly(&self, coeffs: &[Rational]) -> Self {
        let cs: Vec<Series<Rational>> = coeffs.iter().map(|c| Series::constant(c.clone())).collect();
        self.horner(&cs)
    }

    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }
}

impl<C: Coeff> std::fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (n, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})t^{}", c.describe(), n)?;
        }
        if first {
            f.write_str("0")?;
        }
        if self.is_exact() {
            Ok(())
        } else {
            write!(f, " + O(t^{})", self.order + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat, LaurentPoly, LaurentSeries, UnivariateSeries, Var};

    fn u(ints: &[i64], order: i64) -> UnivariateSeries {
        Series::from_ints(0, ints, order)
    }

    #[test]
    fn difference_of_squares() {
        let a = Series::from_ints(0, &[1, 1], EXACT);
        let b = Series::from_ints(0, &[1, -1], EXACT);
        let p = a.mul(&b);
        assert!(p.is_exact());
        assert_eq!(p, Series::from_ints(0, &[1, 0, -1], EXACT));
    }

    #[test]
    fn monomial_product_with_negative_valuation() {
        let xbar_over_t: LaurentSeries = Series::monomial(LaurentPoly::monomial(Var::X, int(1), -1), -1);
        let sq = xbar_over_t.mul(&xbar_over_t);
        assert_eq!(sq.valuation(), Some(-2));
        assert_eq!(sq.coeff(-2).unwrap(), LaurentPoly::monomial(Var::X, int(1), -2));
    }

    #[test]
    fn geometric_inverse() {
        let a = u(&[1, -1], 8);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, u(&[1; 9], 8));
        let exact = Series::<Rational>::from_ints(0, &[1, -1], EXACT);
        assert_eq!(exact.inverse(), Err(SeriesError::Unbounded));
    }

    #[test]
    fn monomial_inverse() {
        let xbar_over_t: LaurentSeries = Series::new(-1, vec![LaurentPoly::monomial(Var::X, int(1), -1)], 6);
        let inv = xbar_over_t.inverse().unwrap();
        assert_eq!(inv.valuation(), Some(1));
        assert_eq!(inv.coeff(1).unwrap(), LaurentPoly::monomial(Var::X, int(1), 1));
        assert_eq!(inv.order(), 8);
        let prod = inv.mul(&xbar_over_t);
        assert_eq!(prod.order(), 7);
        assert!(prod.eq_to_order(&Series::one()));
    }

    #[test]
    fn inverse_rejects_non_monomial_leading() {
        let lead = LaurentPoly::from_terms(Var::X, vec![(0, int(1)), (1, int(1))]);
        let s: LaurentSeries = Series::new(0, vec![lead], 5);
        assert!(matches!(s.inverse(), Err(SeriesError::NonMonomialLeading(_))));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(u(&[1], 5).sqrt().unwrap(), u(&[1], 5));
        // independent check: 1 + 2t^2 + 16t^4 squared
        let s = u(&[1, 0, 2, 0, 16], 4);
        assert_eq!(s.mul(&s), u(&[1, 0, 4, 0, 36], 4));
        assert_eq!(u(&[1, 0, 4, 0, 36], 4).sqrt().unwrap(), s);
        let r = u(&[1, 2], 3).sqrt().unwrap();
        assert_eq!(r.coeff(1).unwrap(), int(1));
        assert_eq!(r.coeff(2).unwrap(), rat(-1, 2));
        assert_eq!(r.coeff(3).unwrap(), rat(1, 2));
        assert!(matches!(u(&[2, 1], 3).sqrt(), Err(SeriesError::SqrtConstantTerm(_))));
    }

    #[test]
    fn unknown_is_not_zero() {
        let a = u(&[1, 2], 3);
        assert_eq!(a.coeff(3), Some(int(0)));
        assert_eq!(a.coeff(4), None);
        let b = u(&[1, 2, 0, 0, 7], 6);
        // equality only through the shared order 3
        assert!(a.eq_to_order(&b));
        assert_eq!(a.add(&b).order(), 3);
    }

    #[test]
    fn product_order_tracks_valuation() {
        let a = Series::<Rational>::from_ints(2, &[1, 1], 5);
        let b = u(&[1, 3], 4);
        assert_eq!(a.mul(&b).order(), 5);
        let c = Series::<Rational>::from_ints(-1, &[1], 4);
        assert_eq!(b.mul(&c).order(), 3);
    }

    #[test]
    fn invert_parametrized_sum() {
        // T + 3 with T = 1 + 4t^2 + 36t^4
        let t_plus_3 = u(&[4, 0, 4, 0, 36], 4);
        let inv = t_plus_3.inverse().unwrap();
        assert_eq!(inv.coeff(0).unwrap(), rat(1, 4));
        assert!(inv.mul(&t_plus_3).eq_to_order(&Series::one()));
    }
}
