use super::{Coeff, Series, SeriesError, EXACT};

/// Polynomial relation `sum_k a_k(t) S^k = 0` in an unknown series `S`.
///
/// Relations are built with the arithmetic helpers below, e.g.
/// `S - 2t - 2t S^2` for the series `X = 2t + 2t X^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRelation<C: Coeff> {
    coeffs: Vec<Series<C>>,
}

impl<C: Coeff> PolyRelation<C> {
    /// The unknown `S` itself.
    pub fn unknown() -> Self {
        PolyRelation { coeffs: vec![Series::zero(EXACT), Series::one()] }
    }

    /// A relation term free of `S`.
    pub fn constant(s: Series<C>) -> Self {
        PolyRelation { coeffs: vec![s] }
    }

    pub fn from_coeffs(coeffs: Vec<Series<C>>) -> Self {
        let mut r = PolyRelation { coeffs };
        r.trim();
        r
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.is_zero() && c.is_exact()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Series<C>] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Series::zero(EXACT);
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).unwrap_or(&zero).add(other.coeffs.get(k).unwrap_or(&zero)))
            .collect();
        PolyRelation::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PolyRelation { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![Series::zero(EXACT); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        PolyRelation::from_coeffs(coeffs)
    }

    pub fn scale_series(&self, s: &Series<C>) -> Self {
        PolyRelation { coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = PolyRelation::constant(Series::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes a series for the unknown.
    pub fn evaluate(&self, s: &Series<C>) -> Series<C> {
        s.horner(&self.coeffs)
    }

    /// Formal derivative with respect to the unknown.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&super::int(k as i64)))
            .collect::<Vec<_>>();
        if coeffs.is_empty() {
            return PolyRelation::constant(Series::zero(EXACT));
        }
        PolyRelation::from_coeffs(coeffs)
    }
}

/// Solves `relation(S) = 0` for the series `S` with constant term `seed`.
///
/// Coefficients are found one at a time: writing `F` for the relation,
/// `[t^n] F(S)` is `F'(seed)|_{t=0} * s_n` plus terms involving only
/// `s_0, ..., s_{n-1}`, so each step is a single linear solve. Powers of
/// `S` are maintained incrementally, giving `O(N^2 * deg)` coefficient
/// products overall.
pub fn newton_implicit<C: Coeff>(relation: &PolyRelation<C>, seed: C, order: i64) -> Result<Series<C>, SeriesError> {
    let a = relation.coeffs();
    for (k, c) in a.iter().enumerate() {
        if c.valuation_bound() < 0 {
            return Err(SeriesError::NegativeValuation(k));
        }
    }
    let order = a.iter().map(|c| c.order()).fold(order, i64::min);
    let d = relation.degree();
    let n_max = order.max(0) as usize;
    let coef = |k: usize, m: usize| -> C { a[k].coeff(m as i64).unwrap_or_else(C::ring_zero) };

    // powers[k][m] = [t^m] S^k
    let mut powers: Vec<Vec<C>> = vec![vec![C::ring_one()]];
    let mut seed_pow = C::ring_one();
    let mut seed_pows = vec![C::ring_one()];
    for _ in 1..=d {
        seed_pow = seed_pow.mul(&seed);
        seed_pows.push(seed_pow.clone());
        powers.push(vec![seed_pow.clone()]);
    }

    let mut constant = C::ring_zero();
    for (k, sp) in seed_pows.iter().enumerate() {
        constant.add_mul(&coef(k, 0), sp);
    }
    if !constant.is_ring_zero() {
        return Err(SeriesError::SeedNotRoot(constant.describe()));
    }
    // F'(seed) at t = 0
    let mut slope = C::ring_zero();
    for k in 1..=d {
        slope.add_mul(&coef(k, 0).scale(&super::int(k as i64)), &seed_pows[k - 1]);
    }
    let slope_inv = slope.inverse().ok_or_else(|| SeriesError::DegenerateLinearization(slope.describe()))?;

    let mut s: Vec<C> = vec![seed];
    for n in 1..=n_max {
        // [t^n] S^k with s_n provisionally zero
        for k in 1..=d {
            let mut acc = C::ring_zero();
            for i in 1..n {
                acc.add_mul(&s[i], &powers[k - 1][n - i]);
            }
            // i = 0 uses the provisional [t^n] S^(k-1), i = n uses s_n = 0
            let prev = if k == 1 { C::ring_zero() } else { powers[k - 1][n].clone() };
            acc.add_mul(&s[0], &prev);
            powers[k].push(acc);
        }
        powers[0].push(C::ring_zero());
        let mut residual = C::ring_zero();
        for (k, pk) in powers.iter().enumerate() {
            for m in 0..=n {
                let c = coef(k, m);
                if !c.is_ring_zero() {
                    residual.add_mul(&c, &pk[n - m]);
                }
            }
        }
        let sn = residual.mul(&slope_inv).neg();
        for k in 1..=d {
            let bump = sn.mul(&seed_pows[k - 1]).scale(&super::int(k as i64));
            powers[k][n] = powers[k][n].add(&bump);
        }
        s.push(sn);
    }
    Ok(Series::new(0, s, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, Rational, UnivariateSeries};

    fn t_series() -> UnivariateSeries {
        Series::<Rational>::t()
    }

    #[test]
    fn catalan_ish_series() {
        // X = 2t + 2t X^2
        let x = PolyRelation::<Rational>::unknown();
        let two_t = PolyRelation::constant(t_series().scale(&int(2)));
        let rel = x.sub(&two_t).sub(&x.pow(2).mul(&two_t));
        let sol = newton_implicit(&rel, int(0), 9).unwrap();
        assert_eq!(sol, Series::from_ints(0, &[0, 2, 0, 8, 0, 64, 0, 640, 0, 7168], 9));
        assert!(rel.evaluate(&sol).is_zero());
    }

    #[test]
    fn rejects_bad_seed_and_degenerate_slope() {
        let x = PolyRelation::<Rational>::unknown();
        let rel = x.pow(2).sub(&PolyRelation::constant(Series::one()));
        assert!(matches!(newton_implicit(&rel, int(2), 5), Err(SeriesError::SeedNotRoot(_))));
        // S^2 - t^2 has a double root at the seed 0
        let rel = x.pow(2).sub(&PolyRelation::constant(t_series().pow(2)));
        assert!(matches!(newton_implicit(&rel, int(0), 5), Err(SeriesError::DegenerateLinearization(_))));
    }
}
