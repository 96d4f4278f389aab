use super::{fmt_rational, Coeff, Rational};
use num_traits::{One, Zero};
use std::fmt;

/// Name of the single variable of a [`LaurentPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => f.write_str("x"),
            Var::Y => f.write_str("y"),
        }
    }
}

/// Laurent polynomial in one variable with exact rational coefficients.
///
/// Coefficients are stored densely for exponents `lo..=hi`. The first and
/// last stored coefficients are nonzero unless the polynomial is zero, in
/// which case nothing is stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    lo: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(var: Var, lo: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { var, lo, coeffs };
        p.normalize();
        p
    }

    pub fn zero_in(var: Var) -> Self {
        LaurentPoly { var, lo: 0, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        LaurentPoly::new(var, 0, vec![c])
    }

    pub fn monomial(var: Var, c: Rational, exp: i64) -> Self {
        LaurentPoly::new(var, exp, vec![c])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(var: Var, terms: I) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return LaurentPoly::zero_in(var);
        }
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPoly::new(var, lo, coeffs)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.lo = 0;
            }
            Some(k) => {
                if k > 0 {
                    self.coeffs.drain(..k);
                    self.lo += k as i64;
                }
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lo == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn lo(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.lo;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    fn joined_var(&self, other: &Self) -> Var {
        if self.is_constant() {
            other.var
        } else {
            debug_assert!(
                other.is_constant() || other.var == self.var,
                "mixing Laurent polynomials in {} and {}",
                self.var,
                other.var
            );
            self.var
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let var = self.joined_var(other);
        if other.is_zero() {
            return self.clone().with_var(var);
        }
        if self.is_zero() {
            let r = if negate { Coeff::neg(other) } else { other.clone() };
            return r.with_var(var);
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().unwrap().max(other.hi().unwrap());
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            if negate {
                coeffs[(e - lo) as usize] -= c;
            } else {
                coeffs[(e - lo) as usize] += c;
            }
        }
        LaurentPoly::new(var, lo, coeffs)
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut p = self.clone();
        if !p.is_zero() {
            p.lo += k;
        }
        p
    }

    /// Substitutes `var -> 1/var`.
    pub fn reflect(&self) -> Self {
        match self.hi() {
            None => self.clone(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { var: self.var, lo: -hi, coeffs }
            }
        }
    }

    /// True when the polynomial is invariant under `var -> 1/var`.
    pub fn is_symmetric(&self) -> bool {
        self.reflect() == *self
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            acc += c * pow_rational(at, e);
        }
        acc
    }

    /// Keeps only the exponents in `lo..=hi` (either bound optional).
    pub fn restrict(&self, lo: Option<i64>, hi: Option<i64>) -> Self {
        LaurentPoly::from_terms(
            self.var,
            self.terms()
                .filter(|(e, _)| lo.is_none_or(|l| *e >= l) && hi.is_none_or(|h| *e <= h))
                .map(|(e, c)| (e, c.clone())),
        )
    }

    /// Remainder of division by a monic polynomial with non-negative
    /// exponents. `self` must have non-negative exponents as well.
    pub fn rem_monic(&self, modulus: &LaurentPoly) -> LaurentPoly {
        let mdeg = modulus.hi().expect("modulus must be nonzero");
        assert!(modulus.lo().unwrap() >= 0 && modulus.coeff(mdeg).is_one(), "modulus must be a monic polynomial");
        assert!(self.lo().is_none_or(|l| l >= 0), "dividend must be a polynomial");
        let mut work: Vec<Rational> = match self.hi() {
            None => return self.clone(),
            Some(h) => (0..=h).map(|e| self.coeff(e)).collect(),
        };
        let mut d = work.len() as i64 - 1;
        while d >= mdeg {
            let c = work[d as usize].clone();
            if !c.is_zero() {
                for (e, m) in modulus.terms() {
                    let idx = (d - mdeg + e) as usize;
                    work[idx] -= &c * m;
                }
            }
            d -= 1;
        }
        LaurentPoly::new(self.var, 0, work)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::constant(self.var, Rational::one());
        for _ in 0..k {
            acc = Coeff::mul(&acc, self);
        }
        acc
    }
}

pub(crate) fn pow_rational(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

impl Coeff for LaurentPoly {
    fn ring_zero() -> Self {
        LaurentPoly::zero_in(Var::X)
    }
    fn ring_one() -> Self {
        LaurentPoly::constant(Var::X, Rational::one())
    }
    fn is_ring_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        LaurentPoly::constant(Var::X, r)
    }
    fn add(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }
    fn mul(&self, other: &Self) -> Self {
        let var = self.joined_var(other);
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero_in(var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul(a, b);
            }
        }
        LaurentPoly::new(var, self.lo + other.lo, coeffs)
    }
    fn neg(&self) -> Self {
        LaurentPoly { var: self.var, lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return LaurentPoly::zero_in(self.var);
        }
        LaurentPoly { var: self.var, lo: self.lo, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let var = a.joined_var(b);
        let plo = a.lo + b.lo;
        let phi = a.hi().unwrap() + b.hi().unwrap();
        if self.is_zero() {
            self.var = var;
            self.lo = plo;
            self.coeffs = vec![Rational::zero(); (phi - plo + 1) as usize];
        } else {
            if self.is_constant() {
                self.var = var;
            }
            let hi = self.hi().unwrap().max(phi);
            let lo = self.lo.min(plo);
            if lo < self.lo {
                let mut front = vec![Rational::zero(); (self.lo - lo) as usize];
                front.append(&mut self.coeffs);
                self.coeffs = front;
                self.lo = lo;
            }
            let len = (hi - self.lo + 1) as usize;
            if self.coeffs.len() < len {
                self.coeffs.resize(len, Rational::zero());
            }
        }
        let off = (plo - self.lo) as usize;
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[off + i + j].add_mul(x, y);
            }
        }
        self.normalize();
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_monomial() {
            Some(LaurentPoly { var: self.var, lo: -self.lo, coeffs: vec![self.coeffs[0].recip()] })
        } else {
            None
        }
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms by ascending exponent, `c*x^e`, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", fmt_rational(c))?;
            } else {
                write!(f, "{}*{}^{}", fmt_rational(c), self.var, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn xp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::X, terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn normalizes_storage() {
        let p = LaurentPoly::new(Var::X, -2, vec![int(0), int(3), int(0), int(0)]);
        assert_eq!(p.lo(), Some(-1));
        assert_eq!(p.hi(), Some(-1));
        assert!(p.is_monomial());
        assert!(LaurentPoly::new(Var::X, 5, vec![int(0)]).is_zero());
    }

    #[test]
    fn product_and_inverse() {
        let a = xp(&[(-1, 1), (0, 1)]);
        let b = xp(&[(-1, 1), (0, -1)]);
        assert_eq!(Coeff::mul(&a, &b), xp(&[(-2, 1), (0, -1)]));
        let m = LaurentPoly::monomial(Var::X, rat(2, 3), -3);
        assert_eq!(Coeff::mul(&m, &m.inverse().unwrap()), LaurentPoly::ring_one());
        assert!(a.inverse().is_none());
    }

    #[test]
    fn add_mul_matches_mul() {
        let a = xp(&[(-2, 3), (1, -1)]);
        let b = xp(&[(0, 2), (4, 5)]);
        let mut acc = xp(&[(7, 1)]);
        acc.add_mul(&a, &b);
        assert_eq!(acc, Coeff::add(&xp(&[(7, 1)]), &Coeff::mul(&a, &b)));
    }

    #[test]
    fn reflect_and_symmetry() {
        let p = xp(&[(-2, 1), (1, 4)]);
        assert_eq!(p.reflect(), xp(&[(-1, 4), (2, 1)]));
        assert!(xp(&[(-1, 2), (0, 5), (1, 2)]).is_symmetric());
        assert!(!p.is_symmetric());
    }

    #[test]
    fn remainder_by_monic() {
        // x^3 = 1 mod (x^2 + x + 1), so x^3 + 2x + 5 leaves 2x + 6
        let p = xp(&[(0, 5), (1, 2), (3, 1)]);
        let m = xp(&[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(p.rem_monic(&m), xp(&[(0, 6), (1, 2)]));
    }

    #[test]
    fn display_is_canonical() {
        let p = LaurentPoly::from_terms(Var::Y, vec![(2, rat(-1, 2)), (0, int(3))]);
        assert_eq!(p.to_string(), "3 + -1/2*y^2");
    }
}
