//! Exact truncated-series and Laurent-polynomial arithmetic.
//!
//! Everything here is exact: coefficients are arbitrary-precision
//! rationals, and every series carries the order through which its
//! coefficients are known. Coefficients past that order are unknown, never
//! assumed to vanish.

mod compose;
mod format;
mod laurent;
mod mpoly;
mod newton;
mod truncated;

pub use compose::{
    compose, extract_x_part, lift, substitute_boundary, BoundaryForm, ExtractMode,
    SubstitutionCertificate,
};
pub use format::{inline, parse_rational, CoeffJson, FormatError, SeriesJson};
pub use laurent::{LaurentPoly, Var};
pub use mpoly::{MPoly, ParseError};
pub use newton::{newton_implicit, PolyRelation};
pub use truncated::{Series, EXACT};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// Exact rational number.
pub type Rational = num_rational::BigRational;

/// Truncated series in `t` with Laurent-polynomial coefficients.
pub type LaurentSeries = Series<LaurentPoly>;

/// Truncated series in `t` with rational coefficients.
pub type UnivariateSeries = Series<Rational>;

/// Default truncation order for a computation when the caller gives none.
pub const DEFAULT_ORDER: i64 = 30;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Errors raised by series operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("leading coefficient {0} is not an invertible monomial")]
    NonMonomialLeading(String),
    #[error("cannot invert a series that is zero through order {0}")]
    ZeroSeries(i64),
    #[error("operation needs a finite truncation order, got an exact polynomial")]
    Unbounded,
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstantTerm(String),
    #[error("seed is not a root of the constant-term equation (residual {0})")]
    SeedNotRoot(String),
    #[error("linearization at the seed is not invertible ({0})")]
    DegenerateLinearization(String),
    #[error("relation coefficient of degree {0} has negative t-valuation")]
    NegativeValuation(usize),
    #[error("uncertified substitution: monomial {witness} has t-valuation {valuation}")]
    Uncertified { witness: String, valuation: String },
    #[error("substitution needs non-negative exponents in {0}, found {1}")]
    NegativeExponent(Var, i64),
    #[error("inner series valuation {inner} is below the certified valuation {certified}")]
    CertificateMismatch { inner: i64, certified: i64 },
}

/// Coefficient ring of a truncated series.
///
/// Implemented for [`Rational`] and [`LaurentPoly`].
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_ring_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self);
    /// Multiplicative inverse, when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    fn describe(&self) -> String {
        format!("{self:?}")
    }
}

impl Coeff for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        if a.is_integer() && b.is_integer() && self.is_integer() {
            let n = self.numer() + a.numer() * b.numer();
            *self = Rational::from_integer(n);
        } else {
            *self += a * b;
        }
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn describe(&self) -> String {
        fmt_rational(self)
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
