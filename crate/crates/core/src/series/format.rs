//! Canonical text and JSON forms of truncated series.
//!
//! Text form:
//!
//! ```text
//! # var=x valuation=-1 order=12
//! t^-1: 1*x^-1
//! t^0: -1 + -1*x^-2
//! ```
//!
//! Lines are sorted by t-exponent, terms by x-exponent; zero coefficients are
//! omitted. `order=exact` marks an exact polynomial.

use super::{fmt_rational, LaurentPoly, LaurentSeries, Rational, Series, UnivariateSeries, Var, EXACT};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("series has non-constant coefficients")]
    NotUnivariate,
    #[error("json: {0}")]
    Json(String),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

/// JSON form of a series; numerators and denominators are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub var: Var,
    /// Exponent of the first nonzero coefficient, `None` for the zero series.
    pub valuation: Option<i64>,
    /// Truncation order, `None` for an exact polynomial.
    pub order: Option<i64>,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub exp: i64,
    /// `[x-exponent, numerator, denominator]`
    pub terms: Vec<(i64, String, String)>,
}

pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    let bad = || FormatError::Rational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn series_var(s: &LaurentSeries) -> Var {
    s.terms().map(|(_, p)| p.var()).find(|_| true).unwrap_or(Var::X)
}

impl Series<LaurentPoly> {
    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let order = if self.is_exact() { "exact".to_string() } else { self.order().to_string() };
        let val = self.valuation().map_or("none".to_string(), |v| v.to_string());
        writeln!(out, "# var={} valuation={} order={}", series_var(self), val, order).unwrap();
        for (n, p) in self.terms() {
            if !p.is_zero() {
                writeln!(out, "t^{n}: {p}").unwrap();
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, FormatError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let mut var = None;
        let mut order = None;
        for field in header.trim_start_matches('#').split_whitespace() {
            match field.split_once('=') {
                Some(("var", "x")) => var = Some(Var::X),
                Some(("var", "y")) => var = Some(Var::Y),
                Some(("order", "exact")) => order = Some(EXACT),
                Some(("order", o)) => order = Some(o.parse().map_err(|_| parse_err(1, "bad order"))?),
                Some(("valuation", _)) => {}
                _ => return Err(parse_err(1, format!("unexpected header field {field:?}"))),
            }
        }
        let var = var.ok_or_else(|| parse_err(1, "missing var"))?;
        let order = order.ok_or_else(|| parse_err(1, "missing order"))?;
        let mut coeffs: Vec<(i64, LaurentPoly)> = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            let (head, body) = line.split_once(':').ok_or_else(|| parse_err(lineno, "missing ':'"))?;
            let n: i64 = head
                .trim()
                .strip_prefix("t^")
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| parse_err(lineno, "expected t^k"))?;
            if coeffs.last().is_some_and(|(m, _)| *m >= n) {
                return Err(parse_err(lineno, "t-exponents must increase"));
            }
            let p = parse_laurent(body.trim(), var).map_err(|e| match e {
                FormatError::Rational(r) => parse_err(lineno, format!("invalid rational {r:?}")),
                other => other,
            })?;
            coeffs.push((n, p));
        }
        Ok(assemble(var, order, coeffs))
    }

    pub fn to_json_value(&self) -> SeriesJson {
        SeriesJson {
            var: series_var(self),
            valuation: self.valuation(),
            order: if self.is_exact() { None } else { Some(self.order()) },
            coeffs: self
                .terms()
                .filter(|(_, p)| !p.is_zero())
                .map(|(n, p)| CoeffJson {
                    exp: n,
                    terms: p.terms().map(|(e, c)| (e, c.numer().to_string(), c.denom().to_string())).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json_value(j: &SeriesJson) -> Result<Self, FormatError> {
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for c in &j.coeffs {
            let mut terms = Vec::with_capacity(c.terms.len());
            for (e, num, den) in &c.terms {
                terms.push((*e, parse_rational(&format!("{num}/{den}"))?));
            }
            coeffs.push((c.exp, LaurentPoly::from_terms(j.var, terms)));
        }
        Ok(assemble(j.var, j.order.unwrap_or(EXACT), coeffs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("series serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, FormatError> {
        let j: SeriesJson = serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))?;
        Self::from_json_value(&j)
    }
}

impl Series<Rational> {
    fn lifted(&self) -> LaurentSeries {
        self.map(|c| LaurentPoly::constant(Var::X, c.clone()))
    }

    fn unlift(s: LaurentSeries) -> Result<Self, FormatError> {
        s.try_map(|p| if p.is_constant() { Ok(p.coeff(0)) } else { Err(FormatError::NotUnivariate) })
    }

    /// Canonical text form; coefficients appear as constants in `x`.
    pub fn to_text(&self) -> String {
        self.lifted().to_text()
    }

    pub fn from_text(text: &str) -> Result<Self, FormatError> {
        Self::unlift(LaurentSeries::from_text(text)?)
    }

    pub fn to_json(&self) -> String {
        self.lifted().to_json()
    }

    pub fn from_json(s: &str) -> Result<Self, FormatError> {
        Self::unlift(LaurentSeries::from_json(s)?)
    }
}

fn assemble(var: Var, order: i64, coeffs: Vec<(i64, LaurentPoly)>) -> LaurentSeries {
    let Some(start) = coeffs.first().map(|(n, _)| *n) else {
        return Series::zero(order);
    };
    let end = coeffs.last().unwrap().0;
    let mut dense = vec![LaurentPoly::zero_in(var); (end - start + 1) as usize];
    for (n, p) in coeffs {
        dense[(n - start) as usize] = p;
    }
    Series::new(start, dense, order)
}

fn parse_laurent(body: &str, var: Var) -> Result<LaurentPoly, FormatError> {
    let mut terms = Vec::new();
    for term in body.split(" + ") {
        let term = term.trim();
        let (c, e) = match term.split_once('*') {
            Some((c, rest)) => {
                let e = rest
                    .strip_prefix(&format!("{var}^"))
                    .and_then(|e| e.parse::<i64>().ok())
                    .ok_or_else(|| FormatError::Rational(term.to_string()))?;
                (c, e)
            }
            None => (term, 0),
        };
        terms.push((e, parse_rational(c)?));
    }
    Ok(LaurentPoly::from_terms(var, terms))
}

/// Renders a rational series as a compact one-line polynomial in `t`.
pub fn inline(s: &UnivariateSeries) -> String {
    let mut out = String::new();
    for (n, c) in s.terms() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match n {
            0 => out.push_str(&fmt_rational(c)),
            1 => write!(out, "{}*t", fmt_rational(c)).unwrap(),
            _ => write!(out, "{}*t^{}", fmt_rational(c), n).unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    if !s.is_exact() {
        write!(out, " + O(t^{})", s.order() + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn sample() -> LaurentSeries {
        let p = |t: &[(i64, Rational)]| LaurentPoly::from_terms(Var::X, t.to_vec());
        Series::new(
            -1,
            vec![p(&[(-1, int(1))]), p(&[(0, int(-1)), (-2, int(-1))]), p(&[]), p(&[(3, rat(-7, 12))])],
            5,
        )
    }

    #[test]
    fn text_round_trip() {
        let s = sample();
        let text = s.to_text();
        assert!(text.starts_with("# var=x valuation=-1 order=5\nt^-1: 1*x^-1\n"));
        assert_eq!(LaurentSeries::from_text(&text).unwrap(), s);
        assert_eq!(LaurentSeries::from_text(&text).unwrap().to_text(), text);
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        let j = s.to_json();
        assert_eq!(LaurentSeries::from_json(&j).unwrap(), s);
        let exact: UnivariateSeries = Series::from_ints(0, &[1, 0, 2], EXACT);
        let j = exact.to_json();
        assert!(j.contains("\"order\":null"));
        assert_eq!(UnivariateSeries::from_json(&j).unwrap(), exact);
    }

    #[test]
    fn rejects_garbage() {
        assert!(LaurentSeries::from_text("# var=x order=3\nt^0: 1/0\n").is_err());
        assert!(LaurentSeries::from_text("# var=x order=3\nt^1: 1\nt^0: 2\n").is_err());
        assert!(UnivariateSeries::from_text("# var=x order=3\nt^0: 1*x^1\n").is_err());
    }
}
