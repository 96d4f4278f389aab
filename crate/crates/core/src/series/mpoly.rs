use super::{fmt_rational, int, Coeff, Rational, Series, SeriesError};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Variables are named; every polynomial in an expression must share the
/// same variable list.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl MPoly {

    /// Parses an expression in the given variables built from integers,
    /// `+ - * ^` and parentheses. Division and negative powers are allowed
    /// for monomials only.
    ///
    /// ```
    /// use quadwalk::series::MPoly;
    /// let p = MPoly::parse(&["x", "t"], "(1 - x)^2 + 2*x/t").unwrap();
    /// assert_eq!(p, MPoly::parse(&["x", "t"], "x^2 - 2*x + 1 + 2*x*t^-1").unwrap());
    /// ```
    pub fn parse(vars: &[&str], text: &str) -> Result<Self, ParseError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, zero: MPoly::zero(vars) };
        let out = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(out)
    }

    /// The same polynomial over a different variable list; variables that
    /// occur must keep their names.
    pub fn with_vars(&self, vars: &[&str]) -> Self {
        let mut out = MPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; vars.len()];
            for (name, k) in self.vars.iter().zip(e) {
                if *k != 0 {
                    e2[out.index(name)] = *k;
                }
            }
            out.insert_add(e2, c.clone());
        }
        out
    }
    pub fn zero(vars: &[&str]) -> Self {
        MPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    fn zero_like(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(vec![0; self.vars.len()], c);
        }
        p
    }

    /// The variable with the given name.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = MPoly::zero(vars);
        let idx = p.index(name);
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        p.terms.insert(e, Rational::one());
        p
    }

    /// `c * prod v_i^e_i`.
    pub fn monomial_like(&self, c: Rational, exps: &[(&str, i32)]) -> Self {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in exps {
            e[self.index(name)] += k;
        }
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn index(&self, name: &str) -> usize {
        self.vars.iter().position(|v| v == name).unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert_add(&mut self, e: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c * r);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.zero_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.constant_like(Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to the named variable.
    pub fn derivative(&self, name: &str) -> Self {
        let idx = self.index(name);
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let k = e[idx];
            if k != 0 {
                let mut e2 = e.clone();
                e2[idx] -= 1;
                out.insert_add(e2, c * int(k as i64));
            }
        }
        out
    }

    /// Substitutes `v -> 1/v` for the named variable.
    pub fn reflect(&self, name: &str) -> Self {
        let idx = self.index(name);
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[idx] = -e2[idx];
            out.insert_add(e2, c.clone());
        }
        out
    }

    /// Groups terms by the exponent of the named variable; the returned
    /// coefficients no longer involve it.
    pub fn collect(&self, name: &str) -> BTreeMap<i32, MPoly> {
        let idx = self.index(name);
        let mut out: BTreeMap<i32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[idx], 0);
            out.entry(k).or_insert_with(|| self.zero_like()).insert_add(e2, c.clone());
        }
        out
    }

    /// Substitutes a polynomial for the named variable, which must occur
    /// with non-negative exponents only.
    pub fn substitute(&self, name: &str, value: &MPoly) -> Self {
        let mut out = self.zero_like();
        let mut pows: Vec<MPoly> = vec![self.constant_like(Rational::one())];
        for (k, coeff) in self.collect(name) {
            assert!(k >= 0, "negative power of {name} in substitution");
            while pows.len() <= k as usize {
                let next = pows.last().unwrap().mul(value);
                pows.push(next);
            }
            out = out.add(&coeff.mul(&pows[k as usize]));
        }
        out
    }

    /// Substitutes a rational value for the named variable.
    pub fn substitute_value(&self, name: &str, value: &Rational) -> Self {
        let idx = self.index(name);
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[idx], 0);
            out.insert_add(e2, c * super::laurent::pow_rational(value, k as i64));
        }
        out
    }

    /// Degree range `(min, max)` of the named variable.
    pub fn degree_range(&self, name: &str) -> Option<(i32, i32)> {
        let idx = self.index(name);
        let lo = self.terms.keys().map(|e| e[idx]).min()?;
        let hi = self.terms.keys().map(|e| e[idx]).max()?;
        Some((lo, hi))
    }

    /// Whether the named variable occurs at all.
    pub fn involves(&self, name: &str) -> bool {
        let idx = self.index(name);
        self.terms.keys().any(|e| e[idx] != 0)
    }

    /// Evaluates the polynomial with every variable replaced by a series.
    ///
    /// Negative exponents need the series to be invertible.
    pub fn eval_series<C: Coeff>(&self, values: &[(&str, Series<C>)]) -> Result<Series<C>, SeriesError> {
        let mut slots: Vec<Option<&Series<C>>> = vec![None; self.vars.len()];
        for (name, s) in values {
            slots[self.index(name)] = Some(s);
        }
        let mut cache: HashMap<(usize, i32), Series<C>> = HashMap::new();
        let mut inverses: HashMap<usize, Series<C>> = HashMap::new();
        let mut acc = Series::zero(super::EXACT);
        for (e, c) in &self.terms {
            let mut term = Series::constant(C::from_rational(c.clone()));
            for (idx, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let base = slots[idx].unwrap_or_else(|| panic!("no value for variable {}", self.vars[idx]));
                if !cache.contains_key(&(idx, k)) {
                    let p = if k > 0 {
                        base.pow(k as u32)
                    } else {
                        if !inverses.contains_key(&idx) {
                            inverses.insert(idx, base.inverse()?);
                        }
                        inverses[&idx].pow((-k) as u32)
                    };
                    cache.insert((idx, k), p);
                }
                term = term.mul(&cache[&(idx, k)]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// Error from [`MPoly::parse`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    zero: MPoly,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("expected an integer"))
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    match d.terms.iter().next() {
                        Some((e, c)) if d.terms.len() == 1 => {
                            let e: Vec<i32> = e.iter().map(|k| -k).collect();
                            let mut inv = self.zero.clone();
                            inv.terms.insert(e, c.recip());
                            acc = acc.mul(&inv);
                        }
                        _ => return self.err("can only divide by a monomial"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.integer()?;
        if k >= 0 {
            return Ok(base.pow(k as u32));
        }
        match base.terms.iter().next() {
            Some((e, c)) if base.terms.len() == 1 => {
                let e: Vec<i32> = e.iter().map(|x| x * k as i32).collect();
                let mut out = self.zero.clone();
                out.terms.insert(e, super::laurent::pow_rational(c, k));
                Ok(out)
            }
            _ => self.err("negative powers need a monomial base"),
        }
    }

    fn atom(&mut self) -> Result<MPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.zero.constant_like(int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if !self.zero.vars.iter().any(|v| v == name) {
                    self.pos = start;
                    return self.err(format!("unknown variable {name}"));
                }
                Ok(self.zero.monomial_like(Rational::one(), &[(name, 1)]))
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&fmt_rational(c))?;
            for (name, k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::UnivariateSeries;

    const V: [&str; 3] = ["a", "b", "t"];

    #[test]
    fn parses_expressions() {
        let p = MPoly::parse(&V, "-(a + b)^2 + 3*a*b/t - b^-2").unwrap();
        let a = MPoly::var(&V, "a");
        let b = MPoly::var(&V, "b");
        let expected = a
            .add(&b)
            .pow(2)
            .neg()
            .add(&a.mul(&b).mul(&a.monomial_like(int(3), &[("t", -1)])))
            .sub(&a.monomial_like(int(1), &[("b", -2)]));
        assert_eq!(p, expected);
        assert!(MPoly::parse(&V, "a + c").is_err());
        assert!(MPoly::parse(&V, "(a + b").is_err());
        assert!(MPoly::parse(&V, "a/(a + b)").is_err());
    }

    #[test]
    fn ring_operations() {
        let a = MPoly::var(&V, "a");
        let b = MPoly::var(&V, "b");
        let lhs = a.add(&b).pow(2);
        let rhs = a.pow(2).add(&a.mul(&b).scale(&int(2))).add(&b.pow(2));
        assert_eq!(lhs, rhs);
        assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn derivative_and_reflect() {
        let a = MPoly::var(&V, "a");
        let p = a.pow(3).add(&a.monomial_like(int(2), &[("a", -1), ("b", 1)]));
        let d = p.derivative("a");
        assert_eq!(d, a.pow(2).scale(&int(3)).add(&a.monomial_like(int(-2), &[("a", -2), ("b", 1)])));
        assert_eq!(p.reflect("a").reflect("a"), p);
    }

    #[test]
    fn evaluates_with_series() {
        // a^2 * t^-1 at a = 1 + t, t = t
        let p = MPoly::var(&V, "a").pow(2).mul(&MPoly::var(&V, "a").monomial_like(int(1), &[("t", -1)]));
        let one_plus_t: UnivariateSeries = Series::from_ints(0, &[1, 1], 10);
        let got = p.eval_series(&[("a", one_plus_t), ("t", Series::t())]).unwrap();
        assert_eq!(got, Series::from_ints(-1, &[1, 2, 1], 9));
    }
}
