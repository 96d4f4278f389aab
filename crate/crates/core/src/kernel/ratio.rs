use crate::series::{LaurentPoly, Rational};
use num_traits::Zero;

/// `num / den` in lowest terms, both polynomials (no negative exponents).
#[derive(Debug, Clone, PartialEq)]
pub struct Ratio {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

/// Dense coefficients `c_0..c_d` of a polynomial.
fn dense(p: &LaurentPoly) -> Vec<Rational> {
    let hi = p.hi().unwrap_or(-1);
    (0..=hi).map(|e| p.coeff(e)).collect()
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Quotient and remainder of polynomial division; `b` must be nonzero.
fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Reduces `num / den` for Laurent polynomials in one variable.
pub fn reduce(num: &LaurentPoly, den: &LaurentPoly) -> Ratio {
    let var = num.var();
    let (nlo, dlo) = (num.lo().unwrap_or(0), den.lo().expect("nonzero denominator"));
    // num/den = v^(nlo - dlo) * n(v) / d(v) with n(0), d(0) nonzero
    let n = dense(&num.shift(-nlo));
    let d = dense(&den.shift(-dlo));
    let g = gcd(&n, &d);
    let (n, _) = divmod(&n, &g);
    let (d, _) = divmod(&d, &g);
    let shift = nlo - dlo;
    let to_poly = |v: Vec<Rational>, s: i64| LaurentPoly::new(var, s, v);
    let (ns, ds) = if shift >= 0 { (shift, 0) } else { (0, -shift) };
    let lead = d.last().cloned().expect("nonzero denominator");
    let n: Vec<Rational> = n.iter().map(|c| c / &lead).collect();
    let d: Vec<Rational> = d.iter().map(|c| c / &lead).collect();
    Ratio { num: to_poly(n, ns), den: to_poly(d, ds) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, Var};

    fn yp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::Y, terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn cancels_common_factor() {
        // (1 + 1/y) / (1/y + 2 + y) = 1 / (1 + y)
        let r = reduce(&yp(&[(0, 1), (-1, 1)]), &yp(&[(-1, 1), (0, 2), (1, 1)]));
        assert_eq!(r.num, yp(&[(0, 1)]));
        assert_eq!(r.den, yp(&[(0, 1), (1, 1)]));
        // 1/x over x: 1 / x^2
        let x = |t: &[(i64, i64)]| LaurentPoly::from_terms(Var::X, t.iter().map(|&(e, c)| (e, int(c))));
        let r = reduce(&x(&[(-1, 1)]), &x(&[(1, 1)]));
        assert_eq!(r.num, x(&[(0, 1)]));
        assert_eq!(r.den, x(&[(2, 1)]));
    }
}
