use super::{Kernel, KernelError};
use crate::series::{int, MPoly, Rational};
use std::collections::BTreeMap;

/// Result of evaluating a symmetric polynomial at the two kernel roots.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaOutcome {
    /// `P(Y0, Y1)` as a Laurent polynomial in `x` and `t`.
    pub value: MPoly,
    /// The coefficient of `x^0`, a Laurent polynomial in `t`.
    pub constant_term: MPoly,
    /// Largest power of `x` in `value` (never positive).
    pub max_x_exponent: i64,
}

impl LemmaOutcome {
    /// The constant term as a rational, when it does not involve `t`.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.constant_term.involves("t") {
            return None;
        }
        Some(self.constant_term.terms().map(|(_, c)| c.clone()).next().unwrap_or_else(|| int(0)))
    }
}

fn swap(p: &MPoly) -> MPoly {
    let vars = p.vars();
    let iu = p.index("u");
    let iv = p.index("v");
    let zero = MPoly::zero(&vars);
    let mut out = zero.clone();
    for (e, c) in p.terms() {
        let mut exps: Vec<(&str, i32)> = vars.iter().zip(e).map(|(n, k)| (*n, *k)).collect();
        exps[iu].1 = e[iv];
        exps[iv].1 = e[iu];
        out = out.add(&zero.monomial_like(c.clone(), &exps));
    }
    out
}

/// Evaluates a symmetric polynomial `P(u, v)` at the kernel roots through
/// the elementary symmetric functions `e1 = Y0 + Y1`, `e2 = Y0 Y1`, which
/// are exact Laurent polynomials in `x` and `t` when the only up-step is
/// `(1, 1)`.
///
/// `p` must use the variables `u` and `v`; powers are reduced with
/// `u^a v^b + u^b v^a = e2^b p_(a-b)` and the power-sum recursion
/// `p_k = e1 p_(k-1) - e2 p_(k-2)`.
pub fn symmetric_extract(p: &MPoly, k: &Kernel) -> Result<LemmaOutcome, KernelError> {
    if swap(p) != *p {
        return Err(KernelError::NotSymmetric);
    }
    let up = k.row(1);
    if !up.is_monomial() {
        return Err(KernelError::NonMonomialLeading(up.to_string()));
    }
    let vars = ["x", "t"];
    let zero = MPoly::zero(&vars);
    let (m, a) = (up.coeff(up.lo().unwrap()), up.lo().unwrap() as i32);
    let inv_m = m.recip();
    // e1 = (1 - t P0) / (t m x^a), e2 = P-1 / (m x^a)
    let mut e1 = zero.monomial_like(inv_m.clone(), &[("t", -1), ("x", -a)]);
    for (e, c) in k.row(0).terms() {
        e1 = e1.sub(&zero.monomial_like(c * &inv_m, &[("x", e as i32 - a)]));
    }
    let mut e2 = zero.clone();
    for (e, c) in k.row(-1).terms() {
        e2 = e2.add(&zero.monomial_like(c * &inv_m, &[("x", e as i32 - a)]));
    }
    let iu = p.index("u");
    let iv = p.index("v");
    let mut power_sums: Vec<MPoly> = vec![zero.constant_like(int(2)), e1.clone()];
    let mut e2_powers: BTreeMap<i32, MPoly> = BTreeMap::new();
    let mut value = zero.clone();
    for (e, c) in p.terms() {
        let (da, db) = (e[iu], e[iv]);
        if da < db || da < 0 || db < 0 {
            continue;
        }
        let d = (da - db) as usize;
        while power_sums.len() <= d {
            let n = power_sums.len();
            let next = e1.mul(&power_sums[n - 1]).sub(&e2.mul(&power_sums[n - 2]));
            power_sums.push(next);
        }
        let e2b = e2_powers.entry(db).or_insert_with(|| e2.pow(db as u32)).clone();
        // u^a v^a counts once, u^a v^b with a > b stands for both orders
        let base = if d == 0 { e2b } else { e2b.mul(&power_sums[d]) };
        value = value.add(&base.scale(c));
    }
    let max_x_exponent = value.degree_range("x").map_or(0, |(_, hi)| hi as i64);
    if max_x_exponent > 0 {
        return Err(KernelError::PositiveExponent(max_x_exponent));
    }
    let constant_term = value.collect("x").remove(&0).unwrap_or_else(|| zero.clone());
    Ok(LemmaOutcome { value, constant_term, max_x_exponent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::build_kernel;
    use crate::walks::StepModel;

    fn poly(terms: &[((i32, i32), i64)]) -> MPoly {
        let zero = MPoly::zero(&["u", "v"]);
        terms.iter().fold(zero.clone(), |acc, ((a, b), c)| acc.add(&zero.monomial_like(int(*c), &[("u", *a), ("v", *b)])))
    }

    #[test]
    fn spec_examples() {
        let k = build_kernel(&StepModel::gessel()).unwrap();
        let sum = symmetric_extract(&poly(&[((1, 0), 1), ((0, 1), 1)]), &k).unwrap();
        assert_eq!(sum.constant_value(), Some(int(-1)));
        let prod = symmetric_extract(&poly(&[((1, 1), 1)]), &k).unwrap();
        assert_eq!(prod.constant_value(), Some(int(0)));
        let squares = symmetric_extract(&poly(&[((2, 0), 1), ((0, 2), 1)]), &k).unwrap();
        assert_eq!(squares.constant_value(), Some(int(1)));
    }

    #[test]
    fn rejects_asymmetric() {
        let k = build_kernel(&StepModel::gessel()).unwrap();
        assert_eq!(symmetric_extract(&poly(&[((1, 0), 1)]), &k), Err(KernelError::NotSymmetric));
    }
}
