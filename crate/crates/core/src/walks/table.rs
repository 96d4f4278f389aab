use super::StepModel;
use crate::series::{LaurentPoly, LaurentSeries, Rational, Series, UnivariateSeries, Var};
use num_bigint::BigInt;
use num_traits::Zero;

/// Exact counts `q(i, j; n)` of quadrant walks for `0 <= i, j <= n <= maxn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    model: StepModel,
    maxn: usize,
    /// `counts[n][i * (n + 1) + j]`
    counts: Vec<Vec<BigInt>>,
}

/// Counts quadrant walks by dynamic programming over the length.
pub fn count_walks(model: &StepModel, maxn: usize) -> WalkTable {
    let mut counts: Vec<Vec<BigInt>> = Vec::with_capacity(maxn + 1);
    counts.push(vec![BigInt::from(1)]);
    let steps: Vec<((i8, i8), BigInt)> = model.steps().map(|(s, m)| (s, BigInt::from(m))).collect();
    for n in 1..=maxn {
        let prev = &counts[n - 1];
        let w = n + 1;
        let mut cur = vec![BigInt::zero(); w * w];
        for i in 0..n {
            for j in 0..n {
                let c = &prev[i * n + j];
                if c.is_zero() {
                    continue;
                }
                for ((dx, dy), m) in &steps {
                    let (ti, tj) = (i as i64 + *dx as i64, j as i64 + *dy as i64);
                    if ti >= 0 && tj >= 0 {
                        cur[ti as usize * w + tj as usize] += c * m;
                    }
                }
            }
        }
        counts.push(cur);
    }
    WalkTable { model: model.clone(), maxn, counts }
}

impl WalkTable {
    pub fn model(&self) -> &StepModel {
        &self.model
    }

    pub fn maxn(&self) -> usize {
        self.maxn
    }

    /// `q(i, j; n)`, zero outside the table.
    pub fn get(&self, n: usize, i: usize, j: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if n > self.maxn || i > n || j > n {
            return ZERO.get_or_init(BigInt::zero);
        }
        &self.counts[n][i * (n + 1) + j]
    }

    /// Same as [`get`](Self::get) for signed indices.
    pub fn get_signed(&self, n: i64, i: i64, j: i64) -> &BigInt {
        if n < 0 || i < 0 || j < 0 {
            return self.get(usize::MAX, 0, 0);
        }
        self.get(n as usize, i as usize, j as usize)
    }

    /// A copy of the table with one entry replaced, for fault injection.
    pub fn with_entry(&self, n: usize, i: usize, j: usize, value: BigInt) -> WalkTable {
        assert!(n <= self.maxn && i <= n && j <= n, "entry outside the table");
        let mut t = self.clone();
        t.counts[n][i * (n + 1) + j] = value;
        t
    }

    /// Nonzero entries as `(n, i, j, count)`, by increasing `n`, then `i`, then `j`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &BigInt)> + '_ {
        self.counts.iter().enumerate().flat_map(|(n, row)| {
            row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (n, k / (n + 1), k % (n + 1), c))
        })
    }

    /// `q(i, j; n)` for `n = 0..=maxn`.
    pub fn endpoint(&self, i: usize, j: usize) -> Vec<BigInt> {
        (0..=self.maxn).map(|n| self.get(n, i, j).clone()).collect()
    }

    /// Total number of walks of each length.
    pub fn totals(&self) -> Vec<BigInt> {
        self.counts.iter().map(|row| row.iter().sum()).collect()
    }

    /// `Q(x, y)` restricted to `y^j`, as a series in `t` with polynomial
    /// coefficients in `x`.
    pub fn row(&self, j: usize) -> LaurentSeries {
        Series::from_fn(0, self.maxn as i64, |n| {
            let n = n as usize;
            LaurentPoly::from_terms(Var::X, (0..=n).map(|i| (i as i64, Rational::from_integer(self.get(n, i, j).clone()))))
        })
    }

    /// `Q(x, y)` restricted to `x^i`, with polynomial coefficients in `y`.
    pub fn column(&self, i: usize) -> LaurentSeries {
        Series::from_fn(0, self.maxn as i64, |n| {
            let n = n as usize;
            LaurentPoly::from_terms(Var::Y, (0..=n).map(|j| (j as i64, Rational::from_integer(self.get(n, i, j).clone()))))
        })
    }

    /// The series `sum_n q(i, j; n) t^n`.
    pub fn endpoint_series(&self, i: usize, j: usize) -> UnivariateSeries {
        Series::from_fn(0, self.maxn as i64, |n| Rational::from_integer(self.get(n as usize, i, j).clone()))
    }
}

/// The sections `Q(x,0)`, `Q(0,y)` and `Q(0,0)` of the walk generating function.
#[derive(Debug, Clone, PartialEq)]
pub struct Sections {
    pub qx0: LaurentSeries,
    pub q0y: LaurentSeries,
    pub q00: UnivariateSeries,
}

pub fn boundary_sections(table: &WalkTable) -> Sections {
    Sections { qx0: table.row(0), q0y: table.column(0), q00: table.endpoint_series(0, 0) }
}

/// `16^n (5/6)_n (1/2)_n / ((5/3)_n (2)_n)`, the number of Gessel
/// excursions of length `2n`.
pub fn gessel_closed_form(n: u32) -> Rational {
    let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
    let rising = |a: Rational| {
        let mut acc = Rational::from_integer(1.into());
        for k in 0..n {
            acc *= &a + Rational::from_integer(k.into());
        }
        acc
    };
    let sixteen = num_traits::pow(Rational::from_integer(16.into()), n as usize);
    sixteen * rising(r(5, 6)) * rising(r(1, 2)) / (rising(r(5, 3)) * rising(r(2, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gessel_counts() {
        let t = count_walks(&StepModel::gessel(), 8);
        let exc: Vec<i64> = (0..=8).map(|n| i64::try_from(t.get(n, 0, 0)).unwrap()).collect();
        assert_eq!(exc, vec![1, 0, 2, 0, 11, 0, 85, 0, 782]);
    }

    #[test]
    fn closed_form_values() {
        let v: Vec<Rational> = (0..4).map(gessel_closed_form).collect();
        let ints: Vec<i64> = vec![1, 2, 11, 85];
        for (a, b) in v.iter().zip(ints) {
            assert_eq!(*a, Rational::from_integer(b.into()));
        }
    }

    #[test]
    fn fault_hook_changes_one_entry() {
        let t = count_walks(&StepModel::gessel(), 4);
        let bad = t.with_entry(3, 1, 1, BigInt::from(99));
        assert_eq!(bad.get(3, 1, 1), &BigInt::from(99));
        assert_eq!(bad.get(4, 0, 0), t.get(4, 0, 0));
    }

    #[test]
    fn sections_start_as_expected() {
        let s = boundary_sections(&count_walks(&StepModel::gessel(), 4));
        assert_eq!(s.q00, Series::from_ints(0, &[1, 0, 2, 0, 11], 4));
        let c2 = s.qx0.coeff(2).unwrap();
        assert_eq!(c2, LaurentPoly::from_terms(Var::X, vec![(0, Rational::from_integer(2.into())), (2, Rational::from_integer(1.into()))]));
    }
}
