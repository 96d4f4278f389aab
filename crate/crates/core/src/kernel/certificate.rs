use crate::series::{Rational, SubstitutionCertificate};
use crate::walks::WalkTable;
use num_bigint::BigInt;

/// Certifies, over the whole table, that substituting series of
/// t-valuations `(vx, vy)` for `(x, y)` in `Q(x, y; t)` is well defined:
/// every nonzero `q(i, j; n)` with `n >= 1` must land at valuation
/// `n + vx i + vy j >= slope * n` for one positive `slope`.
///
/// The smallest ratio seen is reported together with the monomial that
/// attains it.
pub fn verify_substitutability(table: &WalkTable, (vx, vy): (i64, i64)) -> SubstitutionCertificate {
    let mut best: Option<(Rational, (usize, usize, usize), i64)> = None;
    for (n, i, j, _) in table.nonzero() {
        if n == 0 {
            continue;
        }
        let val = n as i64 + vx * i as i64 + vy * j as i64;
        let ratio = Rational::new(BigInt::from(val), BigInt::from(n));
        if best.as_ref().is_none_or(|(r, _, _)| ratio < *r) {
            best = Some((ratio, (n, i, j), val));
        }
    }
    match best {
        None => SubstitutionCertificate::trivial((vx.max(0), vy.max(0))),
        Some((slope, witness, witness_valuation)) => SubstitutionCertificate {
            substitutable: slope > Rational::from_integer(0.into()),
            valuations: (vx, vy),
            slope,
            witness: Some(witness),
            witness_valuation,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;
    use crate::walks::{count_walks, StepModel};

    #[test]
    fn gessel_pairs() {
        let t = count_walks(&StepModel::gessel(), 30);
        assert!(verify_substitutability(&t, (0, 1)).substitutable);
        let c = verify_substitutability(&t, (1, -1));
        assert!(c.substitutable);
        assert_eq!(c.slope, rat(1, 2));
        let bad = verify_substitutability(&t, (-1, 1));
        assert!(!bad.substitutable);
        let (n, i, j) = bad.witness.unwrap();
        assert_eq!(n as i64 - i as i64 + j as i64, bad.witness_valuation);
        assert_eq!(bad.witness_valuation, 0);
    }
}
