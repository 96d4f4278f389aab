use super::WalkTable;
use crate::report::{CheckReport, PartReport};
use num_bigint::BigInt;
use num_traits::Zero;

/// Checks the kernel equation of the table's model coefficient by
/// coefficient:
///
/// `K(x,y) Q(x,y) = 1 - t A(y)/x Q(0,y) - t B(x)/y Q(x,0) + t m/(xy) Q(0,0)`
///
/// where `A` collects the steps with `dx = -1`, `B` those with `dy = -1`
/// and `m` is the multiplicity of the SW step. Both sides are read from the
/// table, so an altered entry shows up at its length.
pub fn verify_functional_equation(table: &WalkTable) -> CheckReport {
    let model = table.model();
    let steps: Vec<((i64, i64), BigInt)> =
        model.steps().map(|((dx, dy), m)| ((dx as i64, dy as i64), BigInt::from(m))).collect();
    let sw = BigInt::from(model.multiplicity((-1, -1)));
    let maxn = table.maxn() as i64;
    let mut failure = None;
    'orders: for n in 0..=maxn {
        for i in -1..=n + 1 {
            for j in -1..=n + 1 {
                // [x^i y^j t^n] of K Q
                let mut lhs = table.get_signed(n, i, j).clone();
                for ((dx, dy), m) in &steps {
                    lhs -= m * table.get_signed(n - 1, i - dx, j - dy);
                }
                let mut rhs = BigInt::zero();
                if n == 0 && i == 0 && j == 0 {
                    rhs += 1;
                }
                for ((dx, dy), m) in &steps {
                    if i == -1 && *dx == -1 {
                        rhs -= m * table.get_signed(n - 1, 0, j - dy);
                    }
                    if j == -1 && *dy == -1 {
                        rhs -= m * table.get_signed(n - 1, i - dx, 0);
                    }
                }
                if i == -1 && j == -1 {
                    rhs += &sw * table.get_signed(n - 1, 0, 0);
                }
                if lhs != rhs {
                    failure = Some((n, format!("x^{i} y^{j} t^{n}: lhs {lhs}, rhs {rhs}")));
                    break 'orders;
                }
            }
        }
    }
    let part = match failure {
        None => PartReport::passed("kernel equation"),
        Some((n, sample)) => PartReport::failed("kernel equation", Some(n), sample),
    };
    CheckReport::from_parts(format!("functional-equation:{}", model.name()), maxn, vec![part])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{count_walks, StepModel};

    #[test]
    fn holds_for_registry() {
        for m in StepModel::registry() {
            assert!(verify_functional_equation(&count_walks(&m, 8)).pass, "{m:?}");
        }
    }

    #[test]
    fn detects_corruption_at_its_length() {
        let t = count_walks(&StepModel::gessel(), 12);
        let bad = t.with_entry(3, 1, 1, t.get(3, 1, 1) + 1);
        let r = verify_functional_equation(&bad);
        assert!(!r.pass);
        assert_eq!(r.first_failing_order, Some(3));
    }
}
