use num_bigint::BigInt;
use quadwalk::gessel::GesselCheck;
use quadwalk::walks::{count_walks, StepModel};

#[test]
fn every_check_passes_on_the_oracle() {
    for check in GesselCheck::ALL {
        let report = check.run(12);
        assert!(report.pass, "{}: {report:?}", check.name());
    }
}

#[test]
fn check_names_round_trip() {
    for check in GesselCheck::ALL {
        assert_eq!(GesselCheck::from_name(check.name()), Some(check));
    }
    assert_eq!(GesselCheck::from_name("nope"), None);
}

// Perturbing a single count on either boundary axis must break the chain.
#[test]
fn corrupted_counts_are_detected() {
    let order = 10;
    let table = count_walks(&StepModel::gessel(), GesselCheck::Orbit.table_size(order));
    for (n, i, j) in [(4, 0, 0), (5, 1, 0), (6, 0, 2), (7, 3, 0), (8, 0, 0)] {
        let value = table.get(n, i, j) + BigInt::from(1);
        let bad = table.with_entry(n, i, j, value);
        let caught: Vec<_> = [GesselCheck::Orbit, GesselCheck::Cubic, GesselCheck::Theorem]
            .into_iter()
            .filter(|c| !c.run_on(&bad, order).pass)
            .map(|c| c.name())
            .collect();
        assert!(!caught.is_empty(), "entry ({n},{i},{j}) slipped through");
        let orbit = GesselCheck::Orbit.run_on(&bad, order);
        assert!(!orbit.pass);
        assert!(orbit.first_failing_order.is_some_and(|k| k <= order));
    }
}
