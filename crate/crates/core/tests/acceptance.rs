//! One line per acceptance criterion. Run with `cargo test --test acceptance`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use quadwalk::gessel::GesselCheck;
use quadwalk::kernel::{build_kernel, symmetric_extract};
use quadwalk::multistep::{finite_group_scan, symmetry_evidence, WeightedCheck, WEIGHTED_LAMBDAS};
use quadwalk::report::CheckReport;
use quadwalk::series::MPoly;
use quadwalk::walks::{count_walks, StepModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn summarize(reports: &[CheckReport]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}: {}", r.check, r.residual_sample.as_deref().unwrap_or("failed")))
        .collect();
    let names: Vec<String> = reports.iter().map(|r| format!("{}@{}", r.check, r.order)).collect();
    if failed.is_empty() {
        outcome(true, names.join(", "))
    } else {
        outcome(false, failed.join("; "))
    }
}

fn rising(a: BigRational, n: u32) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, k| acc * (&a + BigRational::from_integer(k.into())))
}

fn closed_form(n: u32) -> BigRational {
    let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
    let sixteen = BigRational::from_integer(BigInt::from(16).pow(n));
    sixteen * rising(r(5, 6), n) * rising(r(1, 2), n) / (rising(r(5, 3), n) * rising(r(2, 1), n))
}

/// Counts words of length `len` over the Gessel steps that stay in the
/// quadrant and return to the origin, by running through all `4^len` words.
fn brute_force_excursions(len: u32) -> u64 {
    const STEPS: [(i32, i32); 4] = [(1, 0), (1, 1), (-1, 0), (-1, -1)];
    let mut count = 0;
    'words: for w in 0..4u64.pow(len) {
        let (mut x, mut y, mut code) = (0, 0, w);
        for _ in 0..len {
            let (dx, dy) = STEPS[(code % 4) as usize];
            code /= 4;
            x += dx;
            y += dy;
            if x < 0 || y < 0 {
                continue 'words;
            }
        }
        if x == 0 && y == 0 {
            count += 1;
        }
    }
    count
}

fn criterion_1() -> Outcome {
    let table = count_walks(&StepModel::gessel(), 24);
    let dp = table.endpoint(0, 0);
    for n in 0..=12u32 {
        let c = BigRational::from_integer(dp[2 * n as usize].clone());
        if c != closed_form(n) {
            return outcome(false, format!("n={n}: dp {c}, closed form {}", closed_form(n)));
        }
        if 2 * n <= 10 && BigInt::from(brute_force_excursions(2 * n)) != dp[2 * n as usize] {
            return outcome(false, format!("n={n}: word enumeration disagrees"));
        }
    }
    outcome(true, format!("q(0,0;2n) for n=0..12, q(0,0;24)={}", dp[24]))
}

fn theorem_part(order: i64, prefixes: &[&str]) -> Outcome {
    let r = GesselCheck::Theorem.run(order);
    let parts: Vec<_> = r.parts.iter().filter(|p| prefixes.iter().any(|q| p.name.starts_with(q))).collect();
    let failed: Vec<String> = parts.iter().filter(|p| !p.pass).map(|p| format!("{p:?}")).collect();
    if parts.is_empty() {
        return outcome(false, format!("no parts named {prefixes:?}: {}", r.residual_sample.unwrap_or_default()));
    }
    let names: Vec<&str> = parts.iter().map(|p| p.name.as_str()).collect();
    outcome(failed.is_empty(), if failed.is_empty() { format!("{} through t^{order}", names.join(", ")) } else { failed.join("; ") })
}

fn criterion_4() -> Outcome {
    let order = 24;
    let checks = [GesselCheck::Orbit, GesselCheck::Sum, GesselCheck::Reconstruct, GesselCheck::Cubic];
    let reports: Vec<CheckReport> = checks.iter().map(|c| c.run(order)).collect();
    let clean = summarize(&reports);
    if !clean.pass {
        return clean;
    }
    // single-coefficient faults on each boundary axis and inside the quadrant
    let small = 12;
    let table = count_walks(&StepModel::gessel(), GesselCheck::Orbit.table_size(small));
    for (n, i, j) in [(2, 0, 0), (5, 3, 0), (6, 0, 2), (9, 1, 0), (11, 0, 3)] {
        let bad = table.with_entry(n, i, j, table.get(n, i, j) + 1);
        if checks.iter().all(|c| c.run_on(&bad, small).pass) {
            return outcome(false, format!("fault at q({i},{j};{n}) not detected"));
        }
    }
    outcome(true, format!("{}; 5 injected faults detected", clean.detail))
}

fn criterion_5() -> Outcome {
    let f = quadwalk::gessel::factorization_identity();
    if !f.holds {
        return outcome(false, "factorization identity does not hold");
    }
    let r = GesselCheck::Critical.run(12);
    outcome(r.pass, format!("exact in {}; {}", f.ring, summarize(&[r]).detail))
}

fn criterion_6() -> Outcome {
    let ann = GesselCheck::Annihilators.run(40);
    let d = theorem_part(30, &["R'"]);
    outcome(ann.pass && d.pass, format!("{}; {}", summarize(&[ann]).detail, d.detail))
}

fn criterion_7() -> Outcome {
    let reports: Vec<CheckReport> = WEIGHTED_LAMBDAS
        .iter()
        .flat_map(|&l| {
            WeightedCheck::ALL.iter().map(move |c| {
                let mut r = c.run(l, 20);
                r.check = format!("{}:{l}", r.check);
                r
            })
        })
        .collect();
    summarize(&reports)
}

fn criterion_8() -> Outcome {
    for m in StepModel::registry() {
        let e = symmetry_evidence(&m, 10);
        if !e.agrees() {
            return outcome(false, format!("{e:?}"));
        }
    }
    let scan = finite_group_scan(16, 10);
    let mut found: Vec<String> = scan.symmetric_kernel().map(|c| c.steps.clone()).collect();
    let mut named: Vec<String> = [StepModel::gessel(), StepModel::kreweras(), StepModel::w_se_ne(), StepModel::w_e_se_ne()]
        .iter()
        .map(|m| m.describe())
        .collect();
    found.sort();
    named.sort();
    let agree = scan.finite_group.iter().all(|c| c.symmetric_kernel == c.xbar_polynomial);
    outcome(
        found == named && agree && scan.finite_group.len() == 23,
        format!("{} finite-group classes, flagged {}", scan.finite_group.len(), found.join(" ")),
    )
}

fn criterion_9() -> Outcome {
    let k = build_kernel(&StepModel::gessel()).expect("gessel kernel");
    let mut rng = ChaCha8Rng::seed_from_u64(2009);
    let zero = MPoly::zero(&["u", "v"]);
    for trial in 0..100 {
        let degree = rng.gen_range(0..=6);
        let mut p = zero.clone();
        for a in 0..=degree {
            for b in 0..=a.min(degree - a) {
                let c = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
                if c.is_zero() {
                    continue;
                }
                p = p.add(&zero.monomial_like(c.clone(), &[("u", a), ("v", b)]));
                if a != b {
                    p = p.add(&zero.monomial_like(c, &[("u", b), ("v", a)]));
                }
            }
        }
        let expected = p
            .substitute_value("u", &BigRational::zero())
            .substitute_value("v", &BigRational::from_integer((-1).into()));
        let expected = expected.terms().map(|(_, c)| c.clone()).next().unwrap_or_else(BigRational::zero);
        let got = match symmetric_extract(&p, &k) {
            Ok(o) => o.constant_value(),
            Err(e) => return outcome(false, format!("trial {trial}: {e}")),
        };
        if got.as_ref() != Some(&expected) {
            return outcome(false, format!("trial {trial}: constant term {got:?}, P(0,-1) = {expected}"));
        }
    }
    outcome(true, "100 random symmetric polynomials of degree <= 6")
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("Gessel sequence against the closed form and word enumeration", Duration::from_secs(10), criterion_1),
        ("closed form for Q(0,0) through t^30", Duration::from_secs(60), || theorem_part(30, &["Q(0,0)"])),
        ("closed forms for Q(xt,0) and Q(0,y) through t^24, evenness", Duration::from_secs(300), || {
            theorem_part(24, &["Q(xt,0)", "Q(0,y)"])
        }),
        ("proof chain through t^24 and fault injection", Duration::from_secs(300), criterion_4),
        ("factorization identity and critical series", Duration::MAX, criterion_5),
        ("annihilators through t^40, R'(0) and R''(0) through t^30", Duration::MAX, criterion_6),
        ("weighted model identities through t^20", Duration::from_secs(120), criterion_7),
        ("symmetric-kernel classification", Duration::MAX, criterion_8),
        ("constant-term lemma on random symmetric polynomials", Duration::MAX, criterion_9),
    ];
    let mut all = true;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= *budget;
        all &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} [{:.2?}] {}", i + 1, elapsed, o.detail);
        if o.pass && !pass {
            println!("  over the time budget of {budget:?}");
        }
    }
    if !all {
        std::process::exit(1);
    }
}
