use crate::args::{ClassifyArgs, CountArgs, KernelArgs, MultistepArgs, ReportArgs, Show, VerifyArgs};
use crate::output::{strings, table, Rendered};
use quadwalk::gessel::GesselCheck;
use quadwalk::kernel::{build_kernel, group_orbit, kernel_roots, DEFAULT_GROUP_BOUND};
use quadwalk::multistep::{
    enumerate_other_models, finite_group_scan, symmetry_evidence, WeightedCheck,
    MAX_LAMBDA, WEIGHTED_LAMBDAS,
};
use quadwalk::report::CheckReport;
use quadwalk::series::LaurentSeries;
use quadwalk::walks::{count_walks, gessel_closed_form, StepModel};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Errors that make the invocation itself invalid.
#[derive(Debug)]
pub struct UsageError(pub String);

type Res = Result<Rendered, UsageError>;

fn model(name: &str) -> Result<StepModel, UsageError> {
    StepModel::by_name(name).map_err(|e| UsageError(e.to_string()))
}

fn non_negative(order: i64) -> Result<i64, UsageError> {
    if order < 0 {
        return Err(UsageError(format!("order must be non-negative, got {order}")));
    }
    Ok(order)
}

pub fn count(a: &CountArgs) -> Res {
    let m = model(&a.model)?;
    let t = count_walks(&m, a.max_n);
    let mut counts: Vec<(usize, usize, usize, String)> = match a.end {
        Some((i, j)) => t.endpoint(i, j).iter().enumerate().map(|(n, c)| (n, i, j, c.to_string())).collect(),
        None => t.nonzero().map(|(n, i, j, c)| (n, i, j, c.to_string())).collect(),
    };
    counts.sort_by_key(|(n, i, j, _)| (*n, *i, *j));
    let rows: Vec<Vec<String>> =
        counts.iter().map(|(n, i, j, c)| vec![n.to_string(), i.to_string(), j.to_string(), c.clone()]).collect();
    let mut text = format!("# model={} maxn={}\n", m.name(), a.max_n);
    for r in &rows {
        writeln!(text, "{}", r.join(" ")).unwrap();
    }
    Ok(Rendered {
        json: json!({
            "model": m.name(),
            "maxn": a.max_n,
            "counts": counts.iter().map(|(n, i, j, c)| json!([n, i, j, c])).collect::<Vec<_>>(),
        }),
        header: strings(["n", "i", "j", "count"]),
        rows,
        text,
        pass: true,
    })
}

fn series_rows(name: &str, s: &LaurentSeries) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (n, p) in s.terms() {
        for (e, c) in p.terms() {
            rows.push(vec![name.into(), n.to_string(), e.to_string(), c.numer().to_string(), c.denom().to_string()]);
        }
    }
    rows
}

fn series_json(s: &LaurentSeries) -> Value {
    serde_json::to_value(s.to_json_value()).expect("series json")
}

pub fn kernel(a: &KernelArgs) -> Res {
    let m = model(&a.model)?;
    let order = non_negative(a.order)?;
    let k = build_kernel(&m).map_err(|e| UsageError(e.to_string()))?;
    let header = strings(["series", "t_exp", "x_exp", "num", "den"]);
    match a.show {
        Show::Roots => {
            let r = kernel_roots(&k, order).map_err(|e| UsageError(e.to_string()))?;
            let mut rows = series_rows("Y0", &r.y0);
            rows.extend(series_rows("Y1", &r.y1));
            Ok(Rendered {
                json: json!({ "model": m.name(), "kernel": k.to_string(), "Y0": series_json(&r.y0), "Y1": series_json(&r.y1) }),
                header,
                rows,
                text: format!("# Y0\n{}# Y1\n{}", r.y0.to_text(), r.y1.to_text()),
                pass: true,
            })
        }
        Show::Symfuns => {
            let r = kernel_roots(&k, order).map_err(|e| UsageError(e.to_string()))?;
            let (sum, prod) = (r.sum(), r.product());
            let ev = symmetry_evidence(&m, order);
            let mut rows = series_rows("Y0+Y1", &sum);
            rows.extend(series_rows("Y0*Y1", &prod));
            Ok(Rendered {
                json: json!({
                    "model": m.name(),
                    "sum": series_json(&sum),
                    "product": series_json(&prod),
                    "predicate": ev.predicate,
                    "xbar_polynomial": ev.xbar_polynomial,
                }),
                header,
                rows,
                text: format!(
                    "# Y0+Y1\n{}# Y0*Y1\n{}# predicate={} xbar_polynomial={}\n",
                    sum.to_text(),
                    prod.to_text(),
                    ev.predicate,
                    ev.xbar_polynomial
                ),
                pass: ev.agrees(),
            })
        }
        Show::Orbit => {
            let r = kernel_roots(&k, order).map_err(|e| UsageError(e.to_string()))?;
            let t = count_walks(&m, (2 * order + 4) as usize);
            let orbit = group_orbit(&k, &r, &t, DEFAULT_GROUP_BOUND).map_err(|e| UsageError(e.to_string()))?;
            let rows: Vec<Vec<String>> = orbit
                .iter()
                .map(|e| {
                    let (slope, witness) = match &e.certificate {
                        Some(c) => (c.slope.to_string(), c.witness.map_or(String::new(), |(n, i, j)| format!("x^{i} y^{j} t^{n}"))),
                        None => (String::new(), String::new()),
                    };
                    vec![e.word_string(), e.label.0.clone(), e.label.1.clone(), e.substitutable().to_string(), slope, witness]
                })
                .collect();
            let header = strings(["word", "x", "y", "substitutable", "slope", "witness"]);
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({"word": r[0], "x": r[1], "y": r[2], "substitutable": r[3] == "true", "slope": r[4], "witness": r[5]}))
                .collect();
            let text = format!("# group of order {} for {}\n{}", orbit.len(), m.name(), table(&header, &rows));
            Ok(Rendered {
                json: json!({ "model": m.name(), "group_order": orbit.len(), "orbit": json_rows }),
                header,
                rows,
                text,
                pass: true,
            })
        }
    }
}

fn check_json(r: &CheckReport) -> Value {
    let mut v = json!({ "check": r.check, "order": r.order, "pass": r.pass });
    if let Some(k) = r.first_failing_order {
        v["first_failing_order"] = json!(k);
    }
    if let Some(s) = &r.residual_sample {
        v["residual_sample"] = json!(s);
    }
    v
}

fn check_row(r: &CheckReport) -> Vec<String> {
    vec![
        r.check.clone(),
        r.order.to_string(),
        r.pass.to_string(),
        r.first_failing_order.map_or(String::new(), |k| k.to_string()),
        r.residual_sample.clone().unwrap_or_default(),
    ]
}

fn check_text(r: &CheckReport) -> String {
    let mut s = format!("{} order={} {}\n", r.check, r.order, if r.pass { "pass" } else { "FAIL" });
    for p in &r.parts {
        let status = if p.pass { "ok" } else { "FAIL" };
        write!(s, "  {status:4} {}", p.name).unwrap();
        if let Some(sample) = &p.residual_sample {
            write!(s, " ({sample})").unwrap();
        }
        s.push('\n');
    }
    s
}

fn checks_rendered(reports: &[CheckReport], single: bool) -> Rendered {
    let json = if single { check_json(&reports[0]) } else { Value::Array(reports.iter().map(check_json).collect()) };
    Rendered {
        json,
        header: strings(["check", "order", "pass", "first_failing_order", "residual_sample"]),
        rows: reports.iter().map(check_row).collect(),
        text: reports.iter().map(check_text).collect(),
        pass: reports.iter().all(|r| r.pass),
    }
}

pub fn verify(a: &VerifyArgs) -> Res {
    let order = non_negative(a.order)?;
    let checks: Vec<GesselCheck> = if a.check == "all" {
        GesselCheck::ALL.to_vec()
    } else {
        vec![GesselCheck::from_name(&a.check).ok_or_else(|| UsageError(format!("unknown check {:?}", a.check)))?]
    };
    let reports: Vec<CheckReport> = checks.par_iter().map(|c| c.run(order)).collect();
    Ok(checks_rendered(&reports, a.check != "all"))
}

fn weighted_reports(lambda: u32, order: i64, checks: &[WeightedCheck]) -> Vec<CheckReport> {
    let wb = quadwalk::multistep::WeightedBoundary::from_lambda(lambda, order);
    checks
        .par_iter()
        .map(|c| {
            let mut r = c.run_on(&wb, order);
            r.check = format!("{}:lambda={lambda}", r.check);
            r
        })
        .collect()
}

pub fn multistep(a: &MultistepArgs) -> Res {
    let order = non_negative(a.order)?;
    if a.lambda > MAX_LAMBDA {
        return Err(UsageError(format!("lambda must be at most {MAX_LAMBDA}")));
    }
    let checks: Vec<WeightedCheck> = if a.check == "all" {
        WeightedCheck::ALL.to_vec()
    } else {
        vec![WeightedCheck::from_name(&a.check).ok_or_else(|| UsageError(format!("unknown check {:?}", a.check)))?]
    };
    let reports = weighted_reports(a.lambda, order, &checks);
    Ok(checks_rendered(&reports, a.check != "all"))
}

fn classification(
    models: &[StepModel],
    order: i64,
) -> (Vec<quadwalk::multistep::SymmetryEvidence>, Vec<String>, Vec<Vec<String>>) {
    let evidence: Vec<_> = models.par_iter().map(|m| symmetry_evidence(m, order)).collect();
    let header = strings(["model", "steps", "predicate", "xbar_polynomial"]);
    let rows = evidence
        .iter()
        .map(|e| vec![e.model.clone(), e.steps.clone(), e.predicate.to_string(), e.xbar_polynomial.to_string()])
        .collect();
    (evidence, header, rows)
}

pub fn classify(a: &ClassifyArgs) -> Res {
    let order = non_negative(a.order)?;
    if a.scan {
        let scan = finite_group_scan(DEFAULT_GROUP_BOUND, order);
        let header = strings(["steps", "group_order", "symmetric_kernel", "xbar_polynomial"]);
        let rows: Vec<Vec<String>> = scan
            .finite_group
            .iter()
            .map(|c| vec![c.steps.clone(), c.group_order.to_string(), c.symmetric_kernel.to_string(), c.xbar_polynomial.to_string()])
            .collect();
        let flagged = scan.symmetric_kernel().count();
        let agrees = scan.finite_group.iter().all(|c| c.symmetric_kernel == c.xbar_polynomial);
        let text = format!(
            "# {} nondegenerate step sets, {} up to symmetry, {} with a finite group, {} flagged\n{}",
            scan.nondegenerate_sets,
            scan.classes,
            scan.finite_group.len(),
            flagged,
            table(&header, &rows)
        );
        return Ok(Rendered {
            json: serde_json::to_value(&scan).expect("scan json"),
            header,
            rows,
            text,
            pass: agrees && flagged == 4,
        });
    }
    let (evidence, header, rows) = match (&a.model, a.all) {
        (Some(name), false) => {
            let e = symmetry_evidence(&model(name)?, order);
            let rows = vec![vec![e.model.clone(), e.steps.clone(), e.predicate.to_string(), e.xbar_polynomial.to_string()]];
            (vec![e], strings(["model", "steps", "predicate", "xbar_polynomial"]), rows)
        }
        (None, true) => classification(&StepModel::registry(), order),
        _ => return Err(UsageError("classify needs --all, --model NAME or --scan".into())),
    };
    Ok(Rendered {
        json: serde_json::to_value(&evidence).expect("evidence json"),
        text: table(&header, &rows),
        header,
        rows,
        pass: evidence.iter().all(|e| e.agrees()),
    })
}

pub fn report(a: &ReportArgs) -> Res {
    let order = non_negative(a.order)?;
    let rows_n = a.rows;
    let t = count_walks(&StepModel::gessel(), 2 * rows_n as usize);
    let dp = t.endpoint(0, 0);
    let gessel_rows: Vec<Vec<String>> = (0..=rows_n)
        .map(|n| {
            let c = &dp[2 * n as usize];
            let cf = gessel_closed_form(n);
            let ok = cf.is_integer() && cf.to_integer() == *c;
            vec![n.to_string(), c.to_string(), cf.to_string(), ok.to_string()]
        })
        .collect();
    let gessel_header = strings(["n", "dp", "closed_form", "match"]);
    let sequence_ok = gessel_rows.iter().all(|r| r[3] == "true");

    // unweighted models only: the weighted ones are not small-step sets
    let unweighted: Vec<StepModel> =
        StepModel::registry().into_iter().filter(|m| m.steps().all(|(_, k)| k == 1)).collect();
    let (evidence, class_header, class_rows) = classification(&unweighted, 10);
    let flagged: Vec<&str> = evidence.iter().filter(|e| e.predicate).map(|e| e.model.as_str()).collect();

    let mut checks: Vec<CheckReport> = GesselCheck::ALL.par_iter().map(|c| c.run(order)).collect();
    for l in WEIGHTED_LAMBDAS {
        checks.extend(weighted_reports(l, order, &WeightedCheck::ALL));
    }
    for o in enumerate_other_models(order.max(0) as usize) {
        checks.push(o.functional_equation);
    }
    let check_header = strings(["check", "order", "pass", "first_failing_order", "residual_sample"]);
    let check_rows: Vec<Vec<String>> = checks.iter().map(check_row).collect();

    let pass = sequence_ok && evidence.iter().all(|e| e.agrees()) && checks.iter().all(|c| c.pass);
    let text = format!(
        "Gessel excursions q(0,0;2n)\n{}\nSymmetric-kernel classification of the unweighted models ({} flagged: {})\n{}\nChecks\n{}",
        table(&gessel_header, &gessel_rows),
        flagged.len(),
        flagged.join(", "),
        table(&class_header, &class_rows),
        table(&check_header, &check_rows),
    );
    let json = json!({
        "gessel": gessel_rows.iter().map(|r| json!({"n": r[0].parse::<u32>().unwrap(), "dp": r[1], "closed_form": r[2], "match": r[3] == "true"})).collect::<Vec<_>>(),
        "classification": evidence,
        "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
        "pass": pass,
    });
    Ok(Rendered { json, header: gessel_header, rows: gessel_rows, text, pass })
}
