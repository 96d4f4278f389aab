use super::certificate::verify_substitutability;
use super::modp;
use super::ratio::{reduce, Ratio};
use super::{Kernel, KernelError, KernelRoots};
use crate::series::{
    int, Coeff, LaurentPoly, LaurentSeries, MPoly, Rational, Series, SeriesError, SubstitutionCertificate, Var,
};
use crate::walks::WalkTable;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Largest group order searched for by default.
pub const DEFAULT_GROUP_BOUND: usize = 16;

const SEED: u64 = 0x5eed_0f_0b17;

/// The two generators of the group of the walk:
/// `Phi(x,y) = (x̄ A-(y)/A+(y), y)` and `Psi(x,y) = (x, ȳ B-(x)/B+(x))`,
/// where `K = 1 - t(x̄ A- + A0 + x A+) = 1 - t(ȳ B- + B0 + y B+)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    Phi,
    Psi,
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Involution::Phi => "Phi",
            Involution::Psi => "Psi",
        })
    }
}

fn eval_modp(p: &LaurentPoly, v: u64) -> Option<u64> {
    let vinv = modp::inv(v)?;
    let mut acc = 0u64;
    for (e, c) in p.terms() {
        let num = modp::from_i64(i64::try_from(c.numer()).ok()?);
        let den = modp::inv(modp::from_i64(i64::try_from(c.denom()).ok()?))?;
        let base = if e >= 0 { modp::pow(v, e as u64) } else { modp::pow(vinv, (-e) as u64) };
        acc = modp::add(acc, modp::mul(modp::mul(num, den), base));
    }
    Some(acc)
}

fn apply_modp(k: &Kernel, g: Involution, (x, y): (u64, u64)) -> Option<(u64, u64)> {
    match g {
        Involution::Phi => {
            let num = eval_modp(k.col(-1), y)?;
            let den = modp::mul(eval_modp(k.col(1), y)?, x);
            Some((modp::mul(num, modp::inv(den)?), y))
        }
        Involution::Psi => {
            let num = eval_modp(k.row(-1), x)?;
            let den = modp::mul(eval_modp(k.row(1), x)?, y);
            Some((x, modp::mul(num, modp::inv(den)?)))
        }
    }
}

fn check_generators(k: &Kernel) -> Result<(), KernelError> {
    for dx in [-1, 1] {
        if k.col(dx).is_zero() {
            return Err(KernelError::DegenerateGroup(k.model().name().into(), dx));
        }
    }
    Ok(())
}

fn random_points(count: usize) -> impl Iterator<Item = (u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count).map(move |_| (rng.gen_range(2..modp::P), rng.gen_range(2..modp::P)))
}

/// Order of the group generated by `Phi` and `Psi`, found by iterating
/// `Phi Psi` on random points modulo a large prime.
pub fn group_order(k: &Kernel, bound: usize) -> Result<usize, KernelError> {
    check_generators(k)?;
    let mut best = 0;
    let mut tried = 0;
    for pt in random_points(12) {
        if tried == 3 {
            break;
        }
        let mut cur = pt;
        let mut found = None;
        let mut defined = true;
        for step in 1..=bound / 2 {
            match apply_modp(k, Involution::Psi, cur).and_then(|c| apply_modp(k, Involution::Phi, c)) {
                Some(c) => cur = c,
                None => {
                    defined = false;
                    break;
                }
            }
            if cur == pt {
                found = Some(step);
                break;
            }
        }
        if !defined {
            continue;
        }
        tried += 1;
        match found {
            Some(s) => best = best.max(2 * s),
            None => return Err(KernelError::OrbitNotClosed(bound)),
        }
    }
    if tried == 0 {
        return Err(KernelError::OrbitNotClosed(bound));
    }
    Ok(best)
}

/// Checks at random points that `Phi` and `Psi` are involutions.
pub fn verify_involutions(k: &Kernel) -> Result<bool, KernelError> {
    check_generators(k)?;
    for pt in random_points(8) {
        for g in [Involution::Phi, Involution::Psi] {
            if let Some(back) = apply_modp(k, g, pt).and_then(|p| apply_modp(k, g, p)) {
                if back != pt {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn to_mpoly(p: &LaurentPoly, name: &str, vars: &[&str]) -> MPoly {
    let zero = MPoly::zero(vars);
    p.terms().fold(zero.clone(), |acc, (e, c)| acc.add(&zero.monomial_like(c.clone(), &[(name, e as i32)])))
}

/// Checks `K(Phi(x,y)) = K(x,y)` and `K(Psi(x,y)) = K(x,y)` as exact
/// identities of rational functions, after clearing denominators.
pub fn verify_kernel_invariance(k: &Kernel) -> Result<bool, KernelError> {
    check_generators(k)?;
    let vars = ["x", "y"];
    let x = MPoly::var(&vars, "x");
    let y = MPoly::var(&vars, "y");
    let one = x.constant_like(int(1));
    // (other, parts of the kernel sum along `var`, var)
    let sides = [
        (x.clone(), [k.col(-1), k.col(0), k.col(1)].map(|p| to_mpoly(p, "y", &vars)), "x"),
        (y.clone(), [k.row(-1), k.row(0), k.row(1)].map(|p| to_mpoly(p, "x", &vars)), "y"),
    ];
    for (v, [lo, mid, hi], name) in sides {
        // v' = num / den with num = lo, den = hi * v
        let num = lo.clone();
        let den = hi.mul(&v);
        let lhs = lo.mul(&den.pow(2)).add(&mid.mul(&num).mul(&den)).add(&hi.mul(&num.pow(2)));
        let vbar = one.monomial_like(int(1), &[(name, -1)]);
        let sum = lo.mul(&vbar).add(&mid).add(&hi.mul(&v));
        let rhs = num.mul(&den).mul(&sum);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A pair in the orbit of `(x, Y0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitElement {
    /// Generators in the order they are applied to `(x, Y0)`.
    pub word: Vec<Involution>,
    /// Components as series, when the involutions could be carried out in
    /// the ring of Laurent-coefficient series.
    pub x: Option<LaurentSeries>,
    pub y: Option<LaurentSeries>,
    /// Readable names of the components, e.g. `x*Y0`.
    pub label: (String, String),
    pub certificate: Option<SubstitutionCertificate>,
}

impl OrbitElement {
    pub fn substitutable(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| c.substitutable)
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "id".into();
        }
        self.word.iter().rev().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn pair(&self) -> String {
        format!("({}, {})", self.label.0, self.label.1)
    }
}

fn eval_poly_at(p: &LaurentPoly, v: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
    let mut inv: Option<LaurentSeries> = None;
    let mut acc: LaurentSeries = Series::zero(crate::series::EXACT);
    for (e, c) in p.terms() {
        let base = if e >= 0 {
            v.pow(e as u32)
        } else {
            if inv.is_none() {
                inv = Some(v.inverse()?);
            }
            inv.as_ref().unwrap().pow((-e) as u32)
        };
        acc = acc.add(&base.scale(c));
    }
    Ok(acc)
}

/// Applies one generator to a pair of series, using `other' = num(v) /
/// (den(v) other)` in lowest terms, or `(1 - t M0(v)) / (t M+(v)) - other`
/// when that division is not available.
fn apply_series(
    ratio: &Ratio,
    parts: [&LaurentPoly; 3],
    v: &LaurentSeries,
    other: &LaurentSeries,
) -> Result<LaurentSeries, SeriesError> {
    let product = || -> Result<LaurentSeries, SeriesError> {
        let den = eval_poly_at(&ratio.den, v)?.mul(other);
        Ok(eval_poly_at(&ratio.num, v)?.mul(&den.inverse()?))
    };
    match product() {
        Ok(s) => Ok(s),
        Err(_) => {
            let one = Series::constant(LaurentPoly::constant(Var::X, int(1)));
            let top = one.sub(&eval_poly_at(parts[1], v)?.shift(1));
            let bottom = eval_poly_at(parts[2], v)?.shift(1);
            Ok(top.mul(&bottom.inverse()?).sub(other))
        }
    }
}

struct Instantiator<'a> {
    k: &'a Kernel,
    phi: Ratio,
    psi: Ratio,
}

impl Instantiator<'_> {
    fn apply(&self, g: Involution, (x, y): &(LaurentSeries, LaurentSeries)) -> Result<(LaurentSeries, LaurentSeries), SeriesError> {
        match g {
            Involution::Phi => {
                let nx = apply_series(&self.phi, [self.k.col(-1), self.k.col(0), self.k.col(1)], y, x)?;
                Ok((nx, y.clone()))
            }
            Involution::Psi => {
                let ny = apply_series(&self.psi, [self.k.row(-1), self.k.row(0), self.k.row(1)], x, y)?;
                Ok((x.clone(), ny))
            }
        }
    }

    /// Applies the alternating word starting with `first`, keeping every
    /// intermediate pair; stops at the first failure.
    fn walk(&self, start: &(LaurentSeries, LaurentSeries), first: Involution, len: usize) -> Vec<Option<(LaurentSeries, LaurentSeries)>> {
        let mut out = vec![Some(start.clone())];
        let mut g = first;
        for _ in 0..len {
            let next = out.last().unwrap().as_ref().and_then(|p| self.apply(g, p).ok());
            out.push(next);
            g = other(g);
        }
        out
    }
}

fn other(g: Involution) -> Involution {
    match g {
        Involution::Phi => Involution::Psi,
        Involution::Psi => Involution::Phi,
    }
}

fn alternating(first: Involution, len: usize) -> Vec<Involution> {
    let mut g = first;
    (0..len)
        .map(|_| {
            let cur = g;
            g = other(g);
            cur
        })
        .collect()
}

fn monomial_name(c: &Rational, a: i64) -> String {
    let coeff = crate::series::fmt_rational(c);
    let xpart = match a {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{a}"),
    };
    match (coeff.as_str(), xpart.is_empty()) {
        (_, true) => coeff,
        ("1", false) => xpart,
        ("-1", false) => format!("-{xpart}"),
        _ => format!("{coeff}*{xpart}"),
    }
}

/// Names `s` as `c x^a R` with `R` one of `1, Y0, Y1`, when it has that form.
fn recognize(s: &LaurentSeries, roots: &KernelRoots) -> Option<String> {
    let one: LaurentSeries = Series::one();
    let lead_s = s.coeff(s.valuation()?)?;
    for (name, r) in [("", &one), ("Y0", &roots.y0), ("Y1", &roots.y1)] {
        let (Some(vs), Some(vr)) = (s.valuation(), r.valuation()) else { continue };
        if vs != vr {
            continue;
        }
        let Some(inv) = r.coeff(vr).and_then(|c| c.inverse()) else { continue };
        let q = lead_s.mul(&inv);
        if !q.is_monomial() {
            continue;
        }
        let a = q.lo().unwrap();
        let diff = s.sub(&r.scale_coeff(&q.clone().with_var(Var::X)));
        if !diff.is_zero() || diff.order() < 1 {
            continue;
        }
        let m = monomial_name(&q.coeff(a), a);
        return Some(match (name, m.as_str()) {
            ("", _) => m,
            (_, "1") => name.to_string(),
            (_, "-1") => format!("-{name}"),
            _ => format!("{m}*{name}"),
        });
    }
    None
}

/// The orbit of `(x, Y0)` under the group, each element instantiated as a
/// pair of series where possible and certified against `table`.
pub fn group_orbit(
    k: &Kernel,
    roots: &KernelRoots,
    table: &WalkTable,
    bound: usize,
) -> Result<Vec<OrbitElement>, KernelError> {
    let order = group_order(k, bound)?;
    let inst = Instantiator { k, phi: reduce(k.col(-1), k.col(1)), psi: reduce(k.row(-1), k.row(1)) };
    let x: LaurentSeries = Series::constant(LaurentPoly::monomial(Var::X, int(1), 1));
    let start = (x, roots.y0.clone());
    let forward = inst.walk(&start, Involution::Psi, order - 1);
    let backward = inst.walk(&start, Involution::Phi, order - 1);
    let mut out = Vec::with_capacity(order);
    for i in 0..order {
        // forward element i equals backward element order - i
        let (word, pair) = if i <= order / 2 {
            (alternating(Involution::Psi, i), forward[i].clone().or_else(|| backward.get(order - i).cloned().flatten()))
        } else {
            (alternating(Involution::Phi, order - i), backward[order - i].clone().or_else(|| forward[i].clone()))
        };
        let word_name = word.iter().rev().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
        let (xs, ys) = match pair {
            Some((a, b)) => (Some(a), Some(b)),
            None => (None, None),
        };
        let name = |s: &Option<LaurentSeries>, which: &str| {
            s.as_ref()
                .and_then(|s| recognize(s, roots))
                .unwrap_or_else(|| format!("{which}[{}]", if word_name.is_empty() { "id" } else { &word_name }))
        };
        let label = (name(&xs, "x"), name(&ys, "y"));
        let certificate = match (&xs, &ys) {
            (Some(a), Some(b)) => Some(verify_substitutability(table, (a.valuation_bound(), b.valuation_bound()))),
            _ => None,
        };
        out.push(OrbitElement { word, x: xs, y: ys, label, certificate });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{build_kernel, kernel_roots};
    use crate::walks::{count_walks, StepModel};

    #[test]
    fn group_orders() {
        let cases = [("gessel", 8), ("kreweras", 6), ("square", 4), ("weighted:1", 6), ("g10a", 10), ("g10c", 10)];
        for (name, expected) in cases {
            let k = build_kernel(&StepModel::by_name(name).unwrap()).unwrap();
            assert_eq!(group_order(&k, DEFAULT_GROUP_BOUND).unwrap(), expected, "{name}");
            assert!(verify_involutions(&k).unwrap());
            assert!(verify_kernel_invariance(&k).unwrap());
        }
        // {N, W, SE, S} has an infinite group
        let k = build_kernel(&StepModel::from_compass("inf", &[("N", 1), ("W", 1), ("SE", 1), ("S", 1)])).unwrap();
        assert!(matches!(group_order(&k, DEFAULT_GROUP_BOUND), Err(KernelError::OrbitNotClosed(16))));
    }

    #[test]
    fn gessel_orbit_labels() {
        let k = build_kernel(&StepModel::gessel()).unwrap();
        let roots = kernel_roots(&k, 12).unwrap();
        let table = count_walks(&StepModel::gessel(), 24);
        let orbit = group_orbit(&k, &roots, &table, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(orbit.len(), 8);
        let mut good: Vec<String> = orbit.iter().filter(|e| e.substitutable()).map(|e| e.pair()).collect();
        good.sort();
        assert_eq!(good, vec!["(x*Y0, Y1)", "(x*Y0, x^2*Y1)", "(x, Y0)", "(x^-1, x^2*Y0)"]);
    }
}
