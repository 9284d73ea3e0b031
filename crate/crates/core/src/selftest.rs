//! Built-in consistency checks run by `tropinv selftest`.
//!
//! A check either passes, fails, or is a known deviation (`xfail`): the
//! reference constant differs from the computed one, and the computed one
//! matches what was measured when the deviation was recorded. A known
//! deviation whose measurement changes is reported as a failure.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::invariants::cache::{cache_dir, embedded, serialize, CACHE_FILE};
use crate::invariants::identities::{reference_expression, express_in_js, proportionality, JExpression, JMonomial, Normalization};
use crate::invariants::universal::{compute_universal, delta_unscaled, quintic_unscaled, universal_quintic};
use crate::invariants::{
    evaluate_fourone, evaluate_fourone_direct, evaluate_quintic, evaluate_quintic_direct, universal, QuinticInv,
};
use crate::numkernel::{fmt_rational, int, rat, RatFunc, Rational, UniPoly};
use crate::polyalg::{discriminant, var_names, BinaryForm, FourOneForm, Mobius, MultiPoly};
use crate::ring::Ring;
use crate::transvect::transvectant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Xfail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Xfail => "XFAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!("{:<5} {:<28} {:>6} ms  {}\n", c.status.label(), c.name, c.millis, c.detail));
        }
        s
    }
}

fn timed(name: &str, f: impl FnOnce() -> Result<(Status, String)>) -> Check {
    let t = Instant::now();
    let (status, detail) = f().unwrap_or_else(|e| (Status::Fail, e.to_string()));
    Check {
        name: name.into(),
        status,
        detail,
        millis: t.elapsed().as_millis(),
    }
}

fn pass_if(ok: bool, detail: String) -> (Status, String) {
    (if ok { Status::Pass } else { Status::Fail }, detail)
}

fn check_universal() -> Result<(Status, String)> {
    let fresh = compute_universal()?;
    let pinned = embedded()?;
    let live = universal()?;
    let ok = fresh == pinned && *live == pinned;
    let terms: usize = fresh.quintic.iter().chain(&fresh.fourone).map(|u| u.primitive.len()).sum();
    let mut detail = format!("11 polynomials, {terms} terms, recomputed = pinned = loaded: {ok}");
    if let Some(dir) = cache_dir() {
        let path = dir.join(CACHE_FILE);
        let text = serialize(&fresh);
        if std::fs::read_to_string(&path).ok().as_deref() != Some(text.as_str()) {
            std::fs::create_dir_all(&dir)?;
            std::fs::write(&path, text)?;
            detail.push_str(&format!("; rewrote {}", path.display()));
        }
    }
    Ok(pass_if(ok, detail))
}

/// `c0 I4^2 + c1 I8` against the primitive discriminant; returns the ratio.
pub fn discriminant_ratio() -> Result<Rational> {
    let [i4, i8, _, _] = quintic_unscaled()?;
    let delta = delta_unscaled(&i4, &i8);
    let disc = discriminant(&universal_quintic()).to_rational();
    let (lead_d, lead_q) = (&disc.leading().expect("nonzero").1, &delta.leading().expect("nonzero").1);
    let k = lead_q / lead_d;
    if delta != disc.scale(&k) {
        return Err(crate::Error::Internal("Delta is not a multiple of the discriminant".into()));
    }
    Ok(k)
}

fn check_discriminant() -> Result<(Status, String)> {
    let k = discriminant_ratio()?;
    Ok(pass_if(k.is_one(), format!("Delta / disc = {}", fmt_rational(&k))))
}

/// `H(0, 0, 1, 0, a4, a5)` over the discriminant of `x^3 + a4 x + a5`,
/// `-4 a4^3 - 27 a5^2`.
pub fn h_cubic_constant() -> Result<Rational> {
    let h = universal()?.quintic(QuinticInv::H).unscaled();
    let v = var_names("a", 2);
    let (a4, a5) = (MultiPoly::<Rational>::var(&v, 0), MultiPoly::var(&v, 1));
    let c = |x: i64| MultiPoly::constant_in(&v, int(x));
    let pt = [c(0), c(0), c(1), c(0), a4.clone(), a5.clone()];
    let got = h.evaluate(&pt, |k| MultiPoly::constant_in(&v, k.clone()));
    let disc = a4.pow_ref(3).scale(&int(-4)).add_ref(&a5.mul_ref(&a5).scale(&int(-27)));
    let k = &got.leading().expect("nonzero").1 / &disc.leading().expect("nonzero").1;
    if got != disc.scale(&k) {
        return Err(crate::Error::Internal("H does not restrict to a multiple of the cubic discriminant".into()));
    }
    Ok(k)
}

pub const H_CUBIC_MEASURED: i64 = -1;

fn check_h_cubic() -> Result<(Status, String)> {
    let k = h_cubic_constant()?;
    let detail = format!("H(0,0,1,0,a4,a5) = {} * disc(x^3 + a4 x + a5)", fmt_rational(&k));
    Ok(if k.is_one() {
        (Status::Pass, detail)
    } else if k == int(H_CUBIC_MEASURED) {
        (Status::Xfail, format!("{detail}; reference constant is 1"))
    } else {
        (Status::Fail, detail)
    })
}

/// Monomials whose fitted and reference coefficients differ.
pub fn differences(fitted: &JExpression, shown: &JExpression) -> Vec<(JMonomial, Rational, Rational)> {
    let mut mons: Vec<JMonomial> = fitted.terms.iter().chain(&shown.terms).map(|t| t.0).collect();
    mons.sort();
    mons.dedup();
    mons.into_iter()
        .filter_map(|m| {
            let (a, b) = (fitted.coefficient(&m), shown.coefficient(&m));
            (a != b).then_some((m, a, b))
        })
        .collect()
}

/// The recorded deviations: `(monomial, fitted, reference)`.
pub fn known_identity_deviation(inv: QuinticInv) -> Vec<(JMonomial, Rational, Rational)> {
    match inv {
        QuinticInv::I4 => vec![([0, 1, 1, 0, 0], rat(-1, 3), rat(-1, 2))],
        QuinticInv::I12 => vec![([3, 1, 3, 0, 0], rat(-7156, 243), rat(7156, 243))],
        _ => vec![],
    }
}

fn fmt_mon(m: &JMonomial) -> String {
    let names = ["j2", "j3", "j5", "j6", "j9"];
    let parts: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    parts.join("*")
}

fn check_identity(inv: QuinticInv) -> Result<(Status, String)> {
    let fitted = express_in_js(inv, Normalization::Primitive, 1)?;
    let shown = reference_expression(inv);
    let diffs = differences(&fitted, &shown);
    if proportionality(&fitted, &shown).is_some_and(|k| k.is_one()) {
        return Ok((Status::Pass, format!("{} terms agree", shown.terms.len())));
    }
    let detail = diffs
        .iter()
        .map(|(m, a, b)| format!("{}: fitted {} reference {}", fmt_mon(m), fmt_rational(a), fmt_rational(b)))
        .collect::<Vec<_>>()
        .join("; ");
    let status = if diffs == known_identity_deviation(inv) {
        Status::Xfail
    } else {
        Status::Fail
    };
    Ok((status, detail))
}

fn random_form(rng: &mut ChaCha8Rng, d: usize) -> BinaryForm<BigInt> {
    BinaryForm::new((0..=d).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect())
}

/// A product of elementary unimodular matrices.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> Mobius<BigInt> {
    let mut m = Mobius::identity();
    for _ in 0..4 {
        let k = BigInt::from(rng.gen_range(-3i64..=3));
        let e = if rng.gen_bool(0.5) {
            Mobius::new(BigInt::one(), k, BigInt::zero(), BigInt::one())
        } else {
            Mobius::new(BigInt::one(), BigInt::zero(), k, BigInt::one())
        };
        m = m.compose(&e.expect("unimodular"));
    }
    m
}

/// `(f.s, g.s)_r = (f, g)_r . s` for `count` random `s` in `SL2(Z)` and
/// forms of degree at most 6; returns the number that held.
pub fn transvectant_equivariance(count: usize, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut held = 0;
    for _ in 0..count {
        let s = random_sl2(&mut rng);
        let (m, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let r = rng.gen_range(0..=m.min(n));
        let (f, g) = (random_form(&mut rng, m), random_form(&mut rng, n));
        let lhs = transvectant(&f.act(&s), &g.act(&s), r)?;
        let rhs = transvectant(&f, &g, r)?.act(&s);
        held += (lhs == rhs) as usize;
    }
    Ok(held)
}

fn random_ratfunc(rng: &mut ChaCha8Rng) -> RatFunc {
    let c: Vec<Rational> = (0..3).map(|_| int(rng.gen_range(-4i64..=4))).collect();
    RatFunc::from_poly(UniPoly::from_coeffs(c))
}

/// Table evaluation against running the recipes on the specialised form,
/// for `count` random forms with coefficients in `Q[t]`.
pub fn evaluation_paths_agree(count: usize, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut held = 0;
    for _ in 0..count {
        let f = BinaryForm::new((0..6).map(|_| random_ratfunc(&mut rng)).collect());
        let q = BinaryForm::new((0..5).map(|_| random_ratfunc(&mut rng)).collect());
        let l = BinaryForm::new((0..2).map(|_| random_ratfunc(&mut rng)).collect());
        let g = FourOneForm::new(q, l)?;
        let quintic = evaluate_quintic(&f)? == evaluate_quintic_direct(&f)?;
        let fourone = match (evaluate_fourone(&g), evaluate_fourone_direct(&g)) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        };
        held += (quintic && fourone) as usize;
    }
    Ok(held)
}

fn check_evaluation_paths() -> Result<(Status, String)> {
    let held = evaluation_paths_agree(4, 2)?;
    Ok(pass_if(held == 4, format!("{held}/4 quintics and (4,1)-forms over Q[t]")))
}

fn check_equivariance() -> Result<(Status, String)> {
    let held = transvectant_equivariance(20, 1)?;
    Ok(pass_if(held == 20, format!("{held}/20 substitutions in SL2(Z), degrees <= 6")))
}

pub fn run() -> SelftestReport {
    let mut checks = vec![
        timed("universal-table", check_universal),
        timed("discriminant-identity", check_discriminant),
        timed("h-cubic-discriminant", check_h_cubic),
    ];
    for inv in [QuinticInv::I4, QuinticInv::I8, QuinticInv::I12, QuinticInv::I18] {
        checks.push(timed(&format!("j-identity-{}", inv.name()), || check_identity(inv)));
    }
    checks.push(timed("evaluation-paths", check_evaluation_paths));
    checks.push(timed("transvectant-equivariance", check_equivariance));
    SelftestReport { checks }
}
