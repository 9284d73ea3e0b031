//! Specialisation of universal integer polynomials at points of `Q(t)`.
//!
//! Coefficients are first brought to a common denominator so the point
//! becomes `(n_0, ..., n_k) / den` with every `n_i` in `Z[t]`. A homogeneous
//! invariant `P` of degree `d` then satisfies `P(a) = P(n) / den^d`, and
//! `P(n)` is computed either in full or only modulo a sliding window of
//! `t`-powers, which is enough for its valuation and leading coefficient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numkernel::{Rational, RatFunc, UniPoly, Valuation};
use crate::polyalg::MultiPoly;
use crate::ring::Ring;

/// A point of `Q(t)^k` written as integer polynomials over a common
/// denominator.
#[derive(Clone, Debug)]
pub struct ClearedPoint {
    pub nums: Vec<Vec<BigInt>>,
    pub den: RatFunc,
}

fn lcm_poly(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let g = UniPoly::gcd(a, b);
    a.mul_ref(b).div_rem(&g).0
}

impl ClearedPoint {
    pub fn new(coeffs: &[RatFunc]) -> Self {
        let mut d = UniPoly::one();
        for c in coeffs {
            if !c.denom().is_one() {
                d = lcm_poly(&d, c.denom());
            }
        }
        let polys: Vec<UniPoly> = coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    c.numer().mul_ref(&d)
                } else {
                    c.numer().mul_ref(&d.div_rem(c.denom()).0)
                }
            })
            .collect();
        let mut l = BigInt::one();
        for p in &polys {
            let (pl, _) = p.to_integer_coeffs();
            l = num_integer::Integer::lcm(&l, &pl);
        }
        let lq = Rational::from_integer(l);
        let nums = polys
            .iter()
            .map(|p| {
                p.coeffs()
                    .iter()
                    .map(|c| (c * &lq).to_integer())
                    .collect()
            })
            .collect();
        ClearedPoint {
            nums,
            den: RatFunc::from_poly(d.scale(&lq)),
        }
    }
}

fn ord(p: &[BigInt]) -> Option<usize> {
    p.iter().position(|c| !c.is_zero())
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], w: usize) -> Vec<BigInt> {
    let n = (a.len() + b.len()).saturating_sub(1).min(w);
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Lowest nonzero coefficient of `P(n)` as `(order, coefficient)`, or
/// `None` when `P(n) = 0`. With `full`, the whole polynomial is returned as
/// well.
fn lowest_term(p: &MultiPoly<BigInt>, nums: &[Vec<BigInt>], full: bool) -> (Option<(usize, BigInt)>, Option<Vec<BigInt>>) {
    let nv = p.vars().len();
    assert!(nums.len() >= nv, "point has too few coordinates");
    let ords: Vec<Option<usize>> = nums.iter().map(|n| ord(n)).collect();
    let units: Vec<&[BigInt]> = nums
        .iter()
        .zip(&ords)
        .map(|(n, o)| match o {
            Some(o) => &n[*o..],
            None => &n[..0],
        })
        .collect();
    // active terms with their lower bound and exact upper degree bound
    let mut active: Vec<(usize, usize, usize)> = Vec::new();
    for (k, (m, _)) in p.terms().iter().enumerate() {
        let mut lo = 0usize;
        let mut hi = 0usize;
        let mut alive = true;
        for i in 0..nv {
            let e = m.exp(i) as usize;
            if e == 0 {
                continue;
            }
            match ords[i] {
                None => {
                    alive = false;
                    break;
                }
                Some(o) => {
                    lo += e * o;
                    hi += e * (o + units[i].len() - 1);
                }
            }
        }
        if alive {
            active.push((k, lo, hi));
        }
    }
    if active.is_empty() {
        return (None, full.then(Vec::new));
    }
    let m0 = active.iter().map(|a| a.1).min().unwrap();
    let upper = active.iter().map(|a| a.2).max().unwrap();
    let maxe: Vec<usize> = (0..nv)
        .map(|i| p.terms().iter().map(|(m, _)| m.exp(i) as usize).max().unwrap_or(0))
        .collect();
    let mut w = if full { upper - m0 + 1 } else { 8 };
    loop {
        let w_eff = w.min(upper - m0 + 1);
        let powers: Vec<Vec<Vec<BigInt>>> = (0..nv)
            .map(|i| {
                let mut v: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
                if ords[i].is_some() {
                    for e in 1..=maxe[i] {
                        let nxt = mul_trunc(&v[e - 1], units[i], w_eff);
                        v.push(nxt);
                    }
                }
                v
            })
            .collect();
        let mut acc = vec![BigInt::zero(); w_eff];
        for &(k, lo, _) in &active {
            if lo >= m0 + w_eff {
                continue;
            }
            let room = m0 + w_eff - lo;
            let (m, c) = &p.terms()[k];
            let mut prod: Vec<BigInt> = vec![c.clone()];
            for (i, pw) in powers.iter().enumerate().take(nv) {
                let e = m.exp(i) as usize;
                if e > 0 {
                    prod = mul_trunc(&prod, &pw[e], room);
                }
            }
            let off = lo - m0;
            for (j, x) in prod.into_iter().enumerate() {
                acc[off + j] += x;
            }
        }
        if let Some(j) = ord(&acc) {
            let lead = (m0 + j, acc[j].clone());
            if full {
                let mut whole = vec![BigInt::zero(); m0];
                whole.extend(acc);
                return (Some(lead), Some(whole));
            }
            return (Some(lead), None);
        }
        if m0 + w_eff > upper {
            return (None, full.then(Vec::new));
        }
        w *= 4;
    }
}

/// Valuation and residue of `P(a)` for a homogeneous `P` of the given
/// degree.
pub fn valuation_at(p: &MultiPoly<BigInt>, degree: u32, pt: &ClearedPoint) -> (Valuation, Option<Rational>) {
    match lowest_term(p, &pt.nums, false).0 {
        None => (Valuation::Inf, None),
        Some((o, c)) => {
            let dv = pt.den.val_t().finite().cloned().expect("nonzero denominator");
            let dres = pt.den.residue().expect("nonzero denominator");
            let d = degree as usize;
            let v = Rational::from_integer(BigInt::from(o)) - dv * Rational::from_integer(BigInt::from(d));
            let r = Rational::from_integer(c) / num_traits::pow(dres, d);
            (Valuation::Finite(v), Some(r))
        }
    }
}

/// Exact value of `P(a)` for a homogeneous `P` of the given degree.
pub fn value_at(p: &MultiPoly<BigInt>, degree: u32, pt: &ClearedPoint) -> RatFunc {
    let (_, whole) = lowest_term(p, &pt.nums, true);
    let coeffs = whole
        .unwrap_or_default()
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    let num = RatFunc::from_poly(UniPoly::from_coeffs(coeffs));
    let den = pt.den.pow_ref(degree);
    num.mul_ref(&crate::ring::Field::inv_ref(&den).expect("nonzero denominator"))
}
