//! Quintic invariants of `q * l` as polynomials in `j2, j3, j5, j6, j9`,
//! recovered by exact interpolation.
//!
//! The candidate monomials are the products of the `j`'s with the right
//! bidegree in `(q, l)` and `j9` to at most the first power (`j9^2` is a
//! polynomial in the others). Coefficients come from solving the linear
//! system at seeded integer points; more points than unknowns are used, so
//! a solution that exists is also checked.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{universal, FourOneInv, QuinticInv};
use crate::error::{Error, Result};
use crate::numkernel::{rat, Rational};
use crate::polyalg::BinaryForm;
use crate::ring::Ring;

/// Exponents of `(j2, j3, j5, j6, j9)`.
pub type JMonomial = [u32; 5];

#[derive(Clone, Debug, PartialEq)]
pub struct JExpression {
    pub invariant: QuinticInv,
    pub terms: Vec<(JMonomial, Rational)>,
}

impl JExpression {
    pub fn coefficient(&self, m: &JMonomial) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn render(&self) -> String {
        let names = ["j2", "j3", "j5", "j6", "j9"];
        let mut s = String::new();
        for (m, c) in &self.terms {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            s.push_str(&crate::numkernel::fmt_rational(c));
            for (k, e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => s.push_str(&format!("*{}", names[k])),
                    _ => s.push_str(&format!("*{}^{}", names[k], e)),
                }
            }
        }
        s
    }
}

/// Which normalisation the invariants on both sides use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Straight from the transvectant recipes.
    Unscaled,
    /// Divided by the signed content.
    Primitive,
}

pub fn j_monomials(d: u32) -> Vec<JMonomial> {
    let bi: Vec<(u32, u32)> = FourOneInv::ALL.iter().map(|j| j.bidegree()).collect();
    let mut out = Vec::new();
    for e9 in 0..=1u32 {
        for e2 in 0..=d / 2 {
            for e3 in 0..=d / 3 {
                for e5 in 0..=d {
                    for e6 in 0..=d / 2 {
                        let e = [e2, e3, e5, e6, e9];
                        let (mut q, mut l) = (0, 0);
                        for (k, x) in e.iter().enumerate() {
                            q += x * bi[k].0;
                            l += x * bi[k].1;
                        }
                        if q == d && l == d {
                            out.push(e);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn scale_of(norm: Normalization, s: &Rational) -> Rational {
    match norm {
        Normalization::Unscaled => s.clone(),
        Normalization::Primitive => Rational::one(),
    }
}

/// Values `(I, [j2, j3, j5, j6, j9])` at one integer point `(b0..b4, c0, c1)`.
fn values_at(inv: QuinticInv, pt: &[BigInt], norm: Normalization) -> Result<(Rational, [Rational; 5])> {
    let u = universal()?;
    let q = BinaryForm::new(pt[..5].to_vec());
    let l = BinaryForm::new(pt[5..].to_vec());
    let f = q.mul(&l);
    let ui = u.quintic(inv);
    let iv = Rational::from_integer(ui.primitive.evaluate(f.coeffs(), |c| c.clone())) * scale_of(norm, &ui.scale);
    let js = FourOneInv::ALL.map(|j| {
        let uj = u.fourone(j);
        Rational::from_integer(uj.primitive.evaluate(pt, |c| c.clone())) * scale_of(norm, &uj.scale)
    });
    Ok((iv, js))
}

/// Solves `A x = b` exactly; `None` when inconsistent or underdetermined.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let (rows, cols) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..cols {
                    let d = &f * &a[r][k];
                    a[i][k] -= d;
                }
                let d = &f * &b[r];
                b[i] -= d;
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    if piv_cols.len() < cols || b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in piv_cols.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

/// `inv(q * l)` as a polynomial in the `j`'s, both sides in the given
/// normalisation.
pub fn express_in_js(inv: QuinticInv, norm: Normalization, seed: u64) -> Result<JExpression> {
    if matches!(inv, QuinticInv::Delta | QuinticInv::H) {
        return Err(Error::Usage("only I4, I8, I12 and I18 are fitted".into()));
    }
    let mons = j_monomials(inv.degree());
    let n = mons.len() + 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for _ in 0..n {
        let pt: Vec<BigInt> = (0..7).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
        let (iv, js) = values_at(inv, &pt, norm)?;
        let row = mons
            .iter()
            .map(|m| {
                let mut v = Rational::one();
                for (k, e) in m.iter().enumerate() {
                    v *= js[k].pow_ref(*e);
                }
                v
            })
            .collect();
        a.push(row);
        b.push(iv);
    }
    let x = solve(a, b).ok_or_else(|| Error::Internal(format!("{} is not a polynomial in the j's", inv.name())))?;
    let terms = mons
        .into_iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(JExpression { invariant: inv, terms })
}

/// Reference expressions in the j's.
pub fn reference_expression(inv: QuinticInv) -> JExpression {
    let t = |e: JMonomial, n: i64, d: i64| (e, rat(n, d));
    let terms = match inv {
        QuinticInv::I4 => vec![t([1, 0, 0, 1, 0], 2, 3), t([0, 1, 1, 0, 0], -1, 2)],
        QuinticInv::I8 => vec![
            t([2, 0, 0, 2, 0], 14, 9),
            t([3, 0, 2, 0, 0], 22, 27),
            t([0, 2, 2, 0, 0], 5, 27),
            t([1, 1, 1, 1, 0], -14, 9),
        ],
        QuinticInv::I12 => vec![
            t([3, 0, 0, 3, 0], 4400, 243),
            t([0, 2, 0, 3, 0], -11, 243),
            t([2, 1, 1, 2, 0], -242, 9),
            t([4, 0, 2, 1, 0], 2479, 81),
            t([1, 2, 2, 1, 0], 692, 81),
            t([3, 1, 3, 0, 0], 7156, 243),
            t([0, 3, 3, 0, 0], -92, 243),
        ],
        QuinticInv::I18 => vec![
            t([6, 0, 3, 0, 1], -625, 729),
            t([3, 2, 3, 0, 1], -512, 729),
            t([3, 1, 0, 3, 1], -4, 729),
            t([0, 3, 0, 3, 1], 1, 729),
            t([4, 1, 2, 1, 1], 1, 3),
            t([5, 0, 1, 2, 1], 4, 243),
            t([2, 2, 1, 2, 1], -1, 243),
        ],
        QuinticInv::Delta | QuinticInv::H => vec![],
    };
    let mut terms = terms;
    terms.sort_by_key(|a| a.0);
    JExpression { invariant: inv, terms }
}

/// The single constant `k` with `fitted = k * reference`, if there is one.
pub fn proportionality(fitted: &JExpression, shown: &JExpression) -> Option<Rational> {
    let mut k: Option<Rational> = None;
    let mons: Vec<&JMonomial> = fitted.terms.iter().map(|t| &t.0).chain(shown.terms.iter().map(|t| &t.0)).collect();
    for m in mons {
        let (a, b) = (fitted.coefficient(m), shown.coefficient(m));
        if b.is_zero() {
            if !a.is_zero() {
                return None;
            }
            continue;
        }
        let r = a / b;
        match &k {
            None => k = Some(r),
            Some(k0) if *k0 != r => return None,
            _ => {}
        }
    }
    k
}
