//! Transvectants of binary forms, without binomial scaling of coefficients.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyalg::BinaryForm;
use crate::ring::Ring;

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).map(|i| BigInt::from(n - i)).product()
}

fn binomial(n: usize, k: usize) -> BigInt {
    falling(n, k) / falling(k, k)
}

/// `d^r g / dx^p dz^(r-p)` for every `p` in `0..=r`, indexed by the number
/// of `z` derivatives.
fn mixed_partials<R: Ring>(g: &BinaryForm<R>, r: usize) -> Vec<BinaryForm<R>> {
    let m = g.degree();
    (0..=r)
        .map(|q| {
            let p = r - q;
            let coeffs = (0..=m - r)
                .map(|j| {
                    let src = j + q;
                    let k = falling(m - src, p) * falling(src, q);
                    g.coeff(src).scale_int(&k)
                })
                .collect();
            BinaryForm::new(coeffs)
        })
        .collect()
}

/// The `r`-th transvectant
/// `sum_i (-1)^i C(r,i) d^r g/dx^(r-i)dz^i * d^r h/dx^i dz^(r-i)`.
pub fn transvectant<R: Ring>(g: &BinaryForm<R>, h: &BinaryForm<R>, r: usize) -> Result<BinaryForm<R>> {
    if r > g.degree() || r > h.degree() {
        return Err(Error::Domain(format!(
            "transvectant order {r} exceeds degrees ({}, {})",
            g.degree(),
            h.degree()
        )));
    }
    let dg = mixed_partials(g, r);
    let dh = if std::ptr::eq(g, h) {
        dg.clone()
    } else {
        mixed_partials(h, r)
    };
    let mut out = BinaryForm::zero(g.degree() + h.degree() - 2 * r);
    for i in 0..=r {
        // g differentiated i times in z, h differentiated r-i times in z
        let mut term = dg[i].mul(&dh[r - i]);
        let mut c = binomial(r, i);
        if i % 2 == 1 {
            c = -c;
        }
        term = term.map(|x| x.scale_int(&c));
        out = out.add(&term);
    }
    Ok(out)
}

/// `f^k`.
pub fn form_power<R: Ring>(f: &BinaryForm<R>, k: u32) -> BinaryForm<R> {
    f.pow(k)
}
