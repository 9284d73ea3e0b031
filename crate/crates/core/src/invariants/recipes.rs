//! Transvectant recipes for the invariants, generic over the coefficient
//! ring so the same code yields universal polynomials and specialised
//! values.

use crate::error::Result;
use crate::polyalg::{BinaryForm, FourOneForm};
use crate::ring::Ring;
use crate::transvect::transvectant;

/// Unscaled `(I4, I8, I12, I18)` of a quintic.
pub fn quintic_raw<R: Ring>(f: &BinaryForm<R>) -> Result<[R; 4]> {
    assert_eq!(f.degree(), 5, "quintic expected");
    let f2 = f.mul(f);
    let f4 = f2.mul(&f2);
    let f5 = f4.mul(f);
    let f6 = f4.mul(&f2);
    let f7 = f6.mul(f);
    let i4 = transvectant(&f2, &f2, 10)?.scalar().clone();
    let i8 = transvectant(&f4, &f4, 20)?.scalar().clone();
    let i12 = transvectant(&f6, &f6, 30)?.scalar().clone();
    let inner = transvectant(&f5, &f6, 10)?;
    let i18 = transvectant(&inner, &f7, 35)?.scalar().clone();
    Ok([i4, i8, i12, i18])
}

/// Unscaled `(j2, j3, j5, j6, j9)` of a (4,1)-form.
pub fn fourone_raw<R: Ring>(g: &FourOneForm<R>) -> Result<[R; 5]> {
    let q = &g.q;
    let l4 = g.ell.pow(4);
    let l6 = g.ell.pow(6);
    let qq2 = transvectant(q, q, 2)?;
    let j2 = transvectant(q, q, 4)?.scalar().clone();
    let j3 = transvectant(&qq2, q, 4)?.scalar().clone();
    let j5 = transvectant(q, &l4, 4)?.scalar().clone();
    let j6 = transvectant(&qq2, &l4, 4)?.scalar().clone();
    let inner = transvectant(q, &qq2, 1)?;
    let j9 = transvectant(&inner, &l6, 6)?.scalar().clone();
    Ok([j2, j3, j5, j6, j9])
}
