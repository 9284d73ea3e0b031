use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::{var_names, BinaryForm, MultiPoly};
use crate::ring::{ExactDiv, Ring};

/// Determinant by fraction-free elimination.
pub fn bareiss_det<R: ExactDiv>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one_elt();
    }
    let mut sign_flip = false;
    let mut prev = R::one_elt();
    for k in 0..n - 1 {
        if m[k][k].is_zero_elt() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero_elt()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_flip = !sign_flip;
                }
                None => return R::zero_elt(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .mul_ref(&m[k][k])
                    .sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = v.div_exact(&prev).expect("Bareiss division must be exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg_ref()
    } else {
        d
    }
}

/// Sylvester resultant of two binary forms.
pub fn resultant<R: ExactDiv>(f: &BinaryForm<R>, g: &BinaryForm<R>) -> R {
    let (m, n) = (f.degree(), g.degree());
    let size = m + n;
    if size == 0 {
        return R::one_elt();
    }
    let mut rows = Vec::with_capacity(size);
    for s in 0..n {
        let mut r = vec![R::zero_elt(); size];
        for (i, c) in f.coeffs().iter().enumerate() {
            r[s + i] = c.clone();
        }
        rows.push(r);
    }
    for s in 0..m {
        let mut r = vec![R::zero_elt(); size];
        for (i, c) in g.coeffs().iter().enumerate() {
            r[s + i] = c.clone();
        }
        rows.push(r);
    }
    bareiss_det(rows)
}

fn partials<R: Ring>(f: &BinaryForm<R>) -> (BinaryForm<R>, BinaryForm<R>) {
    let n = f.degree();
    let fx = (0..n)
        .map(|i| f.coeff(i).scale_int(&BigInt::from(n - i)))
        .collect();
    let fz = (1..=n).map(|i| f.coeff(i).scale_int(&BigInt::from(i))).collect();
    (BinaryForm::new(fx), BinaryForm::new(fz))
}

/// Signed content of the universal `Res(f_x, f_z)` in degree `n`.
pub fn discriminant_scale(n: usize) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<usize, BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(k) = cache.lock().unwrap().get(&n) {
        return k.clone();
    }
    let vars = var_names("a", n + 1);
    let f = BinaryForm::new((0..=n).map(|i| MultiPoly::<BigInt>::var(&vars, i)).collect());
    let (fx, fz) = partials(&f);
    let k = resultant(&fx, &fz).content().expect("universal resultant is nonzero");
    cache.lock().unwrap().insert(n, k.clone());
    k
}

/// Integer-primitive discriminant, positively lex-leading in the
/// coefficients; vanishes exactly on forms with a repeated root.
pub fn discriminant<R: ExactDiv>(f: &BinaryForm<R>) -> R {
    let n = f.degree();
    assert!(n >= 2, "discriminant needs degree at least 2");
    let (fx, fz) = partials(f);
    let res = resultant(&fx, &fz);
    res.div_exact(&R::from_bigint(&discriminant_scale(n)))
        .expect("resultant is divisible by its universal content")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[i64]) -> BinaryForm<BigInt> {
        BinaryForm::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn quadratic_discriminant() {
        assert_ne!(discriminant(&f(&[1, 0, -1])), BigInt::from(0));
        assert_eq!(discriminant(&f(&[1, -2, 1])), BigInt::from(0));
        // leading term a0*a2 positive: 4 a0 a2 - a1^2
        assert_eq!(discriminant(&f(&[1, 3, 1])), BigInt::from(4 - 9));
    }

    #[test]
    fn universal_scale_is_power_of_degree() {
        for n in 2..=5usize {
            let k = discriminant_scale(n);
            assert_eq!(k.magnitude(), BigInt::from(n).pow(n as u32 - 2).magnitude());
        }
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(3)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(-5));
    }
}
