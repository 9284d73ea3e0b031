use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::recipes::{fourone_raw, quintic_raw};
use super::{FourOneInv, QuinticInv};
use crate::error::{Error, Result};
use crate::numkernel::Rational;
use crate::polyalg::{var_names, BinaryForm, FourOneForm, MultiPoly};

/// A universal invariant as `scale * primitive`, where `primitive` has
/// coprime integer coefficients and a positive lex-leading coefficient and
/// `scale * primitive` is the raw transvectant (or reference) expression.
#[derive(Clone, Debug, PartialEq)]
pub struct UniversalPoly {
    pub name: String,
    pub degree: u32,
    pub scale: Rational,
    pub primitive: MultiPoly<BigInt>,
}

impl UniversalPoly {
    fn from_integer(name: &str, degree: u32, raw: &MultiPoly<BigInt>) -> Result<Self> {
        let (c, p) = raw.primitive()?;
        Ok(UniversalPoly {
            name: name.into(),
            degree,
            scale: Rational::from_integer(c),
            primitive: p,
        })
    }

    fn from_rational(name: &str, degree: u32, raw: &MultiPoly<Rational>) -> Result<Self> {
        let (c, p) = raw.primitive()?;
        Ok(UniversalPoly {
            name: name.into(),
            degree,
            scale: c,
            primitive: p,
        })
    }

    pub fn unscaled(&self) -> MultiPoly<Rational> {
        self.primitive.map_coeffs(|c| Rational::from_integer(c.clone()) * &self.scale)
    }
}

/// Every universal invariant, quintic ones in `a0..a5` and (4,1) ones in
/// `b0..b4, c0, c1`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniversalSet {
    pub quintic: Vec<UniversalPoly>,
    pub fourone: Vec<UniversalPoly>,
}

impl UniversalSet {
    pub fn quintic(&self, i: QuinticInv) -> &UniversalPoly {
        &self.quintic[i as usize]
    }

    pub fn fourone(&self, j: FourOneInv) -> &UniversalPoly {
        &self.fourone[j as usize]
    }
}

fn pow_rat(base: i64, e: i32) -> Rational {
    let b = Rational::from_integer(BigInt::from(base));
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

fn product(factors: &[(i64, i32)]) -> Rational {
    factors
        .iter()
        .fold(Rational::one(), |acc, &(p, e)| acc * pow_rat(p, e))
}

/// `alpha` in the reference expression for `H`.
pub fn alpha() -> Rational {
    product(&[(2, -17), (3, -7), (5, -3), (7, -1)])
}

/// `beta` in the reference expression for `H`.
pub fn beta() -> Rational {
    product(&[
        (2, -50),
        (3, -27),
        (5, -14),
        (7, -7),
        (11, -4),
        (13, -3),
        (17, -1),
        (19, -1),
        (23, -1),
        (29, -1),
    ])
}

/// `c0` in `Delta = c0 I4^2 + c1 I8`.
pub fn c0() -> Rational {
    Rational::new(BigInt::from(-1), "2746158938062848000000".parse().unwrap())
}

/// `c1` in `Delta = c0 I4^2 + c1 I8`.
pub fn c1() -> Rational {
    Rational::new(BigInt::one(), "46987474647852089270599680000000".parse().unwrap())
}

pub fn quintic_vars() -> Arc<Vec<String>> {
    var_names("a", 6)
}

pub fn fourone_vars() -> Arc<Vec<String>> {
    Arc::new(
        ["b0", "b1", "b2", "b3", "b4", "c0", "c1"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )
}

/// The universal quintic over `Z[a0..a5]`.
pub fn universal_quintic() -> BinaryForm<MultiPoly<BigInt>> {
    let v = quintic_vars();
    BinaryForm::new((0..6).map(|i| MultiPoly::var(&v, i)).collect())
}

/// The universal (4,1)-form over `Z[b0..b4, c0, c1]`.
pub fn universal_fourone() -> FourOneForm<MultiPoly<BigInt>> {
    let v = fourone_vars();
    let q = BinaryForm::new((0..5).map(|i| MultiPoly::var(&v, i)).collect());
    let l = BinaryForm::new((5..7).map(|i| MultiPoly::var(&v, i)).collect());
    FourOneForm { q, ell: l }
}

/// Raw transvectant outputs `(I4, I8, I12, I18)` as integer polynomials.
pub fn quintic_unscaled() -> Result<[MultiPoly<BigInt>; 4]> {
    quintic_raw(&universal_quintic())
}

pub fn fourone_unscaled() -> Result<[MultiPoly<BigInt>; 5]> {
    fourone_raw(&universal_fourone())
}

fn rational_combination(terms: &[(Rational, MultiPoly<BigInt>)]) -> MultiPoly<Rational> {
    use crate::ring::Ring;
    terms.iter().fold(MultiPoly::zero_elt(), |acc, (k, p)| {
        acc.add_ref(&p.to_rational().scale(k))
    })
}

/// Unscaled `Delta = c0 I4^2 + c1 I8`.
pub fn delta_unscaled(i4: &MultiPoly<BigInt>, i8: &MultiPoly<BigInt>) -> MultiPoly<Rational> {
    use crate::ring::Ring;
    rational_combination(&[(c0(), i4.mul_ref(i4)), (c1(), i8.clone())])
}

/// Unscaled `H = beta I12 - 396 alpha^3 I4^3`.
pub fn h_unscaled(i4: &MultiPoly<BigInt>, i12: &MultiPoly<BigInt>) -> MultiPoly<Rational> {
    use crate::ring::Ring;
    let a = alpha();
    let k = -(Rational::from_integer(BigInt::from(396)) * &a * &a * &a);
    rational_combination(&[(beta(), i12.clone()), (k, i4.mul_ref(i4).mul_ref(i4))])
}

/// Computes every universal invariant from scratch.
pub fn compute_universal() -> Result<UniversalSet> {
    let [i4, i8, i12, i18] = quintic_unscaled()?;
    let delta = delta_unscaled(&i4, &i8);
    let h = h_unscaled(&i4, &i12);
    let quintic = vec![
        UniversalPoly::from_integer("I4", 4, &i4)?,
        UniversalPoly::from_integer("I8", 8, &i8)?,
        UniversalPoly::from_integer("I12", 12, &i12)?,
        UniversalPoly::from_integer("I18", 18, &i18)?,
        UniversalPoly::from_rational("Delta", 8, &delta)?,
        UniversalPoly::from_rational("H", 12, &h)?,
    ];
    let js = fourone_unscaled()?;
    let fourone = FourOneInv::ALL
        .iter()
        .zip(js.iter())
        .map(|(j, p)| UniversalPoly::from_integer(j.name(), j.degree(), p))
        .collect::<Result<Vec<_>>>()?;
    for (u, q) in quintic.iter().zip(QuinticInv::ALL) {
        if u.primitive.homogeneous_degree() != Some(q.degree()) {
            return Err(Error::Internal(format!("{} has the wrong degree", u.name)));
        }
    }
    Ok(UniversalSet { quintic, fourone })
}
