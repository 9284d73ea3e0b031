//! Quintic invariants `I4, I8, I12, I18, Delta, H` and (4,1)-invariants
//! `j2, j3, j5, j6, j9`: universal polynomials, specialised values and
//! their valuations.

pub mod cache;
pub mod eval;
pub mod identities;
pub mod recipes;
mod standard;
mod tropical;
pub mod universal;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use cache::universal;
pub use eval::ClearedPoint;
pub use standard::{standard_position, standard_position_with, StandardPosition};
pub use tropical::{tropicalize, TropicalPoint};

use crate::error::{Error, Result};
use crate::numkernel::{val_p, Rational, RatFunc, Valuation};
use crate::polyalg::{BinaryForm, FourOneForm};
use crate::ring::{Field, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuinticInv {
    I4,
    I8,
    I12,
    I18,
    Delta,
    H,
}

impl QuinticInv {
    pub const ALL: [QuinticInv; 6] = [Self::I4, Self::I8, Self::I12, Self::I18, Self::Delta, Self::H];

    pub fn degree(self) -> u32 {
        match self {
            Self::I4 => 4,
            Self::I8 | Self::Delta => 8,
            Self::I12 | Self::H => 12,
            Self::I18 => 18,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::I4 => "I4",
            Self::I8 => "I8",
            Self::I12 => "I12",
            Self::I18 => "I18",
            Self::Delta => "Delta",
            Self::H => "H",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourOneInv {
    J2,
    J3,
    J5,
    J6,
    J9,
}

impl FourOneInv {
    pub const ALL: [FourOneInv; 5] = [Self::J2, Self::J3, Self::J5, Self::J6, Self::J9];

    pub fn degree(self) -> u32 {
        let (q, l) = self.bidegree();
        q + l
    }

    /// Degrees in the coefficients of `q` and of `l`.
    pub fn bidegree(self) -> (u32, u32) {
        match self {
            Self::J2 => (2, 0),
            Self::J3 => (3, 0),
            Self::J5 => (1, 4),
            Self::J6 => (2, 4),
            Self::J9 => (3, 6),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::J2 => "j2",
            Self::J3 => "j3",
            Self::J5 => "j5",
            Self::J6 => "j6",
            Self::J9 => "j9",
        }
    }
}

/// Where valuations come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backend {
    /// `Q(t)` with the `t`-adic valuation; residue characteristic 0.
    TAdic,
    /// `Q` with the `p`-adic valuation.
    PAdic(u64),
}

impl Backend {
    pub fn residue_characteristic(self) -> u64 {
        match self {
            Backend::TAdic => 0,
            Backend::PAdic(p) => p,
        }
    }
}

/// Valuations (and residues, for the `t`-adic backend) of a list of
/// invariants at one form.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialized {
    pub names: Vec<&'static str>,
    pub degrees: Vec<u32>,
    pub valuations: Vec<Valuation>,
    pub residues: Vec<Option<Rational>>,
}

impl Specialized {
    pub fn get(&self, name: &str) -> Option<&Valuation> {
        self.names.iter().position(|n| *n == name).map(|i| &self.valuations[i])
    }

    /// Adds `shift(i)` to every finite valuation.
    pub fn shifted(&self, shift: impl Fn(usize) -> Rational) -> Specialized {
        let mut s = self.clone();
        for (i, v) in s.valuations.iter_mut().enumerate() {
            *v = v.shift(&shift(i));
        }
        s
    }
}

fn constants_only(coeffs: &[RatFunc]) -> Result<Vec<Rational>> {
    coeffs
        .iter()
        .map(|c| {
            c.as_constant()
                .ok_or_else(|| Error::Usage("the p-adic backend accepts rational numbers only, not t".into()))
        })
        .collect()
}

fn specialize(
    polys: &[&universal::UniversalPoly],
    names: Vec<&'static str>,
    coeffs: &[RatFunc],
    backend: Backend,
) -> Result<Specialized> {
    let pt = ClearedPoint::new(coeffs);
    let degrees: Vec<u32> = polys.iter().map(|u| u.degree).collect();
    let (valuations, residues) = match backend {
        Backend::TAdic => polys
            .iter()
            .map(|u| eval::valuation_at(&u.primitive, u.degree, &pt))
            .unzip(),
        Backend::PAdic(p) => {
            constants_only(coeffs)?;
            polys
                .iter()
                .map(|u| {
                    let v = eval::value_at(&u.primitive, u.degree, &pt)
                        .as_constant()
                        .expect("constant input gives constant invariants");
                    (val_p(&v, p), None)
                })
                .unzip()
        }
    };
    Ok(Specialized {
        names,
        degrees,
        valuations,
        residues,
    })
}

/// Valuations of the primitive `I4, I8, I12, I18, Delta, H` of a quintic.
pub fn quintic_valuations(f: &BinaryForm<RatFunc>, backend: Backend) -> Result<Specialized> {
    if f.degree() != 5 {
        return Err(Error::Domain(format!("quintic expected, got degree {}", f.degree())));
    }
    let u = universal()?;
    let polys: Vec<_> = QuinticInv::ALL.iter().map(|&i| u.quintic(i)).collect();
    specialize(&polys, QuinticInv::ALL.iter().map(|i| i.name()).collect(), f.coeffs(), backend)
}

fn fourone_coeffs(g: &FourOneForm<RatFunc>) -> Vec<RatFunc> {
    g.q.coeffs().iter().chain(g.ell.coeffs()).cloned().collect()
}

/// Valuations of the primitive `j2, j3, j5, j6, j9` of a (4,1)-form.
pub fn fourone_valuations(g: &FourOneForm<RatFunc>, backend: Backend) -> Result<Specialized> {
    let u = universal()?;
    let polys: Vec<_> = FourOneInv::ALL.iter().map(|&j| u.fourone(j)).collect();
    specialize(&polys, FourOneInv::ALL.iter().map(|j| j.name()).collect(), &fourone_coeffs(g), backend)
}

/// Exact primitive `I4, I8, I12, I18, Delta, H` from the universal table.
pub fn evaluate_quintic(f: &BinaryForm<RatFunc>) -> Result<Vec<RatFunc>> {
    let u = universal()?;
    let pt = ClearedPoint::new(f.coeffs());
    Ok(QuinticInv::ALL
        .iter()
        .map(|&i| eval::value_at(&u.quintic(i).primitive, i.degree(), &pt))
        .collect())
}

/// Exact primitive `j2, j3, j5, j6, j9`; rejects forms with a repeated root.
pub fn evaluate_fourone(g: &FourOneForm<RatFunc>) -> Result<Vec<RatFunc>> {
    check_separable(g)?;
    let u = universal()?;
    let pt = ClearedPoint::new(&fourone_coeffs(g));
    Ok(FourOneInv::ALL
        .iter()
        .map(|&j| eval::value_at(&u.fourone(j).primitive, j.degree(), &pt))
        .collect())
}

fn unscale(x: &RatFunc, scale: &Rational) -> RatFunc {
    x.mul_ref(&RatFunc::from_rational(&scale.recip()))
}

/// Same values as [`evaluate_quintic`], computed by running the
/// transvectant recipes on the specialised form.
pub fn evaluate_quintic_direct(f: &BinaryForm<RatFunc>) -> Result<Vec<RatFunc>> {
    let u = universal()?;
    let [i4, i8, i12, i18] = recipes::quintic_raw(f)?;
    let k = |r: &Rational| RatFunc::from_rational(r);
    let delta = k(&universal::c0()).mul_ref(&i4.mul_ref(&i4)).add_ref(&k(&universal::c1()).mul_ref(&i8));
    let a = universal::alpha();
    let h = k(&universal::beta())
        .mul_ref(&i12)
        .sub_ref(&k(&(Rational::from_integer(BigInt::from(396)) * &a * &a * &a)).mul_ref(&i4.pow_ref(3)));
    let raw = [i4, i8, i12, i18, delta, h];
    Ok(QuinticInv::ALL
        .iter()
        .zip(raw.iter())
        .map(|(&i, x)| unscale(x, &u.quintic(i).scale))
        .collect())
}

/// Same values as [`evaluate_fourone`] via the transvectant recipes.
pub fn evaluate_fourone_direct(g: &FourOneForm<RatFunc>) -> Result<Vec<RatFunc>> {
    check_separable(g)?;
    let u = universal()?;
    let raw = recipes::fourone_raw(g)?;
    Ok(FourOneInv::ALL
        .iter()
        .zip(raw.iter())
        .map(|(&j, x)| unscale(x, &u.fourone(j).scale))
        .collect())
}

fn delta_vanishes(f: &BinaryForm<RatFunc>) -> Result<bool> {
    let u = universal()?.quintic(QuinticInv::Delta);
    let pt = ClearedPoint::new(f.coeffs());
    Ok(eval::valuation_at(&u.primitive, u.degree, &pt).0.is_inf())
}

/// Rejects `(q, l)` unless `q * l` has five distinct roots.
pub fn check_separable(g: &FourOneForm<RatFunc>) -> Result<()> {
    if g.ell.is_zero() {
        return Err(Error::NonSeparable("l is identically zero".into()));
    }
    if g.q.is_zero() {
        return Err(Error::NonSeparable("q is identically zero".into()));
    }
    if !delta_vanishes(&g.product())? {
        return Ok(());
    }
    let root = (g.ell.coeff(1).neg_ref(), g.ell.coeff(0).clone());
    if g.q.eval(&root.0, &root.1).is_zero() {
        return Err(Error::NonSeparable("the root of l is also a root of q".into()));
    }
    Err(Error::NonSeparable("q has a repeated root".into()))
}

/// Rejects quintics with a repeated root.
pub fn check_separable_quintic(f: &BinaryForm<RatFunc>) -> Result<()> {
    if f.degree() != 5 {
        return Err(Error::Domain(format!("quintic expected, got degree {}", f.degree())));
    }
    if f.is_zero() || delta_vanishes(f)? {
        return Err(Error::NonSeparable("the quintic has a repeated root (discriminant vanishes)".into()));
    }
    Ok(())
}
