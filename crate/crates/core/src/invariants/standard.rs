//! Normal form for (4,1)-forms: `l = z`, `q` monic and centred, and the
//! four roots of `q` spread at unit scale.
//!
//! The marked refinements read valuations of `j2` and `j5` that are not
//! invariant under rescaling, so they are evaluated at this normal form.
//! The last rescaling `x -> t^m x` may need a fractional power of `t`; it is
//! applied to valuations instead of to the form.

use num_bigint::BigInt;

use super::FourOneInv;
use crate::error::{Error, Result};
use crate::numkernel::{Rational, RatFunc, Valuation};
use crate::polyalg::{BinaryForm, FourOneForm, Mobius};
use crate::ring::{Field, Ring};

#[derive(Clone, Debug)]
pub struct StandardPosition {
    /// Monic centred `q` with `l = z`.
    pub form: FourOneForm<RatFunc>,
    /// Minimum valuation of the centred roots of `q`.
    pub m: Rational,
}

impl StandardPosition {
    /// Valuation correction for a (4,1)-invariant after rescaling the roots
    /// by `t^(-m)`.
    pub fn fourone_shift(&self, j: FourOneInv) -> Rational {
        let (dq, dl) = j.bidegree();
        &self.m * (Rational::new(BigInt::from(dl), BigInt::from(2)) - Rational::from_integer(BigInt::from(2 * dq)))
    }

    /// Valuation correction for a quintic invariant of `q * z`.
    pub fn quintic_shift(&self, degree: u32) -> Rational {
        -(&self.m * Rational::new(BigInt::from(3 * degree), BigInt::from(2)))
    }
}

pub fn standard_position(g: &FourOneForm<RatFunc>) -> Result<StandardPosition> {
    standard_position_with(g, |x| x.val_t())
}

/// Standard position with `m` measured by an arbitrary valuation.
pub fn standard_position_with(g: &FourOneForm<RatFunc>, val: impl Fn(&RatFunc) -> Valuation) -> Result<StandardPosition> {
    super::check_separable(g)?;
    let (c0, c1) = (g.ell.coeff(0).clone(), g.ell.coeff(1).clone());
    // move the root of l to infinity
    let moved = if c0.is_zero() {
        g.clone()
    } else {
        let s = Mobius::new(c1.neg_ref(), RatFunc::one().neg_ref(), c0.clone(), RatFunc::zero())?;
        g.act(&s)
    };
    let b0 = moved.q.coeff(0).clone();
    let inv = |x: &RatFunc| x.inv_ref().ok_or_else(|| Error::Internal("unexpected zero in normalisation".into()));
    let q = moved.q.scale(&inv(&b0)?);
    // centre: x -> x - (b1/4) z
    let shift = q.coeff(1).mul_ref(&RatFunc::from_rational(&Rational::new((-1).into(), 4.into())));
    let centre = Mobius::new(RatFunc::one(), shift, RatFunc::zero(), RatFunc::one())?;
    let q = q.act(&centre);
    debug_assert!(q.coeff(1).is_zero());
    let mut m: Option<Rational> = None;
    for i in 2..=4usize {
        if let Some(v) = val(q.coeff(i)).finite() {
            let r = v / Rational::from_integer(BigInt::from(i));
            m = Some(match m {
                Some(old) if old <= r => old,
                _ => r,
            });
        }
    }
    let m = m.ok_or_else(|| Error::NonSeparable("q has a fourfold root".into()))?;
    Ok(StandardPosition {
        form: FourOneForm {
            q,
            ell: BinaryForm::z(),
        },
        m,
    })
}
