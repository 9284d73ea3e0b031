//! Minimal commutative-ring abstraction shared by every coefficient type.
//!
//! The same transvectant and invariant code runs over integers, rationals,
//! univariate polynomials in `t`, rational functions in `t`, multivariate
//! polynomials and truncated power series. The methods carry a `_ref` suffix
//! so they never collide with the `std::ops` traits those types also
//! implement.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numkernel::Rational;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_elt() -> Self;
    fn one_elt() -> Self;
    fn is_zero_elt(&self) -> bool;
    fn from_bigint(n: &BigInt) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn is_one_elt(&self) -> bool {
        *self == Self::one_elt()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    /// Multiplication by an integer scalar.
    fn scale_int(&self, k: &BigInt) -> Self {
        if One::is_one(k) {
            return self.clone();
        }
        self.mul_ref(&Self::from_bigint(k))
    }

    fn pow_ref(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_elt();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv_ref(&self) -> Option<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv_ref().map(|r| self.mul_ref(&r))
    }

    fn from_rational(q: &Rational) -> Self;
}

/// Exact division, `None` when the quotient does not exist in the ring.
/// Needed by fraction-free elimination.
pub trait ExactDiv: Ring {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_elt() -> Self {
        Zero::zero()
    }
    fn one_elt() -> Self {
        One::one()
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self * k
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for Rational {
    fn zero_elt() -> Self {
        Zero::zero()
    }
    fn one_elt() -> Self {
        One::one()
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Field for Rational {
    fn inv_ref(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl ExactDiv for Rational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_ref(rhs)
    }
}
