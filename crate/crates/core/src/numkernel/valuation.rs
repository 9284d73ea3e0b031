use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fmt_rational, parse_rational, Rational};

/// A valuation value: a rational number, or `Inf` for the zero element.
/// `Finite(_) < Inf` under the derived order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(Rational),
    Inf,
}

impl Valuation {
    pub fn int(n: i64) -> Self {
        Valuation::Finite(super::int(n))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Valuation::Inf)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Inf => None,
        }
    }

    /// Valuation of a product.
    pub fn add(&self, rhs: &Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Inf,
        }
    }

    /// Multiplies by a nonnegative rational (valuation of a power).
    pub fn scale(&self, k: &Rational) -> Valuation {
        assert!(!k.is_negative(), "scale by negative rational");
        match self {
            Valuation::Finite(a) => Valuation::Finite(a * k),
            Valuation::Inf if k.is_zero() => Valuation::Finite(Rational::zero()),
            Valuation::Inf => Valuation::Inf,
        }
    }

    /// Shift by a finite amount; `Inf` stays `Inf`.
    pub fn shift(&self, by: &Rational) -> Valuation {
        match self {
            Valuation::Finite(a) => Valuation::Finite(a + by),
            Valuation::Inf => Valuation::Inf,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{}", fmt_rational(q)),
            Valuation::Inf => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Valuation {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "inf" {
            Ok(Valuation::Inf)
        } else {
            parse_rational(s).map(Valuation::Finite)
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn int_val_p(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// `p`-adic valuation of a rational.
pub fn val_p(x: &Rational, p: u64) -> Valuation {
    assert!(p >= 2, "p must be a prime");
    if x.is_zero() {
        return Valuation::Inf;
    }
    let p = BigInt::from(p);
    Valuation::int(int_val_p(x.numer(), &p) - int_val_p(x.denom(), &p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rat;

    #[test]
    fn padic_basics() {
        assert_eq!(val_p(&rat(50, 3), 5), Valuation::int(2));
        assert_eq!(val_p(&rat(7, 125), 5), Valuation::int(-3));
        assert_eq!(val_p(&rat(0, 1), 5), Valuation::Inf);
    }

    #[test]
    fn order_and_text() {
        assert!(Valuation::int(100) < Valuation::Inf);
        assert!(Valuation::Finite(rat(-1, 2)) < Valuation::int(0));
        for s in ["inf", "3", "-5/2"] {
            assert_eq!(s.parse::<Valuation>().unwrap().to_string(), s);
        }
    }
}
