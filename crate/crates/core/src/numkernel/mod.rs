//! Exact scalars: rationals, polynomials and rational functions in `t`,
//! and the `t`-adic and `p`-adic valuations on them.

mod ratfunc;
mod unipoly;
mod valuation;

pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;
pub use valuation::{val_p, Valuation};

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `t`-adic valuation of a rational function.
pub fn val_t(x: &RatFunc) -> Valuation {
    x.val_t()
}

/// Leading coefficient of the Laurent expansion at `t = 0`.
pub fn residue(x: &RatFunc) -> Result<Rational> {
    x.residue()
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        offset: 0,
        message: format!("not a rational number: {s:?}"),
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&d) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serde helpers writing rationals as `"n/d"` strings.
pub mod serde_rational {
    use super::{fmt_rational, Rational};
    use serde::Serializer;

    pub fn ser<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(q))
    }

    pub fn ser_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt_rational))
    }
}
