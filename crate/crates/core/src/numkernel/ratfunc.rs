use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, UniPoly, Valuation};
use crate::error::{Error, Result};
use crate::ring::{ExactDiv, Field, Ring};

/// Element of `Q(t)`, stored in lowest terms with the denominator
/// normalised to `t^k * u(t)` where `u(0) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator in rational function".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = UniPoly::gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let k = den.ord().expect("nonzero denominator");
        let c = den.coeffs()[k].recip();
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.scale(&c),
                den: den.scale(&c),
            }
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn t() -> Self {
        Self::from_poly(UniPoly::t())
    }

    /// `c * t^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(UniPoly::monomial(c, k as usize))
        } else {
            Self::normalized(UniPoly::constant(c), UniPoly::monomial(Rational::one(), (-k) as usize))
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        // the normal form forces a constant denominator to be 1
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant())
            .then(|| self.num.coeff(0) / self.den.coeff(0))
    }

    pub fn val_t(&self) -> Valuation {
        match self.num.ord() {
            None => Valuation::Inf,
            Some(a) => Valuation::int(a as i64 - self.den.ord().unwrap() as i64),
        }
    }

    /// Leading Laurent coefficient at `t = 0`.
    pub fn residue(&self) -> Result<Rational> {
        let a = self
            .num
            .ord()
            .ok_or_else(|| Error::Domain("residue of zero".into()))?;
        let b = self.den.ord().unwrap();
        Ok(&self.num.coeffs()[a] / &self.den.coeffs()[b])
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    /// Substitutes `t -> t^n`; valuations scale by `n`.
    pub fn inflate(&self, n: usize) -> Self {
        RatFunc {
            num: self.num.inflate(n),
            den: self.den.inflate(n),
        }
    }
}

impl Ring for RatFunc {
    fn zero_elt() -> Self {
        RatFunc::zero()
    }
    fn one_elt() -> Self {
        RatFunc::one()
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::from_poly(UniPoly::from_bigint(n))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(self.num.add_ref(&rhs.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den)),
            self.den.mul_ref(&rhs.den),
        )
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num.mul_ref(&rhs.num));
        }
        Self::normalized(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }
    fn neg_ref(&self) -> Self {
        RatFunc {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero_elt();
        }
        RatFunc {
            num: self.num.scale_int(k),
            den: self.den.clone(),
        }
    }
}

impl Field for RatFunc {
    fn inv_ref(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::normalized(self.den.clone(), self.num.clone()))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl ExactDiv for RatFunc {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_ref(rhs)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &UniPoly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
