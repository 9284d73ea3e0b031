use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::ring::{ExactDiv, Ring};

/// Dense polynomial in `t` over the rationals. Coefficients are stored in
/// ascending degree with no trailing zeros, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| super::int(x)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::default();
        }
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        UniPoly { coeffs: v }
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Order of vanishing at `t = 0`, `None` for the zero polynomial.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return UniPoly::default();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// Divides by `t^k`; the caller guarantees `ord >= k`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.ord().is_none_or(|o| o >= k));
        UniPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Substitutes `t -> t^n`.
    pub fn inflate(&self, n: usize) -> Self {
        if n == 1 || self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * n] = c.clone();
        }
        UniPoly { coeffs: v }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    /// Euclidean division, panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::from_coeffs(q), UniPoly::from_coeffs(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (Some(oa), Some(ob)) = (a.ord(), b.ord()) else {
            return if a.is_zero() { b.make_monic() } else { a.make_monic() };
        };
        let k = oa.min(ob);
        let (a, b) = (a.shift_down(oa), b.shift_down(ob));
        let g = if a.is_constant() || b.is_constant() {
            vec![BigInt::one()]
        } else {
            prs_gcd(primitive(a.to_integer_coeffs().1), primitive(b.to_integer_coeffs().1))
        };
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(g.into_iter().map(Rational::from_integer));
        UniPoly::from_coeffs(coeffs).make_monic()
    }

    /// Lowest common denominator and the integer polynomial it produces.
    pub fn to_integer_coeffs(&self) -> (BigInt, Vec<BigInt>) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        let v = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        (l, v)
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = num_integer::Integer::gcd(&g, c);
        if g.is_one() {
            return v;
        }
    }
    if !g.is_zero() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Primitive pseudo-remainder sequence over `Z[t]`.
fn prs_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let la = a.last().unwrap().clone();
            let off = a.len() - b.len();
            for c in a.iter_mut() {
                *c *= &lb;
            }
            for (j, c) in b.iter().enumerate() {
                a[off + j] -= &la * c;
            }
            a = primitive(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

impl Ring for UniPoly {
    fn zero_elt() -> Self {
        UniPoly::default()
    }
    fn one_elt() -> Self {
        UniPoly::constant(Rational::one())
    }
    fn is_zero_elt(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_bigint(n: &BigInt) -> Self {
        UniPoly::constant(Rational::from_integer(n.clone()))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(v)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(v)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(v)
    }
    fn neg_ref(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&Rational::from_integer(k.clone()))
    }
}

impl ExactDiv for UniPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.coeffs.is_empty() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.coeffs.is_empty().then_some(q)
    }
}

impl fmt::Display for UniPoly {
    /// Ascending powers, e.g. `1 - 2*t + 3/4*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = super::fmt_rational(&a);
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{body}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::int;

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[3, 0, -2, 5, 1]);
        let b = UniPoly::from_ints(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul_ref(&b).add_ref(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = UniPoly::from_ints(&[-1, 1]); // t - 1
        let a = f.mul_ref(&UniPoly::from_ints(&[2, 0, 1]));
        let b = f.mul_ref(&UniPoly::from_ints(&[0, 3]));
        assert_eq!(UniPoly::gcd(&a, &b), f);
    }

    #[test]
    fn display() {
        let p = UniPoly::from_coeffs(vec![int(1), int(-2), super::super::rat(3, 4)]);
        assert_eq!(p.to_string(), "1 - 2*t + 3/4*t^2");
        assert_eq!(UniPoly::default().to_string(), "0");
        assert_eq!(UniPoly::from_ints(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn inflate_and_ord() {
        let p = UniPoly::from_ints(&[0, 0, 1, 2]);
        assert_eq!(p.ord(), Some(2));
        assert_eq!(p.inflate(3).ord(), Some(6));
        assert_eq!(p.inflate(3).degree(), Some(9));
    }
}
