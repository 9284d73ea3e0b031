use crate::error::{Error, Result};
use crate::ring::Ring;

/// Binary form `sum a_i x^(n-i) z^i`, stored as `[a_0, ..., a_n]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> BinaryForm<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![R::zero_elt(); degree + 1],
        }
    }

    pub fn constant(c: R) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// `x`
    pub fn x() -> Self {
        BinaryForm::new(vec![R::one_elt(), R::zero_elt()])
    }

    /// `z`
    pub fn z() -> Self {
        BinaryForm::new(vec![R::zero_elt(), R::one_elt()])
    }

    /// `u x + w z`
    pub fn linear(u: R, w: R) -> Self {
        BinaryForm::new(vec![u, w])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero_elt)
    }

    /// The single coefficient of a degree-0 form.
    pub fn scalar(&self) -> &R {
        assert_eq!(self.degree(), 0, "not a degree-0 form");
        &self.coeffs[0]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BinaryForm<S> {
        BinaryForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "adding forms of different degree");
        BinaryForm {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg_ref)
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|c| c.mul_ref(k))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.degree() + o.degree();
        let mut out = vec![R::zero_elt(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elt() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j].add_product(a, b);
            }
        }
        BinaryForm { coeffs: out }
    }

    /// `f^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BinaryForm::constant(R::one_elt());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `f(x, z)` at a point.
    pub fn eval(&self, x: &R, z: &R) -> R {
        let n = self.degree();
        let mut acc = R::zero_elt();
        let mut zp = R::one_elt();
        let xp: Vec<R> = {
            let mut v = vec![R::one_elt()];
            for i in 1..=n {
                v.push(v[i - 1].mul_ref(x));
            }
            v
        };
        for (i, a) in self.coeffs.iter().enumerate() {
            acc.add_assign_ref(&a.mul_ref(&xp[n - i]).mul_ref(&zp));
            zp = zp.mul_ref(z);
        }
        acc
    }

    /// `f(ax + bz, cx + dz)`.
    pub fn act(&self, s: &Mobius<R>) -> Self {
        let n = self.degree();
        let l1 = BinaryForm::linear(s.a.clone(), s.b.clone());
        let l2 = BinaryForm::linear(s.c.clone(), s.d.clone());
        let mut p1 = vec![BinaryForm::constant(R::one_elt())];
        let mut p2 = vec![BinaryForm::constant(R::one_elt())];
        for k in 1..=n {
            p1.push(p1[k - 1].mul(&l1));
            p2.push(p2[k - 1].mul(&l2));
        }
        let mut out = BinaryForm::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elt() {
                continue;
            }
            out = out.add(&p1[n - i].mul(&p2[i]).scale(a));
        }
        out
    }
}

/// Substitution `x -> ax + bz`, `z -> cx + dz`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mobius<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Result<Self> {
        let m = Mobius { a, b, c, d };
        if m.det().is_zero_elt() {
            return Err(Error::Domain("singular substitution".into()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Mobius {
            a: R::one_elt(),
            b: R::zero_elt(),
            c: R::zero_elt(),
            d: R::one_elt(),
        }
    }

    pub fn det(&self) -> R {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one_elt()
    }

    /// Matrix product `self * o`; acting by it equals acting by `self`
    /// and then by `o`.
    pub fn compose(&self, o: &Self) -> Self {
        Mobius {
            a: self.a.mul_ref(&o.a).add_ref(&self.b.mul_ref(&o.c)),
            b: self.a.mul_ref(&o.b).add_ref(&self.b.mul_ref(&o.d)),
            c: self.c.mul_ref(&o.a).add_ref(&self.d.mul_ref(&o.c)),
            d: self.c.mul_ref(&o.b).add_ref(&self.d.mul_ref(&o.d)),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mobius<S> {
        Mobius {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }
}

/// A pair `(q, l)` of binary forms of degrees 4 and 1.
#[derive(Clone, Debug, PartialEq)]
pub struct FourOneForm<R> {
    pub q: BinaryForm<R>,
    pub ell: BinaryForm<R>,
}

impl<R: Ring> FourOneForm<R> {
    pub fn new(q: BinaryForm<R>, ell: BinaryForm<R>) -> Result<Self> {
        if q.degree() != 4 || ell.degree() != 1 {
            return Err(Error::Domain(format!(
                "expected degrees (4,1), got ({},{})",
                q.degree(),
                ell.degree()
            )));
        }
        Ok(FourOneForm { q, ell })
    }

    /// The quintic `q * l`.
    pub fn product(&self) -> BinaryForm<R> {
        self.q.mul(&self.ell)
    }

    pub fn act(&self, s: &Mobius<R>) -> Self {
        FourOneForm {
            q: self.q.act(s),
            ell: self.ell.act(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn f(c: &[i64]) -> BinaryForm<BigInt> {
        BinaryForm::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mobius<BigInt> {
        Mobius::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    #[test]
    fn action_examples() {
        let x2z = f(&[0, 1, 0, 0]);
        assert_eq!(x2z.act(&Mobius::identity()), x2z);
        assert_eq!(f(&[1, 0]).act(&m(0, 1, 1, 0)), f(&[0, 1]));
        // xz with x -> x+z gives xz + z^2
        assert_eq!(f(&[0, 1, 0]).act(&m(1, 1, 0, 1)), f(&[0, 1, 1]));
    }

    #[test]
    fn right_action() {
        let g = f(&[2, -1, 0, 3, 1]);
        let s = m(2, 1, 1, 1);
        let t = m(1, -3, 2, 1);
        assert_eq!(g.act(&s).act(&t), g.act(&s.compose(&t)));
    }

    #[test]
    fn powers() {
        let xz = f(&[0, 1, 0]);
        assert_eq!(xz.pow(2), f(&[0, 0, 1, 0, 0]));
        let q = f(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(q.pow(7).degree(), 35);
        assert_eq!(q.pow(1), q);
    }
}
