//! Linear combinations of valuations over the rationals extended by
//! `+inf` and `-inf`.

use std::cmp::Ordering;

use crate::numkernel::{Rational, Valuation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext {
    Fin(Rational),
    PosInf,
    NegInf,
    /// Infinite terms of both signs.
    Indet,
}

impl Ext {
    /// `>= 0`; an indeterminate value satisfies non-strict inequalities.
    pub fn ge0(&self) -> bool {
        match self {
            Ext::Fin(q) => *q >= Rational::from_integer(0.into()),
            Ext::PosInf | Ext::Indet => true,
            Ext::NegInf => false,
        }
    }

    pub fn gt0(&self) -> bool {
        match self {
            Ext::Fin(q) => *q > Rational::from_integer(0.into()),
            Ext::PosInf => true,
            Ext::NegInf | Ext::Indet => false,
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Ext::Fin(q) => Some(q),
            _ => None,
        }
    }

    fn rank(&self) -> Option<(i8, Option<&Rational>)> {
        match self {
            Ext::NegInf => Some((-1, None)),
            Ext::Fin(q) => Some((0, Some(q))),
            Ext::PosInf => Some((1, None)),
            Ext::Indet => None,
        }
    }

    fn cmp_ext(&self, o: &Ext) -> Option<Ordering> {
        Some(self.rank()?.cmp(&o.rank()?))
    }

    pub fn max(self, o: Ext) -> Ext {
        match self.cmp_ext(&o) {
            None => Ext::Indet,
            Some(Ordering::Less) => o,
            _ => self,
        }
    }

    pub fn min(self, o: Ext) -> Ext {
        match self.cmp_ext(&o) {
            None => Ext::Indet,
            Some(Ordering::Greater) => o,
            _ => self,
        }
    }

    pub fn sub(&self, o: &Ext) -> Ext {
        let neg = match o {
            Ext::Fin(q) => Ext::Fin(-q),
            Ext::PosInf => Ext::NegInf,
            Ext::NegInf => Ext::PosInf,
            Ext::Indet => Ext::Indet,
        };
        match (self, &neg) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
            (Ext::Indet, _) | (_, Ext::Indet) => Ext::Indet,
            (Ext::PosInf, Ext::NegInf) | (Ext::NegInf, Ext::PosInf) => Ext::Indet,
            (Ext::PosInf, _) | (_, Ext::PosInf) => Ext::PosInf,
            _ => Ext::NegInf,
        }
    }
}

/// `sum c_i v(x_i)`, with repeated indices merged before any infinity is
/// looked at, so `8 v(D) - 8 v(D)` is `0` even when `v(D)` is infinite.
pub fn lin(terms: &[(Rational, usize)], vals: &[Valuation]) -> Ext {
    let mut merged: Vec<(Rational, usize)> = Vec::new();
    for (c, i) in terms {
        match merged.iter_mut().find(|(_, j)| j == i) {
            Some((d, _)) => *d += c,
            None => merged.push((c.clone(), *i)),
        }
    }
    let zero = Rational::from_integer(0.into());
    let mut acc = zero.clone();
    let (mut pos, mut neg) = (false, false);
    for (c, i) in merged.iter().filter(|(c, _)| *c != zero) {
        match &vals[*i] {
            Valuation::Finite(v) => acc += c * v,
            Valuation::Inf if *c > zero => pos = true,
            Valuation::Inf => neg = true,
        }
    }
    match (pos, neg) {
        (false, false) => Ext::Fin(acc),
        (true, false) => Ext::PosInf,
        (false, true) => Ext::NegInf,
        (true, true) => Ext::Indet,
    }
}
