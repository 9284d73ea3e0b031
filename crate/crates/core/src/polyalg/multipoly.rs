use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numkernel::{fmt_rational, Rational};
use crate::ring::{ExactDiv, Ring};

pub const MAX_VARS: usize = 8;

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte. Integer order on the packed word is lexicographic
/// order, and multiplication is plain addition as long as no exponent
/// exceeds 255.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(i: usize) -> u32 {
        debug_assert!(i < MAX_VARS);
        8 * (MAX_VARS - 1 - i) as u32
    }

    pub fn var(i: usize) -> Self {
        Monomial(1u64 << Self::shift(i))
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        assert!(e.len() <= MAX_VARS);
        let mut w = 0u64;
        for (i, &x) in e.iter().enumerate() {
            assert!(x < 256, "exponent overflow");
            w |= (x as u64) << Self::shift(i);
        }
        Monomial(w)
    }

    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> Self::shift(i)) & 0xff) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    pub fn total_degree(self) -> u32 {
        self.0.to_be_bytes().iter().map(|&b| b as u32).sum()
    }

    pub fn mul(self, o: Monomial) -> Monomial {
        debug_assert!(
            self.0
                .to_be_bytes()
                .iter()
                .zip(o.0.to_be_bytes())
                .all(|(a, b)| (*a as u32) + (b as u32) < 256),
            "exponent overflow"
        );
        Monomial(self.0 + o.0)
    }

    pub fn divides(self, o: Monomial) -> bool {
        self.0
            .to_be_bytes()
            .iter()
            .zip(o.0.to_be_bytes())
            .all(|(a, b)| *a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(self, o: Monomial) -> Monomial {
        Monomial(o.0 - self.0)
    }

    fn lower(self, i: usize, k: u32) -> Monomial {
        Monomial(self.0 - ((k as u64) << Self::shift(i)))
    }
}

/// Sparse polynomial over a coefficient ring. Terms are kept sorted in
/// descending lexicographic order with no zero coefficients. Constants may
/// carry an empty variable list; they adopt the variables of whatever they
/// are combined with.
#[derive(Clone, Debug)]
pub struct MultiPoly<C> {
    vars: Arc<Vec<String>>,
    terms: Vec<(Monomial, C)>,
}

impl<C: Ring> PartialEq for MultiPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

pub fn var_names(prefix: &str, n: usize) -> Arc<Vec<String>> {
    Arc::new((0..n).map(|i| format!("{prefix}{i}")).collect())
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero_in(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant_in(vars: &Arc<Vec<String>>, c: C) -> Self {
        Self::from_terms(vars, vec![(Monomial::ONE, c)])
    }

    pub fn var(vars: &Arc<Vec<String>>, i: usize) -> Self {
        assert!(i < vars.len());
        Self::from_terms(vars, vec![(Monomial::var(i), C::one_elt())])
    }

    /// Builds a polynomial from unsorted terms, merging duplicates.
    pub fn from_terms(vars: &Arc<Vec<String>>, terms: Vec<(Monomial, C)>) -> Self {
        assert!(vars.len() <= MAX_VARS);
        let mut map: HashMap<Monomial, C> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(acc) => acc.add_assign_ref(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(vars.clone(), map)
    }

    fn from_map(vars: Arc<Vec<String>>, map: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero_elt()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.total_degree();
        self.terms
            .iter()
            .all(|(m, _)| m.total_degree() == d)
            .then_some(d)
    }

    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some((m, c)) if *m == Monomial::ONE => c.clone(),
            _ => C::zero_elt(),
        }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .filter(|(_, c)| !c.is_zero_elt())
                .collect(),
        }
    }

    fn joint_vars(&self, o: &Self) -> Arc<Vec<String>> {
        if self.vars.is_empty() {
            return o.vars.clone();
        }
        if !o.vars.is_empty() && !Arc::ptr_eq(&self.vars, &o.vars) {
            assert_eq!(self.vars, o.vars, "mixing polynomials over different variables");
        }
        self.vars.clone()
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let vars = self.joint_vars(o);
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 > b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 > a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                let c = if negate { b[j].1.neg_ref() } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    a[i].1.sub_ref(&b[j].1)
                } else {
                    a[i].1.add_ref(&b[j].1)
                };
                if !c.is_zero_elt() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        MultiPoly { vars, terms: out }
    }

    /// Accumulates `a * b * k` into a hash map of terms.
    pub fn mul_into(acc: &mut HashMap<Monomial, C>, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(*mb);
                match acc.get_mut(&m) {
                    Some(x) => x.add_product(ca, cb),
                    None => {
                        acc.insert(m, ca.mul_ref(cb));
                    }
                }
            }
        }
    }

    pub fn from_accumulator(vars: Arc<Vec<String>>, acc: HashMap<Monomial, C>) -> Self {
        Self::from_map(vars, acc)
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero_elt() {
            return Self::zero_in(&self.vars);
        }
        self.map_coeffs(|c| c.mul_ref(k))
    }

    /// Partial derivative of the given order in variable `var`.
    pub fn derivative(&self, var: usize, order: u32) -> Self {
        assert!(var < self.vars.len(), "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) >= order)
            .map(|(m, c)| {
                let e = m.exp(var);
                let ff: BigInt = (0..order).map(|i| BigInt::from(e - i)).product();
                (m.lower(var, order), c.scale_int(&ff))
            })
            .filter(|(_, c)| !c.is_zero_elt())
            .collect();
        // lowering a fixed variable by a fixed amount preserves lex order
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluates at a point of any ring receiving the coefficients.
    pub fn evaluate<R: Ring>(&self, point: &[R], conv: impl Fn(&C) -> R) -> R {
        let n = self.vars.len();
        assert!(point.len() >= n, "evaluation point too short");
        let maxe: Vec<u32> = (0..n)
            .map(|i| self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<R>> = (0..n)
            .map(|i| {
                let mut v = vec![R::one_elt()];
                for k in 1..=maxe[i] as usize {
                    let p = v[k - 1].mul_ref(&point[i]);
                    v.push(p);
                }
                v
            })
            .collect();
        let mut acc = R::zero_elt();
        for (m, c) in &self.terms {
            let mut term = conv(c);
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    if term.is_zero_elt() {
                        break;
                    }
                    term = term.mul_ref(&pw[e]);
                }
            }
            acc.add_assign_ref(&term);
        }
        acc
    }

    /// Renders with deterministic term order, e.g. `2*a0^2 - 3*a1`.
    pub fn render(&self, coeff: impl Fn(&C) -> (bool, String)) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coeff(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, name) in self.vars.iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                s.push_str(&body);
            } else {
                if body != "1" {
                    s.push_str(&body);
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl<C: Ring> Ring for MultiPoly<C> {
    fn zero_elt() -> Self {
        MultiPoly {
            vars: Arc::new(Vec::new()),
            terms: Vec::new(),
        }
    }
    fn one_elt() -> Self {
        Self::from_bigint(&<BigInt as One>::one())
    }
    fn is_zero_elt(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_bigint(n: &BigInt) -> Self {
        let c = C::from_bigint(n);
        let terms = if c.is_zero_elt() {
            Vec::new()
        } else {
            vec![(Monomial::ONE, c)]
        };
        MultiPoly {
            vars: Arc::new(Vec::new()),
            terms,
        }
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let vars = self.joint_vars(rhs);
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return Self::zero_in(&vars);
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0 == Monomial::ONE {
            let mut p = self.scale(&rhs.terms[0].1);
            p.vars = vars;
            return p;
        }
        let mut acc = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        Self::mul_into(&mut acc, self, rhs);
        Self::from_map(vars, acc)
    }
    fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero_elt() {
            return Self::zero_in(&self.vars);
        }
        self.map_coeffs(|c| c.scale_int(k))
    }
}

impl ExactDiv for MultiPoly<BigInt> {
    /// Multivariate division by the lex-leading term; `None` unless exact.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (lm, lc) = rhs.terms.first()?.clone();
        let vars = self.joint_vars(rhs);
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(m) {
                return None;
            }
            let (q, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = lm.quotient_of(m);
            let shifted = MultiPoly {
                vars: vars.clone(),
                terms: rhs.terms.iter().map(|(mm, cc)| (mm.mul(qm), cc * &q)).collect(),
            };
            rem = rem.sub_ref(&shifted);
            quot.push((qm, q));
        }
        Some(MultiPoly { vars, terms: quot })
    }
}

impl MultiPoly<BigInt> {
    /// Signed content: the gcd of the coefficients, carrying the sign of the
    /// lex-leading coefficient so the primitive part leads positively.
    pub fn content(&self) -> Result<BigInt> {
        let lead = self
            .terms
            .first()
            .ok_or_else(|| Error::Domain("content of zero polynomial".into()))?;
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(if lead.1.is_negative() { -g } else { g })
    }

    pub fn primitive(&self) -> Result<(BigInt, Self)> {
        let c = self.content()?;
        let p = self.map_coeffs(|x| x / &c);
        Ok((c, p))
    }

    pub fn to_rational(&self) -> MultiPoly<Rational> {
        self.map_coeffs(|c| Rational::from_integer(c.clone()))
    }

    pub fn to_text(&self) -> String {
        self.render(|c| (c.is_negative(), c.abs().to_string()))
    }
}

impl MultiPoly<Rational> {
    /// Signed rational content `c` with `self / c` integral, primitive and
    /// positively leading.
    pub fn content(&self) -> Result<Rational> {
        let lead = self
            .terms
            .first()
            .ok_or_else(|| Error::Domain("content of zero polynomial".into()))?;
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let c = Rational::new(g, l);
        Ok(if lead.1.is_negative() { -c } else { c })
    }

    pub fn primitive(&self) -> Result<(Rational, MultiPoly<BigInt>)> {
        let c = self.content()?;
        let p = self.map_coeffs(|x| (x / &c).to_integer());
        Ok((c, p))
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<MultiPoly<BigInt>> {
        self.terms
            .iter()
            .all(|(_, c)| c.is_integer())
            .then(|| self.map_coeffs(|c| c.to_integer()))
    }

    pub fn to_text(&self) -> String {
        self.render(|c| (c.is_negative(), fmt_rational(&c.abs())))
    }
}

impl fmt::Display for MultiPoly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for MultiPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
