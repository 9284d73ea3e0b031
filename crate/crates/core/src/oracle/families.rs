use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::tree::{MetricTree5, Point, RootConfig, Split};
use crate::error::{Error, Result};
use crate::numkernel::{int, rat, Rational, RatFunc};
use crate::polyalg::{BinaryForm, FourOneForm};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Family {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II.1")]
    II1,
    #[serde(rename = "II.2")]
    II2,
    #[serde(rename = "III.1")]
    III1,
    #[serde(rename = "III.2")]
    III2,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::I, Family::II1, Family::II2, Family::III1, Family::III2];

    pub fn name(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::II1 => "II.1",
            Family::II2 => "II.2",
            Family::III1 => "III.1",
            Family::III2 => "III.2",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family {s:?}")))
    }
}

/// One member of a universal family: roots `0, 1, l1, l2` and the marked
/// root at infinity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySample {
    pub family: Family,
    pub k1: u32,
    pub k2: u32,
    #[serde(with = "rat_str")]
    pub mu1: Rational,
    #[serde(with = "rat_str")]
    pub mu2: Rational,
}

mod rat_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        crate::numkernel::serde_rational::ser(q, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::numkernel::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

impl FamilySample {
    pub fn new(family: Family, k1: u32, k2: u32, mu1: Rational, mu2: Rational) -> Result<Self> {
        let fs = FamilySample {
            family,
            k1,
            k2,
            mu1,
            mu2,
        };
        fs.validate()?;
        Ok(fs)
    }

    pub fn validate(&self) -> Result<()> {
        let zero = int(0);
        let one = int(1);
        let (m1, m2) = (&self.mu1, &self.mu2);
        let ok = match self.family {
            Family::I => *m1 != zero && *m2 != zero && *m1 != one && *m2 != one && m1 != m2,
            Family::II1 => *m1 != zero && *m2 != zero && m1 != m2,
            Family::II2 => *m1 != zero && *m2 != zero && *m2 != one,
            Family::III1 => *m1 != zero && *m2 != zero,
            Family::III2 => *m1 != zero && *m2 != zero && self.k1 <= self.k2,
        };
        let uses_k2 = matches!(self.family, Family::III1 | Family::III2);
        let uses_k1 = self.family != Family::I;
        if !ok || (uses_k1 && self.k1 == 0) || (uses_k2 && self.k2 == 0) {
            return Err(Error::Domain(format!("sample violates the {} conditions: {self:?}", self.family.name())));
        }
        Ok(())
    }

    pub fn lambdas(&self) -> (RatFunc, RatFunc) {
        let c = |q: &Rational| RatFunc::constant(q.clone());
        let m = |q: &Rational, k: u32| RatFunc::monomial(q.clone(), k as i64);
        match self.family {
            Family::I => (c(&self.mu1), c(&self.mu2)),
            Family::II1 => (m(&self.mu1, self.k1), m(&self.mu2, self.k1)),
            Family::II2 => (m(&self.mu1, self.k1), c(&self.mu2)),
            Family::III1 => (m(&self.mu1, self.k1), m(&self.mu2, self.k1 + self.k2)),
            Family::III2 => (m(&self.mu1, self.k1), RatFunc::one().add_ref(&m(&self.mu2, self.k2))),
        }
    }

    pub fn roots(&self) -> RootConfig {
        let (l1, l2) = self.lambdas();
        RootConfig::new(
            vec![Point::int(0), Point::int(1), Point::Finite(l1), Point::Finite(l2), Point::Infinity],
            Some(4),
        )
        .expect("validated samples have distinct roots")
    }

    /// `q = x (x - z) (x - l1 z) (x - l2 z)` and `l = z`.
    pub fn form(&self) -> FourOneForm<RatFunc> {
        let (l1, l2) = self.lambdas();
        let lin = |r: RatFunc| BinaryForm::linear(RatFunc::one(), r.neg_ref());
        let q = BinaryForm::x()
            .mul(&lin(RatFunc::one()))
            .mul(&lin(l1))
            .mul(&lin(l2));
        FourOneForm { q, ell: BinaryForm::z() }
    }

    pub fn expected_tree(&self) -> MetricTree5 {
        let k = |e: u32| Rational::from_integer(e.into());
        let sp = |a: usize, b: usize, e: u32| Split {
            pair: [a, b],
            length: k(e),
        };
        let splits = match self.family {
            Family::I => vec![],
            Family::II1 => vec![sp(1, 4, self.k1)],
            Family::II2 => vec![sp(0, 2, self.k1)],
            Family::III1 => vec![sp(1, 4, self.k1), sp(0, 3, self.k2)],
            Family::III2 => vec![sp(0, 2, self.k1), sp(1, 3, self.k2)],
        };
        MetricTree5::new(splits, Some(4)).expect("nominal trees are valid")
    }

    /// The same sample with `t` replaced by `t^n`: every length scales by `n`.
    pub fn inflated(&self, n: u32) -> FamilySample {
        FamilySample {
            k1: self.k1 * n,
            k2: self.k2 * n,
            ..self.clone()
        }
    }
}

fn mu_pool() -> Vec<i64> {
    (-9..=9).filter(|&m| m != 0).collect()
}

/// Random sample of a family. With `forced`, the sample sits on a boundary
/// of the length formulas: `k1 = k2` for the caterpillar families, and for
/// the one-split families a residue choice where the leading term of `I18`
/// cancels.
pub fn random_sample<R: Rng>(family: Family, forced: bool, rng: &mut R) -> FamilySample {
    let pool = mu_pool();
    loop {
        let mu1 = int(*pool.choose(rng).unwrap());
        let mu2 = int(*pool.choose(rng).unwrap());
        let k1 = rng.gen_range(1..=12u32);
        let k2 = rng.gen_range(1..=12u32);
        let (mu1, mu2, k1, k2) = match (family, forced) {
            (Family::I, _) => (mu1, mu2, 0, 0),
            (Family::II1, true) => {
                let choices = [&mu2 * int(2), -mu2.clone(), &mu2 * rat(1, 2)];
                (choices.choose(rng).unwrap().clone(), mu2, k1, 0)
            }
            (Family::II2, true) => {
                let choices = [int(-1), int(2), rat(1, 2)];
                (mu1, choices.choose(rng).unwrap().clone(), k1, 0)
            }
            (Family::II1 | Family::II2, false) => (mu1, mu2, k1, 0),
            (Family::III1, true) => (mu1, mu2, k1, k1),
            (Family::III2, true) => (mu1, mu2, k1, k1),
            (Family::III2, false) => (mu1, mu2, k1.min(k2), k1.max(k2)),
            (Family::III1, false) => (mu1, mu2, k1, k2),
        };
        if let Ok(fs) = FamilySample::new(family, k1, k2, mu1, mu2) {
            return fs;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::tree::{tree_from_roots, Topology};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn table_examples() {
        let fs = FamilySample::new(Family::II2, 1, 0, int(1), int(2)).unwrap();
        assert_eq!(fs.lambdas(), (RatFunc::t(), RatFunc::constant(int(2))));
        let fs = FamilySample::new(Family::III1, 1, 1, int(1), int(1)).unwrap();
        assert_eq!(fs.lambdas().1, RatFunc::monomial(int(1), 2));
        let fs = FamilySample::new(Family::I, 0, 0, int(2), int(3)).unwrap();
        assert_eq!(tree_from_roots(&fs.roots()).unwrap().topology, Topology::Star);
    }

    #[test]
    fn conditions_are_enforced() {
        assert!(FamilySample::new(Family::I, 0, 0, int(1), int(3)).is_err());
        assert!(FamilySample::new(Family::II1, 2, 0, int(3), int(3)).is_err());
        assert!(FamilySample::new(Family::II2, 2, 0, int(3), int(1)).is_err());
        assert!(FamilySample::new(Family::III2, 3, 2, int(3), int(1)).is_err());
        assert!(FamilySample::new(Family::III1, 0, 2, int(3), int(1)).is_err());
    }

    #[test]
    fn expected_trees_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for fam in Family::ALL {
            for i in 0..30 {
                let fs = random_sample(fam, i % 3 == 0, &mut rng);
                let got = tree_from_roots(&fs.roots()).unwrap();
                assert_eq!(got, fs.expected_tree(), "{fs:?}");
                assert_eq!(got.marked_type().unwrap().name(), fam.name());
            }
        }
    }

    #[test]
    fn form_has_the_sample_roots() {
        let fs = FamilySample::new(Family::III2, 2, 5, int(-3), int(4)).unwrap();
        let g = fs.form();
        let (l1, l2) = fs.lambdas();
        for r in [RatFunc::zero(), RatFunc::one(), l1, l2] {
            assert!(g.q.eval(&r, &RatFunc::one()).is_zero());
        }
    }
}
