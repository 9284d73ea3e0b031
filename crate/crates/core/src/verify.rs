//! Classifier against oracle on random members of the universal families.
//!
//! Sample `i` of family `k` draws from its own ChaCha stream, so results do
//! not depend on how work is split across threads. Every fifth sample is
//! forced onto a boundary case (see [`random_sample`]).

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    classify, conditions, type_ii_length_unnormalized, type_ii_terms, type_iii_e2_alternative, type_iii_lengths,
    total_length, ClassifierInput, Ext, TreeType,
};
use crate::error::{Error, Result};
use crate::invariants::Backend;
use crate::numkernel::{fmt_rational, Rational};
use crate::oracle::{random_sample, tree_from_roots, Family, FamilySample, MarkedType};

pub const FORCE_EVERY: u64 = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleRecord {
    pub family: Family,
    pub index: u64,
    pub forced: bool,
    pub sample: FamilySample,
    pub tree_type: Option<TreeType>,
    pub marked_type: Option<MarkedType>,
    pub lengths: Vec<String>,
    pub oracle_marked_type: Option<MarkedType>,
    pub oracle_lengths: Vec<String>,
    /// How many of the three type conditions held.
    pub conditions_holding: usize,
    pub agrees: bool,
    pub nominal: bool,
    /// For Type II: the first term of the max is strictly below the second.
    pub second_branch: bool,
    /// For Type II: the two terms differ.
    pub crossover: bool,
    /// For Type II: the unnormalised second term gives the oracle length.
    pub unnormalized_ok: Option<bool>,
    /// For Type III: `v(Delta) - 2v(I4) - 2L(e1)` over the oracle `L(e2)`.
    pub alternative_e2_ratio: Option<String>,
    pub tie: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn sample_rng(seed: u64, family: Family, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fam = Family::ALL.iter().position(|f| *f == family).unwrap() as u64;
    rng.set_stream((fam << 40) | index);
    rng
}

pub fn draw(seed: u64, family: Family, index: u64) -> (FamilySample, bool) {
    let forced = index % FORCE_EVERY == FORCE_EVERY - 1;
    (random_sample(family, forced, &mut sample_rng(seed, family, index)), forced)
}

pub fn check_sample(family: Family, index: u64, forced: bool, fs: &FamilySample) -> SampleRecord {
    let mut rec = SampleRecord {
        family,
        index,
        forced,
        sample: fs.clone(),
        tree_type: None,
        marked_type: None,
        lengths: vec![],
        oracle_marked_type: None,
        oracle_lengths: vec![],
        conditions_holding: 0,
        agrees: false,
        nominal: false,
        second_branch: false,
        crossover: false,
        unnormalized_ok: None,
        alternative_e2_ratio: None,
        tie: matches!(family, Family::III1 | Family::III2) && fs.k1 == fs.k2,
        error: None,
    };
    let res = (|| -> Result<()> {
        let tree = tree_from_roots(&fs.roots())?;
        rec.nominal = tree == fs.expected_tree();
        rec.oracle_marked_type = tree.marked_type();
        rec.oracle_lengths = tree.lengths().iter().map(fmt_rational).collect();
        let cin = ClassifierInput::from_fourone(&fs.form(), Backend::TAdic)?;
        rec.conditions_holding = conditions(&cin)?.count();
        let c = classify(&cin)?;
        rec.tree_type = Some(c.tree_type);
        rec.marked_type = c.marked_type;
        rec.lengths = c.lengths.iter().map(fmt_rational).collect();
        rec.agrees = c.marked_type == tree.marked_type() && c.lengths == tree.lengths();
        let v = &cin.quintic.valuations;
        let want = tree.lengths();
        match c.tree_type {
            TreeType::II => {
                let (first, second) = type_ii_terms(v);
                rec.crossover = first != second;
                rec.second_branch = first.clone().max(second) != first;
                rec.unnormalized_ok = Some(type_ii_length_unnormalized(v).finite() == want.first());
            }
            TreeType::III => {
                let (e1, _) = type_iii_lengths(v);
                let alt = type_iii_e2_alternative(v, &e1);
                let direct_e2 = total_length(v).sub(&e1);
                if let (Ext::Fin(a), Ext::Fin(b)) = (alt, direct_e2) {
                    if b != Rational::from_integer(0.into()) {
                        rec.alternative_e2_ratio = Some(fmt_rational(&(a / b)));
                    }
                }
            }
            TreeType::I => {}
        }
        Ok(())
    })();
    if let Err(e) = res {
        rec.error = Some(e.to_string());
        rec.agrees = false;
    }
    rec
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct FamilyCounts {
    pub samples: usize,
    pub agree: usize,
    pub nominal: usize,
    pub exclusive: usize,
    pub forced: usize,
    pub ties: usize,
    pub crossovers: usize,
    pub unnormalized_mismatch: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples_per_family: u64,
    pub families: BTreeMap<String, FamilyCounts>,
    pub total: usize,
    pub agree: usize,
    pub records: Vec<SampleRecord>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> Vec<&SampleRecord> {
        self.records.iter().filter(|r| !r.agrees || r.conditions_holding != 1).collect()
    }

    pub fn ok(&self) -> bool {
        self.mismatches().is_empty() && self.total > 0
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for (name, c) in &self.families {
            s.push_str(&format!(
                "{name:<6} {}/{} agree  exclusive {}/{}  ties {}  crossovers {}  forced {}\n",
                c.agree, c.samples, c.exclusive, c.samples, c.ties, c.crossovers, c.forced
            ));
        }
        s.push_str(&format!("total  {}/{} agree\n", self.agree, self.total));
        s
    }

    /// Mismatches as an error carrying the first few sample transcripts.
    pub fn into_result(self) -> Result<VerifyReport> {
        if self.ok() {
            return Ok(self);
        }
        let bad: Vec<String> = self
            .mismatches()
            .iter()
            .take(5)
            .map(|r| serde_json::to_string(r).unwrap_or_default())
            .collect();
        Err(Error::Mismatch(format!(
            "{} of {} samples disagree; first: {}",
            self.total - self.agree,
            self.total,
            bad.join("; ")
        )))
    }
}

pub fn verify(families: &[Family], samples: u64, seed: u64) -> VerifyReport {
    let jobs: Vec<(Family, u64)> = families
        .iter()
        .flat_map(|&f| (0..samples).map(move |i| (f, i)))
        .collect();
    let records: Vec<SampleRecord> = jobs
        .par_iter()
        .map(|&(f, i)| {
            let (fs, forced) = draw(seed, f, i);
            check_sample(f, i, forced, &fs)
        })
        .collect();
    let mut fams: BTreeMap<String, FamilyCounts> = BTreeMap::new();
    for r in &records {
        let c = fams.entry(r.family.name().to_string()).or_default();
        c.samples += 1;
        c.agree += r.agrees as usize;
        c.nominal += r.nominal as usize;
        c.exclusive += (r.conditions_holding == 1) as usize;
        c.forced += r.forced as usize;
        c.ties += r.tie as usize;
        c.crossovers += r.crossover as usize;
        c.unnormalized_mismatch += (r.unnormalized_ok == Some(false)) as usize;
        c.errors += r.error.is_some() as usize;
    }
    VerifyReport {
        seed,
        samples_per_family: samples,
        total: records.len(),
        agree: records.iter().filter(|r| r.agrees && r.conditions_holding == 1).count(),
        families: fams,
        records,
    }
}
