//! Tree type, marked tree type and edge lengths from invariant valuations,
//! and the reduction type of the associated Picard curve.

mod ext;
mod skeleton;

use serde::Serialize;

pub use ext::{lin, Ext};
pub use skeleton::{picard_skeleton, Edge, PicardSkeleton, Vertex};

use crate::error::{Error, Result};
use crate::invariants::{
    fourone_valuations, quintic_valuations, standard_position_with, Backend, FourOneInv, Specialized,
};
use crate::numkernel::{int, rat, val_p, Rational, RatFunc, Valuation};
use crate::oracle::MarkedType;
use crate::polyalg::{BinaryForm, FourOneForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TreeType {
    I,
    II,
    III,
}

impl TreeType {
    pub fn name(self) -> &'static str {
        match self {
            TreeType::I => "I",
            TreeType::II => "II",
            TreeType::III => "III",
        }
    }
}

pub fn unmarked(m: MarkedType) -> TreeType {
    match m {
        MarkedType::I => TreeType::I,
        MarkedType::II1 | MarkedType::II2 => TreeType::II,
        MarkedType::III1 | MarkedType::III2 => TreeType::III,
    }
}

const I4: usize = 0;
const I18: usize = 3;
const DELTA: usize = 4;
const H: usize = 5;
const J2: usize = 0;
const J5: usize = 2;

/// Valuations of `S = (I4, I8, I12, I18, Delta, H)` and, for (4,1)-forms,
/// of `S' = (j2, j3, j5, j6, j9)`. For (4,1)-forms both are read at the
/// standard position, so they can differ from the input's own valuations
/// by a multiple of the weights.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifierInput {
    pub quintic: Specialized,
    pub fourone: Option<Specialized>,
    pub residue_characteristic: u64,
}

fn check_backend(backend: Backend) -> Result<()> {
    if matches!(backend.residue_characteristic(), 2 | 3) {
        return Err(Error::Usage(format!(
            "residue characteristic {} is not supported",
            backend.residue_characteristic()
        )));
    }
    Ok(())
}

impl ClassifierInput {
    pub fn from_quintic(f: &BinaryForm<RatFunc>, backend: Backend) -> Result<Self> {
        check_backend(backend)?;
        Ok(ClassifierInput {
            quintic: quintic_valuations(f, backend)?,
            fourone: None,
            residue_characteristic: backend.residue_characteristic(),
        })
    }

    pub fn from_fourone(g: &FourOneForm<RatFunc>, backend: Backend) -> Result<Self> {
        check_backend(backend)?;
        let sp = match backend {
            Backend::TAdic => standard_position_with(g, |x| x.val_t())?,
            Backend::PAdic(p) => {
                let coeffs: Vec<_> = g.q.coeffs().iter().chain(g.ell.coeffs()).collect();
                if coeffs.iter().any(|c| c.as_constant().is_none()) {
                    return Err(Error::Usage("the p-adic backend accepts rational numbers only, not t".into()));
                }
                standard_position_with(g, |x| val_p(&x.as_constant().unwrap(), p))?
            }
        };
        let js = fourone_valuations(&sp.form, backend)?;
        let js = js.shifted(|i| sp.fourone_shift(FourOneInv::ALL[i]));
        // homogeneous combinations do not see the coordinate change, and the
        // standard position keeps the evaluation window short
        let qs = quintic_valuations(&sp.form.product(), backend)?;
        let qs = qs.shifted(|i| sp.quintic_shift(qs.degrees[i]));
        Ok(ClassifierInput {
            quintic: qs,
            fourone: Some(js),
            residue_characteristic: backend.residue_characteristic(),
        })
    }

    fn v(&self) -> &[Valuation] {
        &self.quintic.valuations
    }

    fn degree(&self, i: usize) -> Rational {
        int(self.quintic.degrees[i] as i64)
    }
}

/// Which of the three type conditions hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub type_i: bool,
    pub type_ii: bool,
    pub type_iii: bool,
}

impl Conditions {
    pub fn count(&self) -> usize {
        [self.type_i, self.type_ii, self.type_iii].iter().filter(|b| **b).count()
    }
}

pub fn conditions(cin: &ClassifierInput) -> Result<Conditions> {
    let v = cin.v();
    if v[DELTA].is_inf() {
        return Err(Error::NonSeparable("the discriminant vanishes".into()));
    }
    let n = v.len();
    let type_i = (0..n).all(|i| lin(&[(int(8), i), (-cin.degree(i), DELTA)], v).ge0());
    let a = lin(&[(int(1), DELTA), (int(-2), I4)], v);
    let type_iii = a.gt0() && lin(&[(int(1), H), (int(-3), I4)], v).gt0();
    let type_ii = if cin.residue_characteristic == 11 {
        !type_i && !type_iii
    } else {
        (a.gt0() || lin(&[(int(9), DELTA), (int(-4), I18)], v).gt0())
            && (0..n).all(|i| lin(&[(int(12), i), (-cin.degree(i), H)], v).ge0())
    };
    Ok(Conditions {
        type_i,
        type_ii,
        type_iii,
    })
}

/// Unmarked tree type; fails unless exactly one condition holds.
pub fn tree_type(cin: &ClassifierInput) -> Result<TreeType> {
    let c = conditions(cin)?;
    match (c.count(), c) {
        (1, Conditions { type_i: true, .. }) => Ok(TreeType::I),
        (1, Conditions { type_ii: true, .. }) => Ok(TreeType::II),
        (1, _) => Ok(TreeType::III),
        _ => Err(Error::Internal(format!("type conditions are not exclusive: {c:?}"))),
    }
}

/// `5 v(j2) - 2 v(j5)` at the standard position.
pub fn marked_index(js: &Specialized) -> Ext {
    lin(&[(int(5), J2), (int(-2), J5)], &js.valuations)
}

pub fn marked_tree_type(cin: &ClassifierInput) -> Result<MarkedType> {
    let js = cin
        .fourone
        .as_ref()
        .ok_or_else(|| Error::Usage("a marked type needs a (4,1)-form".into()))?;
    let tt = tree_type(cin)?;
    if tt == TreeType::I {
        return Ok(MarkedType::I);
    }
    let m = marked_index(js);
    let first = match m {
        Ext::Fin(ref q) if *q == int(0) => false,
        ref e if e.gt0() => true,
        e => return Err(Error::Internal(format!("5 v(j2) - 2 v(j5) = {e:?} is not >= 0"))),
    };
    Ok(match (tt, first) {
        (TreeType::II, true) => MarkedType::II1,
        (TreeType::II, false) => MarkedType::II2,
        (_, true) => MarkedType::III1,
        (_, false) => MarkedType::III2,
    })
}

/// `(1/2)(v(Delta) - 2 v(I4))`: the total internal length for types II and III.
pub fn total_length(v: &[Valuation]) -> Ext {
    lin(&[(rat(1, 2), DELTA), (int(-1), I4)], v)
}

/// The one-edge length: the larger of `(1/2)(v(Delta) - 2v(I4))` and
/// `(1/18)(9 v(Delta) - 4 v(I18))`.
pub fn type_ii_length(v: &[Valuation]) -> Ext {
    let (a, b) = type_ii_terms(v);
    a.max(b)
}

/// The two terms of the Type II maximum.
pub fn type_ii_terms(v: &[Valuation]) -> (Ext, Ext) {
    (total_length(v), lin(&[(rat(1, 2), DELTA), (rat(-2, 9), I18)], v))
}

/// Same, with the second term written `(1/3)(2 v(Delta) - v(I18))`. This is
/// only right when `v(I_d) = (d/2) v(t1)` on the nose; it is kept so the
/// difference can be measured.
pub fn type_ii_length_unnormalized(v: &[Valuation]) -> Ext {
    total_length(v).max(lin(&[(rat(2, 3), DELTA), (rat(-1, 3), I18)], v))
}

/// `L(e1) = min((1/2)(v(I18) - (9/2) v(I4)), (1/4)(v(Delta) - 2 v(I4)))` and
/// `L(e2) = (1/2)(v(Delta) - 2 v(I4)) - L(e1)`.
pub fn type_iii_lengths(v: &[Valuation]) -> (Ext, Ext) {
    let e1 = lin(&[(rat(1, 2), I18), (rat(-9, 4), I4)], v).min(lin(&[(rat(1, 4), DELTA), (rat(-1, 2), I4)], v));
    let e2 = total_length(v).sub(&e1);
    (e1, e2)
}

/// `v(Delta) - 2 v(I4) - 2 L(e1)`, the other way of writing `L(e2)`.
pub fn type_iii_e2_alternative(v: &[Valuation], e1: &Ext) -> Ext {
    let twice = match e1 {
        Ext::Fin(q) => Ext::Fin(q * int(2)),
        e => e.clone(),
    };
    lin(&[(int(1), DELTA), (int(-2), I4)], v).sub(&twice)
}

/// `(1/10)(5 v(j2) - 2 v(j5))`: the edge next to the marked leaf.
pub fn marked_edge_length(js: &Specialized) -> Ext {
    lin(&[(rat(1, 2), J2), (rat(-1, 5), J5)], &js.valuations)
}

fn positive(e: Ext, what: &str) -> Result<Rational> {
    match e {
        Ext::Fin(q) if q > int(0) => Ok(q),
        e => Err(Error::Internal(format!("{what} is {e:?}, not a positive rational"))),
    }
}

/// Edge lengths: empty for I, one for II, two for III. Type III lengths are
/// ascending, except III.1 where the edge at the marked leaf comes first.
pub fn edge_lengths(cin: &ClassifierInput, tt: TreeType, marked: Option<MarkedType>) -> Result<Vec<Rational>> {
    let v = cin.v();
    match tt {
        TreeType::I => Ok(vec![]),
        TreeType::II => Ok(vec![positive(type_ii_length(v), "L(e1)")?]),
        TreeType::III if marked == Some(MarkedType::III1) => {
            let js = cin.fourone.as_ref().expect("marked type implies j valuations");
            let e1 = positive(marked_edge_length(js), "L(e1)")?;
            let e2 = positive(total_length(v).sub(&Ext::Fin(e1.clone())), "L(e2)")?;
            Ok(vec![e1, e2])
        }
        TreeType::III => {
            let (e1, e2) = type_iii_lengths(v);
            let mut l = vec![positive(e1, "L(e1)")?, positive(e2, "L(e2)")?];
            l.sort();
            Ok(l)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub tree_type: TreeType,
    pub marked_type: Option<MarkedType>,
    #[serde(serialize_with = "crate::numkernel::serde_rational::ser_vec")]
    pub lengths: Vec<Rational>,
    pub skeleton: Option<PicardSkeleton>,
}

pub fn classify(cin: &ClassifierInput) -> Result<Classification> {
    let tree_type = tree_type(cin)?;
    let marked_type = cin.fourone.as_ref().map(|_| marked_tree_type(cin)).transpose()?;
    if let Some(m) = marked_type {
        if unmarked(m) != tree_type {
            return Err(Error::Internal(format!("{} does not refine {}", m.name(), tree_type.name())));
        }
    }
    let lengths = edge_lengths(cin, tree_type, marked_type)?;
    let skeleton = marked_type.map(|m| picard_skeleton(m, &lengths)).transpose()?;
    Ok(Classification {
        tree_type,
        marked_type,
        lengths,
        skeleton,
    })
}
