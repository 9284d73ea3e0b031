use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::{fmt_rational, Rational, RatFunc, Valuation};
use crate::polyalg::Mobius;
use crate::ring::{Field, Ring};

/// A point of the projective line over `Q(t)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Finite(RatFunc),
    Infinity,
}

impl Point {
    pub fn int(n: i64) -> Self {
        Point::Finite(RatFunc::constant(crate::numkernel::int(n)))
    }

    /// Image under `x -> (a x + b) / (c x + d)`.
    pub fn moved(&self, m: &Mobius<Rational>) -> Point {
        let k = |q: &Rational| RatFunc::from_rational(q);
        match self {
            Point::Infinity => {
                if m.c.is_zero_elt() {
                    Point::Infinity
                } else {
                    Point::Finite(k(&(&m.a / &m.c)))
                }
            }
            Point::Finite(x) => {
                let num = k(&m.a).mul_ref(x).add_ref(&k(&m.b));
                let den = k(&m.c).mul_ref(x).add_ref(&k(&m.d));
                match den.inv_ref() {
                    None => Point::Infinity,
                    Some(i) => Point::Finite(num.mul_ref(&i)),
                }
            }
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(x) => write!(f, "{x}"),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

/// Five distinct points, one of them optionally marked.
#[derive(Clone, Debug, PartialEq)]
pub struct RootConfig {
    roots: Vec<Point>,
    marked: Option<usize>,
}

impl RootConfig {
    pub fn new(roots: Vec<Point>, marked: Option<usize>) -> Result<Self> {
        if roots.len() != 5 {
            return Err(Error::Domain(format!("five roots expected, got {}", roots.len())));
        }
        if roots.iter().filter(|p| matches!(p, Point::Infinity)).count() > 1 {
            return Err(Error::NonSeparable("infinity listed twice".into()));
        }
        for i in 0..5 {
            for j in i + 1..5 {
                if roots[i] == roots[j] {
                    return Err(Error::NonSeparable(format!("roots {i} and {j} coincide")));
                }
            }
        }
        if marked.is_some_and(|m| m >= 5) {
            return Err(Error::Domain("marked index out of range".into()));
        }
        Ok(RootConfig { roots, marked })
    }

    pub fn roots(&self) -> &[Point] {
        &self.roots
    }

    pub fn marked(&self) -> Option<usize> {
        self.marked
    }

    /// `x -> 1/(x - c)` with `c` the least non-negative integer that is not
    /// a root, or the identity when every root is finite.
    pub fn default_move(&self) -> Mobius<Rational> {
        if !self.roots.contains(&Point::Infinity) {
            return Mobius::identity();
        }
        let c = (0i64..)
            .find(|&c| !self.roots.contains(&Point::int(c)))
            .expect("five roots exclude at most five integers");
        Mobius {
            a: Rational::from_integer(0.into()),
            b: Rational::from_integer(1.into()),
            c: Rational::from_integer(1.into()),
            d: Rational::from_integer((-c).into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Topology {
    Star,
    OneSplit,
    Caterpillar,
}

/// Marked tree types of five leaves, one of them marked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MarkedType {
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

impl MarkedType {
    pub fn name(self) -> &'static str {
        match self {
            MarkedType::I => "I",
            MarkedType::II1 => "II.1",
            MarkedType::II2 => "II.2",
            MarkedType::III1 => "III.1",
            MarkedType::III2 => "III.2",
        }
    }
}

/// A nontrivial split of the five leaves, named by its two-element side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub pair: [usize; 2],
    #[serde(serialize_with = "crate::numkernel::serde_rational::ser")]
    pub length: Rational,
}

/// Metric tree on leaves `0..5` with only internal edges recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricTree5 {
    pub topology: Topology,
    /// Sorted by pair.
    pub splits: Vec<Split>,
    pub marked: Option<usize>,
}

impl MetricTree5 {
    pub fn new(mut splits: Vec<Split>, marked: Option<usize>) -> Result<Self> {
        for s in &mut splits {
            s.pair.sort_unstable();
        }
        splits.sort_by_key(|s| s.pair);
        let topology = match splits.len() {
            0 => Topology::Star,
            1 => Topology::OneSplit,
            2 => {
                let [a, b] = [&splits[0].pair, &splits[1].pair];
                if a.iter().any(|x| b.contains(x)) {
                    return Err(Error::Internal("incompatible splits".into()));
                }
                Topology::Caterpillar
            }
            n => return Err(Error::Internal(format!("{n} splits on five leaves"))),
        };
        Ok(MetricTree5 {
            topology,
            splits,
            marked,
        })
    }

    /// The leaf between the two cherries of a caterpillar.
    pub fn middle_leaf(&self) -> Option<usize> {
        (self.topology == Topology::Caterpillar).then(|| {
            (0..5)
                .find(|i| self.splits.iter().all(|s| !s.pair.contains(i)))
                .unwrap()
        })
    }

    pub fn marked_type(&self) -> Option<MarkedType> {
        let m = self.marked?;
        Some(match self.topology {
            Topology::Star => MarkedType::I,
            Topology::OneSplit if self.splits[0].pair.contains(&m) => MarkedType::II1,
            Topology::OneSplit => MarkedType::II2,
            Topology::Caterpillar if self.middle_leaf() == Some(m) => MarkedType::III2,
            Topology::Caterpillar => MarkedType::III1,
        })
    }

    /// Edge lengths in the reporting order: sorted ascending, except that
    /// for a mark on a cherry the edge of that cherry comes first.
    pub fn lengths(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.splits.iter().map(|s| s.length.clone()).collect();
        if self.marked_type() == Some(MarkedType::III1) {
            let m = self.marked.unwrap();
            let i = self.splits.iter().position(|s| s.pair.contains(&m)).unwrap();
            v.swap(0, i);
        } else {
            v.sort();
        }
        v
    }

    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut s = String::from("graph tree {\n");
        let inner: Vec<String> = match self.topology {
            Topology::Star => vec!["c".into()],
            Topology::OneSplit => vec!["u".into(), "w".into()],
            Topology::Caterpillar => vec!["u".into(), "m".into(), "w".into()],
        };
        for n in &inner {
            s.push_str(&format!("  {n} [shape=point];\n"));
        }
        for (i, l) in labels.iter().enumerate() {
            let mark = if self.marked == Some(i) { ", style=bold" } else { "" };
            s.push_str(&format!("  leaf{i} [label=\"{l}\"{mark}];\n"));
        }
        let attach = |i: usize| -> &str {
            match self.topology {
                Topology::Star => "c",
                Topology::OneSplit => {
                    if self.splits[0].pair.contains(&i) {
                        "u"
                    } else {
                        "w"
                    }
                }
                Topology::Caterpillar => {
                    if self.splits[0].pair.contains(&i) {
                        "u"
                    } else if self.splits[1].pair.contains(&i) {
                        "w"
                    } else {
                        "m"
                    }
                }
            }
        };
        for i in 0..labels.len() {
            s.push_str(&format!("  {} -- leaf{i};\n", attach(i)));
        }
        match self.topology {
            Topology::Star => {}
            Topology::OneSplit => s.push_str(&format!(
                "  u -- w [label=\"{}\"];\n",
                fmt_rational(&self.splits[0].length)
            )),
            Topology::Caterpillar => {
                s.push_str(&format!("  u -- m [label=\"{}\"];\n", fmt_rational(&self.splits[0].length)));
                s.push_str(&format!("  m -- w [label=\"{}\"];\n", fmt_rational(&self.splits[1].length)));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// `D` is minus a Gromov product: the split of a quartet is its smallest
/// pairing, the other two tie, and the gap is the internal length.
fn quartet_split(d: &[[Rational; 5]; 5], q: [usize; 4]) -> Result<(usize, Rational)> {
    let [i, j, k, l] = q;
    let sums = [
        &d[i][j] + &d[k][l],
        &d[i][k] + &d[j][l],
        &d[i][l] + &d[j][k],
    ];
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|a, b| sums[*a].cmp(&sums[*b]));
    if sums[idx[1]] != sums[idx[2]] {
        return Err(Error::Internal(format!("four-point condition fails on quartet {q:?}")));
    }
    Ok((idx[0], &sums[idx[2]] - &sums[idx[0]]))
}

/// Marked metric tree of the root configuration via the four-point
/// condition, after moving every root to a finite point with `mv`.
pub fn tree_from_roots_with(rc: &RootConfig, mv: &Mobius<Rational>) -> Result<MetricTree5> {
    let pts: Vec<RatFunc> = rc
        .roots
        .iter()
        .map(|p| match p.moved(mv) {
            Point::Finite(x) => Ok(x),
            Point::Infinity => Err(Error::Domain("the move sends a root to infinity".into())),
        })
        .collect::<Result<_>>()?;
    let zero = Rational::from_integer(0.into());
    let mut d: [[Rational; 5]; 5] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                d[i][j] = match pts[i].sub_ref(&pts[j]).val_t() {
                    Valuation::Finite(v) => -v,
                    Valuation::Inf => return Err(Error::NonSeparable(format!("roots {i} and {j} coincide"))),
                };
            }
        }
    }
    let mut splits = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            let rest: Vec<usize> = (0..5).filter(|&x| x != a && x != b).collect();
            let mut len: Option<Rational> = None;
            for (u, v) in [(0, 1), (0, 2), (1, 2)] {
                let (pairing, gap) = quartet_split(&d, [a, b, rest[u], rest[v]])?;
                // pairing 0 is {a,b}|{rest[u],rest[v]}
                let l = if pairing == 0 { gap } else { zero.clone() };
                len = Some(match len {
                    Some(x) if x <= l => x,
                    _ => l,
                });
            }
            let len = len.unwrap();
            if len > zero {
                splits.push(Split { pair: [a, b], length: len });
            }
        }
    }
    MetricTree5::new(splits, rc.marked)
}

pub fn tree_from_roots(rc: &RootConfig) -> Result<MetricTree5> {
    tree_from_roots_with(rc, &rc.default_move())
}

impl fmt::Display for MetricTree5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.topology)?;
        for s in &self.splits {
            write!(f, " {{{},{}}}:{}", s.pair[0], s.pair[1], fmt_rational(&s.length))?;
        }
        Ok(())
    }
}
