use serde::{Deserialize, Serialize};

use super::parse::{parse_ratfunc_at, split_list};
use crate::error::{Error, Result};
use crate::invariants::Backend;
use crate::numkernel::RatFunc;
use crate::oracle::{Point, RootConfig};
use crate::polyalg::{BinaryForm, FourOneForm};
use crate::ring::Ring;

pub const FORM_SCHEMA: &str = "tropinv.form/1";

/// A form as given by the user: exactly one of `quintic`, `q` with `l`, or
/// `roots`. Coefficients are listed from `x^n` down to `z^n`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormInput {
    #[serde(default = "form_schema")]
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quintic: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<String>>,
    /// Five points, `"inf"` allowed once.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<String>>,
    /// Index into `roots`; defaults to the infinite root, else the last.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<usize>,
    /// `"t-adic"` or `"p-adic:P"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
}

fn form_schema() -> String {
    FORM_SCHEMA.to_string()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Quintic(BinaryForm<RatFunc>),
    FourOne {
        form: FourOneForm<RatFunc>,
        roots: Option<RootConfig>,
    },
}

impl Parsed {
    pub fn kind(&self) -> &'static str {
        match self {
            Parsed::Quintic(_) => "quintic",
            Parsed::FourOne { roots: Some(_), .. } => "roots",
            Parsed::FourOne { .. } => "fourone",
        }
    }
}

pub fn parse_backend(s: &str) -> Result<Backend> {
    let s = s.trim();
    if s == "t-adic" || s == "t" {
        return Ok(Backend::TAdic);
    }
    let p = s
        .strip_prefix("p-adic:")
        .ok_or_else(|| Error::Usage(format!("unknown backend {s:?}; use t-adic or p-adic:P")))?;
    let p: u64 = p
        .parse()
        .map_err(|_| Error::Usage(format!("bad prime in backend {s:?}")))?;
    let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if !prime {
        return Err(Error::Usage(format!("{p} is not prime")));
    }
    Ok(Backend::PAdic(p))
}

pub fn backend_name(b: Backend) -> String {
    match b {
        Backend::TAdic => "t-adic".into(),
        Backend::PAdic(p) => format!("p-adic:{p}"),
    }
}

/// Parses a comma-separated list of expressions.
pub fn parse_list(src: &str) -> Result<Vec<RatFunc>> {
    split_list(src)
        .into_iter()
        .map(|(off, s)| parse_ratfunc_at(s, off))
        .collect()
}

fn parse_items(items: &[String]) -> Result<Vec<RatFunc>> {
    items.iter().map(|s| parse_ratfunc_at(s, 0)).collect()
}

fn parse_point(s: &str) -> Result<Point> {
    if s.trim() == "inf" {
        Ok(Point::Infinity)
    } else {
        Ok(Point::Finite(parse_ratfunc_at(s, 0)?))
    }
}

/// `(x - r z)`, or `z` for the point at infinity.
fn linear_factor(p: &Point) -> BinaryForm<RatFunc> {
    match p {
        Point::Infinity => BinaryForm::z(),
        Point::Finite(r) => BinaryForm::linear(RatFunc::one(), r.neg_ref()),
    }
}

/// The (4,1)-form whose `l` vanishes at the marked root and whose `q`
/// vanishes at the other four.
pub fn form_from_roots(rc: &RootConfig) -> FourOneForm<RatFunc> {
    let m = rc.marked().expect("marked root");
    let mut q = BinaryForm::constant(RatFunc::one());
    for (i, p) in rc.roots().iter().enumerate() {
        if i != m {
            q = q.mul(&linear_factor(p));
        }
    }
    FourOneForm {
        q,
        ell: linear_factor(&rc.roots()[m]),
    }
}

impl FormInput {
    pub fn quintic(coeffs: Vec<String>) -> Self {
        FormInput {
            schema: form_schema(),
            quintic: Some(coeffs),
            ..Default::default()
        }
    }

    pub fn fourone(q: Vec<String>, l: Vec<String>) -> Self {
        FormInput {
            schema: form_schema(),
            q: Some(q),
            l: Some(l),
            ..Default::default()
        }
    }

    pub fn roots(roots: Vec<String>, marked: Option<usize>) -> Self {
        FormInput {
            schema: form_schema(),
            roots: Some(roots),
            marked,
            ..Default::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: FormInput = serde_json::from_str(text)?;
        if v.schema != FORM_SCHEMA {
            return Err(Error::parse(0, format!("unsupported schema {:?}", v.schema)));
        }
        Ok(v)
    }

    pub fn backend(&self) -> Result<Backend> {
        self.backend.as_deref().map_or(Ok(Backend::TAdic), parse_backend)
    }

    pub fn parse(&self) -> Result<Parsed> {
        let given = [self.quintic.is_some(), self.q.is_some() || self.l.is_some(), self.roots.is_some()];
        if given.iter().filter(|b| **b).count() != 1 {
            return Err(Error::Usage("give exactly one of: quintic coefficients, q and l, roots".into()));
        }
        if let Some(c) = &self.quintic {
            if c.len() != 6 {
                return Err(Error::Usage(format!("a quintic needs 6 coefficients, got {}", c.len())));
            }
            return Ok(Parsed::Quintic(BinaryForm::new(parse_items(c)?)));
        }
        if let Some(r) = &self.roots {
            if r.len() != 5 {
                return Err(Error::Usage(format!("five roots expected, got {}", r.len())));
            }
            let pts: Vec<Point> = r.iter().map(|s| parse_point(s)).collect::<Result<_>>()?;
            let marked = match self.marked {
                Some(m) if m >= 5 => return Err(Error::Usage(format!("marked index {m} out of range"))),
                Some(m) => m,
                None => pts.iter().position(|p| *p == Point::Infinity).unwrap_or(4),
            };
            let rc = RootConfig::new(pts, Some(marked))?;
            return Ok(Parsed::FourOne {
                form: form_from_roots(&rc),
                roots: Some(rc),
            });
        }
        let (Some(q), Some(l)) = (&self.q, &self.l) else {
            return Err(Error::Usage("a (4,1)-form needs both q and l".into()));
        };
        if q.len() != 5 || l.len() != 2 {
            return Err(Error::Usage(format!(
                "a (4,1)-form needs 5 + 2 coefficients, got {} + {}",
                q.len(),
                l.len()
            )));
        }
        Ok(Parsed::FourOne {
            form: FourOneForm::new(BinaryForm::new(parse_items(q)?), BinaryForm::new(parse_items(l)?))?,
            roots: None,
        })
    }
}
