use serde::Serialize;

use super::input::{backend_name, Parsed};
use crate::classify::{classify, conditions, ClassifierInput, Classification, Conditions, PicardSkeleton, TreeType};
use crate::error::{Error, Result};
use crate::invariants::{
    check_separable, check_separable_quintic, evaluate_fourone, evaluate_quintic, fourone_valuations,
    quintic_valuations, tropicalize, Backend, Specialized,
};
use crate::numkernel::{fmt_rational, Valuation};
use crate::oracle::{tree_from_roots, MarkedType, MetricTree5};

pub const REPORT_SCHEMA: &str = "tropinv.report/1";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantEntry {
    pub name: String,
    pub degree: u32,
    pub valuation: Valuation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TropicalReport {
    pub weights: Vec<u32>,
    pub valuations: Vec<Valuation>,
    pub canonical: Vec<Valuation>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleVerdict {
    pub tree: MetricTree5,
    pub marked_type: Option<MarkedType>,
    pub lengths: Vec<String>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub kind: &'static str,
    pub backend: String,
    pub residue_characteristic: u64,
    pub invariants: Vec<InvariantEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fourone_invariants: Option<Vec<InvariantEntry>>,
    pub tropical_point: TropicalReport,
    pub conditions: Conditions,
    pub tree_type: TreeType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marked_type: Option<MarkedType>,
    pub lengths: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<PicardSkeleton>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Include exact invariant values.
    pub values: bool,
}

fn entries(s: &Specialized, values: Option<Vec<String>>) -> Vec<InvariantEntry> {
    (0..s.names.len())
        .map(|i| InvariantEntry {
            name: s.names[i].to_string(),
            degree: s.degrees[i],
            valuation: s.valuations[i].clone(),
            residue: s.residues[i].as_ref().map(fmt_rational),
            value: values.as_ref().map(|v| v[i].clone()),
        })
        .collect()
}

pub fn analyze(parsed: &Parsed, backend: Backend, opts: AnalyzeOptions) -> Result<Report> {
    let mut notes = Vec::new();
    let (vals, quintic, fourone, cin) = match parsed {
        Parsed::Quintic(f) => {
            check_separable_quintic(f)?;
            let vals = quintic_valuations(f, backend)?;
            let values = opts
                .values
                .then(|| evaluate_quintic(f).map(|v| v.iter().map(|x| x.to_string()).collect()))
                .transpose()?;
            (vals.clone(), entries(&vals, values), None, ClassifierInput::from_quintic(f, backend)?)
        }
        Parsed::FourOne { form, .. } => {
            check_separable(form)?;
            let f = form.product();
            let vals = quintic_valuations(&f, backend)?;
            let js = fourone_valuations(form, backend)?;
            let (qv, jv) = if opts.values {
                let q: Vec<String> = evaluate_quintic(&f)?.iter().map(|x| x.to_string()).collect();
                let j: Vec<String> = evaluate_fourone(form)?.iter().map(|x| x.to_string()).collect();
                (Some(q), Some(j))
            } else {
                (None, None)
            };
            (vals.clone(), entries(&vals, qv), Some(entries(&js, jv)), ClassifierInput::from_fourone(form, backend)?)
        }
    };
    let tp = tropicalize(&vals);
    let tropical_point = TropicalReport {
        canonical: tp.canonical(),
        weights: tp.weights,
        valuations: tp.valuations,
    };
    let conds = conditions(&cin)?;
    let Classification {
        tree_type,
        marked_type,
        lengths,
        skeleton,
    } = classify(&cin)?;
    if backend.residue_characteristic() == 11 {
        notes.push("residue characteristic 11: Type II is assigned by elimination".into());
    }
    let oracle = match parsed {
        Parsed::FourOne { roots: Some(rc), .. } if backend == Backend::TAdic => {
            let tree = tree_from_roots(rc)?;
            let agrees = tree.marked_type() == marked_type && tree.lengths() == lengths;
            Some(OracleVerdict {
                marked_type: tree.marked_type(),
                lengths: tree.lengths().iter().map(fmt_rational).collect(),
                tree,
                agrees,
            })
        }
        Parsed::FourOne { roots: Some(_), .. } => {
            notes.push("the oracle needs the t-adic backend; skipped".into());
            None
        }
        _ => None,
    };
    Ok(Report {
        schema: REPORT_SCHEMA,
        kind: parsed.kind(),
        backend: backend_name(backend),
        residue_characteristic: backend.residue_characteristic(),
        invariants: quintic,
        fourone_invariants: fourone,
        tropical_point,
        conditions: conds,
        tree_type,
        marked_type,
        lengths: lengths.iter().map(fmt_rational).collect(),
        skeleton,
        oracle,
        notes,
    })
}

fn table_rows(out: &mut String, title: &str, rows: &[InvariantEntry]) {
    out.push_str(&format!("{title}\n"));
    for e in rows {
        out.push_str(&format!("  {:<6} deg {:>2}  v = {:<6}", e.name, e.degree, e.valuation.to_string()));
        if let Some(r) = &e.residue {
            out.push_str(&format!("  residue {r}"));
        }
        if let Some(v) = &e.value {
            out.push_str(&format!("  value {v}"));
        }
        out.push('\n');
    }
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn invariants_table(&self) -> String {
        let mut s = format!("backend {}\n", self.backend);
        table_rows(&mut s, "quintic invariants", &self.invariants);
        if let Some(j) = &self.fourone_invariants {
            table_rows(&mut s, "(4,1) invariants", j);
        }
        s
    }

    pub fn type_line(&self) -> String {
        match self.marked_type {
            Some(m) => format!("Type {} (marked {})", self.tree_type.name(), m.name()),
            None => format!("Type {}", self.tree_type.name()),
        }
    }

    pub fn lengths_line(&self) -> String {
        if self.lengths.is_empty() {
            "no internal edges".into()
        } else {
            format!("lengths {}", self.lengths.join(", "))
        }
    }

    pub fn skeleton_table(&self) -> Result<String> {
        let sk = self
            .skeleton
            .as_ref()
            .ok_or_else(|| Error::Usage("the Picard skeleton needs a (4,1)-form or roots".into()))?;
        let mut s = format!("{}\n", self.type_line());
        let w: Vec<String> = sk.vertices.iter().map(|v| v.weight.to_string()).collect();
        s.push_str(&format!("weights {}\n", w.join(", ")));
        for e in &sk.edges {
            s.push_str(&format!(
                "edge v{} -- v{} length {} x{}\n",
                e.endpoints[0],
                e.endpoints[1],
                fmt_rational(&e.length),
                e.multiplicity
            ));
        }
        s.push_str(&format!("betti {}  genus {}\n", sk.betti, sk.genus()));
        Ok(s)
    }
}
