//! Text input, JSON schemas and reports.

mod input;
mod parse;
mod report;

pub use input::{backend_name, form_from_roots, parse_backend, parse_list, FormInput, Parsed, FORM_SCHEMA};
pub use parse::{parse_ratfunc, parse_ratfunc_at, split_list};
pub use report::{analyze, AnalyzeOptions, InvariantEntry, OracleVerdict, Report, TropicalReport, REPORT_SCHEMA};
