use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tropinv::io::{analyze, parse_backend, parse_list, split_list, AnalyzeOptions, FormInput, Parsed, Report, FORM_SCHEMA};
use tropinv::oracle::{tree_from_roots, Family};
use tropinv::verify::verify;
use tropinv::{selftest, Error, Result};

#[derive(Parser)]
#[command(name = "tropinv", version, about = "Tropical invariants of binary quintics and Picard curve reduction types")]
struct Cli {
    /// Output format; dot is accepted by picard and oracle only.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// t-adic, or p-adic:P for a prime P.
    #[arg(long, global = true)]
    backend: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant valuations and the tropical point.
    Invariants {
        #[command(flatten)]
        form: FormArgs,
        /// Also print exact invariant values.
        #[arg(long)]
        values: bool,
    },
    /// Tree type, and marked type for (4,1) input.
    Classify(FormArgs),
    /// Internal edge lengths of the tree.
    Lengths(FormArgs),
    /// Full report with the Picard curve skeleton.
    Picard(FormArgs),
    /// Metric tree computed directly from the roots.
    Oracle(FormArgs),
    /// Classifier against oracle on random family members.
    Verify {
        /// `all` or a comma list of I, II.1, II.2, III.1, III.2.
        #[arg(long, default_value = "all")]
        families: String,
        #[arg(long, default_value_t = 250)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Recompute the universal table and check the stored identities.
    Selftest,
}

#[derive(Args)]
struct FormArgs {
    /// Six quintic coefficients, x^5 first: "0,1,-3-t^2,..".
    #[arg(long)]
    quintic: Option<String>,
    /// Five quartic coefficients of q.
    #[arg(long)]
    q: Option<String>,
    /// Two coefficients of l.
    #[arg(long)]
    l: Option<String>,
    /// Five roots; "inf" allowed once.
    #[arg(long)]
    roots: Option<String>,
    /// Index of the marked root.
    #[arg(long)]
    marked: Option<usize>,
    /// FormInput JSON file, "-" for stdin.
    #[arg(long, conflicts_with_all = ["quintic", "q", "l", "roots"])]
    input: Option<PathBuf>,
}

/// Splits a flag value into items after checking every item parses, so
/// offsets in errors refer to the whole flag.
fn items(src: &str) -> Result<Vec<String>> {
    parse_list(src)?;
    Ok(split_list(src).into_iter().map(|(_, s)| s.trim().to_string()).collect())
}

fn roots_items(src: &str) -> Result<Vec<String>> {
    let pieces = split_list(src);
    for (off, s) in &pieces {
        if s.trim() != "inf" {
            tropinv::io::parse_ratfunc_at(s, *off)?;
        }
    }
    Ok(pieces.into_iter().map(|(_, s)| s.trim().to_string()).collect())
}

impl FormArgs {
    fn load(&self) -> Result<FormInput> {
        if let Some(path) = &self.input {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(path)?
            };
            return FormInput::from_json(&text);
        }
        Ok(FormInput {
            quintic: self.quintic.as_deref().map(items).transpose()?,
            q: self.q.as_deref().map(items).transpose()?,
            l: self.l.as_deref().map(items).transpose()?,
            roots: self.roots.as_deref().map(roots_items).transpose()?,
            marked: self.marked,
            schema: FORM_SCHEMA.into(),
            ..Default::default()
        })
    }
}

fn report(form: &FormArgs, backend: &Option<String>, values: bool) -> Result<(Parsed, Report)> {
    let fi = form.load()?;
    let b = match backend {
        Some(s) => parse_backend(s)?,
        None => fi.backend()?,
    };
    let parsed = fi.parse()?;
    let r = analyze(&parsed, b, AnalyzeOptions { values })?;
    Ok((parsed, r))
}

fn no_dot(format: Format, cmd: &str) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Usage(format!("{cmd} has no dot output")));
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn run(cli: Cli) -> Result<String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Invariants { form, values } => {
            no_dot(fmt, "invariants")?;
            let (_, r) = report(form, &cli.backend, *values)?;
            match fmt {
                Format::Json => pretty(&json!({
                    "schema": r.schema,
                    "backend": r.backend,
                    "invariants": r.invariants,
                    "fourone_invariants": r.fourone_invariants,
                    "tropical_point": r.tropical_point,
                })),
                _ => {
                    let canon: Vec<String> = r.tropical_point.canonical.iter().map(|v| v.to_string()).collect();
                    Ok(format!("{}tropical point [{}]\n", r.invariants_table(), canon.join(" : ")))
                }
            }
        }
        Command::Classify(form) => {
            no_dot(fmt, "classify")?;
            let (_, r) = report(form, &cli.backend, false)?;
            match fmt {
                Format::Json => r.to_json().map(|s| s + "\n"),
                _ => {
                    let mut s = format!("{}\n", r.type_line());
                    for n in &r.notes {
                        s.push_str(&format!("note: {n}\n"));
                    }
                    Ok(s)
                }
            }
        }
        Command::Lengths(form) => {
            no_dot(fmt, "lengths")?;
            let (_, r) = report(form, &cli.backend, false)?;
            match fmt {
                Format::Json => pretty(&json!({
                    "schema": r.schema,
                    "tree_type": r.tree_type,
                    "marked_type": r.marked_type,
                    "lengths": r.lengths,
                })),
                _ => Ok(format!("{}\n{}\n", r.type_line(), r.lengths_line())),
            }
        }
        Command::Picard(form) => {
            let (parsed, r) = report(form, &cli.backend, false)?;
            if matches!(parsed, Parsed::Quintic(_)) {
                return Err(Error::Usage("picard needs a (4,1)-form or roots".into()));
            }
            match fmt {
                Format::Json => r.to_json().map(|s| s + "\n"),
                Format::Dot => Ok(r.skeleton.as_ref().expect("(4,1) input has a skeleton").to_dot()),
                Format::Table => {
                    let mut s = r.skeleton_table()?;
                    s.push_str(&format!("{}\n", r.lengths_line()));
                    if let Some(o) = &r.oracle {
                        s.push_str(&format!("oracle agrees: {}\n", o.agrees));
                    }
                    for n in &r.notes {
                        s.push_str(&format!("note: {n}\n"));
                    }
                    Ok(s)
                }
            }
        }
        Command::Oracle(form) => {
            let fi = form.load()?;
            let b = match &cli.backend {
                Some(s) => parse_backend(s)?,
                None => fi.backend()?,
            };
            if b != tropinv::invariants::Backend::TAdic {
                return Err(Error::Usage("the oracle needs the t-adic backend".into()));
            }
            let Parsed::FourOne { roots: Some(rc), .. } = fi.parse()? else {
                return Err(Error::Usage("oracle needs --roots".into()));
            };
            let tree = tree_from_roots(&rc)?;
            match fmt {
                Format::Json => pretty(&json!({
                    "tree": tree,
                    "marked_type": tree.marked_type(),
                    "lengths": tree.lengths().iter().map(tropinv::numkernel::fmt_rational).collect::<Vec<_>>(),
                })),
                Format::Dot => {
                    let labels: Vec<String> = rc.roots().iter().map(|p| p.to_string()).collect();
                    Ok(tree.to_dot(&labels))
                }
                Format::Table => Ok(format!("{tree}\n")),
            }
        }
        Command::Verify {
            families,
            samples,
            seed,
        } => {
            no_dot(fmt, "verify")?;
            let fams: Vec<Family> = if families.trim() == "all" {
                Family::ALL.to_vec()
            } else {
                families
                    .split(',')
                    .map(|s| Family::parse(s.trim()))
                    .collect::<Result<_>>()?
            };
            let t = Instant::now();
            let rep = verify(&fams, *samples, *seed);
            let elapsed = t.elapsed().as_secs_f64();
            let out = match fmt {
                Format::Json => pretty(&json!({
                    "seed": rep.seed,
                    "samples_per_family": rep.samples_per_family,
                    "families": rep.families,
                    "total": rep.total,
                    "agree": rep.agree,
                    "mismatches": rep.mismatches(),
                }))?,
                _ => format!("{}elapsed {elapsed:.1} s\n", rep.summary()),
            };
            if rep.ok() {
                Ok(out)
            } else {
                print!("{out}");
                rep.into_result().map(|_| String::new())
            }
        }
        Command::Selftest => {
            no_dot(fmt, "selftest")?;
            let rep = selftest::run();
            let out = match fmt {
                Format::Json => pretty(&serde_json::to_value(&rep)?)?,
                _ => rep.table(),
            };
            if rep.ok() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Error::Internal("selftest failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
