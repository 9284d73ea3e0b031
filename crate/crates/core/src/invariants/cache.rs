//! Line-oriented text serialisation of the universal invariants.
//!
//! ```text
//! tropinv-universal v1
//! poly I4 degree=4 vars=a0,a1,a2,a3,a4,a5 scale=41803776000 terms=12
//! <coefficient> <exponent of a0> ... <exponent of a5>
//! ...
//! sha256 <hex digest of every preceding byte>
//! ```

use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use super::universal::{compute_universal, fourone_vars, quintic_vars, UniversalPoly, UniversalSet};
use crate::error::{Error, Result};
use crate::numkernel::{fmt_rational, parse_rational};
use crate::polyalg::{Monomial, MultiPoly};

pub const HEADER: &str = "tropinv-universal v1";
pub const CACHE_ENV: &str = "TROPINV_CACHE_DIR";
pub const CACHE_FILE: &str = "universal-v1.txt";

static EMBEDDED: &str = include_str!("../../data/universal-v1.txt");

fn checksum(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn serialize(set: &UniversalSet) -> String {
    let mut body = String::new();
    body.push_str(HEADER);
    body.push('\n');
    for u in set.quintic.iter().chain(&set.fourone) {
        let vars = u.primitive.vars();
        body.push_str(&format!(
            "poly {} degree={} vars={} scale={} terms={}\n",
            u.name,
            u.degree,
            vars.join(","),
            fmt_rational(&u.scale),
            u.primitive.len()
        ));
        for (m, c) in u.primitive.terms() {
            body.push_str(&c.to_string());
            for e in m.exponents(vars.len()) {
                body.push(' ');
                body.push_str(&e.to_string());
            }
            body.push('\n');
        }
    }
    let sum = checksum(&body);
    body.push_str("sha256 ");
    body.push_str(&sum);
    body.push('\n');
    body
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Internal(format!("universal cache line {}: {}", line + 1, msg.into()))
}

fn field<'a>(tok: Option<&'a str>, key: &str, line: usize) -> Result<&'a str> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| bad(line, format!("expected {key}=")))
}

pub fn deserialize(text: &str) -> Result<UniversalSet> {
    let Some(pos) = text.rfind("sha256 ") else {
        return Err(bad(0, "missing checksum"));
    };
    let (body, tail) = text.split_at(pos);
    let digest = tail["sha256 ".len()..].trim();
    if checksum(body) != digest {
        return Err(Error::Internal("universal cache checksum mismatch".into()));
    }
    let mut lines = body.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == HEADER => {}
        _ => return Err(bad(0, "bad header")),
    }
    let qv = quintic_vars();
    let fv = fourone_vars();
    let mut polys = Vec::new();
    while let Some((ln, line)) = lines.next() {
        let mut tok = line.split_whitespace();
        if tok.next() != Some("poly") {
            return Err(bad(ln, "expected poly"));
        }
        let name = tok.next().ok_or_else(|| bad(ln, "missing name"))?.to_string();
        let degree: u32 = field(tok.next(), "degree", ln)?
            .parse()
            .map_err(|_| bad(ln, "degree"))?;
        let vlist = field(tok.next(), "vars", ln)?;
        let vars: Arc<Vec<String>> = if vlist == qv.join(",") {
            qv.clone()
        } else if vlist == fv.join(",") {
            fv.clone()
        } else {
            return Err(bad(ln, "unknown variable list"));
        };
        let scale = parse_rational(field(tok.next(), "scale", ln)?).map_err(|_| bad(ln, "scale"))?;
        let nterms: usize = field(tok.next(), "terms", ln)?
            .parse()
            .map_err(|_| bad(ln, "terms"))?;
        let mut terms = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let (tl, tline) = lines.next().ok_or_else(|| bad(ln, "truncated"))?;
            let mut it = tline.split_whitespace();
            let c: BigInt = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(tl, "coefficient"))?;
            let exps: Vec<u32> = it
                .map(|s| s.parse().map_err(|_| bad(tl, "exponent")))
                .collect::<Result<_>>()?;
            if exps.len() != vars.len() {
                return Err(bad(tl, "exponent count"));
            }
            terms.push((Monomial::from_exponents(&exps), c));
        }
        polys.push(UniversalPoly {
            name,
            degree,
            scale,
            primitive: MultiPoly::from_terms(&vars, terms),
        });
    }
    if polys.len() != 11 {
        return Err(Error::Internal(format!("expected 11 invariants, found {}", polys.len())));
    }
    let fourone = polys.split_off(6);
    Ok(UniversalSet {
        quintic: polys,
        fourone,
    })
}

pub fn embedded() -> Result<UniversalSet> {
    deserialize(EMBEDDED)
}

pub fn embedded_text() -> &'static str {
    EMBEDDED
}

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

/// Reads `dir/universal-v1.txt`, computing and writing it when absent.
pub fn load_or_build(dir: &Path) -> Result<UniversalSet> {
    let path = dir.join(CACHE_FILE);
    if path.exists() {
        return deserialize(&std::fs::read_to_string(&path)?);
    }
    let set = compute_universal()?;
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, serialize(&set))?;
    Ok(set)
}

/// Process-wide universal invariants: the cache directory when configured,
/// the embedded table otherwise.
pub fn universal() -> Result<&'static UniversalSet> {
    static SET: OnceLock<UniversalSet> = OnceLock::new();
    if let Some(s) = SET.get() {
        return Ok(s);
    }
    let set = match cache_dir() {
        Some(d) => load_or_build(&d)?,
        None => embedded()?,
    };
    Ok(SET.get_or_init(|| set))
}
