//! Line-oriented text formats for codes and LCD certificates.
//!
//! Code file:
//!
//! ```text
//! field p=5 m=1 modulus=0,1
//! form euclidean
//! n=2 k=1
//! 1 2
//! ```
//!
//! Elements are integers in `[0, q)` whose base-`p` digits are polynomial
//! coefficients (constant term least significant). Indices are 1-based.
//! Blank lines and lines starting with `#` are ignored when parsing.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::codecore::{Form, LinearCode};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::lcdforge::{Lcdified, SearchMode};
use crate::matfq::Matrix;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: FromStr>(line: usize, what: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("expected an integer for {what}, got `{s}`")))
}

/// Splits `key=value` tokens, requiring exactly the given keys in order.
fn key_values<'a>(line: usize, tokens: &[&'a str], keys: &[&str]) -> Result<Vec<&'a str>> {
    if tokens.len() != keys.len() {
        return Err(Error::parse(line, format!("expected {}", keys.join("= ") + "=")));
    }
    tokens
        .iter()
        .zip(keys)
        .map(|(tok, key)| {
            tok.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| Error::parse(line, format!("expected `{key}=`, got `{tok}`")))
        })
        .collect()
}

pub fn field_header(f: &Field) -> String {
    let modulus: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    format!("field p={} m={} modulus={}", f.p(), f.m(), modulus.join(","))
}

pub fn parse_field_header(line: usize, s: &str) -> Result<Field> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.first() != Some(&"field") {
        return Err(Error::parse(line, "expected `field p=<p> m=<m> modulus=<c0,...,cm>`"));
    }
    let v = key_values(line, &tokens[1..], &["p", "m", "modulus"])?;
    let p: u64 = parse_num(line, "p", v[0])?;
    let m: u32 = parse_num(line, "m", v[1])?;
    let modulus = v[2]
        .split(',')
        .map(|c| parse_num(line, "modulus coefficient", c))
        .collect::<Result<Vec<u32>>>()?;
    Field::new(p, m, Some(&modulus)).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn write_matrix_rows(out: &mut String, m: &Matrix) {
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn write_code(c: &LinearCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", field_header(c.field()));
    let _ = writeln!(out, "form {}", c.form());
    let _ = writeln!(out, "n={} k={}", c.n(), c.k());
    write_matrix_rows(&mut out, c.generator());
    out
}

/// Parses a code file. A rank-deficient generator is an error unless
/// `reduce` is set, in which case dependent rows are dropped.
pub fn parse_code(text: &str, reduce: bool) -> Result<LinearCode> {
    let mut lines = content_lines(text);
    let eof = |what: &str| Error::parse(text.lines().count() + 1, format!("missing {what}"));

    let (ln, l) = lines.next().ok_or_else(|| eof("field header"))?;
    let field = parse_field_header(ln, l)?;

    let (ln, l) = lines.next().ok_or_else(|| eof("form line"))?;
    let form = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["form", f] => Form::from_str(f).map_err(|e| Error::parse(ln, e))?,
        _ => return Err(Error::parse(ln, "expected `form euclidean|hermitian`")),
    };

    let (ln, l) = lines.next().ok_or_else(|| eof("dimension line"))?;
    let tokens: Vec<&str> = l.split_whitespace().collect();
    let v = key_values(ln, &tokens, &["n", "k"])?;
    let n: usize = parse_num(ln, "n", v[0])?;
    let k: usize = parse_num(ln, "k", v[1])?;
    if n == 0 || k == 0 || k > n {
        return Err(Error::parse(ln, format!("need 1 <= k <= n, got n={n} k={k}")));
    }

    let mut data = Vec::with_capacity(n * k);
    let mut last = ln;
    for r in 0..k {
        let (ln, l) = lines.next().ok_or_else(|| eof(&format!("generator row {}", r + 1)))?;
        last = ln;
        let row: Vec<&str> = l.split_whitespace().collect();
        if row.len() != n {
            return Err(Error::parse(ln, format!("expected {n} entries, got {}", row.len())));
        }
        for cell in row {
            let v: u64 = parse_num(ln, "field element", cell)?;
            data.push(field.elem(v).map_err(|e| Error::parse(ln, e.to_string()))?);
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "trailing content after the generator rows"));
    }
    let g = Matrix::new(&field, k, n, data)?;
    if form == Form::Hermitian && field.base_order().is_none() {
        return Err(Error::parse(2, format!("hermitian form needs a square field order, got {}", field.q())));
    }
    let code = LinearCode::new(g, form).map_err(|e| Error::parse(last, e.to_string()))?;
    if code.k() < k && !reduce {
        return Err(Error::parse(
            last,
            format!("generator has rank {} < k={k}; pass --reduce to drop dependent rows", code.k()),
        ));
    }
    Ok(code)
}

/// Everything needed to re-check an LCD-ification. Indices are 0-based here
/// and 1-based in the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub form: Form,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub sigma: Vec<usize>,
    /// Scaling word in standard-form coordinates.
    pub a: Vec<Elem>,
    pub deleted: Vec<usize>,
    pub t: Option<usize>,
    pub det_minor: Elem,
    pub det_gram_before: Elem,
    pub det_gram_after: Elem,
    pub mode: SearchMode,
}

impl Certificate {
    pub fn from_lcdified(out: &Lcdified) -> Self {
        Certificate {
            form: out.code.form(),
            q: out.code.field().q(),
            n: out.code.n(),
            k: out.code.k(),
            sigma: out.standard.perm.as_slice().to_vec(),
            a: out.scaling.clone(),
            deleted: out.cert.deleted.clone(),
            t: out.cert.t(),
            det_minor: out.cert.det_minor,
            det_gram_before: out.det_gram_before,
            det_gram_after: out.det_gram_after,
            mode: out.cert.mode,
        }
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_certificate(c: &Certificate) -> String {
    let mut out = String::new();
    let mut kv = |key: &str, value: String| {
        if value.is_empty() {
            let _ = writeln!(out, "{key}:");
        } else {
            let _ = writeln!(out, "{key}: {value}");
        }
    };
    kv("form", c.form.to_string());
    kv("q", c.q.to_string());
    kv("n", c.n.to_string());
    kv("k", c.k.to_string());
    kv("sigma", join(c.sigma.iter().map(|i| i + 1)));
    kv("a", join(&c.a));
    kv("J", join(c.deleted.iter().map(|i| i + 1)));
    kv("t", c.t.map_or("none".to_string(), |t| t.to_string()));
    kv("det_MJ", c.det_minor.to_string());
    kv("det_gram_before", c.det_gram_before.to_string());
    kv("det_gram_after", c.det_gram_after.to_string());
    kv("search", c.mode.as_str().to_string());
    out
}

const CERT_KEYS: [&str; 12] = [
    "form",
    "q",
    "n",
    "k",
    "sigma",
    "a",
    "J",
    "t",
    "det_MJ",
    "det_gram_before",
    "det_gram_after",
    "search",
];

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut values: Vec<(usize, &str)> = Vec::with_capacity(CERT_KEYS.len());
    let mut lines = content_lines(text);
    for key in CERT_KEYS {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| Error::parse(text.lines().count() + 1, format!("missing `{key}:`")))?;
        let rest = l
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(':'))
            .ok_or_else(|| Error::parse(ln, format!("expected `{key}:`")))?;
        values.push((ln, rest.trim()));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "unexpected trailing content"));
    }
    let ints = |(ln, s): (usize, &str), what: &str| -> Result<Vec<u64>> {
        s.split_whitespace().map(|x| parse_num(ln, what, x)).collect()
    };
    let one_based = |(ln, s): (usize, &str), what: &str| -> Result<Vec<usize>> {
        ints((ln, s), what)?
            .into_iter()
            .map(|i| {
                (i as usize)
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(ln, format!("{what} indices are 1-based")))
            })
            .collect()
    };
    let elem = |(ln, s): (usize, &str), what: &str| -> Result<Elem> {
        Ok(Elem(parse_num(ln, what, s)?))
    };

    let form = Form::from_str(values[0].1).map_err(|e| Error::parse(values[0].0, e))?;
    let q = parse_num(values[1].0, "q", values[1].1)?;
    let n = parse_num(values[2].0, "n", values[2].1)?;
    let k = parse_num(values[3].0, "k", values[3].1)?;
    let sigma = one_based(values[4], "sigma")?;
    let a = ints(values[5], "a")?.into_iter().map(|v| Elem(v as u32)).collect();
    let deleted = one_based(values[6], "J")?;
    let t = match values[7].1 {
        "none" => None,
        s => Some(parse_num(values[7].0, "t", s)?),
    };
    let mode = match values[11].1 {
        "exhaustive-search" => SearchMode::Exhaustive,
        "rank-bound-shortcut" => SearchMode::RankBound,
        other => return Err(Error::parse(values[11].0, format!("unknown search mode `{other}`"))),
    };
    Ok(Certificate {
        form,
        q,
        n,
        k,
        sigma,
        a,
        deleted,
        t,
        det_minor: elem(values[8], "det_MJ")?,
        det_gram_before: elem(values[9], "det_gram_before")?,
        det_gram_after: elem(values[10], "det_gram_after")?,
        mode,
    })
}
