//! One function per CLI subcommand. Each returns the text for stdout or a
//! [`CommandError`] carrying the process exit code.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::bounds::{self, BoundsReport};
use crate::codecore::{Form, LinearCode};
use crate::error::Error;
use crate::galois::{prime_power, Field};
use crate::lcdforge::{extend_to_lcd, lcdify, LcdifyOptions};

use super::format::{parse_certificate, parse_code, write_certificate, write_code, Certificate};
use super::random::random_code;
use super::verify::{verify_extension, verify_lcdify};

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const IMPOSSIBLE: i32 = 3;
    pub const BUDGET: i32 = 4;
    pub const VERIFY: i32 = 5;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::FieldTooSmall(_) => exit::IMPOSSIBLE,
            Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } => exit::BUDGET,
            Error::AlreadyLcd | Error::DecompositionViolated | Error::RankDropped { .. } => exit::IO,
            _ => exit::PARSE,
        };
        let message = match &e {
            Error::FieldTooSmall(why) => format!("construction impossible: {why}"),
            _ => e.to_string(),
        };
        CommandError { code, message }
    }
}

pub type CmdResult = Result<String, CommandError>;

fn read(path: &Path) -> Result<String, CommandError> {
    fs::read_to_string(path).map_err(|e| CommandError {
        code: exit::IO,
        message: format!("{}: {e}", path.display()),
    })
}

fn write(path: &Path, text: &str) -> Result<(), CommandError> {
    fs::write(path, text).map_err(|e| CommandError {
        code: exit::IO,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_code(path: &Path, reduce: bool) -> Result<LinearCode, CommandError> {
    parse_code(&read(path)?, reduce).map_err(|e| CommandError {
        code: exit::PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze(path: &Path, reduce: bool, mindist: bool, budget: u128) -> CmdResult {
    let c = load_code(path, reduce)?;
    analyze_code(&c, mindist, budget)
}

pub fn analyze_code(c: &LinearCode, mindist: bool, budget: u128) -> CmdResult {
    let verdict = c.is_lcd();
    let mut out = String::new();
    let _ = writeln!(out, "field={} form={}", c.field(), c.form());
    let _ = writeln!(out, "n={} k={}", c.n(), c.k());
    let _ = writeln!(out, "rank_gram={}", c.gram().rank());
    let _ = writeln!(out, "h={}", c.hull_dim());
    let _ = writeln!(out, "LCD={} det={}", yes_no(verdict.is_lcd), verdict.det);
    if mindist {
        let d = c.min_distance(budget)?;
        let defect = bounds::singleton_defect(c.n(), c.k(), d)?;
        let _ = writeln!(out, "d={d} singleton_defect={defect} MDS={}", yes_no(defect == 0));
    }
    Ok(out)
}

pub struct LcdifyArgs<'a> {
    pub input: &'a Path,
    pub output: &'a Path,
    pub cert: &'a Path,
    pub reduce: bool,
    pub opts: LcdifyOptions,
}

pub fn lcdify_cmd(args: &LcdifyArgs<'_>) -> CmdResult {
    let c = load_code(args.input, args.reduce)?;
    let out = lcdify(&c, &args.opts)?;
    let cert = Certificate::from_lcdified(&out);
    write(args.output, &write_code(&out.code))?;
    write(args.cert, &write_certificate(&cert))?;
    let j: Vec<String> = cert.deleted.iter().map(|i| (i + 1).to_string()).collect();
    let mut msg = format!(
        "J={{{}}} det_gram_before={} det_gram_after={}\n",
        j.join(","),
        out.det_gram_before,
        out.det_gram_after
    );
    if !out.transform.all_nonzero() {
        msg.push_str("warning: degenerate scaling (a_j = 0); minimum distance may change\n");
    }
    Ok(msg)
}

pub fn verify_cmd(original: &Path, transformed: &Path, cert: &Path, reduce: bool) -> CmdResult {
    let c = load_code(original, reduce)?;
    let t = load_code(transformed, false)?;
    let cert = parse_certificate(&read(cert)?).map_err(|e| CommandError {
        code: exit::PARSE,
        message: format!("{}: {e}", cert.display()),
    })?;
    verify_lcdify(&c, &t, &cert)
        .map(|()| "pass\n".to_string())
        .map_err(|f| CommandError { code: exit::VERIFY, message: format!("FAIL {f}") })
}

pub fn verify_extension_cmd(original: &Path, extended: &Path, reduce: bool) -> CmdResult {
    let c = load_code(original, reduce)?;
    let e = load_code(extended, false)?;
    verify_extension(&c, &e)
        .map(|()| "pass\n".to_string())
        .map_err(|f| CommandError { code: exit::VERIFY, message: format!("FAIL {f}") })
}

pub fn extend_cmd(input: &Path, output: &Path, reduce: bool) -> CmdResult {
    let c = load_code(input, reduce)?;
    let (ext, map) = extend_to_lcd(&c)?;
    write(output, &write_code(&ext))?;
    Ok(format!("h={} n={} k={} LCD={}\n", map.h, ext.n(), ext.k(), yes_no(ext.is_lcd().is_lcd)))
}

pub fn random_cmd(q: u64, n: usize, k: usize, seed: u64, form: Form) -> CmdResult {
    let (p, m) = prime_power(q).ok_or_else(|| CommandError {
        code: exit::PARSE,
        message: format!("{q} is not a prime power"),
    })?;
    let field = Field::new(p, m, None)?;
    Ok(write_code(&random_code(&field, n, k, form, seed)?))
}

pub fn mindist_cmd(path: &Path, reduce: bool, budget: u128) -> CmdResult {
    let c = load_code(path, reduce)?;
    Ok(format!("d={}\n", c.min_distance(budget)?))
}

pub enum BoundsQuery {
    Delta(f64),
    Code { n: usize, k: usize, d: usize },
}

pub fn bounds_cmd(q: u32, query: BoundsQuery) -> CmdResult {
    let r = match query {
        BoundsQuery::Delta(delta) => BoundsReport::at(q, delta)?,
        BoundsQuery::Code { n, k, d } => BoundsReport::for_code(q, n, k, d)?,
    };
    let mut out = format!(
        "q={} delta={:.12} H_q={:.12} R_GV={:.12}\n",
        r.q, r.delta, r.entropy, r.gv_rate
    );
    if let Some(c) = r.code {
        let _ = writeln!(out, "n={} k={} d={} singleton_defect={}", c.n, c.k, c.d, c.singleton_defect);
    }
    Ok(out)
}
