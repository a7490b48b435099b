//! q-ary entropy, the asymptotic Gilbert-Varshamov rate and the Singleton defect.

use crate::error::{Error, Result};

/// Absolute precision promised for every real-valued quantity here.
pub const PRECISION: f64 = 1e-12;

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::OutOfDomain(format!("q = {q}")));
    }
    Ok(())
}

/// `H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x)`, with `0 log 0 = 0`.
pub fn entropy(q: u32, x: f64) -> Result<f64> {
    check_q(q)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfDomain(format!("x = {x} (need 0 <= x <= 1)")));
    }
    let ln_q = (q as f64).ln();
    let xlogx = |v: f64| if v == 0.0 { 0.0 } else { v * v.ln() };
    Ok((x * ((q - 1) as f64).ln() - xlogx(x) - xlogx(1.0 - x)) / ln_q)
}

/// `R_GV(delta) = 1 - H_q(delta)` on the open interval `0 < delta < (q-1)/q`.
pub fn gv_rate(q: u32, delta: f64) -> Result<f64> {
    check_q(q)?;
    let top = (q - 1) as f64 / q as f64;
    if !(delta > 0.0 && delta < top) {
        return Err(Error::OutOfDomain(format!("delta = {delta} (need 0 < delta < {top})")));
    }
    Ok(1.0 - entropy(q, delta)?)
}

/// `(n + 1 - k) - d`; zero exactly for MDS parameters.
pub fn singleton_defect(n: usize, k: usize, d: usize) -> Result<usize> {
    if k == 0 || k > n || d == 0 {
        return Err(Error::InvalidParameters(format!("[{n}, {k}, {d}]")));
    }
    (n + 1 - k)
        .checked_sub(d)
        .ok_or_else(|| Error::InvalidParameters(format!("[{n}, {k}, {d}] violates d <= n + 1 - k")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub q: u32,
    pub delta: f64,
    pub entropy: f64,
    pub gv_rate: f64,
    pub code: Option<CodeParameters>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub singleton_defect: usize,
}

impl BoundsReport {
    pub fn at(q: u32, delta: f64) -> Result<Self> {
        let gv = gv_rate(q, delta)?;
        Ok(BoundsReport { q, delta, entropy: entropy(q, delta)?, gv_rate: gv, code: None })
    }

    /// Report for concrete parameters, evaluated at `delta = d / n`.
    pub fn for_code(q: u32, n: usize, k: usize, d: usize) -> Result<Self> {
        let singleton_defect = singleton_defect(n, k, d)?;
        let delta = d as f64 / n as f64;
        let h = entropy(q, delta)?;
        Ok(BoundsReport {
            q,
            delta,
            entropy: h,
            gv_rate: 1.0 - h,
            code: Some(CodeParameters { n, k, d, singleton_defect }),
        })
    }
}
