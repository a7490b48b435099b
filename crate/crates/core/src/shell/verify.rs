//! Independent re-checking of LCD-ification certificates and extensions.
//!
//! Everything is recomputed from the original code; the minimality of `J` is
//! re-established by trying every smaller deletion set, without the rank
//! shortcut used by the search.

use std::fmt;

use crate::codecore::{Form, LinearCode};
use crate::galois::Elem;
use crate::lcdforge::{diagonal_perturbation, next_subset};
use crate::matfq::Matrix;

use super::format::Certificate;

/// First check that failed, named after the certificate field it concerns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyFailure {
    pub field: &'static str,
    pub detail: String,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.detail)
    }
}

fn fail<T>(field: &'static str, detail: impl Into<String>) -> Result<T, VerifyFailure> {
    Err(VerifyFailure { field, detail: detail.into() })
}

fn ensure(ok: bool, field: &'static str, detail: impl FnOnce() -> String) -> Result<(), VerifyFailure> {
    if ok {
        Ok(())
    } else {
        fail(field, detail())
    }
}

fn gram(form: Form, g: &Matrix) -> Result<Matrix, VerifyFailure> {
    form.gram(g).map_err(|e| VerifyFailure { field: "form", detail: e.to_string() })
}

fn det(m: &Matrix) -> Elem {
    m.det().expect("square")
}

/// Checks that `transformed` and `cert` are a valid LCD-ification of `original`.
pub fn verify_lcdify(
    original: &LinearCode,
    transformed: &LinearCode,
    cert: &Certificate,
) -> Result<(), VerifyFailure> {
    let field = original.field();
    let form = original.form();
    ensure(cert.form == form && transformed.form() == form, "form", || {
        format!("original {form}, transformed {}, certificate {}", transformed.form(), cert.form)
    })?;
    ensure(cert.q == field.q() && transformed.field() == field, "q", || {
        format!("original field F_{}, certificate q={}", field.q(), cert.q)
    })?;
    let (n, k) = (original.n(), original.k());
    ensure(cert.n == n && transformed.n() == n, "n", || {
        format!("original n={n}, transformed n={}, certificate n={}", transformed.n(), cert.n)
    })?;
    ensure(cert.k == k && transformed.k() == k, "k", || {
        format!("original k={k}, transformed k={}, certificate k={}", transformed.k(), cert.k)
    })?;

    // (a) transformed = scaled standard form
    let standard = original.standard_form();
    ensure(standard.perm.as_slice() == cert.sigma.as_slice(), "sigma", || {
        format!("standard form permutation is {:?} (0-based)", standard.perm.as_slice())
    })?;
    ensure(cert.a.len() == n && cert.a.iter().all(|e| e.0 < field.q()), "a", || {
        format!("need {n} elements of F_{}", field.q())
    })?;
    let scaled = standard.code.generator().scale_cols(&cert.a).expect("length checked");
    ensure(scaled.rank() == k && scaled.same_row_space(transformed.generator()), "a", || {
        "transformed code is not the standard form scaled by a".into()
    })?;

    // (b) the transformed code is LCD with the recorded determinant
    let after = det(&gram(form, transformed.generator())?);
    ensure(after == cert.det_gram_after && !after.is_zero(), "det_gram_after", || {
        format!("recomputed {after}, certificate {}", cert.det_gram_after)
    })?;

    // (c) J is a minimal deletion set for M
    let m = gram(form, standard.code.generator())?;
    let j = &cert.deleted;
    ensure(
        j.windows(2).all(|w| w[0] < w[1]) && j.iter().all(|&i| i < k),
        "J",
        || format!("J must be strictly increasing within 1..={k}"),
    )?;
    for size in 0..j.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if !det(&m.principal_delete(&idx).expect("in range")).is_zero() {
                let one_based: Vec<usize> = idx.iter().map(|i| i + 1).collect();
                return fail("J", format!("smaller deletion set {one_based:?} already has det(M_I) != 0"));
            }
            if !next_subset(&mut idx, k) {
                break;
            }
        }
    }
    let minor = det(&m.principal_delete(j).expect("in range"));
    ensure(minor == cert.det_minor && !minor.is_zero(), "det_MJ", || {
        format!("recomputed {minor}, certificate {}", cert.det_minor)
    })?;
    ensure(cert.t == j.len().checked_sub(1), "t", || {
        format!("|J| = {} but t = {:?}", j.len(), cert.t)
    })?;
    let before = det(&m);
    ensure(before == cert.det_gram_before, "det_gram_before", || {
        format!("recomputed {before}, certificate {}", cert.det_gram_before)
    })?;

    // (d) det(M + diag(u)) = prod_{j in J} u_j * det(M_J)
    let u = diagonal_perturbation(field, form, &cert.a, n)
        .map_err(|e| VerifyFailure { field: "a", detail: e.to_string() })?;
    let support: Vec<usize> = (0..n).filter(|&i| !u[i].is_zero()).collect();
    ensure(&support == j, "a", || {
        "the diagonal perturbation of a is not supported exactly on J".into()
    })?;
    let lhs = det(&m.diag_add(&u[..k]).expect("k entries"));
    let rhs = j.iter().fold(minor, |acc, &i| field.mul(acc, u[i]));
    ensure(lhs == rhs, "lemma", || format!("det(M + diag u) = {lhs}, product side = {rhs}"))?;
    let direct = det(&gram(form, &scaled)?);
    ensure(direct == lhs, "lemma", || {
        format!("Gram of the scaled generator has det {direct}, M + diag u has {lhs}")
    })?;
    Ok(())
}

/// Checks that `extended` is `original` with `h` appended coordinates given
/// by a surjective `L` with `Ker(L) + Hull = C`, and that it is LCD.
pub fn verify_extension(original: &LinearCode, extended: &LinearCode) -> Result<(), VerifyFailure> {
    let (n, k, h) = (original.n(), original.k(), original.hull_dim());
    ensure(extended.form() == original.form(), "form", || "forms differ".into())?;
    ensure(extended.field() == original.field(), "q", || "fields differ".into())?;
    ensure(extended.n() == n + h, "n", || format!("expected n + h = {}, got {}", n + h, extended.n()))?;
    ensure(extended.k() == k, "k", || format!("expected {k}, got {}", extended.k()))?;
    let g = extended.generator();
    let left = g.select_cols(&(0..n).collect::<Vec<_>>());
    let right = g.select_cols(&(n..n + h).collect::<Vec<_>>());
    ensure(left.rank() == k && left.same_row_space(original.generator()), "prefix", || {
        "first n coordinates do not generate the original code".into()
    })?;
    // Coordinates are taken with respect to the rows of `left`.
    let hull_coords = gram(original.form(), &left)?.left_kernel();
    let ker_coords = if h == 0 { Matrix::identity(g.field(), k) } else { right.left_kernel() };
    ensure(
        hull_coords.vstack(&ker_coords).expect("width k").rank() == k,
        "decomposition",
        || "Ker(L) + Hull(C) is a proper subspace of C".into(),
    )?;
    ensure(right.rank() == h, "surjective", || format!("rank(L) = {} < h = {h}", right.rank()))?;
    let d = det(&gram(original.form(), g)?);
    ensure(!d.is_zero(), "lcd", || "Gram matrix of the extended code is singular".into())?;
    Ok(())
}
