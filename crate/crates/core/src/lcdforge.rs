//! LCD constructions: the minimal principal-minor deletion, the scaling word
//! that perturbs the Gram diagonal, end-to-end LCD-ification, hull-complement
//! subcodes and the hull-based extension.
//!
//! For a generator `G = [I_k : P]` with Gram matrix `M`, scaling column `j <= k`
//! by `a_j` adds `u_j = a_j^2 - 1` (Euclidean) or `a_j^(q+1) - 1` (Hermitian)
//! to `M[j][j]`, while columns scaled by `+-1` (resp. norm-1 scalars) leave `M`
//! alone. When every principal minor of `M` obtained by deleting fewer than
//! `|J|` indices vanishes, `det(M + diag(u)) = prod_{j in J} u_j * det(M_J)`
//! for any `u` supported on `J`, so a nonzero `det(M_J)` and nonzero `u_j`
//! make the scaled code LCD.

use crate::codecore::{Form, LinearCode, MonomialTransform, Permutation, StandardForm, Subspace};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matfq::Matrix;

/// Default cap on determinants evaluated by the minor search.
pub const DEFAULT_SEARCH_BUDGET: u128 = 10_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every subset size from 0 upward was searched.
    Exhaustive,
    /// Sizes below `k - rank(M)` were skipped: a nonsingular principal
    /// submatrix has order at most `rank(M)`.
    RankBound,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive-search",
            SearchMode::RankBound => "rank-bound-shortcut",
        }
    }
}

/// Witness that deleting the rows/columns `deleted` from `M` leaves a
/// nonsingular matrix and that no smaller deletion does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificate {
    /// 0-based, ascending.
    pub deleted: Vec<usize>,
    pub det_minor: Elem,
    pub mode: SearchMode,
}

impl MinorCertificate {
    /// `|J| - 1`, absent when nothing was deleted.
    pub fn t(&self) -> Option<usize> {
        self.deleted.len().checked_sub(1)
    }
}

/// Steps `idx` to the next `s`-subset of `0..k` in lexicographic order.
pub(crate) fn next_subset(idx: &mut [usize], k: usize) -> bool {
    let s = idx.len();
    for i in (0..s).rev() {
        if idx[i] < k - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Smallest (then lexicographically first) deletion set `J` with
/// `det(M_J) != 0`.
pub fn find_minimal_deletion(m: &Matrix, budget: u128) -> Result<MinorCertificate> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let k = m.rows();
    let det = m.det()?;
    if !det.is_zero() {
        return Ok(MinorCertificate { deleted: vec![], det_minor: det, mode: SearchMode::Exhaustive });
    }
    let start = (k - m.rank()).max(1);
    let mode = if start > 1 { SearchMode::RankBound } else { SearchMode::Exhaustive };
    let mut spent = 0u128;
    for s in start..=k {
        spent += binomial(k, s);
        if spent > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let d = m.principal_delete(&idx)?.det()?;
            if !d.is_zero() {
                return Ok(MinorCertificate { deleted: idx, det_minor: d, mode });
            }
            if !next_subset(&mut idx, k) {
                break;
            }
        }
    }
    unreachable!("deleting every index leaves the empty matrix with determinant 1")
}

fn check_support(n: usize, k: usize, support: &[usize]) -> Result<()> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    match support.iter().find(|&&j| j >= k) {
        Some(&j) => Err(Error::IndexOutOfRange { index: j + 1, len: k }),
        None => Ok(()),
    }
}

/// Scaling word for the Euclidean construction: the first element of
/// `F_q^* \ {1, -1}` on `support`, `1` elsewhere. With `allow_zero` and
/// `q <= 3`, `0` is used on `support` instead.
pub fn choose_scaling_euclidean(
    field: &Field,
    n: usize,
    k: usize,
    support: &[usize],
    allow_zero: bool,
) -> Result<Vec<Elem>> {
    check_support(n, k, support)?;
    let minus_one = field.neg(Elem::ONE);
    let pick = field
        .elements()
        .find(|&a| !a.is_zero() && a != Elem::ONE && a != minus_one);
    scaling_word(n, support, pick, allow_zero, || {
        format!(
            "F_{} has no element outside {{0, 1, -1}}; the Euclidean construction needs q > 3",
            field.q()
        )
    })
}

/// Scaling word for the Hermitian construction over `F_{b^2}`: the first
/// nonzero element of norm different from 1 on `support`, `1` elsewhere.
pub fn choose_scaling_hermitian(
    field: &Field,
    n: usize,
    k: usize,
    support: &[usize],
    allow_zero: bool,
) -> Result<Vec<Elem>> {
    check_support(n, k, support)?;
    let b = field.base_order().ok_or(Error::HermitianNeedsSquareOrder { q: field.q() })?;
    let pick = field
        .elements()
        .find(|&a| !a.is_zero() && field.norm(a, b).expect("square order") != Elem::ONE);
    scaling_word(n, support, pick, allow_zero, || {
        format!(
            "every nonzero element of F_{} has norm 1; the Hermitian construction needs q > 2 (field order > 4)",
            field.q()
        )
    })
}

fn scaling_word(
    n: usize,
    support: &[usize],
    pick: Option<Elem>,
    allow_zero: bool,
    why: impl FnOnce() -> String,
) -> Result<Vec<Elem>> {
    let mut a = vec![Elem::ONE; n];
    if support.is_empty() {
        return Ok(a);
    }
    let v = match (pick, allow_zero) {
        (Some(v), _) => v,
        (None, true) => Elem::ZERO,
        (None, false) => return Err(Error::FieldTooSmall(why())),
    };
    for &j in support {
        a[j] = v;
    }
    Ok(a)
}

/// The diagonal perturbation `u` induced on the Gram matrix of `[I_k : P]`
/// by scaling with `a`: `u_j = a_j^2 - 1` or `a_j^(b+1) - 1`, for `j < k`.
pub fn diagonal_perturbation(field: &Field, form: Form, a: &[Elem], k: usize) -> Result<Vec<Elem>> {
    let square = |x: Elem| -> Result<Elem> {
        match form {
            Form::Euclidean => Ok(field.mul(x, x)),
            Form::Hermitian => {
                let b = field.base_order().ok_or(Error::HermitianNeedsSquareOrder { q: field.q() })?;
                field.norm(x, b)
            }
        }
    };
    a[..k].iter().map(|&x| Ok(field.sub(square(x)?, Elem::ONE))).collect()
}

#[derive(Copy, Clone, Debug)]
pub struct LcdifyOptions {
    /// Permit `a_j = 0` on `J` when the field is too small for a nonzero choice.
    pub allow_zero: bool,
    pub search_budget: u128,
}

impl Default for LcdifyOptions {
    fn default() -> Self {
        LcdifyOptions { allow_zero: false, search_budget: DEFAULT_SEARCH_BUDGET }
    }
}

/// Everything produced by [`lcdify`].
#[derive(Clone, Debug)]
pub struct Lcdified {
    /// The LCD code, generated by the scaled standard-form generator.
    pub code: LinearCode,
    pub standard: StandardForm,
    /// Scaling word in standard-form coordinates.
    pub scaling: Vec<Elem>,
    /// Maps the input code onto `code` (scaling in input coordinates, then `standard.perm`).
    pub transform: MonomialTransform,
    pub cert: MinorCertificate,
    pub det_gram_before: Elem,
    pub det_gram_after: Elem,
}

pub fn lcdify(c: &LinearCode, opts: &LcdifyOptions) -> Result<Lcdified> {
    let field = c.field().clone();
    let (n, k) = (c.n(), c.k());
    let standard = c.standard_form();
    let gram = standard.code.gram();
    let det_gram_before = gram.det()?;
    let cert = find_minimal_deletion(gram, opts.search_budget)?;
    let scaling = match c.form() {
        Form::Euclidean => choose_scaling_euclidean(&field, n, k, &cert.deleted, opts.allow_zero)?,
        Form::Hermitian => choose_scaling_hermitian(&field, n, k, &cert.deleted, opts.allow_zero)?,
    };
    let g = standard.code.generator().scale_cols(&scaling)?;
    let code = LinearCode::new(g, c.form())?;
    if code.k() != k {
        return Err(Error::RankDropped { expected: k, got: code.k() });
    }
    let det_gram_after = code.gram().det()?;
    debug_assert!(!det_gram_after.is_zero());

    // Column i of the result is column perm[i] of the input scaled by scaling[i].
    let perm = standard.perm.clone();
    let mut input_scaling = vec![Elem::ONE; n];
    for (i, &src) in perm.as_slice().iter().enumerate() {
        input_scaling[src] = scaling[i];
    }
    let transform = MonomialTransform::new(input_scaling, perm)?;
    Ok(Lcdified { code, standard, scaling, transform, cert, det_gram_before, det_gram_after })
}

/// Hull basis extended to a basis of the code; see [`ExtensionMap`].
fn hull_adapted_basis(c: &LinearCode) -> (Matrix, Matrix) {
    let hull = c.hull_basis();
    let h = hull.rows();
    let candidates = c.generator().rref().matrix;
    let mut basis = hull.clone();
    let mut complement = Vec::new();
    for r in 0..candidates.rows() {
        if basis.rows() == c.k() {
            break;
        }
        let trial = basis.vstack(&candidates.select_rows(&[r])).expect("same width");
        if trial.rank() > basis.rows() {
            basis = trial;
            complement.push(h + complement.len());
        }
    }
    let complement_rows = basis.select_rows(&complement);
    (hull, complement_rows)
}

/// Subcode spanned by a complement of the hull inside `c`; always LCD.
pub fn hull_complement_subcode(c: &LinearCode) -> Result<Subspace> {
    if c.hull_dim() == 0 {
        return Err(Error::AlreadyLcd);
    }
    let (_, complement) = hull_adapted_basis(c);
    if complement.rows() == 0 {
        return Ok(Subspace::Zero { n: c.n() });
    }
    Ok(Subspace::Code(LinearCode::new(complement, c.form())?))
}

/// The linear map `L: C -> F_q^h` used by [`extend_to_lcd`], given on the
/// basis `hull_rows ++ complement_rows`: the `i`-th hull row goes to `e_i`,
/// complement rows go to 0.
#[derive(Clone, Debug)]
pub struct ExtensionMap {
    pub h: usize,
    pub hull_rows: Matrix,
    pub complement_rows: Matrix,
    /// `k x h` values of `L` on the stacked basis.
    pub appended_block: Matrix,
}

impl ExtensionMap {
    /// Hull rows stacked over complement rows.
    pub fn ordered_basis(&self) -> Matrix {
        self.hull_rows.vstack(&self.complement_rows).expect("same width")
    }
}

/// Appends `L(c)` to every codeword, giving an LCD `[n + h, k, >= d]` code.
/// A code with trivial hull is returned unchanged.
pub fn extend_to_lcd(c: &LinearCode) -> Result<(LinearCode, ExtensionMap)> {
    let field = c.field().clone();
    let k = c.k();
    let (hull_rows, complement_rows) = hull_adapted_basis(c);
    let h = hull_rows.rows();
    let mut block = Matrix::zeros(&field, k, h);
    for i in 0..h {
        block.set(i, i, Elem::ONE);
    }
    let map = ExtensionMap { h, hull_rows, complement_rows, appended_block: block };
    if h == 0 {
        return Ok((c.clone(), map));
    }
    let g = map.ordered_basis().hstack(&map.appended_block)?;
    let out = LinearCode::new(g, c.form())?;
    Ok((out, map))
}

/// Outcome of [`extension_is_deficient`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Deficiency {
    pub h: usize,
    pub rank_l: usize,
    pub deficient: bool,
    /// Determinant of the Gram matrix of `[basis | L]`.
    pub det_gram: Elem,
}

/// Decides whether appending the values `l_values` (one row per vector of
/// the hull-first basis from [`extend_to_lcd`]'s map) yields a non-LCD code,
/// i.e. whether `rank(L) < h`. The Gram determinant of the appended code is
/// computed directly alongside.
pub fn extension_is_deficient(c: &LinearCode, l_values: &Matrix) -> Result<Deficiency> {
    let (hull_rows, complement_rows) = hull_adapted_basis(c);
    let h = hull_rows.rows();
    let k = c.k();
    if l_values.rows() != k {
        return Err(Error::DimensionMismatch(format!(
            "L has {} rows, the code has dimension {k}",
            l_values.rows()
        )));
    }
    // In basis coordinates Ker(L) is the left kernel of the value matrix and
    // Hull is spanned by the first h unit vectors.
    let ker = if l_values.cols() == 0 {
        Matrix::identity(c.field(), k)
    } else {
        l_values.left_kernel()
    };
    let hull_coords = Matrix::identity(c.field(), k).select_rows(&(0..h).collect::<Vec<_>>());
    if ker.vstack(&hull_coords)?.rank() < k {
        return Err(Error::DecompositionViolated);
    }
    let basis = hull_rows.vstack(&complement_rows)?;
    let extended = if l_values.cols() == 0 { basis } else { basis.hstack(l_values)? };
    let det_gram = c.form().gram(&extended)?.det()?;
    let rank_l = l_values.rank();
    let deficient = rank_l < h;
    if deficient {
        assert!(det_gram.is_zero(), "rank(L) < h but the extended code is LCD");
    }
    Ok(Deficiency { h, rank_l, deficient, det_gram })
}

/// Convenience for callers holding a permutation-free transform in
/// standard-form coordinates.
pub fn scaling_transform(scaling: Vec<Elem>) -> MonomialTransform {
    let n = scaling.len();
    MonomialTransform { scaling, perm: Permutation::identity(n) }
}
