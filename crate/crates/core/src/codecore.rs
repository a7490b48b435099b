//! Linear codes: standard form, duals, hulls, LCD tests, monomial maps and
//! minimum distance.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matfq::Matrix;

/// Default cap on enumerated projective message classes.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 2_000_000;

/// Which inner product governs duals and hulls.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Euclidean,
    Hermitian,
}

impl Form {
    /// `G G^T` or `G conj(G)^T`.
    pub fn gram(self, g: &Matrix) -> Result<Matrix> {
        match self {
            Form::Euclidean => Ok(g.gram_euclidean()),
            Form::Hermitian => {
                let f = g.field();
                let b = f.base_order().ok_or(Error::HermitianNeedsSquareOrder { q: f.q() })?;
                g.gram_hermitian(b)
            }
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Euclidean => "euclidean",
            Form::Hermitian => "hermitian",
        })
    }
}

impl FromStr for Form {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "euclidean" => Ok(Form::Euclidean),
            "hermitian" => Ok(Form::Hermitian),
            other => Err(format!("unknown form `{other}`")),
        }
    }
}

/// Coordinate permutation: position `i` of the image takes coordinate `self[i]`
/// of the source, i.e. `sigma(c) = (c_sigma(1), ..., c_sigma(n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &i in &map {
            if i >= map.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{map:?} is not a bijection")));
            }
        }
        Ok(Permutation(map))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn apply<T: Copy>(&self, word: &[T]) -> Vec<T> {
        self.0.iter().map(|&i| word[i]).collect()
    }
}

/// Scaling word `a` followed by the permutation `sigma`: `C -> sigma(C_a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTransform {
    pub scaling: Vec<Elem>,
    pub perm: Permutation,
}

impl MonomialTransform {
    pub fn new(scaling: Vec<Elem>, perm: Permutation) -> Result<Self> {
        if scaling.len() != perm.len() {
            return Err(Error::DimensionMismatch(format!(
                "scaling of length {} with a permutation of length {}",
                scaling.len(),
                perm.len()
            )));
        }
        Ok(MonomialTransform { scaling, perm })
    }

    pub fn identity(n: usize) -> Self {
        MonomialTransform { scaling: vec![Elem::ONE; n], perm: Permutation::identity(n) }
    }

    pub fn len(&self) -> usize {
        self.scaling.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaling.is_empty()
    }

    pub fn all_nonzero(&self) -> bool {
        self.scaling.iter().all(|a| !a.is_zero())
    }
}

/// A code generated by `[I_k : P]`, reached from the original generator by
/// row operations and the column permutation `perm`.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub perm: Permutation,
    pub code: LinearCode,
}

impl StandardForm {
    /// The `k x (n - k)` block `P`.
    pub fn p_block(&self) -> Matrix {
        let g = self.code.generator();
        g.select_cols(&(g.rows()..g.cols()).collect::<Vec<_>>())
    }
}

/// Either a code or the zero subspace of `F_q^n`.
#[derive(Clone, Debug)]
pub enum Subspace {
    Code(LinearCode),
    Zero { n: usize },
}

impl Subspace {
    pub fn dim(&self) -> usize {
        match self {
            Subspace::Code(c) => c.k(),
            Subspace::Zero { .. } => 0,
        }
    }

    pub fn code(&self) -> Option<&LinearCode> {
        match self {
            Subspace::Code(c) => Some(c),
            Subspace::Zero { .. } => None,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct LcdVerdict {
    pub is_lcd: bool,
    /// Determinant of the Gram matrix of the stored generator.
    pub det: Elem,
}

#[derive(Clone)]
pub struct LinearCode {
    generator: Matrix,
    form: Form,
    gram: OnceLock<Matrix>,
    distance: OnceLock<usize>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] {} code: {:?}", self.n(), self.k(), self.form, self.generator)
    }
}

impl LinearCode {
    /// Keeps the rows of `generator` that are independent of the earlier ones.
    pub fn new(generator: Matrix, form: Form) -> Result<Self> {
        let f = generator.field().clone();
        if form == Form::Hermitian && f.base_order().is_none() {
            return Err(Error::HermitianNeedsSquareOrder { q: f.q() });
        }
        let mut keep = Vec::new();
        let mut rank = 0;
        for r in 0..generator.rows() {
            keep.push(r);
            let next = generator.select_rows(&keep).rank();
            if next > rank {
                rank = next;
            } else {
                keep.pop();
            }
        }
        if keep.is_empty() {
            return Err(Error::ZeroCode);
        }
        let generator = if keep.len() == generator.rows() {
            generator
        } else {
            generator.select_rows(&keep)
        };
        Ok(LinearCode { generator, form, gram: OnceLock::new(), distance: OnceLock::new() })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, rows: &[R], form: Form) -> Result<Self> {
        LinearCode::new(Matrix::from_rows(field, rows)?, form)
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Order of the base field for Hermitian codes.
    pub fn base_order(&self) -> Option<u32> {
        match self.form {
            Form::Euclidean => None,
            Form::Hermitian => self.field().base_order(),
        }
    }

    pub fn gram(&self) -> &Matrix {
        self.gram
            .get_or_init(|| self.form.gram(&self.generator).expect("form checked at construction"))
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }

    pub fn standard_form(&self) -> StandardForm {
        let r = self.generator.rref();
        let n = self.n();
        let mut order = r.pivots.clone();
        order.extend((0..n).filter(|c| !r.pivots.contains(c)));
        let g_std = r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>()).select_cols(&order);
        StandardForm {
            perm: Permutation(order),
            code: LinearCode::new(g_std, self.form).expect("rref of a full-rank generator"),
        }
    }

    /// Euclidean or Hermitian dual, with an rref generator.
    pub fn dual(&self) -> Subspace {
        let h = self.generator.right_kernel();
        if h.rows() == 0 {
            return Subspace::Zero { n: self.n() };
        }
        let h = match self.base_order() {
            Some(b) => h.conjugate(b).expect("hermitian code over a square field"),
            None => h,
        };
        let h = h.rref().matrix;
        Subspace::Code(LinearCode::new(h, self.form).expect("kernel basis is independent"))
    }

    /// Rows `x G` for `x` in the left kernel of the Gram matrix.
    pub fn hull_basis(&self) -> Matrix {
        self.gram()
            .left_kernel()
            .mul(&self.generator)
            .expect("kernel width matches k")
    }

    pub fn hull_dim(&self) -> usize {
        self.k() - self.gram().rank()
    }

    pub fn is_lcd(&self) -> LcdVerdict {
        let det = self.gram().det().expect("gram is square");
        LcdVerdict { is_lcd: !det.is_zero(), det }
    }

    /// Scales column `j` by `a_j`, then permutes. Zero scalars require
    /// `allow_degenerate`.
    pub fn apply_transform(&self, t: &MonomialTransform, allow_degenerate: bool) -> Result<Self> {
        if t.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "transform of length {} on a code of length {}",
                t.len(),
                self.n()
            )));
        }
        if !allow_degenerate {
            if let Some(pos) = t.scaling.iter().position(|a| a.is_zero()) {
                return Err(Error::ZeroScalarNotAllowed { position: pos + 1 });
            }
        }
        let g = self.generator.scale_cols(&t.scaling)?.select_cols(t.perm.as_slice());
        let rank = g.rank();
        if rank < self.k() {
            return Err(Error::RankDropped { expected: self.k(), got: rank });
        }
        let out = LinearCode::new(g, self.form)?;
        if t.all_nonzero() {
            if let Some(&d) = self.distance.get() {
                let _ = out.distance.set(d);
            }
        }
        Ok(out)
    }

    /// Number of projective message classes, `(q^k - 1) / (q - 1)`.
    pub fn projective_classes(&self) -> u128 {
        let q = self.field().q() as u128;
        (0..self.k()).map(|i| q.pow(i as u32)).sum()
    }

    /// Exact minimum distance by enumerating one message per projective class.
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let needed = self.projective_classes();
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let d = projective_min_weight(&self.generator);
        let _ = self.distance.set(d);
        Ok(d)
    }

    pub fn is_mds(&self, budget: u128) -> Result<bool> {
        Ok(self.min_distance(budget)? == self.n() - self.k() + 1)
    }
}

/// Minimum nonzero weight of the row space of a full-rank `g`.
fn projective_min_weight(g: &Matrix) -> usize {
    let f = g.field();
    let (k, n, q) = (g.rows(), g.cols(), f.q());
    // Chunk = (leading row, value of the next coefficient); messages have a 1
    // in the leading position and zeros before it.
    let mut chunks = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            chunks.extend((0..q).map(|v| (lead, Some(Elem(v)))));
        } else {
            chunks.push((lead, None));
        }
    }
    chunks
        .into_par_iter()
        .map(|(lead, next)| {
            let mut base = g.row(lead).to_vec();
            let mut free_from = lead + 1;
            if let Some(v) = next {
                for (b, &x) in base.iter_mut().zip(g.row(lead + 1)) {
                    *b = f.add(*b, f.mul(v, x));
                }
                free_from += 1;
            }
            let free: Vec<&[Elem]> = (free_from..k).map(|r| g.row(r)).collect();
            min_weight_coset(f, base, &free, n)
        })
        .min()
        .unwrap_or(n)
}

/// Minimum weight over `base + span-combinations of rows` with every
/// coefficient tuple visited once (odometer order).
fn min_weight_coset(f: &Field, mut word: Vec<Elem>, rows: &[&[Elem]], n: usize) -> usize {
    let q = f.q();
    let weight = |w: &[Elem]| w.iter().filter(|e| !e.is_zero()).count();
    let mut best = weight(&word);
    if rows.is_empty() {
        return best;
    }
    // step[j][v]: the change in the word when coefficient j goes from v to v + 1
    // (wrapping to 0 at the top).
    let step: Vec<Vec<Vec<Elem>>> = rows
        .iter()
        .map(|row| {
            (0..q)
                .map(|v| {
                    let next = if v + 1 < q { Elem(v + 1) } else { Elem::ZERO };
                    let diff = f.sub(next, Elem(v));
                    row.iter().map(|&x| f.mul(diff, x)).collect()
                })
                .collect()
        })
        .collect();
    let mut digits = vec![0u32; rows.len()];
    loop {
        let mut j = rows.len();
        loop {
            if j == 0 {
                return best;
            }
            j -= 1;
            let d = digits[j];
            for (w, &s) in word.iter_mut().zip(&step[j][d as usize]) {
                *w = f.add(*w, s);
            }
            if d + 1 < q {
                digits[j] = d + 1;
                break;
            }
            digits[j] = 0;
        }
        let w = weight(&word);
        if w < best {
            best = w;
            if best == 1 {
                return best;
            }
        }
        debug_assert!(word.len() == n);
    }
}
