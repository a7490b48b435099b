//! Seeded random generator matrices.
//!
//! The stream is SplitMix64 with its state initialised to the seed. Each
//! entry is drawn uniformly from `[0, q)` by rejection: 64-bit outputs at or
//! above the largest multiple of `q` are discarded and the rest reduced
//! mod `q`. Entries are drawn row-major; if the matrix has rank below `k` the
//! whole matrix is drawn again from the continuing stream.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::codecore::{Form, LinearCode};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matfq::Matrix;

pub struct CodeRng(SplitMix64);

impl CodeRng {
    pub fn new(seed: u64) -> Self {
        CodeRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let limit = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.0.next_u64();
            if v < limit {
                return v % bound;
            }
        }
    }

    pub fn elem(&mut self, field: &Field) -> Elem {
        Elem(self.below(field.q() as u64) as u32)
    }

    pub fn matrix(&mut self, field: &Field, rows: usize, cols: usize) -> Matrix {
        let data = (0..rows * cols).map(|_| self.elem(field)).collect();
        Matrix::new(field, rows, cols, data).expect("entries drawn in range")
    }

    /// A full-rank `k x n` generator.
    pub fn code(&mut self, field: &Field, n: usize, k: usize, form: Form) -> Result<LinearCode> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got n={n} k={k}")));
        }
        if form == Form::Hermitian && field.base_order().is_none() {
            return Err(Error::HermitianNeedsSquareOrder { q: field.q() });
        }
        loop {
            let g = self.matrix(field, k, n);
            if g.rank() == k {
                return LinearCode::new(g, form);
            }
        }
    }
}

pub fn random_code(field: &Field, n: usize, k: usize, form: Form, seed: u64) -> Result<LinearCode> {
    CodeRng::new(seed).code(field, n, k, form)
}
