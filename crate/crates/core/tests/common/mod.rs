//! Independent oracles shared by the integration tests. None of them reuse
//! the elimination routines they are used to check.
#![allow(dead_code)]

use lcdkit::codecore::{Form, LinearCode};
use lcdkit::galois::{Elem, Field};
use lcdkit::matfq::Matrix;

/// Leibniz expansion over all permutations.
pub fn det_by_permutations(m: &Matrix) -> Elem {
    let f = m.field();
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Elem::ZERO;
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = Elem::ONE;
        for (i, &j) in p.iter().enumerate() {
            term = f.mul(term, m.get(i, j));
        }
        if inversions % 2 == 1 {
            term = f.neg(term);
        }
        total = f.add(total, term);
    });
    total
}

fn permute(p: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == p.len() {
        visit(p);
        return;
    }
    for i in at..p.len() {
        p.swap(at, i);
        permute(p, at + 1, visit);
        p.swap(at, i);
    }
}

/// All `q^k` codewords of the row space of `g`, message order.
pub fn all_codewords(g: &Matrix) -> Vec<Vec<Elem>> {
    let f = g.field();
    let (k, n, q) = (g.rows(), g.cols(), f.q() as u64);
    let total = q.pow(k as u32);
    (0..total)
        .map(|mut idx| {
            let mut word = vec![Elem::ZERO; n];
            for r in 0..k {
                let c = Elem((idx % q) as u32);
                idx /= q;
                for (w, &x) in word.iter_mut().zip(g.row(r)) {
                    *w = f.add(*w, f.mul(c, x));
                }
            }
            word
        })
        .collect()
}

pub fn min_distance_full(g: &Matrix) -> usize {
    all_codewords(g)
        .iter()
        .map(|w| w.iter().filter(|e| !e.is_zero()).count())
        .filter(|&w| w > 0)
        .min()
        .unwrap_or(0)
}

fn conj(f: &Field, x: Elem, form: Form) -> Elem {
    match form {
        Form::Euclidean => x,
        Form::Hermitian => f.pow(x, f.base_order().unwrap() as u64),
    }
}

/// `<a, b>` under the given form.
pub fn inner(f: &Field, a: &[Elem], b: &[Elem], form: Form) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, conj(f, y, form))))
}

/// `dim(C ∩ C^⊥)` by counting codewords orthogonal to every generator row.
pub fn hull_dim_by_enumeration(c: &LinearCode) -> usize {
    let f = c.field();
    let count = all_codewords(c.generator())
        .iter()
        .filter(|w| c.generator().row_iter().all(|g| inner(f, g, w, c.form()).is_zero()))
        .count();
    let mut dim = 0;
    let mut size = 1usize;
    while size < count {
        size *= f.q() as usize;
        dim += 1;
    }
    assert_eq!(size, count, "hull size is not a power of q");
    dim
}

/// `dim(C ∩ D) = dim C + dim D - dim(C + D)` with `D` the dual, so the hull
/// is computed from the dual code rather than the Gram kernel.
pub fn hull_dim_by_intersection(c: &LinearCode) -> usize {
    match c.dual().code() {
        None => 0,
        Some(d) => {
            let sum = c.generator().vstack(d.generator()).unwrap().rank();
            c.k() + d.k() - sum
        }
    }
}

/// Smallest `s` such that some principal minor of order `l - s` is nonzero,
/// by enumerating every deletion set.
pub fn min_nonzero_deletion_size(m: &Matrix) -> usize {
    let l = m.rows();
    for s in 0..=l {
        for mask in 0u32..(1 << l) {
            if mask.count_ones() as usize != s {
                continue;
            }
            let del: Vec<usize> = (0..l).filter(|i| mask >> i & 1 == 1).collect();
            if !det_by_permutations(&m.principal_delete(&del).unwrap()).is_zero() {
                return s;
            }
        }
    }
    unreachable!()
}
