//! Exact arithmetic in `F_{p^m}`.
//!
//! Elements use the polynomial basis over `F_p` and are encoded as integers in
//! `[0, q)`: the base-`p` digits are the coefficients, constant term least
//! significant. Multiplication is defined by reduction modulo an explicit
//! monic irreducible polynomial; log/antilog tables derived from that
//! reduction back the fast path.

mod conway;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

/// A field element in its integer encoding. Only meaningful together with
/// the [`Field`] it was produced by.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, constant term first, length `m + 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a primitive `g`, doubled so `log a + log b` indexes directly.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
}

/// The finite field `F_{p^m}` with a fixed modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[modulus={:?}]", self.0.q, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// The built-in modulus for `F_{p^m}`, `m >= 2` (Conway polynomial).
pub fn canonical_modulus(p: u32, m: u32) -> Option<&'static [u32]> {
    conway::CONWAY
        .iter()
        .find(|(cp, cm, _)| *cp == p && *cm == m)
        .map(|(_, _, c)| *c)
}

/// Remainder of `a` modulo the monic polynomial `b` over `F_p`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = r.pop().unwrap();
        if c != 0 {
            let off = r.len() - db;
            for i in 0..db {
                r[off + i] = (r[off + i] + (p - c) * b[i]) % p;
            }
        }
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    // Any reducible polynomial of degree m has a monic factor of degree <= m/2.
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds `F_{p^m}`. With `modulus = None` and `m > 1` the built-in table
    /// is consulted. For `m = 1` any supplied modulus is ignored.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).pow(m);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            let c = match modulus {
                Some(c) => c.to_vec(),
                None => canonical_modulus(p, m)
                    .ok_or(Error::NoCanonicalModulus { p, m })?
                    .to_vec(),
            };
            if c.len() != m as usize + 1 {
                return Err(Error::InvalidModulus(format!(
                    "expected {} coefficients, got {}",
                    m + 1,
                    c.len()
                )));
            }
            if c.iter().any(|&x| x >= p) {
                return Err(Error::InvalidModulus(format!("coefficient not in [0, {p})")));
            }
            if c[m as usize] != 1 {
                return Err(Error::InvalidModulus("modulus must be monic".into()));
            }
            if !is_irreducible(&c, p) {
                return Err(Error::ReducibleModulus { p });
            }
            c
        };
        Ok(Field::build(p, m, q, modulus))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// `F_q` with the canonical modulus.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Field::new(p, m, None)
    }

    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Field {
        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            add: None,
        };
        inner.neg = (0..q).map(|a| digit_neg(a, p)).collect();
        if q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b, p) as u16;
                }
            }
            inner.add = Some(t);
        }

        let order = q - 1;
        let mut generator = None;
        for g in 1..q {
            let (mut x, mut k) = (g, 1u32);
            while x != 1 {
                x = reference_mul(&inner, x, g);
                k += 1;
            }
            if k == order {
                generator = Some(g);
                break;
            }
        }
        let g = generator.expect("multiplicative group of a field is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = reference_mul(&inner, x, g);
        }
        inner.exp = exp;
        inner.log = log;
        Field(Arc::new(inner))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn elem(&self, v: u64) -> Result<Elem> {
        if v < self.0.q as u64 {
            Ok(Elem(v as u32))
        } else {
            Err(Error::ElementOutOfRange { value: v, q: self.0.q })
        }
    }

    /// All elements in canonical (integer) order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.m as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidParameters(format!(
                "{coeffs:?} is not a coefficient vector of {self}"
            )));
        }
        Ok(Elem(coeffs.iter().rev().fold(0, |acc, &c| acc * self.0.p + c)))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &self.0;
        if let Some(t) = &f.add {
            Elem(t[(a.0 * f.q + b.0) as usize] as u32)
        } else if f.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            Elem(digit_add(a.0, b.0, f.p))
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let f = &self.0;
        Elem(f.exp[(f.log[a.0 as usize] + f.log[b.0 as usize]) as usize])
    }

    /// Product computed by polynomial multiplication and reduction, without tables.
    pub fn mul_poly(&self, a: Elem, b: Elem) -> Elem {
        Elem(reference_mul(&self.0, a.0, b.0))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let f = &self.0;
        let order = f.q - 1;
        Ok(Elem(f.exp[((order - f.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let f = &self.0;
        let order = (f.q - 1) as u64;
        let l = (f.log[a.0 as usize] as u64 * (e % order)) % order;
        Elem(f.exp[l as usize])
    }

    /// `sqrt(q)` when `q` is an even power of `p`, i.e. this field is `F_{b^2}`.
    pub fn base_order(&self) -> Option<u32> {
        self.0.m.is_multiple_of(2).then(|| self.0.p.pow(self.0.m / 2))
    }

    fn check_quadratic(&self, base_q: u32) -> Result<()> {
        if self.base_order() == Some(base_q) {
            Ok(())
        } else {
            Err(Error::NotAQuadraticExtension { q: self.0.q, base_q })
        }
    }

    /// `a^b` where this field is `F_{b^2}`; the Frobenius involution fixing `F_b`.
    pub fn conjugate(&self, a: Elem, base_q: u32) -> Result<Elem> {
        self.check_quadratic(base_q)?;
        Ok(self.pow(a, base_q as u64))
    }

    /// `a^(b+1) = a * conj(a)`, which lies in `F_b`.
    pub fn norm(&self, a: Elem, base_q: u32) -> Result<Elem> {
        self.check_quadratic(base_q)?;
        Ok(self.pow(a, base_q as u64 + 1))
    }
}

fn digit_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digit_neg(mut a: u32, p: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

fn reference_mul(f: &Inner, a: u32, b: u32) -> u32 {
    let (p, m) = (f.p as u64, f.m as usize);
    if m == 1 {
        return ((a as u64 * b as u64) % p) as u32;
    }
    let digits = |mut v: u32| {
        let mut d = vec![0u64; m];
        for x in d.iter_mut() {
            *x = v as u64 % p;
            v /= f.p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u64; 2 * m - 1];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for deg in (m..2 * m - 1).rev() {
        let c = prod[deg];
        if c != 0 {
            for i in 0..m {
                let sub = c * f.modulus[i] as u64 % p;
                prod[deg - m + i] = (prod[deg - m + i] + p - sub) % p;
            }
            prod[deg] = 0;
        }
    }
    prod[..m].iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

/// A field element bundled with its field, for mixed-field checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl FieldElement {
    pub fn new(field: &Field, v: u64) -> Result<Self> {
        Ok(FieldElement { value: field.elem(v)?, field: field.clone() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn conjugate(&self, base_q: u32) -> Result<Self> {
        Ok(self.with(self.field.conjugate(self.value, base_q)?))
    }

    pub fn norm(&self, base_q: u32) -> Result<Self> {
        Ok(self.with(self.field.norm(self.value, base_q)?))
    }
}
