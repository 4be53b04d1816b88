//! Exact arithmetic in GF(p^s) and vectors over it.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{s-1} p^{s-1}` whose base-p
//! digits are its coordinates in the polynomial basis `1, x, ..., x^{s-1}`. Reading the
//! digits back gives the identification of F_q with F_p^s used by the character sums.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Fields up to this order get full addition and multiplication tables.
const TABLE_ORDER: u64 = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: Self = FieldElement(0);
    pub const ONE: Self = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct Inner {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// GF(p^s) with the lexicographically least monic irreducible modulus.
///
/// Cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p(), self.s(), self.0.modulus)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.s() == other.s()
    }
}

impl Eq for FieldSpec {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(p^s).
pub fn make_field(p: u32, s: u32) -> Result<FieldSpec> {
    FieldSpec::new(p, s)
}

/// Builds the field of order q, which must be a prime power.
pub fn make_field_order(q: u32) -> Result<FieldSpec> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or(Error::NotPrime(q))?;
    let (mut rest, mut s) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        s += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrime(q));
    }
    make_field(p, s)
}

/// Applies one field operation; `b` is ignored for unary ops.
pub fn field_arith(f: &FieldSpec, a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    f.check(a)?;
    f.check(b)?;
    match op {
        FieldOp::Add => Ok(f.add(a, b)),
        FieldOp::Mul => Ok(f.mul(a, b)),
        FieldOp::Neg => Ok(f.neg(a)),
        FieldOp::Inv => f.inv(a),
    }
}

// Polynomials over F_p, coefficients low to high, no trailing zeros.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] as u64 * lead_inv as u64 % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let t = &mut r[shift + i];
            *t = ((*t as u64 + p as u64 - c * bi as u64 % p as u64) % p as u64) as u32;
        }
        r = poly_trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p is prime so a^(p-2) works
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `code`.
fn monic(code: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut f = digits(code, p, deg);
    f.push(1);
    f
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            if poly_rem(f, &monic(code, p, d), p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `s`, comparing the
/// coefficients from the constant term upward.
fn least_irreducible(p: u32, s: u32) -> Vec<u32> {
    let s = s as usize;
    // enumerating codes in increasing order compares the most significant digit first,
    // so reverse the digit order to make the constant term lead
    (0..p.pow(s as u32))
        .map(|code| {
            let mut d = digits(code, p, s);
            d.reverse();
            d.push(1);
            d
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

impl FieldSpec {
    pub fn new(p: u32, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(s).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(Error::FieldTooLarge { p, s })? as u32;
        let modulus = least_irreducible(p, s);
        let mut inner = Inner {
            p,
            s,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        inner.neg = (0..q).map(|a| raw_neg(&inner, a)).collect();
        if q as u64 <= TABLE_ORDER {
            let qs = q as usize;
            inner.add = vec![0; qs * qs];
            inner.mul = vec![0; qs * qs];
            for a in 0..q {
                for b in 0..q {
                    inner.add[a as usize * qs + b as usize] = raw_add(&inner, a, b);
                    inner.mul[a as usize * qs + b as usize] = raw_mul(&inner, a, b);
                }
            }
        }
        let mut field = FieldSpec(Arc::new(inner));
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { field.raw_inv(a) })
            .collect();
        Arc::get_mut(&mut field.0).expect("unshared").inv = inv;
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, low degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn check(&self, a: FieldElement) -> Result<()> {
        if a.0 < self.q() {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                value: a.0 as u64,
                q: self.q() as u64,
            })
        }
    }

    /// Element from its polynomial-basis coordinates.
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.s() as usize {
            return Err(Error::LengthMismatch {
                left: coeffs.len(),
                right: self.s() as usize,
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p()) {
            return Err(Error::InvalidElement {
                value: c as u64,
                q: self.p() as u64,
            });
        }
        Ok(FieldElement(undigits(coeffs, self.p())))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0, self.p(), self.s() as usize)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p() as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q()).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let i = &self.0;
        if i.s == 1 {
            let r = a.0 + b.0;
            return FieldElement(if r >= i.p { r - i.p } else { r });
        }
        if !i.add.is_empty() {
            return FieldElement(i.add[(a.0 * i.q + b.0) as usize]);
        }
        FieldElement(raw_add(i, a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let i = &self.0;
        if i.s == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % i.p as u64) as u32);
        }
        if !i.mul.is_empty() {
            return FieldElement(i.mul[(a.0 * i.q + b.0) as usize]);
        }
        FieldElement(raw_mul(i, a.0, b.0))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(self.0.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut result = FieldElement::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Multiplies by an integer through the prime subfield.
    pub fn scale_int(&self, a: FieldElement, n: u64) -> FieldElement {
        self.mul(a, FieldElement((n % self.p() as u64) as u32))
    }

    /// a ↦ a^√q, the involution fixing the subfield of order √q.
    pub fn conjugate(&self, a: FieldElement) -> Result<FieldElement> {
        let q = self.q() as u64;
        let r = (q as f64).sqrt().round() as u64;
        if !self.s().is_multiple_of(2) || r * r != q {
            return Err(Error::NotSquareOrder(q));
        }
        Ok(self.pow(a, r))
    }

    fn raw_inv(&self, a: u32) -> u32 {
        // a^(q-2); fine since construction is done once
        self.pow(FieldElement(a), self.q() as u64 - 2).0
    }
}

fn raw_add(i: &Inner, a: u32, b: u32) -> u32 {
    let s = i.s as usize;
    let (da, db) = (digits(a, i.p, s), digits(b, i.p, s));
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % i.p).collect();
    undigits(&sum, i.p)
}

fn raw_neg(i: &Inner, a: u32) -> u32 {
    let d: Vec<u32> = digits(a, i.p, i.s as usize)
        .into_iter()
        .map(|c| (i.p - c) % i.p)
        .collect();
    undigits(&d, i.p)
}

fn raw_mul(i: &Inner, a: u32, b: u32) -> u32 {
    let s = i.s as usize;
    let p = i.p as u64;
    let (da, db) = (digits(a, i.p, s), digits(b, i.p, s));
    let mut prod = vec![0u64; 2 * s - 1];
    for (x, &ax) in da.iter().enumerate() {
        for (y, &by) in db.iter().enumerate() {
            prod[x + y] = (prod[x + y] + ax as u64 * by as u64) % p;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut r = poly_rem(&prod, &i.modulus, i.p);
    r.resize(s, 0);
    undigits(&r, i.p)
}

/// A vector in F_q^m.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FqVector(pub Vec<FieldElement>);

impl FqVector {
    pub fn zero(n: usize) -> Self {
        FqVector(vec![FieldElement::ZERO; n])
    }

    pub fn from_u32(entries: &[u32]) -> Self {
        FqVector(entries.iter().map(|&e| FieldElement(e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    /// Support as a bitmask; only meaningful for length ≤ 64.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, f: &FieldSpec, other: &Self) -> Result<Self> {
        same_len(self, other)?;
        Ok(FqVector(self.0.iter().zip(&other.0).map(|(&a, &b)| f.add(a, b)).collect()))
    }

    pub fn sub(&self, f: &FieldSpec, other: &Self) -> Result<Self> {
        same_len(self, other)?;
        Ok(FqVector(self.0.iter().zip(&other.0).map(|(&a, &b)| f.sub(a, b)).collect()))
    }

    pub fn scale(&self, f: &FieldSpec, c: FieldElement) -> Self {
        FqVector(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }
}

fn same_len(u: &FqVector, v: &FqVector) -> Result<()> {
    if u.len() == v.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        })
    }
}

/// Σ u_i v_i.
pub fn inner_product(f: &FieldSpec, u: &FqVector, v: &FqVector) -> Result<FieldElement> {
    same_len(u, v)?;
    Ok(dot(f, &u.0, &v.0))
}

/// Σ u_i conj(v_i); needs a square field order.
pub fn hermitian_product(f: &FieldSpec, u: &FqVector, v: &FqVector) -> Result<FieldElement> {
    same_len(u, v)?;
    let mut acc = FieldElement::ZERO;
    for (&a, &b) in u.0.iter().zip(&v.0) {
        acc = f.add(acc, f.mul(a, f.conjugate(b)?));
    }
    Ok(acc)
}

#[inline]
pub(crate) fn dot(f: &FieldSpec, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    u.iter()
        .zip(v)
        .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Number of vectors in F_q^m, or None if it overflows u64.
pub fn space_size(q: u32, m: usize) -> Option<u64> {
    (q as u64).checked_pow(m as u32)
}

/// The `index`-th vector of F_q^m in lexicographic order (position 1 most significant).
pub fn vector_from_index(q: u32, m: usize, mut index: u64) -> FqVector {
    let mut v = vec![FieldElement::ZERO; m];
    for slot in v.iter_mut().rev() {
        *slot = FieldElement((index % q as u64) as u32);
        index /= q as u64;
    }
    FqVector(v)
}

/// Inverse of [`vector_from_index`].
pub fn vector_index(q: u32, v: &FqVector) -> u64 {
    v.0.iter().fold(0, |acc, e| acc * q as u64 + e.0 as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(make_field(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(make_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // constant term compared first: 1 + x^2 + x^3 precedes 1 + x + x^3
        assert_eq!(make_field(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(2, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(make_field(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(make_field(2, 16).is_ok());
    }

    #[test]
    fn small_products() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.mul(FieldElement(2), FieldElement(2)), FieldElement(1));
        let f4 = make_field(2, 2).unwrap();
        let w = f4.element(&[0, 1]).unwrap();
        assert_eq!(f4.coeffs(f4.mul(w, w)), vec![1, 1]);
        assert_eq!(f4.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        let f4 = make_field(2, 2).unwrap();
        let w = f4.element(&[0, 1]).unwrap();
        assert_eq!(f4.conjugate(FieldElement::ZERO).unwrap(), FieldElement::ZERO);
        assert_eq!(f4.conjugate(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(f4.conjugate(w).unwrap(), f4.mul(w, w));
        assert_eq!(f4.conjugate(f4.conjugate(w).unwrap()).unwrap(), w);
        assert_eq!(make_field(2, 3).unwrap().conjugate(w), Err(Error::NotSquareOrder(8)));
    }

    #[test]
    fn untabled_field_matches_definition() {
        // 2^10 is past the table cutoff; check a·a^{-1} and Frobenius additivity
        let f = make_field(2, 10).unwrap();
        for a in [1u32, 2, 3, 517, 1023] {
            let a = FieldElement(a);
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            let b = FieldElement(77);
            assert_eq!(f.pow(f.add(a, b), 2), f.add(f.pow(a, 2), f.pow(b, 2)));
        }
    }

    #[test]
    fn vector_order() {
        assert_eq!(vector_from_index(2, 2, 2), FqVector::from_u32(&[1, 0]));
        let v = FqVector::from_u32(&[2, 0, 1]);
        assert_eq!(vector_from_index(3, 3, vector_index(3, &v)), v);
    }
}
