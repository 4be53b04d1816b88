//! Checked integer helpers for the closed forms.

use crate::error::{Error, Result};

pub fn qpow(q: u32, e: u32) -> Result<u128> {
    (q as u128).checked_pow(e).ok_or(Error::Overflow("power of q"))
}

pub fn ipow(q: u32, e: u32) -> Result<i128> {
    (q as i128).checked_pow(e).ok_or(Error::Overflow("power of q"))
}

pub fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("product"))
}

pub fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("sum"))
}

pub fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow("difference"))
}

/// a / b, refusing to round.
pub fn exact_div(a: i128, b: i128, what: &'static str) -> Result<i128> {
    if b == 0 || a % b != 0 {
        Err(Error::Inexact(what))
    } else {
        Ok(a / b)
    }
}

/// Exponent e with q^e = n, if n is a power of q.
pub fn log_q(n: u128, q: u32) -> Option<u32> {
    let mut e = 0;
    let mut x = 1u128;
    while x < n {
        x = x.checked_mul(q as u128)?;
        e += 1;
    }
    (x == n).then_some(e)
}
