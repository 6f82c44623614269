//! The polynomial families `m_n`, `f` and its iterates `f^[i]`.
//!
//! `m_n` satisfies `m_0 = 1`, `m_1 = x`, `m_n = x*m_{n-1} - m_{n-2}`, and
//! `f = m_p - m_{p-2}` for a prime `p`. Both the recurrence values and the
//! iterates are memoized process-wide behind locks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numth::is_prime;
use crate::poly::IntPoly;

static M_MEMO: RwLock<Vec<Arc<IntPoly>>> = RwLock::new(Vec::new());
static F_ITER_MEMO: Mutex<Option<HashMap<(u64, u32), Arc<IntPoly>>>> = Mutex::new(None);

/// Shared handle to `m_n`, extending the memo table as needed.
pub fn m_shared(n: usize) -> Arc<IntPoly> {
    if let Some(m) = M_MEMO.read().unwrap().get(n) {
        return Arc::clone(m);
    }
    let mut memo = M_MEMO.write().unwrap();
    if memo.is_empty() {
        memo.push(Arc::new(IntPoly::one()));
        memo.push(Arc::new(IntPoly::x()));
    }
    while memo.len() <= n {
        let k = memo.len();
        let next = &memo[k - 1].shift(1) - &memo[k - 2];
        memo.push(Arc::new(next));
    }
    Arc::clone(&memo[n])
}

/// `m_n` by the three-term recurrence.
pub fn m_recur(n: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    Ok((*m_shared(n as usize)).clone())
}

/// The extended family: `m_{-1} = 0` and `m_n = -m_{-n-2}` for `n <= -2`.
pub fn m_extended(n: i64) -> IntPoly {
    match n {
        0.. => (*m_shared(n as usize)).clone(),
        -1 => IntPoly::zero(),
        _ => -(*m_shared((-n - 2) as usize)).clone(),
    }
}

struct Factorials(Vec<BigInt>);

impl Factorials {
    fn up_to(n: usize) -> Self {
        let mut v = Vec::with_capacity(n + 1);
        v.push(BigInt::one());
        for k in 1..=n {
            let next = &v[k - 1] * BigInt::from(k);
            v.push(next);
        }
        Factorials(v)
    }

    fn get(&self, k: usize) -> &BigInt {
        &self.0[k]
    }
}

/// `m_n = sum_j (-1)^j C(n-j, j) x^(n-2j)`.
pub fn m_closed(n: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let n = n as usize;
    let fact = Factorials::up_to(n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for j in 0..=n / 2 {
        let binom = fact.get(n - j) / (fact.get(j) * fact.get(n - 2 * j));
        coeffs[n - 2 * j] = if j % 2 == 0 { binom } else { -binom };
    }
    Ok(IntPoly::new(coeffs))
}

/// `m_n - m_{n-2}` from its closed form, whose `j`-th coefficient
/// `n/(n-j) * C(n-j, j)` is evaluated as `n*(n-j-1)! / (j!*(n-2j)!)`.
pub fn m_diff_closed(n: i64) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "m_n - m_(n-2) closed form needs n >= 2 (got n = {n})"
        )));
    }
    let n = n as usize;
    let fact = Factorials::up_to(n);
    let big_n = BigInt::from(n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for j in 0..=n / 2 {
        let num = &big_n * fact.get(n - j - 1);
        let den = fact.get(j) * fact.get(n - 2 * j);
        let (c, r) = num.div_rem(&den);
        assert!(r.is_zero(), "non-integral coefficient at j = {j} for n = {n}");
        coeffs[n - 2 * j] = if j % 2 == 0 { c } else { -c };
    }
    Ok(IntPoly::new(coeffs))
}

/// `f` for the prime `p`.
pub fn f_base(p: u64) -> Result<IntPoly> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    m_diff_closed(p as i64)
}

/// Shared handle to the `i`-fold composite `f^[i]`.
///
/// Iterates are built as `f^[i] = f^[i-1](f(x))`: Horner's scheme then
/// multiplies by the small-coefficient `f` at every step.
pub fn f_iter_shared(p: u64, i: u32) -> Result<Arc<IntPoly>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if i == 0 {
        return Ok(Arc::new(IntPoly::x()));
    }
    let mut guard = F_ITER_MEMO.lock().unwrap();
    let memo = guard.get_or_insert_with(HashMap::new);
    if let Some(hit) = memo.get(&(p, i)) {
        return Ok(Arc::clone(hit));
    }
    let f = match memo.get(&(p, 1)) {
        Some(f) => Arc::clone(f),
        None => {
            let f = Arc::new(f_base(p)?);
            memo.insert((p, 1), Arc::clone(&f));
            f
        }
    };
    let mut k = (1..i).rev().find(|k| memo.contains_key(&(p, *k))).unwrap_or(1);
    let mut cur = Arc::clone(&memo[&(p, k)]);
    while k < i {
        k += 1;
        cur = Arc::new(cur.compose(&f));
        memo.insert((p, k), Arc::clone(&cur));
    }
    Ok(cur)
}

/// `f^[i]`, with `f^[0] = x`.
pub fn f_iter(p: u64, i: u32) -> Result<IntPoly> {
    f_iter_shared(p, i).map(|a| (*a).clone())
}

/// `m_q - m_{q-2}` with `q = p^g`, from the closed sum.
pub fn f_g_closed(p: u64, g: u32) -> Result<IntPoly> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if g == 0 {
        return Err(Error::InvalidArgument("g must be at least 1".into()));
    }
    let q = p
        .checked_pow(g)
        .filter(|&q| q <= i64::MAX as u64)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{g} overflows")))?;
    m_diff_closed(q as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_recur(0).unwrap(), p(&[1]));
        assert_eq!(m_recur(2).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(m_recur(4).unwrap(), p(&[1, 0, -3, 0, 1]));
        assert_eq!(m_recur(-1), Err(Error::NegativeIndex(-1)));
        assert_eq!(m_closed(1).unwrap(), p(&[0, 1]));
        assert_eq!(m_closed(3).unwrap(), p(&[0, -2, 0, 1]));
        assert_eq!(m_closed(6).unwrap(), p(&[-1, 0, 6, 0, -5, 0, 1]));
    }

    #[test]
    fn extended_family_signs() {
        assert!(m_extended(-1).is_zero());
        assert_eq!(m_extended(-2), -p(&[1]));
        assert_eq!(m_extended(-5), -p(&[0, -2, 0, 1]));
    }

    #[test]
    fn diff_closed_examples() {
        assert_eq!(m_diff_closed(2).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(m_diff_closed(3).unwrap(), p(&[0, -3, 0, 1]));
        assert_eq!(m_diff_closed(5).unwrap(), p(&[0, 5, 0, -5, 0, 1]));
        assert!(m_diff_closed(1).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_base(2).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(f_base(3).unwrap(), p(&[0, -3, 0, 1]));
        assert_eq!(f_base(5).unwrap(), p(&[0, 5, 0, -5, 0, 1]));
        assert_eq!(f_base(4), Err(Error::NotPrime(4)));
        assert_eq!(f_iter(2, 2).unwrap(), p(&[2, 0, -4, 0, 1]));
        assert_eq!(f_iter(7, 0).unwrap(), IntPoly::x());
        assert_eq!(f_iter(3, 1).unwrap(), p(&[0, -3, 0, 1]));
        let eight = p(&[2, 0, -16, 0, 20, 0, -8, 0, 1]);
        assert_eq!(f_iter(2, 3).unwrap(), eight);
        assert_eq!(f_g_closed(2, 3).unwrap(), eight);
        assert_eq!(f_g_closed(2, 2).unwrap(), p(&[2, 0, -4, 0, 1]));
        assert_eq!(f_g_closed(3, 1).unwrap(), p(&[0, -3, 0, 1]));
    }
}
