//! Real and rational roots of `f(x) - x`, and the special values of `m_n`
//! at 1 and 2.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{f_base, m_shared};
use crate::poly::IntPoly;

/// Integer roots `r` with `|r| <= bound`, in increasing order.
pub fn small_rational_roots(a: &IntPoly, bound: u64) -> Result<Vec<i64>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let b = bound as i64;
    Ok((-b..=b).filter(|&r| a.eval_i64(r).is_zero()).collect())
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(c: &BigInt) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of a square-free polynomial, by a Sturm
/// chain over `Z` with each remainder replaced by its primitive part.
pub fn sturm_real_count(a: &IntPoly) -> Result<usize> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let da = a.derivative();
    let g = a.gcd(&da);
    if g.degree().unwrap_or(0) > 0 {
        return Err(Error::not_square_free(&g));
    }
    let mut chain = vec![a.primitive_part(), da.primitive_part()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = pseudo_rem_sign_safe(&chain[n - 2], &chain[n - 1]);
        chain.push(-r.primitive_part());
    }
    let at_pos_inf = chain.iter().map(|s| sign(s.leading().expect("nonzero")));
    let at_neg_inf = chain.iter().map(|s| {
        let l = sign(s.leading().expect("nonzero"));
        if s.degree().unwrap_or(0) % 2 == 1 {
            -l
        } else {
            l
        }
    });
    Ok(sign_changes(at_neg_inf) - sign_changes(at_pos_inf))
}

/// A positive multiple of the remainder of `a` by `b`.
fn pseudo_rem_sign_safe(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let r = a.pseudo_rem(b);
    let lb = b.leading().expect("nonzero divisor");
    let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
    let steps = if da >= db { da - db + 1 } else { 0 };
    if lb.is_negative() && steps % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Roots report for `f(x) - x` in characteristic `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootsReport {
    pub p: u64,
    pub degree: usize,
    pub rational_roots: Vec<i64>,
    pub real_root_count: usize,
    pub all_real: bool,
    /// `gcd(a, a')` when `a` has repeated roots; the count is then of
    /// distinct roots, taken from the square-free part.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repeated_factor: Option<String>,
}

pub fn roots_report(p: u64, bound: u64) -> Result<RootsReport> {
    let a = &f_base(p)? - &IntPoly::x();
    let degree = a.degree().expect("degree p");
    let (real_root_count, repeated_factor) = match sturm_real_count(&a) {
        Ok(n) => (n, None),
        Err(Error::NotSquareFree { witness }) => {
            let square_free = a
                .exact_div(&a.gcd(&a.derivative()))
                .ok_or_else(|| Error::Internal("gcd does not divide its argument".into()))?;
            (sturm_real_count(&square_free)?, Some(witness))
        }
        Err(e) => return Err(e),
    };
    Ok(RootsReport {
        p,
        degree,
        rational_roots: small_rational_roots(&a, bound)?,
        real_root_count,
        all_real: repeated_factor.is_none() && real_root_count == degree,
        repeated_factor,
    })
}

/// `m_n(1)` is 1, 1, 0, -1, -1, 0 according to `n mod 6`.
pub fn m_at_one_expected(n: u64) -> i64 {
    match n % 6 {
        0 | 1 => 1,
        2 | 5 => 0,
        _ => -1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialValueFailure {
    pub n: u64,
    pub at_two: String,
    pub at_one: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialValuesReport {
    pub n_max: u64,
    pub holds: bool,
    pub first_counterexample: Option<SpecialValueFailure>,
}

/// Checks `m_n(2) = n + 1` and the six-periodic table for `m_n(1)`, with
/// both sides evaluated from the explicit polynomials.
pub fn special_values_report(n_max: u64) -> SpecialValuesReport {
    let first_counterexample = (0..=n_max).find_map(|n| {
        let m = m_shared(n as usize);
        let two = m.eval_i64(2);
        let one = m.eval_i64(1);
        if two == BigInt::from(n + 1) && one == BigInt::from(m_at_one_expected(n)) {
            None
        } else {
            Some(SpecialValueFailure {
                n,
                at_two: two.to_string(),
                at_one: one.to_string(),
            })
        }
    });
    SpecialValuesReport {
        n_max,
        holds: first_counterexample.is_none(),
        first_counterexample,
    }
}
