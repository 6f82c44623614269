//! Arithmetic on coordinate vectors in the basis `m_0, m_1, ...`.
//!
//! In this basis multiplication is the Clebsch–Gordan rule
//! `m_a * m_b = m_{|a-b|} + m_{|a-b|+2} + ... + m_{a+b}` and multiplication by
//! `x = m_1` is `m_j -> m_{j-1} + m_{j+1}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse coordinate list, sorted by index, zero entries absent.
pub(crate) type Sparse = Vec<(usize, BigInt)>;

pub(crate) fn nonzeros(c: &[BigInt]) -> Vec<(usize, &BigInt)> {
    c.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

pub(crate) fn sparse_refs(s: &Sparse) -> Vec<(usize, &BigInt)> {
    s.iter().map(|(i, v)| (*i, v)).collect()
}

pub(crate) fn to_sparse(c: &[BigInt]) -> Sparse {
    c.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Unreduced product of two coordinate lists. The result has length
/// `max_a + max_b + 1` (empty if either side is zero).
pub(crate) fn cg_mul(a: &[(usize, &BigInt)], b: &[(usize, &BigInt)]) -> Vec<BigInt> {
    let (Some(&(amax, _)), Some(&(bmax, _))) = (a.last(), b.last()) else {
        return Vec::new();
    };
    let len = amax + bmax + 1;
    let mut diff = vec![BigInt::zero(); len + 2];
    for &(i, ca) in a {
        for &(j, cb) in b {
            let v = ca * cb;
            diff[i.abs_diff(j)] += &v;
            diff[i + j + 2] -= v;
        }
    }
    for k in 2..len {
        let (lo, hi) = diff.split_at_mut(k);
        hi[0] += &lo[k - 2];
    }
    diff.truncate(len);
    diff
}

/// Multiplies by `x` without reduction; output has one more slot.
pub(crate) fn times_x(a: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + 1];
    for (j, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out[j + 1] += c;
        if j > 0 {
            out[j - 1] += c;
        }
    }
    out
}

/// Sparse accumulator used while building tables.
#[derive(Default)]
pub(crate) struct Accum(BTreeMap<usize, BigInt>);

impl Accum {
    pub(crate) fn add(&mut self, i: usize, v: &BigInt) {
        *self.0.entry(i).or_default() += v;
    }

    pub(crate) fn sub(&mut self, i: usize, v: &BigInt) {
        *self.0.entry(i).or_default() -= v;
    }

    pub(crate) fn add_scaled(&mut self, s: &Sparse, c: &BigInt) {
        for (i, v) in s {
            *self.0.entry(*i).or_default() += v * c;
        }
    }

    pub(crate) fn finish(self) -> Sparse {
        self.0.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}
