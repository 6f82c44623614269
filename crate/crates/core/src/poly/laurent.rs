use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Laurent polynomial in `t` over the integers that is invariant under
/// `t -> t^-1`.
///
/// Only nonzero coefficients are stored, for both signs of the exponent.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SymLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl SymLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial_pair(0, BigInt::one())
    }

    /// `c * (t^e + t^-e)`, or `c` alone when `e == 0`.
    pub fn monomial_pair(e: i64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(-e, c.clone());
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// Sums the given `(exponent, coefficient)` terms and checks symmetry.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Result<Self> {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        for (&e, c) in &coeffs {
            let mirror = coeffs.get(&-e).cloned().unwrap_or_default();
            if &mirror != c {
                return Err(Error::Asymmetric {
                    exponent: e,
                    coeff: c.clone(),
                    mirror: -e,
                    mirror_coeff: mirror,
                });
            }
        }
        Ok(Self { coeffs })
    }

    /// Builds from coefficients `c[e]` of `t^e` for `e >= 0`; negative
    /// exponents are filled in by symmetry.
    pub fn from_nonnegative(c: &[BigInt]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, v) in c.iter().enumerate() {
            if !v.is_zero() {
                coeffs.insert(e as i64, v.clone());
                coeffs.insert(-(e as i64), v.clone());
            }
        }
        Self { coeffs }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> SymLaurent {
        if c.is_zero() {
            return SymLaurent::zero();
        }
        SymLaurent {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Replaces every exponent `e` by `m * e`.
    pub fn substitute_power(&self, m: u64) -> SymLaurent {
        assert!(m >= 1, "substitution power must be positive");
        let m = i64::try_from(m).expect("substitution power fits i64");
        SymLaurent {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e * m, v.clone())).collect(),
        }
    }

    /// Multiplies by `t^N`, `N` the negated minimum exponent, and returns the
    /// resulting ordinary polynomial.
    pub fn clear_to_poly(&self) -> IntPoly {
        let Some((&lo, _)) = self.coeffs.first_key_value() else {
            return IntPoly::zero();
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut c = vec![BigInt::zero(); (hi - lo) as usize + 1];
        for (&e, v) in &self.coeffs {
            c[(e - lo) as usize] = v.clone();
        }
        IntPoly::new(c)
    }

    /// Reduces exponents modulo `n`, returning the `n` folded sums. The
    /// result is all zeros exactly when the cleared polynomial is divisible by
    /// `t^n - 1`.
    pub fn fold_mod(&self, n: u64) -> Vec<BigInt> {
        assert!(n >= 1);
        let mut out = vec![BigInt::zero(); n as usize];
        let n = n as i64;
        for (&e, v) in &self.coeffs {
            out[e.rem_euclid(n) as usize] += v;
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> SymLaurent {
        let mut base = self.clone();
        let mut acc = SymLaurent::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn combine(&self, rhs: &SymLaurent, sign: bool) -> SymLaurent {
        let mut coeffs = self.coeffs.clone();
        for (&e, v) in &rhs.coeffs {
            let slot = coeffs.entry(e).or_default();
            if sign {
                *slot += v;
            } else {
                *slot -= v;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymLaurent { coeffs }
    }
}

impl Add<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: &SymLaurent) -> SymLaurent {
        self.combine(rhs, true)
    }
}

impl Sub<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn sub(self, rhs: &SymLaurent) -> SymLaurent {
        self.combine(rhs, false)
    }
}

impl Mul<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: &SymLaurent) -> SymLaurent {
        let (Some(&alo), Some(&blo)) = (self.coeffs.keys().next(), rhs.coeffs.keys().next()) else {
            return SymLaurent::zero();
        };
        let ahi = self.max_exp().unwrap_or(alo);
        let bhi = rhs.max_exp().unwrap_or(blo);
        let lo = alo + blo;
        let mut acc = vec![BigInt::zero(); (ahi + bhi - lo) as usize + 1];
        for (&ea, va) in &self.coeffs {
            for (&eb, vb) in &rhs.coeffs {
                acc[(ea + eb - lo) as usize] += va * vb;
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + lo, c))
            .collect();
        SymLaurent { coeffs }
    }
}

impl Add for SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: SymLaurent) -> SymLaurent {
        &self + &rhs
    }
}

impl Sub for SymLaurent {
    type Output = SymLaurent;
    fn sub(self, rhs: SymLaurent) -> SymLaurent {
        &self - &rhs
    }
}

impl Mul for SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: SymLaurent) -> SymLaurent {
        &self * &rhs
    }
}

impl Neg for SymLaurent {
    type Output = SymLaurent;
    fn neg(self) -> SymLaurent {
        SymLaurent {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}
