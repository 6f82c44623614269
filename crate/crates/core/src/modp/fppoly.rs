//! Dense polynomials over a prime field `F_p`.
//!
//! Every routine skips zero coefficients, so the sparse inputs that dominate
//! this crate (binomials, monomials, `x^q - x`) stay cheap even at large
//! degree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

impl FpPoly {
    /// Builds a polynomial from coefficients (low degree first), reducing
    /// each mod `p`. `p` must be prime; inverses are taken by Fermat.
    pub fn new(p: u64, coeffs: Vec<u64>) -> FpPoly {
        let mut out = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        out.trim();
        out
    }

    pub fn from_int_poly(a: &IntPoly, p: u64) -> FpPoly {
        let pb = BigInt::from(p);
        let coeffs = a
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue below p"))
            .collect();
        FpPoly::new(p, coeffs)
    }

    pub fn zero(p: u64) -> FpPoly {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> FpPoly {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> FpPoly {
        FpPoly::monomial(p, 1, 1)
    }

    pub fn monomial(p: u64, c: u64, n: usize) -> FpPoly {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = c;
        FpPoly::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn nonzeros(&self) -> Vec<(usize, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        FpPoly::new(self.p, c)
    }

    pub fn neg(&self) -> FpPoly {
        let c = self.coeffs.iter().map(|&a| (self.p - a) % self.p).collect();
        FpPoly::new(self.p, c)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let c = c % self.p;
        FpPoly::new(self.p, self.coeffs.iter().map(|&a| mulmod(a, c, self.p)).collect())
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let (mut a, mut b) = (self.nonzeros(), rhs.nonzeros());
        let mut dense = &rhs.coeffs;
        if a.len() > b.len() {
            std::mem::swap(&mut a, &mut b);
            dense = &self.coeffs;
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        // Accumulate without reduction while the sum provably fits; each
        // slot receives at most one product per term of `a`.
        let bound = (p - 1) as u128 * (p - 1) as u128 * a.len() as u128;
        if bound < u64::MAX as u128 {
            let mut acc = vec![0u64; len];
            if 4 * b.len() >= dense.len() {
                for &(i, x) in &a {
                    for (o, &y) in acc[i..].iter_mut().zip(dense.iter()) {
                        *o += x * y;
                    }
                }
            } else {
                for &(i, x) in &a {
                    for &(j, y) in &b {
                        acc[i + j] += x * y;
                    }
                }
            }
            return FpPoly::new(p, acc);
        }
        let mut acc = vec![0u64; len];
        for &(i, x) in &a {
            for &(j, y) in &b {
                acc[i + j] = (acc[i + j] + mulmod(x, y, p)) % p;
            }
        }
        FpPoly::new(p, acc)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    /// Scales to leading coefficient 1; the zero polynomial is unchanged.
    pub fn monic(&self) -> FpPoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(inv_mod(l, self.p)),
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divmod(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.coeffs[dd], p);
        let tail: Vec<(usize, u64)> = d.nonzeros().into_iter().filter(|&(j, _)| j < dd).collect();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (FpPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i] == 0 {
                continue;
            }
            let c = mulmod(r[i], inv, p);
            quot[i - dd] = c;
            r[i] = 0;
            for &(j, dj) in &tail {
                let k = i - dd + j;
                r[k] = (r[k] + p - mulmod(c, dj, p)) % p;
            }
        }
        r.truncate(dd);
        (FpPoly::new(p, quot), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divmod(d).1
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, i as u64 % p, p))
            .collect();
        FpPoly::new(p, c)
    }

    /// `self^e mod m` by binary exponentiation.
    pub fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// `self^e` without a modulus.
    pub fn pow(&self, mut e: u64) -> FpPoly {
        let mut base = self.clone();
        let mut acc = FpPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self(inner)`, summing `c_j * inner^j` over the nonzero terms.
    pub fn compose(&self, inner: &FpPoly) -> FpPoly {
        let mut out = FpPoly::zero(self.p);
        let mut power = FpPoly::one(self.p);
        let mut at = 0u64;
        for (j, c) in self.nonzeros() {
            power = power.mul(&inner.pow(j as u64 - at));
            at = j as u64;
            out = out.add(&power.scale(c));
        }
        out
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int_poly())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly({} mod {})", self.to_int_poly(), self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    #[test]
    fn reduction_of_integer_polynomials() {
        let a = IntPoly::from_i64s(&[-1, 0, 1]);
        assert_eq!(FpPoly::from_int_poly(&a, 2), fp(2, &[1, 0, 1]));
        let b = IntPoly::from_i64s(&[0, -3, 0, 1]);
        assert_eq!(FpPoly::from_int_poly(&b, 3), FpPoly::monomial(3, 1, 3));
        assert!(FpPoly::from_int_poly(&IntPoly::from_i64s(&[5, 10]), 5).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // x^4 + x = x (x + 1) (x^2 + x + 1) over F_2
        let a = fp(2, &[0, 1, 0, 0, 1]);
        let (qt, r) = a.divmod(&fp(2, &[1, 1]));
        assert!(r.is_zero());
        assert_eq!(qt, fp(2, &[0, 1, 1, 1]));
        assert_eq!(a.gcd(&fp(2, &[1, 1, 1])), fp(2, &[1, 1, 1]));
        assert_eq!(fp(3, &[2, 0, 1]).gcd(&fp(3, &[1, 1])), fp(3, &[1, 1]));
        assert_eq!(fp(5, &[1, 2]).monic(), fp(5, &[3, 1]));
    }

    #[test]
    fn products_and_powers() {
        let a = fp(7, &[3, 5, 6]);
        let b = fp(7, &[1, 0, 4, 2]);
        let prod = a.mul(&b);
        let direct = a.to_int_poly() * b.to_int_poly();
        assert_eq!(prod, FpPoly::from_int_poly(&direct, 7));
        // Frobenius: (x + 1)^p = x^p + 1
        assert_eq!(fp(5, &[1, 1]).pow(5), fp(5, &[1, 0, 0, 0, 0, 1]));
        let m = fp(2, &[1, 1, 0, 1]);
        assert_eq!(FpPoly::x(2).pow_mod(8, &m), FpPoly::x(2).pow(8).rem(&m));
        assert_eq!(FpPoly::x(2).pow_mod(0, &m), FpPoly::one(2));
    }

    #[test]
    fn large_prime_products_reduce() {
        let p = 4_294_967_291;
        let a = fp(p, &[p - 1; 40]);
        let sq = a.mul(&a);
        assert_eq!(sq, FpPoly::from_int_poly(&(a.to_int_poly() * a.to_int_poly()), p));
    }

    #[test]
    fn composition() {
        let sq = fp(3, &[0, 0, 1]);
        let lin = fp(3, &[1, 1]);
        assert_eq!(sq.compose(&lin), fp(3, &[1, 2, 1]));
        assert_eq!(lin.compose(&sq), fp(3, &[1, 0, 1]));
        assert_eq!(FpPoly::zero(3).compose(&lin), FpPoly::zero(3));
    }

    #[test]
    fn derivative_vanishes_on_pth_powers() {
        assert!(fp(3, &[1, 0, 0, 1]).derivative().is_zero());
        assert_eq!(fp(3, &[0, 1, 1]).derivative(), fp(3, &[1, 2]));
    }

    #[test]
    fn display_uses_integer_form() {
        assert_eq!(fp(2, &[0, 1, 0, 0, 1]).to_string(), "x^4 + x");
    }
}
