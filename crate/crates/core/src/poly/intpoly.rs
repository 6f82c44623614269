use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are always trimmed,
/// so the zero polynomial is the empty vector and every other polynomial has a
/// nonzero leading coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with `None` standing for the degree of the zero polynomial
    /// (negative infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when every coefficient of odd (`parity == 1`) or even
    /// (`parity == 0`) degree vanishes.
    pub fn has_only_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == parity || c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Division by a monic divisor of positive degree: returns `(q, r)` with
    /// `self = q*m + r` and `deg r < deg m`.
    pub fn divmod_monic(&self, m: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dm = match m.degree() {
            Some(d) if d >= 1 && m.is_monic() => d,
            _ => return Err(Error::NonMonicDivisor),
        };
        let da = match self.degree() {
            Some(d) if d >= dm => d,
            _ => return Ok((IntPoly::zero(), self.clone())),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - dm + 1];
        let divisor: Vec<(usize, &BigInt)> = m.coeffs[..dm]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for top in (dm..=da).rev() {
            let lead = std::mem::take(&mut rem[top]);
            if lead.is_zero() {
                continue;
            }
            let base = top - dm;
            for &(j, c) in &divisor {
                rem[base + j] -= &lead * c;
            }
            quot[base] = lead;
        }
        rem.truncate(dm);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Remainder modulo a monic divisor.
    pub fn rem_monic(&self, m: &IntPoly) -> Result<IntPoly> {
        self.divmod_monic(m).map(|(_, r)| r)
    }

    /// `self(inner)` by Horner's scheme.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc.add_constant(c);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, computed without
    /// leaving the integers.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = &b.coeffs[db];
        let mut rem = self.coeffs.clone();
        for top in (db..=da).rev() {
            let lead = std::mem::take(&mut rem[top]);
            for c in rem[..top].iter_mut() {
                *c *= lb;
            }
            if lead.is_zero() {
                continue;
            }
            let base = top - db;
            for (j, c) in b.coeffs[..db].iter().enumerate() {
                if !c.is_zero() {
                    rem[base + j] -= &lead * c;
                }
            }
        }
        rem.truncate(db);
        IntPoly::new(rem)
    }

    /// Greatest common divisor in `Z[x]`, normalised to be primitive with a
    /// positive leading coefficient (zero if both inputs are zero).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -a;
        }
        if a.degree() == Some(0) {
            return IntPoly::constant(content);
        }
        a.scale(&content)
    }

    /// Exact quotient in `Z[x]`; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        let Some(da) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if da < dd {
            return None;
        }
        let ld = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - dd + 1];
        for top in (dd..=da).rev() {
            let lead = std::mem::take(&mut rem[top]);
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(ld);
            if !r.is_zero() {
                return None;
            }
            let base = top - dd;
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                if !c.is_zero() {
                    rem[base + j] -= &q * c;
                }
            }
            quot[base] = q;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| IntPoly::new(quot))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
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

    fn add_constant(&mut self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(c.clone());
        } else {
            self.coeffs[0] += c;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() < b.len() { (b, a) } else { (a, b) };
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (j, bj) in b.iter().enumerate() {
        if bj.is_zero() {
            continue;
        }
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(mul_dense(&self.coeffs, &rhs.coeffs))
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}
