//! The quotient ring `Z[x] / (f^[g](x) - x)`.
//!
//! Elements are stored by their coordinates in the basis `m_0, ..., m_{q-1}`
//! of the quotient. This basis is related to the monomials `1, x, ...,
//! x^{q-1}` by a unitriangular integer matrix, so coordinates determine the
//! canonical residue and vice versa; the residue is materialised on demand.
//! Reduction of `m_n` for `n >= q` uses a table derived from the modulus.

mod identity;
mod kernel;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{f_base, f_iter_shared, m_shared};
use crate::numth::is_prime;
use crate::poly::IntPoly;

pub use identity::{identity_sweep, unreduced_sides, verify_identity, Identity, IdentityReport, SweepReport};
pub(crate) use kernel::Sparse;
use kernel::{cg_mul, nonzeros, sparse_refs, times_x, to_sparse, Accum};

/// The finite field data `(p, g, q = p^g)` together with lazily built
/// caches for ring arithmetic. Cloning is cheap and shares the caches.
#[derive(Clone)]
pub struct GroundField(Arc<FieldInner>);

struct FieldInner {
    p: u64,
    g: u32,
    q: u64,
    f: IntPoly,
    modulus: OnceLock<IntPoly>,
    /// Reduced coordinates of `m_n` for `n >= q`, entry `n - q`.
    tail: RwLock<Vec<Arc<Sparse>>>,
    /// Reduced `f^[i](x)` for `0 <= i < g`.
    twist_gens: OnceLock<Vec<Sparse>>,
    /// `m_k(f^[i](x))` for `0 <= k < p`, keyed `i * p + k`.
    twisted_sym: Mutex<Vec<Option<Arc<Sparse>>>>,
    /// Coordinates of the Steinberg basis element with base-`p` index `n`.
    basis: OnceLock<Vec<OnceLock<Arc<Sparse>>>>,
    /// `m_n(2)` for `0 <= n < q`.
    dims: OnceLock<Vec<BigInt>>,
}

impl GroundField {
    pub fn new(p: u64, g: u32) -> Result<GroundField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if g == 0 {
            return Err(Error::InvalidArgument("g must be at least 1".into()));
        }
        let q = p
            .checked_pow(g)
            .filter(|&q| usize::try_from(q).is_ok() && q <= i64::MAX as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("q = {p}^{g} is too large")))?;
        Ok(GroundField(Arc::new(FieldInner {
            p,
            g,
            q,
            f: f_base(p)?,
            modulus: OnceLock::new(),
            tail: RwLock::new(Vec::new()),
            twist_gens: OnceLock::new(),
            twisted_sym: Mutex::new(vec![None; (p as usize) * g as usize]),
            basis: OnceLock::new(),
            dims: OnceLock::new(),
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn g(&self) -> u32 {
        self.0.g
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    fn qu(&self) -> usize {
        self.0.q as usize
    }

    /// `f` for this characteristic.
    pub fn f(&self) -> &IntPoly {
        &self.0.f
    }

    /// `f^[g](x) - x`, computed by iterated composition on first use.
    pub fn modulus(&self) -> &IntPoly {
        self.0.modulus.get_or_init(|| {
            let fg = f_iter_shared(self.0.p, self.0.g).expect("p checked prime");
            &*fg - &IntPoly::x()
        })
    }

    /// True when the exact modulus has already been built.
    pub fn has_modulus(&self) -> bool {
        self.0.modulus.get().is_some()
    }

    pub fn same_as(&self, other: &GroundField) -> bool {
        self.0.p == other.0.p && self.0.g == other.0.g
    }

    fn check_same(&self, other: &GroundField) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left_p: self.0.p,
                left_g: self.0.g,
                right_p: other.0.p,
                right_g: other.0.g,
            })
        }
    }

    /// Reduced coordinates of `m_n`, `n >= q`.
    fn tail(&self, n: usize) -> Arc<Sparse> {
        let q = self.qu();
        debug_assert!(n >= q);
        if let Some(t) = self.0.tail.read().unwrap().get(n - q) {
            return Arc::clone(t);
        }
        let mut tail = self.0.tail.write().unwrap();
        if tail.is_empty() {
            tail.push(Arc::new(self.top_relation()));
        }
        while tail.len() <= n - q {
            // m_{k} = x * m_{k-1} - m_{k-2} with k = q + len
            let k = q + tail.len();
            let prev = Arc::clone(&tail[k - 1 - q]);
            let mut acc = Accum::default();
            for (j, c) in prev.iter() {
                if *j + 1 == q {
                    acc.add_scaled(&tail[0], c);
                } else {
                    acc.add(j + 1, c);
                }
                if *j > 0 {
                    acc.add(j - 1, c);
                }
            }
            if k - 2 >= q {
                for (j, c) in tail[k - 2 - q].iter() {
                    acc.sub(*j, c);
                }
            } else {
                acc.sub(k - 2, &BigInt::one());
            }
            tail.push(Arc::new(acc.finish()));
        }
        Arc::clone(&tail[n - q])
    }

    /// `m_q` expressed through `m_0, ..., m_{q-1}` using the modulus.
    fn top_relation(&self) -> Sparse {
        let q = self.qu();
        let unreduced = poly_to_m_coords(self.modulus());
        assert_eq!(unreduced.len(), q + 1);
        assert!(unreduced[q].is_one(), "modulus must be monic");
        unreduced[..q]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, -v))
            .collect()
    }

    /// Folds coordinates of index `>= q` back below `q`.
    fn reduce_long(&self, mut long: Vec<BigInt>) -> Vec<BigInt> {
        let q = self.qu();
        if long.len() <= q {
            long.resize(q, BigInt::zero());
            return long;
        }
        let high = long.split_off(q);
        for (k, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, t) in self.tail(q + k).iter() {
                long[*j] += c * t;
            }
        }
        long
    }

    fn twist_gens(&self) -> &[Sparse] {
        self.0.twist_gens.get_or_init(|| {
            (0..self.0.g)
                .map(|i| {
                    let fi = f_iter_shared(self.0.p, i).expect("p checked prime");
                    to_sparse(&self.reduce_coords(&fi))
                })
                .collect()
        })
    }

    /// Coordinates of the class of `a`, by Horner's scheme in coordinates.
    fn reduce_coords(&self, a: &IntPoly) -> Vec<BigInt> {
        let q = self.qu();
        let mut acc = vec![BigInt::zero(); q];
        let top = self.tail(q);
        for c in a.coeffs().iter().rev() {
            let mut next = times_x(&acc);
            let spill = next.pop().expect("times_x grows by one");
            if !spill.is_zero() {
                for (j, t) in top.iter() {
                    next[*j] += &spill * t;
                }
            }
            next[0] += c;
            acc = next;
        }
        acc
    }

    /// Reduced coordinates of `m_k(f^[i](x))` for `k < p`, `i < g`.
    fn twisted_sym(&self, i: usize, k: usize) -> Arc<Sparse> {
        let p = self.0.p as usize;
        if let Some(hit) = &self.0.twisted_sym.lock().unwrap()[i * p + k] {
            return Arc::clone(hit);
        }
        let y = &self.twist_gens()[i];
        let value = match k {
            0 => vec![(0, BigInt::one())],
            1 => y.clone(),
            _ => {
                let prev = self.twisted_sym(i, k - 1);
                let prev2 = self.twisted_sym(i, k - 2);
                let mut prod = self.reduce_long(cg_mul(&sparse_refs(&prev), &sparse_refs(y)));
                for (j, c) in prev2.iter() {
                    prod[*j] -= c;
                }
                to_sparse(&prod)
            }
        };
        let value = Arc::new(value);
        self.0.twisted_sym.lock().unwrap()[i * p + k] = Some(Arc::clone(&value));
        value
    }

    /// Coordinates of the Steinberg basis element with base-`p` index `n`.
    pub(crate) fn basis_coords(&self, n: usize) -> Arc<Sparse> {
        let slots = self
            .0
            .basis
            .get_or_init(|| (0..self.qu()).map(|_| OnceLock::new()).collect());
        if let Some(hit) = slots[n].get() {
            return Arc::clone(hit);
        }
        let value = if n == 0 {
            Arc::new(vec![(0, BigInt::one())])
        } else {
            let p = self.0.p as usize;
            let mut top = 0;
            let mut scale = 1usize;
            while scale * p <= n {
                scale *= p;
                top += 1;
            }
            let k = n / scale;
            let low = n % scale;
            let factor = self.twisted_sym(top, k);
            if low == 0 {
                factor
            } else {
                let rest = self.basis_coords(low);
                let prod = cg_mul(&sparse_refs(&rest), &sparse_refs(&factor));
                Arc::new(to_sparse(&self.reduce_long(prod)))
            }
        };
        Arc::clone(slots[n].get_or_init(|| value))
    }

    fn dims(&self) -> &[BigInt] {
        self.0.dims.get_or_init(|| {
            let q = self.qu();
            let two = BigInt::from(2);
            let mut v: Vec<BigInt> = Vec::with_capacity(q);
            for n in 0..q {
                let next = match n {
                    0 => BigInt::one(),
                    1 => two.clone(),
                    _ => &two * &v[n - 1] - &v[n - 2],
                };
                v.push(next);
            }
            v
        })
    }
}

impl fmt::Debug for GroundField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundField(p={}, g={}, q={})", self.0.p, self.0.g, self.0.q)
    }
}

impl PartialEq for GroundField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GroundField {}

/// Coordinates of `a` in `m_0, ..., m_{deg a}` with no reduction.
pub(crate) fn poly_to_m_coords(a: &IntPoly) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = Vec::new();
    for c in a.coeffs().iter().rev() {
        acc = times_x(&acc);
        if acc.is_empty() {
            acc.push(BigInt::zero());
        }
        acc[0] += c;
    }
    acc
}

/// `sum_n c[n] * m_n(x)`.
pub(crate) fn m_coords_to_poly(c: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); c.len()];
    for (n, v) in c.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let m = m_shared(n);
        for (i, a) in m.coeffs().iter().enumerate() {
            if !a.is_zero() {
                out[i] += v * a;
            }
        }
    }
    IntPoly::new(out)
}

/// A class in the Grothendieck ring, i.e. an element of the quotient.
#[derive(Clone)]
pub struct RingElt {
    field: GroundField,
    coords: Vec<BigInt>,
    residue: OnceLock<IntPoly>,
}

impl RingElt {
    fn from_raw(field: &GroundField, coords: Vec<BigInt>) -> RingElt {
        debug_assert_eq!(coords.len(), field.qu());
        RingElt {
            field: field.clone(),
            coords,
            residue: OnceLock::new(),
        }
    }

    /// The class of `a` modulo `f^[g](x) - x`.
    pub fn reduce(a: &IntPoly, field: &GroundField) -> RingElt {
        RingElt::from_raw(field, field.reduce_coords(a))
    }

    pub fn zero(field: &GroundField) -> RingElt {
        RingElt::from_raw(field, vec![BigInt::zero(); field.qu()])
    }

    pub fn one(field: &GroundField) -> RingElt {
        RingElt::unit(field, 0)
    }

    /// The generator, the class of `x`.
    pub fn generator(field: &GroundField) -> RingElt {
        RingElt::sym_class(1, field)
    }

    fn unit(field: &GroundField, n: usize) -> RingElt {
        let mut c = vec![BigInt::zero(); field.qu()];
        c[n] = BigInt::one();
        RingElt::from_raw(field, c)
    }

    pub(crate) fn from_sparse(field: &GroundField, s: &Sparse) -> RingElt {
        let mut c = vec![BigInt::zero(); field.qu()];
        for (i, v) in s {
            c[*i] = v.clone();
        }
        RingElt::from_raw(field, c)
    }

    /// Builds an element from its coordinates in `m_0, ..., m_{q-1}`.
    pub fn from_m_coords(field: &GroundField, mut coords: Vec<BigInt>) -> Result<RingElt> {
        if coords.len() > field.qu() {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates given for a ring of rank {}",
                coords.len(),
                field.q()
            )));
        }
        coords.resize(field.qu(), BigInt::zero());
        Ok(RingElt::from_raw(field, coords))
    }

    /// The class `M_k` of the `k`-th symmetric power, extended to all
    /// integers by `M_{-1} = 0` and `M_k = -M_{-k-2}`.
    pub fn sym_class(k: i64, field: &GroundField) -> RingElt {
        match k {
            -1 => RingElt::zero(field),
            ..=-2 => -RingElt::sym_class(-k - 2, field),
            _ => {
                let n = k as usize;
                if n < field.qu() {
                    RingElt::unit(field, n)
                } else {
                    RingElt::from_sparse(field, &field.tail(n))
                }
            }
        }
    }

    pub fn field(&self) -> &GroundField {
        &self.field
    }

    /// Coordinates in `m_0, ..., m_{q-1}`.
    pub fn m_coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// The canonical residue, of degree below `q`.
    pub fn residue(&self) -> &IntPoly {
        self.residue.get_or_init(|| m_coords_to_poly(&self.coords))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn checked_add(&self, rhs: &RingElt) -> Result<RingElt> {
        self.field.check_same(&rhs.field)?;
        let c = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        Ok(RingElt::from_raw(&self.field, c))
    }

    pub fn checked_sub(&self, rhs: &RingElt) -> Result<RingElt> {
        self.field.check_same(&rhs.field)?;
        let c = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        Ok(RingElt::from_raw(&self.field, c))
    }

    pub fn checked_mul(&self, rhs: &RingElt) -> Result<RingElt> {
        self.field.check_same(&rhs.field)?;
        let prod = cg_mul(&nonzeros(&self.coords), &nonzeros(&rhs.coords));
        Ok(RingElt::from_raw(&self.field, self.field.reduce_long(prod)))
    }

    pub fn scale(&self, c: &BigInt) -> RingElt {
        RingElt::from_raw(&self.field, self.coords.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u64) -> RingElt {
        let mut base = self.clone();
        let mut acc = RingElt::one(&self.field);
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

    /// Frobenius twist, the ring endomorphism induced by `x -> f^[i](x)`;
    /// `i` is taken modulo `g`.
    ///
    /// Computed one step at a time on weights: the class `sum c_n m_n` has
    /// formal character `sum c_n (t^n + t^{n-2} + ... + t^-n)`, and
    /// substituting `f` for `x` replaces `t` by `t^p` because
    /// `f = m_p - m_{p-2}` has character `t^p + t^-p`.
    pub fn frobenius_twist(&self, i: i64) -> RingElt {
        let i = i.rem_euclid(self.field.g() as i64);
        let mut out = self.clone();
        for _ in 0..i {
            out = out.twist_once();
        }
        out
    }

    fn twist_once(&self) -> RingElt {
        let field = &self.field;
        let Some(top) = self.coords.iter().rposition(|c| !c.is_zero()) else {
            return self.clone();
        };
        let p = field.p() as usize;
        // chi[e] = coefficient of t^e (e >= 0) in the character of self.
        let mut chi = vec![BigInt::zero(); top + 3];
        for e in (0..=top).rev() {
            chi[e] = &self.coords[e] + &chi[e + 2];
        }
        // Twisted character has chi'(p e) = chi(e); recover m-coordinates
        // from c_N = chi'(N) - chi'(N + 2).
        let weight = |n: usize| -> Option<&BigInt> {
            (n % p == 0).then(|| &chi[n / p]).filter(|c| !c.is_zero())
        };
        let mut long = vec![BigInt::zero(); p * top + 1];
        for (n, slot) in long.iter_mut().enumerate() {
            if let Some(c) = weight(n) {
                *slot += c;
            }
            if let Some(c) = weight(n + 2) {
                *slot -= c;
            }
        }
        RingElt::from_raw(field, field.reduce_long(long))
    }

    /// Frobenius twist by literal substitution of the reduced `f^[i](x)`
    /// into `sum c_n m_n(x)` (Clenshaw's recurrence). Slower than
    /// [`RingElt::frobenius_twist`], which it is used to cross-check.
    pub fn frobenius_twist_by_substitution(&self, i: i64) -> RingElt {
        let field = &self.field;
        let i = i.rem_euclid(field.g() as i64) as usize;
        if i == 0 {
            return self.clone();
        }
        let y = sparse_refs(&field.twist_gens()[i]);
        // b_n = c_n + y*b_{n+1} - b_{n+2}; the sum is b_0.
        let q = field.qu();
        let Some(top) = self.coords.iter().rposition(|c| !c.is_zero()) else {
            return self.clone();
        };
        let mut b1 = vec![BigInt::zero(); q];
        let mut b2 = vec![BigInt::zero(); q];
        for n in (0..=top).rev() {
            let mut next = field.reduce_long(cg_mul(&nonzeros(&b1), &y));
            for (a, b) in next.iter_mut().zip(&b2) {
                if !b.is_zero() {
                    *a -= b;
                }
            }
            next[0] += &self.coords[n];
            b2 = std::mem::replace(&mut b1, next);
        }
        RingElt::from_raw(field, b1)
    }

    /// True when the residues of `self` and `rhs` agree modulo `p`.
    pub fn congruent_mod_p(&self, rhs: &RingElt) -> Result<bool> {
        self.field.check_same(&rhs.field)?;
        // The m-basis and the monomial basis differ by a unimodular matrix,
        // so divisibility of the difference is basis independent.
        let p = BigInt::from(self.field.p());
        Ok(self
            .coords
            .iter()
            .zip(&rhs.coords)
            .all(|(a, b)| (a - b).is_multiple_of(&p)))
    }

    /// The residue evaluated at 2, the dimension of a virtual module.
    pub fn dim(&self) -> BigInt {
        let dims = self.field.dims();
        self.coords
            .iter()
            .zip(dims)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, d)| c * d)
            .sum()
    }
}

impl PartialEq for RingElt {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.coords == other.coords
    }
}

impl Eq for RingElt {}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [p={},g={}]", self.residue(), self.field.p(), self.field.g())
    }
}

impl fmt::Debug for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElt({self})")
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands live over different fields; use the
        /// `checked_*` methods to get an error instead.
        impl $trait<&RingElt> for &RingElt {
            type Output = RingElt;
            fn $method(self, rhs: &RingElt) -> RingElt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for RingElt {
            type Output = RingElt;
            fn $method(self, rhs: RingElt) -> RingElt {
                (&self).$method(&rhs)
            }
        }
    };
}

checked_op!(Add, add, checked_add);
checked_op!(Sub, sub, checked_sub);
checked_op!(Mul, mul, checked_mul);

impl Neg for RingElt {
    type Output = RingElt;
    fn neg(self) -> RingElt {
        RingElt::from_raw(&self.field, self.coords.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &RingElt {
    type Output = RingElt;
    fn neg(self) -> RingElt {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn field(p: u64, g: u32) -> GroundField {
        GroundField::new(p, g).unwrap()
    }

    #[test]
    fn field_validation() {
        assert_eq!(GroundField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(GroundField::new(2, 0).is_err());
        assert_eq!(field(2, 2).modulus(), &p(&[2, -1, -4, 0, 1]));
    }

    #[test]
    fn reduce_examples() {
        let f21 = field(2, 1);
        assert_eq!(RingElt::reduce(&p(&[0, 0, 1]), &f21).residue(), &p(&[2, 1]));
        assert_eq!(RingElt::reduce(&IntPoly::x(), &f21).residue(), &IntPoly::x());
        let f31 = field(3, 1);
        assert_eq!(RingElt::reduce(&p(&[0, -2, 0, 1]), &f31).residue(), &p(&[0, 2]));
    }

    #[test]
    fn multiplication_examples() {
        let f21 = field(2, 1);
        let x = RingElt::generator(&f21);
        assert_eq!((&x * &x).residue(), &p(&[2, 1]));
        let f31 = field(3, 1);
        let a = RingElt::reduce(&p(&[-1, 0, 1]), &f31);
        let x = RingElt::generator(&f31);
        assert_eq!((&a * &x).residue(), &p(&[0, 3]));
        assert_eq!(&RingElt::one(&f31) * &a, a);
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = RingElt::one(&field(2, 1));
        let b = RingElt::one(&field(3, 1));
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch { .. })));
        assert!(a.congruent_mod_p(&b).is_err());
    }

    #[test]
    fn twist_examples() {
        let f22 = field(2, 2);
        let x = RingElt::generator(&f22);
        assert_eq!(x.frobenius_twist(1).residue(), &p(&[-2, 0, 1]));
        assert_eq!(x.frobenius_twist(2), x);
        assert_eq!(x.frobenius_twist(-1), x.frobenius_twist(1));
        let a = RingElt::reduce(&p(&[3, 1, 4, 1]), &f22);
        assert_eq!(a.frobenius_twist(0), a);
    }

    #[test]
    fn twist_routes_agree() {
        for (pp, g) in [(2, 3), (3, 2), (5, 2), (7, 2), (2, 5)] {
            let f = field(pp, g);
            let a = RingElt::reduce(&p(&[3, -1, 4, 1, -5, 9, 2, -6]), &f);
            for i in 0..g as i64 {
                assert_eq!(a.frobenius_twist(i), a.frobenius_twist_by_substitution(i), "p={pp} g={g} i={i}");
            }
            for k in [0, 1, pp as i64, f.q() as i64 - 1] {
                let m = RingElt::sym_class(k, &f);
                assert_eq!(m.frobenius_twist(1), m.frobenius_twist_by_substitution(1));
            }
        }
    }

    #[test]
    fn sym_class_examples() {
        let f21 = field(2, 1);
        assert!(RingElt::sym_class(-1, &f21).is_zero());
        assert_eq!(RingElt::sym_class(2, &f21).residue(), &p(&[1, 1]));
        let f51 = field(5, 1);
        assert_eq!(RingElt::sym_class(-5, &f51), -RingElt::sym_class(3, &f51));
        for k in 0..40 {
            let direct = RingElt::reduce(&crate::family::m_recur(k).unwrap(), &f51);
            assert_eq!(RingElt::sym_class(k, &f51), direct, "k = {k}");
        }
    }

    #[test]
    fn congruence_examples() {
        let f21 = field(2, 1);
        let a = RingElt::reduce(&p(&[2, 1]), &f21);
        let b = RingElt::generator(&f21);
        assert!(a.congruent_mod_p(&b).unwrap());
        assert!(a.congruent_mod_p(&a).unwrap());
        assert!(!a.congruent_mod_p(&RingElt::one(&f21)).unwrap());
        for (pp, g) in [(2, 2), (3, 1), (5, 1)] {
            let f = field(pp, g);
            let x = RingElt::generator(&f);
            assert!(x.frobenius_twist(1).congruent_mod_p(&x.pow(pp)).unwrap());
        }
    }

    #[test]
    fn dim_is_evaluation_at_two() {
        let f = field(3, 2);
        for k in 0..30 {
            assert_eq!(RingElt::sym_class(k, &f).dim(), BigInt::from(k + 1));
        }
        let a = RingElt::reduce(&p(&[5, -1, 0, 2, 7]), &f);
        assert_eq!(a.dim(), a.residue().eval_i64(2));
    }

    #[test]
    fn display_has_field_tag() {
        let f21 = field(2, 1);
        assert_eq!(RingElt::sym_class(2, &f21).to_string(), "x + 1 [p=2,g=1]");
    }
}
