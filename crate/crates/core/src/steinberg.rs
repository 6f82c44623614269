//! The Steinberg basis of the ring: the `q` irreducible classes
//! `M_{k_0} (x) M_{k_1}^[1] (x) ... (x) M_{k_{g-1}}^[g-1]` with `0 <= k_i < p`.
//!
//! The basis element with base-`p` index `n = sum k_i p^i` has a residue of
//! degree exactly `n` with leading coefficient 1, so conversion from any
//! element is back-substitution from the top degree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::family::{f_iter_shared, m_shared};
use crate::numth::digits;
use crate::poly::IntPoly;
use crate::ring::{GroundField, RingElt};

/// A tuple `(k_0, ..., k_{g-1})` with `0 <= k_i <= p - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SteinbergIndex(Vec<u64>);

impl SteinbergIndex {
    pub fn new(digits: Vec<i64>, field: &GroundField) -> Result<SteinbergIndex> {
        if digits.len() != field.g() as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} digits, got {}",
                field.g(),
                digits.len()
            )));
        }
        let max = field.p() - 1;
        let mut out = Vec::with_capacity(digits.len());
        for (position, &digit) in digits.iter().enumerate() {
            if digit < 0 || digit as u64 > max {
                return Err(Error::InvalidDigit { position, digit, max });
            }
            out.push(digit as u64);
        }
        Ok(SteinbergIndex(out))
    }

    /// The tuple of base-`p` digits of `n < q`.
    pub fn from_n(n: u64, field: &GroundField) -> SteinbergIndex {
        assert!(n < field.q(), "index {n} out of range for q = {}", field.q());
        SteinbergIndex(digits(n, field.p(), field.g() as usize))
    }

    pub fn digits(&self) -> &[u64] {
        &self.0
    }

    /// `sum k_i p^i`.
    pub fn n(&self, p: u64) -> u64 {
        self.0.iter().rev().fold(0, |acc, &k| acc * p + k)
    }

    /// Dimension `prod (k_i + 1)` of the irreducible module.
    pub fn dim(&self) -> u64 {
        self.0.iter().map(|k| k + 1).product()
    }

    /// `(k_{g-1}, k_0, ..., k_{g-2})`, the index of the Frobenius twist.
    pub fn rotated(&self) -> SteinbergIndex {
        let mut d = self.0.clone();
        d.rotate_right(1);
        SteinbergIndex(d)
    }

    /// Parses `"k0,k1,...,k{g-1}"`.
    pub fn parse(s: &str, field: &GroundField) -> Result<SteinbergIndex> {
        let digits = s
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad tuple entry {d:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SteinbergIndex::new(digits, field)
    }
}

impl fmt::Display for SteinbergIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Multiplicities of the Steinberg basis elements, indexed by `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergVector {
    field: GroundField,
    mult: Vec<BigInt>,
}

impl SteinbergVector {
    pub fn new(field: &GroundField, mut mult: Vec<BigInt>) -> Result<SteinbergVector> {
        if mult.len() > field.q() as usize {
            return Err(Error::InvalidArgument(format!(
                "{} multiplicities for {} basis elements",
                mult.len(),
                field.q()
            )));
        }
        mult.resize(field.q() as usize, BigInt::zero());
        Ok(SteinbergVector {
            field: field.clone(),
            mult,
        })
    }

    pub fn zero(field: &GroundField) -> SteinbergVector {
        SteinbergVector {
            field: field.clone(),
            mult: vec![BigInt::zero(); field.q() as usize],
        }
    }

    pub fn unit(idx: &SteinbergIndex, field: &GroundField) -> SteinbergVector {
        let mut v = SteinbergVector::zero(field);
        v.mult[idx.n(field.p()) as usize] = BigInt::one();
        v
    }

    pub fn field(&self) -> &GroundField {
        &self.field
    }

    pub fn mult(&self) -> &[BigInt] {
        &self.mult
    }

    pub fn get(&self, idx: &SteinbergIndex) -> &BigInt {
        &self.mult[idx.n(self.field.p()) as usize]
    }

    /// Nonzero entries in decreasing order of `n`.
    pub fn entries(&self) -> impl Iterator<Item = (SteinbergIndex, &BigInt)> {
        self.mult
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (SteinbergIndex::from_n(n as u64, &self.field), c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mult.iter().all(|c| !c.is_negative())
    }

    /// `sum mult * prod (k_i + 1)`.
    pub fn dimension(&self) -> BigInt {
        self.entries()
            .map(|(idx, c)| c * BigInt::from(idx.dim()))
            .sum()
    }

    pub fn checked_add(&self, rhs: &SteinbergVector) -> Result<SteinbergVector> {
        if !self.field.same_as(&rhs.field) {
            return Err(field_mismatch(&self.field, &rhs.field));
        }
        Ok(SteinbergVector {
            field: self.field.clone(),
            mult: self.mult.iter().zip(&rhs.mult).map(|(a, b)| a + b).collect(),
        })
    }
}

/// A map from tuple strings `"k0,k1,..."` to multiplicities in decreasing
/// order of `n`, zeros omitted. Multiplicities that fit in `i64` are
/// numbers, larger ones decimal strings.
impl Serialize for SteinbergVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<_> = self.entries().collect();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for (idx, c) in entries {
            match c.to_i64() {
                Some(v) => map.serialize_entry(&idx.to_string(), &v)?,
                None => map.serialize_entry(&idx.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

fn field_mismatch(a: &GroundField, b: &GroundField) -> Error {
    Error::FieldMismatch {
        left_p: a.p(),
        left_g: a.g(),
        right_p: b.p(),
        right_g: b.g(),
    }
}

impl fmt::Display for SteinbergVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().map(|(i, c)| format!("({i}): {c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The residue `prod_i m_{k_i}(f^[i](x))`, computed directly in `Z[x]`.
pub fn basis_poly(idx: &SteinbergIndex, field: &GroundField) -> Result<IntPoly> {
    if idx.digits().len() != field.g() as usize || idx.digits().iter().any(|&k| k >= field.p()) {
        let (position, digit) = idx
            .digits()
            .iter()
            .enumerate()
            .find(|(_, &k)| k >= field.p())
            .map(|(i, &k)| (i, k as i64))
            .unwrap_or((idx.digits().len(), -1));
        return Err(Error::InvalidDigit {
            position,
            digit,
            max: field.p() - 1,
        });
    }
    let mut acc = IntPoly::one();
    for (i, &k) in idx.digits().iter().enumerate() {
        if k == 0 {
            continue;
        }
        let inner = f_iter_shared(field.p(), i as u32)?;
        acc = &acc * &m_shared(k as usize).compose(&inner);
    }
    Ok(acc)
}

/// The basis element as a ring element.
pub fn basis_elt(idx: &SteinbergIndex, field: &GroundField) -> RingElt {
    RingElt::from_sparse(field, &field.basis_coords(idx.n(field.p()) as usize))
}

/// Unique integer multiplicities `v` with `sum v[n] * B(n) = a`.
pub fn decompose(a: &RingElt) -> SteinbergVector {
    let field = a.field();
    let q = field.q() as usize;
    let mut w: Vec<BigInt> = a.m_coords().to_vec();
    let mut mult = vec![BigInt::zero(); q];
    for n in (0..q).rev() {
        if w[n].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut w[n]);
        let b = field.basis_coords(n);
        let (&(top, ref lead), rest) = b.split_last().expect("basis element is nonzero");
        debug_assert!(top == n && lead.is_one());
        for (j, v) in rest {
            w[*j] -= &c * v;
        }
        mult[n] = c;
    }
    SteinbergVector {
        field: field.clone(),
        mult,
    }
}

/// `sum v[n] * B(n)`.
pub fn compose(v: &SteinbergVector) -> RingElt {
    let field = &v.field;
    let mut coords = vec![BigInt::zero(); field.q() as usize];
    for (n, c) in v.mult.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, b) in field.basis_coords(n).iter() {
            coords[*j] += c * b;
        }
    }
    RingElt::from_m_coords(field, coords).expect("length q")
}

/// Composition factors of the symmetric power `M_k`, with the checks that
/// they form an actual module of dimension `k + 1`.
pub fn jh_sym(k: i64, field: &GroundField) -> Result<SteinbergVector> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    let v = decompose(&RingElt::sym_class(k, field));
    check_module(&v, &BigInt::from(k + 1))?;
    Ok(v)
}

/// Composition factors of `M_{k_0} (x) M_{k_1}^[1] (x) ...` for arbitrary
/// nonnegative `k_i`, one per twist index `i < g`.
pub fn jh_product(ks: &[i64], field: &GroundField) -> Result<SteinbergVector> {
    if ks.len() > field.g() as usize {
        return Err(Error::InvalidArgument(format!(
            "at most g = {} factors allowed, got {}",
            field.g(),
            ks.len()
        )));
    }
    if let Some(&k) = ks.iter().find(|&&k| k < 0) {
        return Err(Error::NegativeIndex(k));
    }
    let elt = virtual_product(ks, field);
    let v = decompose(&elt);
    let dim: BigInt = ks.iter().map(|&k| BigInt::from(k + 1)).product();
    check_module(&v, &dim)?;
    Ok(v)
}

/// `prod_i M_{k_i}^[i]` with no sign restriction on the `k_i`.
pub fn virtual_product(ks: &[i64], field: &GroundField) -> RingElt {
    ks.iter()
        .enumerate()
        .fold(RingElt::one(field), |acc, (i, &k)| {
            &acc * &RingElt::sym_class(k, field).frobenius_twist(i as i64)
        })
}

fn check_module(v: &SteinbergVector, dim: &BigInt) -> Result<()> {
    if !v.is_nonnegative() {
        return Err(Error::Internal(format!("negative multiplicity in {v}")));
    }
    let got = v.dimension();
    if &got != dim {
        return Err(Error::Internal(format!(
            "dimension mismatch: factors {v} have total dimension {got}, expected {dim}"
        )));
    }
    Ok(())
}

/// `residue(a)` evaluated at 2.
pub fn dim_class(a: &RingElt) -> BigInt {
    a.dim()
}

/// Checks that each basis element `B(n)` has top coordinate exactly `n`
/// with coefficient 1 in the `m`-basis, hence a residue of degree `n` with
/// leading coefficient 1. The change-of-basis matrix is then unitriangular
/// and its determinant is the product of the diagonal.
pub fn unitriangular_determinant(field: &GroundField) -> Result<BigInt> {
    let mut det = BigInt::one();
    for n in 0..field.q() as usize {
        let b = field.basis_coords(n);
        let &(top, ref lead) = b.last().ok_or_else(|| Error::Internal(format!("B({n}) is zero")))?;
        if top != n {
            return Err(Error::Internal(format!("B({n}) has top index {top}")));
        }
        det *= lead;
    }
    Ok(det)
}

/// Multiplicities as `i64` when they all fit.
pub fn small_mults(v: &SteinbergVector) -> Option<Vec<i64>> {
    v.mult.iter().map(ToPrimitive::to_i64).collect()
}
