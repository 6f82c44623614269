//! Reduction modulo `p`: the congruence `f^[g](x) - x = x^q - x` in
//! `F_p[x]`, distinct-degree factor counts and the resulting fiber
//! structure `prod_{d | g} F_{p^d}^{psi(d)}`.

mod fppoly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{f_base, f_iter_shared};
use crate::numth::{checked_pow, divisors, mobius};
use crate::poly::IntPoly;
use crate::ring::{GroundField, RingElt};

pub use fppoly::FpPoly;

/// Largest `p^i` for which `f^[i]` is built over `Z` before reducing. Above
/// it the reduction is obtained by composing `f mod p` with itself, which
/// gives the same polynomial because reduction mod `p` is a ring map that
/// commutes with composition.
pub const EXACT_ITERATE_CAP: u64 = 2500;

pub fn to_fp(a: &IntPoly, p: u64) -> FpPoly {
    FpPoly::from_int_poly(a, p)
}

/// `f^[i] mod p`.
pub fn f_iter_mod_p(p: u64, i: u32) -> Result<FpPoly> {
    match checked_pow(p, i) {
        Some(pi) if pi <= EXACT_ITERATE_CAP => Ok(to_fp(&*f_iter_shared(p, i)?, p)),
        _ => {
            let f = to_fp(&f_base(p)?, p);
            let mut acc = FpPoly::x(p);
            for _ in 0..i {
                acc = acc.compose(&f);
            }
            Ok(acc)
        }
    }
}

/// The modulus `f^[g](x) - x` reduced mod `p`.
pub fn modulus_mod_p(field: &GroundField) -> FpPoly {
    let p = field.p();
    if field.has_modulus() {
        return to_fp(field.modulus(), p);
    }
    f_iter_mod_p(p, field.g())
        .expect("field characteristic is prime")
        .sub(&FpPoly::x(p))
}

fn xq_minus_x(field: &GroundField) -> FpPoly {
    let p = field.p();
    FpPoly::monomial(p, 1, field.q() as usize).sub(&FpPoly::x(p))
}

pub fn verify_xq_congruence(field: &GroundField) -> bool {
    modulus_mod_p(field) == xq_minus_x(field)
}

/// Number of monic irreducible polynomials of degree `d` over `F_p`.
pub fn psi_count(p: u64, d: u64) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let pb = BigInt::from(p);
    let total: BigInt = divisors(d)
        .into_iter()
        .map(|e| BigInt::from(mobius(e)) * pb.pow((d / e) as u32))
        .sum();
    Ok(total / d)
}

/// Counts of irreducible factors of a square-free `a` by degree.
///
/// `gcd(a, x^{p^d} - x)` is the product of the irreducible factors whose
/// degree divides `d`, so the count at `d` is its degree minus the
/// contributions of the proper divisors of `d`, divided by `d`.
pub fn ddf_degrees(a: &FpPoly) -> Result<BTreeMap<u64, u64>> {
    let p = a.p();
    let Some(n) = a.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let a = a.monic();
    let g = a.gcd(&a.derivative());
    if g.degree() != Some(0) {
        return Err(Error::NotSquareFree { witness: g.to_string() });
    }
    let mut counts = BTreeMap::new();
    let mut accounted = 0u64;
    let x = FpPoly::x(p);
    let mut frob = x.clone();
    let mut d = 0u64;
    while accounted < n as u64 {
        d += 1;
        let remaining = n as u64 - accounted;
        if remaining < 2 * d {
            // What is left has no factor of degree below d, and two such
            // factors would need degree at least 2d.
            counts.insert(remaining, 1);
            break;
        }
        frob = frob.pow_mod(p, &a);
        let h = a.gcd(&frob.sub(&x));
        let lower: u64 = divisors(d)
            .into_iter()
            .filter(|&e| e < d)
            .map(|e| e * counts.get(&e).copied().unwrap_or(0))
            .sum();
        let here = h.degree().expect("gcd with a is nonzero") as u64 - lower;
        if here % d != 0 {
            return Err(Error::Internal(format!(
                "degree {here} of new factors at d = {d} is not a multiple of d"
            )));
        }
        if here > 0 {
            counts.insert(d, here / d);
            accounted += here;
        }
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberPair {
    pub d: u64,
    pub psi: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberChecks {
    pub congruence: bool,
    pub ddf_match: bool,
    pub dimension_sum: bool,
}

/// The special fiber `K0 / p` is `prod_{d | g} F_{p^d}^{psi(d)}`; the
/// generic fiber has the same shape with unramified extensions of `Q_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub p: u64,
    pub g: u32,
    pub q: u64,
    pub pairs: Vec<FiberPair>,
    pub checks: FiberChecks,
}

impl FiberReport {
    pub fn all_pass(&self) -> bool {
        let c = &self.checks;
        c.congruence && c.ddf_match && c.dimension_sum
    }
}

pub fn fiber_report(field: &GroundField) -> FiberReport {
    let (p, g, q) = (field.p(), field.g(), field.q());
    let pairs: Vec<FiberPair> = divisors(g as u64)
        .into_iter()
        .map(|d| FiberPair {
            d,
            psi: psi_count(p, d)
                .expect("d >= 1")
                .to_u64()
                .expect("psi(d) <= q"),
        })
        .collect();
    let dimension_sum = pairs.iter().map(|e| e.d * e.psi).sum::<u64>() == q;
    let modulus = modulus_mod_p(field);
    let congruence = modulus == xq_minus_x(field);
    let expected: BTreeMap<u64, u64> = pairs.iter().map(|e| (e.d, e.psi)).collect();
    let ddf_match = ddf_degrees(&modulus).is_ok_and(|c| c == expected);
    FiberReport {
        p,
        g,
        q,
        pairs,
        checks: FiberChecks {
            congruence,
            ddf_match,
            dimension_sum,
        },
    }
}

/// `f^[i] = x^{p^i}` in `F_p[x]`.
pub fn twist_power_congruence(field: &GroundField, i: u32) -> Result<bool> {
    if i > field.g() {
        return Err(Error::InvalidArgument(format!("need 0 <= i <= g = {}", field.g())));
    }
    let p = field.p();
    let pi = checked_pow(p, i).ok_or_else(|| Error::InvalidArgument("p^i overflows".into()))?;
    Ok(f_iter_mod_p(p, i)? == FpPoly::monomial(p, 1, pi as usize))
}

/// Residue of `a` reduced mod `p`, computed from the `m`-coordinates by
/// Clenshaw's recurrence `b_k = c_k + x b_{k+1} - b_{k+2}` over `F_p`.
pub fn elt_to_fp(a: &RingElt) -> FpPoly {
    let p = a.field().p();
    let pb = BigInt::from(p);
    let coords = a.m_coords();
    let n = coords.len();
    // b1 holds b_{k+1}, b2 holds b_{k+2}; b_k overwrites b2 in place.
    let (mut b1, mut b2) = (vec![0u64; n + 1], vec![0u64; n + 1]);
    for (k, c) in coords.iter().enumerate().rev() {
        let width = n - k;
        for j in (1..=width).rev() {
            b2[j] = (b1[j - 1] + p - b2[j]) % p;
        }
        let c = if c.is_zero() {
            0
        } else {
            num_integer::Integer::mod_floor(c, &pb).to_u64().expect("residue below p")
        };
        b2[0] = (c + p - b2[0]) % p;
        std::mem::swap(&mut b1, &mut b2);
    }
    FpPoly::new(p, b1)
}

/// `a^{[i]} = a^{p^i}` modulo `p`: the twist is taken exactly over `Z`, the
/// power is taken in `F_p[x] / (modulus)` by `i` successive `p`-th powers.
pub fn twist_congruence(a: &RingElt, i: u32) -> bool {
    let field = a.field();
    let modulus = modulus_mod_p(field);
    let lhs = elt_to_fp(&a.frobenius_twist(i as i64));
    let mut rhs = elt_to_fp(a);
    for _ in 0..i {
        rhs = rhs.pow_mod(field.p(), &modulus);
    }
    lhs == rhs
}
