//! Formal characters as symmetric Laurent polynomials, and an equality test
//! for classes based on Brauer characters.
//!
//! The `p`-regular classes of `SL2(F_q)` have eigenvalues that are roots of
//! unity of order dividing `q - 1` or `q + 1`. Two virtual modules have the
//! same class exactly when their characters agree at all such roots, i.e.
//! when the difference of characters is divisible by
//! `D(t) = lcm(t^{q-1} - 1, t^{q+1} - 1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{IntPoly, SymLaurent};
use crate::ring::{GroundField, RingElt};
use crate::steinberg::{decompose, SteinbergIndex, SteinbergVector};

/// Character of `Sym^k`: `t^k + t^{k-2} + ... + t^-k`, extended by
/// `char_sym(-1) = 0` and `char_sym(k) = -char_sym(-k-2)`.
pub fn char_sym(k: i64) -> SymLaurent {
    match k {
        -1 => SymLaurent::zero(),
        ..=-2 => -char_sym(-k - 2),
        _ => {
            let c: Vec<BigInt> = (0..=k)
                .map(|e| if (k - e) % 2 == 0 { BigInt::one() } else { BigInt::zero() })
                .collect();
            SymLaurent::from_nonnegative(&c)
        }
    }
}

/// Weights of the irreducible module with the given index: all sums
/// `sum_i p^i (k_i - 2 l_i)`, `0 <= l_i <= k_i`, with multiplicity.
fn weights(idx: &SteinbergIndex, p: u64) -> Vec<i64> {
    let mut out = vec![0i64];
    let mut scale = 1i64;
    for &k in idx.digits() {
        let k = k as i64;
        if k > 0 {
            out = out
                .iter()
                .flat_map(|&w| (0..=k).map(move |l| w + scale * (k - 2 * l)))
                .collect();
        }
        scale *= p as i64;
    }
    out
}

/// `sum_idx v[idx] * prod_i char_sym(k_i)(t^{p^i})`.
pub fn char_of_vector(v: &SteinbergVector) -> SymLaurent {
    let field = v.field();
    let q = field.q() as i64;
    let mut acc = vec![BigInt::zero(); 2 * q as usize - 1];
    for (idx, c) in v.entries() {
        for w in weights(&idx, field.p()) {
            acc[(w + q - 1) as usize] += c;
        }
    }
    let nonneg = acc.split_off(q as usize - 1);
    SymLaurent::from_nonnegative(&nonneg)
}

pub fn char_of_elt(a: &RingElt) -> SymLaurent {
    char_of_vector(&decompose(a))
}

/// Equality of Brauer characters: `c - d` vanishes at every root of unity of
/// order dividing `q - 1` or `q + 1`.
pub fn brauer_equal(c: &SymLaurent, d: &SymLaurent, field: &GroundField) -> bool {
    let diff = c - d;
    let q = field.q();
    // Divisibility by t^n - 1 is the vanishing of every residue class of
    // exponents mod n; D(t) is the lcm of the two binomials.
    [q - 1, q + 1]
        .into_iter()
        .all(|n| diff.fold_mod(n).iter().all(Zero::is_zero))
}

/// `D(t) = (t^{q-1} - 1)(t^{q+1} - 1) / (t^{gcd(q-1, q+1)} - 1)`.
pub fn brauer_modulus(field: &GroundField) -> IntPoly {
    let q = field.q() as usize;
    let binom = |n: usize| IntPoly::monomial(BigInt::one(), n) - IntPoly::one();
    let gcd = if q % 2 == 0 { 1 } else { 2 };
    (&binom(q - 1) * &binom(q + 1))
        .exact_div(&binom(gcd))
        .expect("t^gcd - 1 divides both factors")
}

/// [`brauer_equal`] computed by exact division by `D(t)`.
pub fn brauer_equal_by_division(c: &SymLaurent, d: &SymLaurent, field: &GroundField) -> bool {
    let diff = (c - d).clear_to_poly();
    diff.rem_monic(&brauer_modulus(field))
        .expect("D(t) is monic of positive degree")
        .is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steinberg::SteinbergIndex;

    fn l(s: &str) -> SymLaurent {
        s.parse().unwrap()
    }

    fn field(p: u64, g: u32) -> GroundField {
        GroundField::new(p, g).unwrap()
    }

    #[test]
    fn char_sym_examples() {
        assert_eq!(char_sym(1), l("t + t^-1"));
        assert_eq!(char_sym(0), SymLaurent::one());
        assert_eq!(char_sym(3), l("t^3 + t + t^-1 + t^-3"));
        assert!(char_sym(-1).is_zero());
        assert_eq!(char_sym(-4), -l("t^2 + 1 + t^-2"));
    }

    #[test]
    fn char_of_vector_examples() {
        let f = field(3, 1);
        let i = SteinbergIndex::new(vec![1], &f).unwrap();
        assert_eq!(char_of_vector(&SteinbergVector::unit(&i, &f)), l("t + t^-1"));
        let v = SteinbergVector::new(&f, vec![0.into(), 2.into()]).unwrap();
        assert_eq!(char_of_vector(&v), l("2*t + 2*t^-1"));
        let f22 = field(2, 2);
        let i = SteinbergIndex::new(vec![0, 1], &f22).unwrap();
        assert_eq!(char_of_vector(&SteinbergVector::unit(&i, &f22)), l("t^2 + t^-2"));
    }

    #[test]
    fn char_of_elt_examples() {
        assert_eq!(char_of_elt(&RingElt::sym_class(3, &field(3, 1))), l("2*t + 2*t^-1"));
        assert!(char_of_elt(&RingElt::zero(&field(3, 1))).is_zero());
        assert_eq!(char_of_elt(&RingElt::sym_class(2, &field(2, 1))), l("t + 1 + t^-1"));
    }

    #[test]
    fn brauer_examples() {
        let f = field(3, 1);
        let c = char_sym(3);
        let d = &char_sym(1) + &char_sym(1);
        assert!(brauer_equal(&c, &d, &f));
        assert!(brauer_equal(&c, &c, &f));
        for (p, g) in [(2, 1), (3, 2), (5, 1)] {
            assert!(!brauer_equal(&char_sym(1), &char_sym(0), &field(p, g)));
        }
    }

    #[test]
    fn folding_matches_division() {
        for (p, g) in [(2, 1), (2, 2), (3, 1), (5, 1), (3, 2)] {
            let f = field(p, g);
            for a in -6..12 {
                for b in -6..12 {
                    let (c, d) = (char_sym(a), char_sym(b));
                    assert_eq!(
                        brauer_equal(&c, &d, &f),
                        brauer_equal_by_division(&c, &d, &f),
                        "p={p} g={g} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn brauer_modulus_shape() {
        // q = 2: (t - 1)(t^3 - 1)/(t - 1) = t^3 - 1
        assert_eq!(brauer_modulus(&field(2, 1)), IntPoly::from_i64s(&[-1, 0, 0, 1]));
        // q = 3: (t^2 - 1)(t^4 - 1)/(t^2 - 1) = t^4 - 1
        assert_eq!(brauer_modulus(&field(3, 1)), IntPoly::from_i64s(&[-1, 0, 0, 0, 1]));
    }
}
