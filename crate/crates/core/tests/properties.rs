//! Property-based checks of the algebraic invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use k0ring::characters::{brauer_equal, char_of_elt};
use k0ring::modp::FpPoly;
use k0ring::ring::{verify_identity, Identity};
use k0ring::steinberg::{compose, decompose, SteinbergVector};
use k0ring::{GroundField, IntPoly, RingElt, SymLaurent};

const FIELDS: [(u64, u32); 9] = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (3, 3)];

fn big() -> impl Strategy<Value = BigInt> {
    (any::<bool>(), any::<u64>(), any::<u64>()).prop_map(|(neg, hi, lo)| {
        let mag: BigInt = (BigInt::from(hi) << 64u32) + BigInt::from(lo);
        if neg {
            -mag
        } else {
            mag
        }
    })
}

fn int_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(big(), 0..max_len).prop_map(IntPoly::new)
}

fn small_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..20, 0..max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(big(), 1..max_len).prop_map(|mut c| {
        c.push(BigInt::from(1));
        IntPoly::new(c)
    })
}

fn laurent() -> impl Strategy<Value = SymLaurent> {
    prop::collection::vec(-9i64..9, 0..6).prop_map(|c| {
        let c: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
        SymLaurent::from_nonnegative(&c)
    })
}

fn field() -> impl Strategy<Value = GroundField> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|(p, g)| GroundField::new(p, g).unwrap())
}

/// A field together with a random element given as `sum c * M_k`.
fn elt_in(f: GroundField) -> impl Strategy<Value = RingElt> {
    let b = 3 * f.q() as i64;
    prop::collection::vec((-5i64..=5, -b..=b), 1..5).prop_map(move |terms| {
        terms.iter().fold(RingElt::zero(&f), |acc, &(c, k)| {
            &acc + &RingElt::sym_class(k, &f).scale(&BigInt::from(c))
        })
    })
}

fn field_and_elts(n: usize) -> impl Strategy<Value = (GroundField, Vec<RingElt>)> {
    field().prop_flat_map(move |f| {
        let elts = prop::collection::vec(elt_in(f.clone()), n);
        (Just(f), elts)
    })
}

fn is_symmetric(a: &SymLaurent) -> bool {
    a.terms().all(|(e, c)| &a.coeff(-e) == c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn int_poly_ring_axioms(a in int_poly(6), b in int_poly(6), c in int_poly(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn divmod_recombines(a in int_poly(10), m in monic(4)) {
        let (q, r) = a.divmod_monic(&m).unwrap();
        prop_assert!(r.degree().map_or(true, |d| d < m.degree().unwrap()));
        prop_assert_eq!(&(&q * &m) + &r, a);
    }

    #[test]
    fn composition_is_associative(a in small_poly(4), b in small_poly(4), c in small_poly(4)) {
        prop_assert_eq!(a.compose(&b.compose(&c)), a.compose(&b).compose(&c));
    }

    #[test]
    fn laurent_products_stay_symmetric(a in laurent(), b in laurent(), m in 1u64..5) {
        let ab = &a * &b;
        prop_assert!(is_symmetric(&ab));
        prop_assert_eq!(ab.substitute_power(m), &a.substitute_power(m) * &b.substitute_power(m));
        prop_assert_eq!((&a + &b).substitute_power(m), &a.substitute_power(m) + &b.substitute_power(m));
    }

    #[test]
    fn fp_arithmetic_matches_integers(a in small_poly(8), b in small_poly(8), p in prop::sample::select(vec![2u64, 3, 5, 7, 47])) {
        let (fa, fb) = (FpPoly::from_int_poly(&a, p), FpPoly::from_int_poly(&b, p));
        prop_assert_eq!(fa.mul(&fb), FpPoly::from_int_poly(&(&a * &b), p));
        prop_assert_eq!(fa.add(&fb), FpPoly::from_int_poly(&(&a + &b), p));
        if !fb.is_zero() {
            let (q, r) = fa.divmod(&fb);
            prop_assert_eq!(q.mul(&fb).add(&r), fa.clone());
            prop_assert!(r.degree().map_or(true, |d| d < fb.degree().unwrap()) || fb.degree() == Some(0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_ring_axioms((_f, e) in field_and_elts(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    }

    #[test]
    fn twist_is_a_ring_endomorphism_of_period_g((f, e) in field_and_elts(2), i in -4i64..6) {
        let (a, b) = (&e[0], &e[1]);
        prop_assert_eq!((a * b).frobenius_twist(i), &a.frobenius_twist(i) * &b.frobenius_twist(i));
        prop_assert_eq!((a + b).frobenius_twist(i), &a.frobenius_twist(i) + &b.frobenius_twist(i));
        let mut t = a.clone();
        for _ in 0..f.g() {
            t = t.frobenius_twist(1);
        }
        prop_assert_eq!(&t, a);
        prop_assert_eq!(a.frobenius_twist(i), a.frobenius_twist_by_substitution(i));
    }

    #[test]
    fn defining_identities_hold(f in field(), u in 0.0f64..1.0, v in 0.0f64..1.0) {
        let b = 3 * f.q() as i64;
        let k = -b + (u * (2 * b + 1) as f64) as i64;
        let h = -b + (v * (2 * b + 1) as f64) as i64;
        for id in Identity::ALL {
            let r = verify_identity(id, k, h, &f);
            prop_assert!(r.holds, "{} at k={} h={}: {} vs {}", id, k, h, r.lhs, r.rhs);
        }
    }

    #[test]
    fn twist_is_congruent_to_power((f, e) in field_and_elts(1), i in 0u32..3) {
        // a^{p^i} is taken exactly over Z, so keep p^i small.
        prop_assume!(f.p().pow(i) <= 9);
        let a = &e[0];
        let lhs = a.frobenius_twist(i as i64);
        let rhs = a.pow(f.p().pow(i));
        prop_assert!(lhs.congruent_mod_p(&rhs).unwrap());
    }

    #[test]
    fn steinberg_round_trips((f, e) in field_and_elts(2), raw in prop::collection::vec(-50i64..50, 1..30)) {
        let (a, b) = (&e[0], &e[1]);
        prop_assert_eq!(&compose(&decompose(a)), a);
        prop_assert_eq!(decompose(&(a + b)), decompose(a).checked_add(&decompose(b)).unwrap());
        let mut mult: Vec<BigInt> = raw.into_iter().map(BigInt::from).collect();
        mult.resize(f.q() as usize, BigInt::zero());
        mult.truncate(f.q() as usize);
        let v = SteinbergVector::new(&f, mult).unwrap();
        prop_assert_eq!(decompose(&compose(&v)), v);
    }

    #[test]
    fn characters_respect_products_and_dimension((f, e) in field_and_elts(2)) {
        let (a, b) = (&e[0], &e[1]);
        let (ca, cb) = (char_of_elt(a), char_of_elt(b));
        prop_assert!(brauer_equal(&char_of_elt(&(a * b)), &(&ca * &cb), &f));
        prop_assert_eq!(ca.eval_one(), a.dim());
        prop_assert!(is_symmetric(&ca));
    }

    #[test]
    fn oracle_detects_equality((f, e) in field_and_elts(2)) {
        let (a, b) = (&e[0], &e[1]);
        prop_assert_eq!(a == b, brauer_equal(&char_of_elt(a), &char_of_elt(b), &f));
        let shifted = a + &RingElt::sym_class(0, &f).scale(&BigInt::from(f.p()));
        prop_assert!(!brauer_equal(&char_of_elt(a), &char_of_elt(&shifted), &f));
    }
}
