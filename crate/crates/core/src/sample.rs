//! Seeded random elements for sweeps and oracle comparisons.

use num_bigint::BigInt;
use rand::Rng;

use crate::ring::{GroundField, RingElt};
use crate::steinberg::{basis_elt, SteinbergIndex};

/// An integer combination `sum c_j M_{k_j}` of symmetric-power classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymCombo {
    pub terms: Vec<(i64, i64)>,
}

impl SymCombo {
    /// Between one and four terms with `k` in `[-3q, 3q]` and nonzero
    /// coefficients in `[-4, 4]`.
    pub fn random<R: Rng>(field: &GroundField, rng: &mut R) -> SymCombo {
        let bound = 3 * field.q() as i64;
        let n = rng.gen_range(1..=4);
        let terms = (0..n)
            .map(|_| {
                let c = loop {
                    let c = rng.gen_range(-4..=4);
                    if c != 0 {
                        break c;
                    }
                };
                (c, rng.gen_range(-bound..=bound))
            })
            .collect();
        SymCombo { terms }
    }

    pub fn eval(&self, field: &GroundField) -> RingElt {
        self.terms.iter().fold(RingElt::zero(field), |acc, &(c, k)| {
            &acc + &RingElt::sym_class(k, field).scale(&BigInt::from(c))
        })
    }

    /// The same class computed through a different expression: each term is
    /// expanded once by `M_k = M_{k-(q-1)} - M_{k-2q} + M_{k-(q+1)}` and then
    /// reflected by `M_k = -M_{-k-2}`.
    pub fn eval_rewritten(&self, field: &GroundField) -> RingElt {
        let q = field.q() as i64;
        let m = |k: i64| -RingElt::sym_class(-k - 2, field);
        self.terms.iter().fold(RingElt::zero(field), |acc, &(c, k)| {
            let t = &(&m(k - (q - 1)) - &m(k - 2 * q)) + &m(k - (q + 1));
            &acc + &t.scale(&BigInt::from(c))
        })
    }
}

/// A uniformly chosen Steinberg index.
pub fn random_index<R: Rng>(field: &GroundField, rng: &mut R) -> SteinbergIndex {
    SteinbergIndex::from_n(rng.gen_range(0..field.q()), field)
}

/// `a + p * B(idx)`: congruent to `a` mod `p` but never equal to it.
pub fn near_miss<R: Rng>(a: &RingElt, rng: &mut R) -> RingElt {
    let field = a.field();
    let idx = random_index(field, rng);
    a + &basis_elt(&idx, field).scale(&BigInt::from(field.p()))
}
