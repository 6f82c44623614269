//! The four defining identities of the ring and seeded sweeps over them.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{GroundField, RingElt};
use crate::error::{Error, Result};
use crate::family::{f_base, m_extended};
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    /// `M_k = -M_{-k-2}`
    Delta,
    /// `M_k - M_{k-(q+1)} = M_{k-(q-1)} - M_{k-2q}`
    Sigma,
    /// `M_k M_h = M_{k+h} + M_{k-1} M_{h-1}`
    Pi,
    /// `M_k = M_{k-p} M_1^[1] - M_{k-2p}`
    Phi,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::Delta, Identity::Sigma, Identity::Pi, Identity::Phi];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Delta => "delta",
            Identity::Sigma => "sigma",
            Identity::Pi => "pi",
            Identity::Phi => "phi",
        }
    }

    /// Whether the second index `h` takes part.
    pub fn uses_h(self) -> bool {
        self == Identity::Pi
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "delta" => Ok(Identity::Delta),
            "sigma" => Ok(Identity::Sigma),
            "pi" => Ok(Identity::Pi),
            "phi" => Ok(Identity::Phi),
            _ => Err(Error::Parse(format!(
                "unknown identity {s:?} (expected delta, sigma, pi or phi)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub which: Identity,
    pub k: i64,
    pub h: i64,
    pub holds: bool,
    pub lhs: RingElt,
    pub rhs: RingElt,
}

/// Builds both sides of `which` at `(k, h)` in the quotient and compares
/// them. `h` is ignored except for the product identity.
pub fn verify_identity(which: Identity, k: i64, h: i64, field: &GroundField) -> IdentityReport {
    let m = |n: i64| RingElt::sym_class(n, field);
    let q = field.q() as i64;
    let p = field.p() as i64;
    let (lhs, rhs) = match which {
        Identity::Delta => (m(k), -m(-k - 2)),
        Identity::Sigma => (&m(k) - &m(k - (q + 1)), &m(k - (q - 1)) - &m(k - 2 * q)),
        Identity::Pi => (&m(k) * &m(h), &m(k + h) + &(&m(k - 1) * &m(h - 1))),
        Identity::Phi => {
            let twisted = m(1).frobenius_twist(1);
            (m(k), &(&m(k - p) * &twisted) - &m(k - 2 * p))
        }
    };
    IdentityReport {
        which,
        k,
        h,
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

/// Both sides of `which` as polynomials in `Z[x]`, before any reduction,
/// using the extended family `m_n` for negative `n` and `f = m_p - m_{p-2}`
/// for the twisted generator.
pub fn unreduced_sides(which: Identity, k: i64, h: i64, p: u64, q: u64) -> Result<(IntPoly, IntPoly)> {
    let m = m_extended;
    let q = q as i64;
    let pi = p as i64;
    Ok(match which {
        Identity::Delta => (m(k), -m(-k - 2)),
        Identity::Sigma => (&m(k) - &m(k - (q + 1)), &m(k - (q - 1)) - &m(k - 2 * q)),
        Identity::Pi => (&m(k) * &m(h), &m(k + h) + &(&m(k - 1) * &m(h - 1))),
        Identity::Phi => (m(k), &(&m(k - pi) * &f_base(p)?) - &m(k - 2 * pi)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub which: Identity,
    pub k: i64,
    pub h: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub p: u64,
    pub g: u32,
    pub q: u64,
    pub seed: u64,
    pub trials: usize,
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Random generator for the sweep over one field: the stream is derived from
/// `(seed, p, g)` so every field sees an independent, reproducible sequence.
pub fn field_rng(seed: u64, field: &GroundField) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((field.p() << 8) | field.g() as u64);
    rng
}

/// Checks each identity in `which` at `trials` random `(k, h)` drawn
/// uniformly from `[-3q, 3q]^2`.
pub fn identity_sweep(field: &GroundField, which: &[Identity], trials: usize, seed: u64) -> SweepReport {
    let mut rng = field_rng(seed, field);
    let bound = 3 * field.q() as i64;
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for _ in 0..trials {
        let k = rng.gen_range(-bound..=bound);
        let h = rng.gen_range(-bound..=bound);
        for &id in which {
            let r = verify_identity(id, k, h, field);
            checked += 1;
            if !r.holds {
                counterexamples.push(Counterexample {
                    which: id,
                    k,
                    h,
                    lhs: r.lhs.residue().to_string(),
                    rhs: r.rhs.residue().to_string(),
                });
            }
        }
    }
    SweepReport {
        p: field.p(),
        g: field.g(),
        q: field.q(),
        seed,
        trials,
        checked,
        counterexamples,
    }
}
