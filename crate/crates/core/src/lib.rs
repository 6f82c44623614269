//! Exact computation in the Grothendieck ring of `SL2(F_q)`, presented as
//! `Z[x] / (f^[g](x) - x)`.

pub mod analysis;
pub mod characters;
pub mod error;
pub mod family;
pub mod modp;
pub mod numth;
pub mod poly;
pub mod ring;
pub mod sample;
pub mod steinberg;

pub use error::{Error, Result};
pub use poly::{IntPoly, SymLaurent};
pub use ring::{GroundField, RingElt};
