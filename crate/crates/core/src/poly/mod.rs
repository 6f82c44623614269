//! Exact dense polynomials over the integers and symmetric Laurent
//! polynomials.

mod intpoly;
mod laurent;
mod text;

pub use intpoly::IntPoly;
pub use laurent::SymLaurent;
