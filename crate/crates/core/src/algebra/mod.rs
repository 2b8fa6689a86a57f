//! Exact arithmetic: integers, Laurent polynomials and rational functions.

mod frac;
mod int;
mod mpoly;
mod var;

pub use frac::{Denom, Frac, FracBuilder};
pub use int::{Int, ParseIntError};
pub use mpoly::{qpochhammer, MPoly};
pub use var::{Block, Monomial, MonomialMap, Var, VarUniverse, MAX_VARS};
