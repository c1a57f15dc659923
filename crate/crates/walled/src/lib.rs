//! Exact arithmetic for level-k walled Brauer algebras.
//!
//! The crate is organized around a normal-form rewriting engine for the
//! cyclotomic walled Brauer algebra B_{k,r,t} (module [`algebra`]), the
//! combinatorial layer feeding it (bipartitions, tableaux, coset data,
//! walled diagrams), the level-two degenerate Hecke algebra H_{2,r}
//! (module [`hecke`]), the weakly cellular basis and cell modules of
//! B_{2,r,t} (module [`cellular`]), an independent matrix model built
//! from mixed tensor products over gl(m|n) (module [`superalgebra`]),
//! and weight-diagram combinatorics (module [`weightdiag`]).
//!
//! All scalars are exact rationals; there is no floating point anywhere.

pub mod rat;
pub mod perm;
pub mod combinatorics;
pub mod diagrams;
pub mod linalg;
pub mod params;
pub mod algebra;
pub mod hecke;
pub mod cellular;
pub mod superalgebra;
pub mod weightdiag;

pub use rat::{rat, ratq, Rat};
