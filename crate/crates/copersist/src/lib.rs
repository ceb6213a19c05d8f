//! Exact symbolic computation with monomial ideals: canonical generator
//! arithmetic, irreducible and primary decomposition, associated primes of
//! powers, integral closure via exact rational LP, graph edge and cover
//! ideals, and bounded checks of the power-indexed properties
//! (persistence, copersistence, strong persistence, normal
//! torsion-freeness, nearly copersistence and its generalized variant).
//!
//! Everything is characteristic-free: ideals are pure combinatorics on
//! exponent vectors and no field coefficients ever appear.

pub mod cli;
pub mod closure;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod ideal;
pub mod lp;
pub mod parse;
pub mod properties;
pub mod ring;
pub mod transforms;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use ring::{Monomial, MonomialPrime, Ring};
