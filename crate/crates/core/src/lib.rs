//! Exact symplectic covariants, orbit invariants and factorization of binary
//! cubics over fields of characteristic other than 2 and 3.
//!
//! Everything is generic over [`fields::Field`]; the aliases below name the
//! common instantiations.

pub mod cubics;
pub mod error;
pub mod factor;
pub mod fields;
pub mod orbits;
pub mod report;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};

use fields::{Fp, QuadExt, Rational};

pub type RatCubic = cubics::BinaryCubic<Rational>;
pub type FpCubic = cubics::BinaryCubic<Fp>;
/// Cubics over `Q(√D)`.
pub type RatQuadCubic = cubics::BinaryCubic<QuadExt<Rational>>;
/// Cubics over `F_{p²}`.
pub type FpQuadCubic = cubics::BinaryCubic<QuadExt<Fp>>;
pub type RatMatrix = cubics::Matrix2<Rational>;
pub type FpMatrix = cubics::Matrix2<Fp>;
pub type RatInvariant = orbits::OrbitInvariant<Rational>;
pub type FpInvariant = orbits::OrbitInvariant<Fp>;
pub type RatFactorization = factor::Factorization<Rational>;
pub type FpFactorization = factor::Factorization<Fp>;
