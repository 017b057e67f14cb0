//! Exact verification: covariant identities, the finite-field orbit census
//! and a seeded randomized suite.

mod census;
mod identities;
mod suite;

pub use census::{
    census, census_with_bound, cubic_at, cubic_index, CensusChecks, CensusOrbit, CensusTotals,
    OrbitCensus, StratumCount, DEFAULT_CENSUS_BOUND,
};
pub use identities::{
    check_eisenstein_classical, check_eisenstein_symplectic, check_equivariance,
    check_moment_identity, check_moment_identity_matrix, eisenstein_classical_sides,
    eisenstein_symplectic_sides, PsiFn,
};
pub use suite::{
    verify_suite, verify_suite_with, IdentityReport, Sample, TrialReport, HEIGHT_BOUND, IDENTITIES,
};
