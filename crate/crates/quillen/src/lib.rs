//! Exact and numerical tools for signature genera, elliptic surface fiber
//! analysis, flat-torus spectral invariants, and determinant-line anomaly
//! bookkeeping.
//!
//! The crate is organized in five layers:
//!
//! * [`algebra`]: exact rationals, partitions, polynomials, power series,
//!   factorization, and symmetric-function conversions.
//! * [`genus`]: multiplicative sequences for the signature, evaluation on
//!   Pontrjagin data, and twisted index bookkeeping.
//! * [`modular`]: floating-point eta, discriminant and Eisenstein series,
//!   torus spectra, and analytic torsion.
//! * [`surface`]: Weierstrass models over the projective line, their places,
//!   fiber classification, twists, and invariants.
//! * [`ledger`]: determinant-line degree currents, holonomy, connection
//!   residues, spectral covers, and twist cancellation.

pub mod algebra;
pub mod genus;
pub mod ledger;
pub mod modular;
pub mod surface;
