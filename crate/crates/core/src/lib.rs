//! Balanced-product quantum LDPC codes over GF(2).
//!
//! Bottom to top: [`f2la`] (bit-packed linear algebra), [`algebra`] (finite
//! fields, PGL/PSL, group algebras), [`complexes`] (chain and double
//! complexes, homology), [`graphs`] (Cayley/LPS graphs, quotients,
//! spectra), [`classical`] (local codes), [`tanner`], [`products`]
//! (fiber-bundle, balanced and lifted products) and [`quantum`] (CSS and
//! subsystem codes, distances, bounds).

pub mod algebra;
pub mod classical;
pub mod complexes;
pub mod f2la;
pub mod graphs;
pub mod par;
pub mod products;
pub mod quantum;
pub mod tanner;
