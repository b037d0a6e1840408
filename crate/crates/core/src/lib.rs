//! Exact response-matrix calculus for planar electrical networks and the
//! electrical Lie algebras and groups acting on them.
//!
//! Everything is computed over the rationals; there is no floating point
//! in any algorithm.
//!
//! * [`exact`]: rationals, dense matrices, spans, nilpotent exponentials.
//! * [`network`]: networks, Kirchhoff and response matrices, local moves.
//! * [`action`]: boundary spikes and edges acting on networks and responses.
//! * [`symplectic`]: the generators in `sp(2n)`, braid moves, cell factorization.
//! * [`perms`]: permutations, efficient permutations, boundary connectivity.
//! * [`liealg`]: relation checks, bracket closure, derivations, type-B moves.
//! * [`verify`]: self-check suites used by the command-line tool.

pub mod action;
pub mod error;
pub mod exact;
pub mod liealg;
pub mod network;
pub mod perms;
pub mod sample;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Mat, Rat};
