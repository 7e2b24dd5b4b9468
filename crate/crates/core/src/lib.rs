//! Finite permutation groups and direct-count tests of the FSZ_m properties.
//!
//! For `u, g` in a group `G` and `m >= 1` the set
//!
//! ```text
//! G_m(u, g) = { a in G : a^m = (a u^-1)^m = g }
//! ```
//!
//! always lies in the centraliser of `g`. A group is FSZ_m when
//! `|G_m(u, g)| = |G_m(u, g^n)|` for every `g`, every `u` commuting with `g`
//! and every `n` coprime to the order of `g`; it is FSZ when this holds for
//! every `m`. Everything here decides these properties by counting, with no
//! character tables involved.
//!
//! Layout:
//! - [`perm`], [`group`], [`chain`]: permutations, Schreier–Sims chains and
//!   memory-bounded element streams.
//! - [`structure`]: centralisers, centre, conjugacy and rational classes,
//!   normalisers, Sylow subgroups, exponent and power maps.
//! - [`fsz`]: the counters, screens, full and centre-only tests, witness
//!   search and the coprime-index normal subgroup reduction.
//! - [`catalog`]: named group families used as fixtures.
//! - [`notation`]: cycle-notation parsing and generator files.

pub mod arith;
pub mod catalog;
pub mod chain;
pub mod error;
pub mod fsz;
pub mod group;
pub mod notation;
pub mod perm;
pub mod structure;

pub use chain::StabChain;
pub use error::{CatalogError, FszError, GroupError, PermError};
pub use group::{ElementStream, PermGroup, DEFAULT_MAX_DEGREE};
pub use perm::Perm;
