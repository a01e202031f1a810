//! Finite lattice computations centered on sublattices that are closed
//! under taking relative complements.
//!
//! The building blocks are [`Lattice`] (a finite lattice with precomputed
//! meet/join tables) and [`ElementSet`] (a bitset of lattice elements).
//! On top of those sit:
//!
//! * [`predicates`] — decision procedures for modularity, (n-)distributivity,
//!   semimodularity, rankedness, complementation.
//! * [`rc`] — relative complement sets, RC-closedness, the RC-closure
//!   operator, and full enumeration of the closure family `RCSub(L)`.
//! * [`frames`] — detection of non-trivial normalized von Neumann n-frames.
//! * [`constructions`] — generators for chains, Boolean lattices, diamonds,
//!   the pentagon, the Fano subspace lattice, downset lattices of posets,
//!   Birkhoff embeddings, and chain decompositions.
//!
//! Everything here is deterministic and allocation-only; the crate is
//! `no_std` (with `alloc`). File formats and the CLI live in the companion
//! `rcsub-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
mod lattice;
mod set;

pub mod constructions;
pub mod frames;
pub mod predicates;
pub mod rc;

pub use error::{BoundKind, Error};
pub use lattice::{ElementId, Lattice};
pub use set::ElementSet;
