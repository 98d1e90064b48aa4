//! Zero-divisor graphs of function rings whose supports are constrained by an
//! ideal of closed sets over a discrete ground space.
//!
//! The library is organised bottom-up:
//!
//! - [`setalg`] — exact boolean algebra of eventually periodic subsets of the
//!   naturals, the carrier for every set computation in the crate.
//! - [`topology`] — discrete space models: a ground set together with an ideal
//!   of closed sets, and the locality region the ideal induces.
//! - [`zdgraph`] — the zero-divisor graph at the level of support classes:
//!   closed-form decision procedures for distance, eccentricity, girth, cycle
//!   lengths, triangulation, complements, clique/chromatic/dominating bounds.
//! - [`ring`] — exact arithmetic for finitely supported rational-valued
//!   functions: annihilators, hulls, complements, maximal-ideal decompositions
//!   and the minimal prime index space on enumerable models.
//! - [`blowup`] — materialised finite induced subgraphs of the (usually
//!   infinite) zero-divisor graph, brute-force metrics on them, and the
//!   cross-check harness comparing closed forms against the oracle.
//! - [`isorecon`] — reconstruction of a point bijection and ring isomorphism
//!   from a purely abstract graph isomorphism, with exact verification.

pub mod blowup;
pub mod isorecon;
pub mod ring;
pub mod setalg;
pub mod topology;
pub mod zdgraph;

mod error;

pub use error::Error;
pub use setalg::{Cardinal, PeriodicSet, SetOp, SetTerm};
pub use topology::{ClosedSetIdeal, GroundSet, SpaceModel};
pub use zdgraph::{GraphFlavor, GraphReport, VertexClass};

/// Coefficient type used throughout the ring layer, re-exported so callers
/// can build alphabets and function values without naming the backing crate.
pub use num_rational::BigRational;
