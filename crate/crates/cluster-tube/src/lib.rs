//! Combinatorics of the rank-n cluster tube.
//!
//! The crate models indecomposable objects of the tube by their socle and
//! length, computes Hom/Ext dimensions exactly, enumerates and mutates
//! maximal rigid objects, builds their exchange graph, derives the quivers
//! (with potential) of the endomorphism algebras, and decides derived
//! equivalence through the 3-cycle count and the Cartan determinant law
//! det = 2^(t+1).
//!
//! All arithmetic is exact; outputs are canonically ordered and therefore
//! byte-deterministic.

mod error;
mod linalg;

pub mod derived;
pub mod json;
pub mod mutation;
pub mod presentation;
pub mod quiver;
pub mod render;
pub mod rigid;
pub mod tube;

pub use error::{Error, Result};
pub use mutation::{mutate, ExchangeGraph, GraphEdge, MutationEdge};
pub use rigid::{
    apex_of, enumerate_maximal_rigid, subwing_triple, wing_members, MaximalRigid, SubwingTriple,
};
pub use tube::{ClusterTube, Indec, ObjectSum};
