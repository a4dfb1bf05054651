//! Homomorphisms of signed graphs to `(K_2k, M)` and `(K_k,k, M)`.
//!
//! The crate decides and certifies edge-sign preserving and switch
//! homomorphisms, computes the maximum average degree exactly and the girth
//! vector, and checks the list-coloring facts about `DSG(K_6, M)` and
//! `DSG(K_8, M)` used by the discharging proofs by exhaustive enumeration.

pub mod census;
pub mod density;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod hom;
pub mod targets;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{girth_vector, switch, switching_equivalent, walk_sign, Girth, GirthVector, Sign, SignedGraph, SwitchSet};
pub use targets::{dsg, make_k2k_m, make_kkk_m, ColorAlgebra, ColorSet, ShapeDescriptor, TargetKind, TargetSpace};
