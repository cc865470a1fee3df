//! Twisted duality for ribbon graphs: per-edge twist and partial-dual
//! operations, the permutation-extended group action on edge-labeled
//! graphs, and exhaustive search for self-dual / self-Petrial / self-trial
//! graphs.
//!
//! The crate is organized around:
//!
//! * [`edgeop`], [`perm`], [`semidirect`] — the acting group;
//! * [`graph`], [`chord`], [`jewel`] — graph representations and their
//!   4-colored encoding;
//! * [`action`] — applying group elements to graphs and transporting
//!   self-twuality around orbits;
//! * [`enumerate`] — generating chord diagrams and bouquets;
//! * [`search`] — stabilizers, the conjugating-element solver, reduction to
//!   orientable bouquets, classification, and the census of self-trial
//!   non-self-dual graphs.

pub mod action;
#[cfg(test)]
pub(crate) mod arrow_oracle;
pub mod chord;
pub mod edgeop;
pub mod enumerate;
pub mod graph;
pub mod jewel;
pub mod perm;
pub mod search;
pub mod semidirect;

pub use chord::{ChordDiagram, DiagramForm, Dihedral};
pub use edgeop::EdgeOp;
pub use graph::{Invariants, IsoWitness, LabeledRibbonGraph};
pub use perm::Permutation;
pub use semidirect::{GroupElement, RibbonElement};
