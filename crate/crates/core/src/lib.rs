//! Galois covers of the projective line built from finite subgroups of
//! `PGL2(Q)`, and the families of number fields they specialize to.
//!
//! Every exact computation lives here; the only external dependency at runtime
//! is an optional computer-algebra subprocess for class groups (see [`cas`]).

pub mod cas;
pub mod catalog;
pub mod cover;
pub mod error;
pub mod fieldlab;
pub mod gfp;
pub mod irreducible;
pub mod moebius;
pub mod poly;
pub mod ratfunc;
pub mod realroots;
pub mod reference;
pub mod selmer;
pub mod verify;

pub use catalog::{case, catalog, CaseId, GroupCase};
pub use error::{CasError, CoverError, FieldError, MoebiusError, RootError, SelmerError};
