//! Verification workbench for cubic implication algebras and MR-algebras.
//!
//! The crate builds the two concrete families of models — signed sets
//! (faces of the n-cube) and intervals of a finite Boolean algebra —
//! compiles any finite model into dense operation tables, and checks the
//! axiom systems against them: the cubic axioms (a)-(f), the MR meet
//! condition, the caret/implication axioms (a)-(h) plus the extra axiom
//! (i), the bottomed-lattice characterisation, and the substitution
//! freedom of the caret. On top of the tables sit a finite model search
//! with isomorphism rejection, the collapse of a structure onto its
//! implication lattice, and the reconstruction of a cube isomorphism
//! from a bare MR table.
//!
//! Exhaustive scans run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential loops otherwise; results are
//! identical either way.

pub mod axioms;
pub mod boolean;
pub mod collapse;
mod error;
mod exec;
pub mod interval;
pub mod reconstruct;
pub mod search;
pub mod signed;
pub mod table;

pub use crate::axioms::{AxiomReport, PFreedom};
pub use crate::boolean::{BoolElem, PrincipalFilter, Universe};
pub use crate::collapse::QuotientLattice;
pub use crate::error::{Error, Result};
pub use crate::interval::Interval;
pub use crate::reconstruct::{CubeFrame, Reconstruction};
pub use crate::search::{CanonicalForm, ModelCatalog, SearchConfig};
pub use crate::signed::SignedSet;
pub use crate::table::{Algebra, FiniteStructure, MeetTable, MrStatus, Order, ABSENT};
