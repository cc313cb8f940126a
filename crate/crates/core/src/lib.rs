//! Exact-arithmetic verification of Novikov and anti-pre-Novikov algebras,
//! their representations, matched pairs, bialgebras, Yang-Baxter solutions
//! and Rota-Baxter structures.

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod forms;
pub mod linalg;
pub mod matched_pair;
pub mod multilinear;
pub mod operators;
pub mod parallel;
pub mod report;
pub mod search;
pub mod representation;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Vector};
pub use report::{IdentityReport, Mode, Witness};
