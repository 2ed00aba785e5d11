//! Exact arithmetic for affine wreath product algebras over graded Frobenius superalgebras.

pub mod awpa;
pub mod builtins;
pub mod cyclotomic;
pub mod error;
pub mod frobenius;
pub mod io;
pub mod linalg;
pub mod lincomb;
pub mod oracle;
pub mod perm;
pub mod scalar;
pub mod structure;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
