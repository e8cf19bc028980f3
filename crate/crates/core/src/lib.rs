//! Heisenberg products on symmetric, noncommutative symmetric and
//! quasisymmetric functions, on permutations, and on endomorphisms of the
//! tensor algebra, together with the oracles used to cross-check them.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod lincomb;
pub mod nsymfn;
pub mod permalg;
pub mod qsymfn;
pub mod rep_oracle;
pub mod symfn;
pub mod tensor_oracle;

pub use error::{Error, Result};
pub use lincomb::{Coeff, LinComb, Tensor};
