//! Exact computer algebra for trace identities and Cayley-Hamilton algebras.
//!
//! The crate is organised around a handful of subsystems:
//!
//! - [`freetrace`]: the free algebra with trace, with words, cyclic words and
//!   trace polynomials in a canonical normal form.
//! - [`chident`]: the Cayley-Hamilton polynomials `CH_n`, the elements
//!   `sigma_i`, the multilinear invariants `T_k` and polarization.
//! - [`genmat`]: evaluation on generic and rational matrices, trace-identity
//!   checks, one-variable diagonal models and generic-element ranks.
//! - [`findim`]: finite-dimensional algebras with trace given by structure
//!   constants, trace-form kernels and Cayley-Hamilton degree detection.
//! - [`pseudochar`]: pseudocharacters of finite groups.
//! - [`strata`]: stratum types, dimensions and the closure poset.
//! - [`cli`]: the `chalg` command line front end.
//!
//! All arithmetic is exact over the rationals.

pub mod chident;
pub mod cli;
pub mod error;
pub mod eval;
pub mod findim;
pub mod freetrace;
pub mod genmat;
pub mod linalg;
pub mod matrix;
pub mod mpoly;
pub mod pseudochar;
pub mod rational;
pub mod strata;

pub use error::{Error, Result};
pub use freetrace::{CyclicWord, TraceMonomial, TracePoly, Word};
pub use mpoly::{MPoly, Var};
pub use rational::Q;
