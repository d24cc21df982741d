//! Weight distributions of binary cyclic codes, computed several
//! independent ways: exhaustive enumeration, closed forms, point counts on
//! families of elliptic curves over F_{2^m}, and Kronecker class numbers
//! fed through Hecke-operator traces.
//!
//! The `parallel` feature (on by default) runs the enumeration kernels on
//! rayon; every kernel also has a sequential path selected with
//! [`Execution::Sequential`].

pub mod classnum;
pub mod curves;
pub mod cyclic;
pub mod distributions;
pub mod enumerator;
pub mod error;
pub mod exec;
pub mod gf2m;
pub mod hecke;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
