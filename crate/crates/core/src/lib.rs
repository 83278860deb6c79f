//! Special functions for axisymmetric electrostatics: Carlson and Legendre
//! elliptic integrals, Jacobi elliptic and theta functions, Gauss and Appell
//! hypergeometric series, and closed-form potentials of uniformly charged
//! cylinders, tubes and disks together with brute-force reference oracles.

pub mod control;
pub mod elliptic;
pub mod error;
pub mod fields;
pub mod hypergeom;
pub mod jacobi;
pub mod oracle;
pub mod verify;

pub use control::SeriesControl;
pub use error::{Error, Result};
