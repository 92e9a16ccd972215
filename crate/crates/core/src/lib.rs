//! Exact computations with root systems, Chevalley bases and restricted Lie
//! subalgebras in characteristic 2 and 3, aimed at parabolic subgroup schemes
//! whose reduced part is maximal.

pub mod chevalley;
pub mod claims;
pub mod error;
pub mod flagvar;
pub mod isogeny;
pub mod matrixmodels;
pub mod modp;
pub mod octonion;
pub mod parabolic;
pub mod poly;
pub mod psub;
pub mod report;
pub mod rootsys;

pub use error::{Error, Result};
