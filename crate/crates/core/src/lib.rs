//! Exact and numeric toolkit for the rook and queen polynomial tables and
//! for the zero locus of the sequence generated by `1 / D(t, z)`, where
//!
//! ```text
//! D(t, z) = z^2 t^4 + (-2z - 36) t^3 + (49 - 2z) t^2 - 14 t + 1.
//! ```
//!
//! Exact work (tables, series, discriminants, Sturm certification) uses
//! arbitrary-precision integers and rationals. Numeric work (the four roots
//! of `D` along `z < -9/4`, partial fractions, argument tracking) uses
//! doubles, optionally double-double.

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod export;
pub mod genfun;
pub mod locus;
pub mod quartic;
pub mod real;
pub mod tables;

pub use error::{PolyError, QuarticError, SeriesError};
pub use exactpoly::{Bound, ExactPoly, IntPoly, RatPoly, SturmChain};
pub use real::{Precision, Real};
