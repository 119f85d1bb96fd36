//! Floating scalar abstraction so the root solver runs in `f64` or in
//! double-double precision.

use std::fmt::Debug;

use num_traits::{Float, FloatConst};
use twofloat::TwoFloat;

pub trait Real: Float + FloatConst + Debug + Send + Sync + 'static {
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Real for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
}

impl Real for TwoFloat {
    fn from_f64(v: f64) -> Self {
        TwoFloat::from(v)
    }
    fn to_f64(self) -> f64 {
        self.hi() + self.lo()
    }
}

/// Arithmetic precision for the numerical routines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    /// IEEE double.
    #[default]
    Double,
    /// Double-double, about 31 significant digits.
    High,
}
