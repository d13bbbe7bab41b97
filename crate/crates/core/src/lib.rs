//! The six-parameter beta modified Weibull lifetime distribution: special functions,
//! distribution functions, named reductions, sampling and curve output.

pub mod bmw;
pub mod cli;
pub mod config;
pub mod curves;
pub mod error;
pub mod figures;
pub mod inner;
pub mod numerics;
pub mod reductions;
pub mod sampler;
pub mod special;

pub use bmw::{Bmw6Params, ParamValues};
pub use error::{Error, Result};
pub use inner::InnerParams;
pub use special::BetaShape;
