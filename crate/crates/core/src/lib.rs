//! Fractional operators with Mittag-Leffler kernels.
//!
//! The crate covers the continuous Mittag-Leffler family, nabla discrete
//! fractional calculus, Atangana-Baleanu type operators in both settings,
//! and the fractional Sturm-Liouville eigenproblems built from them.
//! Everything is generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below fix the scalar to `f64`.

pub mod ab_discrete;
pub mod continuous;
pub mod discrete;
pub mod error;
pub mod linalg;
pub mod scalar;
pub mod special;
pub mod sturm_liouville;

pub use error::{Error, Result};
pub use scalar::{CompensatedSum, Real};

pub use ab_discrete::{ABKernel, ABParams, HigherOrderVariant, IdentityCheck};
pub use continuous::{ContinuousKernel, MeshFn, QuadratureRule, UniformMesh};
pub use discrete::{DiscreteMLArgs, Grid, GridFn};
pub use linalg::DenseMatrix;
pub use special::{log_gamma, ml_one, ml_three, ml_two, MLArgs, MLTruncation};
pub use sturm_liouville::{BCSpec, EigenResult, Flavor, SLProblem};

pub type GridFn64 = GridFn<f64>;
pub type MLTruncation64 = MLTruncation<f64>;
pub type MLArgs64 = MLArgs<f64>;
pub type DiscreteMLArgs64 = DiscreteMLArgs<f64>;
pub type ABParams64 = ABParams<f64>;
pub type ABKernel64 = ABKernel<f64>;
pub type UniformMesh64 = UniformMesh<f64>;
pub type MeshFn64 = MeshFn<f64>;
pub type ContinuousKernel64 = ContinuousKernel<f64>;
pub type DenseMatrix64 = DenseMatrix<f64>;
pub type SLProblem64 = SLProblem<f64>;
pub type BCSpec64 = BCSpec<f64>;
pub type EigenResult64 = EigenResult<f64>;
