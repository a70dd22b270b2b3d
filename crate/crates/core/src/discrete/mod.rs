//! Nabla discrete calculus on integer grids.

pub mod grid;
pub mod ml;
pub mod ops;

pub use grid::{Grid, GridFn};
pub use ml::{discrete_ml, discrete_ml3, discrete_ml3_series, discrete_ml_series, discrete_ml_table, DiscreteMLArgs};
pub use ops::{
    caputo_diff_left, caputo_diff_left_from, caputo_diff_right, caputo_diff_right_to, delta, nabla, nabla_kernel, nabla_sum_left,
    nabla_sum_left_from, nabla_sum_right, nabla_sum_right_to, q_reflect, rising, rl_diff_left, rl_diff_left_from, rl_diff_right,
    rl_diff_right_to,
};
