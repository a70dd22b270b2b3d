//! Continuous Atangana-Baleanu operators on a uniform mesh.
//!
//! With `c = B(α)/(1-α)` and `λ = -α/(1-α)`, for `0 < α < 1`:
//!
//! ```text
//! ABR left  f(t) =  c d/dt ∫_a^t f(x) E_α(λ(t-x)^α) dx
//! ABR right f(t) = -c d/dt ∫_t^b f(x) E_α(λ(x-t)^α) dx
//! ABC left  f(t) =  c ∫_a^t f'(x) E_α(λ(t-x)^α) dx
//! ABC right f(t) = -c ∫_t^b f'(x) E_α(λ(x-t)^α) dx
//! AB integral f  = (1-α)/B f + α/B (Riemann-Liouville integral of order α) f
//! ```
//!
//! Kernel integrals use product integration against the piecewise linear
//! interpolant. The ABR derivative is split into an exact endpoint term and
//! a differenced regular part, see [`AbrSplit`].

mod mesh;
mod ops;
pub(crate) mod product;

pub use mesh::{differentiate, MeshFn, QuadratureKind, QuadratureRule, UniformMesh};
pub use ops::{
    ab_integral_left, ab_integral_right, abc_deriv_left, abc_deriv_right, abr_deriv_left, abr_deriv_right, gen_e_left_c,
    gen_e_right_c, gen_e_swap_check, ibp_abc_continuous_check, ibp_abr_continuous_check, inverse_law_check, relation_check,
    rl_integral_left, rl_integral_right, AbcDerivative, AbrSplit, Composition, ContinuousKernel, FunctionCheck, GenETable,
    RLTable, Side,
};

/// Least-squares slope of `log r` against `log h`.
pub fn fit_order(h: &[f64], r: &[f64]) -> f64 {
    let n = h.len().min(r.len()) as f64;
    let xs: Vec<f64> = h.iter().map(|x| x.ln()).collect();
    let ys: Vec<f64> = r.iter().map(|x| x.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Nominal order of the mesh tolerance `C·h^p`.
pub const MESH_TOLERANCE_ORDER: f64 = 1.8;

/// `C·h^1.8` at `h_target`, with `C` the largest `r/h^1.8` over the
/// calibration meshes.
pub fn calibrated_tolerance(h: &[f64], r: &[f64], h_target: f64) -> f64 {
    let c = h.iter().zip(r).map(|(h, r)| r / h.powf(MESH_TOLERANCE_ORDER)).fold(0.0, f64::max);
    c * h_target.powf(MESH_TOLERANCE_ORDER)
}
