//! Nabla discrete Mittag-Leffler functions.
//!
//! The defining series `Σ (ρ)_k/k! λ^k z^(kα+β-1) / Γ(kα+β)` cancels badly
//! once `z` grows (its terms peak near `k ~ z/|ln|λ||`). The values for all
//! `n = 0..=N` are also the coefficients of the generating function
//!
//! ```text
//! Σ_n E^ρ(λ, n) x^n = x (1-x)^(αρ-β) ((1-x)^α - λ)^(-ρ)
//! ```
//!
//! whose power-series recurrence has terms of one sign for `β <= αρ`, so it is
//! used for kernel tables and as the fallback when the series is unreliable.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{log_gamma_pos, MLTruncation};

/// Arguments of `E_{α,β}(λ, z)` on the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscreteMLArgs<T> {
    pub alpha: T,
    pub beta: T,
    pub lam: T,
    pub z: u64,
}

impl<T: Real> DiscreteMLArgs<T> {
    pub fn new(alpha: T, beta: T, lam: T, z: u64) -> Result<Self> {
        let a = Self { alpha, beta, lam, z };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<()> {
        validate_params("discrete_ml", self.alpha, self.beta, T::one(), self.lam)
    }
}

fn validate_params<T: Real>(func: &'static str, alpha: T, beta: T, rho: T, lam: T) -> Result<()> {
    if !(alpha > T::zero()) || !(beta > T::zero()) || !(rho > T::zero()) {
        return Err(Error::domain(func, format!("alpha, beta, rho must be positive (got {alpha}, {beta}, {rho})")));
    }
    if !(lam.abs() < T::one()) {
        return Err(Error::domain(func, format!("need |lambda| < 1, got {lam}")));
    }
    if !alpha.is_finite() || !beta.is_finite() || !rho.is_finite() {
        return Err(Error::domain(func, "parameters must be finite"));
    }
    Ok(())
}

/// Value at `z = 0`: every `0^(γ)` vanishes except the exponent-zero term,
/// which is 1.
fn value_at_zero<T: Real>(alpha: T, beta: T, rho: T, lam: T) -> T {
    let k = (T::one() - beta) / alpha;
    if k < T::zero() || k != k.floor() || k > T::lit(1e6) {
        return T::zero();
    }
    let k = k.to_usize().unwrap_or(0);
    let mut w = T::one();
    for i in 1..=k {
        let fi = T::from_index(i);
        w = w * lam * (rho + fi - T::one()) / fi;
    }
    w
}

struct SeriesOutcome<T> {
    sum: T,
    max_term: T,
}

fn series<T: Real>(alpha: T, beta: T, rho: T, lam: T, z: u64, trunc: &MLTruncation<T>) -> Result<SeriesOutcome<T>> {
    trunc.validate()?;
    if z == 0 {
        let v = value_at_zero(alpha, beta, rho, lam);
        return Ok(SeriesOutcome { sum: v, max_term: v.abs() });
    }
    let zf = T::lit(z as f64);
    let ln_gz = log_gamma_pos(zf);
    let term0 = (log_gamma_pos(zf - T::one() + beta) - ln_gz - log_gamma_pos(beta)).exp();
    if lam == T::zero() {
        return Ok(SeriesOutcome { sum: term0, max_term: term0 });
    }
    // coefficient (ρ)_k λ^k / k! is carried both directly and as a logarithm;
    // the direct product is used unless the Γ ratio is too large to exponentiate.
    let ln_lam = lam.abs().ln();
    let mut coef = T::one();
    let mut ln_coef = T::zero();
    let mut sum = T::zero();
    let mut max_term = T::zero();
    let mut last = T::zero();
    let big = T::lit(600.0);
    for k in 0..trunc.max_terms {
        let kf = T::from_index(k);
        if k > 0 {
            let r = (rho + kf - T::one()) / kf;
            coef = coef * lam * r;
            ln_coef = ln_coef + ln_lam + r.ln();
        }
        let g = kf * alpha + beta;
        let ln_ratio = log_gamma_pos(zf - T::one() + g) - ln_gz - log_gamma_pos(g);
        let term = if ln_ratio.abs() < big && coef != T::zero() {
            coef * ln_ratio.exp()
        } else {
            (ln_coef + ln_ratio).exp() * coef.signum()
        };
        if !term.is_finite() {
            break;
        }
        let mag = term.abs();
        sum = sum + term;
        last = term;
        max_term = max_term.max(mag);
        if k + 1 >= trunc.min_terms && mag <= trunc.rel_tol * sum.abs() {
            return Ok(SeriesOutcome { sum, max_term });
        }
    }
    Err(Error::NonConvergence {
        func: "discrete_ml",
        terms: trunc.max_terms,
        last_term: last.to_f64_lossy(),
        partial_sum: sum.to_f64_lossy(),
    })
}

/// Direct partial sum of the defining series of `E_{α,β}(λ, z)`.
pub fn discrete_ml_series<T: Real>(args: &DiscreteMLArgs<T>, trunc: &MLTruncation<T>) -> Result<T> {
    args.validate()?;
    Ok(series(args.alpha, args.beta, T::one(), args.lam, args.z, trunc)?.sum)
}

/// Direct partial sum of the defining series of `E^ρ_{α,β}(λ, z)`.
pub fn discrete_ml3_series<T: Real>(alpha: T, beta: T, rho: T, lam: T, z: u64, trunc: &MLTruncation<T>) -> Result<T> {
    validate_params("discrete_ml3", alpha, beta, rho, lam)?;
    Ok(series(alpha, beta, rho, lam, z, trunc)?.sum)
}

/// `E_{α,β}(λ, z)`; identical to [`discrete_ml3`] with `ρ = 1`.
pub fn discrete_ml<T: Real>(args: &DiscreteMLArgs<T>, trunc: &MLTruncation<T>) -> Result<T> {
    discrete_ml3(args.alpha, args.beta, T::one(), args.lam, args.z, trunc)
}

/// Digits the series may lose to cancellation before the recurrence takes over.
const MAX_SERIES_GROWTH: f64 = 1e2;

/// `E^ρ_{α,β}(λ, z)`. Sums the series when it is well conditioned and
/// otherwise reads the value off the generating-function recurrence.
pub fn discrete_ml3<T: Real>(alpha: T, beta: T, rho: T, lam: T, z: u64, trunc: &MLTruncation<T>) -> Result<T> {
    validate_params("discrete_ml3", alpha, beta, rho, lam)?;
    match series(alpha, beta, rho, lam, z, trunc) {
        Ok(out) if out.max_term <= T::lit(MAX_SERIES_GROWTH) * out.sum.abs() || out.max_term == T::zero() => Ok(out.sum),
        Ok(_) | Err(Error::NonConvergence { .. }) => {
            let n = usize::try_from(z).map_err(|_| Error::domain("discrete_ml3", "z too large"))?;
            Ok(discrete_ml_table(alpha, beta, rho, lam, n)?[n])
        }
        Err(e) => Err(e),
    }
}

/// Taylor coefficients of `(1-x)^γ` up to degree `n`.
fn binomial_series<T: Real>(gamma: T, n: usize) -> Vec<T> {
    let mut c = Vec::with_capacity(n + 1);
    c.push(T::one());
    for j in 1..=n {
        let jf = T::from_index(j);
        let prev = c[j - 1];
        c.push(prev * (jf - T::one() - gamma) / jf);
    }
    c
}

/// `E^ρ_{α,β}(λ, n)` for every `n = 0..=n_max`, from the generating function.
pub fn discrete_ml_table<T: Real>(alpha: T, beta: T, rho: T, lam: T, n_max: usize) -> Result<Vec<T>> {
    validate_params("discrete_ml_table", alpha, beta, rho, lam)?;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(value_at_zero(alpha, beta, rho, lam));
    if n_max == 0 {
        return Ok(out);
    }
    let len = n_max;
    let mut d = binomial_series(alpha, len);
    d[0] = d[0] - lam;
    let m = binomial_series(alpha * rho - beta, len);
    let p: Vec<T> = if rho == T::one() {
        // Y D = x M  =>  y_n = (m_{n-1} - Σ_{j>=1} d_j y_{n-j}) / d_0
        let mut y = vec![T::zero(); len + 1];
        for n in 1..=len {
            let mut acc = m[n - 1];
            for j in 1..n {
                acc = acc - d[j] * y[n - j];
            }
            y[n] = acc / d[0];
        }
        out.extend_from_slice(&y[1..]);
        return Ok(out);
    } else {
        // P = D^c with c = -ρ: n d_0 p_n = Σ_{j=1}^n ((c+1) j - n) d_j p_{n-j}
        let c = -rho;
        let mut p = Vec::with_capacity(len);
        p.push(d[0].powf(c));
        for n in 1..len {
            let nf = T::from_index(n);
            let mut acc = T::zero();
            for j in 1..=n {
                acc = acc + ((c + T::one()) * T::from_index(j) - nf) * d[j] * p[n - j];
            }
            p.push(acc / (nf * d[0]));
        }
        p
    };
    for n in 1..=len {
        out.push((0..n).map(|j| m[j] * p[n - 1 - j]).sum());
    }
    Ok(out)
}
