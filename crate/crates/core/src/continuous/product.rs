//! Product integration of `∫ k(|t-s|) f(s) ds` against the piecewise linear
//! interpolant of `f`.
//!
//! For panel `[jh, (j+1)h]` in the lag variable `u = |t-s|` the moments are
//! `μ0_j = ∫ k` and `μ1_j = ∫ k (u-jh)/h`. The weight of the node at lag `m`
//! is `μ0_0 - μ1_0` for `m = 0`, `μ1_{m-1} + μ0_m - μ1_m` in the interior,
//! and `μ1_{m-1}` when the node is the far end of the integral.

use crate::error::Result;
use crate::scalar::{CompensatedSum, Real};
use crate::special::{gauss_legendre_16, log_gamma, ml_one, ml_two, MLTruncation};

#[derive(Clone, Debug)]
pub(crate) struct ProductWeights<T> {
    /// `lag[m]`, `m = 0..N-1`.
    lag: Vec<T>,
    /// `end[n]`, weight of the far end of an integral spanning `n` panels.
    end: Vec<T>,
}

impl<T: Real> ProductWeights<T> {
    fn from_moments(mu0: &[T], mu1: &[T]) -> Self {
        let n = mu0.len();
        let mut lag = Vec::with_capacity(n);
        lag.push(mu0[0] - mu1[0]);
        for m in 1..n {
            lag.push(mu1[m - 1] + mu0[m] - mu1[m]);
        }
        let mut end = vec![T::zero(); n + 1];
        for m in 1..=n {
            end[m] = mu1[m - 1];
        }
        Self { lag, end }
    }

    /// `I_n = ∫_{t_0}^{t_n} k(t_n - s) f(s) ds` for every node.
    pub(crate) fn left(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); v.len()];
        for n in 1..v.len() {
            let mut acc = CompensatedSum::new();
            acc.add(self.end[n] * v[0]);
            for j in 1..=n {
                acc.add(self.lag[n - j] * v[j]);
            }
            out[n] = acc.value();
        }
        out
    }

    /// `I_n = ∫_{t_n}^{t_N} k(s - t_n) f(s) ds` for every node.
    pub(crate) fn right(&self, v: &[T]) -> Vec<T> {
        let last = v.len() - 1;
        let mut out = vec![T::zero(); v.len()];
        for n in 0..last {
            let mut acc = CompensatedSum::new();
            acc.add(self.end[last - n] * v[last]);
            for j in n..last {
                acc.add(self.lag[j - n] * v[j]);
            }
            out[n] = acc.value();
        }
        out
    }
}

/// Weights for the Riemann-Liouville kernel `u^{α-1}/Γ(α)`, from the
/// antiderivatives `u^α/Γ(α+1)` and `u^{α+1}/Γ(α+2)`.
pub(crate) fn rl_weights<T: Real>(alpha: T, h: T, panels: usize) -> Result<ProductWeights<T>> {
    let g1 = log_gamma(alpha + T::one())?.exp();
    let g2 = g1 * (alpha + T::one());
    let f1 = |u: T| u.powf(alpha) / g1;
    let f2 = |u: T| u.powf(alpha + T::one()) / g2;
    let mut mu0 = Vec::with_capacity(panels);
    let mut mu1 = Vec::with_capacity(panels);
    for j in 0..panels {
        let (lo, hi) = (T::from_index(j) * h, T::from_index(j + 1) * h);
        mu0.push(f1(hi) - f1(lo));
        mu1.push(f1(hi) - (f2(hi) - f2(lo)) / h);
    }
    Ok(ProductWeights::from_moments(&mu0, &mu1))
}

/// Weights for `k(u) = E_α(ω u^α)` together with `k` at every lag `mh`.
///
/// The first panel uses the antiderivatives `u E_{α,2}(ωu^α)` and
/// `u² E_{α,3}(ωu^α)`; the kernel is smooth on the others, which use a
/// 16-point Gauss-Legendre rule.
pub(crate) fn ml_weights<T: Real>(alpha: T, omega: T, h: T, panels: usize) -> Result<(ProductWeights<T>, Vec<T>)> {
    let tr = MLTruncation::default();
    let k = |u: T| ml_one(alpha, omega * u.powf(alpha), &tr);
    let z1 = omega * h.powf(alpha);
    let f1 = h * ml_two(alpha, T::lit(2.0), z1, &tr)?;
    let f2 = h * h * ml_two(alpha, T::lit(3.0), z1, &tr)?;
    let mut mu0 = vec![f1];
    let mut mu1 = vec![f1 - f2 / h];
    let (x, w) = gauss_legendre_16();
    let half = h / T::lit(2.0);
    for j in 1..panels {
        let lo = T::from_index(j) * h;
        let (mut s0, mut s1) = (CompensatedSum::new(), CompensatedSum::new());
        for i in 0..16 {
            let s = (T::lit(x[i]) + T::one()) / T::lit(2.0);
            let kv = k(lo + s * h)? * T::lit(w[i]) * half;
            s0.add(kv);
            s1.add(kv * s);
        }
        mu0.push(s0.value());
        mu1.push(s1.value());
    }
    let lags = (0..=panels).map(|m| k(T::from_index(m) * h)).collect::<Result<Vec<T>>>()?;
    Ok((ProductWeights::from_moments(&mu0, &mu1), lags))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rl_weights_integrate_linear_functions_exactly() {
        // ∫_0^t (t-s)^{-1/2}/Γ(1/2) (1 + s) ds = 2 t^{1/2}/√π + (4/3) t^{3/2}/√π
        let h = 0.1;
        let w = rl_weights(0.5, h, 10).unwrap();
        let v: Vec<f64> = (0..=10).map(|i| 1.0 + i as f64 * h).collect();
        let out = w.left(&v);
        for (n, &got) in out.iter().enumerate() {
            let t = n as f64 * h;
            let want = (2.0 * t.sqrt() + 4.0 / 3.0 * t.powf(1.5)) / std::f64::consts::PI.sqrt();
            assert!((got - want).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn ml_weights_with_zero_omega_are_trapezoid() {
        // k ≡ 1: product integration of a linear interpolant is the trapezoid rule
        let (w, lags) = ml_weights(0.5, 0.0, 0.25, 4).unwrap();
        assert!(lags.iter().all(|&x| x == 1.0));
        let v = [1.0f64, 3.0, -2.0, 0.5, 4.0];
        let r = w.right(&v);
        let trap = 0.25 * (0.5 * 1.0 + 3.0 - 2.0 + 0.5 + 0.5 * 4.0);
        assert!((r[0] - trap).abs() < 1e-15);
        assert_eq!(r[4], 0.0);
    }
}
