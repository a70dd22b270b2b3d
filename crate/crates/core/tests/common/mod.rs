#![allow(dead_code)]

#[path = "../oracles/values.rs"]
pub mod values;

use abfrac::{Grid, GridFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn grid(a: i64, b: i64) -> Grid {
    Grid::new(a, b).unwrap()
}

pub fn random_fn(rng: &mut ChaCha8Rng, g: Grid) -> GridFn<f64> {
    GridFn::from_fn(g, |_| rng.gen_range(-1.0..1.0))
}

/// Largest `|x - y| / max(|y|, floor)` over the common domain of two functions.
pub fn max_rel_diff(x: &GridFn<f64>, y: &GridFn<f64>, floor: f64) -> f64 {
    let lo = x.a().max(y.a());
    let hi = x.b().min(y.b());
    assert!(lo <= hi, "no common domain");
    (lo..=hi).map(|t| (x.at(t) - y.at(t)).abs() / y.at(t).abs().max(floor)).fold(0.0, f64::max)
}

/// Same, scaled by the larger sup norm so that near-zero entries do not dominate.
pub fn max_scaled_diff(x: &GridFn<f64>, y: &GridFn<f64>) -> f64 {
    let s = x.max_abs().max(y.max_abs()).max(f64::MIN_POSITIVE);
    max_rel_diff(x, y, s)
}

pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `x^(γ) / Γ(γ+1) = Γ(x+γ) / (Γ(x) Γ(γ+1)) = Π_{i=1}^{x-1} (1 + γ/i)` for integer `x >= 1`.
pub fn rising_over_gamma(x: i64, gamma: f64) -> f64 {
    assert!(x >= 1);
    (1..x).map(|i| 1.0 + gamma / i as f64).product()
}

/// Nabla sum kernel `(t-ρ(s))^(α-1)/Γ(α)` at `x = t - ρ(s) >= 1`.
pub fn nabla_kernel_oracle(x: i64, alpha: f64) -> f64 {
    rising_over_gamma(x, alpha - 1.0)
}

/// `E_{α,β}(λ, n)` by direct compensated summation of the defining series,
/// each term `λ^k n^(kα+β-1)/Γ(kα+β)` written as a Γ-free product.
pub fn discrete_ml_oracle(alpha: f64, beta: f64, lam: f64, n: i64) -> f64 {
    if n == 0 {
        return if beta == 1.0 { 1.0 } else { 0.0 };
    }
    let mut acc = Neumaier::new();
    let mut lk = 1.0;
    for k in 0..4000 {
        let g = k as f64 * alpha + beta;
        let term = lk * rising_over_gamma(n, g - 1.0);
        acc.add(term);
        if k > 8 && term.abs() < 1e-18 * acc.value().abs() {
            break;
        }
        lk *= lam;
    }
    acc.value()
}

/// Left nabla sum by the double loop of its definition.
pub fn nabla_sum_left_oracle(f: &GridFn<f64>, alpha: f64) -> GridFn<f64> {
    let a = f.a();
    GridFn::from_fn(grid(a + 1, f.b()), |t| {
        let mut acc = Neumaier::new();
        for s in a + 1..=t {
            acc.add(nabla_kernel_oracle(t - (s - 1), alpha) * f.at(s));
        }
        acc.value()
    })
}

/// Right nabla sum by the double loop of its definition.
pub fn nabla_sum_right_oracle(f: &GridFn<f64>, alpha: f64) -> GridFn<f64> {
    let b = f.b();
    GridFn::from_fn(grid(f.a(), b - 1), |t| {
        let mut acc = Neumaier::new();
        for s in t..=b - 1 {
            acc.add(nabla_kernel_oracle(s - (t - 1), alpha) * f.at(s));
        }
        acc.value()
    })
}

/// ABR/ABC/gen-E kernel values `E_{α}(λ, n)` for `n = 0..=len`, `λ = -α/(1-α)`.
///
/// Frozen high-precision values where available; the f64 series cancels badly
/// once `|λ|` approaches 1.
pub fn ab_kernel_oracle(alpha: f64, len: usize) -> Vec<f64> {
    if let Some((_, tab)) = values::AB_KERNEL.iter().find(|(a, _)| *a == alpha) {
        if len < tab.len() {
            return tab[..=len].to_vec();
        }
    }
    let lam = -alpha / (1.0 - alpha);
    (0..=len as i64).map(|n| discrete_ml_oracle(alpha, 1.0, lam, n)).collect()
}

/// `Σ_{s=base+1}^{t} f(s) E(t-ρ(s))` on `N_{base+1,b}`.
pub fn gen_e_left_oracle(f: &GridFn<f64>, base: i64, ker: &[f64]) -> GridFn<f64> {
    GridFn::from_fn(grid(base + 1, f.b()), |t| {
        let mut acc = Neumaier::new();
        for s in base + 1..=t {
            acc.add(f.at(s) * ker[(t - (s - 1)) as usize]);
        }
        acc.value()
    })
}

/// `Σ_{s=t}^{end-1} f(s) E(s-ρ(t))` on `N_{a,end-1}`.
pub fn gen_e_right_oracle(f: &GridFn<f64>, end: i64, ker: &[f64]) -> GridFn<f64> {
    GridFn::from_fn(grid(f.a(), end - 1), |t| {
        let mut acc = Neumaier::new();
        for s in t..=end - 1 {
            acc.add(f.at(s) * ker[(s - (t - 1)) as usize]);
        }
        acc.value()
    })
}

/// `c ∇_t` of the left sum, with the empty sum at `t = base`.
pub fn abr_left_oracle(f: &GridFn<f64>, base: i64, ker: &[f64], c: f64) -> GridFn<f64> {
    let e = gen_e_left_oracle(f, base, ker);
    GridFn::from_fn(e.grid(), |t| c * (e.at(t) - if t == base + 1 { 0.0 } else { e.at(t - 1) }))
}

/// `-c Δ_t` of the right sum, with the empty sum at `t = end`.
pub fn abr_right_oracle(f: &GridFn<f64>, end: i64, ker: &[f64], c: f64) -> GridFn<f64> {
    let e = gen_e_right_oracle(f, end, ker);
    GridFn::from_fn(e.grid(), |t| -c * (if t == end - 1 { 0.0 } else { e.at(t + 1) } - e.at(t)))
}

/// `c Σ_{s=a+1}^{t} ∇f(s) E(t-ρ(s))`.
pub fn abc_left_oracle(f: &GridFn<f64>, ker: &[f64], c: f64) -> GridFn<f64> {
    let a = f.a();
    GridFn::from_fn(grid(a + 1, f.b()), |t| {
        let mut acc = Neumaier::new();
        for s in a + 1..=t {
            acc.add((f.at(s) - f.at(s - 1)) * ker[(t - (s - 1)) as usize]);
        }
        c * acc.value()
    })
}

/// `-c Σ_{s=t}^{b-1} Δf(s) E(s-ρ(t))`.
pub fn abc_right_oracle(f: &GridFn<f64>, ker: &[f64], c: f64) -> GridFn<f64> {
    let b = f.b();
    GridFn::from_fn(grid(f.a(), b - 1), |t| {
        let mut acc = Neumaier::new();
        for s in t..=b - 1 {
            acc.add((f.at(s + 1) - f.at(s)) * ker[(s - (t - 1)) as usize]);
        }
        -c * acc.value()
    })
}

/// `((1-α)/B) f + (α/B) ∇^{-α} f`, left or right.
pub fn ab_sum_oracle(f: &GridFn<f64>, alpha: f64, bb: f64, left: bool) -> GridFn<f64> {
    let frac = if left { nabla_sum_left_oracle(f, alpha) } else { nabla_sum_right_oracle(f, alpha) };
    GridFn::from_fn(frac.grid(), |t| (1.0 - alpha) / bb * f.at(t) + alpha / bb * frac.at(t))
}
