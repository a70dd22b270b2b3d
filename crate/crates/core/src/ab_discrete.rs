//! Discrete Atangana-Baleanu operators with nabla Mittag-Leffler kernels.
//!
//! With `c = B(α)/(1-α)`, `λ = -α/(1-α)` and `E(n) = E_{α,1}(λ, n)`:
//!
//! ```text
//! gen_e_left f (t)  = Σ_{s=base+1}^{t} f(s) E(t-s+1)
//! gen_e_right f (t) = Σ_{s=t}^{end-1}  f(s) E(s-t+1)
//! ABR left  = c ∇ gen_e_left f       ABC left  = c gen_e_left ∇f
//! ABR right = -c Δ gen_e_right f     ABC right = -c gen_e_right Δf
//! ```
//!
//! The sum at `base` (left) or `end` (right) is empty and taken as 0 before
//! the outer difference.

use crate::discrete::ml::discrete_ml_table;
use crate::discrete::ops::{
    conv_left, conv_right, delta_with_zero_end, left_slice, nabla_sum_left_from, nabla_sum_right_to, nabla_with_zero_start,
    right_slice,
};
use crate::discrete::{delta, nabla, Grid, GridFn};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Fractional order and the normalization value `B(α)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ABParams<T> {
    alpha: T,
    b_of_alpha: T,
}

impl<T: Real> ABParams<T> {
    /// Accepts `α ∈ (0,1) ∪ (1,3/2)`; each operator family narrows this further.
    pub fn new(alpha: T, b_of_alpha: T) -> Result<Self> {
        if !(b_of_alpha > T::zero()) || !b_of_alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("B(alpha) must be positive, got {b_of_alpha}")));
        }
        let first = alpha > T::zero() && alpha < T::one();
        let higher = alpha > T::one() && alpha < T::lit(1.5);
        if !(first || higher) {
            return Err(Error::InvalidParameter(format!("alpha must lie in (0,1) or (1,3/2), got {alpha}")));
        }
        Ok(Self { alpha, b_of_alpha })
    }

    /// `B ≡ 1`.
    pub fn with_unit_normalization(alpha: T) -> Result<Self> {
        Self::new(alpha, T::one())
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn b_of_alpha(&self) -> T {
        self.b_of_alpha
    }

    /// `λ = -α/(1-α)`.
    pub fn lambda(&self) -> T {
        -self.alpha / (T::one() - self.alpha)
    }

    /// `B(α)/(1-α)`.
    pub fn scale(&self) -> T {
        self.b_of_alpha / (T::one() - self.alpha)
    }

    /// `β = α - 1` for the higher-order range.
    pub fn beta(&self) -> T {
        self.alpha - T::one()
    }

    /// `λ_β = -β/(1-β) = -(α-1)/(2-α)`.
    pub fn lambda_beta(&self) -> T {
        -self.beta() / (T::one() - self.beta())
    }

    /// Parameters of order `β = α - 1` carrying the same normalization value.
    pub fn lower_order(&self) -> Result<Self> {
        self.require_higher_order("lower_order")?;
        Ok(Self { alpha: self.beta(), b_of_alpha: self.b_of_alpha })
    }

    pub fn require_discrete(&self, func: &'static str) -> Result<()> {
        if !(self.alpha > T::zero() && self.alpha < T::lit(0.5)) {
            return Err(Error::domain(func, format!("discrete AB operators need alpha in (0,1/2), got {}", self.alpha)));
        }
        Ok(())
    }

    pub fn require_higher_order(&self, func: &'static str) -> Result<()> {
        if !(self.alpha > T::one() && self.alpha < T::lit(1.5)) {
            return Err(Error::domain(func, format!("higher-order forms need alpha in (1,3/2), got {}", self.alpha)));
        }
        Ok(())
    }

    pub fn require_continuous(&self, func: &'static str) -> Result<()> {
        if !(self.alpha > T::zero() && self.alpha < T::one()) {
            return Err(Error::domain(func, format!("continuous AB operators need alpha in (0,1), got {}", self.alpha)));
        }
        Ok(())
    }
}

/// Table `E_{α,1}(λ, n)`, `n = 0..=n_max`, shared by all operators of one order.
#[derive(Clone, Debug)]
pub struct ABKernel<T> {
    params: ABParams<T>,
    table: Vec<T>,
    /// `table[1..]`, i.e. the kernel indexed by lag.
    lagged: Vec<T>,
}

impl<T: Real> ABKernel<T> {
    pub fn new(params: ABParams<T>, n_max: usize) -> Result<Self> {
        params.require_discrete("ABKernel")?;
        let table = discrete_ml_table(params.alpha, T::one(), T::one(), params.lambda(), n_max.max(1))?;
        let lagged = table[1..].to_vec();
        Ok(Self { params, table, lagged })
    }

    /// Kernel long enough for any operand on `grid`.
    pub fn for_grid(params: ABParams<T>, grid: Grid) -> Result<Self> {
        Self::new(params, grid.len() + 1)
    }

    pub fn params(&self) -> &ABParams<T> {
        &self.params
    }

    /// `E_{α,1}(λ, n)`.
    pub fn value(&self, n: usize) -> T {
        self.table[n]
    }

    pub fn table(&self) -> &[T] {
        &self.table
    }

    fn lagged(&self, len: usize) -> Result<&[T]> {
        if len > self.lagged.len() {
            return Err(Error::Dimension(format!("kernel table holds {} lags, operand needs {len}", self.lagged.len())));
        }
        Ok(&self.lagged[..len])
    }

    pub fn gen_e_left_from(&self, f: &GridFn<T>, base: i64) -> Result<GridFn<T>> {
        let v = left_slice(f, base)?;
        Ok(GridFn::from_parts(Grid::new(base + 1, f.b())?, conv_left(v, self.lagged(v.len())?)))
    }

    pub fn gen_e_right_to(&self, f: &GridFn<T>, end: i64) -> Result<GridFn<T>> {
        let v = right_slice(f, end)?;
        Ok(GridFn::from_parts(Grid::new(f.a(), end - 1)?, conv_right(v, self.lagged(v.len())?)))
    }

    pub fn abr_diff_left_from(&self, f: &GridFn<T>, base: i64) -> Result<GridFn<T>> {
        let g = self.gen_e_left_from(f, base)?;
        let c = self.params.scale();
        let d = nabla_with_zero_start(g.values()).into_iter().map(|x| c * x).collect();
        Ok(GridFn::from_parts(g.grid(), d))
    }

    pub fn abr_diff_right_to(&self, f: &GridFn<T>, end: i64) -> Result<GridFn<T>> {
        let h = self.gen_e_right_to(f, end)?;
        let c = self.params.scale();
        let d = delta_with_zero_end(h.values()).into_iter().map(|x| -c * x).collect();
        Ok(GridFn::from_parts(h.grid(), d))
    }

    /// Uses `f(base)` through `∇f(base+1)`.
    pub fn abc_diff_left_from(&self, f: &GridFn<T>, base: i64) -> Result<GridFn<T>> {
        if base < f.a() {
            return Err(Error::GridMismatch(format!("left ABC difference needs f({base})")));
        }
        Ok(self.gen_e_left_from(&nabla(f)?, base)?.scale(self.params.scale()))
    }

    /// Uses `f(end)` through `Δf(end-1)`.
    pub fn abc_diff_right_to(&self, f: &GridFn<T>, end: i64) -> Result<GridFn<T>> {
        if end > f.b() {
            return Err(Error::GridMismatch(format!("right ABC difference needs f({end})")));
        }
        Ok(self.gen_e_right_to(&delta(f)?, end)?.scale(-self.params.scale()))
    }

    pub fn ab_sum_left_from(&self, f: &GridFn<T>, base: i64) -> Result<GridFn<T>> {
        ab_sum_combine(f, nabla_sum_left_from(f, base, self.params.alpha)?, &self.params)
    }

    pub fn ab_sum_right_to(&self, f: &GridFn<T>, end: i64) -> Result<GridFn<T>> {
        ab_sum_combine(f, nabla_sum_right_to(f, end, self.params.alpha)?, &self.params)
    }
}

fn ab_sum_combine<T: Real>(f: &GridFn<T>, frac: GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    let w0 = (T::one() - p.alpha) / p.b_of_alpha;
    let w1 = p.alpha / p.b_of_alpha;
    let vals = frac.points().map(|(t, s)| w0 * f.at(t) + w1 * s).collect();
    Ok(GridFn::from_parts(frac.grid(), vals))
}

fn kernel_for<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<ABKernel<T>> {
    ABKernel::for_grid(*p, f.grid())
}

/// `Σ_{s=a+1}^{t} f(s) E(λ, t-ρ(s))` on `N_{a+1,b}`.
pub fn gen_e_left<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.gen_e_left_from(f, f.a())
}

/// `Σ_{s=t}^{b-1} f(s) E(λ, s-ρ(t))` on `N_{a,b-1}`.
pub fn gen_e_right<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.gen_e_right_to(f, f.b())
}

pub fn abr_diff_left<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.abr_diff_left_from(f, f.a())
}

pub fn abr_diff_left_from<T: Real>(f: &GridFn<T>, base: i64, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.abr_diff_left_from(f, base)
}

pub fn abr_diff_right<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.abr_diff_right_to(f, f.b())
}

pub fn abr_diff_right_to<T: Real>(f: &GridFn<T>, end: i64, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.abr_diff_right_to(f, end)
}

pub fn abc_diff_left<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.abc_diff_left_from(f, f.a())
}

pub fn abc_diff_right<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.abc_diff_right_to(f, f.b())
}

pub fn ab_sum_left<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.ab_sum_left_from(f, f.a())
}

pub fn ab_sum_left_from<T: Real>(f: &GridFn<T>, base: i64, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.ab_sum_left_from(f, base)
}

pub fn ab_sum_right<T: Real>(f: &GridFn<T>, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.ab_sum_right_to(f, f.b())
}

pub fn ab_sum_right_to<T: Real>(f: &GridFn<T>, end: i64, p: &ABParams<T>) -> Result<GridFn<T>> {
    kernel_for(f, p)?.ab_sum_right_to(f, end)
}

/// Both sides of an identity and their difference.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
    /// Magnitude the residual is measured against.
    pub scale: T,
}

impl<T: Real> IdentityCheck<T> {
    pub fn new(lhs: T, rhs: T, scale: T) -> Self {
        Self { lhs, rhs, residual: (lhs - rhs).abs(), scale }
    }

    /// `residual / scale` (the raw residual when the scale is 0).
    pub fn relative(&self) -> T {
        if self.scale > T::zero() {
            self.residual / self.scale
        } else {
            self.residual
        }
    }
}

fn pair_scale<T: Real>(f: &GridFn<T>, g: &GridFn<T>) -> T {
    f.max_abs() * g.max_abs() * T::from_int(f.b() - f.a())
}

fn dot_interior<T: Real>(f: &GridFn<T>, g: &GridFn<T>, lo: i64, hi: i64) -> T {
    (lo..=hi).map(|s| f.at(s) * g.at(s)).sum()
}

fn require_ibp_pair<T: Real>(f: &GridFn<T>, g: &GridFn<T>, p: &ABParams<T>, func: &'static str) -> Result<()> {
    p.require_discrete(func)?;
    f.require_same_grid(g)?;
    if f.b() - f.a() < 2 {
        return Err(Error::GridMismatch(format!("{func} needs at least three grid points")));
    }
    Ok(())
}

/// `Σ_{a+1}^{b-1} g · AB-sum-left f  ==  Σ_{a+1}^{b-1} f · AB-sum-right g`.
pub fn ibp_abr_sums_check<T: Real>(f: &GridFn<T>, g: &GridFn<T>, p: &ABParams<T>) -> Result<IdentityCheck<T>> {
    require_ibp_pair(f, g, p, "ibp_abr_sums_check")?;
    let k = kernel_for(f, p)?;
    let (a, b) = (f.a(), f.b());
    let lhs = dot_interior(g, &k.ab_sum_left_from(f, a)?, a + 1, b - 1);
    let rhs = dot_interior(f, &k.ab_sum_right_to(g, b)?, a + 1, b - 1);
    Ok(IdentityCheck::new(lhs, rhs, pair_scale(f, g)))
}

/// `Σ_{a+1}^{b-1} f · ABR-left g  ==  Σ_{a+1}^{b-1} g · ABR-right f`.
pub fn ibp_abr_diff_check<T: Real>(f: &GridFn<T>, g: &GridFn<T>, p: &ABParams<T>) -> Result<IdentityCheck<T>> {
    require_ibp_pair(f, g, p, "ibp_abr_diff_check")?;
    let k = kernel_for(f, p)?;
    let (a, b) = (f.a(), f.b());
    let lhs = dot_interior(f, &k.abr_diff_left_from(g, a)?, a + 1, b - 1);
    let rhs = dot_interior(g, &k.abr_diff_right_to(f, b)?, a + 1, b - 1);
    Ok(IdentityCheck::new(lhs, rhs, pair_scale(f, g)))
}

/// `Σ_{s=a+1}^{b-1} f(s) ABC-left g(s)
///   == Σ_{s=a+1}^{b-1} g(s-1) ABR-right f(s-1) + c [g · gen_e_right f](t)|_{t=a}^{b-1}`.
pub fn ibp_abc_left_check<T: Real>(f: &GridFn<T>, g: &GridFn<T>, p: &ABParams<T>) -> Result<IdentityCheck<T>> {
    require_ibp_pair(f, g, p, "ibp_abc_left_check")?;
    let k = kernel_for(f, p)?;
    let (a, b) = (f.a(), f.b());
    let lhs = dot_interior(f, &k.abc_diff_left_from(g, a)?, a + 1, b - 1);
    let abr_r = k.abr_diff_right_to(f, b)?;
    let h = k.gen_e_right_to(f, b)?;
    let bulk: T = (a + 1..=b - 1).map(|s| g.at(s - 1) * abr_r.at(s - 1)).sum();
    let boundary = p.scale() * (g.at(b - 1) * h.at(b - 1) - g.at(a) * h.at(a));
    Ok(IdentityCheck::new(lhs, bulk + boundary, pair_scale(f, g)))
}

/// The four higher-order identities for `α ∈ (1, 3/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HigherOrderVariant {
    AbcLeft,
    AbrLeft,
    AbcRight,
    AbrRight,
}

impl HigherOrderVariant {
    pub const ALL: [HigherOrderVariant; 4] = [Self::AbcLeft, Self::AbrLeft, Self::AbcRight, Self::AbrRight];

    pub fn name(&self) -> &'static str {
        match self {
            Self::AbcLeft => "abc_left",
            Self::AbrLeft => "abr_left",
            Self::AbcRight => "abc_right",
            Self::AbrRight => "abr_right",
        }
    }
}

/// Both forms of one higher-order identity, each computed on its own path.
///
/// With `β = α - 1`, `c_β = B/(2-α)` and kernel parameter `λ_β`:
///
/// * `AbcLeft`:  `ABC^β_left(∇f)`       vs `c_β gen_e_left(∇²f)`
/// * `AbrLeft`:  `ABR^β_left(∇f)`       vs `c_β ∇ gen_e_left(∇f)`
/// * `AbcRight`: `ABC^β_right(-Δf)`     vs `c_β gen_e_right(Δ²f)`
/// * `AbrRight`: `ABR^β_right(-Δf)`     vs `c_β Δ gen_e_right(Δf)`
///
/// Left operators start at the first point of their operand's grid and
/// right operators end at its last point.
pub fn higher_order_forms<T: Real>(f: &GridFn<T>, p: &ABParams<T>, which: HigherOrderVariant) -> Result<(GridFn<T>, GridFn<T>)> {
    p.require_higher_order("higher_order_forms")?;
    let q = p.lower_order()?;
    let c = q.scale();
    let k = ABKernel::for_grid(q, f.grid())?;
    match which {
        HigherOrderVariant::AbcLeft => {
            let d1 = nabla(f)?;
            let d2 = nabla(&d1)?;
            let first = k.abc_diff_left_from(&d1, d1.a())?;
            let second = k.gen_e_left_from(&d2, d1.a())?.scale(c);
            Ok((first, second))
        }
        HigherOrderVariant::AbrLeft => {
            let d1 = nabla(f)?;
            let first = k.abr_diff_left_from(&d1, d1.a())?;
            let e = k.gen_e_left_from(&d1, d1.a())?;
            let second = GridFn::from_parts(e.grid(), nabla_with_zero_start(e.values())).scale(c);
            Ok((first, second))
        }
        HigherOrderVariant::AbcRight => {
            let d1 = delta(f)?;
            let neg = d1.scale(-T::one());
            let d2 = delta(&d1)?;
            let first = k.abc_diff_right_to(&neg, neg.b())?;
            let second = k.gen_e_right_to(&d2, d1.b())?.scale(c);
            Ok((first, second))
        }
        HigherOrderVariant::AbrRight => {
            let d1 = delta(f)?;
            let neg = d1.scale(-T::one());
            let first = k.abr_diff_right_to(&neg, neg.b())?;
            let e = k.gen_e_right_to(&d1, d1.b())?;
            let second = GridFn::from_parts(e.grid(), delta_with_zero_end(e.values())).scale(c);
            Ok((first, second))
        }
    }
}
