//! Rising factorials, backward/forward differences and the classical nabla
//! fractional sums and differences.
//!
//! Left operators sum over `s = base+1..=t` and return a function on
//! `N_{base+1,b}`; right operators sum over `s = t..=end-1` and return a
//! function on `N_{a,end-1}`. The plain variants take `base = a` and
//! `end = b` from the operand's own grid.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::log_gamma_signed;

use super::grid::{Grid, GridFn};

fn as_nonneg_int<T: Real>(x: T) -> Option<i64> {
    (x == x.floor() && x.abs() <= T::lit(1e15)).then(|| x.to_i64()).flatten()
}

/// Generalized rising function `t^(α) = Γ(t+α)/Γ(t)`.
pub fn rising<T: Real>(t: T, alpha: T) -> Result<T> {
    if !t.is_finite() || !alpha.is_finite() {
        return Err(Error::domain("rising", "arguments must be finite"));
    }
    if alpha == T::zero() {
        return Ok(T::one());
    }
    if t == T::zero() {
        return Ok(T::zero());
    }
    let ti = as_nonneg_int(t);
    let ai = as_nonneg_int(alpha);
    if let (Some(ti), Some(ai)) = (ti, ai) {
        if ti >= 1 && ti <= 170 && ai.abs() <= 170 && ti + ai >= 1 {
            let mut p = T::one();
            if ai > 0 {
                for k in 0..ai {
                    p = p * T::from_int(ti + k);
                }
            } else {
                for k in ai..0 {
                    p = p / T::from_int(ti + k);
                }
            }
            return Ok(p);
        }
    }
    let u = t + alpha;
    let t_pole = t < T::zero() && ti.is_some();
    let u_pole = u <= T::zero() && u == u.floor();
    match (t_pole, u_pole) {
        (true, true) => {
            // Γ(-m)/Γ(-n) = (-1)^(n-m) n!/m!
            let n = -t;
            let m = -u;
            let (ln_n, _) = log_gamma_signed(n + T::one())?;
            let (ln_m, _) = log_gamma_signed(m + T::one())?;
            let parity = (n - m).to_i64().unwrap_or(0).rem_euclid(2);
            let sign = if parity == 0 { T::one() } else { -T::one() };
            Ok(sign * (ln_n - ln_m).exp())
        }
        (true, false) => Err(Error::domain("rising", format!("t={t} is a pole of Γ while t+α={u} is not"))),
        (false, true) => Err(Error::domain("rising", format!("t+α={u} is a pole of Γ"))),
        (false, false) => {
            let (ln_u, s_u) = log_gamma_signed(u)?;
            let (ln_t, s_t) = log_gamma_signed(t)?;
            Ok(s_u * s_t * (ln_u - ln_t).exp())
        }
    }
}

/// `(∇f)(t) = f(t) - f(t-1)` on `N_{a+1,b}`.
pub fn nabla<T: Real>(f: &GridFn<T>) -> Result<GridFn<T>> {
    let grid = Grid::new(f.a() + 1, f.b()).map_err(|_| Error::GridMismatch("∇ needs at least two grid points".into()))?;
    Ok(GridFn::from_parts(grid, f.values().windows(2).map(|w| w[1] - w[0]).collect()))
}

/// `(Δf)(t) = f(t+1) - f(t)` on `N_{a,b-1}`.
pub fn delta<T: Real>(f: &GridFn<T>) -> Result<GridFn<T>> {
    let grid = Grid::new(f.a(), f.b() - 1).map_err(|_| Error::GridMismatch("Δ needs at least two grid points".into()))?;
    Ok(GridFn::from_parts(grid, f.values().windows(2).map(|w| w[1] - w[0]).collect()))
}

/// `(Qf)(t) = f(a+b-t)` on the function's own grid.
pub fn q_reflect<T: Real>(f: &GridFn<T>) -> GridFn<T> {
    f.q_reflect()
}

/// `h_j = (j+1)^(α-1) / Γ(α) = (α)_j / j!` for `j = 0..n`, the kernel of the
/// nabla fractional sum at lag `t - s = j`.
pub fn nabla_kernel<T: Real>(alpha: T, n: usize) -> Vec<T> {
    let mut h = Vec::with_capacity(n);
    let mut v = T::one();
    for j in 0..n {
        if j > 0 {
            let jf = T::from_index(j);
            v = v * (jf - T::one() + alpha) / jf;
        }
        h.push(v);
    }
    h
}

fn check_order<T: Real>(func: &'static str, alpha: T) -> Result<()> {
    if !(alpha > T::zero()) || !alpha.is_finite() {
        return Err(Error::domain(func, format!("order must be positive, got {alpha}")));
    }
    Ok(())
}

fn check_unit_order<T: Real>(func: &'static str, alpha: T) -> Result<()> {
    if !(alpha > T::zero() && alpha < T::one()) {
        return Err(Error::domain(func, format!("order must lie in (0,1), got {alpha}")));
    }
    Ok(())
}

/// Values of `f` on `N_{base+1,b}`, checking that they exist.
pub(crate) fn left_slice<T: Real>(f: &GridFn<T>, base: i64) -> Result<&[T]> {
    if base + 1 < f.a() || base >= f.b() {
        return Err(Error::GridMismatch(format!(
            "left operator with base {base} needs values on N_{{{},{}}}, have N_{{{},{}}}",
            base + 1,
            f.b(),
            f.a(),
            f.b()
        )));
    }
    Ok(&f.values()[(base + 1 - f.a()) as usize..])
}

/// Values of `f` on `N_{a,end-1}`, checking that they exist.
pub(crate) fn right_slice<T: Real>(f: &GridFn<T>, end: i64) -> Result<&[T]> {
    if end - 1 > f.b() || end <= f.a() {
        return Err(Error::GridMismatch(format!(
            "right operator with end {end} needs values on N_{{{},{}}}, have N_{{{},{}}}",
            f.a(),
            end - 1,
            f.a(),
            f.b()
        )));
    }
    Ok(&f.values()[..(end - f.a()) as usize])
}

/// `out[i] = Σ_{j<=i} ker[i-j] v[j]`.
pub(crate) fn conv_left<T: Real>(v: &[T], ker: &[T]) -> Vec<T> {
    (0..v.len()).map(|i| (0..=i).map(|j| ker[i - j] * v[j]).sum()).collect()
}

/// `out[i] = Σ_{j>=i} ker[j-i] v[j]`.
pub(crate) fn conv_right<T: Real>(v: &[T], ker: &[T]) -> Vec<T> {
    (0..v.len()).map(|i| (i..v.len()).map(|j| ker[j - i] * v[j]).sum()).collect()
}

/// Backward difference of a left sum whose value at `base` is the empty sum.
pub(crate) fn nabla_with_zero_start<T: Real>(s: &[T]) -> Vec<T> {
    let mut prev = T::zero();
    s.iter()
        .map(|&x| {
            let d = x - prev;
            prev = x;
            d
        })
        .collect()
}

/// Forward difference of a right sum whose value at `end` is the empty sum.
pub(crate) fn delta_with_zero_end<T: Real>(s: &[T]) -> Vec<T> {
    (0..s.len()).map(|i| s.get(i + 1).copied().unwrap_or(T::zero()) - s[i]).collect()
}

/// Left nabla fractional sum `Σ_{s=base+1}^t (t-ρ(s))^(α-1) f(s) / Γ(α)` on `N_{base+1,b}`.
pub fn nabla_sum_left_from<T: Real>(f: &GridFn<T>, base: i64, alpha: T) -> Result<GridFn<T>> {
    check_order("nabla_sum_left", alpha)?;
    let v = left_slice(f, base)?;
    let ker = nabla_kernel(alpha, v.len());
    Ok(GridFn::from_parts(Grid::new(base + 1, f.b())?, conv_left(v, &ker)))
}

pub fn nabla_sum_left<T: Real>(f: &GridFn<T>, alpha: T) -> Result<GridFn<T>> {
    nabla_sum_left_from(f, f.a(), alpha)
}

/// Right nabla fractional sum `Σ_{s=t}^{end-1} (s-ρ(t))^(α-1) f(s) / Γ(α)` on `N_{a,end-1}`.
pub fn nabla_sum_right_to<T: Real>(f: &GridFn<T>, end: i64, alpha: T) -> Result<GridFn<T>> {
    check_order("nabla_sum_right", alpha)?;
    let v = right_slice(f, end)?;
    let ker = nabla_kernel(alpha, v.len());
    Ok(GridFn::from_parts(Grid::new(f.a(), end - 1)?, conv_right(v, &ker)))
}

pub fn nabla_sum_right<T: Real>(f: &GridFn<T>, alpha: T) -> Result<GridFn<T>> {
    nabla_sum_right_to(f, f.b(), alpha)
}

/// Left Riemann-Liouville difference `∇ (base∇^{-(1-α)} f)` on `N_{base+1,b}`.
pub fn rl_diff_left_from<T: Real>(f: &GridFn<T>, base: i64, alpha: T) -> Result<GridFn<T>> {
    check_unit_order("rl_diff_left", alpha)?;
    let s = nabla_sum_left_from(f, base, T::one() - alpha)?;
    Ok(GridFn::from_parts(s.grid(), nabla_with_zero_start(s.values())))
}

pub fn rl_diff_left<T: Real>(f: &GridFn<T>, alpha: T) -> Result<GridFn<T>> {
    rl_diff_left_from(f, f.a(), alpha)
}

/// Right Riemann-Liouville difference `-Δ (∇_end^{-(1-α)} f)` on `N_{a,end-1}`.
pub fn rl_diff_right_to<T: Real>(f: &GridFn<T>, end: i64, alpha: T) -> Result<GridFn<T>> {
    check_unit_order("rl_diff_right", alpha)?;
    let s = nabla_sum_right_to(f, end, T::one() - alpha)?;
    let d = delta_with_zero_end(s.values()).into_iter().map(|x| -x).collect();
    Ok(GridFn::from_parts(s.grid(), d))
}

pub fn rl_diff_right<T: Real>(f: &GridFn<T>, alpha: T) -> Result<GridFn<T>> {
    rl_diff_right_to(f, f.b(), alpha)
}

/// Left Caputo difference `base∇^{-(1-α)} ∇f` on `N_{base+1,b}`; uses `f(base)`.
pub fn caputo_diff_left_from<T: Real>(f: &GridFn<T>, base: i64, alpha: T) -> Result<GridFn<T>> {
    check_unit_order("caputo_diff_left", alpha)?;
    if base < f.a() {
        return Err(Error::GridMismatch(format!("Caputo difference needs f({base})")));
    }
    nabla_sum_left_from(&nabla(f)?, base, T::one() - alpha)
}

pub fn caputo_diff_left<T: Real>(f: &GridFn<T>, alpha: T) -> Result<GridFn<T>> {
    caputo_diff_left_from(f, f.a(), alpha)
}

/// Right Caputo difference `∇_end^{-(1-α)} (-Δf)` on `N_{a,end-1}`; uses `f(end)`.
pub fn caputo_diff_right_to<T: Real>(f: &GridFn<T>, end: i64, alpha: T) -> Result<GridFn<T>> {
    check_unit_order("caputo_diff_right", alpha)?;
    if end > f.b() {
        return Err(Error::GridMismatch(format!("Caputo difference needs f({end})")));
    }
    nabla_sum_right_to(&delta(f)?.scale(-T::one()), end, T::one() - alpha)
}

pub fn caputo_diff_right<T: Real>(f: &GridFn<T>, alpha: T) -> Result<GridFn<T>> {
    caputo_diff_right_to(f, f.b(), alpha)
}
