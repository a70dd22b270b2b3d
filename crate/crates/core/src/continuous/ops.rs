use super::mesh::{differentiate, MeshFn, QuadratureRule, UniformMesh};
use super::product::{ml_weights, rl_weights, ProductWeights};
use crate::ab_discrete::{ABParams, IdentityCheck};
use crate::error::{Error, Result};
use crate::scalar::{max_abs, Real};

/// `∫ E_α(ω|t-s|^α) f(s) ds` on one mesh, either orientation.
#[derive(Clone, Debug)]
pub struct GenETable<T> {
    alpha: T,
    omega: T,
    mesh: UniformMesh<T>,
    weights: ProductWeights<T>,
    lags: Vec<T>,
}

impl<T: Real> GenETable<T> {
    pub fn new(alpha: T, omega: T, mesh: UniformMesh<T>) -> Result<Self> {
        if !(alpha > T::zero() && alpha < T::one()) {
            return Err(Error::domain("gen_e_c", format!("alpha must lie in (0,1), got {alpha}")));
        }
        if !omega.is_finite() {
            return Err(Error::InvalidParameter(format!("omega must be finite, got {omega}")));
        }
        let (weights, lags) = ml_weights(alpha, omega, mesh.h(), mesh.intervals())?;
        Ok(Self { alpha, omega, mesh, weights, lags })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    pub fn mesh(&self) -> &UniformMesh<T> {
        &self.mesh
    }

    /// `E_α(ω (mh)^α)`.
    pub fn kernel_at_lag(&self, m: usize) -> T {
        self.lags[m]
    }

    fn check(&self, f: &MeshFn<T>) -> Result<()> {
        if *f.mesh() != self.mesh {
            return Err(Error::GridMismatch("operand mesh differs from the kernel table's".into()));
        }
        Ok(())
    }

    /// `∫_a^t E_α(ω(t-s)^α) f(s) ds`.
    pub fn left(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        self.check(f)?;
        Ok(MeshFn::from_parts(self.mesh, self.weights.left(f.values())))
    }

    /// `∫_t^b E_α(ω(s-t)^α) f(s) ds`.
    pub fn right(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        self.check(f)?;
        Ok(MeshFn::from_parts(self.mesh, self.weights.right(f.values())))
    }
}

/// Riemann-Liouville integrals of one order on one mesh.
#[derive(Clone, Debug)]
pub struct RLTable<T> {
    mesh: UniformMesh<T>,
    weights: ProductWeights<T>,
}

impl<T: Real> RLTable<T> {
    pub fn new(alpha: T, mesh: UniformMesh<T>) -> Result<Self> {
        if !(alpha > T::zero()) || !alpha.is_finite() {
            return Err(Error::domain("rl_integral", format!("alpha must be positive, got {alpha}")));
        }
        Ok(Self { mesh, weights: rl_weights(alpha, mesh.h(), mesh.intervals())? })
    }

    fn check(&self, f: &MeshFn<T>) -> Result<()> {
        if *f.mesh() != self.mesh {
            return Err(Error::GridMismatch("operand mesh differs from the kernel table's".into()));
        }
        Ok(())
    }

    pub fn left(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        self.check(f)?;
        Ok(MeshFn::from_parts(self.mesh, self.weights.left(f.values())))
    }

    pub fn right(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        self.check(f)?;
        Ok(MeshFn::from_parts(self.mesh, self.weights.right(f.values())))
    }
}

/// An ABR derivative written as `coefficient · E_α(-α/(1-α)|t-t₀|^α) + regular(t)`,
/// with `t₀ = a` (left) or `b` (right).
///
/// The first term carries the whole endpoint cusp; `regular` is what remains
/// after the endpoint value of the operand is split off.
#[derive(Clone, Debug)]
pub struct AbrSplit<T> {
    pub coefficient: T,
    pub regular: MeshFn<T>,
    left: bool,
}

/// ABC derivative plus whether `f'` had to be differenced.
#[derive(Clone, Debug)]
pub struct AbcDerivative<T> {
    pub values: MeshFn<T>,
    pub differenced: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Kernel tables for every continuous AB operator of one order on one mesh.
#[derive(Clone, Debug)]
pub struct ContinuousKernel<T> {
    params: ABParams<T>,
    gen_e: GenETable<T>,
    rl: RLTable<T>,
}

impl<T: Real> ContinuousKernel<T> {
    pub fn new(params: ABParams<T>, mesh: UniformMesh<T>) -> Result<Self> {
        params.require_continuous("ContinuousKernel")?;
        if mesh.n_points() < 5 {
            return Err(Error::InvalidParameter(format!(
                "continuous AB derivatives need at least 5 mesh points, got {}",
                mesh.n_points()
            )));
        }
        Ok(Self {
            params,
            gen_e: GenETable::new(params.alpha(), params.lambda(), mesh)?,
            rl: RLTable::new(params.alpha(), mesh)?,
        })
    }

    pub fn params(&self) -> &ABParams<T> {
        &self.params
    }

    pub fn mesh(&self) -> &UniformMesh<T> {
        self.gen_e.mesh()
    }

    pub fn gen_e(&self) -> &GenETable<T> {
        &self.gen_e
    }

    pub fn rl(&self) -> &RLTable<T> {
        &self.rl
    }

    /// `E_α(-α/(1-α) (mh)^α)`.
    pub fn kernel_at_lag(&self, m: usize) -> T {
        self.gen_e.kernel_at_lag(m)
    }

    pub fn abr_left_split(&self, f: &MeshFn<T>) -> Result<AbrSplit<T>> {
        let c = self.params.scale();
        let f0 = f.first();
        let shifted = f.map(|_, v| v - f0);
        let g = self.gen_e.left(&shifted)?;
        let d = differentiate(g.values(), self.mesh().h())?;
        Ok(AbrSplit {
            coefficient: c * f0,
            regular: MeshFn::from_parts(*self.mesh(), d.into_iter().map(|x| c * x).collect()),
            left: true,
        })
    }

    pub fn abr_right_split(&self, f: &MeshFn<T>) -> Result<AbrSplit<T>> {
        let c = self.params.scale();
        let f1 = f.last();
        let shifted = f.map(|_, v| v - f1);
        let g = self.gen_e.right(&shifted)?;
        let d = differentiate(g.values(), self.mesh().h())?;
        Ok(AbrSplit {
            coefficient: c * f1,
            regular: MeshFn::from_parts(*self.mesh(), d.into_iter().map(|x| -c * x).collect()),
            left: false,
        })
    }

    pub fn evaluate(&self, s: &AbrSplit<T>) -> MeshFn<T> {
        let n = self.mesh().n_points();
        let vals = (0..n)
            .map(|i| {
                let lag = if s.left { i } else { n - 1 - i };
                s.coefficient * self.kernel_at_lag(lag) + s.regular.at(i)
            })
            .collect();
        MeshFn::from_parts(*self.mesh(), vals)
    }

    pub fn abr_deriv_left(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        Ok(self.evaluate(&self.abr_left_split(f)?))
    }

    pub fn abr_deriv_right(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        Ok(self.evaluate(&self.abr_right_split(f)?))
    }

    /// `c ∫_a^t f'(x) E_α(λ(t-x)^α) dx`.
    pub fn abc_deriv_left(&self, f: &MeshFn<T>) -> Result<AbcDerivative<T>> {
        let (d, differenced) = f.derivative_or_differenced()?;
        let g = self.gen_e.left(&MeshFn::from_parts(*self.mesh(), d))?;
        Ok(AbcDerivative { values: g.scale(self.params.scale()), differenced })
    }

    /// `-c ∫_t^b f'(x) E_α(λ(x-t)^α) dx`.
    pub fn abc_deriv_right(&self, f: &MeshFn<T>) -> Result<AbcDerivative<T>> {
        let (d, differenced) = f.derivative_or_differenced()?;
        let g = self.gen_e.right(&MeshFn::from_parts(*self.mesh(), d))?;
        Ok(AbcDerivative { values: g.scale(-self.params.scale()), differenced })
    }

    pub fn ab_integral_left(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        let frac = self.rl.left(f)?;
        Ok(ab_integral_combine(f, &frac, &self.params))
    }

    pub fn ab_integral_right(&self, f: &MeshFn<T>) -> Result<MeshFn<T>> {
        let frac = self.rl.right(f)?;
        Ok(ab_integral_combine(f, &frac, &self.params))
    }

    /// `∫ w · ABR` with the cusp term integrated against the kernel exactly:
    /// `∫ w(t) E(λ(t-a)^α) dt` is the right transform of `w` at `a`.
    pub fn integrate_against(&self, w: &MeshFn<T>, s: &AbrSplit<T>, rule: QuadratureRule) -> Result<T> {
        let cusp = if s.left { self.gen_e.right(w)?.first() } else { self.gen_e.left(w)?.last() };
        Ok(s.coefficient * cusp + rule.inner(w, &s.regular)?)
    }
}

fn ab_integral_combine<T: Real>(f: &MeshFn<T>, frac: &MeshFn<T>, p: &ABParams<T>) -> MeshFn<T> {
    let w0 = (T::one() - p.alpha()) / p.b_of_alpha();
    let w1 = p.alpha() / p.b_of_alpha();
    let vals = f.values().iter().zip(frac.values()).map(|(&x, &y)| w0 * x + w1 * y).collect();
    MeshFn::from_parts(*f.mesh(), vals)
}

fn kernel<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<ContinuousKernel<T>> {
    ContinuousKernel::new(*p, *f.mesh())
}

pub fn rl_integral_left<T: Real>(f: &MeshFn<T>, alpha: T) -> Result<MeshFn<T>> {
    RLTable::new(alpha, *f.mesh())?.left(f)
}

pub fn rl_integral_right<T: Real>(f: &MeshFn<T>, alpha: T) -> Result<MeshFn<T>> {
    RLTable::new(alpha, *f.mesh())?.right(f)
}

pub fn gen_e_left_c<T: Real>(f: &MeshFn<T>, alpha: T, omega: T) -> Result<MeshFn<T>> {
    GenETable::new(alpha, omega, *f.mesh())?.left(f)
}

pub fn gen_e_right_c<T: Real>(f: &MeshFn<T>, alpha: T, omega: T) -> Result<MeshFn<T>> {
    GenETable::new(alpha, omega, *f.mesh())?.right(f)
}

pub fn abr_deriv_left<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<MeshFn<T>> {
    kernel(f, p)?.abr_deriv_left(f)
}

pub fn abr_deriv_right<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<MeshFn<T>> {
    kernel(f, p)?.abr_deriv_right(f)
}

pub fn abc_deriv_left<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<AbcDerivative<T>> {
    kernel(f, p)?.abc_deriv_left(f)
}

pub fn abc_deriv_right<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<AbcDerivative<T>> {
    kernel(f, p)?.abc_deriv_right(f)
}

pub fn ab_integral_left<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<MeshFn<T>> {
    kernel(f, p)?.ab_integral_left(f)
}

pub fn ab_integral_right<T: Real>(f: &MeshFn<T>, p: &ABParams<T>) -> Result<MeshFn<T>> {
    kernel(f, p)?.ab_integral_right(f)
}

fn pair_scale<T: Real>(f: &MeshFn<T>, g: &MeshFn<T>, p: &ABParams<T>) -> T {
    let m = f.mesh();
    f.max_abs() * g.max_abs() * p.scale() * (m.b() - m.a())
}

/// `∫ f · ABR-left g  ==  ∫ g · ABR-right f`.
pub fn ibp_abr_continuous_check<T: Real>(
    f: &MeshFn<T>,
    g: &MeshFn<T>,
    k: &ContinuousKernel<T>,
    rule: QuadratureRule,
) -> Result<IdentityCheck<T>> {
    f.require_same_mesh(g)?;
    let lhs = k.integrate_against(f, &k.abr_left_split(g)?, rule)?;
    let rhs = k.integrate_against(g, &k.abr_right_split(f)?, rule)?;
    Ok(IdentityCheck::new(lhs, rhs, pair_scale(f, g, k.params())))
}

/// Left: `∫ g ABC-left f == ∫ f ABR-right g + c [f · gen_e_right g]_a^b`.
/// Right: `∫ g ABC-right f == ∫ f ABR-left g - c [f · gen_e_left g]_a^b`.
pub fn ibp_abc_continuous_check<T: Real>(
    f: &MeshFn<T>,
    g: &MeshFn<T>,
    k: &ContinuousKernel<T>,
    side: Side,
    rule: QuadratureRule,
) -> Result<IdentityCheck<T>> {
    f.require_same_mesh(g)?;
    let c = k.params().scale();
    let (lhs, rhs) = match side {
        Side::Left => {
            let lhs = rule.inner(g, &k.abc_deriv_left(f)?.values)?;
            let bulk = k.integrate_against(f, &k.abr_right_split(g)?, rule)?;
            let e = k.gen_e().right(g)?;
            (lhs, bulk + c * (f.last() * e.last() - f.first() * e.first()))
        }
        Side::Right => {
            let lhs = rule.inner(g, &k.abc_deriv_right(f)?.values)?;
            let bulk = k.integrate_against(f, &k.abr_left_split(g)?, rule)?;
            let e = k.gen_e().left(g)?;
            (lhs, bulk - c * (f.last() * e.last() - f.first() * e.first()))
        }
    };
    Ok(IdentityCheck::new(lhs, rhs, pair_scale(f, g, k.params())))
}

/// `∫ φ · gen_e_left ψ == ∫ ψ · gen_e_right φ`.
pub fn gen_e_swap_check<T: Real>(
    phi: &MeshFn<T>,
    psi: &MeshFn<T>,
    table: &GenETable<T>,
    rule: QuadratureRule,
) -> Result<IdentityCheck<T>> {
    phi.require_same_mesh(psi)?;
    let lhs = rule.inner(phi, &table.left(psi)?)?;
    let rhs = rule.inner(psi, &table.right(phi)?)?;
    let m = table.mesh();
    Ok(IdentityCheck::new(lhs, rhs, phi.max_abs() * psi.max_abs() * (m.b() - m.a())))
}

/// Pointwise agreement of two mesh functions.
#[derive(Clone, Debug)]
pub struct FunctionCheck<T> {
    /// `max |lhs - rhs|` over the mesh.
    pub max_abs: T,
    /// `(∫ (lhs - rhs)²)^{1/2}` by the trapezoid rule.
    pub l2: T,
    /// `max |rhs|`.
    pub scale: T,
}

impl<T: Real> FunctionCheck<T> {
    pub fn new(lhs: &MeshFn<T>, rhs: &MeshFn<T>) -> Result<Self> {
        let d = lhs.sub(rhs)?;
        let sq = d.values().iter().map(|&x| x * x).collect::<Vec<_>>();
        let l2 = QuadratureRule::trapezoid().integrate_values(d.mesh(), &sq)?.sqrt();
        Ok(Self { max_abs: max_abs(d.values()), l2, scale: rhs.max_abs() })
    }
}

/// `ABC == ABR - c f(t₀) E_α(λ|t-t₀|^α)` with `t₀ = a` (left) or `b` (right).
pub fn relation_check<T: Real>(f: &MeshFn<T>, k: &ContinuousKernel<T>, side: Side) -> Result<FunctionCheck<T>> {
    let c = k.params().scale();
    let n = f.mesh().n_points();
    let (abc, abr, f0) = match side {
        Side::Left => (k.abc_deriv_left(f)?.values, k.abr_deriv_left(f)?, f.first()),
        Side::Right => (k.abc_deriv_right(f)?.values, k.abr_deriv_right(f)?, f.last()),
    };
    let vals = (0..n)
        .map(|i| {
            let lag = if side == Side::Left { i } else { n - 1 - i };
            abr.at(i) - c * f0 * k.kernel_at_lag(lag)
        })
        .collect();
    FunctionCheck::new(&abc, &MeshFn::from_parts(*f.mesh(), vals))
}

/// Which composition an inverse-law check evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    /// `ABR ∘ AB-integral`.
    DerivOfIntegral,
    /// `AB-integral ∘ ABR`.
    IntegralOfDeriv,
}

/// Both compositions should return `f`.
pub fn inverse_law_check<T: Real>(
    f: &MeshFn<T>,
    k: &ContinuousKernel<T>,
    side: Side,
    which: Composition,
) -> Result<FunctionCheck<T>> {
    let back = match (side, which) {
        (Side::Left, Composition::DerivOfIntegral) => k.abr_deriv_left(&k.ab_integral_left(f)?)?,
        (Side::Left, Composition::IntegralOfDeriv) => k.ab_integral_left(&k.abr_deriv_left(f)?)?,
        (Side::Right, Composition::DerivOfIntegral) => k.abr_deriv_right(&k.ab_integral_right(f)?)?,
        (Side::Right, Composition::IntegralOfDeriv) => k.ab_integral_right(&k.abr_deriv_right(f)?)?,
    };
    FunctionCheck::new(&back, f)
}
