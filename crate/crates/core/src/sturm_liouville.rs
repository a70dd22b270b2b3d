//! Fractional Sturm-Liouville problems built from AB operators.
//!
//! Discrete, on `N_{a,b}` with `c = B(α)/(1-α)`:
//!
//! ```text
//! ABR type:  ABR-left(p · ABR-right x) + q x = λ r x      on N_{a+1,b-1}
//! ABC type:  ABC-left(p · ABR-right x) + q x = λ r x
//!            c1 gen_e_right x(a)   + c2 ABR-right x(a)   = 0
//!            d1 gen_e_right x(b-1) + d2 ABR-right x(b-1) = 0
//! ```
//!
//! The ABR operators only read interior values, so they restrict to
//! matrices `K_L`, `K_R` on `N_{a+1,b-1}` with `K_Lᵀ = K_R`. The ABC problem
//! has `b-a` unknowns on `N_{a,b-1}`; the equation at `b-1` is dropped in
//! favour of the second boundary condition and reported as a diagnostic.

use num_complex::Complex;

use crate::ab_discrete::{ABKernel, ABParams};
use crate::continuous::{ContinuousKernel, MeshFn, QuadratureRule};
use crate::discrete::{Grid, GridFn};
use crate::error::{Error, Result};
use crate::linalg::{general_eigen, symmetric_eigen, DenseMatrix, Lu};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `ABR-left(p ABR-right x)`, self-adjoint without boundary conditions.
    AbrAbr,
    /// `ABC-left(p ABR-right x)` with two boundary conditions.
    AbcAbr,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::AbrAbr => "ABR_ABR",
            Flavor::AbcAbr => "ABC_ABR",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "ABR_ABR" => Ok(Flavor::AbrAbr),
            "ABC_ABR" => Ok(Flavor::AbcAbr),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}, expected ABR_ABR or ABC_ABR"))),
        }
    }
}

/// Boundary coefficients `(c1, c2)` at `a` and `(d1, d2)` at `b-1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BCSpec<T> {
    pub c1: T,
    pub c2: T,
    pub d1: T,
    pub d2: T,
}

impl<T: Real> BCSpec<T> {
    pub fn new(c1: T, c2: T, d1: T, d2: T) -> Result<Self> {
        if c1 * c1 + c2 * c2 == T::zero() || d1 * d1 + d2 * d2 == T::zero() {
            return Err(Error::InvalidParameter("each boundary condition needs a nonzero coefficient".into()));
        }
        if ![c1, c2, d1, d2].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParameter("boundary coefficients must be finite".into()));
        }
        Ok(Self { c1, c2, d1, d2 })
    }
}

/// Discrete problem data; `p`, `q`, `r` live on the whole grid `N_{a,b}`.
#[derive(Clone, Debug)]
pub struct SLProblem<T> {
    grid: Grid,
    p: GridFn<T>,
    q: GridFn<T>,
    r: GridFn<T>,
    params: ABParams<T>,
    flavor: Flavor,
}

impl<T: Real> SLProblem<T> {
    /// Requires `r > 0` on the interior, `p > 0` on the interior (ABR type)
    /// or `p ≠ 0` on `N_{a,b-1}` (ABC type).
    pub fn new(p: GridFn<T>, q: GridFn<T>, r: GridFn<T>, params: ABParams<T>, flavor: Flavor) -> Result<Self> {
        let prob = Self::new_unchecked_p(p, q, r, params, flavor)?;
        let (a, b, p) = (prob.grid.a(), prob.grid.b(), &prob.p);
        match flavor {
            Flavor::AbrAbr => {
                if let Some(t) = (a + 1..b).find(|&t| !(p.at(t) > T::zero())) {
                    return Err(Error::InvalidParameter(format!("p must be positive on the interior, p({t}) = {}", p.at(t))));
                }
            }
            Flavor::AbcAbr => {
                if let Some(t) = (a..b).find(|&t| p.at(t) == T::zero()) {
                    return Err(Error::InvalidParameter(format!("p must be nonzero on N_{{a,b-1}}, p({t}) = 0")));
                }
            }
        }
        Ok(prob)
    }

    /// Like [`SLProblem::new`] without the sign conditions on `p`, for
    /// degenerate cases such as `p ≡ 0`.
    pub fn new_unchecked_p(p: GridFn<T>, q: GridFn<T>, r: GridFn<T>, params: ABParams<T>, flavor: Flavor) -> Result<Self> {
        params.require_discrete("SLProblem")?;
        p.require_same_grid(&q)?;
        p.require_same_grid(&r)?;
        let grid = p.grid();
        if grid.b() - grid.a() < 3 {
            return Err(Error::GridMismatch("a Sturm-Liouville problem needs at least two interior points".into()));
        }
        let (a, b) = (grid.a(), grid.b());
        if let Some(t) = (a + 1..b).find(|&t| !(r.at(t) > T::zero())) {
            return Err(Error::InvalidParameter(format!("r must be positive on the interior, r({t}) = {}", r.at(t))));
        }
        if [&p, &q, &r].iter().any(|f| f.values().iter().any(|x| !x.is_finite())) {
            return Err(Error::InvalidParameter("coefficients must be finite".into()));
        }
        Ok(Self { grid, p, q, r, params, flavor })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn p(&self) -> &GridFn<T> {
        &self.p
    }

    pub fn q(&self) -> &GridFn<T> {
        &self.q
    }

    pub fn r(&self) -> &GridFn<T> {
        &self.r
    }

    pub fn params(&self) -> &ABParams<T> {
        &self.params
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    fn interior(f: &GridFn<T>) -> Vec<T> {
        f.values()[1..f.values().len() - 1].to_vec()
    }
}

/// Eigenpairs plus the diagnostics that certify them.
#[derive(Clone, Debug)]
pub struct EigenResult<T> {
    pub eigenvalues: Vec<Complex<T>>,
    /// `eigenvectors[k]` over `points`.
    pub eigenvectors: Vec<Vec<Complex<T>>>,
    pub points: Vec<i64>,
    /// `‖A v - λ B v‖∞ / ‖v‖∞` for the solved pencil.
    pub residual_norms: Vec<T>,
    /// `‖A‖∞ + max|λ| ‖B‖∞`, the scale the residuals are judged against.
    pub residual_scale: T,
    pub max_imag: T,
    /// Largest off-diagonal entry of the normalized r-weighted Gram matrix,
    /// over pairs of numerically real, distinct eigenvalues.
    pub orthogonality_defect: T,
    /// Largest `|Gram - I|` entry (symmetric path, where the vectors are r-orthonormal).
    pub gram_defect: Option<T>,
    pub symmetry_defect: Option<T>,
    /// Per pair, `max(|BC at a|, |BC at b-1|) / ‖v‖∞` (pencil path).
    pub bc_residuals: Option<Vec<T>>,
    /// Per pair, residual of the equation at `b-1` that the square pencil drops.
    pub dropped_row_residuals: Option<Vec<T>>,
    /// Columns eliminated through the boundary rows (pencil path).
    pub pivot_columns: Option<(usize, usize)>,
    pub diagnostics: Vec<String>,
}

impl<T: Real> EigenResult<T> {
    pub fn max_scaled_residual(&self) -> T {
        let s = if self.residual_scale > T::zero() { self.residual_scale } else { T::one() };
        self.residual_norms.iter().fold(T::zero(), |m, &x| m.max(x / s))
    }
}

fn interior_impulse<T: Real>(grid: Grid, t0: i64) -> GridFn<T> {
    GridFn::impulse(grid, t0)
}

/// `K_L` on `N_{a+1,b-1}`: column `j` is ABR-left of the impulse at `a+1+j`.
pub fn matrix_abr_left<T: Real>(grid: Grid, p: &ABParams<T>) -> Result<DenseMatrix<T>> {
    p.require_discrete("matrix_abr_left")?;
    let n = interior_len(grid)?;
    let k = ABKernel::for_grid(*p, grid)?;
    DenseMatrix::from_columns(n, n, |j| {
        let d = k.abr_diff_left_from(&interior_impulse(grid, grid.a() + 1 + j as i64), grid.a())?;
        Ok(d.values()[..n].to_vec())
    })
}

/// `K_R` on `N_{a+1,b-1}`: column `j` is ABR-right of the impulse at `a+1+j`.
pub fn matrix_abr_right<T: Real>(grid: Grid, p: &ABParams<T>) -> Result<DenseMatrix<T>> {
    p.require_discrete("matrix_abr_right")?;
    let n = interior_len(grid)?;
    let k = ABKernel::for_grid(*p, grid)?;
    DenseMatrix::from_columns(n, n, |j| {
        let d = k.abr_diff_right_to(&interior_impulse(grid, grid.a() + 1 + j as i64), grid.b())?;
        Ok(d.values()[1..].to_vec())
    })
}

fn interior_len(grid: Grid) -> Result<usize> {
    let n = grid.b() - grid.a() - 1;
    if n < 1 {
        return Err(Error::GridMismatch(format!("N_{{{},{}}} has no interior", grid.a(), grid.b())));
    }
    Ok(n as usize)
}

/// `L₂ = K_L diag(p) K_R + diag(q)` on the interior.
pub fn assemble_abr_slp<T: Real>(prob: &SLProblem<T>) -> Result<DenseMatrix<T>> {
    if prob.flavor != Flavor::AbrAbr {
        return Err(Error::InvalidParameter("assemble_abr_slp needs an ABR_ABR problem".into()));
    }
    let kl = matrix_abr_left(prob.grid, &prob.params)?;
    let kr = matrix_abr_right(prob.grid, &prob.params)?;
    let p = SLProblem::interior(&prob.p);
    let ones = vec![T::one(); p.len()];
    let core = kl.matmul(&kr.scale_rows_cols(&p, &ones)?)?;
    core.add(&DenseMatrix::from_diag(&SLProblem::interior(&prob.q)))
}

/// Largest symmetry defect [`solve_symmetric_slp`] accepts.
pub const SYMMETRY_THRESHOLD: f64 = 1e-10;

/// `L₂ x = λ diag(r) x` through `C = R^{-1/2} L₂ R^{-1/2}`; eigenvectors come
/// back r-orthonormal. `r` lives on the grid whose interior `L₂` acts on.
pub fn solve_symmetric_slp<T: Real>(l2: &DenseMatrix<T>, r: &GridFn<T>) -> Result<EigenResult<T>> {
    let n = interior_len(r.grid())?;
    if l2.n_rows() != n || l2.n_cols() != n {
        return Err(Error::Dimension(format!("matrix is {}x{}, interior has {n} points", l2.n_rows(), l2.n_cols())));
    }
    let rv = SLProblem::interior(r);
    if let Some(i) = rv.iter().position(|x| !(*x > T::zero())) {
        return Err(Error::InvalidParameter(format!("r must be positive, r({}) = {}", r.a() + 1 + i as i64, rv[i])));
    }
    let defect = l2.symmetry_defect()?;
    if !(defect <= T::lit(SYMMETRY_THRESHOLD)) {
        return Err(Error::NotSymmetric { defect: defect.to_f64_lossy(), threshold: SYMMETRY_THRESHOLD });
    }
    let s: Vec<T> = rv.iter().map(|x| T::one() / x.sqrt()).collect();
    let c = l2.scale_rows_cols(&s, &s)?;
    let sym = c.add(&c.transpose())?.scale_rows_cols(&vec![T::lit(0.5); n], &vec![T::one(); n])?;
    let eig = symmetric_eigen(&sym)?;

    let mut vectors = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for (k, &lam) in eig.values.iter().enumerate() {
        let x: Vec<T> = (0..n).map(|i| eig.vectors[(i, k)] * s[i]).collect();
        let lx = l2.mul_vec(&x)?;
        let xmax = x.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let res = lx.iter().zip(&x).zip(&rv).map(|((&y, &xi), &ri)| (y - lam * ri * xi).abs()).fold(T::zero(), T::max);
        residuals.push(res / xmax);
        vectors.push(x.into_iter().map(|v| Complex::new(v, T::zero())).collect::<Vec<_>>());
    }
    let mut gram = T::zero();
    let mut off = T::zero();
    for i in 0..n {
        for j in i..n {
            let g: T = (0..n).map(|t| rv[t] * vectors[i][t].re * vectors[j][t].re).sum();
            let target = if i == j { T::one() } else { T::zero() };
            gram = gram.max((g - target).abs());
            if i != j {
                off = off.max(g.abs());
            }
        }
    }
    let lam_max = eig.values.iter().fold(T::zero(), |m, l| m.max(l.abs()));
    let rmax = rv.iter().fold(T::zero(), |m, &x| m.max(x));
    Ok(EigenResult {
        eigenvalues: eig.values.iter().map(|&l| Complex::new(l, T::zero())).collect(),
        eigenvectors: vectors,
        points: (r.a() + 1..r.b()).collect(),
        residual_norms: residuals,
        residual_scale: l2.norm_inf() + lam_max * rmax,
        max_imag: T::zero(),
        orthogonality_defect: off,
        gram_defect: Some(gram),
        symmetry_defect: Some(defect),
        bc_residuals: None,
        dropped_row_residuals: None,
        pivot_columns: None,
        diagnostics: vec![],
    })
}

/// Assembles and solves either flavor; `bc` is required for `ABC_ABR` and
/// ignored for `ABR_ABR`.
pub fn solve<T: Real>(prob: &SLProblem<T>, bc: Option<&BCSpec<T>>) -> Result<EigenResult<T>> {
    match prob.flavor {
        Flavor::AbrAbr => solve_symmetric_slp(&assemble_abr_slp(prob)?, &prob.r),
        Flavor::AbcAbr => {
            let bc = bc.ok_or_else(|| Error::InvalidParameter("an ABC_ABR problem needs boundary conditions".into()))?;
            solve_pencil(&assemble_abc_slp(prob, bc)?)
        }
    }
}

/// Square pencil `(A, B)` of the ABC-type problem over `N_{a,b-1}`.
#[derive(Clone, Debug)]
pub struct AbcPencil<T> {
    pub a: DenseMatrix<T>,
    pub b: DenseMatrix<T>,
    /// The equation at `t = b-1` as a row over the unknowns, with its `r(b-1)`.
    pub dropped_row: Vec<T>,
    pub dropped_weight: T,
    /// Row indices of the two boundary conditions, `(0, m-1)`.
    pub bc_rows: (usize, usize),
    pub grid: Grid,
    pub diagnostics: Vec<String>,
}

/// `A` rows: BC at `a`, the equation at `t = a+1..b-2`, BC at `b-1`;
/// `B` is `diag(0, r(a+1), ..., r(b-2), 0)`.
pub fn assemble_abc_slp<T: Real>(prob: &SLProblem<T>, bc: &BCSpec<T>) -> Result<AbcPencil<T>> {
    if prob.flavor != Flavor::AbcAbr {
        return Err(Error::InvalidParameter("assemble_abc_slp needs an ABC_ABR problem".into()));
    }
    let (a, b) = (prob.grid.a(), prob.grid.b());
    let unknowns = Grid::new(a, b - 1)?;
    let m = (b - a) as usize;
    let k = ABKernel::for_grid(prob.params, prob.grid)?;
    let p = prob.p.restrict(a, b - 1)?;
    // column j holds every row evaluated on the impulse at a+j: [bc_a, eq(a+1..b-1), bc_b]
    let full = DenseMatrix::from_columns(m + 1, m, |j| {
        let x = GridFn::impulse(unknowns, a + j as i64);
        let gr = k.gen_e_right_to(&x, b)?;
        let abr = k.abr_diff_right_to(&x, b)?;
        let y = abr.mul(&p)?;
        let abc = k.abc_diff_left_from(&y, a)?;
        let mut col = Vec::with_capacity(m + 1);
        col.push(bc.c1 * gr.at(a) + bc.c2 * abr.at(a));
        for t in a + 1..b {
            col.push(abc.at(t) + prob.q.at(t) * x.at(t));
        }
        col.push(bc.d1 * gr.at(b - 1) + bc.d2 * abr.at(b - 1));
        Ok(col)
    })?;
    let mut am = DenseMatrix::zeros(m, m);
    let mut bm = DenseMatrix::zeros(m, m);
    for j in 0..m {
        am[(0, j)] = full[(0, j)];
        am[(m - 1, j)] = full[(m, j)];
        for i in 1..m - 1 {
            am[(i, j)] = full[(i, j)];
        }
    }
    for i in 1..m - 1 {
        bm[(i, i)] = prob.r.at(a + i as i64);
    }
    let mut diagnostics = vec![];
    let tail = bc.d1 * (T::one() - prob.params.alpha()) + bc.d2 * prob.params.b_of_alpha();
    if tail == T::zero() {
        diagnostics.push("boundary condition at b-1 vanishes identically: d1(1-alpha) + d2 B(alpha) = 0".into());
    } else {
        diagnostics.push("boundary condition at b-1 forces x(b-1) = 0".into());
    }
    Ok(AbcPencil {
        a: am,
        b: bm,
        dropped_row: full.row(m - 1).to_vec(),
        dropped_weight: prob.r.at(b - 1),
        bc_rows: (0, m - 1),
        grid: unknowns,
        diagnostics,
    })
}

/// Relative size below which the 2×2 boundary block counts as singular.
pub const PIVOT_THRESHOLD: f64 = 1e-10;

/// Eliminates two unknowns through the boundary rows, solves the reduced
/// pencil as `B'⁻¹A'`, and measures every pair against the original `(A, B)`.
///
/// The eliminated columns are the boundary rows' own indices unless the 2×2
/// block they span is singular relative to [`PIVOT_THRESHOLD`]; then the
/// pair with the best complete pivots is used.
pub fn solve_pencil<T: Real>(pencil: &AbcPencil<T>) -> Result<EigenResult<T>> {
    let (am, bm) = (&pencil.a, &pencil.b);
    let m = am.n_rows();
    if !am.is_square() || (bm.n_rows(), bm.n_cols()) != (m, m) || m < 3 {
        return Err(Error::Dimension("pencil matrices must be square, equal, and at least 3x3".into()));
    }
    let (r0, r1) = pencil.bc_rows;
    let bc = [am.row(r0).to_vec(), am.row(r1).to_vec()];
    for (name, row) in [("a", &bc[0]), ("b-1", &bc[1])] {
        if row.iter().all(|&x| x == T::zero()) {
            return Err(Error::SingularPivot(format!("boundary condition at {name} is identically zero")));
        }
    }
    let mut diagnostics = pencil.diagnostics.clone();
    let cols = pivot_columns(&bc, (r0, r1), &mut diagnostics)?;
    let det = bc[0][cols.0] * bc[1][cols.1] - bc[0][cols.1] * bc[1][cols.0];
    let surviving: Vec<usize> = (0..m).filter(|&j| j != cols.0 && j != cols.1).collect();
    let ns = surviving.len();

    // x = T x_S: eliminated entries from the boundary rows, identity elsewhere
    let mut tm = DenseMatrix::zeros(m, ns);
    for (s, &j) in surviving.iter().enumerate() {
        tm[(j, s)] = T::one();
        let (u, v) = (bc[0][j], bc[1][j]);
        tm[(cols.0, s)] = -(bc[1][cols.1] * u - bc[0][cols.1] * v) / det;
        tm[(cols.1, s)] = -(bc[0][cols.0] * v - bc[1][cols.0] * u) / det;
    }
    let rows: Vec<usize> = (0..m).filter(|&i| i != r0 && i != r1).collect();
    let pick = |mat: &DenseMatrix<T>| -> Result<DenseMatrix<T>> {
        let sub = DenseMatrix::from_rows(&rows.iter().map(|&i| mat.row(i).to_vec()).collect::<Vec<_>>())?;
        sub.matmul(&tm)
    };
    let ar = pick(am)?;
    let br = pick(bm)?;
    let (values, eig_vectors) = reduced_eigen(&ar, &br, &mut diagnostics)?;

    let zero = Complex::new(T::zero(), T::zero());
    let mut vectors = Vec::with_capacity(ns);
    let mut residuals = Vec::with_capacity(ns);
    let mut bc_res = Vec::with_capacity(ns);
    let mut dropped = Vec::with_capacity(ns);
    for (lam, y) in values.iter().zip(&eig_vectors) {
        let mut x = tm.mul_complex_vec(y)?;
        normalize_phase(&mut x);
        let xmax = x.iter().fold(T::zero(), |m, v| m.max(v.norm()));
        let ax = am.mul_complex_vec(&x)?;
        let bx = bm.mul_complex_vec(&x)?;
        residuals.push(ax.iter().zip(&bx).map(|(&u, &v)| (u - v * lam).norm()).fold(T::zero(), T::max) / xmax);
        bc_res.push(ax[r0].norm().max(ax[r1].norm()) / xmax);
        let d = pencil.dropped_row.iter().zip(&x).fold(zero, |acc, (&w, &xi)| acc + xi * w);
        dropped.push((d - x[m - 1] * lam * pencil.dropped_weight).norm() / xmax);
        vectors.push(x);
    }
    let max_imag = values.iter().fold(T::zero(), |m, l| m.max(l.im.abs()));
    let lam_max = values.iter().fold(T::zero(), |m, l| m.max(l.norm()));
    let mut weights: Vec<T> = (0..m).map(|i| if i == 0 { T::zero() } else { bm[(i, i)] }).collect();
    weights[m - 1] = pencil.dropped_weight;
    let orth = pencil_orthogonality(&values, &vectors, &weights);
    Ok(EigenResult {
        eigenvalues: values,
        eigenvectors: vectors,
        points: pencil.grid.points().collect(),
        residual_norms: residuals,
        residual_scale: am.norm_inf() + lam_max * bm.norm_inf(),
        max_imag,
        orthogonality_defect: orth,
        gram_defect: None,
        symmetry_defect: None,
        bc_residuals: Some(bc_res),
        dropped_row_residuals: Some(dropped),
        pivot_columns: Some(cols),
        diagnostics,
    })
}

/// Finite eigenpairs of `A' y = λ B' y`: `B'⁻¹A'` when `B'` is invertible,
/// otherwise `(A' - σB')⁻¹B'` with `λ = σ + 1/μ`, dropping `μ ≈ 0`.
fn reduced_eigen<T: Real>(
    ar: &DenseMatrix<T>,
    br: &DenseMatrix<T>,
    diagnostics: &mut Vec<String>,
) -> Result<(Vec<Complex<T>>, Vec<Vec<Complex<T>>>)> {
    let tol = T::lit(1e-13);
    if let Ok(lu) = Lu::new(br, tol) {
        let eig = general_eigen(&lu.solve_matrix(ar)?)?;
        return Ok((eig.values, eig.vectors));
    }
    let n = ar.n_rows();
    let shift_scale = ar.norm_inf() / br.norm_inf().max(T::min_positive_value());
    for sigma in [T::zero(), T::lit(0.6180339887), T::lit(-std::f64::consts::SQRT_2), T::lit(std::f64::consts::E)] {
        let sigma = sigma * shift_scale;
        let shifted = DenseMatrix::from_columns(n, n, |j| Ok((0..n).map(|i| ar[(i, j)] - sigma * br[(i, j)]).collect()))?;
        let Ok(lu) = Lu::new(&shifted, tol) else { continue };
        let eig = general_eigen(&lu.solve_matrix(br)?)?;
        let mu_max = eig.values.iter().fold(T::zero(), |m, v| m.max(v.norm()));
        let mut pairs: Vec<(Complex<T>, Vec<Complex<T>>)> = eig
            .values
            .iter()
            .zip(eig.vectors)
            .filter(|(mu, _)| mu.norm() > T::lit(1e-10) * mu_max)
            .map(|(&mu, v)| (mu.inv() + sigma, v))
            .collect();
        let infinite = n - pairs.len();
        pairs.sort_by(|x, y| x.0.re.partial_cmp(&y.0.re).unwrap().then(x.0.im.partial_cmp(&y.0.im).unwrap()));
        diagnostics.push(format!("reduced B is singular; {infinite} infinite eigenvalue(s) dropped"));
        return Ok(pairs.into_iter().unzip());
    }
    Err(Error::SingularPivot("reduced pencil is singular for every trial shift".into()))
}

fn pivot_columns<T: Real>(bc: &[Vec<T>; 2], preferred: (usize, usize), diag: &mut Vec<String>) -> Result<(usize, usize)> {
    let det = |i: usize, j: usize| bc[0][i] * bc[1][j] - bc[0][j] * bc[1][i];
    let norm = |row: &Vec<T>| row.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let scale = norm(&bc[0]) * norm(&bc[1]);
    let thr = T::lit(PIVOT_THRESHOLD) * scale;
    if det(preferred.0, preferred.1).abs() > thr {
        return Ok(preferred);
    }
    // complete pivoting on the 2×m block
    let m = bc[0].len();
    let (mut bi, mut bj) = (0, 0);
    let mut best = T::zero();
    for i in 0..2 {
        for j in 0..m {
            if bc[i][j].abs() > best {
                best = bc[i][j].abs();
                bi = i;
                bj = j;
            }
        }
    }
    let other = 1 - bi;
    let f = bc[other][bj] / bc[bi][bj];
    let (mut bk, mut best2) = (usize::MAX, T::zero());
    for k in 0..m {
        if k == bj {
            continue;
        }
        let v = (bc[other][k] - f * bc[bi][k]).abs();
        if v > best2 {
            best2 = v;
            bk = k;
        }
    }
    if bk == usize::MAX || !(det(bj, bk).abs() > thr) {
        return Err(Error::SingularPivot("the two boundary conditions are linearly dependent".into()));
    }
    diag.push(format!(
        "boundary block on columns {:?} is singular; eliminating columns ({}, {}) instead",
        preferred,
        bj.min(bk),
        bj.max(bk)
    ));
    Ok((bj.min(bk), bj.max(bk)))
}

/// Rotates `x` so its largest entry is real and positive, scaled to 1.
fn normalize_phase<T: Real>(x: &mut [Complex<T>]) {
    let big = x.iter().copied().max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
    if let Some(big) = big {
        if big.norm() > T::zero() {
            let inv = big.inv();
            x.iter_mut().for_each(|v| *v = *v * inv);
        }
    }
}

/// Tolerance below which `|Im λ| / |λ|` counts as a real eigenvalue.
pub const REAL_EIGENVALUE_TOL: f64 = 1e-8;

/// Largest normalized `|Σ r x_i conj(x_j)|` over pairs of numerically real
/// eigenvalues whose real parts are distinct.
fn pencil_orthogonality<T: Real>(values: &[Complex<T>], vectors: &[Vec<Complex<T>>], w: &[T]) -> T {
    let tol = T::lit(REAL_EIGENVALUE_TOL);
    let scale = values.iter().fold(T::zero(), |m, l| m.max(l.norm()));
    let real: Vec<usize> = (0..values.len()).filter(|&i| values[i].im.abs() <= tol * values[i].norm()).collect();
    let ip = |x: &[Complex<T>], y: &[Complex<T>]| {
        x.iter().zip(y).zip(w).fold(Complex::new(T::zero(), T::zero()), |acc, ((&u, &v), &ww)| acc + u * v.conj() * ww)
    };
    let norms: Vec<T> = vectors.iter().map(|v| ip(v, v).re.sqrt()).collect();
    let mut worst = T::zero();
    for (a, &i) in real.iter().enumerate() {
        for &j in &real[a + 1..] {
            if (values[i].re - values[j].re).abs() <= T::lit(1e-6) * scale {
                continue;
            }
            worst = worst.max(ip(&vectors[i], &vectors[j]).norm() / (norms[i] * norms[j]));
        }
    }
    worst
}

/// Continuous problem data on one mesh.
#[derive(Clone, Debug)]
pub struct ContinuousSLProblem<T> {
    pub p: MeshFn<T>,
    pub q: MeshFn<T>,
    pub kernel: ContinuousKernel<T>,
}

impl<T: Real> ContinuousSLProblem<T> {
    pub fn new(p: MeshFn<T>, q: MeshFn<T>, params: ABParams<T>) -> Result<Self> {
        p.require_same_mesh(&q)?;
        let kernel = ContinuousKernel::new(params, *p.mesh())?;
        Ok(Self { p, q, kernel })
    }

    /// `∫ w · L₁u` with `L₁u = ABR-left(p ABR-right u) + q u`.
    fn pair(&self, w: &MeshFn<T>, u: &MeshFn<T>, rule: QuadratureRule) -> Result<T> {
        let k = &self.kernel;
        let inner = self.p.mul(&k.abr_deriv_right(u)?)?;
        let bulk = k.integrate_against(w, &k.abr_left_split(&inner)?, rule)?;
        Ok(bulk + rule.inner(w, &self.q.mul(u)?)?)
    }
}

/// Both sides of a continuous form identity.
pub type FormCheck<T> = crate::ab_discrete::IdentityCheck<T>;

/// `∫ v L₁u == ∫ u L₁v`; the cusp of the outer ABR at `a` is integrated exactly.
pub fn continuous_form_symmetry<T: Real>(
    u: &MeshFn<T>,
    v: &MeshFn<T>,
    prob: &ContinuousSLProblem<T>,
    rule: QuadratureRule,
) -> Result<FormCheck<T>> {
    u.require_same_mesh(v)?;
    u.require_same_mesh(&prob.p)?;
    let lhs = prob.pair(v, u, rule)?;
    let rhs = prob.pair(u, v, rule)?;
    let m = u.mesh();
    let scale = u.max_abs()
        * v.max_abs()
        * (prob.p.max_abs() * prob.kernel.params().scale().powi(2) + prob.q.max_abs())
        * (m.b() - m.a());
    Ok(FormCheck::new(lhs, rhs, scale))
}

/// `∫ u ᶜL₁v == ∫ q u v + ∫ p ABR-right v ABR-right u + c [p gen_e_right(u) ABR-right v]_a^b`
/// with `ᶜL₁v = ABC-left(p ABR-right v) + q v`; the derivative inside the ABC
/// operator is differenced.
pub fn continuous_abc_form_check<T: Real>(
    u: &MeshFn<T>,
    v: &MeshFn<T>,
    prob: &ContinuousSLProblem<T>,
    rule: QuadratureRule,
) -> Result<FormCheck<T>> {
    u.require_same_mesh(v)?;
    u.require_same_mesh(&prob.p)?;
    let k = &prob.kernel;
    let c = k.params().scale();
    let rv = k.abr_deriv_right(v)?;
    let w = prob.p.mul(&rv)?;
    let w = MeshFn::new(*w.mesh(), w.values().to_vec())?;
    let lhs = rule.inner(u, &k.abc_deriv_left(&w)?.values)? + rule.inner(u, &prob.q.mul(v)?)?;
    let qq = rule.inner(&prob.q.mul(u)?, v)?;
    let bulk = k.integrate_against(&w, &k.abr_right_split(u)?, rule)?;
    let g = k.gen_e().right(u)?;
    let boundary = c * (w.last() * g.last() - w.first() * g.first());
    let m = u.mesh();
    let scale = u.max_abs() * v.max_abs() * (prob.p.max_abs() * c * c + prob.q.max_abs()) * (m.b() - m.a());
    Ok(FormCheck::new(lhs, qq + bulk + boundary, scale))
}
