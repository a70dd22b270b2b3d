use abfrac::ab_discrete::{self as abd, higher_order_forms, IdentityCheck};
use abfrac::discrete::{discrete_ml, discrete_ml3};
use abfrac::sturm_liouville::{self, matrix_abr_left, matrix_abr_right, REAL_EIGENVALUE_TOL};
use abfrac::{ml_one, ml_three, ml_two, ABKernel, ABParams, BCSpec, DiscreteMLArgs, Flavor, Grid, GridFn};
use abfrac::{HigherOrderVariant, MLArgs, MLTruncation, SLProblem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::Settings;
use crate::error::CliResult;

const IBP_PAIRS: usize = 100;
const RANDOM_FUNCTIONS: usize = 50;

const IBP_TOL: f64 = 1e-11;
const MATRIX_TOL: f64 = 1e-11;
const INVERSE_TOL: f64 = 1e-11;
const BOUNDARY_TOL: f64 = 1e-13;
const HIGHER_ORDER_TOL: f64 = 1e-11;
const SYMMETRY_TOL: f64 = 1e-12;
const SYMMETRIC_RESIDUAL_TOL: f64 = 1e-10;
const GRAM_TOL: f64 = 1e-10;
const PENCIL_RESIDUAL_TOL: f64 = 1e-8;
const ORTHOGONALITY_TOL: f64 = 1e-6;
const E_TOL: f64 = 1e-12;
const REDUCTION_TOL: f64 = 1e-14;

/// One identity's worst case over the suite's samples; no tolerance means
/// reported only.
struct Check {
    identity: &'static str,
    cases: usize,
    max_residual: f64,
    tolerance: Option<f64>,
}

impl Check {
    fn new(identity: &'static str, cases: usize, max_residual: f64, tolerance: f64) -> Self {
        Self { identity, cases, max_residual, tolerance: Some(tolerance) }
    }
}

fn report(name: &str, s: &Settings, alpha: f64, checks: Vec<Check>) -> Value {
    let mut pass = true;
    let mut worst = 0.0f64;
    let entries: Vec<Value> = checks
        .iter()
        .map(|c| {
            let tol = c.tolerance.map(|t| t * s.tol_scale);
            let ok = tol.map_or(true, |t| c.max_residual <= t);
            pass &= ok;
            if c.tolerance.is_some() {
                worst = worst.max(c.max_residual);
            }
            json!({
                "identity": c.identity,
                "cases": c.cases,
                "max_residual": c.max_residual,
                "tolerance": tol,
                "pass": ok,
            })
        })
        .collect();
    json!({
        "suite": name,
        "alpha": alpha,
        "B": s.b_of_alpha,
        "grid": [s.grid.0, s.grid.1],
        "seed": s.seed,
        "tol_scale": s.tol_scale,
        "checks": entries,
        "max_residual": worst,
        "pass": pass,
    })
}

fn rng(s: &Settings) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(s.seed)
}

fn grid(s: &Settings) -> CliResult<Grid> {
    Ok(Grid::nontrivial(s.grid.0, s.grid.1)?)
}

fn random_fn(r: &mut ChaCha8Rng, g: Grid) -> GridFn<f64> {
    GridFn::from_fn(g, |_| r.gen_range(-1.0..1.0))
}

fn positive(r: &mut ChaCha8Rng, g: Grid) -> GridFn<f64> {
    GridFn::from_fn(g, |_| r.gen_range(0.5..2.0))
}

/// `max |x - y|` over the common domain, relative to the larger sup norm.
fn scaled_diff(x: &GridFn<f64>, y: &GridFn<f64>) -> f64 {
    let (lo, hi) = (x.a().max(y.a()), x.b().min(y.b()));
    let scale = x.max_abs().max(y.max_abs()).max(f64::MIN_POSITIVE);
    (lo..=hi).map(|t| (x.at(t) - y.at(t)).abs()).fold(0.0, f64::max) / scale
}

fn first_order(s: &Settings) -> CliResult<ABParams<f64>> {
    let p = ABParams::new(s.alpha.unwrap_or(0.3), s.b_of_alpha)?;
    p.require_discrete("verify")?;
    Ok(p)
}

type PairCheck = fn(&GridFn<f64>, &GridFn<f64>, &ABParams<f64>) -> abfrac::Result<IdentityCheck<f64>>;

pub fn ibp(s: &Settings) -> CliResult<Value> {
    let p = first_order(s)?;
    let g = grid(s)?;
    let mut r = rng(s);
    let identities: [(&str, PairCheck); 3] = [
        ("ibp-sums", abd::ibp_abr_sums_check),
        ("ibp-abr-differences", abd::ibp_abr_diff_check),
        ("ibp-abc-left", abd::ibp_abc_left_check),
    ];
    let mut checks = Vec::new();
    for (name, check) in identities {
        let mut worst = 0.0f64;
        for _ in 0..IBP_PAIRS {
            let (f, h) = (random_fn(&mut r, g), random_fn(&mut r, g));
            worst = worst.max(check(&f, &h, &p)?.relative());
        }
        checks.push(Check::new(name, IBP_PAIRS, worst, IBP_TOL));
    }
    Ok(report("discrete-ibp", s, p.alpha(), checks))
}

/// Largest entrywise relative difference; exact zeros of `y` compare absolutely.
pub fn entrywise_relative(x: &abfrac::DenseMatrix<f64>, y: &abfrac::DenseMatrix<f64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..y.n_rows() {
        for j in 0..y.n_cols() {
            let d = (x[(i, j)] - y[(i, j)]).abs();
            worst = worst.max(if y[(i, j)] != 0.0 { d / y[(i, j)].abs() } else { d });
        }
    }
    worst
}

pub fn matrix_ibp(s: &Settings) -> CliResult<Value> {
    let p = first_order(s)?;
    let g = grid(s)?;
    let kl = matrix_abr_left(g, &p)?;
    let kr = matrix_abr_right(g, &p)?;
    let cases = kr.n_rows() * kr.n_cols();
    let checks = vec![Check::new("transpose-left-is-right", cases, entrywise_relative(&kl.transpose(), &kr), MATRIX_TOL)];
    Ok(report("matrix-ibp", s, p.alpha(), checks))
}

pub fn inverse_laws(s: &Settings) -> CliResult<Value> {
    let p = first_order(s)?;
    let g = grid(s)?;
    let (lo, hi) = (g.a(), g.b());
    let c = p.scale();
    let mut r = rng(s);
    let k = ABKernel::for_grid(p, g)?;
    let mut worst = [0.0f64; 6];
    for _ in 0..RANDOM_FUNCTIONS {
        let f = random_fn(&mut r, g);
        let res = [
            scaled_diff(&k.abr_diff_left_from(&k.ab_sum_left_from(&f, lo)?, lo)?, &f),
            scaled_diff(&k.ab_sum_left_from(&k.abr_diff_left_from(&f, lo)?, lo)?, &f),
            scaled_diff(&k.abr_diff_right_to(&k.ab_sum_right_to(&f, hi)?, hi)?, &f),
            scaled_diff(&k.ab_sum_right_to(&k.abr_diff_right_to(&f, hi)?, hi)?, &f),
            scaled_diff(
                &abd::abc_diff_left(&f, &p)?,
                &abd::abr_diff_left(&f, &p)?.map(|t, v| v - f.at(lo) * c * k.value((t - lo) as usize)),
            ),
            scaled_diff(
                &abd::abc_diff_right(&f, &p)?,
                &abd::abr_diff_right(&f, &p)?.map(|t, v| v - f.at(hi) * c * k.value((hi - t) as usize)),
            ),
        ];
        for (w, x) in worst.iter_mut().zip(res) {
            *w = w.max(x);
        }
    }
    let names = [
        "abr-of-sum-left",
        "sum-of-abr-left",
        "abr-of-sum-right",
        "sum-of-abr-right",
        "abc-abr-relation-left",
        "abc-abr-relation-right",
    ];
    let checks = names.iter().zip(worst).map(|(n, w)| Check::new(n, RANDOM_FUNCTIONS, w, INVERSE_TOL)).collect();
    Ok(report("inverse-laws", s, p.alpha(), checks))
}

pub fn gen_e_boundary(s: &Settings) -> CliResult<Value> {
    let p = first_order(s)?;
    let g = grid(s)?;
    let mut r = rng(s);
    let mut worst = 0.0f64;
    for _ in 0..RANDOM_FUNCTIONS {
        let f = random_fn(&mut r, g);
        let got = abd::gen_e_right(&f, &p)?.at(g.b() - 1);
        let want = (1.0 - p.alpha()) * f.at(g.b() - 1);
        worst = worst.max((got - want).abs() / want.abs().max(f64::MIN_POSITIVE));
    }
    let checks = vec![Check::new("gen-e-right-at-b-minus-1", RANDOM_FUNCTIONS, worst, BOUNDARY_TOL)];
    Ok(report("gen-e-boundary", s, p.alpha(), checks))
}

pub fn higher_order(s: &Settings) -> CliResult<Value> {
    let p = ABParams::new(s.alpha.unwrap_or(1.25), s.b_of_alpha)?;
    p.require_higher_order("verify")?;
    let g = grid(s)?;
    let mut r = rng(s);
    let mut worst = [0.0f64; 4];
    for _ in 0..RANDOM_FUNCTIONS {
        let f = random_fn(&mut r, g);
        for (w, which) in worst.iter_mut().zip(HigherOrderVariant::ALL) {
            let (x, y) = higher_order_forms(&f, &p, which)?;
            *w = w.max(scaled_diff(&x, &y));
        }
    }
    let checks = HigherOrderVariant::ALL
        .iter()
        .zip(worst)
        .map(|(v, w)| Check::new(v.name(), RANDOM_FUNCTIONS, w, HIGHER_ORDER_TOL))
        .collect();
    Ok(report("higher-order", s, p.alpha(), checks))
}

pub fn dslp(s: &Settings) -> CliResult<Value> {
    let p = first_order(s)?;
    let g = grid(s)?;
    let mut r = rng(s);
    let prob = SLProblem::new(positive(&mut r, g), random_fn(&mut r, g), positive(&mut r, g), p, Flavor::AbrAbr)?;
    let e = sturm_liouville::solve(&prob, None)?;
    let n = e.eigenvalues.len();
    let checks = vec![
        Check::new("symmetry-defect", 1, e.symmetry_defect.unwrap_or(f64::NAN), SYMMETRY_TOL),
        Check::new("scaled-residual", n, e.max_scaled_residual(), SYMMETRIC_RESIDUAL_TOL),
        Check::new("r-weighted-gram-defect", n * n, e.gram_defect.unwrap_or(f64::NAN), GRAM_TOL),
    ];
    Ok(report("dslp", s, p.alpha(), checks))
}

pub fn abc_pencil(s: &Settings) -> CliResult<Value> {
    let p = first_order(s)?;
    let g = grid(s)?;
    let mut r = rng(s);
    let prob = SLProblem::new(positive(&mut r, g), random_fn(&mut r, g), positive(&mut r, g), p, Flavor::AbcAbr)?;
    let bc = BCSpec::new(r.gen_range(-1.0..1.0), 1.0, 1.0, r.gen_range(-1.0..1.0))?;
    let e = sturm_liouville::solve(&prob, Some(&bc))?;
    let n = e.eigenvalues.len();
    let bc_worst = e.bc_residuals.as_deref().unwrap_or(&[]).iter().fold(0.0f64, |m, &x| m.max(x));
    let real = e.eigenvalues.iter().filter(|l| l.im.abs() <= REAL_EIGENVALUE_TOL * l.norm()).count();
    let checks = vec![
        Check::new("scaled-residual", n, e.max_scaled_residual(), PENCIL_RESIDUAL_TOL),
        Check::new("boundary-rows", n, bc_worst, PENCIL_RESIDUAL_TOL),
        Check::new("r-weighted-orthogonality", real, e.orthogonality_defect, ORTHOGONALITY_TOL),
        Check { identity: "max-imag", cases: n, max_residual: e.max_imag, tolerance: None },
    ];
    Ok(report("abc-pencil", s, p.alpha(), checks))
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
}

pub fn special_functions(s: &Settings) -> CliResult<Value> {
    let alpha = s.alpha.unwrap_or(0.3);
    let trunc = MLTruncation::default();
    let mut r = rng(s);
    let mut zs = vec![-3.0, -1.0, -0.25, 0.0, 0.5, 1.5];
    zs.extend((0..10).map(|_| r.gen_range(-3.0..2.0)));

    let e = rel(ml_one(1.0, 1.0, &trunc)?, std::f64::consts::E);
    let mut delegation = 0.0f64;
    let mut three = 0.0f64;
    for &z in &zs {
        delegation = delegation.max((ml_two(alpha, 1.0, z, &trunc)? - ml_one(alpha, z, &trunc)?).abs());
        for beta in [0.5, 1.0, 1.7] {
            let want = ml_two(alpha, beta, z, &trunc)?;
            three = three.max(rel(ml_three(&MLArgs::new(alpha, beta, 1.0, z)?, &trunc)?, want));
        }
    }
    let lam = if alpha < 1.0 { -alpha / (1.0 - alpha) } else { -0.5 };
    let mut disc = 0.0f64;
    let mut disc_cases = 0;
    for beta in [1.0, 1.5] {
        for n in 0..=30u64 {
            let want = discrete_ml(&DiscreteMLArgs::new(alpha, beta, lam, n)?, &trunc)?;
            let got = discrete_ml3(alpha, beta, 1.0, lam, n, &trunc)?;
            disc = disc.max(if want == 0.0 { got.abs() } else { rel(got, want) });
            disc_cases += 1;
        }
    }
    let checks = vec![
        Check::new("e1-at-1-is-e", 1, e, E_TOL),
        Check::new("two-parameter-beta-one-delegation", zs.len(), delegation, 0.0),
        Check::new("three-parameter-rho-one", 3 * zs.len(), three, REDUCTION_TOL),
        Check::new("discrete-rho-one", disc_cases, disc, REDUCTION_TOL),
    ];
    Ok(report("special-functions", s, alpha, checks))
}
