//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! `cargo test -p abfrac --test acceptance`

mod common;

use std::f64::consts::{E, PI};
use std::time::Instant;

use abfrac::ab_discrete::{
    abc_diff_left, abc_diff_right, abr_diff_left, abr_diff_right, gen_e_right, higher_order_forms, ibp_abc_left_check,
    ibp_abr_diff_check, ibp_abr_sums_check, IdentityCheck,
};
use abfrac::continuous::{
    calibrated_tolerance, fit_order, gen_e_swap_check, ibp_abc_continuous_check, ibp_abr_continuous_check, inverse_law_check,
    relation_check, Composition, Side,
};
use abfrac::discrete::{discrete_ml, discrete_ml3};
use abfrac::sturm_liouville::{
    assemble_abc_slp, assemble_abr_slp, continuous_form_symmetry, matrix_abr_left, matrix_abr_right, solve_pencil,
    solve_symmetric_slp, ContinuousSLProblem, REAL_EIGENVALUE_TOL,
};
use abfrac::{
    ml_one, ml_three, ml_two, ABKernel, ABParams, BCSpec, ContinuousKernel, DiscreteMLArgs, Flavor, GridFn, HigherOrderVariant,
    MLArgs, MLTruncation, MeshFn, QuadratureRule, SLProblem, UniformMesh,
};
use common::{grid, max_scaled_diff, random_fn, rng};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const FIRST_ORDER: [f64; 3] = [0.1, 0.25, 0.45];
const MESHES: [usize; 3] = [501, 1001, 2001];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn params(alpha: f64, b: f64) -> ABParams<f64> {
    ABParams::new(alpha, b).unwrap()
}

fn positive(r: &mut ChaCha8Rng, g: abfrac::Grid) -> GridFn<f64> {
    GridFn::from_fn(g, |_| r.gen_range(0.5..2.0))
}

fn matrix_transpose() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for &alpha in &FIRST_ORDER {
        for b in [21, 101] {
            let g = grid(0, b);
            let kl = matrix_abr_left(g, &params(alpha, 1.0)).unwrap().transpose();
            let kr = matrix_abr_right(g, &params(alpha, 1.0)).unwrap();
            for i in 0..kr.n_rows() {
                for j in 0..kr.n_cols() {
                    let d = (kl[(i, j)] - kr[(i, j)]).abs();
                    worst = worst.max(if kr[(i, j)] != 0.0 { d / kr[(i, j)].abs() } else { d });
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(worst <= 1e-11 && secs <= 5.0, format!("max relative defect {worst:.1e} (<= 1e-11), {secs:.2} s (<= 5 s)"))
}

type PairCheck = fn(&GridFn<f64>, &GridFn<f64>, &ABParams<f64>) -> abfrac::Result<IdentityCheck<f64>>;

fn discrete_ibp_residuals(seed: u64) -> Vec<f64> {
    let checks: [PairCheck; 3] = [ibp_abr_sums_check, ibp_abr_diff_check, ibp_abc_left_check];
    let mut r = rng(seed);
    let mut out = vec![];
    for check in checks {
        for _ in 0..100 {
            let alpha = FIRST_ORDER[r.gen_range(0..3)];
            let p = params(alpha, r.gen_range(0.5..2.0));
            let hi = r.gen_range(3..60);
            let (f, g) = (random_fn(&mut r, grid(0, hi)), random_fn(&mut r, grid(0, hi)));
            out.push(check(&f, &g, &p).unwrap().relative());
        }
    }
    out
}

fn discrete_ibp() -> Outcome {
    let first = discrete_ibp_residuals(2718);
    let again = discrete_ibp_residuals(2718);
    let same = first.iter().zip(&again).all(|(a, b)| a.to_bits() == b.to_bits());
    let worst: Vec<f64> = first.chunks(100).map(|c| c.iter().cloned().fold(0.0, f64::max)).collect();
    let pass = same && worst.iter().all(|&w| w <= 1e-11);
    outcome(
        pass,
        format!(
            "sums {:.1e}, ABR differences {:.1e}, left ABC {:.1e} (<= 1e-11 x scale, 100 pairs each); rerun bit-identical: {same}",
            worst[0], worst[1], worst[2]
        ),
    )
}

fn inverse_laws() -> Outcome {
    let mut r = rng(314);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let p = params(FIRST_ORDER[r.gen_range(0..3)], r.gen_range(0.5..2.0));
        let (lo, hi) = (r.gen_range(-10..10), 0);
        let hi = lo + hi + r.gen_range(4..44);
        let f = random_fn(&mut r, grid(lo, hi));
        let k = ABKernel::for_grid(p, f.grid()).unwrap();
        let c = p.scale();
        let pairs = [
            (k.abr_diff_left_from(&k.ab_sum_left_from(&f, lo).unwrap(), lo).unwrap(), f.clone()),
            (k.ab_sum_left_from(&k.abr_diff_left_from(&f, lo).unwrap(), lo).unwrap(), f.clone()),
            (k.abr_diff_right_to(&k.ab_sum_right_to(&f, hi).unwrap(), hi).unwrap(), f.clone()),
            (k.ab_sum_right_to(&k.abr_diff_right_to(&f, hi).unwrap(), hi).unwrap(), f.clone()),
            (
                abc_diff_left(&f, &p).unwrap(),
                abr_diff_left(&f, &p).unwrap().map(|t, v| v - f.at(lo) * c * k.value((t - lo) as usize)),
            ),
            (
                abc_diff_right(&f, &p).unwrap(),
                abr_diff_right(&f, &p).unwrap().map(|t, v| v - f.at(hi) * c * k.value((hi - t) as usize)),
            ),
        ];
        for (x, y) in &pairs {
            worst = worst.max(max_scaled_diff(x, y));
        }
    }
    outcome(worst <= 1e-11, format!("4 compositions + 2 initial-value relations on 50 functions: {worst:.1e} (<= 1e-11)"))
}

fn gen_e_boundary() -> Outcome {
    let mut r = rng(99);
    let mut worst = 0.0f64;
    for alpha in [0.1, 0.2, 0.3, 0.4] {
        for _ in 0..25 {
            let b = r.gen_range(3..50);
            let f = random_fn(&mut r, grid(0, b));
            let got = gen_e_right(&f, &params(alpha, r.gen_range(0.5..2.0))).unwrap().at(b - 1);
            let want = (1.0 - alpha) * f.at(b - 1);
            worst = worst.max((got - want).abs() / want.abs());
        }
    }
    outcome(worst <= 1e-13, format!("relative error {worst:.1e} (<= 1e-13)"))
}

fn dslp() -> Outcome {
    let mut r = rng(2020);
    let mut parts = vec![];
    let mut pass = true;
    for n in [20i64, 200] {
        let g = grid(0, n + 1);
        let w = positive(&mut r, g);
        let prob =
            SLProblem::new(positive(&mut r, g), random_fn(&mut r, g), w.clone(), params(0.3, 1.0), Flavor::AbrAbr).unwrap();
        let start = Instant::now();
        let l2 = assemble_abr_slp(&prob).unwrap();
        let e = solve_symmetric_slp(&l2, &w).unwrap();
        let secs = start.elapsed().as_secs_f64();
        // recompute residual and Gram matrix from the returned pairs
        let rv = &w.values()[1..=n as usize];
        let lam_max = e.eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.re.abs()));
        let scale = l2.norm_inf() + lam_max * rv.iter().cloned().fold(0.0, f64::max);
        let mut res = 0.0f64;
        let mut gram = 0.0f64;
        let vs: Vec<Vec<f64>> = e.eigenvectors.iter().map(|v| v.iter().map(|z| z.re).collect()).collect();
        for (lam, x) in e.eigenvalues.iter().zip(&vs) {
            let lx = l2.mul_vec(x).unwrap();
            let xmax = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let worst = lx.iter().zip(x).zip(rv).map(|((y, xi), ri)| (y - lam.re * ri * xi).abs()).fold(0.0, f64::max);
            res = res.max(worst / xmax / scale);
        }
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                let gij: f64 = (0..rv.len()).map(|t| rv[t] * vs[i][t] * vs[j][t]).sum();
                gram = gram.max((gij - if i == j { 1.0 } else { 0.0 }).abs());
            }
        }
        let sym = l2.symmetry_defect().unwrap();
        let real = e.eigenvalues.iter().all(|l| l.im == 0.0);
        let ok = sym <= 1e-12 && res <= 1e-10 && gram <= 1e-10 && real && (n < 200 || secs <= 10.0);
        pass &= ok;
        parts.push(format!("n={n}: symmetry {sym:.1e}, residual {res:.1e}, Gram {gram:.1e}, {secs:.2} s"));
    }
    outcome(pass, parts.join("; ") + " (<= 1e-12, 1e-10, 1e-10; n=200 <= 10 s)")
}

fn abc_pencil() -> Outcome {
    let mut r = rng(4242);
    let mut pass = true;
    let (mut res, mut orth, mut imag) = (0.0f64, 0.0f64, 0.0f64);
    let cases = [(0.3, 22, false), (0.1, 15, true), (0.25, 40, true), (0.45, 60, true), (0.2, 120, true)];
    for &(alpha, n, random) in &cases {
        let g = grid(0, n);
        let (p, q, w) = if random {
            (positive(&mut r, g), random_fn(&mut r, g), positive(&mut r, g))
        } else {
            (GridFn::from_fn(g, |_| 1.0), GridFn::zeros(g), GridFn::from_fn(g, |_| 1.0))
        };
        let bc = if random {
            BCSpec::new(r.gen_range(-1.0..1.0), 1.0, 1.0, r.gen_range(-1.0..1.0)).unwrap()
        } else {
            BCSpec::new(1.0, 0.0, 0.0, 1.0).unwrap()
        };
        let prob = SLProblem::new(p, q, w, params(alpha, 1.0), Flavor::AbcAbr).unwrap();
        let pen = assemble_abc_slp(&prob, &bc).unwrap();
        let e = solve_pencil(&pen).unwrap();
        // interior rows and both boundary rows of the original pencil
        let lam_max = e.eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.norm()));
        let scale = pen.a.norm_inf() + lam_max * pen.b.norm_inf();
        for (lam, x) in e.eigenvalues.iter().zip(&e.eigenvectors) {
            let ax = pen.a.mul_complex_vec(x).unwrap();
            let bx = pen.b.mul_complex_vec(x).unwrap();
            let xmax = x.iter().fold(0.0f64, |m, v| m.max(v.norm()));
            let worst = ax.iter().zip(&bx).map(|(u, v)| (u - v * lam).norm()).fold(0.0, f64::max);
            res = res.max(worst / xmax / scale);
        }
        imag = imag.max(e.max_imag);
        let real_count = e.eigenvalues.iter().filter(|l| l.im.abs() <= REAL_EIGENVALUE_TOL * l.norm()).count();
        if real_count >= 2 {
            orth = orth.max(e.orthogonality_defect);
        }
    }
    pass &= res <= 1e-8 && orth <= 1e-6;
    outcome(
        pass,
        format!(
            "{} problems: scaled residual incl. boundary rows {res:.1e} (<= 1e-8), orthogonality {orth:.1e} (<= 1e-6), max_imag {imag:.1e} (reported)",
            cases.len()
        ),
    )
}

fn higher_order() -> Outcome {
    let mut r = rng(1515);
    let mut worst = 0.0f64;
    for alpha in [1.05, 1.25, 1.449] {
        let p = params(alpha, r.gen_range(0.5..2.0));
        for _ in 0..20 {
            let f = random_fn(&mut r, grid(0, 15));
            for which in HigherOrderVariant::ALL {
                let (x, y) = higher_order_forms(&f, &p, which).unwrap();
                worst = worst.max(max_scaled_diff(&x, &y));
            }
        }
    }
    outcome(worst <= 1e-11, format!("four dual forms on N_0,15: {worst:.1e} (<= 1e-11)"))
}

type Fun = (fn(f64) -> f64, fn(f64) -> f64);

const SMOOTH: [Fun; 4] = [
    (|t| t * t, |t| 2.0 * t),
    (|t| (1.0 - t) * (1.0 - t) + 0.5 * t, |t| -2.0 * (1.0 - t) + 0.5),
    (|t| (2.0 * t).sin() + 1.0, |t| 2.0 * (2.0 * t).cos()),
    (|t| (t * t + 0.5).exp() - t, |t| 2.0 * t * (t * t + 0.5).exp() - 1.0),
];

fn unit_mesh(n: usize) -> UniformMesh<f64> {
    UniformMesh::new(0.0, 1.0, n).unwrap()
}

fn on(m: UniformMesh<f64>, f: Fun) -> MeshFn<f64> {
    MeshFn::from_fn_with_derivative(m, f.0, f.1)
}

fn hs() -> Vec<f64> {
    MESHES.iter().map(|&n| unit_mesh(n).h()).collect()
}

/// Residual series per identity, one kernel per mesh.
fn series<const K: usize>(mut residuals: impl FnMut(UniformMesh<f64>, &ContinuousKernel<f64>) -> [f64; K]) -> Vec<Vec<f64>> {
    let mut out = vec![vec![]; K];
    for &n in &MESHES {
        let m = unit_mesh(n);
        let k = ContinuousKernel::new(params(0.5, 1.0), m).unwrap();
        for (s, r) in out.iter_mut().zip(residuals(m, &k)) {
            s.push(r);
        }
    }
    out
}

fn continuous_ibp() -> Outcome {
    let start = Instant::now();
    let rule = QuadratureRule::trapezoid();
    let pairs = [(SMOOTH[0], SMOOTH[1]), (SMOOTH[2], SMOOTH[3]), (SMOOTH[3], SMOOTH[0])];
    let all = series(|m, k| {
        let mut out = [0.0; 12];
        for (j, &(f, g)) in pairs.iter().enumerate() {
            let (f, g) = (on(m, f), on(m, g));
            out[4 * j] = ibp_abr_continuous_check(&f, &g, k, rule).unwrap().residual;
            out[4 * j + 1] = ibp_abc_continuous_check(&f, &g, k, Side::Left, rule).unwrap().residual;
            out[4 * j + 2] = ibp_abc_continuous_check(&f, &g, k, Side::Right, rule).unwrap().residual;
            out[4 * j + 3] = gen_e_swap_check(&f, &g, k.gen_e(), rule).unwrap().residual;
        }
        out
    });
    let h = hs();
    let orders: Vec<f64> = all.iter().map(|r| fit_order(&h, r)).collect();
    let decreasing = all.iter().all(|r| r[2] < r[1] && r[1] < r[0]);
    let min = orders.iter().cloned().fold(f64::INFINITY, f64::min);
    let secs = start.elapsed().as_secs_f64();
    outcome(
        min >= 1.8 && decreasing && secs <= 60.0,
        format!(
            "ABR, left/right ABC and swap on 3 pairs, n = 501/1001/2001: min order {min:.3} (>= 1.8), decreasing: {decreasing}, {secs:.1} s (<= 60 s)"
        ),
    )
}

fn continuous_relations_and_inverse_laws() -> Outcome {
    let comps = [Composition::DerivOfIntegral, Composition::IntegralOfDeriv];
    let all = series(|m, k| {
        let mut out = [0.0; 24];
        let mut i = 0;
        for &f in &SMOOTH {
            let f = on(m, f);
            for side in [Side::Left, Side::Right] {
                out[i] = relation_check(&f, k, side).unwrap().max_abs;
                i += 1;
                for which in comps {
                    out[i] = inverse_law_check(&f, k, side, which).unwrap().max_abs;
                    i += 1;
                }
            }
        }
        out
    });
    let h = hs();
    let mut worst_ratio = 0.0f64;
    for r in &all {
        let tol = 10.0 * calibrated_tolerance(&h[..2], &r[..2], h[2]);
        worst_ratio = worst_ratio.max(r[2] / tol);
    }
    outcome(
        worst_ratio <= 1.0,
        format!("relations and inverse laws, 4 functions x 2 sides: worst residual / (10 x calibrated tolerance) = {worst_ratio:.3} at n = 2001"),
    )
}

fn special_functions() -> Outcome {
    let t = MLTruncation::default();
    let e1 = (ml_one(1.0, 1.0, &t).unwrap() - E).abs();
    let mut delegation_exact = true;
    let mut three = 0.0f64;
    let mut disc = 0.0f64;
    for alpha in [0.3, 0.5, 0.8, 1.0, 1.7] {
        for z in [-2.0, -0.5, 0.0, 0.4, 1.3] {
            delegation_exact &= ml_two(alpha, 1.0, z, &t).unwrap().to_bits() == ml_one(alpha, z, &t).unwrap().to_bits();
            for beta in [0.6, 1.0, 2.2] {
                let two = ml_two(alpha, beta, z, &t).unwrap();
                let th = ml_three(&MLArgs::new(alpha, beta, 1.0, z).unwrap(), &t).unwrap();
                three = three.max((th - two).abs() / two.abs().max(f64::MIN_POSITIVE));
            }
        }
    }
    for alpha in [0.1, 0.25, 0.45] {
        let lam = -alpha / (1.0 - alpha);
        for n in 0..40u64 {
            let a = discrete_ml(&DiscreteMLArgs::new(alpha, 1.0, lam, n).unwrap(), &t).unwrap();
            let b = discrete_ml3(alpha, 1.0, 1.0, lam, n, &t).unwrap();
            disc = disc.max((a - b).abs() / a.abs().max(f64::MIN_POSITIVE));
        }
    }
    outcome(
        e1 <= 1e-12 && delegation_exact && three <= 1e-14 && disc <= 1e-14,
        format!(
            "|E_1(1) - e| {e1:.1e} (<= 1e-12), beta = 1 delegation exact: {delegation_exact}, rho = 1 three-parameter {three:.1e} (<= 1e-14), discrete rho = 1 {disc:.1e} (<= 1e-14)"
        ),
    )
}

fn form_symmetry() -> Outcome {
    let pairs: [Fun; 3] = [
        (|t| t * (1.0 - t), |t| (PI * t).sin() * (1.0 + t)),
        (|t| t * t * (1.0 - t), |t| t * (1.0 - t) * (2.0 + t * t)),
        (|t| (PI * t).sin(), |t| (2.0 * PI * t).sin() * (t + 0.5)),
    ];
    let h = hs();
    let mut orders = vec![];
    for (u, v) in pairs {
        let rs: Vec<f64> = MESHES
            .iter()
            .map(|&n| {
                let m = unit_mesh(n);
                let prob = ContinuousSLProblem::new(
                    MeshFn::from_fn(m, |t| 1.0 + 0.5 * t),
                    MeshFn::from_fn(m, f64::cos),
                    params(0.5, 1.0),
                )
                .unwrap();
                continuous_form_symmetry(&MeshFn::from_fn(m, u), &MeshFn::from_fn(m, v), &prob, QuadratureRule::trapezoid())
                    .unwrap()
                    .residual
            })
            .collect();
        orders.push(fit_order(&h, &rs));
    }
    let min = orders.iter().cloned().fold(f64::INFINITY, f64::min);
    outcome(min >= 1.5, format!("3 pairs: orders {:.3}, {:.3}, {:.3} (>= 1.5)", orders[0], orders[1], orders[2]))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("discrete ABR matrix form, K_L^T = K_R", matrix_transpose),
        ("discrete summation-by-parts identities", discrete_ibp),
        ("discrete inverse laws and initial-value relations", inverse_laws),
        ("right generalized sum at b-1 is (1-alpha) f(b-1)", gen_e_boundary),
        ("ABR-type discrete Sturm-Liouville problem", dslp),
        ("ABC-type discrete Sturm-Liouville pencil", abc_pencil),
        ("higher-order dual forms, 1 < alpha < 3/2", higher_order),
        ("continuous integration by parts, mesh convergence", continuous_ibp),
        ("continuous relations and inverse laws at mesh tolerance", continuous_relations_and_inverse_laws),
        ("Mittag-Leffler delegation and reductions", special_functions),
        ("continuous bilinear-form symmetry, mesh convergence", form_symmetry),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:2} {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
