use abfrac::ab_discrete as abd;
use abfrac::continuous as cont;
use abfrac::discrete as disc;
use abfrac::{ABParams, GridFn, MeshFn, Result};

use crate::error::{CliError, CliResult};
use crate::output::{emit, open};
use crate::{ApplyArgs, Outcome};

/// Operators receive `(α, B)`; the AB ones validate them as `ABParams`, the
/// classical fractional ones only need `α > 0`.
type DiscreteOp = fn(&GridFn<f64>, f64, f64) -> Result<GridFn<f64>>;
type ContinuousOp = fn(&MeshFn<f64>, f64, f64) -> Result<MeshFn<f64>>;

fn ab(alpha: f64, b: f64) -> Result<ABParams<f64>> {
    ABParams::new(alpha, b)
}

const DISCRETE_OPS: [(&str, DiscreteOp); 14] = [
    ("gen-e-left", |f, a, b| abd::gen_e_left(f, &ab(a, b)?)),
    ("gen-e-right", |f, a, b| abd::gen_e_right(f, &ab(a, b)?)),
    ("abr-left", |f, a, b| abd::abr_diff_left(f, &ab(a, b)?)),
    ("abr-right", |f, a, b| abd::abr_diff_right(f, &ab(a, b)?)),
    ("abc-left", |f, a, b| abd::abc_diff_left(f, &ab(a, b)?)),
    ("abc-right", |f, a, b| abd::abc_diff_right(f, &ab(a, b)?)),
    ("ab-sum-left", |f, a, b| abd::ab_sum_left(f, &ab(a, b)?)),
    ("ab-sum-right", |f, a, b| abd::ab_sum_right(f, &ab(a, b)?)),
    ("nabla-sum-left", |f, a, _| disc::nabla_sum_left(f, a)),
    ("nabla-sum-right", |f, a, _| disc::nabla_sum_right(f, a)),
    ("rl-diff-left", |f, a, _| disc::rl_diff_left(f, a)),
    ("rl-diff-right", |f, a, _| disc::rl_diff_right(f, a)),
    ("caputo-diff-left", |f, a, _| disc::caputo_diff_left(f, a)),
    ("caputo-diff-right", |f, a, _| disc::caputo_diff_right(f, a)),
];

const CONTINUOUS_OPS: [(&str, ContinuousOp); 10] = [
    ("gen-e-left", |f, a, b| cont::gen_e_left_c(f, a, ab(a, b)?.lambda())),
    ("gen-e-right", |f, a, b| cont::gen_e_right_c(f, a, ab(a, b)?.lambda())),
    ("abr-left", |f, a, b| cont::abr_deriv_left(f, &ab(a, b)?)),
    ("abr-right", |f, a, b| cont::abr_deriv_right(f, &ab(a, b)?)),
    ("abc-left", |f, a, b| Ok(cont::abc_deriv_left(f, &ab(a, b)?)?.values)),
    ("abc-right", |f, a, b| Ok(cont::abc_deriv_right(f, &ab(a, b)?)?.values)),
    ("ab-integral-left", |f, a, b| cont::ab_integral_left(f, &ab(a, b)?)),
    ("ab-integral-right", |f, a, b| cont::ab_integral_right(f, &ab(a, b)?)),
    ("rl-integral-left", |f, a, _| cont::rl_integral_left(f, a)),
    ("rl-integral-right", |f, a, _| cont::rl_integral_right(f, a)),
];

fn lookup<F: Copy>(table: &[(&str, F)], name: &str, family: &str) -> CliResult<F> {
    table.iter().find(|(n, _)| *n == name).map(|(_, f)| *f).ok_or_else(|| {
        let names: Vec<&str> = table.iter().map(|(n, _)| *n).collect();
        CliError::new(format!("--op: unknown {family} operator {name:?}; expected one of {}", names.join(", ")))
    })
}

pub fn run(args: &ApplyArgs) -> CliResult<Outcome> {
    let input = open(&args.input)?;
    let at = |e: abfrac::Error| CliError::new(format!("{}: {e}", args.input.display()));
    let mut buf = Vec::new();
    if args.continuous {
        let op = lookup(&CONTINUOUS_OPS, &args.op, "continuous")?;
        let f = MeshFn::<f64>::read_csv(input).map_err(at)?;
        op(&f, args.alpha, args.b_of_alpha)?.write_csv(&mut buf)?;
    } else {
        let op = lookup(&DISCRETE_OPS, &args.op, "discrete")?;
        let f = GridFn::<f64>::read_csv(input).map_err(at)?;
        op(&f, args.alpha, args.b_of_alpha)?.write_csv(&mut buf)?;
    }
    emit(args.out.as_deref(), &buf)?;
    Ok(Outcome::Pass)
}
