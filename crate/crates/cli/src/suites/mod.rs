//! Identity-verification suites. Each suite runs one invariant block and
//! reports every identity in it against its residual contract.

mod continuous;
mod discrete;

use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::output::{emit, json_text};
use crate::{Outcome, VerifyArgs};

/// Parsed `verify` options shared by every suite.
#[derive(Clone, Debug)]
pub struct Settings {
    pub alpha: Option<f64>,
    pub b_of_alpha: f64,
    pub grid: (i64, i64),
    pub mesh: (f64, f64, usize),
    pub seed: u64,
    pub tol_scale: f64,
}

pub struct Suite {
    pub name: &'static str,
    pub continuous: bool,
    pub about: &'static str,
    run: fn(&Settings) -> CliResult<Value>,
}

pub const SUITES: [Suite; 13] = [
    Suite {
        name: "discrete-ibp",
        continuous: false,
        about: "summation by parts for AB sums, ABR differences and left ABC differences, 100 random pairs each",
        run: discrete::ibp,
    },
    Suite {
        name: "matrix-ibp",
        continuous: false,
        about: "transpose of the left ABR matrix against the right ABR matrix",
        run: discrete::matrix_ibp,
    },
    Suite {
        name: "inverse-laws",
        continuous: false,
        about: "ABR difference and AB sum invert each other on both sides; ABC/ABR initial-value relations",
        run: discrete::inverse_laws,
    },
    Suite {
        name: "gen-e-boundary",
        continuous: false,
        about: "right generalized sum at b-1 equals (1-alpha) f(b-1)",
        run: discrete::gen_e_boundary,
    },
    Suite {
        name: "higher-order",
        continuous: false,
        about: "the four dual forms of the order 1 < alpha < 3/2 operators",
        run: discrete::higher_order,
    },
    Suite {
        name: "dslp",
        continuous: false,
        about: "ABR-type Sturm-Liouville problem: symmetry, residuals, r-weighted Gram matrix",
        run: discrete::dslp,
    },
    Suite {
        name: "abc-pencil",
        continuous: false,
        about: "ABC-type Sturm-Liouville pencil: residuals, boundary rows, orthogonality",
        run: discrete::abc_pencil,
    },
    Suite {
        name: "special-functions",
        continuous: false,
        about: "Mittag-Leffler delegation and reduction identities",
        run: discrete::special_functions,
    },
    Suite {
        name: "continuous-ibp",
        continuous: true,
        about: "integration by parts for ABR and both ABC derivatives, and the generalized-integral swap",
        run: continuous::ibp,
    },
    Suite {
        name: "continuous-relations",
        continuous: true,
        about: "ABC derivative equals ABR derivative minus the endpoint term, both sides",
        run: continuous::relations,
    },
    Suite {
        name: "continuous-inverse-laws",
        continuous: true,
        about: "ABR derivative and AB integral invert each other, both sides and both orders",
        run: continuous::inverse_laws,
    },
    Suite {
        name: "continuous-form-symmetry",
        continuous: true,
        about: "symmetry of the bilinear form of the ABR-type operator",
        run: continuous::form_symmetry,
    },
    Suite {
        name: "continuous-abc-form",
        continuous: true,
        about: "bilinear form of the ABC-type operator against its boundary terms",
        run: continuous::abc_form,
    },
];

fn parse_grid(s: &str) -> CliResult<(i64, i64)> {
    let bad = || CliError::new(format!("--grid: expected a:b with integers a < b, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a >= b {
        return Err(bad());
    }
    Ok((a, b))
}

fn parse_mesh(s: &str) -> CliResult<(f64, f64, usize)> {
    let bad = || CliError::new(format!("--mesh: expected a:b:n with a < b and n >= 5, got {s:?}"));
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts[..] else { return Err(bad()) };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if !(a < b) || !a.is_finite() || !b.is_finite() || n < 5 {
        return Err(bad());
    }
    Ok((a, b, n))
}

fn settings(args: &VerifyArgs) -> CliResult<Settings> {
    if !(args.tol_scale > 0.0) || !args.tol_scale.is_finite() {
        return Err(CliError::new(format!("--tol-scale: must be positive, got {}", args.tol_scale)));
    }
    Ok(Settings {
        alpha: args.alpha,
        b_of_alpha: args.b_of_alpha,
        grid: parse_grid(&args.grid)?,
        mesh: parse_mesh(&args.mesh)?,
        seed: args.seed,
        tol_scale: args.tol_scale,
    })
}

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn listing() -> String {
    let width = SUITES.iter().map(|s| s.name.len()).max().unwrap_or(0);
    SUITES
        .iter()
        .map(|s| {
            let family = if s.continuous { "continuous" } else { "discrete" };
            format!("{:width$}  {:10}  {}\n", s.name, family, s.about)
        })
        .collect()
}

pub fn run(args: &VerifyArgs) -> CliResult<Outcome> {
    if args.list {
        emit(None, listing().as_bytes())?;
        return Ok(Outcome::Pass);
    }
    let s = settings(args)?;
    let selected: Vec<&Suite> = match &args.suite {
        Some(name) => {
            let suite = find(name).ok_or_else(|| {
                CliError::new(format!("--suite: unknown suite {name:?}; `verify --list` shows the available suites"))
            })?;
            if args.continuous && !suite.continuous {
                return Err(CliError::new(format!("--suite: {name} is a discrete suite but --continuous was given")));
            }
            vec![suite]
        }
        None => SUITES.iter().filter(|x| x.continuous == args.continuous).collect(),
    };
    let mut reports = Vec::with_capacity(selected.len());
    for suite in selected {
        reports.push((suite.run)(&s)?);
    }
    let pass = reports.iter().all(|r| r["pass"] == Value::Bool(true));
    let v = json!({ "pass": pass, "suites": reports });
    emit(args.out.as_deref(), json_text(&v).as_bytes())?;
    if !pass {
        eprintln!("warning: residual contract exceeded; see the `pass` fields in the report");
    }
    Ok(Outcome::from_pass(pass))
}
