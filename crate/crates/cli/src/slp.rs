use std::io::Read;
use std::path::Path;

use abfrac::sturm_liouville::{self, REAL_EIGENVALUE_TOL};
use abfrac::{ABParams, BCSpec, EigenResult, Flavor, Grid, GridFn, SLProblem};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::output::{emit, json_text, open};
use crate::{Outcome, SlpArgs};

/// Contracts on the symmetric (ABR_ABR) path.
const SYMMETRY_TOL: f64 = 1e-12;
const SYMMETRIC_RESIDUAL_TOL: f64 = 1e-10;
const GRAM_TOL: f64 = 1e-10;
/// Contracts on the pencil (ABC_ABR) path.
const PENCIL_RESIDUAL_TOL: f64 = 1e-8;
const ORTHOGONALITY_TOL: f64 = 1e-6;

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    a: i64,
    b: i64,
    alpha: f64,
    #[serde(rename = "B")]
    b_of_alpha: f64,
    flavor: String,
    p: Vec<f64>,
    q: Vec<f64>,
    r: Vec<f64>,
    bc: Option<BcFile>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct BcFile {
    c1: f64,
    c2: f64,
    d1: f64,
    d2: f64,
}

pub struct Problem {
    pub prob: SLProblem<f64>,
    pub bc: Option<BCSpec<f64>>,
}

/// Parses and validates a problem file; every error names the offending field.
pub fn parse_problem(text: &str) -> CliResult<Problem> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| CliError::new(e.to_string()))?;
    let field = |name: &str, e: abfrac::Error| CliError::new(format!("field `{name}`: {e}"));
    let grid = Grid::nontrivial(file.a, file.b).map_err(|e| field("a`, `b", e))?;
    let coeff = |name: &str, v: Vec<f64>| -> CliResult<GridFn<f64>> {
        if v.len() != grid.len() {
            return Err(CliError::new(format!(
                "field `{name}`: expected {} values (one per point of {}..={}), got {}",
                grid.len(),
                grid.a(),
                grid.b(),
                v.len()
            )));
        }
        Ok(GridFn::new(grid, v)?)
    };
    let (p, q, r) = (coeff("p", file.p)?, coeff("q", file.q)?, coeff("r", file.r)?);
    let flavor = Flavor::parse(&file.flavor).map_err(|e| field("flavor", e))?;
    let params = ABParams::new(file.alpha, file.b_of_alpha).map_err(|e| field("alpha`, `B", e))?;
    let bc = match (flavor, file.bc) {
        (_, Some(b)) => Some(BCSpec::new(b.c1, b.c2, b.d1, b.d2).map_err(|e| field("bc", e))?),
        (Flavor::AbcAbr, None) => return Err(CliError::new("field `bc`: required for flavor ABC_ABR")),
        (Flavor::AbrAbr, None) => None,
    };
    let prob = SLProblem::new(p, q, r, params, flavor).map_err(|e| CliError::new(format!("invalid problem: {e}")))?;
    Ok(Problem { prob, bc })
}

struct Contract {
    name: &'static str,
    value: f64,
    tolerance: f64,
}

fn contracts(e: &EigenResult<f64>, flavor: Flavor, tol_scale: f64) -> Vec<Contract> {
    let mut out = Vec::new();
    match flavor {
        Flavor::AbrAbr => {
            out.push(Contract { name: "symmetry_defect", value: e.symmetry_defect.unwrap_or(f64::NAN), tolerance: SYMMETRY_TOL });
            out.push(Contract { name: "max_scaled_residual", value: e.max_scaled_residual(), tolerance: SYMMETRIC_RESIDUAL_TOL });
            out.push(Contract { name: "gram_defect", value: e.gram_defect.unwrap_or(f64::NAN), tolerance: GRAM_TOL });
        }
        Flavor::AbcAbr => {
            out.push(Contract { name: "max_scaled_residual", value: e.max_scaled_residual(), tolerance: PENCIL_RESIDUAL_TOL });
            let bc = e.bc_residuals.as_deref().unwrap_or(&[]).iter().fold(0.0f64, |m, &x| m.max(x));
            out.push(Contract { name: "max_bc_residual", value: bc, tolerance: PENCIL_RESIDUAL_TOL });
            out.push(Contract { name: "orthogonality_defect", value: e.orthogonality_defect, tolerance: ORTHOGONALITY_TOL });
        }
    }
    for c in &mut out {
        c.tolerance *= tol_scale;
    }
    out
}

/// The JSON form of a solved problem and whether its contracts held.
pub fn report(prob: &SLProblem<f64>, e: &EigenResult<f64>, tol_scale: f64) -> (Value, bool) {
    let checks = contracts(e, prob.flavor(), tol_scale);
    let pass = checks.iter().all(|c| c.value <= c.tolerance);
    let real_count = e.eigenvalues.iter().filter(|l| l.im.abs() <= REAL_EIGENVALUE_TOL * l.norm()).count();
    let v = json!({
        "flavor": prob.flavor().name(),
        "alpha": prob.params().alpha(),
        "B": prob.params().b_of_alpha(),
        "grid": [prob.grid().a(), prob.grid().b()],
        "points": e.points,
        "eigenvalues": e.eigenvalues.iter().map(|l| json!({"re": l.re, "im": l.im})).collect::<Vec<_>>(),
        "eigenvectors": e.eigenvectors.iter().map(|v| json!({
            "re": v.iter().map(|z| z.re).collect::<Vec<_>>(),
            "im": v.iter().map(|z| z.im).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "real_eigenvalue_count": real_count,
        "residual_norms": e.residual_norms,
        "residual_scale": e.residual_scale,
        "max_imag": e.max_imag,
        "orthogonality_defect": e.orthogonality_defect,
        "gram_defect": e.gram_defect,
        "symmetry_defect": e.symmetry_defect,
        "bc_residuals": e.bc_residuals,
        "dropped_row_residuals": e.dropped_row_residuals,
        "pivot_columns": e.pivot_columns.map(|(i, j)| [i, j]),
        "diagnostics": e.diagnostics,
        "contracts": checks.iter().map(|c| json!({
            "name": c.name,
            "value": c.value,
            "tolerance": c.tolerance,
            "pass": c.value <= c.tolerance,
        })).collect::<Vec<_>>(),
        "pass": pass,
    });
    (v, pass)
}

/// `t,v1,v2,...`; real parts of the eigenvectors, one row per point.
pub fn eigenvector_csv(e: &EigenResult<f64>) -> String {
    let mut s = String::from("t");
    for k in 1..=e.eigenvectors.len() {
        s.push_str(&format!(",v{k}"));
    }
    s.push('\n');
    for (i, t) in e.points.iter().enumerate() {
        s.push_str(&t.to_string());
        for v in &e.eigenvectors {
            s.push_str(&format!(",{}", v[i].re));
        }
        s.push('\n');
    }
    s
}

fn read_text(path: &Path) -> CliResult<String> {
    let mut s = String::new();
    open(path)?.read_to_string(&mut s).map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
    Ok(s)
}

pub fn run(args: &SlpArgs) -> CliResult<Outcome> {
    let text = read_text(&args.input)?;
    let Problem { prob, bc } = parse_problem(&text).map_err(|e| CliError::new(format!("{}: {e}", args.input.display())))?;
    let e = sturm_liouville::solve(&prob, bc.as_ref())?;
    let (v, pass) = report(&prob, &e, args.tol_scale);
    emit(args.out.as_deref(), json_text(&v).as_bytes())?;
    if let Some(path) = &args.csv {
        emit(Some(path), eigenvector_csv(&e).as_bytes())?;
    }
    if !pass {
        eprintln!("warning: residual contract exceeded; see `contracts` in the report");
    }
    Ok(Outcome::from_pass(pass))
}
