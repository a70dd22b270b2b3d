use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::scalar::{max_abs, CompensatedSum, Real};

/// `n_points` equally spaced nodes on `[a, b]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UniformMesh<T> {
    a: T,
    b: T,
    n_points: usize,
    h: T,
}

impl<T: Real> UniformMesh<T> {
    pub fn new(a: T, b: T, n_points: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::InvalidParameter(format!("mesh needs finite a < b, got [{a}, {b}]")));
        }
        if n_points < 3 {
            return Err(Error::InvalidParameter(format!("mesh needs at least 3 points, got {n_points}")));
        }
        let h = (b - a) / T::from_index(n_points - 1);
        Ok(Self { a, b, n_points, h })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Number of intervals, `n_points - 1`.
    pub fn intervals(&self) -> usize {
        self.n_points - 1
    }

    pub fn h(&self) -> T {
        self.h
    }

    /// The `i`-th node; the last one is exactly `b`.
    pub fn point(&self, i: usize) -> T {
        if i + 1 == self.n_points {
            self.b
        } else {
            self.a + T::from_index(i) * self.h
        }
    }

    pub fn points(&self) -> Vec<T> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }
}

/// Values on a mesh, optionally with the analytic derivative.
#[derive(Clone, Debug, PartialEq)]
pub struct MeshFn<T> {
    mesh: UniformMesh<T>,
    values: Vec<T>,
    derivative: Option<Vec<T>>,
}

fn check_values<T: Real>(mesh: &UniformMesh<T>, v: &[T], what: &str) -> Result<()> {
    if v.len() != mesh.n_points {
        return Err(Error::Dimension(format!("{what}: {} values for {} mesh points", v.len(), mesh.n_points)));
    }
    if let Some(i) = v.iter().position(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter(format!("{what}: non-finite value at node {i}")));
    }
    Ok(())
}

impl<T: Real> MeshFn<T> {
    pub fn new(mesh: UniformMesh<T>, values: Vec<T>) -> Result<Self> {
        check_values(&mesh, &values, "values")?;
        Ok(Self { mesh, values, derivative: None })
    }

    pub fn with_derivative(mesh: UniformMesh<T>, values: Vec<T>, derivative: Vec<T>) -> Result<Self> {
        check_values(&mesh, &values, "values")?;
        check_values(&mesh, &derivative, "derivative")?;
        Ok(Self { mesh, values, derivative: Some(derivative) })
    }

    pub fn from_fn(mesh: UniformMesh<T>, f: impl Fn(T) -> T) -> Self {
        let values = mesh.points().into_iter().map(f).collect();
        Self { mesh, values, derivative: None }
    }

    pub fn from_fn_with_derivative(mesh: UniformMesh<T>, f: impl Fn(T) -> T, df: impl Fn(T) -> T) -> Self {
        let pts = mesh.points();
        let values = pts.iter().map(|&t| f(t)).collect();
        let derivative = Some(pts.iter().map(|&t| df(t)).collect());
        Self { mesh, values, derivative }
    }

    pub(crate) fn from_parts(mesh: UniformMesh<T>, values: Vec<T>) -> Self {
        debug_assert_eq!(values.len(), mesh.n_points);
        Self { mesh, values, derivative: None }
    }

    pub fn mesh(&self) -> &UniformMesh<T> {
        &self.mesh
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn derivative(&self) -> Option<&[T]> {
        self.derivative.as_deref()
    }

    pub fn at(&self, i: usize) -> T {
        self.values[i]
    }

    pub fn first(&self) -> T {
        self.values[0]
    }

    pub fn last(&self) -> T {
        self.values[self.values.len() - 1]
    }

    /// The analytic derivative if present, else 4th-order differences; the
    /// flag is `true` in the second case.
    pub fn derivative_or_differenced(&self) -> Result<(Vec<T>, bool)> {
        match &self.derivative {
            Some(d) => Ok((d.clone(), false)),
            None => Ok((differentiate(&self.values, self.mesh.h)?, true)),
        }
    }

    /// `(Qf)(t) = f(a+b-t)`: values reversed, derivative reversed and negated.
    pub fn q_reflect(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        let derivative = self.derivative.as_ref().map(|d| d.iter().rev().map(|&x| -x).collect());
        Self { mesh: self.mesh, values, derivative }
    }

    /// Pointwise map; any analytic derivative is dropped.
    pub fn map(&self, mut f: impl FnMut(T, T) -> T) -> Self {
        let values = self.mesh.points().into_iter().zip(&self.values).map(|(t, &v)| f(t, v)).collect();
        Self { mesh: self.mesh, values, derivative: None }
    }

    pub fn scale(&self, c: T) -> Self {
        let values = self.values.iter().map(|&v| c * v).collect();
        let derivative = self.derivative.as_ref().map(|d| d.iter().map(|&v| c * v).collect());
        Self { mesh: self.mesh, values, derivative }
    }

    pub fn require_same_mesh(&self, other: &Self) -> Result<()> {
        if self.mesh != other.mesh {
            return Err(Error::GridMismatch("operands live on different meshes".into()));
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.require_same_mesh(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&x, &y)| x - y).collect();
        Ok(Self::from_parts(self.mesh, values))
    }

    /// Pointwise product; the derivative follows the product rule when both are known.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_same_mesh(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&x, &y)| x * y).collect();
        let derivative = match (&self.derivative, &other.derivative) {
            (Some(df), Some(dg)) => {
                Some((0..self.values.len()).map(|i| df[i] * other.values[i] + self.values[i] * dg[i]).collect())
            }
            _ => None,
        };
        Ok(Self { mesh: self.mesh, values, derivative })
    }

    pub fn max_abs(&self) -> T {
        max_abs(&self.values)
    }

    /// CSV `t,value` or `t,value,dvalue` when the derivative is known.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        match &self.derivative {
            Some(d) => {
                wtr.write_record(["t", "value", "dvalue"])?;
                for (i, t) in self.mesh.points().into_iter().enumerate() {
                    wtr.write_record([format!("{:e}", t), format!("{:e}", self.values[i]), format!("{:e}", d[i])])?;
                }
            }
            None => {
                wtr.write_record(["t", "value"])?;
                for (i, t) in self.mesh.points().into_iter().enumerate() {
                    wtr.write_record([format!("{:e}", t), format!("{:e}", self.values[i])])?;
                }
            }
        }
        wtr.flush()?;
        Ok(())
    }

    /// Reads `t,value[,dvalue]`; the `t` column must be uniformly spaced.
    pub fn read_csv<R: Read>(r: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let headers = rdr.headers()?.clone();
        let cols: Vec<&str> = headers.iter().collect();
        let with_d = match cols.as_slice() {
            ["t", "value"] => false,
            ["t", "value", "dvalue"] => true,
            _ => return Err(Error::Parse(format!("expected header `t,value[,dvalue]`, found `{}`", cols.join(",")))),
        };
        let (mut ts, mut vs, mut ds) = (Vec::new(), Vec::new(), Vec::new());
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let line = i + 2;
            let field = |k: usize, name: &str| -> Result<f64> {
                rec[k].trim().parse::<f64>().map_err(|e| Error::Parse(format!("line {line}, field {name}: {e}")))
            };
            ts.push(field(0, "t")?);
            vs.push(T::lit(field(1, "value")?));
            if with_d {
                ds.push(T::lit(field(2, "dvalue")?));
            }
        }
        if ts.len() < 3 {
            return Err(Error::Parse(format!("need at least 3 rows, found {}", ts.len())));
        }
        let n = ts.len();
        let h = (ts[n - 1] - ts[0]) / (n - 1) as f64;
        for (i, &t) in ts.iter().enumerate() {
            let want = ts[0] + i as f64 * h;
            if (t - want).abs() > 1e-9 * h.abs().max(want.abs() * 1e-6) {
                return Err(Error::Parse(format!("line {}: t={t} breaks uniform spacing (expected {want})", i + 2)));
            }
        }
        let mesh = UniformMesh::new(T::lit(ts[0]), T::lit(ts[n - 1]), n)?;
        if with_d {
            Self::with_derivative(mesh, vs, ds)
        } else {
            Self::new(mesh, vs)
        }
    }
}

/// Derivative by 4th-order central differences, one-sided 4th-order
/// stencils at the two nodes nearest each end.
pub fn differentiate<T: Real>(v: &[T], h: T) -> Result<Vec<T>> {
    let n = v.len();
    if n < 5 {
        return Err(Error::Dimension(format!("differentiation needs at least 5 nodes, got {n}")));
    }
    let l = T::lit;
    let d12 = l(12.0) * h;
    let mut out = vec![T::zero(); n];
    out[0] = (l(-25.0) * v[0] + l(48.0) * v[1] - l(36.0) * v[2] + l(16.0) * v[3] - l(3.0) * v[4]) / d12;
    out[1] = (l(-3.0) * v[0] - l(10.0) * v[1] + l(18.0) * v[2] - l(6.0) * v[3] + v[4]) / d12;
    for i in 2..n - 2 {
        out[i] = (v[i - 2] - l(8.0) * v[i - 1] + l(8.0) * v[i + 1] - v[i + 2]) / d12;
    }
    out[n - 2] = (l(3.0) * v[n - 1] + l(10.0) * v[n - 2] - l(18.0) * v[n - 3] + l(6.0) * v[n - 4] - v[n - 5]) / d12;
    out[n - 1] = (l(25.0) * v[n - 1] - l(48.0) * v[n - 2] + l(36.0) * v[n - 3] - l(16.0) * v[n - 4] + l(3.0) * v[n - 5]) / d12;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum QuadratureKind {
    #[default]
    Trapezoid,
    Simpson,
}

/// Composite rule over all mesh intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct QuadratureRule {
    pub kind: QuadratureKind,
}

impl QuadratureRule {
    pub fn trapezoid() -> Self {
        Self { kind: QuadratureKind::Trapezoid }
    }

    pub fn simpson() -> Self {
        Self { kind: QuadratureKind::Simpson }
    }

    pub fn weights<T: Real>(&self, mesh: &UniformMesh<T>) -> Result<Vec<T>> {
        let n = mesh.n_points();
        let h = mesh.h();
        match self.kind {
            QuadratureKind::Trapezoid => {
                let mut w = vec![h; n];
                w[0] = h / T::lit(2.0);
                w[n - 1] = h / T::lit(2.0);
                Ok(w)
            }
            QuadratureKind::Simpson => {
                if mesh.intervals() % 2 != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "Simpson's rule needs an even interval count, mesh has {}",
                        mesh.intervals()
                    )));
                }
                let third = h / T::lit(3.0);
                let w = (0..n)
                    .map(|i| {
                        if i == 0 || i == n - 1 {
                            third
                        } else if i % 2 == 1 {
                            T::lit(4.0) * third
                        } else {
                            T::lit(2.0) * third
                        }
                    })
                    .collect();
                Ok(w)
            }
        }
    }

    pub fn integrate_values<T: Real>(&self, mesh: &UniformMesh<T>, v: &[T]) -> Result<T> {
        let w = self.weights(mesh)?;
        if v.len() != w.len() {
            return Err(Error::Dimension(format!("{} values for {} mesh points", v.len(), w.len())));
        }
        let mut acc = CompensatedSum::new();
        for (x, y) in w.iter().zip(v) {
            acc.add(*x * *y);
        }
        Ok(acc.value())
    }

    pub fn integrate<T: Real>(&self, f: &MeshFn<T>) -> Result<T> {
        self.integrate_values(f.mesh(), f.values())
    }

    /// `∫ f g`.
    pub fn inner<T: Real>(&self, f: &MeshFn<T>, g: &MeshFn<T>) -> Result<T> {
        f.require_same_mesh(g)?;
        let prod: Vec<T> = f.values().iter().zip(g.values()).map(|(&x, &y)| x * y).collect();
        self.integrate_values(f.mesh(), &prod)
    }
}
