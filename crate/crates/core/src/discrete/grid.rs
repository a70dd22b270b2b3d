use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::scalar::{max_abs, Real};

/// Integer grid `N_{a,b} = {a, a+1, ..., b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    a: i64,
    b: i64,
}

impl Grid {
    /// Any grid with `a <= b`. Operators that shrink their domain produce
    /// such grids, so the constructor only rejects reversed endpoints.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < a {
            return Err(Error::InvalidParameter(format!("grid endpoints reversed: a={a}, b={b}")));
        }
        Ok(Self { a, b })
    }

    /// A grid with `b - a >= 3`, the minimum for a nonempty interior and a
    /// nontrivial eigenproblem.
    pub fn nontrivial(a: i64, b: i64) -> Result<Self> {
        if b - a < 3 {
            return Err(Error::InvalidParameter(format!("grid N_{{{a},{b}}} needs b - a >= 3")));
        }
        Self::new(a, b)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn len(&self) -> usize {
        (self.b - self.a + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: i64) -> bool {
        self.a <= t && t <= self.b
    }

    pub fn index_of(&self, t: i64) -> Option<usize> {
        self.contains(t).then(|| (t - self.a) as usize)
    }

    pub fn points(&self) -> impl Iterator<Item = i64> {
        self.a..=self.b
    }

    /// Interior `N_{a+1,b-1}`.
    pub fn interior(&self) -> Result<Grid> {
        Grid::new(self.a + 1, self.b - 1)
    }

    /// Backward jump `ρ(s) = s - 1`.
    pub fn rho(s: i64) -> i64 {
        s - 1
    }

    /// Forward jump `σ(s) = s + 1`.
    pub fn sigma(s: i64) -> i64 {
        s + 1
    }
}

/// Real-valued function on an integer grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFn<T> {
    grid: Grid,
    values: Vec<T>,
}

impl<T: Real> GridFn<T> {
    pub fn new(grid: Grid, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Dimension(format!(
                "grid N_{{{},{}}} has {} points but {} values were given",
                grid.a,
                grid.b,
                grid.len(),
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite value at t={}", grid.a + i as i64)));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid, mut f: impl FnMut(i64) -> T) -> Self {
        Self { grid, values: grid.points().map(&mut f).collect() }
    }

    pub fn zeros(grid: Grid) -> Self {
        Self { grid, values: vec![T::zero(); grid.len()] }
    }

    /// Unit impulse at `t0`.
    pub fn impulse(grid: Grid, t0: i64) -> Self {
        Self::from_fn(grid, |t| if t == t0 { T::one() } else { T::zero() })
    }

    pub(crate) fn from_parts(grid: Grid, values: Vec<T>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self { grid, values }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn a(&self) -> i64 {
        self.grid.a
    }

    pub fn b(&self) -> i64 {
        self.grid.b
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn get(&self, t: i64) -> Option<T> {
        self.grid.index_of(t).map(|i| self.values[i])
    }

    /// Value at `t`; panics when `t` is off the grid.
    pub fn at(&self, t: i64) -> T {
        match self.get(t) {
            Some(v) => v,
            None => panic!("t={t} is outside N_{{{},{}}}", self.grid.a, self.grid.b),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, T)> + '_ {
        self.grid.points().zip(self.values.iter().copied())
    }

    /// Restriction to `N_{a,b}`, which must lie inside the current grid.
    pub fn restrict(&self, a: i64, b: i64) -> Result<Self> {
        let g = Grid::new(a, b)?;
        if !self.grid.contains(a) || !self.grid.contains(b) {
            return Err(Error::GridMismatch(format!("N_{{{a},{b}}} is not inside N_{{{},{}}}", self.grid.a, self.grid.b)));
        }
        let i0 = (a - self.grid.a) as usize;
        Ok(Self { grid: g, values: self.values[i0..i0 + g.len()].to_vec() })
    }

    pub fn map(&self, mut f: impl FnMut(i64, T) -> T) -> Self {
        Self { grid: self.grid, values: self.points().map(|(t, v)| f(t, v)).collect() }
    }

    pub fn scale(&self, c: T) -> Self {
        self.map(|_, v| c * v)
    }

    /// `c1 f + c2 g` on a shared grid.
    pub fn lincomb(c1: T, f: &Self, c2: T, g: &Self) -> Result<Self> {
        f.require_same_grid(g)?;
        Ok(Self { grid: f.grid, values: f.values.iter().zip(&g.values).map(|(&x, &y)| c1 * x + c2 * y).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::lincomb(T::one(), self, -T::one(), other)
    }

    /// Pointwise product on a shared grid.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_same_grid(other)?;
        Ok(Self { grid: self.grid, values: self.values.iter().zip(&other.values).map(|(&x, &y)| x * y).collect() })
    }

    /// `(Qf)(t) = f(a+b-t)` with `a, b` the endpoints of this function's own grid.
    pub fn q_reflect(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { grid: self.grid, values }
    }

    /// `t ↦ f(a+b-t)` for an outer interval `N_{a,b}`; the result lives on the mirrored grid.
    pub fn reflect_about(&self, a: i64, b: i64) -> Self {
        let grid = Grid { a: a + b - self.grid.b, b: a + b - self.grid.a };
        let mut values = self.values.clone();
        values.reverse();
        Self { grid, values }
    }

    pub fn max_abs(&self) -> T {
        max_abs(&self.values)
    }

    pub fn require_same_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!(
                "N_{{{},{}}} vs N_{{{},{}}}",
                self.grid.a, self.grid.b, other.grid.a, other.grid.b
            )));
        }
        Ok(())
    }

    /// Sum of `f(s)` over `s = lo..=hi`.
    pub fn sum_over(&self, lo: i64, hi: i64) -> T {
        (lo..=hi).map(|s| self.at(s)).sum()
    }

    /// CSV with header `t,value`, one row per grid point.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(["t", "value"])?;
        for (t, v) in self.points() {
            wtr.write_record([t.to_string(), format!("{:e}", v)])?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(r: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let headers = rdr.headers()?.clone();
        if headers.len() != 2 || headers.get(0) != Some("t") || headers.get(1) != Some("value") {
            return Err(Error::Parse(format!(
                "expected header `t,value`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut ts = Vec::new();
        let mut vs = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let line = i + 2;
            let t: i64 = rec[0].trim().parse().map_err(|e| Error::Parse(format!("line {line}, field t: {e}")))?;
            let v: f64 = rec[1].trim().parse().map_err(|e| Error::Parse(format!("line {line}, field value: {e}")))?;
            if let Some(&prev) = ts.last() {
                if t != prev + 1 {
                    return Err(Error::Parse(format!("line {line}: t={t} does not follow t={prev}")));
                }
            }
            ts.push(t);
            vs.push(T::lit(v));
        }
        if ts.is_empty() {
            return Err(Error::Parse("no data rows".into()));
        }
        Self::new(Grid::new(ts[0], *ts.last().unwrap())?, vs)
    }
}
