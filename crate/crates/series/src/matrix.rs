use std::fmt;

use gjms_exact::{parse_rational, ExactError, Rational, Ring};
use num_traits::{One, Zero};

/// Dense square matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Matrix {
        Matrix { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Matrix {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Matrix {
        let mut m = Matrix::zero(values.len());
        for (i, v) in values.iter().enumerate() {
            m.entries[i * values.len() + i] = v.clone();
        }
        m
    }

    /// Builds from rows; panics unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Matrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix { dim, entries: rows.into_iter().flatten().collect() }
    }

    /// Parses rows of `"p/q"` strings.
    pub fn parse_rows(rows: &[Vec<String>]) -> Result<Matrix, ExactError> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let dim = parsed.len();
        if parsed.iter().any(|r| r.len() != dim) {
            return Err(ExactError::Parse("matrix rows must form a square".into()));
        }
        Ok(Matrix::from_rows(parsed))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn pow(&self, exp: u32) -> Matrix {
        (0..exp).fold(Matrix::identity(self.dim), |acc, _| acc.times(self))
    }

    /// Power sums `tr(P), tr(P^2), ..., tr(P^count)`, indexed from 1.
    pub fn power_traces(&self, count: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); count + 1];
        let mut power = Matrix::identity(self.dim);
        for slot in out.iter_mut().skip(1) {
            power = power.times(self);
            *slot = power.trace();
        }
        out
    }

    /// Block-diagonal sum of two matrices.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let dim = self.dim + other.dim;
        let mut m = Matrix::zero(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.entries[i * dim + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                m.entries[(i + self.dim) * dim + j + self.dim] = other.get(i, j).clone();
            }
        }
        m
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim.max(1)).map(<[Rational]>::to_vec).collect()
    }
}

impl Ring for Matrix {
    fn zero_like(&self) -> Self {
        Matrix::zero(self.dim)
    }
    fn one_like(&self) -> Self {
        Matrix::identity(self.dim)
    }
    fn vanishes(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Matrix { dim: self.dim, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }
    fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Matrix { dim: self.dim, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }
    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if !b.is_zero() {
                        out.entries[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }
    fn negated(&self) -> Self {
        Matrix { dim: self.dim, entries: self.entries.iter().map(|a| -a).collect() }
    }
    fn scaled(&self, factor: &Rational) -> Self {
        Matrix { dim: self.dim, entries: self.entries.iter().map(|a| a * factor).collect() }
    }
    fn commutes_with(&self, other: &Self) -> bool {
        self.times(other) == other.times(self)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl fmt::Display for Matrix {
    /// Row-major nested brackets, `[[1, 0], [0, 1/2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
