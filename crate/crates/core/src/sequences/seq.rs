use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::scalar::rat_to_int;
use crate::exact_arith::{Int, IntPoly, Poly, Rat, Scalar};

/// A finite prefix `z_offset, z_offset+1, ...` of an exact sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Seq<T: Scalar = Int> {
    values: Vec<T>,
    offset: usize,
    name: Option<String>,
}

impl<T: Scalar> Seq<T> {
    pub fn new(values: Vec<T>) -> Self {
        Seq {
            values,
            offset: 0,
            name: None,
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| T::from_i64(v)).collect())
    }

    pub fn with_offset(mut self, offset: usize) -> Self {
        self.offset = offset;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest index held.
    pub fn last_index(&self) -> Option<usize> {
        self.values.len().checked_sub(1).map(|i| i + self.offset)
    }

    /// Term at absolute index `n`.
    pub fn at(&self, n: usize) -> Option<&T> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i))
    }

    /// The view `z_from, z_from+1, ...`, keeping absolute indices.
    pub fn tail(&self, from: usize) -> Result<Self> {
        if from < self.offset || from - self.offset > self.values.len() {
            return Err(Error::RangeError(format!(
                "cannot start at {from}: sequence holds indices {}..{}",
                self.offset,
                self.offset + self.values.len()
            )));
        }
        Ok(Seq {
            values: self.values[from - self.offset..].to_vec(),
            offset: from,
            name: self.name.clone(),
        })
    }

    /// First `len` terms.
    pub fn truncate(mut self, len: usize) -> Self {
        self.values.truncate(len);
        self
    }

    pub fn to_rat(&self) -> Seq<Rat> {
        Seq {
            values: self.values.iter().map(|v| v.to_rat()).collect(),
            offset: self.offset,
            name: self.name.clone(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Seq<U> {
        Seq {
            values: self.values.iter().map(f).collect(),
            offset: self.offset,
            name: self.name.clone(),
        }
    }
}

impl Seq<Rat> {
    /// Integer view when every term is integral.
    pub fn to_int(&self) -> Option<Seq<Int>> {
        let values = self
            .values
            .iter()
            .map(rat_to_int)
            .collect::<Option<Vec<_>>>()?;
        Some(Seq {
            values,
            offset: self.offset,
            name: self.name.clone(),
        })
    }
}

impl<T: Scalar> fmt::Display for Seq<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Lower-triangular array `a(n, k)`, `0 <= k <= n`, zero elsewhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangle {
    rows: Vec<Vec<Int>>,
    name: Option<String>,
}

impl Triangle {
    /// Panics unless row `n` has exactly `n + 1` entries.
    pub fn new(rows: Vec<Vec<Int>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Triangle { rows, name: None }
    }

    pub fn from_fn(n_max: usize, f: impl Fn(usize, usize) -> Int) -> Self {
        Self::new((0..=n_max).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Number of rows held.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[Int] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// `a(n, k)` with the zero convention outside the triangle and beyond the
    /// stored rows' columns. Panics if row `n` is not stored.
    pub fn get(&self, n: i64, k: i64) -> Int {
        if n < 0 || k < 0 || k > n {
            return Int::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn set(&mut self, n: usize, k: usize, value: Int) {
        self.rows[n][k] = value;
    }

    /// Row generating polynomial `sum_k a(n, k) q^k`.
    pub fn row_poly(&self, n: usize) -> IntPoly {
        Poly::new(self.rows[n].clone())
    }

    pub fn row_polys(&self) -> Vec<IntPoly> {
        (0..self.rows.len()).map(|n| self.row_poly(n)).collect()
    }

    pub fn row_sums(&self) -> Seq<Int> {
        Seq::new(
            self.rows
                .iter()
                .map(|r| r.iter().fold(Int::zero(), |acc, v| acc + v))
                .collect(),
        )
    }
}
