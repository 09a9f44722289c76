//! Even moments `d_n^(m) = ω(S_m^{2n})` of the `m`-fold monotone convolution
//! power of the standard semicircle law, their polynomial dependence on `m`,
//! and the monotone cumulants read off from those polynomials.
//!
//! The table is filled by
//!
//! ```text
//! d_n^(m) = Σ_{k=1}^{n} d_{n-k}^(m) · Σ_{j=1}^{m} d_{k-1}^(j),   d_0^(j) = 1,  d_n^(1) = C_n
//! ```
//!
//! keeping a running prefix sum over `j` so each row costs `O(n^2)` big
//! multiplications.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{serialize_rational, AlgebraError, BigRational, DensePolynomial};
use crate::partitions::catalan;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MomentsError {
    #[error("the convolution power m must be at least 1")]
    ZeroPower,
    #[error("moment polynomial for n = {n} fails to reproduce d_n^({m})")]
    InconsistentInterpolant { n: usize, m: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Memoized triangle of `d_n^(j)` for `1 <= j <= m`, `0 <= n <= n_max`.
#[derive(Debug, Clone, Default)]
pub struct MomentTable {
    /// rows[j - 1][n] = d_n^(j)
    rows: Vec<Vec<BigUint>>,
    /// prefix[j - 1][n] = Σ_{i <= j} d_n^(i)
    prefix: Vec<Vec<BigUint>>,
    n_max: usize,
}

impl MomentTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table covering `m <= m_max`, `n <= n_max`.
    pub fn with_size(m_max: usize, n_max: usize) -> Self {
        let mut t = Self::new();
        t.ensure(m_max, n_max);
        t
    }

    pub fn m_max(&self) -> usize {
        self.rows.len()
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Grows the table to cover `(m, n)`.
    pub fn ensure(&mut self, m: usize, n: usize) {
        if n > self.n_max || self.rows.is_empty() {
            // Extending n invalidates nothing but every row must be longer;
            // rebuild from scratch since rows depend on all lower rows.
            let m_keep = self.rows.len().max(m);
            self.rows.clear();
            self.prefix.clear();
            self.n_max = n.max(self.n_max);
            for _ in 0..m_keep {
                self.push_row();
            }
        }
        while self.rows.len() < m {
            self.push_row();
        }
    }

    fn push_row(&mut self) {
        let n_max = self.n_max;
        let row: Vec<BigUint> = if self.rows.is_empty() {
            (0..=n_max).map(catalan).collect()
        } else {
            let mut row = Vec::with_capacity(n_max + 1);
            row.push(BigUint::one());
            for n in 1..=n_max {
                let mut acc = BigUint::zero();
                for k in 1..=n {
                    // The inner sum includes the current row j = m, whose
                    // entry at k - 1 < n is already known.
                    let inner = self.prefix.last().map_or_else(BigUint::zero, |p| p[k - 1].clone()) + &row[k - 1];
                    acc += &row[n - k] * inner;
                }
                row.push(acc);
            }
            row
        };
        let prefix: Vec<BigUint> = match self.prefix.last() {
            Some(prev) => prev.iter().zip(&row).map(|(a, b)| a + b).collect(),
            None => row.clone(),
        };
        self.rows.push(row);
        self.prefix.push(prefix);
    }

    /// `d_n^(m)`; `m = 0` gives the convention `d_0^(0) = 1`, `d_n^(0) = 0`.
    pub fn get(&mut self, m: usize, n: usize) -> BigUint {
        if m == 0 {
            return if n == 0 { BigUint::one() } else { BigUint::zero() };
        }
        self.ensure(m, n);
        self.rows[m - 1][n].clone()
    }

    /// `d_0^(m), ..., d_{n_max}^(m)`.
    pub fn row(&mut self, m: usize, n_max: usize) -> Vec<BigUint> {
        self.ensure(m.max(1), n_max);
        if m == 0 {
            return (0..=n_max).map(|n| self.get(0, n)).collect();
        }
        self.rows[m - 1][..=n_max].to_vec()
    }

    /// Full moment sequence `μ_0, μ_1, ..., μ_{k_max}` of `ν_m` with the odd
    /// moments set to zero, as exact rationals.
    pub fn raw_moments(&mut self, m: usize, k_max: usize) -> Vec<BigRational> {
        let row = self.row(m, k_max / 2);
        (0..=k_max)
            .map(|k| {
                if k % 2 == 1 {
                    BigRational::zero()
                } else {
                    BigRational::from_integer(BigInt::from(row[k / 2].clone()))
                }
            })
            .collect()
    }
}

/// `d_0, ..., d_{n_max}` for `m = 2` from the two-operator recurrence
/// `d_n = Σ_{k=1}^{n} d_{n-k} (d_{k-1} + C_{k-1})`.
pub fn moments_m2(n_max: usize) -> Vec<BigUint> {
    let cat: Vec<BigUint> = (0..=n_max).map(catalan).collect();
    let mut d = vec![BigUint::one()];
    for n in 1..=n_max {
        let mut acc = BigUint::zero();
        for k in 1..=n {
            acc += &d[n - k] * (&d[k - 1] + &cat[k - 1]);
        }
        d.push(acc);
    }
    d
}

/// `d_0^(m), ..., d_{n_max}^(m)` from the general recurrence.
pub fn moments_general(m: usize, n_max: usize) -> Result<Vec<BigUint>, MomentsError> {
    if m == 0 {
        return Err(MomentsError::ZeroPower);
    }
    Ok(MomentTable::with_size(m, n_max).row(m, n_max))
}

/// `d_n^(m)` as an exact polynomial in `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialInM {
    pub n: usize,
    #[serde(rename = "coefficients")]
    pub poly: DensePolynomial,
}

impl PolynomialInM {
    pub fn eval(&self, m: usize) -> BigRational {
        self.poly.eval(&BigRational::from_integer(BigInt::from(m)))
    }

    /// Coefficient of `m^1`.
    pub fn linear_coefficient(&self) -> BigRational {
        self.poly.coeff(1)
    }
}

/// Interpolates `d_n^(m)` at `m = 0, 1, ..., n` (with `d_n^(0) = 0` for
/// `n >= 1`) and confirms the result at `m = n + 1, n + 2`.
pub fn moment_polynomial(n: usize) -> Result<PolynomialInM, MomentsError> {
    let mut table = MomentTable::with_size(n + 2, n);
    moment_polynomial_with(&mut table, n)
}

pub fn moment_polynomial_with(table: &mut MomentTable, n: usize) -> Result<PolynomialInM, MomentsError> {
    if n == 0 {
        return Ok(PolynomialInM { n, poly: DensePolynomial::one() });
    }
    let as_rat = |v: BigUint| BigRational::from_integer(BigInt::from(v));
    let points: Vec<(BigRational, BigRational)> =
        (0..=n).map(|m| (BigRational::from_integer(BigInt::from(m)), as_rat(table.get(m, n)))).collect();
    let poly = PolynomialInM { n, poly: DensePolynomial::interpolate(&points)? };
    for m in [n + 1, n + 2] {
        if poly.eval(m) != as_rat(table.get(m, n)) {
            return Err(MomentsError::InconsistentInterpolant { n, m });
        }
    }
    Ok(poly)
}

/// Monotone cumulants `r_1, ..., r_{k_max}` of the standard semicircle law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantSequence {
    /// values[k - 1] = r_k
    values: Vec<BigRational>,
}

impl CumulantSequence {
    /// `r_k` for `1 <= k <= len`.
    pub fn get(&self, k: usize) -> Option<&BigRational> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn entries(&self) -> impl Iterator<Item = CumulantEntry> + '_ {
        self.values.iter().enumerate().map(|(i, r)| CumulantEntry { k: i + 1, value: r.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CumulantEntry {
    pub k: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub value: BigRational,
}

/// `r_{2n}` is the coefficient of `m` in `d_n^(m)`; odd cumulants vanish.
pub fn monotone_cumulants(k_max: usize) -> Result<CumulantSequence, MomentsError> {
    let n_top = k_max / 2;
    let mut table = MomentTable::with_size(n_top + 2, n_top);
    let mut values = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        if k % 2 == 1 {
            values.push(BigRational::zero());
        } else {
            values.push(moment_polynomial_with(&mut table, k / 2)?.linear_coefficient());
        }
    }
    Ok(CumulantSequence { values })
}
