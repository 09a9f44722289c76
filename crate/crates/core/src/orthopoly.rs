//! Monic orthogonal polynomials and Jacobi coefficients from exact moments.
//!
//! For a symmetric moment functional `L` the monic sequence obeys
//! `p_{n+1} = x p_n - β_n p_{n-1}` with `β_n = L(p_n^2) / L(p_{n-1}^2)`.
//! Everything is computed in exact rational arithmetic.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{rational_string, serialize_rationals, BigRational, DensePolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    #[error("moment functional is not positive definite at order {0}")]
    NotPositiveDefinite(usize),
    #[error("need moments m_0..m_{needed}, got {got}")]
    NotEnoughMoments { needed: usize, got: usize },
    #[error("odd moment m_{0} is nonzero; only symmetric measures are supported")]
    NotSymmetric(usize),
    #[error("m_0 must equal 1, got {0}")]
    NotNormalized(String),
    #[error("Jacobi coefficients only cover order {available}, requested {requested}")]
    OrderTooHigh { available: usize, requested: usize },
}

/// Three-term recurrence coefficients. `alpha[n] = α_n` (all zero here) and
/// `beta[n - 1] = β_n` for `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiCoefficients {
    #[serde(serialize_with = "serialize_rationals")]
    pub alpha: Vec<BigRational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub beta: Vec<BigRational>,
}

impl JacobiCoefficients {
    /// Highest `n` for which `β_n` is known.
    pub fn order(&self) -> usize {
        self.beta.len()
    }

    /// `β_n`, `n >= 1`.
    pub fn beta(&self, n: usize) -> Option<&BigRational> {
        n.checked_sub(1).and_then(|i| self.beta.get(i))
    }
}

/// Applies the moment functional: `L(p) = Σ_k c_k m_k`.
///
/// Panics if `p` has higher degree than the available moments.
pub fn moment_functional(p: &DensePolynomial, moments: &[BigRational]) -> BigRational {
    assert!(p.degree().map_or(true, |d| d < moments.len()), "polynomial degree exceeds available moments");
    p.coeffs().iter().zip(moments).fold(BigRational::zero(), |acc, (c, m)| acc + c * m)
}

/// Exact `β_1, ..., β_order` from `m_0, ..., m_{2·order}` by the Stieltjes
/// procedure on the moment functional.
pub fn jacobi_from_moments(moments: &[BigRational], order: usize) -> Result<JacobiCoefficients, OrthoError> {
    let needed = 2 * order;
    if moments.len() <= needed {
        return Err(OrthoError::NotEnoughMoments { needed, got: moments.len() });
    }
    if !moments[0].is_one() {
        return Err(OrthoError::NotNormalized(rational_string(&moments[0])));
    }
    if let Some(k) = (1..=needed).step_by(2).find(|&k| !moments[k].is_zero()) {
        return Err(OrthoError::NotSymmetric(k));
    }
    let x = DensePolynomial::x();
    let mut prev = DensePolynomial::one();
    let mut cur = x.clone();
    let mut prev_norm = BigRational::one();
    let mut beta = Vec::with_capacity(order);
    for n in 1..=order {
        let norm = moment_functional(&(&cur * &cur), moments);
        if !norm.is_positive() {
            return Err(OrthoError::NotPositiveDefinite(n));
        }
        let b = &norm / &prev_norm;
        let next = &(&x * &cur) - &prev.scale(&b);
        beta.push(b);
        prev = std::mem::replace(&mut cur, next);
        prev_norm = norm;
    }
    Ok(JacobiCoefficients { alpha: vec![BigRational::zero(); order + 1], beta })
}

/// `p_0, ..., p_{n_max}` from the recurrence.
pub fn monic_orthogonal_polys(jc: &JacobiCoefficients, n_max: usize) -> Result<Vec<DensePolynomial>, OrthoError> {
    if n_max > jc.order() + 1 {
        return Err(OrthoError::OrderTooHigh { available: jc.order() + 1, requested: n_max });
    }
    let x = DensePolynomial::x();
    let mut polys = vec![DensePolynomial::one()];
    if n_max >= 1 {
        polys.push(&x - &DensePolynomial::constant(jc.alpha[0].clone()));
    }
    for n in 1..n_max {
        let shifted = &x * &polys[n];
        let centred = &shifted - &polys[n].scale(&jc.alpha[n]);
        let next = &centred - &polys[n - 1].scale(&jc.beta[n - 1]);
        polys.push(next);
    }
    Ok(polys)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingFailure {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub pairs_checked: usize,
    pub failures: Vec<PairingFailure>,
    /// `L(p_n^2)` for each polynomial.
    #[serde(serialize_with = "serialize_rationals")]
    pub norms: Vec<BigRational>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `L(p_i p_j) = 0` for every `i < j` whose product degree is
/// covered by `moments`.
pub fn verify_orthogonality(polys: &[DensePolynomial], moments: &[BigRational]) -> OrthogonalityReport {
    let deg = |p: &DensePolynomial| p.degree().unwrap_or(0);
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for (i, p) in polys.iter().enumerate() {
        for (j, q) in polys.iter().enumerate().skip(i + 1) {
            if deg(p) + deg(q) >= moments.len() {
                continue;
            }
            pairs_checked += 1;
            let v = moment_functional(&(p * q), moments);
            if !v.is_zero() {
                failures.push(PairingFailure { i, j, value: rational_string(&v) });
            }
        }
    }
    let norms =
        polys.iter().take_while(|p| 2 * deg(p) < moments.len()).map(|p| moment_functional(&(p * p), moments)).collect();
    OrthogonalityReport { pairs_checked, failures, norms }
}

/// Determinants `Δ_0, ..., Δ_{size-1}` of the leading Hankel blocks
/// `[m_{i+j}]_{0 <= i, j <= k}`, by exact Gaussian elimination.
pub fn hankel_leading_minors(moments: &[BigRational], size: usize) -> Vec<BigRational> {
    assert!(moments.len() + 1 >= 2 * size, "need moments up to m_{}", 2 * size - 2);
    let mut a: Vec<Vec<BigRational>> = (0..size).map(|i| (0..size).map(|j| moments[i + j].clone()).collect()).collect();
    // Without pivoting, the k-th pivot is Δ_k / Δ_{k-1}; a zero pivot means a
    // zero minor, after which later minors are computed by full elimination.
    let mut minors = Vec::with_capacity(size);
    let mut det = BigRational::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            minors.push(BigRational::zero());
            minors.extend((k + 1..size).map(|s| determinant(moments, s + 1)));
            return minors;
        }
        det *= &a[k][k];
        minors.push(det.clone());
        eliminate(&mut a, k);
    }
    minors
}

/// Clears column `k` below the pivot `a[k][k]`.
fn eliminate(a: &mut [Vec<BigRational>], k: usize) {
    let (top, rest) = a.split_at_mut(k + 1);
    let pivot = &top[k];
    for row in rest {
        let f = &row[k] / &pivot[k];
        for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
            *x -= &f * p;
        }
    }
}

fn determinant(moments: &[BigRational], size: usize) -> BigRational {
    let mut a: Vec<Vec<BigRational>> = (0..size).map(|i| (0..size).map(|j| moments[i + j].clone()).collect()).collect();
    let mut det = BigRational::one();
    for k in 0..size {
        let Some(p) = (k..size).find(|&r| !a[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        eliminate(&mut a, k);
    }
    det
}
