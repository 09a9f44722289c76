//! Right endpoints a_m of supp ν_m = [−a_m, a_m].
//!
//! a_1 = 2 and a_{m+1} = a_m + 1/a_m. Writing a_m = p/q in lowest terms,
//! a_{m+1} = (p² + q²)/(pq) is again in lowest terms, so the number of digits
//! doubles at every step and exact values stop being practical past a few
//! dozen steps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::TransformError;
use crate::algebra::{int, rational_string, rational_to_f64};

/// Largest m for which [`support_endpoint`] computes a_m exactly. a_20 already
/// has about 10⁵ digits in numerator and denominator.
pub const MAX_EXACT_ENDPOINT: usize = 20;

/// Exact endpoints a_1, ..., a_m.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportEndpoints {
    a: Vec<BigRational>,
}

impl SupportEndpoints {
    pub fn new(m_max: usize) -> Result<Self, TransformError> {
        if m_max == 0 {
            return Err(TransformError::ZeroPower);
        }
        if m_max > MAX_EXACT_ENDPOINT {
            return Err(TransformError::EndpointTooLarge { m: m_max, limit: MAX_EXACT_ENDPOINT });
        }
        let mut a = Vec::with_capacity(m_max);
        a.push(int(2));
        while a.len() < m_max {
            let (p, q) = a.last().unwrap().clone().into();
            // Already in lowest terms, skip the gcd.
            a.push(BigRational::new_raw(&p * &p + &q * &q, p * q));
        }
        Ok(Self { a })
    }

    /// a_m for 1 ≤ m ≤ len.
    pub fn get(&self, m: usize) -> Option<&BigRational> {
        m.checked_sub(1).and_then(|i| self.a.get(i))
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.a
    }
}

/// Exact a_m.
pub fn support_endpoint(m: usize) -> Result<BigRational, TransformError> {
    Ok(SupportEndpoints::new(m)?.a.pop().expect("m >= 1"))
}

/// a_m by iterating the recurrence in double precision.
pub fn endpoint_f64(m: usize) -> f64 {
    let mut a = 2.0f64;
    for _ in 1..m {
        a += 1.0 / a;
    }
    a
}

#[derive(Debug, Clone, Serialize)]
pub struct EndpointRow {
    pub m: usize,
    /// Present when a_m was computed exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub approx: f64,
    /// √(m+√(m(m+1))) ≤ a_m; only asserted for m ≥ 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<bool>,
    /// a_m ≤ √(2m+√(2m)); only asserted for m ≥ 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<bool>,
    /// a_{m+1}/a_m ≤ √((m+1)/m).
    pub ratio_bound: bool,
    /// a_{m+1} > a_m.
    pub increasing: bool,
    /// a_{m+1}/√(m+1) < a_m/√m.
    pub scaled_decreasing: bool,
    pub scaled: f64,
    /// Whether the inequalities were decided in exact arithmetic.
    pub exact_checks: bool,
}

impl EndpointRow {
    pub fn passed(&self) -> bool {
        self.lower_bound.unwrap_or(true)
            && self.upper_bound.unwrap_or(true)
            && self.ratio_bound
            && self.increasing
            && self.scaled_decreasing
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EndpointBoundsReport {
    pub rows: Vec<EndpointRow>,
    /// a_{m_max}/√m_max − √2.
    pub limit_gap: f64,
}

impl EndpointBoundsReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(EndpointRow::passed) && self.limit_gap > 0.0
    }
}

fn r(k: usize) -> BigInt {
    BigInt::from(k)
}

/// Lower and upper bounds of a_m = p/q, m ≥ 3, squared out so that only
/// integer comparisons remain.
fn exact_bounds(p2: &BigInt, q2: &BigInt, m: usize) -> (bool, bool) {
    let q4 = q2 * q2;
    let lower = {
        let t = p2 - r(m) * q2;
        !t.is_negative() && r(m * (m + 1)) * &q4 <= &t * &t
    };
    let upper = {
        let t = p2 - r(2 * m) * q2;
        !t.is_positive() || &t * &t <= r(2 * m) * &q4
    };
    (lower, upper)
}

fn float_bounds(a: f64, m: usize) -> (bool, bool) {
    let m = m as f64;
    let lower = (m + (m * (m + 1.0)).sqrt()).sqrt() <= a;
    let upper = a <= (2.0 * m + (2.0 * m).sqrt()).sqrt();
    (lower, upper)
}

/// Checks the endpoint inequalities for 1 ≤ m ≤ m_max. Exact arithmetic is
/// used while m + 1 ≤ [`MAX_EXACT_ENDPOINT`], floating point afterwards.
pub fn endpoint_bounds_check(m_max: usize) -> Result<EndpointBoundsReport, TransformError> {
    if m_max == 0 {
        return Err(TransformError::ZeroPower);
    }
    let exact_len = (m_max + 1).min(MAX_EXACT_ENDPOINT);
    let exact = SupportEndpoints::new(exact_len)?;
    let mut approx = Vec::with_capacity(m_max + 1);
    for m in 1..=m_max + 1 {
        approx.push(match exact.get(m) {
            Some(a) => rational_to_f64(a),
            None => approx.last().map_or(2.0, |&a: &f64| a + 1.0 / a),
        });
    }

    let mut rows = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let (a, b) = (approx[m - 1], approx[m]);
        let row = match (exact.get(m), exact.get(m + 1)) {
            (Some(am), Some(an)) => {
                let (p, q) = (am.numer(), am.denom());
                let (pn, qn) = (an.numer(), an.denom());
                let (p2, q2) = (p * p, q * q);
                let (lower, upper) = exact_bounds(&p2, &q2, m);
                // m·a_{m+1}² ≤ (m+1)·a_m², strict for the scaled sequence.
                let lhs = r(m) * pn * pn * &q2;
                let rhs = r(m + 1) * &p2 * qn * qn;
                EndpointRow {
                    m,
                    exact: Some(rational_string(am)),
                    approx: a,
                    lower_bound: (m >= 3).then_some(lower),
                    upper_bound: (m >= 3).then_some(upper),
                    ratio_bound: lhs <= rhs,
                    increasing: pn * q > p * qn,
                    scaled_decreasing: lhs < rhs,
                    scaled: a / (m as f64).sqrt(),
                    exact_checks: true,
                }
            }
            _ => {
                let (lower, upper) = float_bounds(a, m);
                let (mf, nf) = (m as f64, (m + 1) as f64);
                EndpointRow {
                    m,
                    exact: None,
                    approx: a,
                    lower_bound: (m >= 3).then_some(lower),
                    upper_bound: (m >= 3).then_some(upper),
                    ratio_bound: b / a <= (nf / mf).sqrt(),
                    increasing: b > a,
                    scaled_decreasing: b / nf.sqrt() < a / mf.sqrt(),
                    scaled: a / mf.sqrt(),
                    exact_checks: false,
                }
            }
        };
        rows.push(row);
    }
    let limit_gap = rows.last().map_or(f64::NAN, |row| row.scaled - 2f64.sqrt());
    Ok(EndpointBoundsReport { rows, limit_gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn first_endpoints() {
        assert_eq!(support_endpoint(1).unwrap(), ratio(2, 1));
        assert_eq!(support_endpoint(2).unwrap(), ratio(5, 2));
        assert_eq!(support_endpoint(3).unwrap(), ratio(29, 10));
        assert_eq!(support_endpoint(4).unwrap(), ratio(941, 290));
        assert!(support_endpoint(0).is_err());
        assert!(matches!(support_endpoint(MAX_EXACT_ENDPOINT + 1), Err(TransformError::EndpointTooLarge { .. })));
    }

    #[test]
    fn exact_endpoints_increase() {
        let e = SupportEndpoints::new(12).unwrap();
        assert!(e.as_slice().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(e.get(0), None);
        assert_eq!(e.get(13), None);
    }

    #[test]
    fn float_and_exact_agree() {
        let e = SupportEndpoints::new(15).unwrap();
        for m in 1..=15 {
            let exact = rational_to_f64(e.get(m).unwrap());
            assert!((exact - endpoint_f64(m)).abs() < 1e-13);
        }
    }

    #[test]
    fn bounds_for_small_m() {
        let report = endpoint_bounds_check(3).unwrap();
        assert!(report.all_passed());
        let exact: Vec<_> = report.rows.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exact, ["2", "5/2", "29/10"]);
        assert_eq!(report.rows[0].lower_bound, None);
        assert_eq!(report.rows[2].lower_bound, Some(true));
    }

    #[test]
    fn scaled_endpoint_at_one_thousand() {
        let s = endpoint_f64(1000) / 1000f64.sqrt();
        assert!(s > 2f64.sqrt() && s < 2f64.sqrt() + 0.03, "{s}");
    }

    #[test]
    fn bounds_switch_to_floating_point() {
        let report = endpoint_bounds_check(200).unwrap();
        assert!(report.all_passed());
        assert!(report.rows[MAX_EXACT_ENDPOINT - 2].exact_checks);
        assert!(!report.rows[MAX_EXACT_ENDPOINT - 1].exact_checks);
    }
}
