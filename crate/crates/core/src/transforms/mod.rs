//! Cauchy and reciprocal Cauchy transforms of the monotone convolution
//! powers ν_m of the standard semicircle law, their real-axis densities and
//! support endpoints.
//!
//! The reciprocal transform of ν_m is the m-fold composition of
//! F_1(z) = (z + √(z−2)·√(z+2))/2 and the Cauchy transform is its inverse
//! G_m = 1/F_m. The square roots are principal.

mod density;
mod identities;
pub mod quadrature;
mod support;

pub use density::{
    density_curve, density_m2_closed, density_numeric, moment_quadrature, moment_quadrature_of, semicircle_density,
    DensityCurve, DensityEstimate, DensitySample, YLadder, DEFAULT_LADDER_TOLERANCE,
};
pub use identities::{m2_generating_identities_check, transform_identities_check};
pub use support::{
    endpoint_bounds_check, endpoint_f64, support_endpoint, EndpointBoundsReport, EndpointRow, SupportEndpoints,
    MAX_EXACT_ENDPOINT,
};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// A point of the complex plane in double precision.
pub type ComplexPoint = Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("{z} lies on the cut [-2, 2]; evaluate density through Stieltjes limits instead")]
    OnCut { z: ComplexPoint },
    #[error("{z} is in the lower half-plane")]
    LowerHalfPlane { z: ComplexPoint },
    #[error("composition left the domain of F_1 at stage {stage} (value {value})")]
    DomainExit { stage: usize, value: ComplexPoint },
    #[error("convolution power must be at least 1")]
    ZeroPower,
    #[error("Zhukovsky map is undefined at 0")]
    ZeroArgument,
    #[error("y-ladder must be a strictly decreasing list of at least two positive reals")]
    BadLadder,
    #[error("moment order {0} must be even and at most 8")]
    BadMomentOrder(usize),
    #[error("quadrature residual {achieved:e} above tolerance {tolerance:e}")]
    Quadrature { achieved: f64, tolerance: f64 },
    #[error("exact endpoints are limited to m <= {limit}, asked for {m}")]
    EndpointTooLarge { m: usize, limit: usize },
    #[error("invalid sampling grid")]
    BadGrid,
}

fn validate(z: ComplexPoint) -> Result<ComplexPoint, TransformError> {
    if z.re.is_nan() || z.im.is_nan() {
        return Err(TransformError::DomainExit { stage: 0, value: z });
    }
    if z.im < 0.0 {
        return Err(TransformError::LowerHalfPlane { z });
    }
    if z.im == 0.0 && z.re.abs() < 2.0 {
        return Err(TransformError::OnCut { z });
    }
    // -0.0 would flip the principal square root to the other sheet.
    Ok(ComplexPoint::new(z.re, z.im.abs()))
}

/// √(z−2)·√(z+2), the branch of √(z²−4) that behaves like z at infinity.
fn branch_sqrt(z: ComplexPoint) -> ComplexPoint {
    (z - 2.0).sqrt() * (z + 2.0).sqrt()
}

fn f1_unchecked(z: ComplexPoint) -> ComplexPoint {
    (z + branch_sqrt(z)) * 0.5
}

/// Cauchy transform of the standard semicircle law.
pub fn g1(z: ComplexPoint) -> Result<ComplexPoint, TransformError> {
    let z = validate(z)?;
    Ok(2.0 / (z + branch_sqrt(z)))
}

/// Reciprocal Cauchy transform of the standard semicircle law.
pub fn f1(z: ComplexPoint) -> Result<ComplexPoint, TransformError> {
    Ok(f1_unchecked(validate(z)?))
}

/// The chain F_1(z), F_2(z), ..., F_m(z).
pub fn fm_chain(z: ComplexPoint, m: usize) -> Result<Vec<ComplexPoint>, TransformError> {
    if m == 0 {
        return Err(TransformError::ZeroPower);
    }
    let mut w = validate(z)?;
    let mut chain = Vec::with_capacity(m);
    for stage in 1..=m {
        if stage > 1 {
            w = validate(w).map_err(|_| TransformError::DomainExit { stage, value: w })?;
        }
        w = f1_unchecked(w);
        chain.push(w);
    }
    Ok(chain)
}

/// F_m = F_1 ∘ ... ∘ F_1 (m times), the reciprocal Cauchy transform of ν_m.
pub fn fm(z: ComplexPoint, m: usize) -> Result<ComplexPoint, TransformError> {
    Ok(*fm_chain(z, m)?.last().expect("m >= 1"))
}

/// G_m = 1/F_m, the Cauchy transform of ν_m.
pub fn gm(z: ComplexPoint, m: usize) -> Result<ComplexPoint, TransformError> {
    Ok(fm(z, m)?.inv())
}

/// K_m(z) = G_1(z) + ... + G_m(z); K_0 = 0.
pub fn k_sum(z: ComplexPoint, m: usize) -> Result<ComplexPoint, TransformError> {
    if m == 0 {
        validate(z)?;
        return Ok(ComplexPoint::zero());
    }
    Ok(fm_chain(z, m)?.iter().map(|w| w.inv()).sum())
}

/// |G_m² + G_m(K_{m−1} − z) + 1|.
pub fn cauchy_quadratic_residual(z: ComplexPoint, m: usize) -> Result<f64, TransformError> {
    let chain = fm_chain(z, m)?;
    let g = chain[m - 1].inv();
    let k: ComplexPoint = chain[..m - 1].iter().map(|w| w.inv()).sum();
    Ok((g * g + g * (k - z) + 1.0).norm())
}

/// Z(w) = w + 1/w, the compositional inverse of F_1.
pub trait Zhukovsky: Sized {
    fn zhukovsky(&self) -> Result<Self, TransformError>;
}

impl Zhukovsky for ComplexPoint {
    fn zhukovsky(&self) -> Result<Self, TransformError> {
        if self.is_zero() {
            return Err(TransformError::ZeroArgument);
        }
        Ok(self + self.inv())
    }
}

impl Zhukovsky for BigRational {
    fn zhukovsky(&self) -> Result<Self, TransformError> {
        if self.is_zero() {
            return Err(TransformError::ZeroArgument);
        }
        Ok(self + self.recip())
    }
}

pub fn zhukovsky<T: Zhukovsky>(w: &T) -> Result<T, TransformError> {
    w.zhukovsky()
}

/// Z_m = Z ∘ ... ∘ Z (m times); Z_0 is the identity.
pub fn zhukovsky_iter<T: Zhukovsky + Clone>(w: &T, m: usize) -> Result<T, TransformError> {
    let mut v = w.clone();
    for _ in 0..m {
        v = v.zhukovsky()?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im)
    }

    #[test]
    fn g1_decays_like_one_over_z() {
        let z = c(0.0, 100.0);
        assert!((g1(z).unwrap() - z.inv()).norm() < 1e-4);
    }

    #[test]
    fn g1_at_three() {
        let g = g1(c(3.0, 0.0)).unwrap();
        assert!((g.re - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert_eq!(g.im, 0.0);
    }

    #[test]
    fn g1_left_of_the_cut_is_negative() {
        let g = g1(c(-3.0, 0.0)).unwrap();
        assert!((g.re + (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
        let g = g1(c(-3.0, -0.0)).unwrap();
        assert!((g.re + (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn cut_and_lower_half_plane_are_rejected() {
        assert!(matches!(g1(c(1.0, 0.0)), Err(TransformError::OnCut { .. })));
        assert!(matches!(g1(c(1.0, -1.0)), Err(TransformError::LowerHalfPlane { .. })));
        assert!(matches!(fm(c(0.5, 0.0), 3), Err(TransformError::OnCut { .. })));
        assert!(matches!(fm(c(1.0, 1.0), 0), Err(TransformError::ZeroPower)));
    }

    #[test]
    fn real_point_between_endpoints_exits_at_the_right_stage() {
        // F_1(2.6) is real and lies in (2, 5/2), so F_2 is still real but F_3 needs the cut.
        let err = fm(c(2.6, 0.0), 4).unwrap_err();
        match err {
            TransformError::DomainExit { stage, .. } => assert_eq!(stage, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn f1_values_at_endpoints() {
        assert!((f1(c(2.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((f1(c(2.5, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert!((fm(c(2.9, 0.0), 3).unwrap() - c(1.0, 0.0)).norm() < 1e-7);
        assert_eq!(fm(c(1.0, 1.0), 1).unwrap(), f1(c(1.0, 1.0)).unwrap());
    }

    #[test]
    fn fm_at_endpoint_from_above() {
        for m in 1..=6 {
            let a = endpoint_f64(m);
            let w = fm(c(a, 1e-14), m).unwrap();
            assert!((w - c(1.0, 0.0)).norm() < 1e-5, "m={m}: {w}");
        }
    }

    #[test]
    fn zhukovsky_examples() {
        assert_eq!(zhukovsky(&ratio(1, 1)).unwrap(), ratio(2, 1));
        assert_eq!(zhukovsky(&ratio(2, 1)).unwrap(), ratio(5, 2));
        assert_eq!(zhukovsky(&ratio(5, 2)).unwrap(), ratio(29, 10));
        assert_eq!(zhukovsky_iter(&ratio(1, 1), 3).unwrap(), ratio(29, 10));
        assert_eq!(zhukovsky(&ratio(0, 1)), Err(TransformError::ZeroArgument));
        assert_eq!(zhukovsky(&c(0.0, 0.0)), Err(TransformError::ZeroArgument));
        assert_eq!(zhukovsky(&c(1.0, 0.0)).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn k_sum_of_zero_terms() {
        assert_eq!(k_sum(c(1.0, 1.0), 0).unwrap(), ComplexPoint::zero());
        let z = c(0.3, 0.7);
        assert!((k_sum(z, 1).unwrap() - g1(z).unwrap()).norm() < 1e-15);
    }

    fn upper_half_plane() -> impl Strategy<Value = ComplexPoint> {
        (-6.0f64..6.0, -3.0f64..1.0).prop_map(|(x, e)| c(x, 10f64.powf(e)))
    }

    proptest! {
        #[test]
        fn g1_satisfies_its_quadratic(z in upper_half_plane()) {
            let g = g1(z).unwrap();
            prop_assert!((g + g.inv() - z).norm() <= 1e-12 * z.norm().max(1.0));
        }

        #[test]
        fn f1_stays_outside_the_unit_half_disk(z in upper_half_plane()) {
            let w = f1(z).unwrap();
            prop_assert!(w.im > 0.0);
            prop_assert!(w.norm() >= 1.0 - 1e-12);
        }

        #[test]
        fn gm_maps_into_lower_half_plane(z in upper_half_plane(), m in 1usize..=6) {
            prop_assert!(gm(z, m).unwrap().im < 0.0);
        }

        #[test]
        fn quadratic_residual_is_small(z in upper_half_plane(), m in 1usize..=5) {
            prop_assert!(cauchy_quadratic_residual(z, m).unwrap() < 1e-10);
        }

        #[test]
        fn zhukovsky_inverts_fm(z in upper_half_plane(), m in 1usize..=5) {
            let back = zhukovsky_iter(&fm(z, m).unwrap(), m).unwrap();
            prop_assert!((back - z).norm() <= 1e-9 * z.norm());
        }
    }
}
