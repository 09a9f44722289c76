//! Randomised and formal-series checks of the transform identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cauchy_quadratic_residual, endpoint_f64, f1, fm, g1, gm, zhukovsky_iter, ComplexPoint, TransformError};
use crate::moments::MomentTable;
use crate::report::{IdentityCheck, VerificationReport};

/// Number of series coefficients checked, i.e. through z^22.
const SERIES_TERMS: usize = 12;

fn sample_upper_half_plane(rng: &mut ChaCha8Rng) -> ComplexPoint {
    let x = rng.gen_range(-6.0..6.0);
    let y = 10f64.powf(rng.gen_range(-3.0..1.0));
    ComplexPoint::new(x, y)
}

fn relative(a: ComplexPoint, b: ComplexPoint) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// Coefficients of w^n, n < terms, in w·M_m² + M_m(w·L_{m−1} − 1) + 1 with
/// w = z², M_m = Σ d_n^(m) wⁿ and L_{m−1} = M_1 + ... + M_{m−1}.
fn series_residual(table: &mut MomentTable, m: usize, terms: usize) -> Vec<BigInt> {
    let d: Vec<BigInt> = table.row(m, terms).into_iter().map(BigInt::from).collect();
    let l: Vec<BigInt> = (0..terms).map(|n| (1..m).map(|j| BigInt::from(table.get(j, n))).sum()).collect();
    (0..terms)
        .map(|n| {
            let mut c = -d[n].clone();
            if n == 0 {
                c += BigInt::one();
            } else {
                for a in 0..n {
                    c += &d[a] * (&d[n - 1 - a] + &l[n - 1 - a]);
                }
            }
            c
        })
        .collect()
}

/// The generating-function quadratic for m = 2 (and m ≤ 5) as a formal
/// series, and the m = 2 closed form of the Cauchy transform against the
/// composed transform at 100 seeded points of C⁺.
pub fn m2_generating_identities_check(seed: u64) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut table = MomentTable::new();

    for m in 2..=5 {
        let name = if m == 2 {
            "z^2 M_2^2 + M_2 (z^2 M_1 - 1) + 1 = 0 through z^22".to_string()
        } else {
            format!("z^2 M_{m}^2 + M_{m} (z^2 L_{} - 1) + 1 = 0 through z^22", m - 1)
        };
        let mut check = IdentityCheck::new(name);
        for (n, c) in series_residual(&mut table, m, SERIES_TERMS).into_iter().enumerate() {
            check.record(c.is_zero(), || format!("coefficient of z^{} is {c}", 2 * n));
        }
        report.push(check);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut closed =
        IdentityCheck::with_tolerance("G_2 = (z - G_1 -/+ sqrt((G_1 - z)^2 - 4))/2, root with Im < 0", 1e-10);
    let mut lower = IdentityCheck::new("Im G_2 < 0 on C+");
    let mut sign = IdentityCheck::new("sign rule: - for Re z > 0, + for Re z < 0");
    for _ in 0..100 {
        let z = sample_upper_half_plane(&mut rng);
        let (g1z, g2) = match (g1(z), gm(z, 2)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                closed.record(false, || format!("z = {z}: {e}"));
                continue;
            }
        };
        let disc = ((g1z - z).powi(2) - 4.0).sqrt();
        let minus = (z - g1z - disc) * 0.5;
        let plus = (z - g1z + disc) * 0.5;
        let picked = if minus.im < 0.0 { minus } else { plus };
        closed.record_residual(relative(picked, g2), || format!("z = {z}"));
        lower.record(g2.im < 0.0, || format!("z = {z}, G_2 = {g2}"));
        let by_rule = if z.re > 0.0 { minus } else { plus };
        sign.record(relative(by_rule, g2) < 1e-10, || format!("z = {z}"));
    }
    report.push(closed);
    report.push(lower);
    report.push(sign);
    report
}

/// Branch sanity, the quadratic equation for G_m, inversion by the Zhukovsky
/// map and the endpoint values of F_m, at `points` seeded points of C⁺ for
/// 1 ≤ m ≤ m_max.
pub fn transform_identities_check(seed: u64, points: usize, m_max: usize) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zs: Vec<ComplexPoint> = (0..points).map(|_| sample_upper_half_plane(&mut rng)).collect();
    let mut report = VerificationReport::default();

    let mut recur = IdentityCheck::with_tolerance("G_1 + 1/G_1 = z", 1e-12);
    let mut branch = IdentityCheck::new("Im F_1 > 0 and |F_1| >= 1");
    for &z in &zs {
        match (g1(z), f1(z)) {
            (Ok(g), Ok(f)) => {
                recur.record_residual(relative(g + g.inv(), z), || format!("z = {z}"));
                branch.record(f.im > 0.0 && f.norm() >= 1.0 - 1e-12, || format!("z = {z}, F_1 = {f}"));
            }
            (Err(e), _) | (_, Err(e)) => branch.record(false, || format!("z = {z}: {e}")),
        }
    }
    report.push(recur);
    report.push(branch);

    for m in 1..=m_max {
        let mut lower = IdentityCheck::new(format!("Im G_{m} < 0"));
        let mut quadratic = IdentityCheck::with_tolerance(format!("G_{m}^2 + G_{m} (K_{} - z) + 1 = 0", m - 1), 1e-10);
        let mut inverse = IdentityCheck::with_tolerance(format!("Z_{m}(F_{m}(z)) = z"), 1e-9);
        for &z in &zs {
            let outcome: Result<(), TransformError> = (|| {
                let g = gm(z, m)?;
                lower.record(g.im < 0.0, || format!("z = {z}, G = {g}"));
                quadratic.record_residual(cauchy_quadratic_residual(z, m)?, || format!("z = {z}"));
                let back = zhukovsky_iter(&fm(z, m)?, m)?;
                inverse.record_residual(relative(back, z), || format!("z = {z}"));
                Ok(())
            })();
            if let Err(e) = outcome {
                lower.record(false, || format!("z = {z}: {e}"));
            }
        }
        report.push(lower);
        report.push(quadratic);
        report.push(inverse);
    }

    let mut endpoint = IdentityCheck::with_tolerance("F_m(a_m + i0) = 1", 1e-5);
    for m in 1..=m_max.max(1) {
        let z = ComplexPoint::new(endpoint_f64(m), 1e-14);
        match fm(z, m) {
            Ok(w) => endpoint.record_residual((w - 1.0).norm(), || format!("m = {m}, F_m = {w}")),
            Err(e) => endpoint.record(false, || format!("m = {m}: {e}")),
        }
    }
    report.push(endpoint);
    report
}
