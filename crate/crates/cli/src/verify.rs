//! Verification suites: each check compares two independent computations.

use wmfock_core::algebra::{ratio, BigRational};
use wmfock_core::fock::{check_monotone_independence, check_operator_identities, moment_via_fock};
use wmfock_core::moments::{moment_polynomial_with, MomentTable};
use wmfock_core::orthopoly::{
    hankel_leading_minors, jacobi_from_moments, monic_orthogonal_polys, verify_orthogonality,
};
use wmfock_core::partitions::{
    catalan, count_nc2wmo, count_weakly_monotone_labelings, count_weakly_monotone_labelings_exhaustive, enumerate_nc2,
    EnumerationBound,
};
use wmfock_core::transforms::{
    density_m2_closed, density_numeric, endpoint_bounds_check, m2_generating_identities_check, moment_quadrature,
    transform_identities_check, YLadder,
};
use wmfock_core::{Error, IdentityCheck, VerificationReport};

use crate::cli::VerifyTarget;

pub struct Settings {
    pub seed: u64,
    pub trials: usize,
    pub bound: EnumerationBound,
    pub ladder_tolerance: f64,
}

pub fn run(target: VerifyTarget, s: &Settings) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    let all = target == VerifyTarget::All;
    if all || target == VerifyTarget::Partitions {
        report.extend(partitions(s)?);
    }
    if all || target == VerifyTarget::Fock {
        report.extend(fock(s)?);
    }
    if all || target == VerifyTarget::Transforms {
        report.extend(transforms(s)?);
    }
    if all {
        report.extend(moments()?);
        report.extend(orthopoly()?);
    }
    Ok(report)
}

fn partitions(s: &Settings) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    let n_top = s.bound.0.min(7);
    let mut table = MomentTable::new();

    let mut sizes = IdentityCheck::new("|NC_2(2n)| = C_n");
    let mut bijection = IdentityCheck::new("sign string <-> pair partition round trip");
    let mut labelling = IdentityCheck::new("labelling count: forest recursion = brute force");
    for n in 0..=n_top {
        let all = enumerate_nc2(n, s.bound)?;
        sizes.record(catalan(n) == all.len().into(), || format!("n = {n}: {}", all.len()));
        for pi in &all {
            let back = pi.to_sign_string().to_partition();
            bijection.record(&back == pi, || format!("{pi:?}"));
            if n <= 5 {
                for m in 1..=3 {
                    let fast = count_weakly_monotone_labelings(pi, m);
                    let slow = count_weakly_monotone_labelings_exhaustive(pi, m);
                    labelling.record(fast == slow, || format!("{pi:?}, m = {m}: {fast} vs {slow}"));
                }
            }
        }
    }
    report.push(sizes);
    report.push(bijection);
    report.push(labelling);

    let mut count = IdentityCheck::new("|NC2WMO(m, n)| = d_n^(m)");
    for m in 1..=4 {
        for n in 0..=n_top.min(6) {
            let c = count_nc2wmo(m, n, s.bound)?;
            let d = table.get(m, n);
            count.record(c == d, || format!("m = {m}, n = {n}: {c} vs {d}"));
        }
    }
    report.push(count);
    Ok(report)
}

fn fock(s: &Settings) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    for m in 1..=3 {
        for depth in 3..=6 {
            let mut r = check_operator_identities(m, depth)?;
            for c in &mut r.checks {
                c.identity = format!("{} [m = {m}, D = {depth}]", c.identity);
            }
            report.extend(r);
        }
    }
    report.extend(check_monotone_independence(3, 8, s.trials, s.seed)?);

    let mut table = MomentTable::new();
    let mut walk = IdentityCheck::new("Fock vacuum moment = d_n^(m)");
    for m in 1..=3u32 {
        for n in 0..=s.bound.0.min(5) {
            let f = moment_via_fock(m, n, s.bound.0)?;
            let d = table.get(m as usize, n);
            walk.record(f == d, || format!("m = {m}, n = {n}: {f} vs {d}"));
        }
    }
    report.push(walk);
    Ok(report)
}

fn transforms(s: &Settings) -> Result<VerificationReport, Error> {
    let mut report = transform_identities_check(s.seed, 1000, 5);
    report.extend(m2_generating_identities_check(s.seed));

    let bounds = endpoint_bounds_check(10_000)?;
    let mut endpoints = IdentityCheck::new("endpoint bounds and a_m / sqrt m decreasing, m <= 10^4");
    for row in &bounds.rows {
        endpoints.record(row.passed(), || format!("m = {}", row.m));
    }
    endpoints.record(bounds.limit_gap > 0.0 && bounds.limit_gap < 1e-2 * 2f64.sqrt(), || {
        format!("a_10000 / 100 - sqrt 2 = {}", bounds.limit_gap)
    });
    report.push(endpoints);

    let ladder = YLadder::default().with_tolerance(s.ladder_tolerance);
    let mut inversion = IdentityCheck::with_tolerance("Stieltjes inversion = closed form, m = 2", 1e-6);
    let mut flagged = IdentityCheck::new("Stieltjes ladder converged, m = 2");
    for k in 0..50 {
        let x = -2.5 + 5.0 * (k as f64 + 0.5) / 50.0;
        let est = density_numeric(2, x, &ladder)?;
        inversion.record_residual((est.value - density_m2_closed(x)).abs(), || format!("x = {x}"));
        flagged.record(est.converged, || format!("x = {x}, residual {}", est.residual));
    }
    report.push(inversion);
    report.push(flagged);

    let mut symmetry = IdentityCheck::with_tolerance("g_m(x) = g_m(-x)", 1e-9);
    for m in 1..=5 {
        for k in 0..40 {
            let x = 3.5 * (k as f64 + 0.5) / 40.0;
            let a = density_numeric(m, x, &YLadder::adapted(m, x))?.value;
            let b = density_numeric(m, -x, &YLadder::adapted(m, -x))?.value;
            symmetry.record_residual((a - b).abs(), || format!("m = {m}, x = {x}"));
        }
    }
    report.push(symmetry);

    let mut table = MomentTable::new();
    let mut quadrature = IdentityCheck::with_tolerance("quadrature moments = d_n^(m), relative", 1e-5);
    for m in 1..=4 {
        let q = moment_quadrature(m, 6)?;
        for n in 0..=3 {
            let exact: f64 = table.get(m, n).to_string().parse().expect("integer");
            quadrature.record_residual((q[2 * n] - exact).abs() / exact, || format!("m = {m}, n = {n}"));
        }
    }
    report.push(quadrature);
    Ok(report)
}

fn moments() -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    let mut table = MomentTable::new();
    let mut poly = IdentityCheck::new("polynomial in m reproduces d_n^(m) for m <= 20");
    let mut leading = IdentityCheck::new("leading coefficient of d_n^(m) is (2n - 1)!! / n!");
    for n in 0..=9 {
        let p = moment_polynomial_with(&mut table, n)?;
        for m in 1..=20 {
            let d = BigRational::from_integer(table.get(m, n).into());
            poly.record(p.eval(m) == d, || format!("n = {n}, m = {m}"));
        }
        let want = double_factorial_ratio(n);
        leading.record(p.poly.coeff(n) == want, || format!("n = {n}: {}", p.poly.coeff(n)));
    }
    report.push(poly);
    report.push(leading);

    let mut increasing = IdentityCheck::new("d_n^(m) strictly increasing in m");
    for n in 1..=8 {
        for m in 1..=10 {
            increasing.record(table.get(m + 1, n) > table.get(m, n), || format!("n = {n}, m = {m}"));
        }
    }
    report.push(increasing);
    Ok(report)
}

/// (2n − 1)!! / n!.
fn double_factorial_ratio(n: usize) -> BigRational {
    (1..=n).fold(ratio(1, 1), |acc, k| acc * ratio(2 * k as i64 - 1, k as i64))
}

fn orthopoly() -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    let mut table = MomentTable::new();
    let mut positive = IdentityCheck::new("Hankel minors and beta_n positive through order 8, m <= 6");
    let mut hankel = IdentityCheck::new("beta_n = D_{n-2} D_n / D_{n-1}^2");
    let mut orthogonal = IdentityCheck::new("L(p_i p_j) = 0 for i != j");
    for m in 1..=6 {
        let moments = table.raw_moments(m, 18);
        let minors = hankel_leading_minors(&moments, 10);
        let jc = jacobi_from_moments(&moments, 8)?;
        positive.record(minors.iter().chain(&jc.beta).all(|v| *v > ratio(0, 1)), || format!("m = {m}"));
        for n in 1..=8 {
            let below = if n >= 2 { minors[n - 2].clone() } else { ratio(1, 1) };
            let beta = &below * &minors[n] / (&minors[n - 1] * &minors[n - 1]);
            hankel.record(jc.beta(n) == Some(&beta), || format!("m = {m}, n = {n}"));
        }
        let polys = monic_orthogonal_polys(&jc, 8)?;
        let r = verify_orthogonality(&polys, &moments);
        orthogonal.record(r.passed(), || format!("m = {m}: {:?}", r.failures.first()));
    }
    report.push(positive);
    report.push(hankel);
    report.push(orthogonal);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings() -> Settings {
        Settings { seed: 42, trials: 20, bound: EnumerationBound::default(), ladder_tolerance: 1e-6 }
    }

    #[test]
    fn partitions_suite_passes() {
        let r = run(VerifyTarget::Partitions, &settings()).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn moments_and_orthopoly_pass() {
        assert!(moments().unwrap().all_passed());
        assert!(orthopoly().unwrap().all_passed());
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(double_factorial_ratio(2), ratio(3, 2));
        assert_eq!(double_factorial_ratio(4), ratio(35, 8));
        assert_eq!(double_factorial_ratio(7), ratio(429, 16));
    }

    #[test]
    fn enumeration_bound_shrinks_the_suite() {
        let full = run(VerifyTarget::Partitions, &settings()).unwrap();
        let small = run(VerifyTarget::Partitions, &Settings { bound: EnumerationBound(3), ..settings() }).unwrap();
        assert!(small.all_passed());
        let cases = |r: &VerificationReport| r.checks.iter().map(|c| c.cases).sum::<usize>();
        assert!(cases(&small) < cases(&full));
    }
}
