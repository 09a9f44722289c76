mod common;

use num_bigint::BigUint;
use wmfock_core::algebra::ratio;
use wmfock_core::moments::{moment_polynomial, moments_general, moments_m2, monotone_cumulants, MomentTable};
use wmfock_core::orthopoly::{
    hankel_leading_minors, jacobi_from_moments, monic_orthogonal_polys, verify_orthogonality,
};
use wmfock_core::partitions::{count_nc2wmo, EnumerationBound};

#[test]
fn printed_moment_rows() {
    for (m, row) in common::MOMENT_ROWS {
        let want: Vec<BigUint> = row.iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(moments_general(m, row.len() - 1).unwrap(), want, "m = {m}");
    }
}

#[test]
fn m2_recurrence_matches_printed_row() {
    let want: Vec<BigUint> = common::MOMENT_ROWS[0].1.iter().map(|&v| BigUint::from(v)).collect();
    assert_eq!(moments_m2(8), want);
}

#[test]
fn printed_polynomials_in_m() {
    for (n, want) in common::moment_polynomials().into_iter().enumerate() {
        assert_eq!(moment_polynomial(n).unwrap().poly, want, "n = {n}");
    }
}

#[test]
fn printed_cumulants_through_r14() {
    let got = monotone_cumulants(14).unwrap();
    assert_eq!(got.values(), &common::printed_cumulants()[..14]);
}

#[test]
fn r16_and_r20_agree_r18_does_not() {
    let got = monotone_cumulants(20).unwrap();
    assert_eq!(got.get(16), Some(&ratio(71, 280)));
    assert_eq!(got.get(18), Some(&ratio(121, 140)));
    assert_eq!(got.get(20), Some(&ratio(19, 7)));
}

#[test]
fn printed_orthogonal_polynomials_from_p3() {
    let mut table = MomentTable::new();
    let jc = jacobi_from_moments(&table.raw_moments(2, 18), 9).unwrap();
    let polys = monic_orthogonal_polys(&jc, 10).unwrap();
    let printed = common::printed_orthogonal_polys();
    for n in 3..=10 {
        assert_eq!(polys[n], printed[n - 1], "p_{n}");
    }
    assert_eq!(polys[1], printed[0]);
    assert_eq!(polys[2].to_string(), "x^2 - 2");
    assert_ne!(polys[2], printed[1]);
}

#[test]
fn derived_polynomials_are_orthogonal() {
    let mut table = MomentTable::new();
    let moments = table.raw_moments(2, 20);
    let jc = jacobi_from_moments(&moments, 9).unwrap();
    let polys = monic_orthogonal_polys(&jc, 10).unwrap();
    let report = verify_orthogonality(&polys, &moments);
    assert!(report.passed(), "{report:?}");
}

#[test]
fn hankel_minors_positive_and_consistent_with_beta() {
    let mut table = MomentTable::new();
    for m in 1..=6 {
        let moments = table.raw_moments(m, 18);
        let minors = hankel_leading_minors(&moments, 10);
        assert!(minors.iter().all(|d| *d > ratio(0, 1)), "m = {m}");
        let jc = jacobi_from_moments(&moments, 8).unwrap();
        // β_n = Δ_{n−2} Δ_n / Δ_{n−1}², Δ_{−1} = 1, with minors[k] = Δ_k.
        for n in 1..=8 {
            let below = if n >= 2 { minors[n - 2].clone() } else { ratio(1, 1) };
            let beta = &below * &minors[n] / (&minors[n - 1] * &minors[n - 1]);
            assert_eq!(jc.beta(n), Some(&beta), "m = {m}, n = {n}");
        }
    }
}

/// The ninth entry of the m = 3 row, settled by brute-force enumeration of
/// all 1430 pair partitions of 16 points.
#[test]
fn ninth_m3_moment_by_enumeration() {
    let counted = count_nc2wmo(3, 8, EnumerationBound::default()).unwrap();
    assert_eq!(counted, BigUint::from(1_189_887u32));
    assert_eq!(moments_general(3, 8).unwrap()[8], counted);
    assert_ne!(counted, BigUint::from(8_568_923u32));
}
