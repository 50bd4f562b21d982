use kmgrowth::algebra::{build_catalog, invariant_degrees};
use kmgrowth::series::{
    affine_poincare, cyclotomic_trial_division, finite_poincare, ratio_fit, ratio_fit_series, series_div, series_mul,
    IntPolynomial, SeriesError, TruncatedSeries, Verdict,
};
use kmgrowth::weyl::{enumerate_levels, EnumerationOptions, LevelCheckpoint, WeylError};
use proptest::prelude::*;

fn unit_constant_series() -> impl Strategy<Value = TruncatedSeries> {
    (prop::sample::select(vec![1i64, -1]), prop::collection::vec(-20i64..=20, 0..15)).prop_map(|(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        TruncatedSeries::new(c).unwrap()
    })
}

proptest! {
    #[test]
    fn div_then_mul_round_trips(den in unit_constant_series(), num in prop::collection::vec(-50i64..=50, 1..15)) {
        let order = den.order();
        let num = TruncatedSeries::from_polynomial(&IntPolynomial::new(num), order);
        let q = series_div(&num, &den, order);
        // large quotients overflow i64; that is reported, not wrapped
        prop_assume!(q != Err(SeriesError::Overflow));
        prop_assert_eq!(series_mul(&q.unwrap(), &den).unwrap(), num);
    }

    #[test]
    fn finite_poincare_is_palindromic(degrees in prop::collection::vec(2u32..=9, 0..6)) {
        let p = finite_poincare(&degrees).unwrap();
        prop_assert!(p.is_palindromic());
        prop_assert_eq!(p.eval_at_one().unwrap(), degrees.iter().map(|&d| d as i64).product::<i64>());
        prop_assert_eq!(p.degree().unwrap(), degrees.iter().map(|&d| d as usize - 1).sum::<usize>());
    }

    #[test]
    fn trial_division_recombines(factors in prop::collection::vec(1usize..=12, 0..5), tail in prop::collection::vec(-3i64..=3, 1..5)) {
        let mut p = IntPolynomial::new(tail);
        prop_assume!(!p.is_zero());
        for k in factors {
            p = p.mul(&kmgrowth::series::cyclotomic(k).unwrap()).unwrap();
        }
        let split = cyclotomic_trial_division(&p, 12).unwrap();
        prop_assert_eq!(split.recombine().unwrap(), p);
    }
}

#[test]
fn finite_growth_equals_poincare_polynomial() {
    for name in ["A2", "A3", "A4", "D4", "D5", "B3", "G2", "F4"] {
        let d = build_catalog(name).unwrap();
        let g = enumerate_levels(&d.gcm, 100, &EnumerationOptions::default()).unwrap();
        assert!(g.complete, "{name}");
        let poly = finite_poincare(&invariant_degrees(&d).unwrap()).unwrap();
        assert_eq!(g.to_series().unwrap().to_polynomial(), poly, "{name}");
    }
}

#[test]
fn affine_growth_matches_bott() {
    for (name, degrees) in [("AffA1", vec![2]), ("AffA2", vec![2, 3]), ("AffA3", vec![2, 3, 4])] {
        let g = enumerate_levels(&build_catalog(name).unwrap().gcm, 15, &EnumerationOptions::default()).unwrap();
        assert_eq!(g.to_series().unwrap(), affine_poincare(&degrees, 15).unwrap(), "{name}");
    }
}

#[test]
fn polynomial_verdict_is_stable_under_more_order() {
    let gcm = build_catalog("HA2").unwrap().gcm;
    let a3 = finite_poincare(&[2, 3, 4]).unwrap();
    for order in 11..=24 {
        let g = enumerate_levels(&gcm, order, &EnumerationOptions::default()).unwrap();
        let fit = ratio_fit(&a3, &g, 5).unwrap();
        assert_eq!(fit.verdict, Verdict::Polynomial, "order {order}");
        assert_eq!(fit.degree, Some(5));
        let back = fit.reconstruct(&g.to_series().unwrap()).unwrap().unwrap();
        assert_eq!(back, TruncatedSeries::from_polynomial(&a3, order));
    }
}

#[test]
fn complete_series_fit_against_itself() {
    let d = build_catalog("A3").unwrap();
    let g = enumerate_levels(&d.gcm, 50, &EnumerationOptions::default()).unwrap();
    let fit = ratio_fit(&finite_poincare(&[2, 3, 4]).unwrap(), &g, 5).unwrap();
    assert_eq!(fit.quotient, Some(IntPolynomial::one()));
    assert_eq!(fit.degree, Some(0));
}

#[test]
fn reciprocal_of_growth() {
    let g = enumerate_levels(&build_catalog("HA2").unwrap().gcm, 12, &EnumerationOptions::default()).unwrap();
    let s = g.to_series().unwrap();
    let r = series_div(&IntPolynomial::one(), &s, 12).unwrap();
    assert_eq!(series_mul(&r, &s).unwrap(), TruncatedSeries::from_polynomial(&IntPolynomial::one(), 12));
    // fitting against 1 is just the reciprocal
    let fit = ratio_fit_series(&IntPolynomial::one(), &s, 5).unwrap();
    assert_eq!(fit.expansion, r);
}

#[test]
fn checkpoint_resume_matches_uninterrupted_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ha3.ckpt");
    let gcm = build_catalog("HA3").unwrap().gcm;
    let with_ckpt = EnumerationOptions { checkpoint: Some(path.clone()), ..Default::default() };

    let partial = enumerate_levels(&gcm, 7, &with_ckpt).unwrap();
    assert_eq!(partial.order, 7);
    let saved = LevelCheckpoint::read_from(&path).unwrap();
    assert_eq!(saved.level, 7);

    let resumed = enumerate_levels(&gcm, 14, &with_ckpt).unwrap();
    let straight = enumerate_levels(&gcm, 14, &EnumerationOptions::default()).unwrap();
    assert_eq!(resumed, straight);

    // the file now holds level 14, byte-identical to a fresh write
    let bytes = std::fs::read(&path).unwrap();
    let mut rewritten = Vec::new();
    LevelCheckpoint::read_from(&path).unwrap().write(&mut rewritten).unwrap();
    assert_eq!(bytes, rewritten);

    // asking for less than the checkpoint holds truncates
    let short = enumerate_levels(&gcm, 3, &with_ckpt).unwrap();
    assert_eq!(short.coeffs, vec![1, 5, 15, 36]);
}

#[test]
fn checkpoint_for_another_algebra_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.ckpt");
    let opts = EnumerationOptions { checkpoint: Some(path), ..Default::default() };
    enumerate_levels(&build_catalog("HA2").unwrap().gcm, 4, &opts).unwrap();
    let err = enumerate_levels(&build_catalog("HA3").unwrap().gcm, 6, &opts).unwrap_err();
    assert!(matches!(err, WeylError::CheckpointMismatch { .. }));
}

#[test]
fn finite_group_checkpoint_completes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d4.ckpt");
    let opts = EnumerationOptions { checkpoint: Some(path), ..Default::default() };
    let gcm = build_catalog("D4").unwrap().gcm;
    enumerate_levels(&gcm, 5, &opts).unwrap();
    let g = enumerate_levels(&gcm, 100, &opts).unwrap();
    assert!(g.complete);
    assert_eq!(g.total(), 192);
}
