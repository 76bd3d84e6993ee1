//! Acceptance suite: one test per criterion, each printing a pass line with
//! the checked counts (run with `--nocapture` to see them). Every tolerance
//! is pinned here; all checks are exact integer comparisons except the 1e-9
//! numeric tolerance inside the quadratic-unit check.

use std::time::Instant;

use boundary_weights::{
    check_avoids, classify_weight, closed_form_avoidance, decomposition_of, decompositions,
    dot_action, free_abelian_cohomology_dim, hodge_weight, klingen_profile,
    kostant_parallel_presentations, kostant_set, koszul_oracle, levi_weight, profile_avoidance,
    quadratic_unit_check, unit_action_trivial, weights01_present, AvoidedInterval, HighestWeight,
    Status, Stratum,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const STRATA: [Stratum; 2] = [Stratum::Siegel, Stratum::Klingen];

/// All dominant weights with `0 <= k2[s] <= k1[s] <= k_max`, default c.
fn weight_grid(d: usize, k_max: i64) -> Vec<HighestWeight> {
    let pairs: Vec<(i64, i64)> = (0..=k_max)
        .flat_map(|k1| (0..=k1).map(move |k2| (k1, k2)))
        .collect();
    let mut out = Vec::new();
    let total = pairs.len().pow(d as u32);
    for index in 0..total {
        let mut rest = index;
        let mut k1 = vec![0i64; d];
        let mut k2 = vec![0i64; d];
        for s in (0..d).rev() {
            let (a, b) = pairs[rest % pairs.len()];
            rest /= pairs.len();
            k1[s] = a;
            k2[s] = b;
        }
        out.push(HighestWeight::with_default_c(k1, k2).unwrap());
    }
    out
}

#[test]
fn criterion_01_weyl_kostant_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;
    for stratum in STRATA {
        let rank_one = kostant_set(1, stratum).unwrap();
        assert_eq!(rank_one.len(), 4);
        let mut lengths: Vec<usize> = rank_one.iter().map(|w| w.length()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![0, 1, 2, 3], "per-factor lengths are 0..=3");
        let rank_one_factors: std::collections::HashSet<_> =
            rank_one.iter().map(|w| w.factors()[0]).collect();

        for d in 1..=3usize {
            let set = kostant_set(d, stratum).unwrap();
            assert_eq!(set.len(), 4usize.pow(d as u32), "|Y'_m| = 4^d");
            for w in &set {
                for (s, factor) in w.factors().iter().enumerate() {
                    assert!(
                        rank_one_factors.contains(factor),
                        "factor {s} outside the rank-one Kostant set"
                    );
                    assert!(factor.length() <= 3);
                }
            }
            // product structure: every combination of rank-one factors occurs
            let as_sets: std::collections::HashSet<Vec<_>> =
                set.iter().map(|w| w.factors().to_vec()).collect();
            assert_eq!(as_sets.len(), 4usize.pow(d as u32));
            checked += set.len();
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 must run in < 1 s");
    println!(
        "ACCEPTANCE 01 weyl-kostant-oracle-equivalence: PASS ({checked} elements, {:.3}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_02_dot_action_table_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_2026);
    let mut kostant_sets = Vec::new();
    for d in 1..=3usize {
        kostant_sets.push(STRATA.map(|stratum| kostant_set(d, stratum).unwrap()));
    }
    let mut mismatches = 0usize;
    let mut comparisons = 0usize;
    for i in 0..500usize {
        let d = i % 3 + 1;
        let k1: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=10)).collect();
        let k2: Vec<i64> = k1.iter().map(|&hi| rng.gen_range(0..=hi)).collect();
        let lambda = HighestWeight::with_default_c(k1, k2).unwrap();
        for (m, stratum) in STRATA.into_iter().enumerate() {
            for w in &kostant_sets[d - 1][m] {
                let dot = dot_action(w, &lambda).unwrap();
                let psi = decomposition_of(w).unwrap();
                let levi = levi_weight(&lambda, &psi, stratum).unwrap();
                let table: Vec<(i64, i64)> = levi
                    .e1
                    .iter()
                    .zip(&levi.e2)
                    .map(|(&a, &b)| (a, b))
                    .collect();
                comparisons += 1;
                if dot.pairs != table || dot.c != levi.c {
                    mismatches += 1;
                }
            }
        }
    }
    assert_eq!(mismatches, 0, "dot action must match the summand tables");
    println!(
        "ACCEPTANCE 02 dot-action-table-agreement: PASS ({comparisons} comparisons, 0 mismatches)"
    );
}

#[test]
fn criterion_03_bijection_counts() {
    let mut checked = 0usize;
    for d in 1..=4usize {
        for stratum in STRATA {
            let set = kostant_set(d, stratum).unwrap();
            let mut total = 0usize;
            for q in 0..=3 * d as i64 {
                let by_length = set.iter().filter(|w| w.length() as i64 == q).count();
                let partitions = decompositions(d, q).len();
                assert_eq!(
                    by_length, partitions,
                    "length-{q} count vs q-admissible decompositions at d={d}"
                );
                total += partitions;
                checked += 1;
            }
            assert_eq!(total, 4usize.pow(d as u32), "sum over q of |P_q| = 4^d");
        }
    }
    println!("ACCEPTANCE 03 bijection-counts: PASS ({checked} (d, m, q) cells)");
}

#[test]
fn criterion_04_hodge_weight_double_computation() {
    let mut checked = 0usize;
    for d in 1..=2usize {
        for lambda in weight_grid(d, 4) {
            for stratum in STRATA {
                for q in 0..=3 * d as i64 {
                    for psi in decompositions(d, q) {
                        let formula = hodge_weight(&lambda, &psi, stratum).unwrap();
                        let levi = levi_weight(&lambda, &psi, stratum).unwrap();
                        assert_eq!(formula, levi.pairing_weight(), "exact equality required");
                        assert_eq!(formula, levi.hodge_weight);
                        checked += 1;
                    }
                }
            }
        }
    }
    println!(
        "ACCEPTANCE 04 hodge-weight-double-computation: PASS ({checked} (lambda, psi, m) triples)"
    );
}

#[test]
fn criterion_05_flagship_route_equality() {
    let start = Instant::now();
    let mut checked = 0usize;
    for d in 1..=3usize {
        let grid = weight_grid(d, 5);
        if d == 3 {
            assert_eq!(grid.len(), 9261, "21 dominant pairs per embedding");
        }
        for lambda in grid {
            let closed = closed_form_avoidance(&lambda);
            let profiled = profile_avoidance(&lambda);
            assert_eq!(
                closed,
                profiled,
                "route mismatch at k1={:?} k2={:?}",
                lambda.k1(),
                lambda.k2()
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "criterion 5 must run in < 30 s"
    );
    println!(
        "ACCEPTANCE 05 flagship-route-equality: PASS ({checked} weights, {:.3}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_06_corank_criterion() {
    let mut checked = 0usize;
    for d in 1..=3usize {
        for lambda in weight_grid(d, 5) {
            let classification = classify_weight(&lambda);
            assert_eq!(
                weights01_present(&lambda),
                classification.completely_irregular && classification.corank >= 1,
                "corank criterion at k1={:?} k2={:?}",
                lambda.k1(),
                lambda.k2()
            );
            checked += 1;
        }
    }
    println!("ACCEPTANCE 06 corank-criterion: PASS ({checked} weights)");
}

#[test]
fn criterion_07_group_cohomology_dimensions() {
    type Q = num::rational::Ratio<i64>;
    let values = [Q::from_integer(1), Q::from_integer(-1), Q::from_integer(2)];
    let mut checked = 0usize;
    for r in 0..=3u32 {
        for combo in 0..values.len().pow(r) {
            let mut rest = combo;
            let chars: Vec<Q> = (0..r)
                .map(|_| {
                    let v = values[rest % values.len()];
                    rest /= values.len();
                    v
                })
                .collect();
            let trivial = chars.iter().all(|v| *v == Q::from_integer(1));
            for dim_v in [1u64, 3] {
                let oracle = koszul_oracle(r, &chars, dim_v).unwrap();
                for s in 0..=r as i64 {
                    assert_eq!(
                        oracle[s as usize],
                        free_abelian_cohomology_dim(r, s, trivial, dim_v),
                        "r={r} chars={chars:?} s={s} dimV={dim_v}"
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("ACCEPTANCE 07 group-cohomology-dimensions: PASS ({checked} dimensions)");
}

#[test]
fn criterion_08_unit_criterion_numeric_validation() {
    let mut checked = 0usize;
    for m in [2, 3, 5] {
        for n1 in -5..=5i64 {
            for n2 in -5..=5i64 {
                assert_eq!(
                    quadratic_unit_check(m, (n1, n2)).unwrap(),
                    unit_action_trivial(&[n1, n2]),
                    "m={m} exponents=({n1},{n2})"
                );
                checked += 1;
            }
        }
    }
    println!("ACCEPTANCE 08 unit-criterion-numeric-validation: PASS ({checked} exponent pairs, tol 1e-9)");
}

#[test]
fn criterion_09_d1_regression() {
    let mut checked = 0usize;
    for k1 in 1..=8i64 {
        for k2 in 1..k1 {
            // regular: k1 > k2 > 0
            let lambda = HighestWeight::with_default_c(vec![k1], vec![k2]).unwrap();
            assert!(classify_weight(&lambda).regular);
            let kappa = (k1 - k2).min(k2);
            let report = closed_form_avoidance(&lambda);
            assert_eq!(
                report.avoided_interval,
                AvoidedInterval::Interval {
                    lo: -kappa + 1,
                    hi: kappa
                }
            );
            assert!(check_avoids(&lambda, 1).unwrap(), "weights 0 and 1 avoided");
            assert!(!report.weights01_present);
            checked += 1;
        }
    }
    println!("ACCEPTANCE 09 d1-regression: PASS ({checked} regular weights)");
}

#[test]
fn criterion_10_klingen_weight_coherence() {
    let mut checked = 0usize;
    for d in 1..=3usize {
        for lambda in weight_grid(d, 5) {
            let presentations = kostant_parallel_presentations(&lambda);
            let active: Vec<_> = presentations
                .iter()
                .filter(|p| !p.i0.is_empty() && !p.i1.is_empty())
                .collect();
            if active.is_empty() {
                continue;
            }
            let profile = klingen_profile(&lambda);
            let d = lambda.d() as i64;
            for p in active {
                let mut levels = vec![0u8; lambda.d()];
                for &s in &p.i1 {
                    levels[s] = 1;
                }
                let psi = boundary_weights::KostantDecomposition::from_levels(levels);
                let low = collect_weights(&profile, 0..d, &psi);
                let mid = collect_weights(&profile, d..2 * d, &psi);
                assert!(!low.is_empty() && !mid.is_empty());
                for &a in &low {
                    for &b in &mid {
                        assert_eq!(a, b, "case-(2)/case-(3) weights must coincide");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(
        checked > 0,
        "the sweep must contain two-sided presentations"
    );
    println!("ACCEPTANCE 10 klingen-weight-coherence: PASS ({checked} weight pairs)");
}

fn collect_weights(
    profile: &[boundary_weights::ProfileEntry],
    range: std::ops::Range<i64>,
    psi: &boundary_weights::KostantDecomposition,
) -> Vec<i64> {
    profile
        .iter()
        .filter(|e| range.contains(&e.degree))
        .flat_map(|e| e.summands.iter())
        .filter(|s| s.status == Status::Nonzero && s.psi.as_ref() == Some(psi))
        .map(|s| s.weight.unwrap())
        .collect()
}
