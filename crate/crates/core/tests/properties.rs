//! Cross-module properties on seeded random instances: the equivalence of
//! the CP characterizations, soundness of every emitted certificate,
//! permutation equivariance, determinant-route agreement, and oracle/engine
//! agreement.

#![allow(clippy::needless_range_loop)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use incline_core::{
    brute_force_cp_rank, cp_rank_upper_bound, djl_decompose, factor_3x3, is_cp, is_cp_regular,
    lu_factor, normalize, pairwise_decompose, ul_factor, verify_decomposition, verify_triangular,
    ApmSide, CpDecomposition, FactorOutcome, Incline, Matrix, SearchOptions, Value,
};

fn random_matrix(
    alg: &Incline,
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    den: u64,
) -> Matrix {
    Matrix::from_fn(alg.clone(), rows, cols, |_, _| alg.sample_value(rng, den)).unwrap()
}

/// A CP matrix by construction: the gram of a random rectangular matrix.
fn random_cp(alg: &Incline, rng: &mut ChaCha8Rng, n: usize, den: u64) -> Matrix {
    let k = rng.gen_range(1..=n + 1);
    random_matrix(alg, rng, n, k, den).gram()
}

fn random_symmetric(alg: &Incline, rng: &mut ChaCha8Rng, n: usize, den: u64) -> Matrix {
    let mut grid: Vec<Vec<Value>> = (0..n).map(|_| vec![alg.zero(); n]).collect();
    for i in 0..n {
        for j in i..n {
            let v = alg.sample_value(rng, den);
            grid[i][j] = v.clone();
            grid[j][i] = v;
        }
    }
    Matrix::from_rows(alg.clone(), grid).unwrap()
}

/// Independent determinant route: fold over itertools permutations with
/// inversion-counted parity, instead of the pruned recursive enumeration.
fn det_split_oracle(a: &Matrix) -> (Value, Value) {
    use itertools::Itertools;
    let alg = a.algebra();
    let n = a.rows();
    let mut plus = alg.zero();
    let mut minus = alg.zero();
    for perm in (0..n).permutations(n) {
        let mut inversions = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = alg.one();
        for (row, &col) in perm.iter().enumerate() {
            prod = alg.otimes(&prod, a.get(row, col)).unwrap();
        }
        if inversions % 2 == 0 {
            plus = alg.oplus(&plus, &prod).unwrap();
        } else {
            minus = alg.oplus(&minus, &prod).unwrap();
        }
    }
    (plus, minus)
}

#[test]
fn det_split_agrees_with_permutation_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for alg in [Incline::max_min(), Incline::max_plus(), Incline::boolean()] {
        for n in 1..=5 {
            let a = random_matrix(&alg, &mut rng, n, n, 12);
            let d = a.det_split().unwrap();
            let (plus, minus) = det_split_oracle(&a);
            assert_eq!(d.det_plus, plus);
            assert_eq!(d.det_minus, minus);
        }
    }
}

#[test]
fn det_split_matches_principal_2x2_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let alg = Incline::max_min();
    for _ in 0..50 {
        let a = random_matrix(&alg, &mut rng, 4, 4, 10);
        for i in 0..4usize {
            for j in (i + 1)..4 {
                let sub = a
                    .submatrix(
                        &incline_core::IndexSet::pair(i + 1, j + 1),
                        &incline_core::IndexSet::pair(i + 1, j + 1),
                    )
                    .unwrap();
                let d = sub.det_split().unwrap();
                assert_eq!(d.det_plus, alg.otimes(a.get(i, i), a.get(j, j)).unwrap());
                assert_eq!(d.det_minus, alg.otimes(a.get(i, j), a.get(j, i)).unwrap());
            }
        }
    }
}

#[test]
fn gram_is_symmetric_and_permutation_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for alg in [Incline::max_min(), Incline::max_plus()] {
        for _ in 0..25 {
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(1..=4);
            let b = random_matrix(&alg, &mut rng, n, m, 10);
            let g = b.gram();
            assert!(g.is_symmetric());
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let pb = b.permute_rows(&perm).unwrap();
            assert_eq!(pb.gram(), g.permute_symmetric(&perm).unwrap());
        }
    }
}

#[test]
fn tn2_implies_both_almost_principal_conditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let alg = Incline::max_min();
    for _ in 0..40 {
        let n = rng.gen_range(2..=5);
        // min-profile matrices a_ij = min(x_i, x_j) are symmetric and TN2.
        let xs: Vec<Value> = (0..n).map(|_| alg.sample_value(&mut rng, 10)).collect();
        let a = Matrix::from_fn(alg.clone(), n, n, |i, j| {
            alg.otimes(&xs[i], &xs[j]).unwrap()
        })
        .unwrap();
        assert!(a.is_tn2());
        for side in [ApmSide::Left, ApmSide::Right] {
            assert!(a.almost_principal_violation(side).unwrap().is_none());
            for e in a.almost_principal_2x2(side).unwrap() {
                assert!(alg.leq(&e.det.det_minus, &e.det.det_plus).unwrap());
            }
        }
    }
}

#[test]
fn cp_characterizations_agree_on_regular_carriers() {
    // Exhaustive over symmetric Boolean matrices up to side 3.
    let alg = Incline::boolean();
    for n in 1..=3usize {
        let cells = n * (n + 1) / 2;
        for bits in 0..(1u32 << cells) {
            let mut vals = (0..cells).map(|c| bits >> c & 1 == 1);
            let mut grid: Vec<Vec<Value>> = (0..n).map(|_| vec![alg.zero(); n]).collect();
            for i in 0..n {
                for j in i..n {
                    let v = Value::Bool(vals.next().unwrap());
                    grid[i][j] = v.clone();
                    grid[j][i] = v;
                }
            }
            let a = Matrix::from_rows(alg.clone(), grid).unwrap();
            assert_eq!(is_cp(&a).unwrap().is_cp(), is_cp_regular(&a).unwrap());
        }
    }
    // Sampled over max-min, a chain and a lattice.
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for alg in [
        Incline::max_min(),
        Incline::chain(5).unwrap(),
        divisor_lattice(30),
    ] {
        for _ in 0..200 {
            let n = rng.gen_range(1..=4);
            let a = random_symmetric(&alg, &mut rng, n, 8);
            assert_eq!(is_cp(&a).unwrap().is_cp(), is_cp_regular(&a).unwrap());
        }
    }
}

fn divisor_lattice(n: u64) -> Incline {
    let divs: Vec<u64> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let idx = |v: u64| divs.iter().position(|&d| d == v).unwrap();
    let gcd = |a: u64, b: u64| {
        let (mut a, mut b) = (a, b);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let join = divs
        .iter()
        .map(|&a| divs.iter().map(|&b| idx(a / gcd(a, b) * b)).collect())
        .collect();
    let meet = divs
        .iter()
        .map(|&a| divs.iter().map(|&b| idx(gcd(a, b))).collect())
        .collect();
    Incline::lattice(divs.iter().map(|d| d.to_string()).collect(), join, meet).unwrap()
}

#[test]
fn decompositions_succeed_exactly_on_cp_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for alg in [Incline::max_min(), Incline::max_plus()] {
        for _ in 0..60 {
            let n = rng.gen_range(1..=5);
            let a = if rng.gen_bool(0.5) {
                random_cp(&alg, &mut rng, n, 8)
            } else {
                random_symmetric(&alg, &mut rng, n, 8)
            };
            let cp = is_cp(&a).unwrap().is_cp();
            match pairwise_decompose(&a) {
                Ok(dec) => {
                    assert!(cp);
                    assert!(dec.factor_count() <= 3 * n * (n - 1) / 2 + usize::from(n == 1));
                    assert!(verify_decomposition(&a, &dec).unwrap());
                }
                Err(_) => assert!(!cp),
            }
            match djl_decompose(&a) {
                Ok(dec) => {
                    assert!(cp);
                    assert!(dec.factor_count() <= cp_rank_upper_bound(n));
                    if n >= 4 {
                        assert!(dec.max_support() <= 3);
                    }
                    assert!(verify_decomposition(&a, &dec).unwrap());
                }
                Err(_) => assert!(!cp),
            }
        }
    }
}

#[test]
fn normalization_reassembles_and_zero_rows_are_forced() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for alg in [
        Incline::max_min(),
        Incline::max_plus(),
        Incline::max_times(),
    ] {
        for _ in 0..40 {
            let n = rng.gen_range(1..=5);
            let mut a = random_cp(&alg, &mut rng, n, 8);
            // Occasionally zero out a row/column pair to exercise stripping.
            if n > 1 && rng.gen_bool(0.3) {
                let z = rng.gen_range(0..n);
                a = Matrix::from_fn(alg.clone(), n, n, |i, j| {
                    if i == z || j == z {
                        alg.zero()
                    } else {
                        a.get(i, j).clone()
                    }
                })
                .unwrap();
            }
            let norm = normalize(&a).unwrap();
            for i in 0..n {
                assert_eq!(norm.core.get(i, i), &alg.one());
                for j in 0..n {
                    let back = alg
                        .otimes(
                            &norm.diagonal[i],
                            &alg.otimes(norm.core.get(i, j), &norm.diagonal[j]).unwrap(),
                        )
                        .unwrap();
                    assert_eq!(&back, a.get(i, j));
                }
            }
            // Zero diagonal entries force their whole row to zero, and the
            // decomposition factors keep those rows zero.
            let dec = djl_decompose(&a).unwrap();
            assert!(verify_decomposition(&a, &dec).unwrap());
            for i in 0..n {
                if alg.is_zero(a.get(i, i)) {
                    for f in &dec.factors {
                        assert!(alg.is_zero(&f[i]));
                    }
                }
            }
        }
    }
}

#[test]
fn djl_holds_up_at_deeper_recursion_and_over_all_ordered_carriers() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let carriers = [
        Incline::max_min(),
        Incline::max_plus(),
        Incline::max_times(),
        Incline::chain(6).unwrap(),
        Incline::boolean(),
    ];
    for n in 10..=14 {
        for alg in &carriers {
            let a = random_cp(alg, &mut rng, n, 10);
            let dec = djl_decompose(&a).unwrap();
            assert!(dec.factor_count() <= cp_rank_upper_bound(n));
            assert!(dec.max_support() <= 3);
            assert!(
                verify_decomposition(&a, &dec).unwrap(),
                "{} n={n}",
                alg.kind_name()
            );
        }
    }
}

#[test]
fn djl_is_permutation_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let alg = Incline::max_min();
    for _ in 0..30 {
        let n = rng.gen_range(2..=6);
        let a = random_cp(&alg, &mut rng, n, 8);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let papt = a.permute_symmetric(&perm).unwrap();
        let dec = djl_decompose(&papt).unwrap();
        assert!(verify_decomposition(&papt, &dec).unwrap());
        // Pull the factor rows back through the permutation: a verifying
        // decomposition of the original matrix.
        let pulled: Vec<Vec<Value>> = dec
            .factors
            .iter()
            .map(|f| {
                let mut g = vec![alg.zero(); n];
                for (local, &orig) in perm.iter().enumerate() {
                    g[orig] = f[local].clone();
                }
                g
            })
            .collect();
        let supports = pulled
            .iter()
            .map(|f| f.iter().filter(|v| !alg.is_zero(v)).count())
            .collect();
        let back = CpDecomposition {
            algebra: alg.clone(),
            n,
            factors: pulled,
            supports,
            permutation: (1..=n).collect(),
        };
        assert!(verify_decomposition(&a, &back).unwrap());
    }
}

#[test]
fn triangular_certificates_are_sound_whenever_the_condition_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for alg in [Incline::max_min(), Incline::max_plus()] {
        let mut factored = 0;
        for _ in 0..80 {
            let n = rng.gen_range(1..=5);
            let a = random_cp(&alg, &mut rng, n, 8);
            let left_ok = a
                .almost_principal_violation(ApmSide::Left)
                .unwrap()
                .is_none();
            let right_ok = a
                .almost_principal_violation(ApmSide::Right)
                .unwrap()
                .is_none();
            match ul_factor(&a).unwrap() {
                FactorOutcome::Factored(cert) => {
                    assert!(left_ok);
                    assert!(verify_triangular(&a, &cert).unwrap());
                    factored += 1;
                }
                FactorOutcome::Refused(_) => assert!(!left_ok),
            }
            match lu_factor(&a).unwrap() {
                FactorOutcome::Factored(cert) => {
                    assert!(right_ok);
                    assert!(verify_triangular(&a, &cert).unwrap());
                }
                FactorOutcome::Refused(_) => assert!(!right_ok),
            }
        }
        assert!(factored > 0, "generator never hit the factorable case");
    }
}

#[test]
fn reversal_swaps_the_two_conditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let alg = Incline::max_min();
    for _ in 0..60 {
        let n = rng.gen_range(2..=5);
        let a = random_cp(&alg, &mut rng, n, 8);
        let reversal: Vec<usize> = (0..n).rev().collect();
        let rar = a.permute_symmetric(&reversal).unwrap();
        let left_a = a
            .almost_principal_violation(ApmSide::Left)
            .unwrap()
            .is_none();
        let right_rar = rar
            .almost_principal_violation(ApmSide::Right)
            .unwrap()
            .is_none();
        assert_eq!(left_a, right_rar);
        assert_eq!(
            ul_factor(&a).unwrap().is_factored(),
            lu_factor(&rar).unwrap().is_factored()
        );
    }
}

#[test]
fn three_by_three_dichotomy_on_random_cp() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for alg in [
        Incline::max_min(),
        Incline::max_plus(),
        Incline::max_times(),
    ] {
        for _ in 0..100 {
            let a = random_cp(&alg, &mut rng, 3, 8);
            let cert = factor_3x3(&a).unwrap();
            assert!(verify_triangular(&a, &cert).unwrap());
        }
    }
}

#[test]
fn restricted_search_finds_factorizations_of_continuous_grams() {
    // Entries of the factor are arbitrary rationals; the search is
    // restricted to the subincline generated by the gram's entries. For
    // idempotent multiplication the restriction is lossless.
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let alg = Incline::max_min();
    let opts = SearchOptions {
        max_carrier: 16,
        ..SearchOptions::default()
    };
    for _ in 0..25 {
        let n = rng.gen_range(2..=3);
        let k = rng.gen_range(1..=2);
        let b = random_matrix(&alg, &mut rng, n, k, 97);
        let a = b.gram();
        let t = brute_force_cp_rank(&a, k.min(cp_rank_upper_bound(n)), &opts).unwrap();
        let width = t.found_width().expect("restricted search must succeed");
        assert!(width <= k);
    }
}

#[test]
fn oracle_and_engine_agree_on_sampled_maxmin() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let alg = Incline::max_min();
    let opts = SearchOptions {
        max_carrier: 24,
        ..SearchOptions::default()
    };
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let a = if rng.gen_bool(0.5) {
            random_cp(&alg, &mut rng, n, 6)
        } else {
            random_symmetric(&alg, &mut rng, n, 6)
        };
        let cp = is_cp(&a).unwrap().is_cp();
        let t = brute_force_cp_rank(&a, cp_rank_upper_bound(n), &opts).unwrap();
        assert_eq!(t.found_width().is_some(), cp);
        if let Some(width) = t.found_width() {
            // Exact rank <= construction factor count <= the rank bound.
            let dec = djl_decompose(&a).unwrap();
            assert!(width <= dec.factor_count());
            assert!(dec.factor_count() <= cp_rank_upper_bound(n));
        }
    }
}

#[test]
fn search_transcripts_are_deterministic() {
    let alg = Incline::boolean();
    let a = incline_core::djl_tightness_witness(4).unwrap();
    let _ = alg;
    let t1 = brute_force_cp_rank(&a, 4, &SearchOptions::default()).unwrap();
    let t2 = brute_force_cp_rank(&a, 4, &SearchOptions::default()).unwrap();
    assert_eq!(t1, t2);
}
