//! Wall/chamber and fixed-component tests with hand-computed oracles.

use num_traits::Zero;
use parhiggs::exact_algebra::{rat, Gaussian, Poly, Rat};
use parhiggs::fixed_points::{
    chamber_census, chamber_of, chamber_of_grid, enumerate_fixed_components, fixed_point_datum,
    wall_value, CentralSphere, FixedPointError,
};
use parhiggs::higgs_lambda::InvariantLines;
use parhiggs::parabolic_core::{MarkedDivisor, WeightVector};

fn weights(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> WeightVector {
    WeightVector::new([rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(d.0, d.1)]).unwrap()
}

fn generic_weights() -> WeightVector {
    weights((1, 8), (1, 6), (1, 5), (1, 4))
}

#[test]
fn symmetric_weights_lie_on_walls() {
    let alpha = weights((1, 4), (1, 4), (1, 4), (1, 4));
    match chamber_of(&alpha) {
        Err(FixedPointError::OnWall(0, _)) => {}
        other => panic!("expected the sum wall, got {other:?}"),
    }
    // Equal pair sums hit a pair-balance wall even when the total is generic.
    let alpha = weights((1, 8), (1, 8), (1, 5), (1, 5));
    assert!(matches!(chamber_of(&alpha), Err(FixedPointError::OnWall(_, _))));
}

#[test]
fn wall_values_oracle() {
    // α = (1/8, 1/6, 1/5, 1/4): Σα = 89/120.
    let a = generic_weights().alpha;
    assert_eq!(wall_value(&a, 0), rat(-31, 120));
    assert_eq!(wall_value(&a, 1), rat(59, 120)); // Σ − 2α₁
    assert_eq!(wall_value(&a, 4), rat(29, 120)); // Σ − 2α₄
    assert_eq!(wall_value(&a, 5), rat(-61, 120));
    assert_eq!(wall_value(&a, 9), rat(-19, 120)); // α₁+α₂ − α₃−α₄
}

#[test]
fn grid_path_matches_exact_path() {
    let n = 12i64;
    for k0 in 1..6 {
        for k1 in 1..6 {
            for k2 in 1..6 {
                for k3 in 1..6 {
                    let grid = chamber_of_grid([k0, k1, k2, k3], n);
                    let alpha =
                        WeightVector::new([rat(k0, n), rat(k1, n), rat(k2, n), rat(k3, n)])
                            .unwrap();
                    match chamber_of(&alpha) {
                        Ok(c) => assert_eq!(grid, Some(c)),
                        Err(_) => assert_eq!(grid, None),
                    }
                }
            }
        }
    }
}

#[test]
fn census_on_grid_40_finds_24_chambers() {
    let census = chamber_census(40);
    assert_eq!(census.len(), 24);
    let total: u64 = census.iter().map(|(_, c)| c).sum();
    assert!(total > 0 && total < 19u64.pow(4));
}

#[test]
fn stable_chamber_example() {
    let alpha = generic_weights();
    let divisor = MarkedDivisor::standard();
    let fc = enumerate_fixed_components(&alpha, &divisor).unwrap();
    assert_eq!(fc.central, CentralSphere::StableBundle);
    assert_eq!(fc.exteriors.len(), 4);
    // Σα < 1: degree-0 exterior with split (−3, −1).
    assert_eq!(fc.exteriors[0].subset, Vec::<usize>::new());
    assert_eq!(fc.exteriors[0].split, (-3, -1));
    // The heavier member of each complementary pair: {1,4}, {2,4}, {3,4}
    // in 1-based labels.
    let subsets: Vec<Vec<usize>> =
        fc.exteriors[1..].iter().map(|d| d.subset.clone()).collect();
    let mut sorted = subsets.clone();
    sorted.sort();
    assert_eq!(sorted, vec![vec![0, 3], vec![1, 3], vec![2, 3]]);
    for ext in &fc.exteriors[1..] {
        assert_eq!(ext.split, (-2, -2));
        assert_eq!(ext.numerator, Poly::one());
    }
}

#[test]
fn degree_one_and_degree_three_central_spheres() {
    let divisor = MarkedDivisor::standard();
    let alpha = weights((2, 5), (1, 20), (1, 20), (3, 40));
    let fc = enumerate_fixed_components(&alpha, &divisor).unwrap();
    assert_eq!(fc.central, CentralSphere::Degree1 { k: 0 });

    let alpha = weights((9, 20), (9, 20), (9, 20), (1, 20));
    let fc = enumerate_fixed_components(&alpha, &divisor).unwrap();
    assert_eq!(fc.central, CentralSphere::Degree3 { k: 3 });
    // Σα > 1: the degree-4 exterior with split (−1, −3).
    assert_eq!(fc.exteriors[0].subset, vec![0, 1, 2, 3]);
    assert_eq!(fc.exteriors[0].split, (-1, -3));
}

#[test]
fn datum_condition_violations_are_reported() {
    let alpha = generic_weights();
    let divisor = MarkedDivisor::standard();
    // Σα < 1, so the full divisor is invalid …
    assert!(matches!(
        fixed_point_datum(&alpha, &divisor, &[0, 1, 2, 3], None),
        Err(FixedPointError::ConditionViolated(_))
    ));
    // … and so is any singleton with Σ_{i≠k}α > α_k.
    assert!(matches!(
        fixed_point_datum(&alpha, &divisor, &[0], None),
        Err(FixedPointError::ConditionViolated(_))
    ));
    // The lighter member of a complementary pair is invalid.
    assert!(matches!(
        fixed_point_datum(&alpha, &divisor, &[0, 1], None),
        Err(FixedPointError::ConditionViolated(_))
    ));
}

#[test]
fn odd_degree_numerator_tracks_the_zero_parameter() {
    let divisor = MarkedDivisor::standard();
    let alpha = weights((2, 5), (1, 20), (1, 20), (3, 40));
    // Default zero at the origin: P = z.
    let d = fixed_point_datum(&alpha, &divisor, &[0], None).unwrap();
    assert_eq!(d.numerator, Poly::new(vec![Gaussian::zero(), Gaussian::one()]));
    assert_eq!(d.split, (-3, -1));
    // Zero at infinity: constant numerator.
    let d = fixed_point_datum(
        &alpha,
        &divisor,
        &[0],
        Some((Gaussian::one(), Gaussian::zero())),
    )
    .unwrap();
    assert_eq!(d.numerator.degree(), Some(0));
}

#[test]
fn line_bundle_degrees_and_weights_are_complementary() {
    let alpha = generic_weights();
    let divisor = MarkedDivisor::standard();
    for subset in [vec![], vec![0usize, 3], vec![1, 3], vec![2, 3]] {
        let d = fixed_point_datum(&alpha, &divisor, &subset, None).unwrap();
        assert_eq!(d.l1.degree + d.l2.degree, -4);
        for i in 0..4 {
            assert_eq!(&d.l1.weights[i] + &d.l2.weights[i], rat(1, 1));
        }
        // par_deg L₁(β₁) + par_deg L₂(β₂) = par_deg E(α) = 0, with L₂ strictly
        // destabilized.
        let p1 = d.l1.par_degree();
        let p2 = d.l2.par_degree();
        assert!(p2 < Rat::zero());
        assert_eq!(p1 + p2, Rat::zero());
    }
}

#[test]
fn every_emitted_datum_is_a_stable_higgs_field() {
    let divisor = MarkedDivisor::standard();
    for alpha in [
        generic_weights(),
        weights((2, 5), (1, 20), (1, 20), (3, 40)),
        weights((9, 20), (9, 20), (9, 20), (1, 20)),
        weights((7, 40), (9, 40), (11, 40), (19, 40)),
    ] {
        let fc = enumerate_fixed_components(&alpha, &divisor).unwrap();
        for ext in &fc.exteriors {
            let conn = ext.to_higgs();
            let report = conn.is_stable().unwrap();
            assert!(report.stable, "exterior datum {:?} must be stable", ext.subset);
            // The nilpotent field has exactly one invariant line: L₂.
            match conn.invariant_line_subbundles().unwrap() {
                InvariantLines::List(lines) => {
                    assert_eq!(lines.len(), 1);
                    assert!(lines[0].0.u.is_zero());
                }
                InvariantLines::AllSubbundles => panic!("phi0 must be nonzero"),
            }
        }
    }
}

#[test]
fn central_sphere_data_are_stable_where_defined() {
    let divisor = MarkedDivisor::standard();
    let alpha = weights((2, 5), (1, 20), (1, 20), (3, 40));
    for u in [
        None,
        Some((Gaussian::one(), Gaussian::one())),
        Some((Gaussian::one(), Gaussian::zero())),
        Some((Gaussian::i(), Gaussian::one())),
    ] {
        let d = fixed_point_datum(&alpha, &divisor, &[0], u).unwrap();
        assert!(d.to_higgs().is_stable().unwrap().stable);
    }
}

#[test]
fn sixteen_chambers_carry_the_stable_bundle_central_type() {
    // One representative per chamber on the grid with denominator 40; exactly
    // 16 of the 24 chambers have the stable-bundle central sphere.
    let n = 40i64;
    let mut reps = std::collections::BTreeMap::new();
    for k0 in 1..20 {
        for k1 in 1..20 {
            for k2 in 1..20 {
                for k3 in 1..20 {
                    if let Some(c) = chamber_of_grid([k0, k1, k2, k3], n) {
                        reps.entry(c).or_insert([k0, k1, k2, k3]);
                    }
                }
            }
        }
    }
    assert_eq!(reps.len(), 24);
    let divisor = MarkedDivisor::standard();
    let mut stable_count = 0;
    for k in reps.values() {
        let alpha =
            WeightVector::new(std::array::from_fn(|i| rat(k[i], n))).unwrap();
        let fc = enumerate_fixed_components(&alpha, &divisor).unwrap();
        assert_eq!(fc.exteriors.len(), 4);
        if fc.central == CentralSphere::StableBundle {
            stable_count += 1;
        }
    }
    assert_eq!(stable_count, 16);
}
