//! Exact cone-angle arithmetic for the conical hyperbolic metric attached
//! to exterior fixed points, and the Gauss–Bonnet positivity check that is
//! equivalent to the stability inequality.
//!
//! Angles are stored as exact rational multiples of π; the curvature
//! constant is fixed at −4. The equivalence target is the parabolic degree
//! of the "squared" line bundle: with d = deg(D_I)/2 taken as a half-integer
//! when deg(D_I) is odd, 2·par_deg(L₁(β₁)) = deg + Σ weights of the bundle
//! of degree deg(D_I) − 6 + (number of points off D_I) = −2 with weights
//! 2αᵢ on D_I and 1−2αᵢ off it.

use crate::exact_algebra::{rat, rat_int, Rat};
use crate::parabolic_core::{ParabolicLineBundle, WeightVector};
use num_traits::{One, Zero};

/// The fixed curvature of the conical metrics considered here.
pub const CURVATURE: i64 = -4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("nonpositive Gauss\u{2013}Bonnet area: {0}")]
    NegativeArea(String),
}

/// Cone angles at the four marked points as rational multiples of π, each
/// in (0, 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeAngleProfile {
    pub angles_over_pi: [Rat; 4],
}

/// θᵢ = 2π(1−2αᵢ) on D_I and 4παᵢ off it.
pub fn cone_angles(alpha: &WeightVector, subset: &[usize]) -> ConeAngleProfile {
    let angles_over_pi = std::array::from_fn(|i| {
        if subset.contains(&i) {
            rat_int(2) * (Rat::one() - rat_int(2) * &alpha.alpha[i])
        } else {
            rat_int(4) * &alpha.alpha[i]
        }
    });
    ConeAngleProfile { angles_over_pi }
}

/// Gauss–Bonnet area for curvature −4 with cone deficits, as a rational
/// multiple of π: Area/π = (Σ(2 − θᵢ/π) − 4)/4. Errors when ≤ 0, quoting
/// the violated inequality.
pub fn hyperbolic_area(profile: &ConeAngleProfile) -> Result<Rat, ConeError> {
    let deficit: Rat = profile
        .angles_over_pi
        .iter()
        .map(|t| rat_int(2) - t)
        .sum();
    let area = (&deficit - &rat_int(4)) * rat(1, 4);
    if area > Rat::zero() {
        Ok(area)
    } else {
        Err(ConeError::NegativeArea(format!(
            "sum of cone deficits {deficit}*pi must exceed 4*pi"
        )))
    }
}

/// The square of the fixed-point line bundle L₁(β₁), defined for every
/// subset (including odd degree, where d = deg(D_I)/2 is a half-integer):
/// degree −2 with weight 2αᵢ at points of D_I and 1−2αᵢ elsewhere. Its
/// parabolic degree equals 2·par_deg(L₁(β₁)) and also deg K(γ) for the
/// cone-angle profile of the same (α, D_I).
pub fn squared_line_bundle(alpha: &WeightVector, subset: &[usize]) -> ParabolicLineBundle {
    let weights = std::array::from_fn(|i| {
        if subset.contains(&i) {
            rat_int(2) * &alpha.alpha[i]
        } else {
            Rat::one() - rat_int(2) * &alpha.alpha[i]
        }
    });
    ParabolicLineBundle::new(-2, weights)
}
