//! The wall-and-chamber structure of the weight hypercube (0, 1/2)⁴ and the
//! per-chamber enumeration of C*-fixed components of the nilpotent cone.
//!
//! Twelve walls cut the hypercube into 24 realizable chambers:
//! Σα − 1; the four Σ_{i≠k}α − α_k; the four Σ_{i≠k}α − α_k − 1; and the
//! three pair-balance differences α_i + α_j − α_k − α_l over complementary
//! 2-subsets.
//!
//! A fixed component is labeled by a subdivisor D_I: the Hodge bundle is
//! O(d−3)⊕O(−1−d) with d = ⌊deg(D_I)/2⌋, the Higgs field is the single
//! lower-left entry φ₀ = P(z)/Π_{i∈I}(z−pᵢ) with deg P ≤ deg(D_I) − 2d, the
//! flags sit on the sub line L₂ exactly over D_I, and validity is the single
//! inequality par_deg(L₂(β₂)) < 0.

use crate::exact_algebra::{rat_int, Gaussian, Poly, Rat, Rf};
use crate::higgs_lambda::LambdaConnection;
use crate::parabolic_core::{
    Flag, MarkedDivisor, ParabolicLineBundle, ParabolicRank2Bundle, WeightVector,
};
use num_traits::{One, Zero};

pub const WALL_COUNT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixedPointError {
    #[error("weight vector lies on wall {0}: {1}")]
    OnWall(usize, String),
    #[error("condition violated for D_I: {0}")]
    ConditionViolated(String),
}

/// Human-readable equation of wall w.
pub fn wall_description(w: usize) -> String {
    match w {
        0 => "a1+a2+a3+a4 - 1 = 0".to_string(),
        1..=4 => {
            let k = w; // 1-based point index
            format!("sum_(i!={k}) a_i - a{k} = 0")
        }
        5..=8 => {
            let k = w - 4;
            format!("sum_(i!={k}) a_i - a{k} - 1 = 0")
        }
        9..=11 => {
            let pairs = [("a1+a2", "a3+a4"), ("a1+a3", "a2+a4"), ("a1+a4", "a2+a3")];
            let (l, r) = pairs[w - 9];
            format!("{l} - ({r}) = 0")
        }
        _ => panic!("wall index out of range"),
    }
}

/// The defining linear form of wall w evaluated at α.
pub fn wall_value(alpha: &[Rat; 4], w: usize) -> Rat {
    let total: Rat = alpha.iter().sum();
    match w {
        0 => total - Rat::one(),
        1..=4 => &total - &alpha[w - 1] - &alpha[w - 1],
        5..=8 => &total - &alpha[w - 5] - &alpha[w - 5] - Rat::one(),
        9 => &alpha[0] + &alpha[1] - &alpha[2] - &alpha[3],
        10 => &alpha[0] + &alpha[2] - &alpha[1] - &alpha[3],
        11 => &alpha[0] + &alpha[3] - &alpha[1] - &alpha[2],
        _ => panic!("wall index out of range"),
    }
}

/// The sign vector of a generic weight vector over the 12 walls.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chamber {
    pub signs: [i8; WALL_COUNT],
}

pub fn chamber_of(alpha: &WeightVector) -> Result<Chamber, FixedPointError> {
    let mut signs = [0i8; WALL_COUNT];
    for w in 0..WALL_COUNT {
        let v = wall_value(&alpha.alpha, w);
        if v.is_zero() {
            return Err(FixedPointError::OnWall(w, wall_description(w)));
        }
        signs[w] = if v > Rat::zero() { 1 } else { -1 };
    }
    Ok(Chamber { signs })
}

/// Integer fast path for grid weights αᵢ = kᵢ/n: all wall signs are signs of
/// integer linear forms. Returns None on a wall.
pub fn chamber_of_grid(k: [i64; 4], n: i64) -> Option<Chamber> {
    let total: i64 = k.iter().sum();
    let mut signs = [0i8; WALL_COUNT];
    let vals: [i64; 12] = [
        total - n,
        total - 2 * k[0],
        total - 2 * k[1],
        total - 2 * k[2],
        total - 2 * k[3],
        total - 2 * k[0] - n,
        total - 2 * k[1] - n,
        total - 2 * k[2] - n,
        total - 2 * k[3] - n,
        k[0] + k[1] - k[2] - k[3],
        k[0] + k[2] - k[1] - k[3],
        k[0] + k[3] - k[1] - k[2],
    ];
    for (w, v) in vals.iter().enumerate() {
        if *v == 0 {
            return None;
        }
        signs[w] = if *v > 0 { 1 } else { -1 };
    }
    Some(Chamber { signs })
}

/// Census of the chambers realized by the grid αᵢ = kᵢ/n, kᵢ ∈ 1..n/2,
/// points on walls excluded. Returns the distinct sign vectors with their
/// grid-point counts, sorted by sign vector.
pub fn chamber_census(n: i64) -> Vec<(Chamber, u64)> {
    assert!(n >= 4);
    let mut map: std::collections::BTreeMap<Chamber, u64> = std::collections::BTreeMap::new();
    let half = (n - 1) / 2; // largest k with k/n < 1/2
    for k0 in 1..=half {
        for k1 in 1..=half {
            for k2 in 1..=half {
                for k3 in 1..=half {
                    if let Some(c) = chamber_of_grid([k0, k1, k2, k3], n) {
                        *map.entry(c).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    map.into_iter().collect()
}

/// A C*-fixed Hodge bundle labeled by the subdivisor D_I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    /// Indices of the marked points in D_I (0-based, ascending).
    pub subset: Vec<usize>,
    /// d = ⌊deg(D_I)/2⌋.
    pub d: i64,
    /// Split type (d−3, −1−d) of the underlying bundle L₁⊕L₂.
    pub split: (i64, i64),
    /// Numerator P of φ₀ = P/Π_{i∈I}(z−pᵢ); deg P ≤ deg(D_I) − 2d.
    pub numerator: Poly,
    pub divisor: MarkedDivisor,
    pub alpha: [Rat; 4],
    /// L₁(β₁) = O(d−3) with weight 1−αᵢ off D_I, αᵢ on it.
    pub l1: ParabolicLineBundle,
    /// L₂(β₂) = O(−1−d) with the complementary weights.
    pub l2: ParabolicLineBundle,
}

impl FixedPointDatum {
    /// The flags of the ambient parabolic bundle: L₂ over D_I, L₁ otherwise.
    pub fn flags(&self) -> [Flag; 4] {
        std::array::from_fn(|i| {
            if self.subset.contains(&i) {
                Flag::second_summand()
            } else {
                Flag::first_summand()
            }
        })
    }

    /// The datum as a strongly parabolic Higgs field [[0,0],[φ₀,0]].
    pub fn to_higgs(&self) -> LambdaConnection {
        let bundle = ParabolicRank2Bundle::new(
            self.split,
            self.divisor.clone(),
            self.flags(),
            WeightVector::new(self.alpha.clone()).expect("weights validated at construction"),
        );
        let phi0 = Rf::new(
            self.numerator.clone(),
            self.divisor.vanishing_poly_of(&self.subset),
        );
        LambdaConnection::higgs(
            bundle,
            [[Rf::zero(), Rf::zero()], [phi0, Rf::zero()]],
        )
        .expect("fixed-point data define valid Higgs fields")
    }
}

/// The central component of the nilpotent cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralSphere {
    /// All Σ_{i≠k}α − α_k lie in (0,1): the stable-bundle locus.
    StableBundle,
    /// Σ_{i≠k}α − α_k < 0: a sphere of deg-1 data D_I = {p_k},
    /// parameterized by the zero of φ₀ in P(H⁰(O(1))).
    Degree1 { k: usize },
    /// Σ_{i≠k}α − α_k > 1: a sphere of deg-3 data D_I = D − p_k.
    Degree3 { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComponents {
    /// The four exterior fixed points: one of degree 0 or 4, and one from
    /// each complementary 2-subset pair.
    pub exteriors: Vec<FixedPointDatum>,
    pub central: CentralSphere,
}

/// par_deg L₂(β₂) = (−1−d) + deg(D_I) − Σ_I αᵢ + Σ_{I^c} αᵢ; validity of the
/// datum is exactly this being negative.
fn l2_par_degree(alpha: &[Rat; 4], subset: &[usize], d: i64) -> Rat {
    let mut v = rat_int(-1 - d + subset.len() as i64);
    for i in 0..4 {
        if subset.contains(&i) {
            v = v - &alpha[i];
        } else {
            v = v + &alpha[i];
        }
    }
    v
}

/// Build the fixed-point datum for a subdivisor D_I. For odd deg(D_I) the
/// homogeneous pair u = (u₀ : u₁) locates the zero of φ₀ (P = u₁z − u₀,
/// u = (1:0) placing it at infinity); it defaults to (0:1). The Table
/// condition par_deg L₂(β₂) < 0 is checked.
pub fn fixed_point_datum(
    alpha: &WeightVector,
    divisor: &MarkedDivisor,
    subset: &[usize],
    u: Option<(Gaussian, Gaussian)>,
) -> Result<FixedPointDatum, FixedPointError> {
    let mut subset: Vec<usize> = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    assert!(subset.iter().all(|&i| i < 4), "subset indices must be in 0..4");
    let deg = subset.len() as i64;
    let d = deg.div_euclid(2);
    if l2_par_degree(&alpha.alpha, &subset, d) >= Rat::zero() {
        return Err(FixedPointError::ConditionViolated(format!(
            "par_deg L2(b2) = -1-{d}+{deg} - sum_I a + sum_I^c a must be negative"
        )));
    }
    let numerator = if deg % 2 == 0 {
        Poly::one()
    } else {
        let (u0, u1) = u.unwrap_or((Gaussian::zero(), Gaussian::one()));
        assert!(
            !(u0.is_zero() && u1.is_zero()),
            "the zero of phi0 must be a point of P^1"
        );
        Poly::new(vec![-u0, u1])
    };
    let b1: [Rat; 4] = std::array::from_fn(|i| {
        if subset.contains(&i) {
            alpha.alpha[i].clone()
        } else {
            Rat::one() - &alpha.alpha[i]
        }
    });
    let b2: [Rat; 4] = std::array::from_fn(|i| {
        if subset.contains(&i) {
            Rat::one() - &alpha.alpha[i]
        } else {
            alpha.alpha[i].clone()
        }
    });
    Ok(FixedPointDatum {
        subset,
        d,
        split: (d - 3, -1 - d),
        numerator,
        divisor: divisor.clone(),
        alpha: alpha.alpha.clone(),
        l1: ParabolicLineBundle::new(d - 3, b1),
        l2: ParabolicLineBundle::new(-1 - d, b2),
    })
}

/// Enumerate the fixed components for a generic weight vector: the exterior
/// point of degree 0 or 4, the three exterior points of degree 2 (one per
/// complementary pair), and the central-sphere descriptor.
pub fn enumerate_fixed_components(
    alpha: &WeightVector,
    divisor: &MarkedDivisor,
) -> Result<FixedComponents, FixedPointError> {
    // Genericity first: every wall sign must be determined.
    chamber_of(alpha)?;
    let mut exteriors = Vec::new();
    // Degree 0 when Σα < 1, degree 4 when Σα > 1.
    let full: Vec<usize> = (0..4).collect();
    let empty: Vec<usize> = Vec::new();
    let deg04 = if wall_value(&alpha.alpha, 0) < Rat::zero() { &empty } else { &full };
    exteriors.push(fixed_point_datum(alpha, divisor, deg04, None)?);
    // One member of each complementary 2-subset pair: the one with the
    // larger weight sum.
    for i in 1..4usize {
        let a = vec![0usize, i];
        let b: Vec<usize> = (1..4).filter(|&k| k != i).collect();
        let pick = if &alpha.alpha[0] + &alpha.alpha[i]
            > b.iter().map(|&k| alpha.alpha[k].clone()).sum::<Rat>()
        {
            a
        } else {
            b
        };
        exteriors.push(fixed_point_datum(alpha, divisor, &pick, None)?);
    }
    // Central descriptor from the walls Σ_{i≠k}α − α_k.
    let mut central = CentralSphere::StableBundle;
    for k in 0..4 {
        let v = wall_value(&alpha.alpha, 1 + k);
        if v < Rat::zero() {
            central = CentralSphere::Degree1 { k };
            break;
        }
        if &v - &Rat::one() > Rat::zero() {
            central = CentralSphere::Degree3 { k };
            break;
        }
    }
    Ok(FixedComponents { exteriors, central })
}
