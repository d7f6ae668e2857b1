//! Parabolic sheaf data on P¹ with four marked points: divisors, weighted
//! flags, parabolic degrees, determinant normalization, parabolic map
//! predicates, and the moduli dimension formulas.

use crate::exact_algebra::{rat_int, Gaussian, Poly, Rat, Rf};
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParabolicError {
    #[error("marked points must be pairwise distinct")]
    PointsNotDistinct,
    #[error("weight {0} outside the open interval (0, 1/2)")]
    WeightOutOfRange(String),
}

/// The effective divisor D = p₁+p₂+p₃+p₄, all points in the affine chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDivisor {
    points: [Gaussian; 4],
}

impl MarkedDivisor {
    pub fn new(points: [Gaussian; 4]) -> Result<Self, ParabolicError> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if points[i] == points[j] {
                    return Err(ParabolicError::PointsNotDistinct);
                }
            }
        }
        Ok(MarkedDivisor { points })
    }

    /// The standard divisor 0 + 1 + 2 + 3.
    pub fn standard() -> Self {
        MarkedDivisor::new([
            Gaussian::from_int(0),
            Gaussian::from_int(1),
            Gaussian::from_int(2),
            Gaussian::from_int(3),
        ])
        .unwrap()
    }

    pub fn points(&self) -> &[Gaussian; 4] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Gaussian {
        &self.points[i]
    }

    /// Π (z − pᵢ)
    pub fn vanishing_poly(&self) -> Poly {
        Poly::from_roots(&self.points)
    }

    /// Π over a subset of indices.
    pub fn vanishing_poly_of(&self, indices: &[usize]) -> Poly {
        let pts: Vec<Gaussian> = indices.iter().map(|&i| self.points[i].clone()).collect();
        Poly::from_roots(&pts)
    }
}

/// α ∈ (0, 1/2)⁴.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub alpha: [Rat; 4],
}

impl WeightVector {
    pub fn new(alpha: [Rat; 4]) -> Result<Self, ParabolicError> {
        let half = crate::exact_algebra::rat(1, 2);
        for a in &alpha {
            if !a.is_positive() || *a >= half {
                return Err(ParabolicError::WeightOutOfRange(a.to_string()));
            }
        }
        Ok(WeightVector { alpha })
    }

    pub fn sum(&self) -> Rat {
        self.alpha.iter().sum()
    }
}

/// A projective direction [a : b] in the fiber of O(a₁)⊕O(b₁) in the split
/// frame over the affine chart.
#[derive(Debug, Clone, Eq)]
pub struct Flag {
    pub a: Gaussian,
    pub b: Gaussian,
}

impl Flag {
    pub fn new(a: Gaussian, b: Gaussian) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "flag direction must be nonzero");
        Flag { a, b }
    }

    pub fn first_summand() -> Self {
        Flag::new(Gaussian::one(), Gaussian::zero())
    }

    pub fn second_summand() -> Self {
        Flag::new(Gaussian::zero(), Gaussian::one())
    }

    /// Scale so that the last nonzero coordinate is 1.
    pub fn normalized(&self) -> Flag {
        if self.b.is_zero() {
            Flag { a: Gaussian::one(), b: Gaussian::zero() }
        } else {
            Flag { a: &self.a / &self.b, b: Gaussian::one() }
        }
    }
}

impl PartialEq for Flag {
    fn eq(&self, other: &Self) -> bool {
        &self.a * &other.b == &self.b * &other.a
    }
}

/// A rank-2 split bundle O(a)⊕O(b) with a+b = −4, full flags and weights
/// (αᵢ, 1−αᵢ) at the four marked points; the flag line carries 1−αᵢ. With
/// this normalization the parabolic determinant is trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicRank2Bundle {
    pub split: (i64, i64),
    pub divisor: MarkedDivisor,
    pub flags: [Flag; 4],
    pub alpha: [Rat; 4],
}

impl ParabolicRank2Bundle {
    pub fn new(
        split: (i64, i64),
        divisor: MarkedDivisor,
        flags: [Flag; 4],
        weights: WeightVector,
    ) -> Self {
        assert_eq!(split.0 + split.1, -4, "determinant normalization requires a+b = -4");
        ParabolicRank2Bundle { split, divisor, flags, alpha: weights.alpha }
    }

    pub fn weight_vector(&self) -> WeightVector {
        WeightVector { alpha: self.alpha.clone() }
    }

    /// deg(E) + Σₚ ||α(p)|| = a + b + 4.
    pub fn par_degree(&self) -> Rat {
        rat_int(self.split.0 + self.split.1 + 4)
    }
}

/// A parabolic line bundle: integer degree plus one weight in [0,1) per
/// marked point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicLineBundle {
    pub degree: i64,
    pub weights: [Rat; 4],
}

impl ParabolicLineBundle {
    pub fn new(degree: i64, weights: [Rat; 4]) -> Self {
        for w in &weights {
            assert!(!w.is_negative() && *w < Rat::one(), "line bundle weight outside [0,1)");
        }
        ParabolicLineBundle { degree, weights }
    }

    pub fn par_degree(&self) -> Rat {
        rat_int(self.degree) + self.weights.iter().sum::<Rat>()
    }
}

use num_traits::One;

/// Floor and fractional part of the total weight ||α(p)|| at one point,
/// as used to normalize determinants of parabolic tensor products.
pub fn det_weight_normalize(weights: &[Rat]) -> (i64, Rat) {
    let total: Rat = weights.iter().sum();
    let fl = total.floor();
    let frac = &total - &fl;
    let fl_int: i64 = fl.to_integer().try_into().expect("weight sum floor fits in i64");
    (fl_int, frac)
}

/// Induced weight at marked point i of a line subbundle: 1−αᵢ if the line
/// passes through the flag, αᵢ otherwise.
pub fn induced_sub_weight(bundle: &ParabolicRank2Bundle, i: usize, line_dir: &Flag) -> Rat {
    if line_dir == &bundle.flags[i] {
        Rat::one() - &bundle.alpha[i]
    } else {
        bundle.alpha[i].clone()
    }
}

/// A map between parabolic line bundles, given as a rational section of the
/// Hom line, is parabolic iff at every marked point with source weight
/// strictly greater than target weight the section vanishes.
pub fn is_parabolic_map(
    f: &Rf,
    src: &ParabolicLineBundle,
    tgt: &ParabolicLineBundle,
    divisor: &MarkedDivisor,
) -> bool {
    parabolic_predicate(f, src, tgt, divisor, false)
}

/// Strongly parabolic: vanishing already required at equal weights.
pub fn is_strongly_parabolic_map(
    f: &Rf,
    src: &ParabolicLineBundle,
    tgt: &ParabolicLineBundle,
    divisor: &MarkedDivisor,
) -> bool {
    parabolic_predicate(f, src, tgt, divisor, true)
}

fn parabolic_predicate(
    f: &Rf,
    src: &ParabolicLineBundle,
    tgt: &ParabolicLineBundle,
    divisor: &MarkedDivisor,
    strong: bool,
) -> bool {
    if f.is_zero() {
        return true;
    }
    for i in 0..4 {
        let needs_vanishing = if strong {
            src.weights[i] >= tgt.weights[i]
        } else {
            src.weights[i] > tgt.weights[i]
        };
        if needs_vanishing && f.ord_at(divisor.point(i)).unwrap() < 1 {
            return false;
        }
    }
    true
}

/// The dimension formulas for the full-flag moduli spaces over a genus-g
/// curve with d marked points and rank n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliDimensions {
    /// Moduli of stable parabolic bundles.
    pub dim_n: i64,
    /// Moduli of parabolic Higgs bundles.
    pub dim_p0: i64,
    /// Moduli of strongly parabolic Higgs bundles (cotangent to the above).
    pub dim_sp0: i64,
    /// An upward Białynicki-Birula stratum inside the strongly parabolic
    /// moduli space (half-dimensional there).
    pub dim_bb_spar_stratum: i64,
}

pub fn moduli_dimensions(n: i64, g: i64, d: i64) -> ModuliDimensions {
    assert!(n >= 2 && d >= 0);
    let dim_g = n * n - 1;
    // Full flags: each Levi has dimension n−1, each G/P is the full flag
    // variety of dimension n(n−1)/2.
    let dim_levi = n - 1;
    let dim_gp = n * (n - 1) / 2;
    let dim_n = (g - 1) * dim_g + d * dim_gp;
    let dim_p0 = dim_g * (2 * g - 2 + d);
    let dim_sp0 = 2 * dim_n;
    debug_assert_eq!(dim_p0, dim_sp0 + d * dim_levi);
    let dim_bb_spar_stratum = (g - 1) * dim_g + d * dim_gp;
    ModuliDimensions { dim_n, dim_p0, dim_sp0, dim_bb_spar_stratum }
}

/// A saturated line subbundle of O(a)⊕O(b), recorded by a coprime pair of
/// polynomials (u, v) spanning the fiber direction [u(z) : v(z)]. The
/// saturated degree is min(a − deg u, b − deg v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSubbundle {
    pub u: Poly,
    pub v: Poly,
    pub degree: i64,
}

impl LineSubbundle {
    /// From a not-necessarily-reduced pair of rational sections.
    pub fn from_rational_pair(split: (i64, i64), u: &Rf, v: &Rf) -> Self {
        assert!(!(u.is_zero() && v.is_zero()));
        // Clear denominators and divide by the gcd.
        let un = u.num();
        let ud = u.den();
        let vn = v.num();
        let vd = v.den();
        let pu = un * vd;
        let pv = vn * ud;
        Self::from_poly_pair(split, pu, pv)
    }

    pub fn from_poly_pair(split: (i64, i64), u: Poly, v: Poly) -> Self {
        assert!(!(u.is_zero() && v.is_zero()));
        let (u, v) = if u.is_zero() {
            // gcd(0, v) = v: the direction is constantly [0 : 1].
            (Poly::zero(), Poly::one())
        } else if v.is_zero() {
            (Poly::one(), Poly::zero())
        } else {
            let g = u.gcd(&v);
            let u = u.div_rem(&g).0;
            let v = v.div_rem(&g).0;
            let scale = if v.is_zero() { u.leading().inv() } else { v.leading().inv() };
            (u.scale(&scale), v.scale(&scale))
        };
        let deg_u = u.degree().map(|d| split.0 - d as i64);
        let deg_v = v.degree().map(|d| split.1 - d as i64);
        let degree = match (deg_u, deg_v) {
            (Some(x), Some(y)) => x.min(y),
            (Some(x), None) => x,
            (None, Some(y)) => y,
            (None, None) => unreachable!(),
        };
        LineSubbundle { u, v, degree }
    }

    pub fn first_summand(split: (i64, i64)) -> Self {
        LineSubbundle { u: Poly::one(), v: Poly::zero(), degree: split.0 }
    }

    pub fn second_summand(split: (i64, i64)) -> Self {
        LineSubbundle { u: Poly::zero(), v: Poly::one(), degree: split.1 }
    }

    pub fn direction_at(&self, p: &Gaussian) -> Flag {
        Flag::new(self.u.eval(p), self.v.eval(p))
    }

    pub fn passes_through_flag(&self, bundle: &ParabolicRank2Bundle, i: usize) -> bool {
        self.direction_at(bundle.divisor.point(i)) == bundle.flags[i]
    }

    pub fn induced_weights(&self, bundle: &ParabolicRank2Bundle) -> [Rat; 4] {
        std::array::from_fn(|i| {
            induced_sub_weight(bundle, i, &self.direction_at(bundle.divisor.point(i)))
        })
    }

    pub fn par_degree(&self, bundle: &ParabolicRank2Bundle) -> Rat {
        rat_int(self.degree) + self.induced_weights(bundle).iter().sum::<Rat>()
    }

    pub fn to_parabolic_line_bundle(&self, bundle: &ParabolicRank2Bundle) -> ParabolicLineBundle {
        ParabolicLineBundle::new(self.degree, self.induced_weights(bundle))
    }

    /// The quotient E/L as a parabolic line bundle: complementary degree and
    /// weights.
    pub fn quotient_line_bundle(&self, bundle: &ParabolicRank2Bundle) -> ParabolicLineBundle {
        let weights = std::array::from_fn(|i| {
            let w = induced_sub_weight(bundle, i, &self.direction_at(bundle.divisor.point(i)));
            if w == bundle.alpha[i] {
                Rat::one() - &bundle.alpha[i]
            } else {
                bundle.alpha[i].clone()
            }
        });
        ParabolicLineBundle::new(-4 - self.degree, weights)
    }

    /// Deterministic tie-break key: lexicographic on the coefficients of
    /// (v, u) in the canonical scaling.
    pub fn tie_break_key(&self) -> (Vec<Gaussian>, Vec<Gaussian>) {
        (self.v.coeffs().to_vec(), self.u.coeffs().to_vec())
    }
}
