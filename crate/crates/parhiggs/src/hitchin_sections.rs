//! The fixed-mass quadratic-differential base B(μ), the twisted reference
//! section, and the four-case construction of the per-component sections
//! s_I^μ landing in the moduli space of stable parabolic Higgs bundles,
//! plus the parabolic-oper structural check.
//!
//! Conventions. Quadratic differentials are stored as rational functions
//! q = N/Π² (deg N ≤ 4) with Π the vanishing polynomial of the divisor; the
//! leading Laurent coefficient of q at pᵢ is μᵢ². One-form sections with
//! simple poles on the divisor are P/Π with deg P ≤ 2; their four residues
//! sum to zero, so prescribing three determines the section.

use crate::exact_algebra::{
    kernel_basis, AlgebraError, Gaussian, Poly, Rf, section_with_residues,
};
use crate::fixed_points::{fixed_point_datum, FixedPointError};
use crate::higgs_lambda::{HiggsError, LambdaConnection};
use crate::parabolic_core::{
    Flag, LineSubbundle, MarkedDivisor, ParabolicRank2Bundle, WeightVector,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HitchinError {
    #[error("section precondition violated: {0}")]
    ConditionViolated(String),
    #[error("degenerate residue data: {0}")]
    DegenerateResidue(String),
    #[error("a required eigenvalue square root does not exist over Q(i)")]
    EigenvalueNotInField,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Higgs(#[from] HiggsError),
}

impl From<FixedPointError> for HitchinError {
    fn from(e: FixedPointError) -> Self {
        HitchinError::ConditionViolated(e.to_string())
    }
}

fn rf_const(c: Gaussian) -> Rf {
    Rf::new(Poly::new(vec![c]), Poly::one())
}

/// The affine line of quadratic differentials with prescribed leading
/// coefficients: every q0 + t·r has leading Laurent coefficient μᵢ² at pᵢ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticBase {
    pub q0: Rf,
    pub r: Rf,
}

impl QuadraticBase {
    pub fn at(&self, t: &Gaussian) -> Rf {
        &self.q0 + &(&rf_const(t.clone()) * &self.r)
    }
}

/// Lagrange interpolation: the unique polynomial of degree < points.len()
/// through the given (point, value) pairs.
fn lagrange(points: &[Gaussian], values: &[Gaussian]) -> Poly {
    assert_eq!(points.len(), values.len());
    let mut out = Poly::zero();
    for (i, (p, v)) in points.iter().zip(values).enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut num = Poly::one();
        let mut den = Gaussian::one();
        for (j, pj) in points.iter().enumerate() {
            if j != i {
                num = &num * &Poly::linear(pj);
                den = &den * &(p - pj);
            }
        }
        out = &out + &num.scale(&(v * &den.inv()));
    }
    out
}

/// The base point q0 = N0/Π² (deg N0 ≤ 3, N0(pᵢ) = μᵢ²Π′(pᵢ)²) and the
/// fiber direction r = 1/Π.
pub fn basis_b_mu(mu: &[Gaussian; 4], divisor: &MarkedDivisor) -> QuadraticBase {
    let pi = divisor.vanishing_poly();
    let dpi = pi.derivative();
    let points: Vec<Gaussian> = (0..4).map(|i| divisor.point(i).clone()).collect();
    let values: Vec<Gaussian> = (0..4)
        .map(|i| {
            let d = dpi.eval(&points[i]);
            &(&mu[i] * &mu[i]) * &(&d * &d)
        })
        .collect();
    let n0 = lagrange(&points, &values);
    QuadraticBase {
        q0: Rf::new(n0, &pi * &pi),
        r: Rf::new(Poly::one(), pi),
    }
}

/// The reference section over the full base, in the frame O(−1)⊕O(−3):
/// [[0, N/Π], [1/Π, 0]] where q = N/Π². Errors if q has a pole worse than
/// double order on the divisor or any pole off it.
pub fn s_kd_matrix(q: &Rf, divisor: &MarkedDivisor) -> Result<[[Rf; 2]; 2], HitchinError> {
    let pi = divisor.vanishing_poly();
    let n = q * &Rf::new(&pi * &pi, Poly::one());
    if n.den().degree() != Some(0) || n.num().degree().unwrap_or(0) > 4 {
        return Err(HitchinError::ConditionViolated(
            "q must be a quadratic differential with at most double poles on the divisor"
                .to_string(),
        ));
    }
    Ok([
        [Rf::zero(), Rf::new(n.num().clone(), pi.clone())],
        [Rf::new(Poly::one(), pi), Rf::zero()],
    ])
}

/// Verify q ∈ B(μ): leading Laurent coefficient μᵢ² at every marked point.
fn check_base_membership(
    q: &Rf,
    mu: &[Gaussian; 4],
    divisor: &MarkedDivisor,
) -> Result<(), HitchinError> {
    for i in 0..4 {
        let c = q.double_pole_coeff(divisor.point(i))?;
        if c != &mu[i] * &mu[i] {
            return Err(HitchinError::ConditionViolated(format!(
                "leading coefficient of q at point {} is not mu^2",
                i + 1
            )));
        }
    }
    Ok(())
}

/// A one-form section P/Π (deg P ≤ 2) with the three prescribed residues;
/// the fourth residue is determined by the residue theorem.
fn one_form_with_residues(
    divisor: &MarkedDivisor,
    prescriptions: &[(usize, Gaussian)],
) -> Result<Rf, HitchinError> {
    let poles: Vec<Gaussian> = (0..4).map(|i| divisor.point(i).clone()).collect();
    let residues: Vec<(Gaussian, Gaussian)> = prescriptions
        .iter()
        .map(|(i, r)| (poles[*i].clone(), r.clone()))
        .collect();
    Ok(section_with_residues(&poles, 2, &residues)?)
}

fn deg4_section(
    mu: &[Gaussian; 4],
    q: &Rf,
    divisor: &MarkedDivisor,
) -> Result<((i64, i64), [[Rf; 2]; 2], [Flag; 4]), HitchinError> {
    let matrix = s_kd_matrix(q, divisor)?;
    let dpi = divisor.vanishing_poly().derivative();
    let flags = std::array::from_fn(|i| {
        if mu[i].is_zero() {
            // Nilpotent residue: the flag is the kernel line.
            Flag::second_summand()
        } else {
            Flag::new(&mu[i] * &dpi.eval(divisor.point(i)), Gaussian::one())
        }
    });
    Ok(((-1, -3), matrix, flags))
}

fn deg2_section(
    subset: &[usize],
    mu: &[Gaussian; 4],
    q: &Rf,
    divisor: &MarkedDivisor,
) -> Result<((i64, i64), [[Rf; 2]; 2], [Flag; 4]), HitchinError> {
    // Role assignment: the complement points carry residues μ, the smaller
    // subset point carries −μ, the larger subset point the eigenline flag.
    let complement: Vec<usize> = (0..4).filter(|i| !subset.contains(i)).collect();
    let (r1, r2) = (complement[0], complement[1]);
    let (r3, r4) = (subset[0], subset[1]);
    let s1 = one_form_with_residues(
        divisor,
        &[(r1, mu[r1].clone()), (r2, mu[r2].clone()), (r3, -&mu[r3])],
    )?;
    let pi_s = divisor.vanishing_poly_of(subset);
    let phi = Rf::new(Poly::one(), pi_s.clone());
    let s2 = &(q - &(&s1 * &s1)) * &Rf::new(pi_s, Poly::one());
    // Flag at r4: the μ-eigenline of [[ρ₁, ρ₂],[ρ₃, −ρ₁]], spanned by
    // (μ + ρ₁, ρ₃) with ρ₃ = Res(φ) ≠ 0.
    let p4 = divisor.point(r4);
    let rho1 = s1.residue_at(p4)?;
    let rho3 = phi.residue_at(p4)?;
    if rho3.is_zero() {
        return Err(HitchinError::DegenerateResidue(
            "the residue of phi at the eigenline point vanishes".to_string(),
        ));
    }
    let mut flags = std::array::from_fn(|_| Flag::first_summand());
    flags[r3] = Flag::second_summand();
    flags[r4] = Flag::new(&mu[r4] + &rho1, rho3);
    let matrix = [[s1.clone(), s2], [phi, -&s1]];
    Ok(((-2, -2), matrix, flags))
}

fn deg0_split_section(
    mu: &[Gaussian; 4],
    q: &Rf,
    divisor: &MarkedDivisor,
) -> Result<((i64, i64), [[Rf; 2]; 2], [Flag; 4]), HitchinError> {
    let t1 = one_form_with_residues(
        divisor,
        &[(0, mu[0].clone()), (1, mu[1].clone()), (2, mu[2].clone())],
    )?;
    let t2 = q - &(&t1 * &t1);
    let matrix = [[t1.clone(), t2], [rf_const(Gaussian::one()), -&t1]];
    let flags = std::array::from_fn(|_| Flag::first_summand());
    Ok(((-3, -1), matrix, flags))
}

/// Solve A·x = rhs over Q(i), returning a particular solution and a kernel
/// basis, or None if inconsistent.
fn affine_solutions(
    rows: &[Vec<Gaussian>],
    rhs: &[Gaussian],
) -> Option<(Vec<Gaussian>, Vec<Vec<Gaussian>>)> {
    let cols = rows.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<Gaussian>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(-b);
            v
        })
        .collect();
    let kernel = kernel_basis(&augmented, cols + 1);
    // Split the homogenized kernel into solutions (last coordinate 1) and
    // directions (last coordinate 0).
    let mut particular: Option<Vec<Gaussian>> = None;
    let mut dirs = Vec::new();
    for mut v in kernel {
        let t = v.pop().unwrap();
        if t.is_zero() {
            dirs.push(v);
        } else {
            let inv = t.inv();
            let scaled: Vec<Gaussian> = v.iter().map(|x| x * &inv).collect();
            match &particular {
                None => particular = Some(scaled),
                Some(p) => {
                    // Difference of two solutions is a direction.
                    dirs.push(scaled.iter().zip(p).map(|(x, y)| x - y).collect());
                }
            }
        }
    }
    particular.map(|p| (p, dirs))
}

/// Roots over Q(i) of c2·s² + c1·s + c0 = 0 (not all coefficients zero).
fn quadratic_roots(
    c0: &Gaussian,
    c1: &Gaussian,
    c2: &Gaussian,
) -> Result<Vec<Gaussian>, HitchinError> {
    if c2.is_zero() {
        if c1.is_zero() {
            return Ok(Vec::new()); // nonzero constant: no roots
        }
        return Ok(vec![-&(c0 * &c1.inv())]);
    }
    let disc = &(c1 * c1) - &(&Gaussian::from_int(4) * &(c2 * c0));
    let root = disc.sqrt().ok_or(HitchinError::EigenvalueNotInField)?;
    let half = Gaussian::from_pair((1, 2), (0, 1));
    let inv2c = &half * &c2.inv();
    Ok(vec![
        &(&(-c1) + &root) * &inv2c,
        &(&(-c1) - &root) * &inv2c,
    ])
}

/// deg(D_I) = 0 with Σμ ≠ 0: the flags lie on the fixed subbundle
/// z ↦ (z−p₁, z−p₂) of O(−2)⊕O(−2), the field is [[t₁,t₂],[t₃,−t₁]] with
/// one-form entries, and the residue prescriptions leave a single free
/// parameter fixed by q = t₁² + t₂t₃.
fn deg0_nonsplit_section(
    mu: &[Gaussian; 4],
    q: &Rf,
    divisor: &MarkedDivisor,
) -> Result<((i64, i64), [[Rf; 2]; 2], [Flag; 4]), HitchinError> {
    let p: Vec<Gaussian> = (0..4).map(|i| divisor.point(i).clone()).collect();
    let kappa = &(&p[2] - &p[0]) * &(&p[2] - &p[1]).inv();
    // t₁, t₂, t₃ as affine functions of the residual parameters
    // (c, a, b) = (Res₃t₁, Res₂t₂, Res₁t₃); the remaining residues at
    // p₁, p₂, p₃ are forced by the eigenline conditions there.
    let t1 = |c: &Gaussian| {
        one_form_with_residues(divisor, &[(0, -&mu[0]), (1, mu[1].clone()), (2, c.clone())])
    };
    let t2 = |c: &Gaussian, a: &Gaussian| {
        let r3 = &(&mu[2] - c) * &kappa;
        one_form_with_residues(divisor, &[(0, Gaussian::zero()), (1, a.clone()), (2, r3)])
    };
    let t3 = |c: &Gaussian, b: &Gaussian| {
        let r3 = &(&mu[2] + c) * &kappa.inv();
        one_form_with_residues(divisor, &[(0, b.clone()), (1, Gaussian::zero()), (2, r3)])
    };
    // Eigenline condition at p₄ on the flag direction w = (p₄−p₁, p₄−p₂):
    // two linear equations in (c, a, b).
    let zero = Gaussian::zero();
    let one = Gaussian::one();
    let res4 = |f: &Rf| f.residue_at(&p[3]);
    let base1 = res4(&t1(&zero)?)?;
    let slope1 = &res4(&t1(&one)?)? - &base1;
    let base2 = res4(&t2(&zero, &zero)?)?;
    let s2c = &res4(&t2(&one, &zero)?)? - &base2;
    let s2a = &res4(&t2(&zero, &one)?)? - &base2;
    let base3 = res4(&t3(&zero, &zero)?)?;
    let s3c = &res4(&t3(&one, &zero)?)? - &base3;
    let s3b = &res4(&t3(&zero, &one)?)? - &base3;
    let wa = &p[3] - &p[0];
    let wb = &p[3] - &p[1];
    // wa·Res₄t₁ + wb·Res₄t₂ = μ₄·wa ;  wa·Res₄t₃ − wb·Res₄t₁ = μ₄·wb.
    let rows = vec![
        vec![&wa * &slope1 + &wb * &s2c, &wb * &s2a, zero.clone()],
        vec![&wa * &s3c - &wb * &slope1, zero.clone(), &wa * &s3b],
    ];
    let rhs = vec![
        &(&mu[3] * &wa) - &(&wa * &base1 + &wb * &base2),
        &(&mu[3] * &wb) - &(&wa * &base3 - &wb * &base1),
    ];
    let (x0, dirs) = affine_solutions(&rows, &rhs).ok_or_else(|| {
        HitchinError::DegenerateResidue("eigenline conditions are inconsistent".to_string())
    })?;
    // The residual numerator M(s) of t₁² + t₂t₃ − q along the solution line
    // is coefficientwise quadratic in s; find the common root.
    let pi = divisor.vanishing_poly();
    let numerator = |x: &[Gaussian]| -> Result<Poly, HitchinError> {
        let t1v = t1(&x[0])?;
        let t2v = t2(&x[0], &x[1])?;
        let t3v = t3(&x[0], &x[2])?;
        let residual = &(&(&t1v * &t1v) + &(&t2v * &t3v)) - q;
        let cleared = &residual * &Rf::new(&pi * &pi, Poly::one());
        if cleared.den().degree() != Some(0) {
            return Err(HitchinError::DegenerateResidue(
                "residual has poles off the divisor".to_string(),
            ));
        }
        Ok(cleared.num().clone())
    };
    let candidates: Vec<Vec<Gaussian>> = match dirs.len() {
        0 => vec![x0.clone()],
        1 => {
            let at = |s: i64| -> Vec<Gaussian> {
                let sg = Gaussian::from_int(s);
                x0.iter()
                    .zip(&dirs[0])
                    .map(|(x, d)| x + &(&sg * d))
                    .collect()
            };
            let m0 = numerator(&at(0))?;
            let m1 = numerator(&at(1))?;
            let m2 = numerator(&at(2))?;
            // Coefficientwise quadratic interpolation in s.
            let half = Gaussian::from_pair((1, 2), (0, 1));
            let coeff = |m: &Poly, j: usize| m.coeff(j);
            let mut roots: Option<Vec<Gaussian>> = None;
            for j in 0..=4 {
                let a0 = coeff(&m0, j);
                let v1 = coeff(&m1, j);
                let v2 = coeff(&m2, j);
                let a2 = &(&(&v2 - &v1) - &(&v1 - &a0)) * &half;
                let a1 = &(&v1 - &a0) - &a2;
                if a0.is_zero() && a1.is_zero() && a2.is_zero() {
                    continue;
                }
                let r = quadratic_roots(&a0, &a1, &a2)?;
                roots = Some(match roots {
                    None => r,
                    Some(prev) => prev.into_iter().filter(|x| r.contains(x)).collect(),
                });
            }
            match roots {
                None => vec![at(0)], // residual vanishes identically
                Some(rs) => rs
                    .into_iter()
                    .map(|s| {
                        x0.iter()
                            .zip(&dirs[0])
                            .map(|(x, d)| x + &(&s * d))
                            .collect()
                    })
                    .collect(),
            }
        }
        _ => {
            return Err(HitchinError::DegenerateResidue(
                "eigenline conditions do not cut out a line".to_string(),
            ))
        }
    };
    for x in candidates {
        if !numerator(&x)?.is_zero() {
            continue;
        }
        let t1v = t1(&x[0])?;
        let t2v = t2(&x[0], &x[1])?;
        let t3v = t3(&x[0], &x[2])?;
        let matrix = [[t1v.clone(), t2v], [t3v, -&t1v]];
        let flags = std::array::from_fn(|i| Flag::new(&p[i] - &p[0], &p[i] - &p[1]));
        return Ok(((-2, -2), matrix, flags));
    }
    Err(HitchinError::DegenerateResidue(
        "no parameter value solves q = t1^2 + t2*t3".to_string(),
    ))
}

/// The section value s_I^μ(q) as a stable parabolic Higgs bundle. The
/// subset I must label a valid even-degree fixed component for α, and q
/// must lie in B(μ).
pub fn hitchin_section(
    alpha: &WeightVector,
    divisor: &MarkedDivisor,
    subset: &[usize],
    mu: &[Gaussian; 4],
    q: &Rf,
) -> Result<LambdaConnection, HitchinError> {
    let mut subset: Vec<usize> = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if subset.len() % 2 != 0 {
        return Err(HitchinError::ConditionViolated(
            "sections exist only over even-degree subdivisors".to_string(),
        ));
    }
    // Table condition for (α, D_I).
    fixed_point_datum(alpha, divisor, &subset, None)?;
    check_base_membership(q, mu, divisor)?;
    let sum: Gaussian = mu.iter().fold(Gaussian::zero(), |acc, m| &acc + m);
    let (split, matrix, flags) = match subset.len() {
        4 => deg4_section(mu, q, divisor)?,
        2 => deg2_section(&subset, mu, q, divisor)?,
        0 if sum.is_zero() => deg0_split_section(mu, q, divisor)?,
        0 => deg0_nonsplit_section(mu, q, divisor)?,
        _ => unreachable!(),
    };
    let bundle = ParabolicRank2Bundle::new(
        split,
        divisor.clone(),
        flags,
        WeightVector::new(alpha.alpha.clone()).expect("weights already validated"),
    );
    Ok(LambdaConnection::higgs(bundle, matrix)?)
}

/// True iff the second-fundamental form of `sub`, viewed as a section of
/// Hom(L, E/L) twisted by K(D_I), is nowhere vanishing — i.e. multiplying
/// by Π_I yields a nonzero constant.
pub fn parabolic_oper_check(
    conn: &LambdaConnection,
    sub: &LineSubbundle,
    subset: &[usize],
) -> bool {
    let u = Rf::new(sub.u.clone(), Poly::one());
    let v = Rf::new(sub.v.clone(), Poly::one());
    let du = Rf::new(sub.u.derivative(), Poly::one());
    let dv = Rf::new(sub.v.derivative(), Poly::one());
    let a = &conn.matrix;
    let lam = rf_const(conn.lambda.clone());
    let sigma = &(&(&lam * &(&(&u * &dv) - &(&du * &v)))
        + &(&(&a[1][0] * &u) * &u))
        + &(&(&(&(&a[1][1] - &a[0][0]) * &u) * &v) - &(&(&a[0][1] * &v) * &v));
    if sigma.is_zero() {
        return false;
    }
    let tau = &sigma * &Rf::new(conn.bundle.divisor.vanishing_poly_of(subset), Poly::one());
    tau.num().degree() == Some(0) && tau.den().degree() == Some(0)
}

/// Search for a constant gauge transformation g with gΦ = Φ′g carrying the
/// flags of `a` to those of `b`; both must live on the same split type.
/// Used to certify that different role choices in the constructions give
/// isomorphic parabolic Higgs bundles.
pub fn constant_gauge_between(
    a: &LambdaConnection,
    b: &LambdaConnection,
) -> Option<[[Gaussian; 2]; 2]> {
    if a.bundle.split != b.bundle.split || a.bundle.divisor != b.bundle.divisor {
        return None;
    }
    let pi = a.bundle.divisor.vanishing_poly();
    let clear = |m: &Rf| -> Poly {
        let c = m * &Rf::new(pi.clone(), Poly::one());
        assert_eq!(c.den().degree(), Some(0), "entries must have simple poles on the divisor");
        c.num().clone()
    };
    let ea: Vec<Vec<Poly>> = (0..2)
        .map(|i| (0..2).map(|j| clear(&a.matrix[i][j])).collect())
        .collect();
    let eb: Vec<Vec<Poly>> = (0..2)
        .map(|i| (0..2).map(|j| clear(&b.matrix[i][j])).collect())
        .collect();
    // Unknowns g = (g00, g01, g10, g11); equations (g·Ea − Eb·g)_{ij} = 0
    // per z-coefficient.
    let max_deg = 8usize;
    let mut rows = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..=max_deg {
                let mut row = vec![Gaussian::zero(); 4];
                for l in 0..2 {
                    // + g_{il}·Ea[l][j]  − Eb[i][l]·g_{lj}
                    row[2 * i + l] = &row[2 * i + l] + &ea[l][j].coeff(k);
                    row[2 * l + j] = &row[2 * l + j] - &eb[i][l].coeff(k);
                }
                rows.push(row);
            }
        }
    }
    let kernel = kernel_basis(&rows, 4);
    let mut candidates: Vec<Vec<Gaussian>> = kernel.clone();
    for x in 0..kernel.len() {
        for y in (x + 1)..kernel.len() {
            candidates.push(
                kernel[x]
                    .iter()
                    .zip(&kernel[y])
                    .map(|(a, b)| a + b)
                    .collect(),
            );
        }
    }
    'cand: for g in candidates {
        let det = &(&g[0] * &g[3]) - &(&g[1] * &g[2]);
        if det.is_zero() {
            continue;
        }
        for k in 0..4 {
            let f = &a.bundle.flags[k];
            let image = Flag::new(
                &(&g[0] * &f.a) + &(&g[1] * &f.b),
                &(&g[2] * &f.a) + &(&g[3] * &f.b),
            );
            if image != b.bundle.flags[k] {
                continue 'cand;
            }
        }
        return Some([[g[0].clone(), g[1].clone()], [g[2].clone(), g[3].clone()]]);
    }
    None
}
