//! λ-connections and Higgs fields on split rank-2 parabolic bundles over the
//! 4-punctured line: residues, complex masses, the Hitchin determinant,
//! C*-scaling, invariant-subbundle search, and the stability certificate
//! engine.
//!
//! A λ-connection ∇ = λ·d + A(z)dz is stored by its matrix A in the affine
//! split frame of O(d₁)⊕O(d₂). Entry A_ij is then a rational section of
//! Hom(O(d_j), O(d_i))⊗K(D): it has at worst simple poles at the marked
//! points and satisfies deg_∞ ≤ d_i − d_j − 2, except that a diagonal entry
//! carries the frame shift of the λ·d term and instead satisfies
//! A_ii = −λ·d_i/z + O(1/z²) at infinity.

use crate::exact_algebra::{kernel_basis, rat_int, AlgebraError, Gaussian, Poly, Rat, Rf};
use crate::parabolic_core::{Flag, LineSubbundle, ParabolicRank2Bundle};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HiggsError {
    #[error("matrix entry ({0},{1}) has a pole of order > 1 or a pole off the marked divisor")]
    PoleOrderTooHigh(usize, usize),
    #[error("matrix entry ({0},{1}) violates the degree bound at infinity")]
    InfinityBound(usize, usize),
    #[error("trace is not λ·Σ 1/(z−pᵢ)")]
    TraceCondition,
    #[error("residue at marked point {0} does not preserve the flag line")]
    FlagNotPreserved(usize),
    #[error("flag at marked point {0} is not an eigenline of the residue")]
    FlagNotEigenline(usize),
    #[error("an eigenvalue or eigenline requires a field extension of Q(i)")]
    EigenvalueNotInField,
    #[error("operation requires λ = 0")]
    LambdaNotZero,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The residue of the matrix 1-form at one marked point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueMatrix {
    pub entries: [[Gaussian; 2]; 2],
}

impl ResidueMatrix {
    pub fn trace(&self) -> Gaussian {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> Gaussian {
        &(&self.entries[0][0] * &self.entries[1][1])
            - &(&self.entries[0][1] * &self.entries[1][0])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Gaussian::is_zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.entries[0][1].is_zero()
            && self.entries[1][0].is_zero()
            && self.entries[0][0] == self.entries[1][1]
    }

    pub fn apply(&self, f: &Flag) -> (Gaussian, Gaussian) {
        (
            &(&self.entries[0][0] * &f.a) + &(&self.entries[0][1] * &f.b),
            &(&self.entries[1][0] * &f.a) + &(&self.entries[1][1] * &f.b),
        )
    }

    /// The eigenvalue on a given eigenline.
    pub fn eigenvalue_on(&self, f: &Flag) -> Option<Gaussian> {
        let (wa, wb) = self.apply(f);
        let mu = if !f.a.is_zero() { &wa / &f.a } else { &wb / &f.b };
        if wa == &mu * &f.a && wb == &mu * &f.b {
            Some(mu)
        } else {
            None
        }
    }

    /// Both eigenvalues, if they lie in Q(i).
    pub fn eigenvalues(&self) -> Result<(Gaussian, Gaussian), HiggsError> {
        let t = self.trace();
        let d = self.det();
        let disc = &(&t * &t) - &(&Gaussian::from_int(4) * &d);
        let r = disc.sqrt().ok_or(HiggsError::EigenvalueNotInField)?;
        let half = Gaussian::from_pair((1, 2), (0, 1));
        Ok((&(&t + &r) * &half, &(&t - &r) * &half))
    }

    /// An eigenline for a given eigenvalue; None when the matrix is scalar
    /// (every line is an eigenline).
    pub fn eigenline(&self, chi: &Gaussian) -> Option<Flag> {
        let m00 = &self.entries[0][0] - chi;
        let m01 = self.entries[0][1].clone();
        let m10 = self.entries[1][0].clone();
        let m11 = &self.entries[1][1] - chi;
        if !m00.is_zero() || !m01.is_zero() {
            Some(Flag::new(m01, -m00))
        } else if !m10.is_zero() || !m11.is_zero() {
            Some(Flag::new(m11, -m10))
        } else {
            None
        }
    }
}

/// ∇ = λ·d + A(z)dz on a parabolic rank-2 bundle; λ = 0 is a Higgs field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaConnection {
    pub lambda: Gaussian,
    pub bundle: ParabolicRank2Bundle,
    pub matrix: [[Rf; 2]; 2],
}

/// Σᵢ 1/(z−pᵢ) over the marked points = Π′/Π.
pub fn log_derivative_of_divisor(bundle: &ParabolicRank2Bundle) -> Rf {
    let pi = bundle.divisor.vanishing_poly();
    Rf::new(pi.derivative(), pi)
}

impl LambdaConnection {
    /// Validating constructor; checks pole confinement, the degree bounds at
    /// infinity, the trace condition and flag preservation.
    pub fn new(
        lambda: Gaussian,
        bundle: ParabolicRank2Bundle,
        matrix: [[Rf; 2]; 2],
    ) -> Result<Self, HiggsError> {
        let conn = LambdaConnection { lambda, bundle, matrix };
        conn.validate()?;
        Ok(conn)
    }

    /// A Higgs field (λ = 0).
    pub fn higgs(bundle: ParabolicRank2Bundle, matrix: [[Rf; 2]; 2]) -> Result<Self, HiggsError> {
        Self::new(Gaussian::zero(), bundle, matrix)
    }

    pub fn zero_higgs(bundle: ParabolicRank2Bundle) -> Self {
        LambdaConnection {
            lambda: Gaussian::zero(),
            bundle,
            matrix: std::array::from_fn(|_| std::array::from_fn(|_| Rf::zero())),
        }
    }

    pub fn is_higgs(&self) -> bool {
        self.lambda.is_zero()
    }

    pub fn is_zero_field(&self) -> bool {
        self.matrix.iter().flatten().all(Rf::is_zero)
    }

    fn split_degree(&self, i: usize) -> i64 {
        if i == 0 {
            self.bundle.split.0
        } else {
            self.bundle.split.1
        }
    }

    pub fn validate(&self) -> Result<(), HiggsError> {
        let pi = self.bundle.divisor.vanishing_poly();
        // p₁ serves as the auxiliary pole used to probe the 1/z coefficient
        // at infinity.
        let probe = Rf::new(Poly::one(), Poly::linear(self.bundle.divisor.point(0)));
        for i in 0..2 {
            for j in 0..2 {
                let f = &self.matrix[i][j];
                if f.is_zero() {
                    continue;
                }
                // Simple poles confined to the marked divisor: the (monic)
                // denominator must divide Π(z−pₖ).
                if !pi.div_rem(f.den()).1.is_zero() {
                    return Err(HiggsError::PoleOrderTooHigh(i, j));
                }
                let bound_ok = if i == j {
                    // A_ii = −λ·d_i/z + O(1/z²): subtracting −λd_i/(z−p₁)
                    // must leave ∞-degree ≤ −2.
                    let shift = Rf::constant(
                        -(&self.lambda * &Gaussian::from_int(self.split_degree(i))),
                    );
                    let g = f - &(&shift * &probe);
                    g.degree_at_infinity().map_or(true, |d| d <= -2)
                } else {
                    let bound = self.split_degree(i) - self.split_degree(j) - 2;
                    f.degree_at_infinity().unwrap() <= bound
                };
                if !bound_ok {
                    return Err(HiggsError::InfinityBound(i, j));
                }
            }
        }
        // Trace condition: the operator induced on the determinant is λ∂ in
        // the natural frame, which in the split frame reads
        // tr A = λ·Σ 1/(z−pᵢ).
        let want = &Rf::constant(self.lambda.clone()) * &log_derivative_of_divisor(&self.bundle);
        if &self.matrix[0][0] + &self.matrix[1][1] != want {
            return Err(HiggsError::TraceCondition);
        }
        // The residue at each marked point must preserve the flag line.
        for k in 0..4 {
            let r = self.residue_matrix(k)?;
            if r.eigenvalue_on(&self.bundle.flags[k]).is_none() {
                return Err(HiggsError::FlagNotPreserved(k));
            }
        }
        Ok(())
    }

    /// Entrywise residue of the matrix 1-form at marked point k.
    pub fn residue_matrix(&self, k: usize) -> Result<ResidueMatrix, HiggsError> {
        let p = self.bundle.divisor.point(k);
        let mut entries = std::array::from_fn(|_| std::array::from_fn(|_| Gaussian::zero()));
        let e: &mut [[Gaussian; 2]; 2] = &mut entries;
        for i in 0..2 {
            for j in 0..2 {
                e[i][j] = self.matrix[i][j].residue_at(p)?;
            }
        }
        Ok(ResidueMatrix { entries })
    }

    /// The complex masses μ₁..μ₄: at each marked point, the eigenvalue of the
    /// residue on the flag line (the flag carries +μᵢ).
    pub fn complex_masses(&self) -> Result<[Gaussian; 4], HiggsError> {
        let mut out = std::array::from_fn(|_| Gaussian::zero());
        for k in 0..4 {
            let r = self.residue_matrix(k)?;
            out[k] = r
                .eigenvalue_on(&self.bundle.flags[k])
                .ok_or(HiggsError::FlagNotEigenline(k))?;
        }
        Ok(out)
    }

    /// The Hitchin map value q = −det Φ for a Higgs field, a quadratic
    /// differential with at worst double poles at the marked points.
    pub fn hitchin_det(&self) -> Result<Rf, HiggsError> {
        if !self.is_higgs() {
            return Err(HiggsError::LambdaNotZero);
        }
        let det = &(&self.matrix[0][0] * &self.matrix[1][1])
            - &(&self.matrix[0][1] * &self.matrix[1][0]);
        Ok(-det)
    }

    /// The C*-action ξ·(λ, E(α), ∇) = (ξλ, E(α), ξ∇).
    pub fn scale(&self, xi: &Gaussian) -> LambdaConnection {
        let sc = Rf::constant(xi.clone());
        LambdaConnection {
            lambda: xi * &self.lambda,
            bundle: self.bundle.clone(),
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| &sc * &self.matrix[i][j])),
        }
    }

    /// Invariant line subbundles of a Higgs field, with their parabolic
    /// degrees.
    pub fn invariant_line_subbundles(&self) -> Result<InvariantLines, HiggsError> {
        if !self.is_higgs() {
            return Err(HiggsError::LambdaNotZero);
        }
        if self.is_zero_field() {
            return Ok(InvariantLines::AllSubbundles);
        }
        let q = self.hitchin_det()?;
        let split = self.bundle.split;
        let a11 = &self.matrix[0][0];
        let a12 = &self.matrix[0][1];
        let a21 = &self.matrix[1][0];
        let a22 = &self.matrix[1][1];
        let mut lines: Vec<LineSubbundle> = Vec::new();
        if q.is_zero() {
            // Nilpotent nonzero field: the saturation of ker Φ.
            let line = if !a11.is_zero() || !a12.is_zero() {
                LineSubbundle::from_rational_pair(split, &a12.clone(), &-a11)
            } else {
                LineSubbundle::from_rational_pair(split, &a22.clone(), &-a21)
            };
            lines.push(line);
        } else {
            match square_root_or_field_error(&q)? {
                None => {}
                Some(s) => {
                    // Eigenlines for the eigenvalues ±s of Φ.
                    for sgn in [s.clone(), -&s] {
                        let m00 = a11 - &sgn;
                        let m11 = a22 - &sgn;
                        let line = if !m00.is_zero() || !a12.is_zero() {
                            LineSubbundle::from_rational_pair(split, &-a12, &m00)
                        } else {
                            LineSubbundle::from_rational_pair(split, &m11, &-a21)
                        };
                        if !lines.contains(&line) {
                            lines.push(line);
                        }
                    }
                }
            }
        }
        let scored = lines
            .into_iter()
            .map(|l| {
                let d = l.par_degree(&self.bundle);
                (l, d)
            })
            .collect();
        Ok(InvariantLines::List(scored))
    }

    /// ∇-invariant line subbundles of a λ≠0 connection, found through the
    /// eigen-structure of the residues: the fiber of an invariant line at pᵢ
    /// is an eigenline of Res_{pᵢ}(∇), and the eigenvalue bookkeeping pins
    /// the underlying degree via Σχᵢ = −λ·deg L. Candidates are confirmed by
    /// the symbolic invariance identity
    /// λ(uv′ − vu′) + A₂₁u² + (A₂₂−A₁₁)uv − A₁₂v² = 0.
    pub fn invariant_lines_nonzero_lambda(&self) -> Result<Vec<LineSubbundle>, HiggsError> {
        assert!(!self.lambda.is_zero());
        // Per-point eigenvalue options: a scalar residue leaves the line
        // unconstrained, otherwise the fiber must sit on an eigenline.
        let mut options: Vec<Vec<(Gaussian, Option<Flag>)>> = Vec::new();
        for k in 0..4 {
            let r = self.residue_matrix(k)?;
            if r.is_scalar() {
                options.push(vec![(r.entries[0][0].clone(), None)]);
            } else {
                let (c1, c2) = r.eigenvalues()?;
                let mut opts = vec![(c1.clone(), r.eigenline(&c1))];
                if c2 != c1 {
                    opts.push((c2.clone(), r.eigenline(&c2)));
                }
                options.push(opts);
            }
        }
        let mut found: Vec<LineSubbundle> = Vec::new();
        let counts: Vec<usize> = options.iter().map(Vec::len).collect();
        let total: usize = counts.iter().product();
        for pick in 0..total {
            let mut idx = pick;
            let mut chi_sum = Gaussian::zero();
            let mut constraints: Vec<(Gaussian, Flag)> = Vec::new();
            for k in 0..4 {
                let (chi, dir) = &options[k][idx % counts[k]];
                idx /= counts[k];
                chi_sum = &chi_sum + chi;
                if let Some(d) = dir {
                    constraints.push((self.bundle.divisor.point(k).clone(), d.clone()));
                }
            }
            // Σχ = −λ·deg L forces an integer degree.
            let ell_g = -(&chi_sum / &self.lambda);
            if !ell_g.im.is_zero() || !ell_g.re.is_integer() {
                continue;
            }
            let ell: i64 = match i64::try_from(ell_g.re.to_integer()) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if ell > self.bundle.split.0.max(self.bundle.split.1) {
                continue;
            }
            for (u, v) in self.kernel_invariant_lines(ell, &constraints)? {
                let line = LineSubbundle::from_poly_pair(self.bundle.split, u, v);
                if !found.contains(&line) {
                    found.push(line);
                }
            }
        }
        Ok(found)
    }

    /// The invariance identity C(u,v) for the affine generator (u,v) of a
    /// candidate line; zero iff the line is ∇-invariant.
    /// The second fundamental form of a line subbundle: the composite
    /// L → (E/L)⊗K(D) induced by the connection, in the trivialization
    /// where it is the rational function λ(uv′−u′v) + A₂₁u² + (A₂₂−A₁₁)uv
    /// − A₁₂v². It vanishes exactly when the line is invariant.
    pub fn second_fundamental_form(&self, sub: &LineSubbundle) -> Rf {
        self.invariance_defect(&sub.u, &sub.v)
    }

    fn invariance_defect(&self, u: &Poly, v: &Poly) -> Rf {
        let ru = Rf::from_poly(u.clone());
        let rv = Rf::from_poly(v.clone());
        let rdu = Rf::from_poly(u.derivative());
        let rdv = Rf::from_poly(v.derivative());
        let lam = Rf::constant(self.lambda.clone());
        &lam * &(&(&ru * &rdv) - &(&rv * &rdu))
            + &self.matrix[1][0] * &ru * &ru
            + (&self.matrix[1][1] - &self.matrix[0][0]) * &ru * &rv
            - &self.matrix[0][1] * &rv * &rv
    }

    /// Solve the linear incidence system for candidate generators of degree
    /// ell through the prescribed fiber directions, then filter by the exact
    /// invariance identity.
    fn kernel_invariant_lines(
        &self,
        ell: i64,
        constraints: &[(Gaussian, Flag)],
    ) -> Result<Vec<(Poly, Poly)>, HiggsError> {
        let basis = incidence_kernel(self.bundle.split, ell, constraints);
        match basis.len() {
            0 => Ok(Vec::new()),
            1 => {
                let (u, v) = &basis[0];
                if self.invariance_defect(u, v).is_zero() {
                    Ok(vec![(u.clone(), v.clone())])
                } else {
                    Ok(Vec::new())
                }
            }
            2 => {
                // C is a quadratic form on the kernel: solve the induced
                // homogeneous binary quadratic exactly.
                let (u0, v0) = &basis[0];
                let (u1, v1) = &basis[1];
                let c00 = self.invariance_defect(u0, v0);
                let c11 = self.invariance_defect(u1, v1);
                let cx = self.invariance_defect(&(u0 + u1), &(v0 + v1));
                let c01 = &(&cx - &c00) - &c11;
                let mut out = Vec::new();
                for (x0, x1) in binary_quadratic_roots(&c00, &c01, &c11)? {
                    let u = &u0.scale(&x0) + &u1.scale(&x1);
                    let v = &v0.scale(&x0) + &v1.scale(&x1);
                    if (u.is_zero() && v.is_zero())
                        || !self.invariance_defect(&u, &v).is_zero()
                    {
                        continue;
                    }
                    out.push((u, v));
                }
                Ok(out)
            }
            _ => {
                // Kernels of dimension ≥ 3 only arise for highly decomposable
                // connections; probe basis vectors and pairwise sums.
                let mut cands: Vec<(Poly, Poly)> = basis.clone();
                for i in 0..basis.len() {
                    for j in (i + 1)..basis.len() {
                        cands.push((&basis[i].0 + &basis[j].0, &basis[i].1 + &basis[j].1));
                    }
                }
                Ok(cands
                    .into_iter()
                    .filter(|(u, v)| self.invariance_defect(u, v).is_zero())
                    .collect())
            }
        }
    }

    /// Slope stability with respect to the Φ- resp. ∇-invariant test set,
    /// normalized so that the total parabolic degree is 0: stable iff every
    /// invariant line subbundle has parabolic degree < 0. The certificate is
    /// the invariant line of maximal parabolic degree when one exists.
    pub fn is_stable(&self) -> Result<StabilityReport, HiggsError> {
        let scored: Vec<(LineSubbundle, Rat)> = if self.is_higgs() {
            match self.invariant_line_subbundles()? {
                InvariantLines::AllSubbundles => {
                    let (l, d) = max_destabilizing_line(&self.bundle);
                    vec![(l, d)]
                }
                InvariantLines::List(ls) => ls,
            }
        } else {
            self.invariant_lines_nonzero_lambda()?
                .into_iter()
                .map(|l| {
                    let d = l.par_degree(&self.bundle);
                    (l, d)
                })
                .collect()
        };
        let stable = scored.iter().all(|(_, d)| d < &Rat::zero());
        let certificate = scored
            .into_iter()
            .max_by(|(l1, d1), (l2, d2)| d1.cmp(d2).then_with(|| l2.tie_break_key().cmp(&l1.tie_break_key())));
        Ok(StabilityReport { stable, certificate })
    }
}

/// Result of the invariant-subbundle search for a Higgs field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantLines {
    /// Φ = 0: every line subbundle is invariant.
    AllSubbundles,
    List(Vec<(LineSubbundle, Rat)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    /// The invariant (or, for a zero field, the maximal destabilizing) line
    /// of largest parabolic degree, when the test set is nonempty.
    pub certificate: Option<(LineSubbundle, Rat)>,
}

/// Square root of q in Q(i)(z). Distinguishes "no root for valuation
/// reasons" (None: odd multiplicities, no root in any constant extension of
/// the function field) from "root requires extending Q(i)" (error).
fn square_root_or_field_error(q: &Rf) -> Result<Option<Rf>, HiggsError> {
    if q.is_zero() {
        return Ok(Some(Rf::zero()));
    }
    let lc = q.num().leading();
    let monic_num = q.num().monic();
    let sn = match monic_num.sqrt() {
        Some(s) => s,
        None => return Ok(None),
    };
    let sd = match q.den().sqrt() {
        Some(s) => s,
        None => return Ok(None),
    };
    match lc.sqrt() {
        Some(c) => Ok(Some(Rf::new(sn.scale(&c), sd))),
        None => Err(HiggsError::EigenvalueNotInField),
    }
}

/// Basis of polynomial pairs (u, v) with deg u ≤ a − ell, deg v ≤ b − ell,
/// whose direction [u(p):v(p)] matches the prescribed flag at each
/// constraint point.
fn incidence_kernel(
    split: (i64, i64),
    ell: i64,
    constraints: &[(Gaussian, Flag)],
) -> Vec<(Poly, Poly)> {
    let nu = split.0 - ell;
    let nv = split.1 - ell;
    let cu = if nu >= 0 { nu as usize + 1 } else { 0 };
    let cv = if nv >= 0 { nv as usize + 1 } else { 0 };
    let cols = cu + cv;
    if cols == 0 {
        return Vec::new();
    }
    let mut rows = Vec::new();
    for (p, flag) in constraints {
        // v(p)·flag.a − u(p)·flag.b = 0.
        let mut row = Vec::with_capacity(cols);
        let mut pk = Gaussian::one();
        for _ in 0..cu {
            row.push(-(&flag.b * &pk));
            pk = &pk * p;
        }
        let mut pk = Gaussian::one();
        for _ in 0..cv {
            row.push(&flag.a * &pk);
            pk = &pk * p;
        }
        rows.push(row);
    }
    kernel_basis(&rows, cols)
        .into_iter()
        .map(|vec| {
            let u = Poly::new(vec[..cu].to_vec());
            let v = Poly::new(vec[cu..].to_vec());
            (u, v)
        })
        .collect()
}

/// Projective roots [x₀:x₁] over Q(i) of the binary quadratic
/// c00·x₀² + c01·x₀x₁ + c11·x₁² built from rational-function coefficients
/// required to vanish identically in z.
fn binary_quadratic_roots(
    c00: &Rf,
    c01: &Rf,
    c11: &Rf,
) -> Result<Vec<(Gaussian, Gaussian)>, HiggsError> {
    // Clear denominators and collect the z-coefficient rows.
    let n00 = &(c00.num() * c01.den()) * c11.den();
    let n01 = &(c01.num() * c00.den()) * c11.den();
    let n11 = &(c11.num() * c00.den()) * c01.den();
    let max_len = n00.coeffs().len().max(n01.coeffs().len()).max(n11.coeffs().len());
    for k in 0..max_len {
        let a = n00.coeff(k);
        let b = n01.coeff(k);
        let c = n11.coeff(k);
        if a.is_zero() && b.is_zero() && c.is_zero() {
            continue;
        }
        // Solve a·t² + b·t + c = 0 for t = x₀/x₁, plus the root at infinity
        // when a = 0.
        let mut roots: Vec<(Gaussian, Gaussian)> = Vec::new();
        if a.is_zero() {
            roots.push((Gaussian::one(), Gaussian::zero()));
            if !b.is_zero() {
                roots.push((-(&c / &b), Gaussian::one()));
            }
        } else {
            let four = Gaussian::from_int(4);
            let disc = &(&b * &b) - &(&four * &(&a * &c));
            let r = disc.sqrt().ok_or(HiggsError::EigenvalueNotInField)?;
            let two_a = &Gaussian::from_int(2) * &a;
            roots.push((&(-&b + &r) / &two_a, Gaussian::one()));
            if !r.is_zero() {
                roots.push((&(-&b - &r) / &two_a, Gaussian::one()));
            }
        }
        return Ok(roots);
    }
    // The quadratic form vanishes identically: every kernel element is
    // invariant; report a spanning sample.
    Ok(vec![
        (Gaussian::one(), Gaussian::zero()),
        (Gaussian::zero(), Gaussian::one()),
        (Gaussian::one(), Gaussian::one()),
    ])
}

/// The saturated line subbundle of maximal parabolic degree. Degrees are
/// scanned downward from max(a,b); for each degree the incidence systems
/// over all flag subsets are solved and candidates scored by their true
/// saturated degree and actual induced weights. The scan stops as soon as
/// ell + Σ(1−αᵢ) drops below the best score, which bounds it within four
/// steps of min(a,b).
pub fn max_destabilizing_line(bundle: &ParabolicRank2Bundle) -> (LineSubbundle, Rat) {
    let (a, b) = bundle.split;
    let max_weight_sum: Rat = bundle
        .alpha
        .iter()
        .map(|al| Rat::one() - al)
        .sum();
    let mut best: Option<(LineSubbundle, Rat)> = None;
    let mut ell = a.max(b);
    let floor = a.min(b) - 5;
    while ell >= floor {
        if let Some((_, bd)) = &best {
            if &(rat_int(ell) + &max_weight_sum) < bd {
                break;
            }
        }
        for mask in 0u32..16 {
            let constraints: Vec<(Gaussian, Flag)> = (0..4)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| (bundle.divisor.point(k).clone(), bundle.flags[k].clone()))
                .collect();
            for (u, v) in incidence_kernel(bundle.split, ell, &constraints) {
                if u.is_zero() && v.is_zero() {
                    continue;
                }
                let line = LineSubbundle::from_poly_pair(bundle.split, u, v);
                let d = line.par_degree(bundle);
                let better = match &best {
                    None => true,
                    Some((bl, bd)) => {
                        d > *bd || (d == *bd && line.tie_break_key() < bl.tie_break_key())
                    }
                };
                if better {
                    best = Some((line, d));
                }
            }
        }
        ell -= 1;
    }
    best.expect("a rank-2 bundle always has line subbundles")
}
