//! C*-limits of λ-connections: Griffiths-transverse filtrations, associated
//! graded Hodge systems, the iterative Simpson-style process with its
//! (ζ, η) invariants, and the rank-2 Harder–Narasimhan shortcut used as its
//! oracle.
//!
//! Rank-2 filtration chains E = A⁰ ⊃ A¹ ⊃ … ⊃ 0 are either trivial or a
//! single saturated line subbundle repeated through slot k: A¹ = … = Aᵏ = L.
//! Repetition beyond slot 1 requires L to be invariant; it encodes the
//! grading shift that appears when the iteration invariants stall.

use crate::exact_algebra::{Rat, Rf};
use crate::higgs_lambda::{max_destabilizing_line, LambdaConnection};
use crate::parabolic_core::{
    LineSubbundle, ParabolicLineBundle, ParabolicRank2Bundle,
};
use num_traits::Zero;

pub const ITERATION_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CstarError {
    #[error("the associated system of Hodge bundles is already semistable")]
    SemistableInput,
    #[error("the iteration exceeded {ITERATION_CAP} steps; the input is not a semistable connection")]
    IterationBound,
}

/// A Griffiths-transverse filtration of a rank-2 parabolic bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GriffithsFiltration {
    /// E ⊃ 0: the whole bundle in slot 0.
    Trivial,
    /// E ⊃ L ⊃ … ⊃ L ⊃ 0 with the line occupying slots 1..=slot.
    Line { sub: LineSubbundle, slot: usize },
}

impl GriffithsFiltration {
    pub fn line(sub: LineSubbundle) -> Self {
        GriffithsFiltration::Line { sub, slot: 1 }
    }
}

/// The associated graded of a Griffiths-transverse filtration: parabolic
/// line (or rank-2) pieces with the strictly lower-triangular connecting map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HodgeSystem {
    /// Trivial filtration: the whole bundle with the zero field.
    Single { bundle: ParabolicRank2Bundle },
    /// L(β) in slot `sub_slot`, E/L in slot 0, connected by the second
    /// fundamental form φ₀ (zero unless sub_slot = 1).
    Pair {
        sub: ParabolicLineBundle,
        quot: ParabolicLineBundle,
        line: LineSubbundle,
        phi0: Rf,
        sub_slot: usize,
    },
}

/// ∇(Aʲ) ⊂ Aʲ⁻¹ ⊗ K(D) for all j, checked symbolically. For slot 1 the
/// second fundamental form must be a holomorphic section of
/// Hom(L, E/L)⊗K(D): simple poles on the divisor only and degree at
/// infinity within the bound −2−2ℓ after clearing Π. For slots ≥ 2 the
/// line must be invariant.
pub fn is_griffiths_transverse(
    filtration: &GriffithsFiltration,
    conn: &LambdaConnection,
) -> bool {
    match filtration {
        GriffithsFiltration::Trivial => true,
        GriffithsFiltration::Line { sub, slot } => {
            let sigma = conn.second_fundamental_form(sub);
            if *slot >= 2 {
                return sigma.is_zero();
            }
            if sigma.is_zero() {
                return true;
            }
            let pi = conn.bundle.divisor.vanishing_poly();
            let cleared = &sigma * &Rf::from_poly(pi);
            cleared.den().degree() == Some(0)
                && cleared.num().degree().map_or(true, |d| {
                    (d as i64) <= -2 - 2 * sub.degree
                })
        }
    }
}

/// The associated graded system of Hodge bundles. The filtration must be
/// Griffiths transverse.
pub fn associated_graded(
    filtration: &GriffithsFiltration,
    conn: &LambdaConnection,
) -> HodgeSystem {
    assert!(
        is_griffiths_transverse(filtration, conn),
        "filtration must be Griffiths transverse"
    );
    match filtration {
        GriffithsFiltration::Trivial => HodgeSystem::Single {
            bundle: conn.bundle.clone(),
        },
        GriffithsFiltration::Line { sub, slot } => {
            let phi0 = if *slot == 1 {
                conn.second_fundamental_form(sub)
            } else {
                Rf::zero()
            };
            HodgeSystem::Pair {
                sub: sub.to_parabolic_line_bundle(&conn.bundle),
                quot: sub.quotient_line_bundle(&conn.bundle),
                line: sub.clone(),
                phi0,
                sub_slot: *slot,
            }
        }
    }
}

/// (ζ, η) = (slope, rank) of the maximal destabilizing Hodge subsystem.
/// Errors with SemistableInput when no subsystem has positive slope (the
/// total slope is zero under the determinant normalization).
pub fn zeta_eta(system: &HodgeSystem) -> Result<(Rat, i64), CstarError> {
    match system {
        HodgeSystem::Single { bundle } => {
            let (_, par) = max_destabilizing_line(bundle);
            if par > Rat::zero() {
                Ok((par, 1))
            } else {
                Err(CstarError::SemistableInput)
            }
        }
        HodgeSystem::Pair {
            sub, quot, phi0, ..
        } => {
            // φ-closed subsystems: the slot-0 piece E/L always; the line
            // piece only when the connecting map vanishes.
            let mut best: Option<Rat> = None;
            let pq = quot.par_degree();
            if pq > Rat::zero() {
                best = Some(pq);
            }
            if phi0.is_zero() {
                let pl = sub.par_degree();
                if pl > Rat::zero() && best.as_ref().map_or(true, |b| &pl > b) {
                    best = Some(pl);
                }
            }
            best.map(|z| (z, 1)).ok_or(CstarError::SemistableInput)
        }
    }
}

/// One step of the iterative process: replace A• by
/// Bʲ = ker(E → (E/Aʲ)/Â_{j−1}) where Â• is the maximal destabilizing
/// subsystem of the associated graded. Rank-2 closed forms:
/// the trivial filtration picks up the maximal destabilizing line; a line
/// filtration destabilized by its quotient collapses back to the trivial
/// filtration; an invariant destabilizing line shifts one slot up.
pub fn simpson_step(
    filtration: &GriffithsFiltration,
    conn: &LambdaConnection,
) -> Result<GriffithsFiltration, CstarError> {
    let graded = associated_graded(filtration, conn);
    zeta_eta(&graded)?; // SemistableInput when nothing destabilizes
    match filtration {
        GriffithsFiltration::Trivial => {
            let (line, _) = max_destabilizing_line(&conn.bundle);
            Ok(GriffithsFiltration::line(line))
        }
        GriffithsFiltration::Line { sub, slot } => {
            let HodgeSystem::Pair { quot, phi0, .. } = &graded else {
                unreachable!()
            };
            if quot.par_degree() > Rat::zero() {
                // B¹ = ker(E → (E/L)/(E/L)) = E: the filtration collapses.
                Ok(GriffithsFiltration::Trivial)
            } else {
                debug_assert!(phi0.is_zero());
                Ok(GriffithsFiltration::Line {
                    sub: sub.clone(),
                    slot: slot + 1,
                })
            }
        }
    }
}

/// The Harder–Narasimhan shortcut for the C*-limit of a stable λ-connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HnLimit {
    /// The underlying parabolic bundle is stable: the limit is (E(α), 0).
    Bundle(ParabolicRank2Bundle),
    /// Otherwise the limit is the Hodge bundle L ⊕ E/L with the second
    /// fundamental form; `subset` lists the marked points whose flag does
    /// not lie on L — the subdivisor label of the fixed component.
    Fixed {
        system: HodgeSystem,
        subset: Vec<usize>,
    },
}

pub fn hn_limit(conn: &LambdaConnection) -> HnLimit {
    let (line, par) = max_destabilizing_line(&conn.bundle);
    if par < Rat::zero() {
        return HnLimit::Bundle(conn.bundle.clone());
    }
    let subset: Vec<usize> = (0..4)
        .filter(|&i| !line.passes_through_flag(&conn.bundle, i))
        .collect();
    let phi0 = conn.second_fundamental_form(&line);
    HnLimit::Fixed {
        system: HodgeSystem::Pair {
            sub: line.to_parabolic_line_bundle(&conn.bundle),
            quot: line.quotient_line_bundle(&conn.bundle),
            line,
            phi0,
            sub_slot: 1,
        },
        subset,
    }
}

/// Iterate `simpson_step` from `initial` until the associated graded is
/// semistable, recording the (ζ, η) trace. Terminates for semistable
/// connections; the step cap signals a non-semistable input (an invariant
/// destabilizing line shifts slots forever).
pub fn iterate_to_semistable(
    conn: &LambdaConnection,
    initial: GriffithsFiltration,
) -> Result<(GriffithsFiltration, HodgeSystem, Vec<(Rat, i64)>), CstarError> {
    assert!(
        is_griffiths_transverse(&initial, conn),
        "initial filtration must be Griffiths transverse"
    );
    let mut filtration = initial;
    let mut trace = Vec::new();
    for _ in 0..ITERATION_CAP {
        let graded = associated_graded(&filtration, conn);
        match zeta_eta(&graded) {
            Err(CstarError::SemistableInput) => return Ok((filtration, graded, trace)),
            Err(e) => return Err(e),
            Ok(inv) => {
                trace.push(inv);
                filtration = simpson_step(&filtration, conn)?;
            }
        }
    }
    Err(CstarError::IterationBound)
}
