//! Exact computations with rank-2 parabolic Higgs bundles and parabolic
//! logarithmic λ-connections on the 4-punctured projective line.
//!
//! All arithmetic is over the Gaussian rationals Q(i); there is no floating
//! point anywhere. The library covers: parabolic bundles and their stability,
//! λ-connections and Higgs fields with their residues and complex masses,
//! the wall-and-chamber structure of the weight hypercube, the C*-fixed
//! Hodge bundles, explicit sections of the fixed-mass Hitchin fibration,
//! C*-limits via iterated Griffiths-transverse filtrations, and the cone-angle
//! arithmetic of the associated conical hyperbolic metrics.

pub mod cone_geometry;
pub mod cstar_limit;
pub mod exact_algebra;
pub mod fixed_points;
pub mod higgs_lambda;
pub mod hitchin_sections;
pub mod parabolic_core;
pub mod rng;
pub mod weight_mass_tables;
