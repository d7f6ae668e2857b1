//! The four exact transforms of (weights, complex masses): the nonabelian
//! Hodge correspondence, its λ-connection analogue, the conformal-limit
//! family in (ħ, R), and the conformal limit itself.
//!
//! Transformed weights are renormalized into [0, 1) and the integer part is
//! reported per point, since it shifts the underlying line-bundle degree
//! under the determinant normalization.

use crate::exact_algebra::{Gaussian, Rat};
use num_traits::Zero;

/// A weight vector with its complex masses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMassPair {
    pub alpha: [Rat; 4],
    pub mu: [Gaussian; 4],
}

/// A transformed pair together with the per-point integer carry extracted
/// while renormalizing the weights into [0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedPair {
    pub pair: WeightMassPair,
    pub carry: [i64; 4],
}

fn renormalize(beta: [Rat; 4], nu: [Gaussian; 4]) -> TransformedPair {
    let mut weights = std::array::from_fn(|_| Rat::zero());
    let mut carry = [0i64; 4];
    for i in 0..4 {
        let fl = beta[i].floor();
        carry[i] = i64::try_from(fl.to_integer()).expect("weight carry fits in i64");
        weights[i] = &beta[i] - &fl;
    }
    TransformedPair { pair: WeightMassPair { alpha: weights, mu: nu }, carry }
}

/// Nonabelian Hodge transform: β = α − 2Re(μ̄), ν = α + μ − μ̄.
pub fn nah_transform(pair: &WeightMassPair) -> TransformedPair {
    let mut beta = std::array::from_fn(|_| Rat::zero());
    let mut nu = std::array::from_fn(|_| Gaussian::zero());
    for i in 0..4 {
        let mu_bar = pair.mu[i].conj();
        beta[i] = &pair.alpha[i] - &(&mu_bar.re + &mu_bar.re);
        nu[i] = &(&Gaussian::from_rat(pair.alpha[i].clone()) + &pair.mu[i]) - &mu_bar;
    }
    renormalize(beta, nu)
}

/// λ-connection transform: β = α − 2Re(λμ̄), ν = λα + μ − λμ̄.
pub fn lambda_transform(pair: &WeightMassPair, lambda: &Gaussian) -> TransformedPair {
    let mut beta = std::array::from_fn(|_| Rat::zero());
    let mut nu = std::array::from_fn(|_| Gaussian::zero());
    for i in 0..4 {
        let lmu_bar = lambda * &pair.mu[i].conj();
        beta[i] = &pair.alpha[i] - &(&lmu_bar.re + &lmu_bar.re);
        nu[i] = &(&(lambda * &Gaussian::from_rat(pair.alpha[i].clone())) + &pair.mu[i]) - &lmu_bar;
    }
    renormalize(beta, nu)
}

/// Conformal-limit family transform: β = α − Re(ħR²μ̄), ν = ħα + μ − ħR²μ̄.
/// Note the single (not doubled) real part in β; this follows the family
/// table verbatim even though the λ-connection table carries the factor 2.
pub fn cl_family_transform(pair: &WeightMassPair, hbar: &Gaussian, r: &Rat) -> TransformedPair {
    let r2 = Gaussian::from_rat(r * r);
    let mut beta = std::array::from_fn(|_| Rat::zero());
    let mut nu = std::array::from_fn(|_| Gaussian::zero());
    for i in 0..4 {
        let h_r2_mu_bar = &(hbar * &r2) * &pair.mu[i].conj();
        beta[i] = &pair.alpha[i] - &h_r2_mu_bar.re;
        nu[i] = &(&(hbar * &Gaussian::from_rat(pair.alpha[i].clone())) + &pair.mu[i])
            - &h_r2_mu_bar;
    }
    renormalize(beta, nu)
}

/// Conformal limit (R → 0): β = α, ν = ħα + μ.
pub fn cl_transform(pair: &WeightMassPair, hbar: &Gaussian) -> TransformedPair {
    let beta = pair.alpha.clone();
    let nu = std::array::from_fn(|i| {
        &(hbar * &Gaussian::from_rat(pair.alpha[i].clone())) + &pair.mu[i]
    });
    renormalize(beta, nu)
}
