//! Oracle and identity tests for the four (weight, mass) transforms.

use parhiggs::exact_algebra::{rat, rat_int, Gaussian, Rat};
use parhiggs::rng::Lcg;
use parhiggs::weight_mass_tables::{
    cl_family_transform, cl_transform, lambda_transform, nah_transform, WeightMassPair,
};

fn pair(alpha: [Rat; 4], mu: [Gaussian; 4]) -> WeightMassPair {
    WeightMassPair { alpha, mu }
}

fn quarter_alpha() -> [Rat; 4] {
    std::array::from_fn(|_| rat(1, 4))
}

fn random_pair(rng: &mut Lcg) -> WeightMassPair {
    pair(
        std::array::from_fn(|_| rng.weight(24)),
        std::array::from_fn(|_| rng.gaussian(4, 3)),
    )
}

#[test]
fn nah_oracle_rows() {
    // μ = 0: (β, ν) = (α, α).
    let p = pair(quarter_alpha(), std::array::from_fn(|_| Gaussian::zero()));
    let t = nah_transform(&p);
    assert_eq!(t.pair.alpha, quarter_alpha());
    for i in 0..4 {
        assert_eq!(t.pair.mu[i], Gaussian::new(rat(1, 4), rat(0, 1)));
    }
    assert_eq!(t.carry, [0; 4]);
    // μ purely imaginary: β = α, ν = α + 2it.
    let t_im = Gaussian::new(rat(0, 1), rat(3, 5));
    let p = pair(quarter_alpha(), std::array::from_fn(|_| t_im.clone()));
    let t = nah_transform(&p);
    assert_eq!(t.pair.alpha, quarter_alpha());
    for i in 0..4 {
        assert_eq!(t.pair.mu[i], Gaussian::new(rat(1, 4), rat(6, 5)));
    }
    // α = 1/4, μ = 1/8: β = 1/4 − 2/8 = 0, ν = 1/4 + 0 = 1/4.
    let p = pair(
        quarter_alpha(),
        std::array::from_fn(|_| Gaussian::from_pair((1, 8), (0, 1))),
    );
    let t = nah_transform(&p);
    for i in 0..4 {
        assert_eq!(t.pair.alpha[i], rat_int(0));
        assert_eq!(t.pair.mu[i], Gaussian::from_pair((1, 4), (0, 1)));
    }
    assert_eq!(t.carry, [0; 4]);
}

#[test]
fn nah_carry_reports_degree_shift() {
    // α = 1/4, μ = 1: β = 1/4 − 2 = −7/4 → weight 1/4 with carry −2.
    let p = pair(quarter_alpha(), std::array::from_fn(|_| Gaussian::one()));
    let t = nah_transform(&p);
    for i in 0..4 {
        assert_eq!(t.pair.alpha[i], rat(1, 4));
        assert_eq!(t.carry[i], -2);
    }
}

#[test]
fn lambda_oracle_rows() {
    let mut rng = Lcg::new(3);
    // λ = 1 equals the nonabelian Hodge transform.
    for _ in 0..200 {
        let p = random_pair(&mut rng);
        assert_eq!(lambda_transform(&p, &Gaussian::one()), nah_transform(&p));
    }
    // λ = 0 is the identity.
    for _ in 0..100 {
        let p = random_pair(&mut rng);
        let t = lambda_transform(&p, &Gaussian::zero());
        assert_eq!(t.pair, p);
        assert_eq!(t.carry, [0; 4]);
    }
    // λ = i, α = 1/4, μ = 1/2: λμ̄ = i/2, so β = α − 2Re(i/2) = 1/4 and
    // ν = i/4 + 1/2 − i/2 = 1/2 − i/4.
    let p = pair(
        quarter_alpha(),
        std::array::from_fn(|_| Gaussian::from_pair((1, 2), (0, 1))),
    );
    let t = lambda_transform(&p, &Gaussian::i());
    for i in 0..4 {
        assert_eq!(t.pair.alpha[i], rat(1, 4));
        assert_eq!(t.pair.mu[i], Gaussian::from_pair((1, 2), (-1, 4)));
    }
}

#[test]
fn family_oracle_rows() {
    let mut rng = Lcg::new(17);
    // R = 0: (α, ħα + μ).
    for _ in 0..100 {
        let p = random_pair(&mut rng);
        let h = rng.gaussian(3, 2);
        let t = cl_family_transform(&p, &h, &rat_int(0));
        assert_eq!(t.pair.alpha, p.alpha);
        for i in 0..4 {
            let expect = &(&h * &Gaussian::from_rat(p.alpha[i].clone())) + &p.mu[i];
            assert_eq!(t.pair.mu[i], expect);
        }
    }
    // ħ = 0 is the identity.
    for _ in 0..100 {
        let p = random_pair(&mut rng);
        let t = cl_family_transform(&p, &Gaussian::zero(), &rat(2, 3));
        assert_eq!(t.pair, p);
    }
    // ħ = 1, R = 1, μ real: β = α − μ (single real part, no factor 2) and
    // ν = α + μ − μ = α.
    let p = pair(
        quarter_alpha(),
        std::array::from_fn(|_| Gaussian::from_pair((1, 8), (0, 1))),
    );
    let t = cl_family_transform(&p, &Gaussian::one(), &rat_int(1));
    for i in 0..4 {
        assert_eq!(t.pair.alpha[i], rat(1, 8));
        assert_eq!(t.pair.mu[i], Gaussian::new(rat(1, 4), rat(0, 1)));
    }
}

#[test]
fn cl_oracle_rows() {
    // ħ = 0 is the identity.
    let mut rng = Lcg::new(29);
    for _ in 0..100 {
        let p = random_pair(&mut rng);
        let t = cl_transform(&p, &Gaussian::zero());
        assert_eq!(t.pair, p);
    }
    // μ = 0: ν = ħα.
    let p = pair(quarter_alpha(), std::array::from_fn(|_| Gaussian::zero()));
    let h = Gaussian::from_pair((2, 1), (1, 3));
    let t = cl_transform(&p, &h);
    for i in 0..4 {
        assert_eq!(t.pair.mu[i], &h * &Gaussian::from_pair((1, 4), (0, 1)));
    }
}

#[test]
fn table_identities_random() {
    let mut rng = Lcg::new(101);
    for _ in 0..1000 {
        let p = random_pair(&mut rng);
        let h = rng.gaussian(3, 2);
        // Family at R = 0 equals the conformal limit.
        assert_eq!(cl_family_transform(&p, &h, &rat_int(0)), cl_transform(&p, &h));
        // λ = 1 equals nonabelian Hodge.
        assert_eq!(lambda_transform(&p, &Gaussian::one()), nah_transform(&p));
        // Conformal-limit weights are a fixed point: β = α.
        assert_eq!(cl_transform(&p, &h).pair.alpha, p.alpha);
    }
}
