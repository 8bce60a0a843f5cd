//! Decomposed double vector bundles `A ⊞ B ⊞ C` over a point.
//!
//! A statomorphism is `φ_λ(a, b, c) = (a, b, c + λ(a, b))`, with `λ` stored
//! as a form on `side₁ × side₂ × core*`. The dual over `B` has sides
//! `C*, B` and core `A*`; the dual over `A` has sides `A, C*` and core `B*`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::word::Generator;

use super::tensor::{dot, q, Tensor, Q};
use super::ConcreteError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DvbConcrete {
    /// Dimensions of the two sides and the core.
    pub dims: [usize; 3],
    pub lambda: Tensor,
}

/// A point `(side₁, side₂, core)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DvbPoint {
    pub s1: Vec<Q>,
    pub s2: Vec<Q>,
    pub core: Vec<Q>,
}

impl DvbPoint {
    pub fn random(dims: [usize; 3], rng: &mut impl Rng, range: i64) -> Self {
        let mut v = |n: usize| (0..n).map(|_| q(rng.gen_range(-range..=range))).collect();
        DvbPoint {
            s1: v(dims[0]),
            s2: v(dims[1]),
            core: v(dims[2]),
        }
    }
}

impl DvbConcrete {
    pub fn zero(dims: [usize; 3]) -> Self {
        DvbConcrete {
            dims,
            lambda: Tensor::zeros(&dims),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero()
    }

    pub fn neg(&self) -> Self {
        DvbConcrete {
            dims: self.dims,
            lambda: self.lambda.neg(),
        }
    }

    pub fn apply(&self, p: &DvbPoint) -> DvbPoint {
        let shift = self.lambda.eval(&[&p.s1, &p.s2]);
        DvbPoint {
            s1: p.s1.clone(),
            s2: p.s2.clone(),
            core: p.core.iter().zip(shift).map(|(c, s)| c + s).collect(),
        }
    }
}

pub fn random_dvb(dims: [usize; 3], seed: u64) -> DvbConcrete {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lam = DvbConcrete::zero(dims);
    for x in lam.lambda.entries_mut() {
        *x = q(rng.gen_range(-9..=9));
    }
    lam
}

/// Axis order taking a form on the original layout to the dual's layout.
fn dual_axes(axis: Generator) -> Result<[usize; 3], ConcreteError> {
    match axis {
        Generator::X => Ok([2, 1, 0]),
        Generator::Y => Ok([0, 2, 1]),
        Generator::Z => Err(ConcreteError::NoSuchAxis),
    }
}

/// The image `λ'` of `λ` under the identification of the statomorphism
/// groups, as a form on the dual's layout, with the given sign.
fn transpose(axis: Generator, lam: &DvbConcrete, sign: i64) -> Result<DvbConcrete, ConcreteError> {
    let order = dual_axes(axis)?;
    Ok(DvbConcrete {
        dims: order.map(|k| lam.dims[k]),
        lambda: lam.lambda.permute_axes(&order).scale_int(sign),
    })
}

/// `θ_W(λ)` for a single dualization: minus the identity on `G₂`, written
/// in the dual's layout.
pub fn theta_dvb(axis: Generator, lam: &DvbConcrete) -> Result<DvbConcrete, ConcreteError> {
    transpose(axis, lam, -1)
}

/// The functorial image `(φ_λ)^W = θ_W(φ_λ)⁻¹`.
pub fn dual_image_dvb(axis: Generator, lam: &DvbConcrete) -> Result<DvbConcrete, ConcreteError> {
    transpose(axis, lam, 1)
}

/// Reads a dual-layout form back in the original layout.
pub fn identify_dvb(axis: Generator, dual: &DvbConcrete) -> Result<DvbConcrete, ConcreteError> {
    // Both axis orders are involutions.
    transpose(axis, dual, 1)
}

/// Pairing of `δ` in the dual over `axis` with `d`; the shared side must
/// agree. Over B: `⟨(γ, b, α), (a, b, c)⟩ = ⟨α, a⟩ + ⟨γ, c⟩`.
pub fn pair_dvb(axis: Generator, delta: &DvbPoint, d: &DvbPoint) -> Result<Q, ConcreteError> {
    match axis {
        Generator::X => {
            if delta.s2 != d.s2 {
                return Err(ConcreteError::ProjectionMismatch("B".into()));
            }
            Ok(dot(&delta.core, &d.s1) + dot(&delta.s1, &d.core))
        }
        Generator::Y => {
            if delta.s1 != d.s1 {
                return Err(ConcreteError::ProjectionMismatch("A".into()));
            }
            Ok(dot(&delta.core, &d.s2) + dot(&delta.s2, &d.core))
        }
        Generator::Z => Err(ConcreteError::NoSuchAxis),
    }
}

/// Counts samples where `⟨θ(λ)(δ) | φ_λ(d)⟩ ≠ ⟨δ | d⟩`.
pub fn dvb_pairing_violations(
    axis: Generator,
    lam: &DvbConcrete,
    dual: &DvbConcrete,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<usize, ConcreteError> {
    let mut violations = 0;
    for _ in 0..samples {
        let d = DvbPoint::random(lam.dims, rng, 5);
        let mut delta = DvbPoint::random(dual.dims, rng, 5);
        match axis {
            Generator::X => delta.s2 = d.s2.clone(),
            _ => delta.s1 = d.s1.clone(),
        }
        let before = pair_dvb(axis, &delta, &d)?;
        let after = pair_dvb(axis, &dual.apply(&delta), &lam.apply(&d))?;
        if before != after {
            violations += 1;
        }
    }
    Ok(violations)
}

/// `λ` with `2λ = μ`.
pub fn flip_correspondence(mu: &DvbConcrete) -> DvbConcrete {
    let half = Q::new(BigInt::from(1), BigInt::from(2));
    DvbConcrete {
        dims: mu.dims,
        lambda: mu.lambda.scale(&half),
    }
}

/// On `B ⊞ A ⊞ C`, the automorphism `φ̃_μ` against `φ̃_λ ∘ φ̃_λ`, where
/// one factor is `(φ_λ)^{XYX}` computed by three dualizations and the other
/// is `(φ_λ)^f`. Returns the number of sample points where they differ.
pub fn flip_violations(
    mu: &DvbConcrete,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<usize, ConcreteError> {
    let lam = flip_correspondence(mu);
    let xyx = [Generator::X, Generator::Y, Generator::X]
        .iter()
        .try_fold(lam.clone(), |acc, &g| dual_image_dvb(g, &acc))?;
    let flipped = DvbConcrete {
        dims: [lam.dims[1], lam.dims[0], lam.dims[2]],
        lambda: lam.lambda.permute_axes(&[1, 0, 2]),
    };
    let mu_tilde = DvbConcrete {
        dims: flipped.dims,
        lambda: mu.lambda.permute_axes(&[1, 0, 2]),
    };
    if xyx.dims != flipped.dims {
        return Err(ConcreteError::DimensionMismatch);
    }
    let mut violations = 0;
    for _ in 0..samples {
        let p = DvbPoint::random(flipped.dims, rng, 5);
        if xyx.apply(&flipped.apply(&p)) != mu_tilde.apply(&p) {
            violations += 1;
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_negation_and_involution() {
        for seed in 0..5 {
            let lam = random_dvb([2, 3, 2], seed);
            for axis in [Generator::X, Generator::Y] {
                let t = theta_dvb(axis, &lam).unwrap();
                assert_eq!(identify_dvb(axis, &t).unwrap(), lam.neg());
                assert_eq!(theta_dvb(axis, &t).unwrap(), lam);
            }
        }
        assert!(theta_dvb(Generator::X, &DvbConcrete::zero([1, 2, 3]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn theta_preserves_pairing_and_the_opposite_sign_does_not() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for axis in [Generator::X, Generator::Y] {
            let lam = random_dvb([2, 2, 3], 8);
            let t = theta_dvb(axis, &lam).unwrap();
            assert_eq!(
                dvb_pairing_violations(axis, &lam, &t, 40, &mut rng).unwrap(),
                0
            );
            let wrong = dual_image_dvb(axis, &lam).unwrap();
            assert!(dvb_pairing_violations(axis, &lam, &wrong, 40, &mut rng).unwrap() > 0);
        }
    }

    #[test]
    fn x_dual_layout() {
        let lam = random_dvb([1, 2, 3], 2);
        let t = theta_dvb(Generator::X, &lam).unwrap();
        assert_eq!(t.dims, [3, 2, 1]);
        assert_eq!(
            t.lambda.get(&[2, 1, 0]),
            &-lam.lambda.get(&[0, 1, 2]).clone()
        );
    }

    #[test]
    fn flip_halves() {
        let mut mu = DvbConcrete::zero([1, 1, 1]);
        assert!(flip_correspondence(&mu).is_zero());
        mu.lambda.set(&[0, 0, 0], q(1));
        assert_eq!(
            flip_correspondence(&mu).lambda.entries()[0],
            Q::new(BigInt::from(1), BigInt::from(2))
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mu = random_dvb([2, 3, 2], 6);
        let lam = flip_correspondence(&mu);
        assert_eq!(lam.lambda.scale_int(2), mu.lambda);
        assert_eq!(flip_violations(&mu, 20, &mut rng).unwrap(), 0);
    }

    #[test]
    fn pairing_example() {
        let d = DvbPoint {
            s1: vec![q(2)],
            s2: vec![q(3)],
            core: vec![q(5)],
        };
        let delta = DvbPoint {
            s1: vec![q(7)],
            s2: vec![q(3)],
            core: vec![q(11)],
        };
        assert_eq!(
            pair_dvb(Generator::X, &delta, &d).unwrap(),
            q(11 * 2 + 7 * 5)
        );
        assert!(pair_dvb(Generator::Y, &delta, &d).is_err());
        assert_eq!(
            pair_dvb(Generator::Z, &delta, &d),
            Err(ConcreteError::NoSuchAxis)
        );
    }
}
