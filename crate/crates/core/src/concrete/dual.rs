//! Dualization of concrete statomorphisms and the dual pairings.
//!
//! Dualizing over axis `k` relabels index sets by the transposition
//! `σ = (0k)`: the space the dual bundle calls `E_I` is the space the
//! original calls `E_{σ(I)}`, where a set containing `0` names the dual of
//! its complement. Tensor entries never change under this identification;
//! only axis labels (and hence axis order) do.

use rand::Rng;
use serde::Serialize;

use crate::perm::Perm4;
use crate::symbolic::{generator_element, DualityElement, PairKey, Slot, ThetaAut};
use crate::word::{Generator, Word};

use super::dims::{BuildingDims, BUILDING, FULL};
use super::g3::{G3Concrete, Labeled, RHO_LABELS};
use super::point::{apply_statomorphism, TvbPoint};
use super::tensor::{dot, Q};
use super::ConcreteError;

pub fn axis_sigma(axis: Generator) -> Perm4 {
    Perm4::transposition(0, axis.axis())
}

fn axis_bit(axis: Generator) -> u8 {
    1 << axis.axis()
}

/// Which original index set each current index set stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IndexFrame {
    pub labeling: Perm4,
}

impl IndexFrame {
    pub fn identity() -> Self {
        IndexFrame {
            labeling: Perm4::identity(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.labeling.is_identity()
    }

    pub fn after(&self, axis: Generator) -> Self {
        IndexFrame {
            labeling: self.labeling.compose(&axis_sigma(axis)),
        }
    }

    /// The original index set behind a current one.
    pub fn original(&self, mask: u8) -> u8 {
        self.labeling.apply_mask(mask)
    }
}

/// Sum of the canonical pairings between the dual point `delta` and `d`
/// over the index sets containing the axis, without the projection check.
pub(crate) fn pairing_sum(axis: Generator, delta: &TvbPoint, d: &TvbPoint) -> Q {
    let sigma = axis_sigma(axis);
    BUILDING
        .iter()
        .filter(|&&j| j & axis_bit(axis) != 0)
        .map(|&j| dot(delta.get(j), d.get(FULL ^ sigma.apply_mask(j))))
        .sum()
}

/// `⟨δ|d⟩` for `δ` in the dual over `axis`. For X this is
/// `⟨e₀₂₃,e₁⟩ + ⟨e₀₃,e₁₂⟩ + ⟨e₀₂,e₁₃⟩ + ⟨e₀,e₁₂₃⟩`; the coordinates not
/// involving the axis are shared and must agree.
pub fn pair_dual(
    axis: Generator,
    dims: &BuildingDims,
    delta: &TvbPoint,
    d: &TvbPoint,
) -> Result<Q, ConcreteError> {
    let dual_dims = dims.relabeled(&axis_sigma(axis));
    if !d.matches(dims) || !delta.matches(&dual_dims) {
        return Err(ConcreteError::DimensionMismatch);
    }
    if let Some(&j) = BUILDING
        .iter()
        .find(|&&j| j & axis_bit(axis) == 0 && delta.get(j) != d.get(j))
    {
        return Err(ConcreteError::ProjectionMismatch(super::dims::mask_name(j)));
    }
    Ok(pairing_sum(axis, delta, d))
}

/// A random point of the dual over `axis` that shares its projection with `d`.
pub fn compatible_dual_point(
    axis: Generator,
    dims: &BuildingDims,
    d: &TvbPoint,
    rng: &mut impl Rng,
    range: i64,
) -> TvbPoint {
    let mut delta = TvbPoint::random(&dims.relabeled(&axis_sigma(axis)), rng, range);
    for &j in BUILDING.iter().filter(|&&j| j & axis_bit(axis) == 0) {
        *delta.get_mut(j) = d.get(j).to_vec();
    }
    delta
}

/// Applies `theta` and moves every tensor into the frame relabeled by
/// `sigma`; the slot map must be compatible with `sigma`.
fn transport(g: &G3Concrete, theta: &ThetaAut, sigma: &Perm4) -> G3Concrete {
    let mut out = G3Concrete::zero(g.dims.relabeled(sigma));
    for s in Slot::ALL {
        let src = theta.slots.target(s);
        let moved = g.labeled(src).relabel(sigma).canonical();
        assert_eq!(
            moved.slot(),
            Some(s),
            "slot map does not follow the relabeling"
        );
        *out.slot_mut(s) = moved.tensor.scale_int(i64::from(theta.slots.sign(s)));
    }
    let rho =
        PairKey::ALL.iter().fold(
            g.rho.scale_int(i64::from(theta.rho.eps)),
            |acc, &p| match theta.rho.coeff(p) {
                0 => acc,
                c => acc.add(&g.pair_product(p).scale_int(c)),
            },
        );
    out.rho = Labeled::new(&RHO_LABELS, rho)
        .relabel(sigma)
        .canonical()
        .tensor;
    out
}

/// The statomorphism of the dual over `axis` induced by `g`, obtained by
/// applying the generator's row as a reindexing. Returns the updated frame.
pub fn dualize_symbolic(
    g: &G3Concrete,
    frame: IndexFrame,
    axis: Generator,
) -> Result<(G3Concrete, IndexFrame), ConcreteError> {
    g.validate()?;
    let theta = generator_element(axis).theta;
    Ok((transport(g, &theta, &axis_sigma(axis)), frame.after(axis)))
}

/// Dualizes letter by letter, leftmost letter first.
pub fn dualize_word(g: &G3Concrete, w: &Word) -> Result<(G3Concrete, IndexFrame), ConcreteError> {
    w.letters()
        .iter()
        .try_fold((g.clone(), IndexFrame::identity()), |(h, f), &a| {
            dualize_symbolic(&h, f, a)
        })
}

/// `θ_e(g)` for an element that returns every building space to itself.
pub fn apply_theta_concrete(
    e: &DualityElement,
    g: &G3Concrete,
) -> Result<G3Concrete, ConcreteError> {
    if !e.perm.is_identity() {
        return Err(ConcreteError::NonTrivialPerm(e.perm.to_string()));
    }
    g.validate()?;
    Ok(transport(g, &e.theta, &Perm4::identity()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub samples: usize,
    pub violations: usize,
}

/// Checks `⟨θ(g)(δ) | g(d)⟩ = ⟨δ | d⟩` on random compatible pairs.
pub fn check_pairing_invariance(
    g: &G3Concrete,
    dual: &G3Concrete,
    axis: Generator,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<InvarianceReport, ConcreteError> {
    let mut report = InvarianceReport {
        samples,
        violations: 0,
    };
    for _ in 0..samples {
        let d = TvbPoint::random(&g.dims, rng, 5);
        let delta = compatible_dual_point(axis, &g.dims, &d, rng, 5);
        let before = pair_dual(axis, &g.dims, &delta, &d)?;
        let after = pair_dual(
            axis,
            &g.dims,
            &apply_statomorphism(dual, &delta)?,
            &apply_statomorphism(g, &d)?,
        )?;
        if before != after {
            report.violations += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::dims::{E1, E12, E123, E13};
    use crate::concrete::g3::random_g3;
    use crate::concrete::tensor::q;
    use crate::symbolic::eval_word;
    use crate::word::parse_word;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pairing_all_ones_is_four() {
        let d = BuildingDims::uniform(1);
        let one = TvbPoint::from_fn(&d, |_, _| q(1));
        for axis in Generator::ALL {
            assert_eq!(pair_dual(axis, &d, &one, &one).unwrap(), q(4));
        }
    }

    #[test]
    fn pairing_with_zero_point() {
        let d = BuildingDims::from_array([1, 2, 1, 2, 1, 2, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let zero = TvbPoint::zero(&d);
        let delta = compatible_dual_point(Generator::Y, &d, &zero, &mut rng, 5);
        assert_eq!(pair_dual(Generator::Y, &d, &delta, &zero).unwrap(), q(0));
    }

    #[test]
    fn x_pairing_terms() {
        // δ = (e₀, e₂, e₃, e₀₂, e₀₃, e₂₃, e₀₂₃) against d = (e₁, …, e₁₂₃).
        let d = BuildingDims::uniform(1);
        let delta = TvbPoint::from_fn(&d, |m, _| {
            q(match m {
                E1 => 2,   // e₀
                E12 => 3,  // e₀₂
                E13 => 5,  // e₀₃
                E123 => 7, // e₀₂₃
                _ => 1,
            })
        });
        let p = TvbPoint::from_fn(&d, |m, _| {
            q(match m {
                E1 => 11,
                E12 => 13,
                E13 => 17,
                E123 => 19,
                _ => 1,
            })
        });
        let expected = 7 * 11 + 5 * 13 + 3 * 17 + 2 * 19;
        assert_eq!(
            pair_dual(Generator::X, &d, &delta, &p).unwrap(),
            q(expected)
        );
    }

    #[test]
    fn projection_mismatch_is_reported() {
        let d = BuildingDims::uniform(1);
        let a = TvbPoint::zero(&d);
        let mut b = a.clone();
        b.e23[0] = q(1);
        assert_eq!(
            pair_dual(Generator::X, &d, &b, &a),
            Err(ConcreteError::ProjectionMismatch("E23".into()))
        );
        assert!(pair_dual(Generator::Y, &d, &b, &a).is_ok());
    }

    #[test]
    fn x_dualization_examples() {
        let d = BuildingDims::from_array([1, 2, 3, 2, 1, 3, 2]);
        let g = random_g3(d, 5);
        let (h, frame) = dualize_symbolic(&g, IndexFrame::identity(), Generator::X).unwrap();
        assert_eq!(frame.labeling, Perm4::transposition(0, 1));
        assert_eq!(h.dims, d.relabeled(&Perm4::transposition(0, 1)));
        assert_eq!(h.alpha, g.alpha);
        // λ' on E₀ × E₂₃ × E₁ is −λ on E₁ × E₂₃ × E₀ with outer axes swapped.
        assert_eq!(h.lambda, g.lambda.permute_axes(&[2, 1, 0]).neg());
        let (z, _) =
            dualize_symbolic(&G3Concrete::zero(d), IndexFrame::identity(), Generator::Z).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn generators_preserve_pairing() {
        let d = BuildingDims::from_array([2, 1, 2, 2, 1, 2, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for axis in Generator::ALL {
            let g = random_g3(d, 3 + axis.axis() as u64);
            let (h, _) = dualize_symbolic(&g, IndexFrame::identity(), axis).unwrap();
            let r = check_pairing_invariance(&g, &h, axis, 30, &mut rng).unwrap();
            assert_eq!(r.violations, 0, "axis {axis}");
        }
    }

    #[test]
    fn kernel_words_act_through_theta() {
        let d = BuildingDims::from_array([1, 2, 2, 1, 2, 2, 1]);
        for w in ["(XYXZ)^2", "(YZYX)^2", "(ZXZY)^2", "(XYZ)^4"] {
            let w = parse_word(w).unwrap();
            let g = random_g3(d, 77);
            let (chained, frame) = dualize_word(&g, &w).unwrap();
            assert!(frame.is_identity());
            assert_eq!(
                chained,
                apply_theta_concrete(&eval_word(&w), &g).unwrap(),
                "{w}"
            );
        }
    }

    #[test]
    fn theta_requires_trivial_perm() {
        let g = G3Concrete::zero(BuildingDims::uniform(1));
        assert!(matches!(
            apply_theta_concrete(&generator_element(Generator::X), &g),
            Err(ConcreteError::NonTrivialPerm(_))
        ));
        assert_eq!(
            apply_theta_concrete(&DualityElement::identity(), &g).unwrap(),
            g
        );
    }
}
