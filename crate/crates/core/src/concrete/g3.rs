//! Statomorphisms of a decomposed triple vector bundle over a point.
//!
//! Each bilinear slot is stored as a trilinear form on three spaces whose
//! index sets partition `{0,1,2,3}`; ρ is a 4-form on `E₁ × E₂ × E₃ × E₀`.
//! A form on `E_A × E_B × E_{(A∪B)ᶜ}` is the map `E_A ⊗ E_B → E_{A∪B}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::perm::Perm4;
use crate::symbolic::{PairKey, Slot};

use super::dims::{BuildingDims, E1, E2, E3, FULL, ZERO};
use super::tensor::{q, Tensor};
use super::ConcreteError;

/// Axis labels of a slot: the two parts without `0`, ordered by
/// (size, least element), then the part containing `0`.
pub fn slot_labels(s: Slot) -> [u8; 3] {
    let pair = s.pair_mask();
    let singles: Vec<u8> = (0..4).map(|i| 1u8 << i).filter(|b| pair & b == 0).collect();
    let mut parts = [pair, singles[0], singles[1]];
    parts.sort_by_key(|&m| label_key(m));
    [parts[0], parts[1], parts[2]]
}

pub const RHO_LABELS: [u8; 4] = [E1, E2, E3, ZERO];

fn label_key(m: u8) -> (bool, u32, u32) {
    (m & ZERO != 0, m.count_ones(), m.trailing_zeros())
}

/// A tensor together with the index set carried by each axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled {
    pub labels: Vec<u8>,
    pub tensor: Tensor,
}

impl Labeled {
    pub fn new(labels: &[u8], tensor: Tensor) -> Self {
        assert_eq!(labels.len(), tensor.rank());
        Labeled {
            labels: labels.to_vec(),
            tensor,
        }
    }

    pub fn relabel(&self, sigma: &Perm4) -> Labeled {
        Labeled {
            labels: self.labels.iter().map(|&m| sigma.apply_mask(m)).collect(),
            tensor: self.tensor.clone(),
        }
    }

    /// Permutes axes into canonical label order.
    pub fn canonical(&self) -> Labeled {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by_key(|&i| label_key(self.labels[i]));
        Labeled {
            labels: order.iter().map(|&i| self.labels[i]).collect(),
            tensor: self.tensor.permute_axes(&order),
        }
    }

    /// The slot whose canonical labels these are, if any.
    pub fn slot(&self) -> Option<Slot> {
        let pair = self.labels.iter().find(|m| m.count_ones() == 2)?;
        let s = Slot::from_pair_mask(*pair)?;
        (slot_labels(s).as_slice() == self.labels.as_slice()).then_some(s)
    }
}

/// `outer(e, inner(e', e''))`: contracts the output of `inner` into the
/// axis of `outer` that carries the same index set, then orders axes
/// canonically.
pub fn substitute(inner: &Labeled, outer: &Labeled) -> Labeled {
    let out_axis = inner.labels.len() - 1;
    let produced = FULL ^ inner.labels[out_axis];
    let j = outer
        .labels
        .iter()
        .position(|&m| m == produced)
        .expect("outer form has no axis for the inner output");
    let tensor = inner.tensor.contract(out_axis, &outer.tensor, j);
    let labels: Vec<u8> = inner.labels[..out_axis]
        .iter()
        .chain(
            outer
                .labels
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != j)
                .map(|(_, m)| m),
        )
        .copied()
        .collect();
    Labeled::new(&labels, tensor).canonical()
}

/// A statomorphism `(γ, β, α, λ, μ, ν, ρ)` of the decomposed bundle with
/// the given building dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G3Concrete {
    pub dims: BuildingDims,
    pub gamma: Tensor,
    pub beta: Tensor,
    pub alpha: Tensor,
    pub lambda: Tensor,
    pub mu: Tensor,
    pub nu: Tensor,
    pub rho: Tensor,
}

pub fn labels_shape(dims: &BuildingDims, labels: &[u8]) -> Vec<usize> {
    labels.iter().map(|&m| dims.dim(m)).collect()
}

impl G3Concrete {
    pub fn zero(dims: BuildingDims) -> Self {
        let t = |s: Slot| Tensor::zeros(&labels_shape(&dims, &slot_labels(s)));
        G3Concrete {
            dims,
            gamma: t(Slot::Gamma),
            beta: t(Slot::Beta),
            alpha: t(Slot::Alpha),
            lambda: t(Slot::Lambda),
            mu: t(Slot::Mu),
            nu: t(Slot::Nu),
            rho: Tensor::zeros(&labels_shape(&dims, &RHO_LABELS)),
        }
    }

    pub fn slot(&self, s: Slot) -> &Tensor {
        match s {
            Slot::Gamma => &self.gamma,
            Slot::Beta => &self.beta,
            Slot::Alpha => &self.alpha,
            Slot::Lambda => &self.lambda,
            Slot::Mu => &self.mu,
            Slot::Nu => &self.nu,
        }
    }

    pub fn slot_mut(&mut self, s: Slot) -> &mut Tensor {
        match s {
            Slot::Gamma => &mut self.gamma,
            Slot::Beta => &mut self.beta,
            Slot::Alpha => &mut self.alpha,
            Slot::Lambda => &mut self.lambda,
            Slot::Mu => &mut self.mu,
            Slot::Nu => &mut self.nu,
        }
    }

    pub fn labeled(&self, s: Slot) -> Labeled {
        Labeled::new(&slot_labels(s), self.slot(s).clone())
    }

    pub fn labeled_rho(&self) -> Labeled {
        Labeled::new(&RHO_LABELS, self.rho.clone())
    }

    /// All seven tensors in the order γ, β, α, λ, μ, ν, ρ.
    pub fn tensors(&self) -> [&Tensor; 7] {
        [
            &self.gamma,
            &self.beta,
            &self.alpha,
            &self.lambda,
            &self.mu,
            &self.nu,
            &self.rho,
        ]
    }

    pub fn tensors_mut(&mut self) -> [&mut Tensor; 7] {
        [
            &mut self.gamma,
            &mut self.beta,
            &mut self.alpha,
            &mut self.lambda,
            &mut self.mu,
            &mut self.nu,
            &mut self.rho,
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.tensors().iter().all(|t| t.is_zero())
    }

    /// Checks every tensor shape against `dims`.
    pub fn validate(&self) -> Result<(), ConcreteError> {
        for s in Slot::ALL {
            if self.slot(s).shape() != labels_shape(&self.dims, &slot_labels(s)).as_slice() {
                return Err(ConcreteError::ShapeMismatch(s.name()));
            }
        }
        if self.rho.shape() != labels_shape(&self.dims, &RHO_LABELS).as_slice() {
            return Err(ConcreteError::ShapeMismatch("rho"));
        }
        Ok(())
    }

    /// The quadratic terms `λ(e₁, α(e₂,e₃))`, `μ(e₂, β(e₁,e₃))`, `ν(e₃, γ(e₁,e₂))`
    /// as 4-forms, indexed by pair.
    pub fn pair_product(&self, p: PairKey) -> Tensor {
        let (inner, outer) = match p {
            PairKey::AlphaLambda => (Slot::Alpha, Slot::Lambda),
            PairKey::BetaMu => (Slot::Beta, Slot::Mu),
            PairKey::GammaNu => (Slot::Gamma, Slot::Nu),
        };
        substitute(&self.labeled(inner), &self.labeled(outer)).tensor
    }
}

fn same_dims(a: &G3Concrete, b: &G3Concrete) -> Result<(), ConcreteError> {
    if a.dims != b.dims {
        return Err(ConcreteError::DimensionMismatch);
    }
    a.validate()?;
    b.validate()
}

/// The statomorphism "apply `first`, then `second`".
pub fn compose_g3(second: &G3Concrete, first: &G3Concrete) -> Result<G3Concrete, ConcreteError> {
    same_dims(second, first)?;
    let mut out = G3Concrete::zero(first.dims);
    for s in Slot::ALL {
        *out.slot_mut(s) = first.slot(s).add(second.slot(s));
    }
    let cross = [
        (Slot::Alpha, Slot::Lambda),
        (Slot::Beta, Slot::Mu),
        (Slot::Gamma, Slot::Nu),
    ]
    .iter()
    .map(|&(inner, outer)| substitute(&first.labeled(inner), &second.labeled(outer)).tensor)
    .fold(first.rho.add(&second.rho), |acc, t| acc.add(&t));
    out.rho = cross;
    Ok(out)
}

pub fn invert_g3(g: &G3Concrete) -> Result<G3Concrete, ConcreteError> {
    g.validate()?;
    let mut out = G3Concrete::zero(g.dims);
    for s in Slot::ALL {
        *out.slot_mut(s) = g.slot(s).neg();
    }
    out.rho = PairKey::ALL
        .iter()
        .fold(g.rho.neg(), |acc, &p| acc.add(&g.pair_product(p)));
    Ok(out)
}

/// Integer entries in `[−9, 9]`, filled in the order γ, β, α, λ, μ, ν, ρ.
pub fn random_g3(dims: BuildingDims, seed: u64) -> G3Concrete {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = G3Concrete::zero(dims);
    for t in g.tensors_mut() {
        for x in t.entries_mut() {
            *x = q(rng.gen_range(-9..=9));
        }
    }
    g
}
