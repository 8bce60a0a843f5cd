use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::symbolic::Slot;

use super::dims::{building_position, BuildingDims, BUILDING, E123};
use super::g3::{slot_labels, G3Concrete, RHO_LABELS};
use super::tensor::{q, Q};
use super::ConcreteError;

/// A point of the decomposed triple vector bundle over a point: one
/// coordinate vector per building space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TvbPoint {
    #[serde(with = "super::tensor::qvec")]
    pub e1: Vec<Q>,
    #[serde(with = "super::tensor::qvec")]
    pub e2: Vec<Q>,
    #[serde(with = "super::tensor::qvec")]
    pub e3: Vec<Q>,
    #[serde(with = "super::tensor::qvec")]
    pub e12: Vec<Q>,
    #[serde(with = "super::tensor::qvec")]
    pub e13: Vec<Q>,
    #[serde(with = "super::tensor::qvec")]
    pub e23: Vec<Q>,
    #[serde(with = "super::tensor::qvec")]
    pub e123: Vec<Q>,
}

impl TvbPoint {
    pub fn from_fn(dims: &BuildingDims, mut f: impl FnMut(u8, usize) -> Q) -> Self {
        let mut coords: Vec<Vec<Q>> = BUILDING
            .iter()
            .map(|&m| (0..dims.dim(m)).map(|i| f(m, i)).collect())
            .collect();
        let mut take = |k: usize| std::mem::take(&mut coords[k]);
        TvbPoint {
            e1: take(0),
            e2: take(1),
            e3: take(2),
            e12: take(3),
            e13: take(4),
            e23: take(5),
            e123: take(6),
        }
    }

    pub fn zero(dims: &BuildingDims) -> Self {
        Self::from_fn(dims, |_, _| q(0))
    }

    /// Uniform integer coordinates in `[−range, range]`.
    pub fn random(dims: &BuildingDims, rng: &mut impl Rng, range: i64) -> Self {
        Self::from_fn(dims, |_, _| q(rng.gen_range(-range..=range)))
    }

    /// Each coordinate vector is zero or a single standard basis vector.
    pub fn random_sparse(dims: &BuildingDims, rng: &mut impl Rng) -> Self {
        let picks: Vec<Option<usize>> = BUILDING
            .iter()
            .map(|&m| {
                let n = dims.dim(m);
                (n > 0 && rng.gen_bool(0.75)).then(|| rng.gen_range(0..n))
            })
            .collect();
        Self::from_fn(dims, |m, i| {
            let k = building_position(m).expect("building index");
            q(i64::from(picks[k] == Some(i)))
        })
    }

    pub fn get(&self, mask: u8) -> &[Q] {
        match building_position(mask) {
            Some(0) => &self.e1,
            Some(1) => &self.e2,
            Some(2) => &self.e3,
            Some(3) => &self.e12,
            Some(4) => &self.e13,
            Some(5) => &self.e23,
            Some(6) => &self.e123,
            _ => panic!("index set {mask:#06b} is not a building index"),
        }
    }

    pub fn get_mut(&mut self, mask: u8) -> &mut Vec<Q> {
        match building_position(mask) {
            Some(0) => &mut self.e1,
            Some(1) => &mut self.e2,
            Some(2) => &mut self.e3,
            Some(3) => &mut self.e12,
            Some(4) => &mut self.e13,
            Some(5) => &mut self.e23,
            Some(6) => &mut self.e123,
            _ => panic!("index set {mask:#06b} is not a building index"),
        }
    }

    pub fn matches(&self, dims: &BuildingDims) -> bool {
        BUILDING.iter().all(|&m| self.get(m).len() == dims.dim(m))
    }
}

/// `φ(e)`: side coordinates fixed, each core shifted by its slot evaluated on
/// the sides, and the ultracore shifted by λ, μ, ν on the original core
/// values plus ρ.
pub fn apply_statomorphism(g: &G3Concrete, p: &TvbPoint) -> Result<TvbPoint, ConcreteError> {
    g.validate()?;
    if !p.matches(&g.dims) {
        return Err(ConcreteError::DimensionMismatch);
    }
    let mut out = p.clone();
    for s in Slot::ALL {
        let [a, b, c] = slot_labels(s);
        let shift = g.slot(s).eval(&[p.get(a), p.get(b)]);
        let target = out.get_mut(super::dims::FULL ^ c);
        for (x, y) in target.iter_mut().zip(shift) {
            *x += y;
        }
    }
    let [a, b, c, _] = RHO_LABELS;
    let shift = g.rho.eval(&[p.get(a), p.get(b), p.get(c)]);
    for (x, y) in out.get_mut(E123).iter_mut().zip(shift) {
        *x += y;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::g3::{compose_g3, invert_g3, random_g3};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_statomorphism_is_identity() {
        let d = BuildingDims::from_array([2, 1, 2, 3, 1, 2, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = TvbPoint::random(&d, &mut rng, 5);
        assert_eq!(apply_statomorphism(&G3Concrete::zero(d), &p).unwrap(), p);
    }

    #[test]
    fn dims_one_formula() {
        let d = BuildingDims::uniform(1);
        let g = random_g3(d, 7);
        let p = TvbPoint::from_fn(&d, |m, _| q(i64::from(m)));
        let out = apply_statomorphism(&g, &p).unwrap();
        let s = |t: &crate::concrete::tensor::Tensor| t.entries()[0].clone();
        let (e1, e2, e3) = (q(2), q(4), q(8));
        let (e12, e13, e23) = (q(6), q(10), q(12));
        assert_eq!(out.e12[0], &e12 + s(&g.gamma) * &e1 * &e2);
        assert_eq!(out.e13[0], &e13 + s(&g.beta) * &e1 * &e3);
        assert_eq!(out.e23[0], &e23 + s(&g.alpha) * &e2 * &e3);
        let expected = q(14)
            + s(&g.nu) * &e3 * &e12
            + s(&g.lambda) * &e1 * &e23
            + s(&g.mu) * &e2 * &e13
            + s(&g.rho) * &e1 * &e2 * &e3;
        assert_eq!(out.e123[0], expected);
        assert_eq!((&out.e1, &out.e2, &out.e3), (&p.e1, &p.e2, &p.e3));
    }

    #[test]
    fn action_respects_composition() {
        let d = BuildingDims::from_array([2, 2, 1, 2, 1, 2, 3]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..5 {
            let g = random_g3(d, seed);
            let h = random_g3(d, seed + 50);
            let p = TvbPoint::random(&d, &mut rng, 4);
            let hg = compose_g3(&h, &g).unwrap();
            let step = apply_statomorphism(&h, &apply_statomorphism(&g, &p).unwrap()).unwrap();
            assert_eq!(apply_statomorphism(&hg, &p).unwrap(), step);
            let back = apply_statomorphism(
                &invert_g3(&g).unwrap(),
                &apply_statomorphism(&g, &p).unwrap(),
            )
            .unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let g = G3Concrete::zero(BuildingDims::uniform(1));
        let p = TvbPoint::zero(&BuildingDims::uniform(2));
        assert_eq!(
            apply_statomorphism(&g, &p),
            Err(ConcreteError::DimensionMismatch)
        );
    }
}
