//! Re-derives the dual of a statomorphism from pairing invariance alone.
//!
//! The unknowns are the entries of the dual statomorphism `g'`. For a
//! compatible pair `(δ, d)`, `g'(δ)` is affine in the unknowns with `δ`
//! fixed, so the two requirements
//!
//! * `g'(δ)` and `g(d)` have the same projection, and
//! * `⟨g'(δ) | g(d)⟩ = ⟨δ | d⟩`,
//!
//! are linear equations. Samples are added until the system has full rank.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::symbolic::Slot;
use crate::word::Generator;

use super::dims::{BuildingDims, BUILDING, FULL};
use super::dual::{axis_sigma, compatible_dual_point, pair_dual, pairing_sum};
use super::g3::{labels_shape, slot_labels, G3Concrete, RHO_LABELS};
use super::point::{apply_statomorphism, TvbPoint};
use super::tensor::{advance, Q};
use super::ConcreteError;

/// Exact row reduction that accepts equations one at a time.
#[derive(Clone, Debug)]
pub struct IncrementalSystem {
    unknowns: usize,
    /// Reduced rows `(coefficients, rhs)`, each with a unit pivot that is zero
    /// in every other row.
    rows: Vec<(Vec<Q>, Q)>,
    pivots: Vec<usize>,
}

impl IncrementalSystem {
    pub fn new(unknowns: usize) -> Self {
        IncrementalSystem {
            unknowns,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.unknowns
    }

    /// Adds an equation; `Ok(true)` if it raised the rank.
    pub fn add(&mut self, mut coeffs: Vec<Q>, mut rhs: Q) -> Result<bool, ConcreteError> {
        assert_eq!(coeffs.len(), self.unknowns);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if coeffs[p].is_zero() {
                continue;
            }
            let f = coeffs[p].clone();
            for (c, r) in coeffs.iter_mut().zip(&row.0) {
                if !r.is_zero() {
                    *c -= &f * r;
                }
            }
            rhs -= &f * &row.1;
        }
        let Some(p) = coeffs.iter().position(|c| !c.is_zero()) else {
            return if rhs.is_zero() {
                Ok(false)
            } else {
                Err(ConcreteError::Inconsistent)
            };
        };
        let inv = coeffs[p].recip();
        for c in coeffs.iter_mut() {
            if !c.is_zero() {
                *c *= &inv;
            }
        }
        rhs *= &inv;
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row.0[p].is_zero() {
                continue;
            }
            let f = row.0[p].clone();
            for (c, n) in row.0.iter_mut().zip(&coeffs) {
                if !n.is_zero() {
                    *c -= &f * n;
                }
            }
            row.1 -= &f * &rhs;
        }
        self.rows.push((coeffs, rhs));
        self.pivots.push(p);
        Ok(true)
    }

    /// The unique solution, if the system has full rank.
    pub fn solution(&self) -> Option<Vec<Q>> {
        if !self.is_full_rank() {
            return None;
        }
        let mut x = vec![Q::zero(); self.unknowns];
        for ((_, rhs), &p) in self.rows.iter().zip(&self.pivots) {
            x[p] = rhs.clone();
        }
        Some(x)
    }
}

/// Layout of the unknown tensors of the dual statomorphism.
struct Layout {
    /// `(labels, shape, offset)` for γ, β, α, λ, μ, ν, ρ.
    blocks: Vec<(Vec<u8>, Vec<usize>, usize)>,
    total: usize,
}

impl Layout {
    fn new(dims: &BuildingDims) -> Self {
        let mut blocks = Vec::new();
        let mut offset = 0;
        let labels = Slot::ALL
            .iter()
            .map(|&s| slot_labels(s).to_vec())
            .chain(std::iter::once(RHO_LABELS.to_vec()));
        for l in labels {
            let shape = labels_shape(dims, &l);
            let n: usize = shape.iter().product();
            blocks.push((l, shape, offset));
            offset += n;
        }
        Layout {
            blocks,
            total: offset,
        }
    }
}

/// Adds the equations contributed by one compatible pair.
fn add_sample(
    system: &mut IncrementalSystem,
    layout: &Layout,
    axis: Generator,
    g: &G3Concrete,
    delta: &TvbPoint,
    d: &TvbPoint,
) -> Result<(), ConcreteError> {
    let sigma = axis_sigma(axis);
    let bit = 1u8 << axis.axis();
    let gd = apply_statomorphism(g, d)?;

    let mut pairing_row = vec![Q::zero(); layout.total];
    // Core constraints: output index set -> one row per coordinate.
    let mut core_rows: Vec<(u8, Vec<Vec<Q>>)> = Vec::new();

    for (labels, shape, offset) in &layout.blocks {
        let (inputs, out_dual) = labels.split_at(labels.len() - 1);
        let out = FULL ^ out_dual[0];
        let vectors: Vec<&[Q]> = inputs.iter().map(|&m| delta.get(m)).collect();
        let n: usize = shape.iter().product();
        let mut idx = vec![0; shape.len()];
        if out & bit != 0 {
            let w = gd.get(FULL ^ sigma.apply_mask(out));
            for k in 0..n {
                let mut c = w[idx[inputs.len()]].clone();
                for (v, &i) in vectors.iter().zip(&idx) {
                    if c.is_zero() {
                        break;
                    }
                    c *= &v[i];
                }
                pairing_row[offset + k] = c;
                advance(&mut idx, shape);
            }
        } else {
            let entry = match core_rows.iter().position(|(m, _)| *m == out) {
                Some(p) => p,
                None => {
                    core_rows.push((
                        out,
                        vec![vec![Q::zero(); layout.total]; delta.get(out).len()],
                    ));
                    core_rows.len() - 1
                }
            };
            let rows = &mut core_rows[entry].1;
            for k in 0..n {
                let mut c = Q::one();
                for (v, &i) in vectors.iter().zip(&idx) {
                    c *= &v[i];
                }
                rows[idx[inputs.len()]][offset + k] = c;
                advance(&mut idx, shape);
            }
        }
    }

    // ⟨δ | g(d)⟩ over the same terms; the projections no longer agree.
    let rhs = pair_dual(axis, &g.dims, delta, d)? - pairing_sum(axis, delta, &gd);
    system.add(pairing_row, rhs)?;
    for (out, rows) in core_rows {
        for (c, row) in rows.into_iter().enumerate() {
            let rhs = &gd.get(out)[c] - &d.get(out)[c];
            system.add(row, rhs)?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub seed: u64,
    /// Sparse samples tried before switching to dense random samples.
    pub sparse_samples: usize,
    /// Hard limit on the total number of samples.
    pub max_samples: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 0x5eed,
            sparse_samples: 4000,
            max_samples: 20000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSolution {
    pub dual: G3Concrete,
    pub samples_used: usize,
    pub unknowns: usize,
}

pub fn solve_dual_oracle(g: &G3Concrete, axis: Generator) -> Result<G3Concrete, ConcreteError> {
    solve_dual_oracle_with(g, axis, OracleConfig::default()).map(|s| s.dual)
}

pub fn solve_dual_oracle_with(
    g: &G3Concrete,
    axis: Generator,
    config: OracleConfig,
) -> Result<OracleSolution, ConcreteError> {
    g.validate()?;
    let dual_dims = g.dims.relabeled(&axis_sigma(axis));
    let layout = Layout::new(&dual_dims);
    let mut system = IncrementalSystem::new(layout.total);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut used = 0;
    while !system.is_full_rank() {
        if used >= config.max_samples {
            return Err(ConcreteError::Underdetermined {
                rank: system.rank(),
                unknowns: layout.total,
            });
        }
        let (d, delta) = if used < config.sparse_samples {
            let d = TvbPoint::random_sparse(&g.dims, &mut rng);
            let mut delta = TvbPoint::random_sparse(&dual_dims, &mut rng);
            for &j in BUILDING.iter().filter(|&&j| j & (1 << axis.axis()) == 0) {
                *delta.get_mut(j) = d.get(j).to_vec();
            }
            (d, delta)
        } else {
            let d = TvbPoint::random(&g.dims, &mut rng, 3);
            let delta = compatible_dual_point(axis, &g.dims, &d, &mut rng, 3);
            (d, delta)
        };
        add_sample(&mut system, &layout, axis, g, &delta, &d)?;
        used += 1;
    }

    let x = system.solution().expect("full rank");
    let mut dual = G3Concrete::zero(dual_dims);
    for (t, (_, _, offset)) in dual.tensors_mut().into_iter().zip(&layout.blocks) {
        let n = t.len();
        t.entries_mut().clone_from_slice(&x[*offset..offset + n]);
    }
    Ok(OracleSolution {
        dual,
        samples_used: used,
        unknowns: layout.total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::dual::{dualize_symbolic, IndexFrame};
    use crate::concrete::g3::random_g3;
    use crate::concrete::tensor::q;

    #[test]
    fn incremental_solver() {
        let mut s = IncrementalSystem::new(2);
        assert!(s.add(vec![q(1), q(1)], q(3)).unwrap());
        assert!(!s.add(vec![q(2), q(2)], q(6)).unwrap());
        assert_eq!(
            s.add(vec![q(2), q(2)], q(7)),
            Err(ConcreteError::Inconsistent)
        );
        assert!(s.solution().is_none());
        assert!(s.add(vec![q(1), q(-1)], q(1)).unwrap());
        assert_eq!(s.solution().unwrap(), vec![q(2), q(1)]);
    }

    #[test]
    fn zero_dualizes_to_zero() {
        let d = BuildingDims::uniform(1);
        for axis in Generator::ALL {
            assert!(solve_dual_oracle(&G3Concrete::zero(d), axis)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn oracle_matches_rows_at_dims_one() {
        let d = BuildingDims::uniform(1);
        for seed in 0..10 {
            let g = random_g3(d, seed);
            for axis in Generator::ALL {
                let (expected, _) = dualize_symbolic(&g, IndexFrame::identity(), axis).unwrap();
                assert_eq!(
                    solve_dual_oracle(&g, axis).unwrap(),
                    expected,
                    "seed {seed}, axis {axis}"
                );
            }
        }
    }

    #[test]
    fn oracle_matches_rows_at_mixed_dims() {
        let d = BuildingDims::from_array([1, 2, 1, 2, 1, 1, 2]);
        let g = random_g3(d, 3);
        for axis in Generator::ALL {
            let (expected, _) = dualize_symbolic(&g, IndexFrame::identity(), axis).unwrap();
            assert_eq!(
                solve_dual_oracle(&g, axis).unwrap(),
                expected,
                "axis {axis}"
            );
        }
    }
}
