//! Exact point-scale model of decomposed double and triple vector bundles.

mod dims;
mod dual;
mod dvb;
mod g3;
mod oracle;
mod point;
mod tensor;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use dims::{building_position, mask_name, BuildingDims, BUILDING};
pub use dual::{
    apply_theta_concrete, axis_sigma, check_pairing_invariance, compatible_dual_point,
    dualize_symbolic, dualize_word, pair_dual, IndexFrame, InvarianceReport,
};
pub use dvb::{
    dual_image_dvb, dvb_pairing_violations, flip_correspondence, flip_violations, identify_dvb,
    pair_dvb, random_dvb, theta_dvb, DvbConcrete, DvbPoint,
};
pub use g3::{compose_g3, invert_g3, random_g3, slot_labels, G3Concrete, Labeled, RHO_LABELS};
pub use oracle::{
    solve_dual_oracle, solve_dual_oracle_with, IncrementalSystem, OracleConfig, OracleSolution,
};
pub use point::{apply_statomorphism, TvbPoint};
pub use tensor::{format_q, q, Tensor, Q};

/// The generator used for all sampling in this module.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConcreteError {
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("tensor {0} has the wrong shape")]
    ShapeMismatch(&'static str),
    #[error("shared coordinate {0} differs between the paired points")]
    ProjectionMismatch(String),
    #[error("element permutes the building spaces by {0}; dualize letter by letter instead")]
    NonTrivialPerm(String),
    #[error("linear system stalled at rank {rank} of {unknowns}")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("pairing constraints are inconsistent")]
    Inconsistent,
    #[error("a double vector bundle has only the dualizations X and Y")]
    NoSuchAxis,
}
