//! Index sets and building-space dimensions.
//!
//! Index sets are bitmasks over `{0,1,2,3}`. The building spaces of the
//! current bundle are indexed by the nonempty `I ⊆ {1,2,3}`; a set `J`
//! containing `0` names the dual of `E_{Jᶜ}`.

use serde::{Deserialize, Serialize};

use crate::perm::Perm4;

pub const ZERO: u8 = 0b0001;
pub const E1: u8 = 0b0010;
pub const E2: u8 = 0b0100;
pub const E3: u8 = 0b1000;
pub const E12: u8 = E1 | E2;
pub const E13: u8 = E1 | E3;
pub const E23: u8 = E2 | E3;
pub const E123: u8 = E1 | E2 | E3;
pub const FULL: u8 = 0b1111;

/// Building index sets in storage order.
pub const BUILDING: [u8; 7] = [E1, E2, E3, E12, E13, E23, E123];

pub fn building_position(mask: u8) -> Option<usize> {
    BUILDING.iter().position(|&m| m == mask)
}

pub fn mask_name(mask: u8) -> String {
    let digits: String = (0..4)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| char::from(b'0' + i as u8))
        .collect();
    format!("E{digits}")
}

/// Dimensions of the seven building spaces over a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BuildingDims {
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub d12: usize,
    pub d13: usize,
    pub d23: usize,
    pub d123: usize,
}

impl BuildingDims {
    pub fn from_array(d: [usize; 7]) -> Self {
        let [d1, d2, d3, d12, d13, d23, d123] = d;
        BuildingDims {
            d1,
            d2,
            d3,
            d12,
            d13,
            d23,
            d123,
        }
    }

    pub fn to_array(&self) -> [usize; 7] {
        [
            self.d1, self.d2, self.d3, self.d12, self.d13, self.d23, self.d123,
        ]
    }

    pub fn uniform(n: usize) -> Self {
        Self::from_array([n; 7])
    }

    /// Dimension of the space with index set `mask`; a set containing `0`
    /// is the dual of its complement.
    pub fn dim(&self, mask: u8) -> usize {
        let m = if mask & ZERO != 0 { FULL ^ mask } else { mask };
        let pos = building_position(m)
            .unwrap_or_else(|| panic!("index set {mask:#06b} is not a building index"));
        self.to_array()[pos]
    }

    /// Dimensions seen through the relabeling `σ`: `E'_I` is the space the
    /// current bundle calls `E_{σ(I)}`.
    pub fn relabeled(&self, sigma: &Perm4) -> Self {
        Self::from_array(BUILDING.map(|m| self.dim(sigma.apply_mask(m))))
    }
}
