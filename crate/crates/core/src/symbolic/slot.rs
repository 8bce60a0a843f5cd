use std::fmt;

use serde::{Deserialize, Serialize};

/// The six bilinear components of a triple-bundle statomorphism.
///
/// Each slot is a trilinear form on three building spaces whose index sets
/// partition `{0,1,2,3}` into two singletons and one pair; the pair
/// identifies the slot (see [`Slot::pair_mask`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Gamma,
    Beta,
    Alpha,
    Lambda,
    Mu,
    Nu,
}

impl Slot {
    /// Fixed order used for rows, matrices and storage.
    pub const ALL: [Slot; 6] = [
        Slot::Gamma,
        Slot::Beta,
        Slot::Alpha,
        Slot::Lambda,
        Slot::Mu,
        Slot::Nu,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Slot {
        Slot::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Gamma => "gamma",
            Slot::Beta => "beta",
            Slot::Alpha => "alpha",
            Slot::Lambda => "lambda",
            Slot::Mu => "mu",
            Slot::Nu => "nu",
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Slot::Gamma => 'γ',
            Slot::Beta => 'β',
            Slot::Alpha => 'α',
            Slot::Lambda => 'λ',
            Slot::Mu => 'μ',
            Slot::Nu => 'ν',
        }
    }

    pub fn from_symbol(c: char) -> Option<Slot> {
        Slot::ALL.into_iter().find(|s| s.symbol() == c)
    }

    /// Index pair (bitmask over `{0,1,2,3}`) not covered by the slot's two
    /// singleton arguments. `γ: E₁⊗E₂→E₁₂` is a form on `E₁×E₂×E₀₃`, so its
    /// pair is `{0,3}`.
    pub fn pair_mask(self) -> u8 {
        match self {
            Slot::Gamma => 0b1001,
            Slot::Beta => 0b0101,
            Slot::Alpha => 0b0011,
            Slot::Lambda => 0b1100,
            Slot::Mu => 0b1010,
            Slot::Nu => 0b0110,
        }
    }

    pub fn from_pair_mask(mask: u8) -> Option<Slot> {
        Slot::ALL.into_iter().find(|s| s.pair_mask() == mask)
    }

    pub fn complement(self) -> Slot {
        match self {
            Slot::Gamma => Slot::Nu,
            Slot::Beta => Slot::Mu,
            Slot::Alpha => Slot::Lambda,
            Slot::Lambda => Slot::Alpha,
            Slot::Mu => Slot::Beta,
            Slot::Nu => Slot::Gamma,
        }
    }

    pub fn pair_key(self) -> PairKey {
        match self {
            Slot::Alpha | Slot::Lambda => PairKey::AlphaLambda,
            Slot::Beta | Slot::Mu => PairKey::BetaMu,
            Slot::Gamma | Slot::Nu => PairKey::GammaNu,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A complementary pair of slots; indexes the quadratic terms of the ρ part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKey {
    AlphaLambda,
    BetaMu,
    GammaNu,
}

impl PairKey {
    pub const ALL: [PairKey; 3] = [PairKey::AlphaLambda, PairKey::BetaMu, PairKey::GammaNu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn slots(self) -> (Slot, Slot) {
        match self {
            PairKey::AlphaLambda => (Slot::Alpha, Slot::Lambda),
            PairKey::BetaMu => (Slot::Beta, Slot::Mu),
            PairKey::GammaNu => (Slot::Gamma, Slot::Nu),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairKey::AlphaLambda => "alpha_lambda",
            PairKey::BetaMu => "beta_mu",
            PairKey::GammaNu => "gamma_nu",
        }
    }

    pub fn symbol(self) -> String {
        let (a, b) = self.slots();
        format!("{}{}", a.symbol(), b.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_complementary() {
        for s in Slot::ALL {
            assert_eq!(s.pair_mask() ^ s.complement().pair_mask(), 0b1111);
            assert_eq!(s.complement().complement(), s);
            assert_eq!(s.pair_key(), s.complement().pair_key());
            assert_eq!(Slot::from_pair_mask(s.pair_mask()), Some(s));
            assert_eq!(Slot::from_symbol(s.symbol()), Some(s));
        }
    }
}
