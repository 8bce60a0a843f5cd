//! Automorphisms of the statomorphism group `G₃` induced by duality functors.
//!
//! A [`ThetaAut`] acts on a tuple `(γ, β, α, λ, μ, ν, ρ)` by
//!
//! ```text
//! out[s] = sign[s] · in[target[s]]                 for each bilinear slot s
//! out[ρ] = eps · in[ρ] + Σ_q coeff[q] · (q-pair product of the inputs)
//! ```
//!
//! where the pair products are `αλ`, `βμ` and `γν`.

use serde::{Deserialize, Serialize};

use super::slot::{PairKey, Slot};

/// Signed bijection on the six bilinear slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedSlotMap {
    target: [Slot; 6],
    sign: [i8; 6],
}

impl SignedSlotMap {
    pub fn identity() -> Self {
        SignedSlotMap {
            target: Slot::ALL,
            sign: [1; 6],
        }
    }

    /// `None` unless `entries` is a bijection with unit signs.
    pub fn new(entries: [(i8, Slot); 6]) -> Option<Self> {
        let mut seen = [false; 6];
        let mut target = Slot::ALL;
        let mut sign = [1; 6];
        for (i, (sg, src)) in entries.into_iter().enumerate() {
            if !(sg == 1 || sg == -1) || seen[src.index()] {
                return None;
            }
            seen[src.index()] = true;
            target[i] = src;
            sign[i] = sg;
        }
        Some(SignedSlotMap { target, sign })
    }

    /// The input slot feeding output slot `s`.
    pub fn target(&self, s: Slot) -> Slot {
        self.target[s.index()]
    }

    pub fn sign(&self, s: Slot) -> i8 {
        self.sign[s.index()]
    }

    pub fn entries(&self) -> [(i8, Slot); 6] {
        std::array::from_fn(|i| (self.sign[i], self.target[i]))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// The map obtained by applying `self` first and `next` second.
    pub fn then(&self, next: &SignedSlotMap) -> SignedSlotMap {
        let mut out = *self;
        for s in Slot::ALL {
            let mid = next.target(s);
            out.target[s.index()] = self.target(mid);
            out.sign[s.index()] = next.sign(s) * self.sign(mid);
        }
        out
    }

    pub fn inverse(&self) -> SignedSlotMap {
        let mut out = *self;
        for s in Slot::ALL {
            let t = self.target(s);
            out.target[t.index()] = s;
            out.sign[t.index()] = self.sign(s);
        }
        out
    }

    /// Whether every complementary pair is sent onto a complementary pair.
    pub fn preserves_pairs(&self) -> bool {
        Slot::ALL
            .iter()
            .all(|&s| self.target(s.complement()) == self.target(s).complement())
    }

    /// Pair that the inputs of pair `p` come from, and the product of the two signs.
    ///
    /// Panics if the map does not preserve pairs.
    pub fn pair_source(&self, p: PairKey) -> (PairKey, i8) {
        let (a, b) = p.slots();
        let (ta, tb) = (self.target(a), self.target(b));
        assert_eq!(ta.complement(), tb, "slot map does not preserve pairs");
        (ta.pair_key(), self.sign(a) * self.sign(b))
    }

    /// Signed 6×6 permutation matrix with `out = M · in` in slot order.
    pub fn matrix(&self) -> [[i8; 6]; 6] {
        let mut m = [[0; 6]; 6];
        for s in Slot::ALL {
            m[s.index()][self.target(s).index()] = self.sign(s);
        }
        m
    }
}

/// The ρ component of a [`ThetaAut`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RhoPart {
    pub eps: i8,
    coeff: [i64; 3],
}

impl RhoPart {
    pub fn identity() -> Self {
        RhoPart {
            eps: 1,
            coeff: [0; 3],
        }
    }

    pub fn new(eps: i8, coeff: [i64; 3]) -> Self {
        RhoPart { eps, coeff }
    }

    pub fn coeff(&self, q: PairKey) -> i64 {
        self.coeff[q.index()]
    }

    pub fn coeffs(&self) -> [i64; 3] {
        self.coeff
    }

    pub fn coeffs_bounded(&self) -> bool {
        self.coeff.iter().all(|c| c.abs() <= 1)
    }
}

/// Exact representation of the automorphism `θ_W` of `G₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaAut {
    pub slots: SignedSlotMap,
    pub rho: RhoPart,
}

impl ThetaAut {
    pub fn identity() -> Self {
        ThetaAut {
            slots: SignedSlotMap::identity(),
            rho: RhoPart::identity(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self` applied to the components first, then `next`.
    pub fn then(&self, next: &ThetaAut) -> ThetaAut {
        let eps = self.rho.eps * next.rho.eps;
        let mut coeff = [0i64; 3];
        for q in PairKey::ALL {
            coeff[q.index()] = i64::from(next.rho.eps) * self.rho.coeff(q);
        }
        for p in PairKey::ALL {
            let c = next.rho.coeff(p);
            if c != 0 {
                let (q, s) = self.slots.pair_source(p);
                coeff[q.index()] += c * i64::from(s);
            }
        }
        ThetaAut {
            slots: self.slots.then(&next.slots),
            rho: RhoPart { eps, coeff },
        }
    }

    pub fn inverse(&self) -> ThetaAut {
        // Solve self.then(inv) = identity for the ρ coefficients.
        let eps = self.rho.eps;
        let mut coeff = [0i64; 3];
        for p in PairKey::ALL {
            let (q, s) = self.slots.pair_source(p);
            coeff[p.index()] = -i64::from(eps) * self.rho.coeff(q) * i64::from(s);
        }
        ThetaAut {
            slots: self.slots.inverse(),
            rho: RhoPart { eps, coeff },
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SourceJson {
    src: Slot,
    sign: i8,
}

#[derive(Serialize, Deserialize)]
struct SlotsJson {
    gamma: SourceJson,
    beta: SourceJson,
    alpha: SourceJson,
    lambda: SourceJson,
    mu: SourceJson,
    nu: SourceJson,
}

impl Serialize for SignedSlotMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let e = |s: Slot| SourceJson {
            src: self.target(s),
            sign: self.sign(s),
        };
        SlotsJson {
            gamma: e(Slot::Gamma),
            beta: e(Slot::Beta),
            alpha: e(Slot::Alpha),
            lambda: e(Slot::Lambda),
            mu: e(Slot::Mu),
            nu: e(Slot::Nu),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedSlotMap {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = SlotsJson::deserialize(deserializer)?;
        let entries = [j.gamma, j.beta, j.alpha, j.lambda, j.mu, j.nu].map(|e| (e.sign, e.src));
        SignedSlotMap::new(entries)
            .ok_or_else(|| serde::de::Error::custom("slot map is not a signed bijection"))
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    alpha_lambda: i64,
    beta_mu: i64,
    gamma_nu: i64,
}

#[derive(Serialize, Deserialize)]
struct RhoJson {
    eps: i8,
    coeff: CoeffJson,
}

impl Serialize for RhoPart {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RhoJson {
            eps: self.eps,
            coeff: CoeffJson {
                alpha_lambda: self.coeff[0],
                beta_mu: self.coeff[1],
                gamma_nu: self.coeff[2],
            },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RhoPart {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = RhoJson::deserialize(deserializer)?;
        if !(j.eps == 1 || j.eps == -1) {
            return Err(serde::de::Error::custom("eps must be +1 or -1"));
        }
        Ok(RhoPart {
            eps: j.eps,
            coeff: [j.coeff.alpha_lambda, j.coeff.beta_mu, j.coeff.gamma_nu],
        })
    }
}
