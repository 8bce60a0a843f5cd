//! Permutations of `{0, .., N-1}`.
//!
//! `Perm<4>` records how a duality functor relabels the building-bundle
//! indices of a triple vector bundle; `Perm<3>` does the same for double
//! vector bundles. A permutation maps a *new* index to the *old* index whose
//! bundle now sits in that position.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Perm<const N: usize>([u8; N]);

pub type Perm3 = Perm<3>;
pub type Perm4 = Perm<4>;

impl<const N: usize> Perm<N> {
    pub fn identity() -> Self {
        let mut images = [0u8; N];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm(images)
    }

    /// Builds a permutation from its image list; `None` if not bijective.
    pub fn from_images(images: [u8; N]) -> Option<Self> {
        let mut seen = [false; N];
        for &x in &images {
            let x = x as usize;
            if x >= N || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    pub fn transposition(a: usize, b: usize) -> Self {
        let mut p = Self::identity();
        p.0.swap(a, b);
        p
    }

    pub fn images(&self) -> [u8; N] {
        self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Function composition `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut images = [0u8; N];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        Perm(images)
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; N];
        for (i, &x) in self.0.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm(images)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Image of a bitmask subset of `{0, .., N-1}`.
    pub fn apply_mask(&self, mask: u8) -> u8 {
        (0..N)
            .filter(|&i| mask & (1 << i) != 0)
            .fold(0, |acc, i| acc | (1 << self.0[i]))
    }

    /// Disjoint cycles of length at least two, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; N];
        let mut cycles = Vec::new();
        for start in 0..N {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// +1 for even permutations, -1 for odd.
    pub fn signature(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> usize {
        let mut n = 1;
        let mut p = *self;
        while !p.is_identity() {
            p = p.compose(self);
            n += 1;
        }
        n
    }

    /// Every permutation of `N` points, in lexicographic order of images.
    pub fn all() -> Vec<Self> {
        fn rec<const N: usize>(prefix: &mut Vec<u8>, used: &mut [bool; N], out: &mut Vec<Perm<N>>) {
            if prefix.len() == N {
                let mut images = [0u8; N];
                images.copy_from_slice(prefix);
                out.push(Perm(images));
                return;
            }
            for x in 0..N {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x as u8);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec::<N>(&mut Vec::with_capacity(N), &mut [false; N], &mut out);
        out
    }
}

impl<const N: usize> Default for Perm<N> {
    fn default() -> Self {
        Self::identity()
    }
}

/// Cycle notation such as `(021)` or `(03)(12)`; the identity prints as `()`.
impl<const N: usize> fmt::Display for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for i in cycle {
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl<const N: usize> From<Perm<N>> for Vec<u8> {
    fn from(p: Perm<N>) -> Self {
        p.0.to_vec()
    }
}

impl<const N: usize> TryFrom<Vec<u8>> for Perm<N> {
    type Error = String;

    fn try_from(v: Vec<u8>) -> Result<Self, Self::Error> {
        let images: [u8; N] = v
            .try_into()
            .map_err(|v: Vec<u8>| format!("expected {N} images, got {}", v.len()))?;
        Perm::from_images(images).ok_or_else(|| "not a permutation".to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_and_cycles() {
        let p = Perm4::transposition(0, 1);
        assert_eq!(p.to_string(), "(01)");
        assert_eq!(p.signature(), -1);
        assert_eq!(p.order(), 2);
        assert_eq!(Perm4::identity().to_string(), "()");
    }

    #[test]
    fn composition_applies_right_first() {
        let x = Perm4::transposition(0, 1);
        let y = Perm4::transposition(0, 2);
        let xy = x.compose(&y);
        // 0 -> y -> 2 -> x -> 2
        assert_eq!(xy.apply(0), 2);
        assert_eq!(xy.to_string(), "(021)");
        assert_eq!(xy.order(), 3);
        assert_eq!(xy.compose(&xy.inverse()), Perm4::identity());
    }

    #[test]
    fn counts_and_parity() {
        let all = Perm4::all();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.signature() == 1).count(), 12);
        assert_eq!(Perm3::all().len(), 6);
    }

    #[test]
    fn masks() {
        let p = Perm4::transposition(0, 3);
        assert_eq!(p.apply_mask(0b0011), 0b1010);
    }

    #[test]
    fn serde_round_trip() {
        let p = Perm4::from_images([1, 0, 3, 2]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[1,0,3,2]");
        assert_eq!(serde_json::from_str::<Perm4>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Perm4>("[0,0,1,2]").is_err());
    }
}
