use std::fmt;

use serde::Serialize;

use crate::perm::Perm4;
use crate::word::{Generator, Word};

use super::kernel::s4_relators;
use super::table::{GroupElement, GroupTable, PermImage, SAFETY_BOUND};
use super::GroupError;

/// Outcome of the section search for one choice of generator lifts.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateSection {
    /// Table indices of the lifts of `(01)`, `(02)`, `(03)`.
    pub lifts: [usize; 3],
    /// Relators whose image under the candidate is not the identity.
    pub failed_relators: Vec<Word>,
    /// Image of the relator `(σ₁σ₂σ₁σ₃)²`, which always lies in the kernel.
    pub mixed_relator_image: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    pub split: bool,
    pub candidates: usize,
    pub failing: usize,
    pub witness: Option<[usize; 3]>,
    pub sections: Vec<CandidateSection>,
}

impl fmt::Display for SplitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.split {
            write!(
                f,
                "split: witness section {:?}",
                self.witness.unwrap_or_default()
            )
        } else {
            write!(
                f,
                "not split: {}/{} sections fail",
                self.failing, self.candidates
            )
        }
    }
}

fn eval_lifted<E: GroupElement>(t: &GroupTable<E>, w: &Word, lifts: &[usize; 3]) -> usize {
    w.letters().iter().fold(0, |acc, g| {
        let k = Generator::ALL
            .iter()
            .position(|h| h == g)
            .expect("generator");
        t.mult[acc][lifts[k]]
    })
}

/// Searches every choice of lifts of the three transpositions `(0i)` for
/// one that satisfies all relators of `S₄`; such a choice is a section.
pub fn is_split_extension<E>(t: &GroupTable<E>) -> SplitReport
where
    E: GroupElement + PermImage<4>,
{
    let fibers: Vec<Vec<usize>> = (1..=3)
        .map(|axis| {
            let target = Perm4::transposition(0, axis);
            (0..t.order())
                .filter(|&i| t.elements[i].perm_image() == target)
                .collect()
        })
        .collect();
    let relators = s4_relators();
    let mixed = &relators[6];
    let mut sections = Vec::new();
    for &a in &fibers[0] {
        for &b in &fibers[1] {
            for &c in &fibers[2] {
                let lifts = [a, b, c];
                let failed_relators = relators
                    .iter()
                    .filter(|r| eval_lifted(t, r, &lifts) != 0)
                    .cloned()
                    .collect();
                sections.push(CandidateSection {
                    lifts,
                    failed_relators,
                    mixed_relator_image: eval_lifted(t, mixed, &lifts),
                });
            }
        }
    }
    let witness = sections
        .iter()
        .find(|s| s.failed_relators.is_empty())
        .map(|s| s.lifts);
    let failing = sections
        .iter()
        .filter(|s| !s.failed_relators.is_empty())
        .count();
    SplitReport {
        split: witness.is_some(),
        candidates: sections.len(),
        failing,
        witness,
        sections,
    }
}

/// Element `(v, σ)` of the semidirect product `V ⋊ S₄`, where `V` is the
/// normal Klein four-subgroup of `S₄` and `S₄` acts by conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KleinSemidirect {
    pub v: Perm4,
    pub sigma: Perm4,
}

impl GroupElement for KleinSemidirect {
    fn identity() -> Self {
        KleinSemidirect {
            v: Perm4::identity(),
            sigma: Perm4::identity(),
        }
    }

    fn then(&self, next: &Self) -> Self {
        let twisted = self.sigma.compose(&next.v).compose(&self.sigma.inverse());
        KleinSemidirect {
            v: self.v.compose(&twisted),
            sigma: self.sigma.compose(&next.sigma),
        }
    }
}

impl PermImage<4> for KleinSemidirect {
    fn perm_image(&self) -> Perm4 {
        self.sigma
    }
}

/// A genuinely split extension of `S₄` by a Klein four-group, used as a
/// control for [`is_split_extension`]. The lift of `(01)` is deliberately
/// twisted by a kernel element so that the search has to find the section.
pub fn split_control() -> Result<GroupTable<KleinSemidirect>, GroupError> {
    let v = Perm4::from_images([2, 3, 0, 1]).expect("(02)(13)");
    let gens = [
        (
            Generator::X,
            KleinSemidirect {
                v,
                sigma: Perm4::transposition(0, 1),
            },
        ),
        (
            Generator::Y,
            KleinSemidirect {
                v: Perm4::identity(),
                sigma: Perm4::transposition(0, 2),
            },
        ),
        (
            Generator::Z,
            KleinSemidirect {
                v: Perm4::identity(),
                sigma: Perm4::transposition(0, 3),
            },
        ),
    ];
    GroupTable::generate(&gens, SAFETY_BOUND)
}
