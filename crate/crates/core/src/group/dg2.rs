use serde::Serialize;

use crate::perm::{Perm, Perm3};
use crate::word::Generator;

use super::table::{GroupElement, GroupTable, PermImage, SAFETY_BOUND};
use super::GroupError;

/// Element of the double duality group: the permutation of `{0,1,2}` and
/// the sign by which it acts on `G₂ ≅ Γ(A*⊗B*⊗C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Dg2Element {
    pub perm: Perm3,
    pub eps: i8,
}

impl GroupElement for Dg2Element {
    fn identity() -> Self {
        Dg2Element {
            perm: Perm3::identity(),
            eps: 1,
        }
    }

    fn then(&self, next: &Self) -> Self {
        Dg2Element {
            perm: self.perm.compose(&next.perm),
            eps: self.eps * next.eps,
        }
    }
}

impl PermImage<3> for Dg2Element {
    fn perm_image(&self) -> Perm<3> {
        self.perm
    }
}

/// `X` and `Y` each act as minus the identity on `G₂`.
pub fn dg2_generator(g: Generator) -> Option<Dg2Element> {
    let axis = match g {
        Generator::X => 1,
        Generator::Y => 2,
        Generator::Z => return None,
    };
    Some(Dg2Element {
        perm: Perm3::transposition(0, axis),
        eps: -1,
    })
}

pub fn enumerate_dg2() -> Result<GroupTable<Dg2Element>, GroupError> {
    let gens: Vec<_> = [Generator::X, Generator::Y]
        .into_iter()
        .map(|g| (g, dg2_generator(g).expect("X and Y act on G₂")))
        .collect();
    GroupTable::generate(&gens, SAFETY_BOUND)
}
