use serde::Serialize;

use crate::word::{parse_word, Word};

use super::analysis::{
    describe_subgroup, exponent, is_abelian, normal_closure, SubgroupDescriptor,
};
use super::table::{GroupElement, GroupTable, PermImage};
use super::GroupError;

/// The relators of the Coxeter presentation of `S₄` in the generators
/// `σ₁ = (01)`, `σ₂ = (02)`, `σ₃ = (03)`, written in X, Y, Z.
pub const S4_RELATORS: [&str; 9] = [
    "X^2", "Y^2", "Z^2", "(XY)^3", "(YZ)^3", "(ZX)^3", "(XYXZ)^2", "(YZYX)^2", "(ZXZY)^2",
];

pub fn s4_relators() -> Vec<Word> {
    S4_RELATORS
        .iter()
        .map(|r| parse_word(r).expect("relator literals parse"))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub kernel: SubgroupDescriptor,
    pub relator_images: Vec<usize>,
    pub matches_normal_closure: bool,
    pub is_klein_four: bool,
}

/// Fiber of `π` over the identity, cross-checked against the normal closure
/// of the relator images.
pub fn kernel_of_pi<E, const N: usize>(
    t: &GroupTable<E>,
    relators: &[Word],
) -> Result<KernelReport, GroupError>
where
    E: GroupElement + PermImage<N>,
{
    let fiber: Vec<usize> = (0..t.order())
        .filter(|&i| t.elements[i].perm_image().is_identity())
        .collect();
    let relator_images = relators
        .iter()
        .map(|r| t.index_of_word(r).ok_or(GroupError::ForeignWord(r.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let closure = normal_closure(t, &relator_images);
    let matches_normal_closure = closure == fiber;
    if !matches_normal_closure {
        return Err(GroupError::KernelMismatch {
            fiber: fiber.len(),
            closure: closure.len(),
        });
    }
    let is_klein_four = fiber.len() == 4 && is_abelian(t, &fiber) && exponent(t, &fiber) == 2;
    Ok(KernelReport {
        kernel: describe_subgroup(t, fiber),
        relator_images,
        matches_normal_closure,
        is_klein_four,
    })
}
