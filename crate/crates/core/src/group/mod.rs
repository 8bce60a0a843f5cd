//! Enumeration and structure of the duality groups.

mod analysis;
mod dg2;
mod kernel;
mod report;
mod split;
mod structure;
mod table;

use thiserror::Error;

use crate::word::Word;

pub use analysis::{
    conjugacy_classes, describe_subgroup, exponent, generate_subgroup, greedy_generators,
    is_abelian, is_normal, normal_closure, normal_subgroups, ConjClass, SubgroupDescriptor,
};
pub use dg2::{dg2_generator, enumerate_dg2, Dg2Element};
pub use kernel::{kernel_of_pi, s4_relators, KernelReport, S4_RELATORS};
pub use report::{dg2_report, dg3_report, ClassSummary, GroupReport, SubgroupSummary};
pub use split::{
    is_split_extension, split_control, CandidateSection, KleinSemidirect, SplitReport,
};
pub use structure::{
    k4_module_check, klein_v, semidirect_structure_check, ModulePair, ModuleReport, StructureReport,
};
pub use table::{enumerate_dg3, AxiomReport, GroupElement, GroupTable, PermImage, SAFETY_BOUND};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    SafetyBound(usize),
    #[error("product left the enumerated set")]
    NotClosed,
    #[error("word {0} uses a letter outside the generators")]
    ForeignWord(Word),
    #[error("fiber of π has {fiber} elements but the relator closure has {closure}")]
    KernelMismatch { fiber: usize, closure: usize },
    #[error("no equivariant bijection between the kernel and the Klein group")]
    NoEquivariantBijection,
}
