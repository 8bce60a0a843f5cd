use serde::Serialize;

use crate::word::Word;

use super::analysis::{conjugacy_classes, normal_subgroups};
use super::kernel::{kernel_of_pi, s4_relators};
use super::split::is_split_extension;
use super::structure::{
    k4_module_check, semidirect_structure_check, ModuleReport, StructureReport,
};
use super::table::{GroupElement, GroupTable};
use super::{enumerate_dg2, enumerate_dg3, GroupError};

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub rep: Word,
    pub size: usize,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupSummary {
    pub size: usize,
    pub generators: Vec<Word>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitSummary {
    pub split: bool,
    pub candidates: usize,
    pub failing: usize,
}

/// Summary of an enumerated group in the JSON layout used by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub group: &'static str,
    pub order: usize,
    pub classes: Vec<ClassSummary>,
    pub normal_subgroups: Vec<SubgroupSummary>,
    pub kernel: Vec<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semidirect: Option<StructureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k4_module: Option<ModuleReport>,
}

fn common<E: GroupElement>(
    name: &'static str,
    t: &GroupTable<E>,
    kernel: Vec<Word>,
) -> GroupReport {
    GroupReport {
        group: name,
        order: t.order(),
        classes: conjugacy_classes(t)
            .into_iter()
            .map(|c| ClassSummary {
                rep: t.witnesses[c.representative].clone(),
                size: c.size(),
                order: c.order,
            })
            .collect(),
        normal_subgroups: normal_subgroups(t)
            .into_iter()
            .map(|n| SubgroupSummary {
                size: n.size(),
                generators: n.generator_witnesses,
            })
            .collect(),
        kernel,
        split: None,
        semidirect: None,
        k4_module: None,
    }
}

pub fn dg3_report() -> Result<GroupReport, GroupError> {
    let t = enumerate_dg3()?;
    let kernel = kernel_of_pi(&t, &s4_relators())?;
    let kernel_words = kernel
        .kernel
        .members
        .iter()
        .map(|&i| t.witnesses[i].clone())
        .collect();
    let split = is_split_extension(&t);
    let mut report = common("dg3", &t, kernel_words);
    report.split = Some(SplitSummary {
        split: split.split,
        candidates: split.candidates,
        failing: split.failing,
    });
    report.semidirect = Some(semidirect_structure_check(&t)?);
    report.k4_module = Some(k4_module_check(&t)?);
    Ok(report)
}

pub fn dg2_report() -> Result<GroupReport, GroupError> {
    let t = enumerate_dg2()?;
    let relators: Vec<Word> = ["X^2", "Y^2", "(XY)^3"]
        .iter()
        .map(|r| crate::word::parse_word(r).expect("relator literals parse"))
        .collect();
    let kernel = kernel_of_pi(&t, &relators)?;
    let kernel_words = kernel
        .kernel
        .members
        .iter()
        .map(|&i| t.witnesses[i].clone())
        .collect();
    Ok(common("dg2", &t, kernel_words))
}
