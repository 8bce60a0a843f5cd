//! Machine checks of the published tables and the acceptance criteria.

mod criteria;
mod tables;

pub use criteria::{criterion_id, run_criteria, CriterionResult, Verifier, CRITERIA};
pub use tables::{
    row_occurs, verify_paper_tables, RowCheck, VerificationReport, CLASS_ROWS, GENERATOR_ROWS,
    KERNEL_ROWS, XYXZ_STEPS, XYZ4_ROW,
};
