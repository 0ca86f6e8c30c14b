//! Verification suites that recompute every statement on concrete groups and
//! collect deterministic reports.

mod analysis;
mod checks;
mod report;
mod suites;

pub use analysis::{Analysis, NormalPiece, SylowFacts};
pub use checks::{
    check_dpi_monotone, check_dpi_normal_product, check_hall_witness, check_main_theorem,
    check_pr_suite, check_sylow_suite,
};
pub use report::{CheckResult, CheckTally, Report, Status, Summary, Value};
pub use suites::{
    check_j1, check_sharpness_examples, check_simple_suite, check_torus_formula, pi_sets,
    run_suite, sweep, sweep_subjects, torus_pi_sets, Subject, Suite, TORUS_MODULI,
};
