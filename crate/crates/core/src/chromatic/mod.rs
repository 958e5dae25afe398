//! The chromatic quasisymmetric function `X_P(x, q; mu)`.
//!
//! Two independent evaluations are kept side by side: brute-force
//! enumeration of proper multi-colourings, and the fundamental expansion
//! over words. Basis expansions record which path produced each number.

mod expansion;
mod oracle;
mod theorems;

pub use expansion::{
    coeff_in_basis, k_class, k_heap, normalization, omega_x_qsym, words_by_heap, x_by_oracle, x_via_words,
    ExpansionReport, ReportTerm, Source, ORACLE_MAX_DEGREE,
};
pub use oracle::{count_colorings, x_oracle, Statistic, MAX_COLORS};
pub use theorems::{
    asc_des_symmetry_check, blow_up_scaling_check, coeff_e_hook, coeff_e_two_column, is_hook_heap, is_two_column_heap,
    positivity_report, sink_sum, two_column_closed_form, ClassPositivity, PositivityReport,
};
