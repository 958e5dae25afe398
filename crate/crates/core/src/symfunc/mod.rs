//! Symmetric and quasisymmetric functions with polynomial coefficients.
//!
//! [`SymFunc`] is always stored in the monomial basis; the other bases are
//! reached through [`to_monomial`] and [`from_monomial`].

mod composition;
mod partition;
mod qsym;
mod sym;

pub use composition::Composition;
pub use partition::Partition;
pub use qsym::{omega_qsym, qsym_to_sym, rearrangements, QSymFunc};
pub use sym::{expand, from_monomial, omega, to_monomial, transition_m, Basis, Expansion, SymFunc};
