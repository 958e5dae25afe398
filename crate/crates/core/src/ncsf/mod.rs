//! The quotient algebra `U/I_P` of the free algebra on `u_1, ..., u_n`
//! and the noncommutative `P`-symmetric functions living in it.
//!
//! Two words are congruent exactly when their heaps are flip-equivalent,
//! so an element is stored as coefficients on class-minimal words.

mod element;
mod quotient;
mod tableau;

pub use element::NCElement;
pub use quotient::Quotient;
pub use tableau::{enumerate_p_tableaux, PTableau};
