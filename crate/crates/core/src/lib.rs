//! Chromatic quasisymmetric functions of natural unit interval orders.
//!
//! The crate is organised bottom-up:
//!
//! - [`poset`]: natural unit interval orders `P(m)`, Dyck paths, height, blow-ups.
//! - [`qpoly`]: exact polynomials in `q` over big integers and rationals.
//! - [`symfunc`]: partitions, compositions, symmetric and quasisymmetric functions.
//! - [`word`]: words over `[n]` and their `P`-statistics.
//! - [`heaps`]: heaps of pieces, local flips and flip-equivalence classes.
//! - [`ncsf`]: the quotient algebra `U/I_P` and noncommutative `P`-symmetric functions.
//! - [`chromatic`]: `X_P(x,q;mu)` by brute force and by words, plus basis expansions.
//! - [`verify`]: the identity suites driven by the command-line tool.

pub mod chromatic;
pub mod error;
pub mod heaps;
pub mod ncsf;
pub mod poset;
pub mod qpoly;
pub mod symfunc;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use poset::{DyckPath, Step, UnitIntervalOrder};
pub use qpoly::{QPoly, QRatPoly};
pub use word::Word;
