//! Exact enumerative counts of pencils on curves with prescribed ramification.
//!
//! Genus 0 reduces to Schubert calculus on `Gr(2, d+1)`. Genus 1 with one fixed
//! and three moving ramification points has four independent evaluations. Higher
//! genus goes through a degeneration to a rational curve with elliptic tails.
//!
//! All arithmetic is exact.

pub mod degeneration;
pub mod error;
pub mod exactmath;
pub mod genus1;
pub mod grassmann;
pub mod laurent;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{BigInt, BigRational};
