//! Exact generation and verification of the sequences behind a classical
//! question: when is the average of the first `s` triangular numbers itself
//! triangular?
//!
//! The answer pairs `s = b_n` with `T_{a_n}`, where both come from the
//! recurrence family `w_n = 4w_{n-1} - w_{n-2} + k`. This crate computes that
//! family three independent ways, checks the identities linking its members,
//! confirms the pairs against a brute-force Diophantine search, and ties
//! `u_n` to the continued-fraction numerators of √3.

pub mod cli;
pub mod convergents;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod output;
pub mod recurrences;
pub mod triangular;

pub use error::{Error, Result};
pub use exactnum::{BigInt, QuadElem, Rat};
pub use identities::{IdentityReport, Suite};
pub use recurrences::{RecurrenceSpec, SequenceId};
pub use triangular::TriangularWitness;
