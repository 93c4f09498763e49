//! Finite quotients, coset tables and Nielsen-Schreier bases for finitely
//! presented groups.
//!
//! Given a presentation and a relator `r`, [`run_lemma`] finds a finite
//! quotient in which the initial segments of `r` stay distinct, takes the
//! finite-index subgroup `F1` of the free group that it determines, and builds
//! a Schreier basis of `F1` containing `r` itself. The result is a
//! [`LemmaCertificate`] that [`verify_certificate`] re-checks from scratch,
//! including an independent Stallings folding of the basis.
//!
//! Also included: low-index subgroup enumeration, Reidemeister-Schreier
//! rewriting, and Euler-characteristic checks of the rank formula for
//! finite-index subgroups of orientable surface groups.
//!
//! Conventions: permutations act on the right, coset `0` is the base, and
//! words are always freely reduced.

pub mod certificate;
pub mod cli;
pub mod coset_table;
mod error;
pub mod fold;
pub mod lemma;
pub mod low_index;
pub mod perm;
pub mod rewrite;
pub mod transversal;
pub mod word;

pub use coset_table::{CosetTable, Presentation};
pub use error::{Error, Result};
pub use fold::{fold_verify, fold_verify_words};
pub use lemma::{find_separating_quotient, run_lemma, verify_certificate, LemmaCertificate, Verification};
pub use low_index::low_index_tables;
pub use perm::{FiniteQuotientHom, Perm};
pub use rewrite::{rewrite_presentation, surface_presentation, surface_report, SubgroupPresentation, SurfaceReport};
pub use transversal::{
    basis_through_word, rewrite_in_basis, schreier_basis, AlphabetOrientation, BasisThroughWord, SchreierTransversal,
    SubgroupBasis,
};
pub use word::{Alphabet, FreeWord, Letter, Sign};
