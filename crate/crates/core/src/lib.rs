//! Braid words, Seifert forms and Levine-Tristram signatures, assembled into
//! explicit cobordisms and genus bound ledgers between torus knots.

// Dense matrix code reads better with index loops.
#![allow(clippy::needless_range_loop)]

pub mod braid;
pub mod error;
mod form;
mod modular;
mod poly;
pub mod seifert;

pub use braid::{BraidWord, ClosureInfo, UnknottingCertificate};
pub use error::{Error, Result};
pub use form::Inertia;
pub use seifert::{alexander_polynomial, seifert_matrix, LaurentPolynomial, SeifertMatrix};
pub mod signatures;

pub use signatures::{
    cable_lt_signature, lt_profile, lt_signature, signature, signature_lower_bound, torus_lt_signature,
    torus_signature, Companion, LtSignatureFunction, RationalAngle, SignatureProfile, SignatureValue,
};
pub mod cobordism;
pub mod verify;

pub use cobordism::{
    bound_report, build_theorem1_plan, choose_n, fit_affine_envelope, mccoy_genus_bound, min_admissible_n,
    saddle_reduce_torus, sweep, sweep_csv, BoundConfig, BoundReport, CobordismPlan, LedgerItem, Move, MoveKind,
    SigmaKind, SweepRow, Theorem1Plan,
};
