//! Exact computation in extended loop braid groups.
//!
//! Words over the crossings σ_i, the strand swaps ρ_i, and the wens τ_i are
//! compared through a faithful action on a free group: each word induces an
//! automorphism, and two words are equivalent exactly when the automorphisms
//! agree. Everything downstream is built on that action staying exact, with
//! no normal-form heuristics and no numerical approximation:
//!
//! - [`braid::BraidWord::equivalent`] decides the word problem.
//! - [`markov`] computes tube-closure invariants and the closure-preserving
//!   moves (conjugation, stabilization, destabilization).
//! - [`conjugacy`] refutes conjugacy by class functions or searches for an
//!   explicit conjugating witness within a radius.
//! - [`braid::relation_suite`] replays the defining relations through the
//!   action, which doubles as a self-test of the whole representation layer.

pub mod braid;
pub mod conjugacy;
pub mod freegroup;
pub mod markov;

pub use braid::{
    random_word, relation_suite, BraidWord, GenLetter, RelationCheck, RelationReport, WordError,
};
pub use conjugacy::{
    check_certificate, normal_form_conjugator, refute, search_witness, Distinction, SearchConfig,
    Verdict,
};
pub use freegroup::{FreeAut, FreeGroupError, FreeWord, Letter, PcForm, PcFormError, SignedPerm};
pub use markov::{
    closure_invariants, conjugate, destabilize, is_closable, stabilize, ClosureInvariant,
    DestabilizeError, NotClosable, StabKind,
};
