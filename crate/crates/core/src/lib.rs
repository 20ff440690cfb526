//! Deciding the position of a regular language in the FO²[<] quantifier-alternation hierarchy.
//!
//! Words are inspected through rankers ([`rankers`]) and the condensed-ranker congruences
//! ([`congruence`]); languages through the syntactic monoid of their minimal automaton
//! ([`automata`], [`monoid`]), tested against the ω-identities of the `R_m` / `L_m` levels
//! ([`hierarchy`]).

pub mod automata;
pub mod congruence;
mod error;
pub mod hierarchy;
pub mod monoid;
pub mod rankers;
pub mod word;

pub use automata::{compile_language, compile_regex, monomial_analysis, Dfa, LanguageSource, Monomial, MonomialFlags};
pub use congruence::{cong_equivalent, quotient_monoid, subword_equivalent, CongruenceQuery, QuotientMonoid, Side};
pub use error::{Error, Result};
pub use hierarchy::{
    build_sequences, join_diagnostic, level_membership, min_joint_level, phi_expand, LevelReport, VariableWord,
};
pub use monoid::{
    eval_term, green_summary, satisfies_identity, transition_monoid, variety_membership, FiniteMonoid, GreenSummary,
    IdentityCheck, OmegaTerm, VarietyFlags,
};
pub use rankers::{
    agree_on_rankers, enumerate_rankers, wi_equivalent, AgreementMode, EvalOutcome, Ranker, RankerClassSpec,
    RankerStep, Shape, WiMode,
};
pub use word::{Alphabet, Word};

/// Version string reported by the command-line tool.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
