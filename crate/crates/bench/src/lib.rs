//! Shared inputs for the benchmarks.

use fo2hier::{compile_regex, transition_monoid, FiniteMonoid, Word};

/// Syntactic monoid of a regular expression over its own letters.
pub fn syntactic_monoid(pattern: &str) -> FiniteMonoid {
    transition_monoid(&compile_regex(pattern, None).expect("benchmark patterns are valid"))
}

/// Languages with known levels: piecewise testable, the two-level example, a non-DA control.
pub const PATTERNS: [&str; 3] = ["[ab]*a[ab]*b[ab]*", "[bc]*ca[ab]*", "(ab)*"];

/// All words over `letters` of length exactly `len`, in lexicographic order.
pub fn words_of_length(letters: &[char], len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out.iter().flat_map(|w| letters.iter().map(move |&c| w.pushed(c))).collect();
    }
    out
}
