//! Ranker characterizations of `FO²_{m,n}` equivalence.
//!
//! Two words satisfy the same two-variable sentences with at most `m` quantifier blocks and
//! quantifier depth at most `n` iff
//!
//! 1. they agree on the rankers of `uR_{m,n}`;
//! 2. for `r ∈ uR_{m,n}` and `r' ∈ uR_{m-1,n-1}` defined on both words, `r` and `r'` designate
//!    positions in the same order in both words;
//! 3. the same holds for `r ∈ uR_{m,n}` and `r' ∈ uR_{m,n-1}` ending with different directions.
//!
//! The condensed variant replaces "defined" by "condensed" throughout.

use std::cmp::Ordering;
use std::str::FromStr;

use super::class::{underlined_class, DEFAULT_ALPHABET_LIMIT, DEFAULT_DEPTH_LIMIT};
use super::Ranker;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WiMode {
    Plain,
    Condensed,
}

impl FromStr for WiMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(WiMode::Plain),
            "condensed" => Ok(WiMode::Condensed),
            _ => Err(Error::InvalidParameters(format!("unknown mode `{s}`"))),
        }
    }
}

/// Decides `FO²_{m,n}` equivalence of `u` and `v` through ranker agreement and order types.
///
/// Rankers range over the letters of `alphabet`; pass the ambient alphabet of the words (letters
/// absent from both words only contribute rankers undefined on both).
pub fn wi_equivalent(u: &Word, v: &Word, alphabet: &Alphabet, m: usize, n: usize, mode: WiMode) -> Result<bool> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!("need 1 <= m <= n, got m={m}, n={n}")));
    }
    if n > DEFAULT_DEPTH_LIMIT || alphabet.len() > DEFAULT_ALPHABET_LIMIT {
        return Err(Error::CapExceeded(format!(
            "depth {n} over {} letters exceeds the enumeration limits",
            alphabet.len()
        )));
    }
    if let Some(&c) = u.letters().iter().chain(v.letters()).find(|c| !alphabet.contains(**c)) {
        return Err(Error::LetterOutsideAlphabet(c));
    }
    if u == v {
        return Ok(true);
    }

    let class = underlined_class(alphabet, m, n, None);
    let locate = |w: &Word, r: &Ranker| match mode {
        WiMode::Plain => r.position(w),
        WiMode::Condensed => r.condensed_position(w),
    };
    // (WI 1): after this check, every ranker of the class is located on u iff on v
    let mut located = Vec::new();
    for r in &class {
        match (locate(u, r), locate(v, r)) {
            (Some(p), Some(q)) => located.push((r, p, q)),
            (None, None) => {}
            _ => return Ok(false),
        }
    }

    let same_order = |a: &(&Ranker, usize, usize), b: &(&Ranker, usize, usize)| -> bool {
        let ou: Ordering = a.1.cmp(&b.1);
        ou == a.2.cmp(&b.2)
    };
    for a in &located {
        for b in &located {
            let r2 = b.0;
            let b2 = r2.blocks();
            let d2 = r2.depth();
            // (WI 2): r' ∈ uR_{m-1,n-1}, i.e. at most m-1 blocks and depth at most n-1
            let in_lower = b2 < m && d2 < n;
            // (WI 3): r' ∈ uR_{m,n-1} ending in the other direction
            let in_shallower = d2 < n && a.0.last_direction() != r2.last_direction();
            if (in_lower || in_shallower) && !same_order(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
