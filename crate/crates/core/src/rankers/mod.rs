//! Rankers: sequences of `X_a` (next `a` to the right) and `Y_a` (next `a` to the left)
//! instructions designating positions in words.
//!
//! A ranker is evaluated in two ways. The plain semantics follows the instructions from the
//! virtual position `0` (X-initial) or `|u|+1` (Y-initial). The condensed semantics additionally
//! maintains a chain of nested open intervals and requires every visited position to fall strictly
//! inside the current interval, so that the walk zooms in on its final position without crossing
//! a position it already visited.

mod class;
mod wi;

pub use class::{
    agree_on_rankers, enumerate_rankers, AgreementMode, RankerClassSpec, Shape, DEFAULT_ALPHABET_LIMIT,
    DEFAULT_DEPTH_LIMIT,
};
pub use wi::{wi_equivalent, WiMode};

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    X,
    Y,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::X => Direction::Y,
            Direction::Y => Direction::X,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankerStep {
    pub direction: Direction,
    pub letter: char,
}

impl RankerStep {
    pub fn x(letter: char) -> Self {
        RankerStep { direction: Direction::X, letter }
    }

    pub fn y(letter: char) -> Self {
        RankerStep { direction: Direction::Y, letter }
    }

    /// The position reached from `q` in `u`, if any. `q` may be a virtual boundary (0 or |u|+1).
    fn apply(&self, u: &Word, q: usize) -> Option<usize> {
        let letters = u.letters();
        match self.direction {
            // positions q+1..=|u|, i.e. indices q..len
            Direction::X => (q..letters.len()).find(|&k| letters[k] == self.letter).map(|k| k + 1),
            Direction::Y => (0..q.saturating_sub(1)).rev().find(|&k| letters[k] == self.letter).map(|k| k + 1),
        }
    }
}

impl fmt::Display for RankerStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            Direction::X => 'X',
            Direction::Y => 'Y',
        };
        write!(f, "{d}{}", self.letter)
    }
}

/// A non-empty sequence of ranker steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ranker {
    steps: Vec<RankerStep>,
}

impl Ranker {
    pub fn new(steps: Vec<RankerStep>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyRanker);
        }
        Ok(Ranker { steps })
    }

    /// Parses a `.`- or whitespace-separated list of `Xa`/`Ya` tokens over `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let mut steps = Vec::new();
        for token in text.split(|c: char| c == '.' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let mut chars = token.chars();
            let direction = match chars.next() {
                Some('X') => Direction::X,
                Some('Y') => Direction::Y,
                _ => return Err(Error::UnknownDirection(token.to_string())),
            };
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::MalformedToken(token.to_string())),
            };
            if !alphabet.contains(letter) {
                return Err(Error::LetterOutsideAlphabet(letter));
            }
            steps.push(RankerStep { direction, letter });
        }
        Ranker::new(steps)
    }

    pub fn steps(&self) -> &[RankerStep] {
        &self.steps
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// Number of maximal runs of same-direction steps.
    pub fn blocks(&self) -> usize {
        1 + self.steps.windows(2).filter(|w| w[0].direction != w[1].direction).count()
    }

    pub fn first_direction(&self) -> Direction {
        self.steps[0].direction
    }

    pub fn last_direction(&self) -> Direction {
        self.steps[self.steps.len() - 1].direction
    }

    /// Swaps X and Y in every step, keeping their order. Evaluating the mirror on the reversed
    /// word designates the mirrored position `|u| + 1 - r(u)`.
    pub fn mirror(&self) -> Ranker {
        Ranker {
            steps: self
                .steps
                .iter()
                .map(|s| RankerStep { direction: s.direction.flipped(), letter: s.letter })
                .collect(),
        }
    }

    /// Plain position `r(u)`, if defined.
    pub fn position(&self, u: &Word) -> Option<usize> {
        let mut q = self.start(u);
        for step in &self.steps {
            q = step.apply(u, q)?;
        }
        Some(q)
    }

    /// `r(u)` when `r` is condensed on `u`.
    pub fn condensed_position(&self, u: &Word) -> Option<usize> {
        let out = self.eval(u);
        if out.condensed {
            out.position
        } else {
            None
        }
    }

    pub fn is_defined_on(&self, u: &Word) -> bool {
        self.position(u).is_some()
    }

    pub fn is_condensed_on(&self, u: &Word) -> bool {
        self.eval(u).condensed
    }

    fn start(&self, u: &Word) -> usize {
        match self.first_direction() {
            Direction::X => 0,
            Direction::Y => u.len() + 1,
        }
    }

    /// Evaluates both semantics at once, recording the interval chain while the walk stays
    /// condensed.
    pub fn eval(&self, u: &Word) -> EvalOutcome {
        let mut interval = (0, u.len() + 1);
        let mut chain = vec![interval];
        let mut condensed = true;
        let mut q = self.start(u);
        for (l, step) in self.steps.iter().enumerate() {
            let Some(p) = step.apply(u, q) else {
                return EvalOutcome { defined: false, position: None, condensed: false, chain };
            };
            if condensed && !(interval.0 < p && p < interval.1) {
                condensed = false;
            }
            if condensed {
                if let Some(next) = self.steps.get(l + 1) {
                    // the new boundary is the position just visited
                    interval = match (step.direction, next.direction) {
                        (Direction::X, Direction::X) | (Direction::Y, Direction::X) => (p, interval.1),
                        (Direction::Y, Direction::Y) | (Direction::X, Direction::Y) => (interval.0, p),
                    };
                    chain.push(interval);
                }
            }
            q = p;
        }
        EvalOutcome { defined: true, position: Some(q), condensed, chain }
    }
}

impl PartialOrd for Ranker {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter rankers first, then lexicographic on steps (X before Y, letters in order).
impl Ord for Ranker {
    fn cmp(&self, other: &Self) -> Ordering {
        self.depth().cmp(&other.depth()).then_with(|| self.steps.cmp(&other.steps))
    }
}

impl fmt::Display for Ranker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Result of evaluating a ranker on a word.
///
/// `chain` holds the open intervals `(i_0, j_0) ⊃ (i_1, j_1) ⊃ ...` built while the walk was
/// condensed. For a condensed ranker of depth `n` it has exactly `n` entries and the final
/// position lies inside the last one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalOutcome {
    pub defined: bool,
    pub position: Option<usize>,
    pub condensed: bool,
    pub chain: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    #[test]
    fn parse_counts_depth_and_blocks() {
        let r = Ranker::parse("Xa.Yb.Xc", &abc()).unwrap();
        assert_eq!((r.depth(), r.blocks()), (3, 3));
        let r = Ranker::parse("Xa.Xb.Yc", &abc()).unwrap();
        assert_eq!((r.depth(), r.blocks()), (3, 2));
        let r = Ranker::parse("Xa Xb  Xc", &abc()).unwrap();
        assert_eq!((r.depth(), r.blocks()), (3, 1));
        assert_eq!(r.to_string(), "Xa.Xb.Xc");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Ranker::parse("", &abc()), Err(Error::EmptyRanker));
        assert_eq!(Ranker::parse(" . ", &abc()), Err(Error::EmptyRanker));
        assert_eq!(Ranker::parse("Za", &abc()), Err(Error::UnknownDirection("Za".into())));
        assert_eq!(Ranker::parse("Xd", &abc()), Err(Error::LetterOutsideAlphabet('d')));
        assert_eq!(Ranker::parse("Xab", &abc()), Err(Error::MalformedToken("Xab".into())));
        assert_eq!(Ranker::parse("X", &abc()), Err(Error::MalformedToken("X".into())));
    }

    #[test]
    fn condensed_only_on_bca() {
        let r = Ranker::parse("Xa.Yb.Xc", &abc()).unwrap();
        let out = r.eval(&Word::from("bca"));
        assert_eq!(out.position, Some(2));
        assert!(out.defined && out.condensed);
        assert_eq!(out.chain, vec![(0, 4), (0, 3), (1, 3)]);

        let out = r.eval(&Word::from("bac"));
        assert_eq!(out.position, Some(3));
        assert!(out.defined && !out.condensed);
    }

    #[test]
    fn trivial_evaluations() {
        let xa = Ranker::parse("Xa", &abc()).unwrap();
        assert!(!xa.eval(&Word::from("b")).defined);
        let out = xa.eval(&Word::from("a"));
        assert_eq!((out.position, out.condensed), (Some(1), true));
        assert_eq!(out.chain, vec![(0, 2)]);
        assert!(!xa.eval(&Word::empty()).defined);
    }

    #[test]
    fn y_initial_starts_at_right_boundary() {
        let r = Ranker::parse("Ya.Yb", &abc()).unwrap();
        assert_eq!(r.position(&Word::from("baba")), Some(3));
        assert_eq!(r.position(&Word::from("aab")), None);
    }

    #[test]
    fn mirror_is_an_involution() {
        let r = Ranker::parse("Xa.Xb.Yc", &abc()).unwrap();
        assert_eq!(r.mirror().to_string(), "Ya.Yb.Xc");
        assert_eq!(r.mirror().mirror(), r);
    }

    #[test]
    fn ordering_is_depth_first() {
        let a = abc();
        let mut v =
            [Ranker::parse("Xa.Xa", &a).unwrap(), Ranker::parse("Yb", &a).unwrap(), Ranker::parse("Xb", &a).unwrap()];
        v.sort();
        let s: Vec<String> = v.iter().map(|r| r.to_string()).collect();
        assert_eq!(s, ["Xb", "Yb", "Xa.Xa"]);
    }
}
