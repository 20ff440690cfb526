//! Deterministic automata for language input, plus monomial products.

mod dfa_format;
mod monomial;
mod regex;

pub use monomial::{monomial_analysis, Monomial, MonomialFlags};
pub use regex::Regex;

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// A complete deterministic automaton. States are `0..num_states()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    num_states: usize,
    initial: usize,
    accepting: Vec<bool>,
    // delta[state * |A| + letter index]
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from explicit transitions; every (state, letter) pair must be covered.
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        initial: usize,
        accepting: &[usize],
        transitions: &[(usize, char, usize)],
    ) -> Result<Self> {
        let k = alphabet.len();
        if num_states == 0 || initial >= num_states {
            return Err(Error::InvalidParameters(format!("initial state {initial} out of range 0..{num_states}")));
        }
        let mut delta = vec![usize::MAX; num_states * k];
        for &(p, c, q) in transitions {
            let a = alphabet.index_of(c).ok_or(Error::LetterOutsideAlphabet(c))?;
            if p >= num_states || q >= num_states {
                return Err(Error::InvalidParameters(format!("transition {p} -{c}-> {q} mentions an unknown state")));
            }
            delta[p * k + a] = q;
        }
        if let Some(i) = delta.iter().position(|&q| q == usize::MAX) {
            return Err(Error::IncompleteDfa { state: i / k, letter: alphabet.letters()[i % k] });
        }
        let mut acc = vec![false; num_states];
        for &q in accepting {
            if q >= num_states {
                return Err(Error::InvalidParameters(format!("accepting state {q} out of range")));
            }
            acc[q] = true;
        }
        Ok(Dfa { alphabet, num_states, initial, accepting: acc, delta })
    }

    pub(crate) fn from_parts(alphabet: Alphabet, initial: usize, accepting: Vec<bool>, delta: Vec<usize>) -> Self {
        Dfa { num_states: accepting.len(), alphabet, initial, accepting, delta }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    /// Successor of `q` on the letter with index `a` in the alphabet.
    pub fn step_index(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn step(&self, q: usize, c: char) -> Option<usize> {
        self.alphabet.index_of(c).map(|a| self.step_index(q, a))
    }

    /// Runs the word from `q`; `None` if it contains a letter outside the alphabet.
    pub fn run_from(&self, q: usize, letters: &[char]) -> Option<usize> {
        letters.iter().try_fold(q, |q, &c| self.step(q, c))
    }

    pub fn accepts(&self, u: &Word) -> bool {
        self.run_from(self.initial, u.letters()).is_some_and(|q| self.accepting[q])
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let p = order[i];
            for a in 0..self.alphabet.len() {
                let q = self.step_index(p, a);
                if !seen[q] {
                    seen[q] = true;
                    order.push(q);
                }
            }
            i += 1;
        }
        order
    }

    /// The minimal complete DFA for the same language, with states numbered in breadth-first
    /// order from the initial state.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        let states = self.reachable();
        // Moore refinement: start from the accepting/rejecting split
        let mut class: HashMap<usize, usize> = states.iter().map(|&q| (q, usize::from(self.accepting[q]))).collect();
        let mut count = class.values().collect::<std::collections::HashSet<_>>().len();
        loop {
            let mut sigs: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = HashMap::new();
            for &q in &states {
                let mut sig = vec![class[&q]];
                sig.extend((0..k).map(|a| class[&self.step_index(q, a)]));
                let n = sigs.len();
                next.insert(q, *sigs.entry(sig).or_insert(n));
            }
            let new_count = sigs.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // renumber classes breadth-first
        let mut number: HashMap<usize, usize> = HashMap::new();
        let mut rep: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        number.insert(class[&self.initial], 0);
        rep.push(self.initial);
        while let Some(p) = queue.pop_front() {
            for a in 0..k {
                let q = self.step_index(p, a);
                if let std::collections::hash_map::Entry::Vacant(e) = number.entry(class[&q]) {
                    e.insert(rep.len());
                    rep.push(q);
                    queue.push_back(q);
                }
            }
        }
        let delta = rep
            .iter()
            .flat_map(|&p| (0..k).map(move |a| (p, a)))
            .map(|(p, a)| number[&class[&self.step_index(p, a)]])
            .collect();
        let accepting = rep.iter().map(|&p| self.accepting[p]).collect();
        Dfa::from_parts(self.alphabet.clone(), 0, accepting, delta)
    }

    /// Letters that occur in some accepted word: labels of transitions between reachable and
    /// co-reachable states.
    pub fn language_alphabet(&self) -> Alphabet {
        let k = self.alphabet.len();
        let reach = self.reachable();
        let mut coreach = self.accepting.clone();
        loop {
            let mut changed = false;
            for p in 0..self.num_states {
                if !coreach[p] && (0..k).any(|a| coreach[self.step_index(p, a)]) {
                    coreach[p] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let letters = self
            .alphabet
            .letters()
            .iter()
            .enumerate()
            .filter(|&(a, _)| reach.iter().any(|&p| coreach[self.step_index(p, a)]));
        Alphabet::new(letters.map(|(_, &c)| c)).expect("subset of a valid alphabet")
    }

    pub fn to_file_text(&self) -> String {
        dfa_format::write(self)
    }

    pub fn parse_file_text(text: &str) -> Result<Self> {
        dfa_format::parse(text)
    }
}

/// Compiles a regular expression over `alphabet` (or over its own letters when `None`) into the
/// minimal complete DFA.
pub fn compile_regex(source: &str, alphabet: Option<&Alphabet>) -> Result<Dfa> {
    let re = Regex::parse(source)?;
    let letters = re.letters();
    let alphabet = match alphabet {
        Some(a) => {
            if let Some(&c) = letters.letters().iter().find(|c| !a.contains(**c)) {
                return Err(Error::LetterOutsideAlphabet(c));
            }
            a.clone()
        }
        None => letters,
    };
    Ok(re.to_dfa(&alphabet).minimize())
}

/// Language input: a regular expression or the text of a DFA file.
#[derive(Debug, Clone)]
pub enum LanguageSource<'a> {
    Regex { pattern: &'a str, alphabet: Option<&'a Alphabet> },
    DfaText(&'a str),
}

/// Compiles any language source into its minimal complete DFA.
pub fn compile_language(source: LanguageSource<'_>) -> Result<Dfa> {
    match source {
        LanguageSource::Regex { pattern, alphabet } => compile_regex(pattern, alphabet),
        LanguageSource::DfaText(text) => Ok(Dfa::parse_file_text(text)?.minimize()),
    }
}
