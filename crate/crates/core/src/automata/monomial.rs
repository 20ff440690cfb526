//! Monomials `B_0* a_1 B_1* ... a_k B_k*` and the determinism / unambiguity of the product.
//!
//! The product is read by the layered automaton with states `0..=k`: state `i` loops on `B_i`
//! and moves to `i + 1` on `a_{i+1}`. Unambiguity and (co-)determinism are decided by searching
//! pair-products of this automaton for two distinct runs.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    /// `B_0, ..., B_k`.
    pub sets: Vec<Alphabet>,
    /// `a_1, ..., a_k`.
    pub letters: Vec<char>,
}

impl Monomial {
    pub fn new(sets: Vec<Alphabet>, letters: Vec<char>) -> Result<Self> {
        if sets.len() != letters.len() + 1 {
            return Err(Error::InvalidParameters(format!(
                "a monomial with {} letters needs {} letter sets, got {}",
                letters.len(),
                letters.len() + 1,
                sets.len()
            )));
        }
        Ok(Monomial { sets, letters })
    }

    /// Parses whitespace-separated items: starred sets (`b*`, `[ab]*`, `[]*`, `∅*`) and single
    /// letters. A missing set between two letters, or at either end, is taken as empty.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParameters(format!("malformed monomial `{text}`: {msg}"));
        let mut sets = Vec::new();
        let mut letters = Vec::new();
        let mut expect_set = true;
        for item in text.split_whitespace() {
            if let Some(body) = item.strip_suffix('*') {
                if !expect_set {
                    return Err(bad(format!("two starred sets in a row at `{item}`")));
                }
                let inner = if body == "∅" || body == "[]" {
                    ""
                } else if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
                    inner
                } else if body.chars().count() == 1 {
                    body
                } else {
                    return Err(bad(format!("cannot read `{item}`")));
                };
                sets.push(Alphabet::parse(inner)?);
                expect_set = false;
            } else {
                let mut cs = item.chars();
                let c = match (cs.next(), cs.next()) {
                    (Some(c), None) if !"[]()*|+".contains(c) => c,
                    _ => return Err(bad(format!("`{item}` is neither a letter nor a starred set"))),
                };
                if expect_set {
                    sets.push(Alphabet::default());
                }
                letters.push(c);
                expect_set = true;
            }
        }
        if expect_set {
            sets.push(Alphabet::default());
        }
        Monomial::new(sets, letters)
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// The mirror monomial `B_k* a_k ... a_1 B_0*`.
    pub fn reversed(&self) -> Monomial {
        Monomial {
            sets: self.sets.iter().rev().cloned().collect(),
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Every letter mentioned by the monomial.
    pub fn alphabet(&self) -> Alphabet {
        self.sets.iter().fold(Alphabet::new(self.letters.iter().copied()).unwrap(), |acc, s| acc.union(s))
    }

    /// Successors of layer `state` on `c` in the layered automaton.
    fn successors(&self, state: usize, c: char) -> impl Iterator<Item = usize> + '_ {
        let stay = self.sets[state].contains(c).then_some(state);
        let advance = (state < self.degree() && self.letters[state] == c).then_some(state + 1);
        stay.into_iter().chain(advance)
    }

    /// Whether `u` belongs to the product.
    pub fn accepts(&self, u: &[char]) -> bool {
        let mut current: HashSet<usize> = HashSet::from([0]);
        for &c in u {
            current = current.iter().flat_map(|&s| self.successors(s, c)).collect();
        }
        current.contains(&self.degree())
    }

    /// Some word has two distinct accepting runs: a pair of distinct states that is reachable
    /// from `(0, 0)` and co-reachable to `(k, k)` in the square of the layered automaton.
    fn is_ambiguous(&self) -> bool {
        let k = self.degree();
        let alphabet = self.alphabet();
        let pair_succ = |(p, q): (usize, usize), c: char| -> Vec<(usize, usize)> {
            self.successors(p, c).flat_map(|p2| self.successors(q, c).map(move |q2| (p2, q2))).collect()
        };
        let mut reach = HashSet::from([(0, 0)]);
        let mut queue = VecDeque::from([(0, 0)]);
        let mut edges: Vec<((usize, usize), (usize, usize))> = Vec::new();
        while let Some(s) = queue.pop_front() {
            for &c in alphabet.letters() {
                for t in pair_succ(s, c) {
                    edges.push((s, t));
                    if reach.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        let mut coreach = HashSet::from([(k, k)]);
        loop {
            let before = coreach.len();
            for &(s, t) in &edges {
                if coreach.contains(&t) {
                    coreach.insert(s);
                }
            }
            if coreach.len() == before {
                break;
            }
        }
        reach.iter().any(|&(p, q)| p != q && coreach.contains(&(p, q)))
    }

    /// Some word of the product has two distinct prefixes in `B_0* a_1 ... B_{i-1}* a_i`.
    ///
    /// Searches triples: two runs of the prefix automaton (the first must finish strictly before
    /// the second) and one run of the full product that must accept.
    fn has_two_prefixes(&self, i: usize) -> bool {
        const DONE: usize = usize::MAX;
        let k = self.degree();
        let alphabet = self.alphabet();
        // prefix automaton: layers 0..i, finishing with the a_i edge out of layer i-1
        let prefix_succ = |s: usize, c: char| -> Vec<usize> {
            if s == DONE {
                return vec![DONE];
            }
            let mut out = Vec::new();
            if self.sets[s].contains(c) {
                out.push(s);
            }
            if self.letters[s] == c {
                out.push(if s + 1 == i { DONE } else { s + 1 });
            }
            out
        };
        // (first, second, full, phase) where phase counts finished prefix runs
        let start = (0usize, 0usize, 0usize, 0u8);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((a, b, l, phase)) = queue.pop_front() {
            if phase == 2 && l == k {
                return true;
            }
            for &c in alphabet.letters() {
                let firsts = if phase == 0 { prefix_succ(a, c) } else { vec![DONE] };
                let seconds = if phase <= 1 { prefix_succ(b, c) } else { vec![DONE] };
                for &a2 in &firsts {
                    for &b2 in &seconds {
                        let next_phase = match phase {
                            0 if a2 == DONE && b2 != DONE => 1,
                            0 if b2 == DONE => continue,
                            1 if b2 == DONE => 2,
                            p => p,
                        };
                        for l2 in self.successors(l, c) {
                            let t = (a2, b2, l2, next_phase);
                            if seen.insert(t) {
                                queue.push_back(t);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn is_deterministic(&self) -> bool {
        (1..=self.degree()).all(|i| !self.has_two_prefixes(i))
    }

    fn is_visibly_deterministic(&self) -> bool {
        (0..self.degree()).all(|i| !self.sets[i].contains(self.letters[i]))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, set) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", self.letters[i - 1])?;
            }
            match set.len() {
                0 => f.write_str("[]*")?,
                1 => write!(f, "{set}*")?,
                _ => write!(f, "[{set}]*")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonomialFlags {
    pub visibly_det: bool,
    pub det: bool,
    pub visibly_codet: bool,
    pub codet: bool,
    pub unambiguous: bool,
}

pub fn monomial_analysis(m: &Monomial) -> MonomialFlags {
    let rev = m.reversed();
    MonomialFlags {
        visibly_det: m.is_visibly_deterministic(),
        det: m.is_deterministic(),
        visibly_codet: rev.is_visibly_deterministic(),
        codet: rev.is_deterministic(),
        unambiguous: !m.is_ambiguous(),
    }
}
