//! The congruences `▷_{m,n}` and `◁_{m,n}` (agreement on condensed rankers of the underlined
//! classes), computed by recursion on leftmost / rightmost letter occurrences.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::word::{Alphabet, Word};

/// Default bound on representative length for [`quotient_monoid`].
pub const DEFAULT_LENGTH_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `▷`, X-initial rankers.
    Right,
    /// `◁`, Y-initial rankers.
    Left,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" | "R" | "r" => Ok(Side::Right),
            "left" | "L" | "l" => Ok(Side::Left),
            _ => Err(Error::InvalidParameters(format!("unknown side `{s}` (expected right or left)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CongruenceQuery {
    pub m: usize,
    pub n: usize,
    pub side: Side,
}

impl CongruenceQuery {
    pub fn new(m: usize, n: usize, side: Side) -> Result<Self> {
        if m == 0 || n < m {
            return Err(Error::InvalidParameters(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
        }
        Ok(CongruenceQuery { m, n, side })
    }

    pub fn right(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Side::Right)
    }

    pub fn left(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Side::Left)
    }
}

/// Same subwords of length at most `n`.
pub fn subword_equivalent(u: &Word, v: &Word, n: usize) -> bool {
    subwords_agree(u.letters(), v.letters(), n)
}

fn subwords_agree(u: &[char], v: &[char], n: usize) -> bool {
    let letters = Word::from_letters(u.iter().chain(v).copied()).alph();
    // depth-first over candidates, extending only common subwords
    fn go(u: &[char], v: &[char], letters: &[char], prefix: &mut Vec<char>, n: usize) -> bool {
        if prefix.len() == n {
            return true;
        }
        for &c in letters {
            prefix.push(c);
            let (in_u, in_v) = (is_subword(prefix, u), is_subword(prefix, v));
            let ok = in_u == in_v && (!in_u || go(u, v, letters, prefix, n));
            prefix.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    go(u, v, letters.letters(), &mut Vec::with_capacity(n), n)
}

fn is_subword(pattern: &[char], u: &[char]) -> bool {
    let mut it = u.iter();
    pattern.iter().all(|c| it.any(|d| d == c))
}

/// Memoized decision procedure for one pair of words. Factors met during the recursion are
/// contiguous, so they are keyed by their offsets.
pub struct CongruenceChecker<'a> {
    u: &'a [char],
    v: &'a [char],
    memo: HashMap<Key, bool>,
}

type Key = (usize, usize, usize, usize, usize, usize, Side);

impl<'a> CongruenceChecker<'a> {
    pub fn new(u: &'a Word, v: &'a Word) -> Self {
        CongruenceChecker { u: u.letters(), v: v.letters(), memo: HashMap::new() }
    }

    /// `u ▷_{m,n} v` or `u ◁_{m,n} v`. Any `m, n` are accepted; `m = 0` or `n = 0` relate all words.
    pub fn check(&mut self, m: usize, n: usize, side: Side) -> bool {
        self.go((0, self.u.len()), (0, self.v.len()), m, n, side)
    }

    fn go(&mut self, (us, ue): (usize, usize), (vs, ve): (usize, usize), m: usize, n: usize, side: Side) -> bool {
        if m == 0 || n == 0 {
            return true;
        }
        let (u, v) = (&self.u[us..ue], &self.v[vs..ve]);
        if m == 1 {
            return subwords_agree(u, v, n);
        }
        let key = (us, ue, vs, ve, m, n, side);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let alph = Word::from_letters(u.iter().copied()).alph();
        let result = alph == Word::from_letters(v.iter().copied()).alph()
            && self.go((us, ue), (vs, ve), m - 1, n - 1, side.flipped())
            && alph.letters().iter().all(|&a| {
                let (pu, pv) = match side {
                    Side::Right => (us + position(u, a), vs + position(v, a)),
                    Side::Left => (us + rposition(u, a), vs + rposition(v, a)),
                };
                let (u_minus, u_plus) = ((us, pu), (pu + 1, ue));
                let (v_minus, v_plus) = ((vs, pv), (pv + 1, ve));
                match side {
                    Side::Right => {
                        self.go(u_minus, v_minus, m - 1, n - 1, Side::Left)
                            && self.go(u_plus, v_plus, m, n - 1, Side::Right)
                    }
                    Side::Left => {
                        self.go(u_plus, v_plus, m - 1, n - 1, Side::Right)
                            && self.go(u_minus, v_minus, m, n - 1, Side::Left)
                    }
                }
            });
        self.memo.insert(key, result);
        result
    }
}

fn position(u: &[char], a: char) -> usize {
    u.iter().position(|&c| c == a).expect("letter occurs")
}

fn rposition(u: &[char], a: char) -> usize {
    u.iter().rposition(|&c| c == a).expect("letter occurs")
}

pub fn cong_equivalent(u: &Word, v: &Word, q: CongruenceQuery) -> bool {
    CongruenceChecker::new(u, v).check(q.m, q.n, q.side)
}

/// `A* / ~` for the congruence of the query, with shortlex-least representatives.
#[derive(Debug, Clone)]
pub struct QuotientMonoid {
    pub monoid: FiniteMonoid,
    pub representatives: Vec<Word>,
    alphabet: Alphabet,
    // right action of each letter: by_letter[s][a]
    by_letter: Vec<Vec<usize>>,
}

impl QuotientMonoid {
    /// Element of the class of `u`; `None` if `u` leaves the alphabet.
    pub fn project(&self, u: &Word) -> Option<usize> {
        u.letters().iter().try_fold(0, |s, &c| self.alphabet.index_of(c).map(|a| self.by_letter[s][a]))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

/// Breadth-first closure over representatives. Fails with [`Error::NotStabilized`] when a new
/// class would need a representative longer than `length_cap`.
pub fn quotient_monoid(alphabet: &Alphabet, q: CongruenceQuery, length_cap: usize) -> Result<QuotientMonoid> {
    let k = alphabet.len();
    let mut reps = vec![Word::empty()];
    let mut by_letter: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < reps.len() {
        let mut row = Vec::with_capacity(k);
        for &c in alphabet.letters() {
            let w = reps[next].pushed(c);
            let class = match reps.iter().position(|r| r.len() <= w.len() && cong_equivalent(r, &w, q)) {
                Some(class) => class,
                None => {
                    if w.len() > length_cap {
                        return Err(Error::NotStabilized(length_cap));
                    }
                    reps.push(w);
                    reps.len() - 1
                }
            };
            row.push(class);
        }
        by_letter.push(row);
        next += 1;
    }
    let size = reps.len();
    let mut table = vec![0; size * size];
    for s in 0..size {
        for t in 0..size {
            // class of rep(s) rep(t), by reading rep(t) from s
            table[s * size + t] = reps[t].letters().iter().fold(s, |x, &c| by_letter[x][alphabet.index_of(c).unwrap()]);
        }
    }
    let generators = alphabet.letters().iter().enumerate().map(|(a, c)| (c.to_string(), by_letter[0][a])).collect();
    let monoid = FiniteMonoid::from_flat_unchecked(size, table, 0, generators);
    Ok(QuotientMonoid { monoid, representatives: reps, alphabet: alphabet.clone(), by_letter })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::variety_membership;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    #[test]
    fn subwords() {
        assert!(subword_equivalent(&w("abab"), &w("abba"), 2));
        assert!(!subword_equivalent(&w("abab"), &w("abba"), 3));
        assert!(subword_equivalent(&w(""), &w(""), 5));
        assert!(!subword_equivalent(&w(""), &w("a"), 1));
    }

    #[test]
    fn congruence_examples() {
        assert!(cong_equivalent(&w("abab"), &w("abba"), CongruenceQuery::right(1, 2).unwrap()));
        assert!(!cong_equivalent(&w("bac"), &w("bca"), CongruenceQuery::right(1, 2).unwrap()));
        assert!(!cong_equivalent(&w("bac"), &w("bca"), CongruenceQuery::right(2, 3).unwrap()));
        assert!(cong_equivalent(&w("bca"), &w("bca"), CongruenceQuery::left(2, 3).unwrap()));
        assert!(CongruenceQuery::right(3, 2).is_err());
    }

    #[test]
    fn unary_quotients() {
        let a = Alphabet::parse("a").unwrap();
        for n in 1..=4 {
            let q = quotient_monoid(&a, CongruenceQuery::right(1, n).unwrap(), DEFAULT_LENGTH_CAP).unwrap();
            assert_eq!(q.monoid.len(), n + 1);
        }
        let q = quotient_monoid(&a, CongruenceQuery::right(1, 2).unwrap(), DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(q.project(&w("aaa")), q.project(&w("aa")));
        assert_ne!(q.project(&w("a")), q.project(&w("aa")));
    }

    #[test]
    fn alphabet_quotient() {
        let ab = Alphabet::parse("ab").unwrap();
        let q = quotient_monoid(&ab, CongruenceQuery::right(1, 1).unwrap(), DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(q.monoid.len(), 4);
        assert!(variety_membership(&q.monoid).j1);
        let reps: Vec<String> = q.representatives.iter().map(Word::to_string).collect();
        assert_eq!(reps, ["", "a", "b", "ab"]);
    }

    #[test]
    fn non_stabilization_is_an_error() {
        let ab = Alphabet::parse("ab").unwrap();
        let err = quotient_monoid(&ab, CongruenceQuery::right(1, 3).unwrap(), 2).unwrap_err();
        assert_eq!(err, Error::NotStabilized(2));
    }

    #[test]
    fn projection_is_a_morphism() {
        let ab = Alphabet::parse("ab").unwrap();
        let q = quotient_monoid(&ab, CongruenceQuery::left(2, 2).unwrap(), DEFAULT_LENGTH_CAP).unwrap();
        let words = ab.words_up_to(4);
        for x in &words {
            for y in &words {
                let px = q.project(x).unwrap();
                let py = q.project(y).unwrap();
                assert_eq!(q.project(&x.concat(y)), Some(q.monoid.mul(px, py)));
                assert_eq!(px == py, cong_equivalent(x, y, CongruenceQuery::left(2, 2).unwrap()), "{x} {y}");
            }
        }
    }
}
