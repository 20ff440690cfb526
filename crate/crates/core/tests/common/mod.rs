//! Brute-force oracles shared by the integration tests. None of them call into the library's
//! decision procedures.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use fo2hier::{Alphabet, Dfa, Word};
use itertools::Itertools;
use rand::Rng;

pub fn alphabet(s: &str) -> Alphabet {
    Alphabet::parse(s).unwrap()
}

pub fn words(letters: &str, max_len: usize) -> Vec<Word> {
    alphabet(letters).words_up_to(max_len)
}

/// Naive ranker evaluation from the definitions: `(position, condensed)`.
/// Steps are `(is_x, letter)`.
pub fn naive_eval(u: &[char], steps: &[(bool, char)]) -> (Option<usize>, bool) {
    let n = u.len();
    let mut q = if steps[0].0 { 0 } else { n + 1 };
    let (mut lo, mut hi) = (0, n + 1);
    let mut condensed = true;
    for (k, &(x, a)) in steps.iter().enumerate() {
        let p = if x { (q + 1..=n).find(|&j| u[j - 1] == a) } else { (1..q).rev().find(|&j| u[j - 1] == a) };
        let Some(p) = p else { return (None, false) };
        if !(lo < p && p < hi) {
            condensed = false;
        }
        if let Some(&(next_x, _)) = steps.get(k + 1) {
            match (x, next_x) {
                (true, true) | (false, true) => lo = p,
                (false, false) | (true, false) => hi = p,
            }
        }
        q = p;
    }
    (Some(q), condensed)
}

pub fn blocks(steps: &[(bool, char)]) -> usize {
    steps.iter().dedup_by(|a, b| a.0 == b.0).count()
}

/// Every step sequence of the given depth over `letters`.
pub fn all_rankers(letters: &[char], depth: usize) -> Vec<Vec<(bool, char)>> {
    let steps: Vec<(bool, char)> = [true, false].iter().flat_map(|&x| letters.iter().map(move |&c| (x, c))).collect();
    (0..depth).map(|_| steps.iter().copied()).multi_cartesian_product().collect()
}

/// Rankers with at most `m` blocks and depth at most `n`; with `x_initial = Some(b)`, those with
/// exactly `m` blocks must start with X (`b = true`) or Y.
pub fn underlined(letters: &[char], m: usize, n: usize, x_initial: Option<bool>) -> Vec<Vec<(bool, char)>> {
    (1..=n)
        .flat_map(|d| all_rankers(letters, d))
        .filter(|r| {
            let b = blocks(r);
            b < m || (b == m && x_initial.is_none_or(|x| r[0].0 == x))
        })
        .collect()
}

/// Agreement on condensed-ness over a list of rankers.
pub fn condensed_agree(u: &[char], v: &[char], class: &[Vec<(bool, char)>]) -> bool {
    class.iter().all(|r| naive_eval(u, r).1 == naive_eval(v, r).1)
}

/// All scattered subwords of length at most `n`.
pub fn subword_set(u: &[char], n: usize) -> BTreeSet<Vec<char>> {
    (0..=n.min(u.len())).flat_map(|k| u.iter().copied().combinations(k)).collect()
}

/// Two-pebble Ehrenfeucht–Fraïssé game with `n` rounds and at most `m` blocks of moves on the
/// same word: Duplicator wins iff `u` and `v` satisfy the same FO² sentences of quantifier depth
/// `n` with at most `m` quantifier blocks.
pub fn ef_equivalent(u: &[char], v: &[char], m: usize, n: usize) -> bool {
    type State = ([Option<usize>; 2], [Option<usize>; 2], usize, usize, u8);
    fn compatible(u: &[char], v: &[char], pu: &[Option<usize>; 2], pv: &[Option<usize>; 2]) -> bool {
        for k in 0..2 {
            match (pu[k], pv[k]) {
                (None, None) => {}
                (Some(i), Some(j)) if u[i] == v[j] => {}
                _ => return false,
            }
        }
        match (pu, pv) {
            ([Some(a), Some(b)], [Some(c), Some(d)]) => a.cmp(b) == c.cmp(d),
            _ => true,
        }
    }
    fn win(u: &[char], v: &[char], s: State, memo: &mut HashMap<State, bool>) -> bool {
        let (pu, pv, rounds, blocks_left, side) = s;
        if rounds == 0 {
            return true;
        }
        if let Some(&r) = memo.get(&s) {
            return r;
        }
        let words = [u, v];
        let mut result = true;
        'outer: for spoiler in 0..2u8 {
            let nb = if spoiler == side { blocks_left } else { blocks_left - 1 };
            if nb == 0 {
                continue;
            }
            for pebble in 0..2 {
                for i in 0..words[spoiler as usize].len() {
                    let answered = (0..words[1 - spoiler as usize].len()).any(|j| {
                        let (mut nu, mut nv) = (pu, pv);
                        if spoiler == 0 {
                            nu[pebble] = Some(i);
                            nv[pebble] = Some(j);
                        } else {
                            nv[pebble] = Some(i);
                            nu[pebble] = Some(j);
                        }
                        compatible(u, v, &nu, &nv) && win(u, v, (nu, nv, rounds - 1, nb, spoiler), memo)
                    });
                    if !answered {
                        result = false;
                        break 'outer;
                    }
                }
            }
        }
        memo.insert(s, result);
        result
    }
    win(u, v, ([None; 2], [None; 2], n, m + 1, 2), &mut HashMap::new())
}

/// A complete DFA with `states` states over the first `letters` letters of `abc`, with uniformly
/// random transitions and accepting set.
pub fn random_dfa<R: Rng>(rng: &mut R, states: usize, letters: usize) -> Dfa {
    let alph = Alphabet::new("abc".chars().take(letters)).unwrap();
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    let transitions: Vec<(usize, char, usize)> = (0..states)
        .flat_map(|p| alph.letters().iter().map(move |&c| (p, c)))
        .map(|(p, c)| (p, c, rng.gen_range(0..states)))
        .collect();
    Dfa::new(alph, states, 0, &accepting, &transitions).unwrap()
}
