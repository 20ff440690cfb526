use std::collections::{HashMap, VecDeque};

use super::FiniteMonoid;
use crate::automata::Dfa;

/// The transition monoid of a complete DFA: state maps induced by words, with `s · t` meaning
/// "apply `s`, then `t`". Elements are numbered identity first, then by the shortlex-least word
/// reaching them. Generators are labelled by the letters; several letters may share an element.
pub fn transition_monoid(d: &Dfa) -> FiniteMonoid {
    let n = d.num_states();
    let k = d.alphabet().len();
    let identity: Vec<usize> = (0..n).collect();
    let letter_maps: Vec<Vec<usize>> = (0..k).map(|a| (0..n).map(|q| d.step_index(q, a)).collect()).collect();

    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut maps = vec![identity];
    let mut queue = VecDeque::from([0usize]);
    // right multiplication by each letter, filled during the closure
    let mut by_letter: Vec<Vec<usize>> = Vec::new();
    while let Some(s) = queue.pop_front() {
        let mut row = Vec::with_capacity(k);
        for g in &letter_maps {
            let next: Vec<usize> = maps[s].iter().map(|&q| g[q]).collect();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = maps.len();
                    index.insert(next.clone(), id);
                    maps.push(next);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        by_letter.push(row);
    }

    let size = maps.len();
    let mut table = vec![0; size * size];
    for s in 0..size {
        for t in 0..size {
            let st: Vec<usize> = maps[s].iter().map(|&q| maps[t][q]).collect();
            table[s * size + t] = index[&st];
        }
    }
    let generators = d.alphabet().letters().iter().enumerate().map(|(a, c)| (c.to_string(), by_letter[0][a])).collect();
    FiniteMonoid::from_flat_unchecked(size, table, 0, generators)
}
