//! Line-based DFA files:
//!
//! ```text
//! alphabet: a b c
//! states: 0 1 2
//! initial: 0
//! final: 2
//! trans: 0 a 1
//! ```
//!
//! State names are arbitrary tokens, numbered in the order of the `states:` line. One `trans:`
//! line per transition; the transition function must be complete. Blank lines and `#` comments
//! are ignored.

use std::collections::HashMap;
use std::fmt::Write;

use super::Dfa;
use crate::error::{Error, Result};
use crate::word::Alphabet;

pub(super) fn write(d: &Dfa) -> String {
    let mut out = String::new();
    let letters: Vec<String> = d.alphabet().letters().iter().map(|c| c.to_string()).collect();
    let states: Vec<String> = (0..d.num_states()).map(|q| q.to_string()).collect();
    let finals: Vec<String> = (0..d.num_states()).filter(|&q| d.is_accepting(q)).map(|q| q.to_string()).collect();
    writeln!(out, "alphabet: {}", letters.join(" ")).unwrap();
    writeln!(out, "states: {}", states.join(" ")).unwrap();
    writeln!(out, "initial: {}", d.initial()).unwrap();
    writeln!(out, "final: {}", finals.join(" ")).unwrap();
    for p in 0..d.num_states() {
        for (a, c) in d.alphabet().letters().iter().enumerate() {
            writeln!(out, "trans: {p} {c} {}", d.step_index(p, a)).unwrap();
        }
    }
    out
}

pub(super) fn parse(text: &str) -> Result<Dfa> {
    let err = |line: usize, msg: String| Error::DfaFormat { line, msg };
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<HashMap<String, usize>> = None;
    let mut initial: Option<(usize, String)> = None;
    let mut finals: Vec<(usize, String)> = Vec::new();
    let mut trans: Vec<(usize, String, String, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) =
            line.split_once(':').ok_or_else(|| err(lineno, format!("expected `key: value`, got `{line}`")))?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "alphabet" => {
                let mut letters = Vec::new();
                for t in &tokens {
                    let mut cs = t.chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) => letters.push(c),
                        _ => return Err(err(lineno, format!("letter `{t}` is not a single symbol"))),
                    }
                }
                alphabet = Some(Alphabet::new(letters).map_err(|e| err(lineno, e.to_string()))?);
            }
            "states" => {
                let mut map = HashMap::new();
                for t in &tokens {
                    let n = map.len();
                    if map.insert(t.to_string(), n).is_some() {
                        return Err(err(lineno, format!("duplicate state `{t}`")));
                    }
                }
                states = Some(map);
            }
            "initial" => match tokens.as_slice() {
                [q] => initial = Some((lineno, q.to_string())),
                _ => return Err(err(lineno, "expected exactly one initial state".into())),
            },
            "final" => finals.extend(tokens.iter().map(|t| (lineno, t.to_string()))),
            "trans" => match tokens.as_slice() {
                [p, a, q] => trans.push((lineno, p.to_string(), a.to_string(), q.to_string())),
                _ => return Err(err(lineno, "expected `trans: <state> <letter> <state>`".into())),
            },
            other => return Err(err(lineno, format!("unknown key `{other}`"))),
        }
    }

    let alphabet = alphabet.ok_or_else(|| err(0, "missing `alphabet:` line".into()))?;
    let states = states.ok_or_else(|| err(0, "missing `states:` line".into()))?;
    let state =
        |line: usize, name: &str| states.get(name).copied().ok_or_else(|| err(line, format!("unknown state `{name}`")));
    let (iline, iname) = initial.ok_or_else(|| err(0, "missing `initial:` line".into()))?;
    let initial = state(iline, &iname)?;
    let accepting = finals.iter().map(|(l, q)| state(*l, q)).collect::<Result<Vec<_>>>()?;
    let mut transitions = Vec::with_capacity(trans.len());
    let mut seen = HashMap::new();
    for (line, p, a, q) in &trans {
        let mut cs = a.chars();
        let c = match (cs.next(), cs.next()) {
            (Some(c), None) if alphabet.contains(c) => c,
            _ => return Err(err(*line, format!("letter `{a}` is not in the alphabet"))),
        };
        let (p, q) = (state(*line, p)?, state(*line, q)?);
        if let Some(prev) = seen.insert((p, c), q) {
            if prev != q {
                return Err(err(*line, format!("nondeterministic transition from state {p} on `{c}`")));
            }
        }
        transitions.push((p, c, q));
    }
    Dfa::new(alphabet, states.len(), initial, &accepting, &transitions)
}
