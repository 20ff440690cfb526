//! A small regular-expression language: letters, classes `[abc]` (`[]` is the empty set),
//! concatenation, `|`, `*`, `+` and parentheses (`()` is the empty word). Whitespace is ignored.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::Dfa;
use crate::error::{Error, Result};
use crate::word::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Epsilon,
    /// One letter from the set; the empty set matches nothing.
    Class(Vec<char>),
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
}

impl Regex {
    pub fn parse(source: &str) -> Result<Regex> {
        let chars: Vec<(usize, char)> = source.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser { chars, pos: 0, len: source.len() };
        let re = p.alt()?;
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected `)`"));
        }
        Ok(re)
    }

    /// Letters mentioned anywhere in the expression.
    pub fn letters(&self) -> Alphabet {
        fn walk(r: &Regex, out: &mut Vec<char>) {
            match r {
                Regex::Epsilon => {}
                Regex::Class(cs) => out.extend(cs),
                Regex::Concat(rs) | Regex::Alt(rs) => rs.iter().for_each(|r| walk(r, out)),
                Regex::Star(r) | Regex::Plus(r) => walk(r, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        Alphabet::new(out).expect("regex letters are printable")
    }

    /// Subset construction over a Thompson automaton. The result is complete but not minimal.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        let mut nfa = Nfa::default();
        let start = nfa.add();
        let end = nfa.add();
        nfa.build(self, start, end);

        let k = alphabet.len();
        let initial = nfa.closure([start].into_iter().collect());
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::from([(initial.clone(), 0)]);
        let mut subsets = vec![initial.clone()];
        let mut queue = VecDeque::from([initial]);
        let mut delta = Vec::new();
        while let Some(set) = queue.pop_front() {
            for &c in alphabet.letters() {
                let moved: BTreeSet<usize> = set
                    .iter()
                    .flat_map(|&s| nfa.letter_edges[s].iter().filter(|(cs, _)| cs.contains(&c)).map(|&(_, t)| t))
                    .collect();
                let target = nfa.closure(moved);
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(target.clone(), id);
                        subsets.push(target.clone());
                        queue.push_back(target);
                        id
                    }
                };
                delta.push(id);
            }
        }
        debug_assert_eq!(delta.len(), subsets.len() * k);
        let accepting = subsets.iter().map(|s| s.contains(&end)).collect();
        Dfa::from_parts(alphabet.clone(), 0, accepting, delta)
    }
}

#[derive(Default)]
struct Nfa {
    eps: Vec<Vec<usize>>,
    letter_edges: Vec<Vec<(Vec<char>, usize)>>,
}

impl Nfa {
    fn add(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.letter_edges.push(Vec::new());
        self.eps.len() - 1
    }

    fn build(&mut self, r: &Regex, from: usize, to: usize) {
        match r {
            Regex::Epsilon => self.eps[from].push(to),
            Regex::Class(cs) => self.letter_edges[from].push((cs.clone(), to)),
            Regex::Concat(rs) => {
                let mut cur = from;
                for (i, r) in rs.iter().enumerate() {
                    let next = if i + 1 == rs.len() { to } else { self.add() };
                    self.build(r, cur, next);
                    cur = next;
                }
                if rs.is_empty() {
                    self.eps[from].push(to);
                }
            }
            Regex::Alt(rs) => rs.iter().for_each(|r| self.build(r, from, to)),
            Regex::Star(r) | Regex::Plus(r) => {
                let (a, b) = (self.add(), self.add());
                self.eps[from].push(a);
                self.build(r, a, b);
                self.eps[b].push(a);
                self.eps[b].push(to);
            }
        }
        if let Regex::Star(_) = r {
            self.eps[from].push(to);
        }
    }

    fn closure(&self, mut set: BTreeSet<usize>) -> BTreeSet<usize> {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
        set
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        let at = self.chars.get(self.pos).map_or(self.len, |(i, _)| *i);
        Error::RegexParse { pos: at, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn alt(&mut self) -> Result<Regex> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 { branches.pop().unwrap() } else { Regex::Alt(branches) })
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.repeat()?);
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn repeat(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => r = Regex::Star(Box::new(r)),
                Some('+') => r = Regex::Plus(Box::new(r)),
                _ => return Ok(r),
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let r = self.alt()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some('[') => {
                self.pos += 1;
                let mut set = Vec::new();
                loop {
                    match self.peek() {
                        Some(']') => break,
                        Some(c) if is_letter(c) => set.push(c),
                        Some(_) => return Err(self.error("unexpected symbol in class")),
                        None => return Err(self.error("unterminated class")),
                    }
                    self.pos += 1;
                }
                self.pos += 1;
                set.sort_unstable();
                set.dedup();
                Ok(Regex::Class(set))
            }
            Some(c) if is_letter(c) => {
                self.pos += 1;
                Ok(Regex::Class(vec![c]))
            }
            Some(_) => Err(self.error("unexpected operator")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn is_letter(c: char) -> bool {
    !matches!(c, '|' | '*' | '+' | '(' | ')' | '[' | ']') && !c.is_control()
}
