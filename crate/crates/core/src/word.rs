//! Alphabets and finite words.

use std::fmt;

use crate::error::{Error, Result};

/// A finite alphabet of single-character letters, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let mut v: Vec<char> = letters.into_iter().collect();
        if let Some(&c) = v.iter().find(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::InvalidAlphabet(format!("letter {c:?} is not printable")));
        }
        v.sort_unstable();
        v.dedup();
        Ok(Alphabet(v))
    }

    /// Parses `"abc"`, `"a b c"` or `"a,b,c"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars().filter(|c| !c.is_whitespace() && *c != ','))
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.0.binary_search(&c).ok()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        v.dedup();
        Alphabet(v)
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for &c in &self.0 {
                    next.push(w.pushed(c));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite word. Positions are 1-based in the public API: `letter(i)` for `1 <= i <= len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, checking every letter against `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let letters: Vec<char> = text.chars().collect();
        if let Some(&c) = letters.iter().find(|c| !alphabet.contains(**c)) {
            return Err(Error::LetterOutsideAlphabet(c));
        }
        Ok(Word(letters))
    }

    /// Builds a word without an alphabet check.
    pub fn from_letters<I: IntoIterator<Item = char>>(letters: I) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> char {
        self.0[i - 1]
    }

    /// `alph(u)`: the letters that occur in the word.
    pub fn alph(&self) -> Alphabet {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        Alphabet(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pushed(&self, c: char) -> Word {
        let mut v = self.0.clone();
        v.push(c);
        Word(v)
    }

    /// Whether `pattern` is a (scattered) subword of this word.
    pub fn has_subword(&self, pattern: &[char]) -> bool {
        let mut it = pattern.iter().peekable();
        for c in &self.0 {
            if it.peek() == Some(&c) {
                it.next();
            }
        }
        it.peek().is_none()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}
