//! Finite monoids given by multiplication tables.

mod green;
mod identity;
mod table_format;
mod term;
mod transition;

pub use green::{green_summary, GreenSummary};
pub(crate) use identity::satisfies_identity_on;
pub use identity::{satisfies_identity, satisfies_identity_with_bound, IdentityCheck, DEFAULT_VARIABLE_BOUND};
pub use term::{eval_term, OmegaTerm};
pub use transition::transition_monoid;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite monoid on elements `0..len()`.
///
/// The table is validated at construction: associativity and two-sided neutrality of the identity
/// are checked exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    generators: Vec<(String, usize)>,
    omega: Vec<usize>,
}

impl FiniteMonoid {
    /// Validates a square table and its identity.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::MalformedTable("a monoid has at least one element".into()));
        }
        if let Some(row) = table.iter().position(|r| r.len() != size) {
            return Err(Error::MalformedTable(format!("row {row} has length {}, expected {size}", table[row].len())));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&x| x >= size) {
            return Err(Error::MalformedTable(format!("entry {bad} is out of range 0..{size}")));
        }
        if identity >= size {
            return Err(Error::WrongIdentity(identity));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * size + b];
        for a in 0..size {
            if mul(identity, a) != a || mul(a, identity) != a {
                return Err(Error::WrongIdentity(identity));
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = mul(a, b);
                for c in 0..size {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Self::from_flat_unchecked(size, flat, identity, Vec::new()))
    }

    /// Builds a monoid from a table already known to be associative with the given identity
    /// (closures of transformations, congruence quotients).
    pub(crate) fn from_flat_unchecked(
        size: usize,
        table: Vec<usize>,
        identity: usize,
        generators: Vec<(String, usize)>,
    ) -> Self {
        let mut m = FiniteMonoid { size, table, identity, generators, omega: Vec::new() };
        m.omega = (0..size).map(|s| m.compute_omega(s)).collect();
        m
    }

    /// Attaches generator labels. Fails if an index is out of range.
    pub fn with_generators(mut self, generators: Vec<(String, usize)>) -> Result<Self> {
        if let Some((label, idx)) = generators.iter().find(|(_, i)| *i >= self.size) {
            return Err(Error::MalformedTable(format!("generator {label} -> {idx} out of range")));
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&s| self.is_idempotent(s)).collect()
    }

    /// `s^ω`: the unique idempotent power of `s`.
    #[inline]
    pub fn omega(&self, s: usize) -> usize {
        self.omega[s]
    }

    fn compute_omega(&self, s: usize) -> usize {
        let mut p = s;
        for _ in 0..self.size {
            if self.is_idempotent(p) {
                return p;
            }
            p = self.mul(p, s);
        }
        unreachable!("some power of every element of a finite monoid is idempotent")
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Image of a word under the morphism fixed by the generator labels; `None` if some letter
    /// has no generator.
    pub fn evaluate_word(&self, letters: &[char]) -> Option<usize> {
        let lookup: HashMap<&str, usize> = self.generators.iter().map(|(l, i)| (l.as_str(), *i)).collect();
        let mut buf = [0u8; 4];
        letters.iter().try_fold(self.identity, |acc, c| {
            let g = *lookup.get(&*c.encode_utf8(&mut buf))?;
            Some(self.mul(acc, g))
        })
    }

    /// The opposite monoid, with product `s · t := t s`.
    pub fn reversed(&self) -> FiniteMonoid {
        let n = self.size;
        let table = (0..n * n).map(|k| self.mul(k % n, k / n)).collect();
        FiniteMonoid::from_flat_unchecked(n, table, self.identity, self.generators.clone())
    }

    /// Renumbers elements by `perm` (old index -> new index).
    pub fn relabeled(&self, perm: &[usize]) -> FiniteMonoid {
        let n = self.size;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let generators = self.generators.iter().map(|(l, g)| (l.clone(), perm[*g])).collect();
        FiniteMonoid::from_flat_unchecked(n, table, perm[self.identity], generators)
    }

    pub fn to_table_text(&self) -> String {
        table_format::write(self)
    }

    pub fn parse_table_text(text: &str) -> Result<Self> {
        table_format::parse(text)
    }
}

/// Membership in the basic pseudovarieties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VarietyFlags {
    pub aperiodic: bool,
    #[serde(rename = "DA")]
    pub da: bool,
    #[serde(rename = "J1")]
    pub j1: bool,
    #[serde(rename = "J")]
    pub j: bool,
    #[serde(rename = "R")]
    pub r: bool,
    #[serde(rename = "L")]
    pub l: bool,
}

/// `x^ω = x^ω x` for every element.
pub fn is_aperiodic(m: &FiniteMonoid) -> bool {
    m.elements().all(|x| {
        let e = m.omega(x);
        m.mul(e, x) == e
    })
}

/// `(xy)^ω x (xy)^ω = (xy)^ω` for all `x, y`.
pub fn is_da(m: &FiniteMonoid) -> bool {
    m.elements().all(|x| {
        m.elements().all(|y| {
            let e = m.omega(m.mul(x, y));
            m.mul(m.mul(e, x), e) == e
        })
    })
}

pub fn variety_membership(m: &FiniteMonoid) -> VarietyFlags {
    let g = green_summary(m);
    VarietyFlags {
        aperiodic: is_aperiodic(m),
        da: is_da(m),
        j1: m.idempotents().len() == m.len() && m.is_commutative(),
        j: g.j_trivial,
        r: g.r_trivial,
        l: g.l_trivial,
    }
}
