//! ω-terms: words over variables closed under products and ω-powers.
//!
//! Text syntax: variables `x1`, `x2`, ...; products by juxtaposition (whitespace optional between
//! parenthesised factors); `^w` for the ω-power. Example: `(x1^w x2^w x1^w)^w`.

use std::fmt;
use std::str::FromStr;

use super::FiniteMonoid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OmegaTerm {
    /// `x_k`, with `k >= 1`.
    Var(usize),
    Product(Vec<OmegaTerm>),
    Omega(Box<OmegaTerm>),
}

impl OmegaTerm {
    pub fn var(k: usize) -> Self {
        assert!(k >= 1, "variables are numbered from 1");
        OmegaTerm::Var(k)
    }

    pub fn omega(t: OmegaTerm) -> Self {
        OmegaTerm::Omega(Box::new(t))
    }

    /// Product that flattens nested products and drops the wrapper around a single factor.
    pub fn product<I: IntoIterator<Item = OmegaTerm>>(factors: I) -> Self {
        let mut out = Vec::new();
        for f in factors {
            match f {
                OmegaTerm::Product(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        assert!(!out.is_empty(), "products are non-empty");
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            OmegaTerm::Product(out)
        }
    }

    /// Largest variable index occurring in the term.
    pub fn max_variable(&self) -> usize {
        match self {
            OmegaTerm::Var(k) => *k,
            OmegaTerm::Product(fs) => fs.iter().map(OmegaTerm::max_variable).max().unwrap_or(0),
            OmegaTerm::Omega(t) => t.max_variable(),
        }
    }

    /// Whether every occurrence of `x_k` is directly under an ω-power. The value of such a term
    /// only depends on `x_k^ω`.
    pub fn only_under_omega(&self, k: usize) -> bool {
        match self {
            OmegaTerm::Var(j) => *j != k,
            OmegaTerm::Omega(t) if **t == OmegaTerm::Var(k) => true,
            OmegaTerm::Omega(t) => t.only_under_omega(k),
            OmegaTerm::Product(fs) => fs.iter().all(|f| f.only_under_omega(k)),
        }
    }

    /// The term read right to left: evaluating it in `M` equals evaluating `self` in the
    /// opposite monoid.
    pub fn reversed(&self) -> OmegaTerm {
        match self {
            OmegaTerm::Var(k) => OmegaTerm::Var(*k),
            OmegaTerm::Product(fs) => OmegaTerm::Product(fs.iter().rev().map(OmegaTerm::reversed).collect()),
            OmegaTerm::Omega(t) => OmegaTerm::omega(t.reversed()),
        }
    }

    /// Value under `assignment`, where `x_k` is mapped to `assignment[k - 1]`.
    pub fn eval(&self, m: &FiniteMonoid, assignment: &[usize]) -> Result<usize> {
        if let Some(k) = self.first_unassigned(assignment.len()) {
            return Err(Error::UnassignedVariable(k));
        }
        Ok(self.eval_unchecked(m, assignment))
    }

    fn first_unassigned(&self, n: usize) -> Option<usize> {
        match self {
            OmegaTerm::Var(k) => (*k > n).then_some(*k),
            OmegaTerm::Product(fs) => fs.iter().find_map(|f| f.first_unassigned(n)),
            OmegaTerm::Omega(t) => t.first_unassigned(n),
        }
    }

    pub(crate) fn eval_unchecked(&self, m: &FiniteMonoid, assignment: &[usize]) -> usize {
        match self {
            OmegaTerm::Var(k) => assignment[k - 1],
            OmegaTerm::Product(fs) => {
                fs.iter().fold(m.identity(), |acc, f| m.mul(acc, f.eval_unchecked(m, assignment)))
            }
            OmegaTerm::Omega(t) => m.omega(t.eval_unchecked(m, assignment)),
        }
    }
}

/// Evaluation of an ω-term in a monoid under an assignment.
pub fn eval_term(m: &FiniteMonoid, t: &OmegaTerm, assignment: &[usize]) -> Result<usize> {
    t.eval(m, assignment)
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaTerm::Var(k) => write!(f, "x{k}"),
            OmegaTerm::Product(fs) => {
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            OmegaTerm::Omega(t) => match **t {
                OmegaTerm::Product(_) => write!(f, "({t})^w"),
                _ => write!(f, "{t}^w"),
            },
        }
    }
}

impl FromStr for OmegaTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let t = p.product()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(t)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::TermParse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<OmegaTerm> {
        let mut factors = Vec::new();
        while matches!(self.peek(), Some(b'x') | Some(b'(')) {
            factors.push(self.factor()?);
        }
        if factors.is_empty() {
            return Err(self.error("expected a variable or `(`"));
        }
        Ok(OmegaTerm::product(factors))
    }

    fn factor(&mut self) -> Result<OmegaTerm> {
        let mut t = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match digits.parse::<usize>() {
                    Ok(k) if k >= 1 => OmegaTerm::Var(k),
                    _ => return Err(self.error("expected a variable index >= 1 after `x`")),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.product()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            _ => return Err(self.error("expected a variable or `(`")),
        };
        while self.src[self.pos..].starts_with(b"^w") {
            self.pos += 2;
            t = OmegaTerm::omega(t);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn t(s: &str) -> OmegaTerm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let phi1 = t("(x1^w x2^w x1^w)^w");
        assert_eq!(
            phi1,
            OmegaTerm::omega(OmegaTerm::product([
                OmegaTerm::omega(OmegaTerm::var(1)),
                OmegaTerm::omega(OmegaTerm::var(2)),
                OmegaTerm::omega(OmegaTerm::var(1)),
            ]))
        );
        assert_eq!(phi1.to_string(), "(x1^w x2^w x1^w)^w");
        assert_eq!(t("x1(x2x3)^w").to_string(), "x1 (x2 x3)^w");
        assert_eq!(t("((x1))"), OmegaTerm::var(1));
        assert_eq!(t("x1^w^w").to_string(), "x1^w^w");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x0", "x", "(x1", "x1)", "y1", "x1 ^ w"] {
            assert!(matches!(bad.parse::<OmegaTerm>(), Err(Error::TermParse { .. })), "{bad}");
        }
    }

    #[test]
    fn evaluation() {
        let s = semilattice();
        assert_eq!(t("x1").eval(&s, &[1]).unwrap(), 1);
        assert_eq!(t("x1^w").eval(&z2(), &[1]).unwrap(), 0);
        // x1 = 0 (the zero, element 1), x2 = 1 (the identity, element 0)
        assert_eq!(t("(x1^w x2^w x1^w)^w").eval(&s, &[1, 0]).unwrap(), 1);
        assert_eq!(t("x1 x3").eval(&s, &[0, 0]), Err(Error::UnassignedVariable(3)));
    }

    #[test]
    fn omega_occurrences() {
        let phi1 = t("(x1^w x2^w x1^w)^w");
        assert!(phi1.only_under_omega(1) && phi1.only_under_omega(2));
        assert!(!t("(x1 x2)^w").only_under_omega(1));
        assert_eq!(phi1.max_variable(), 2);
        assert_eq!(t("x1 (x2 x3)^w").reversed().to_string(), "(x3 x2)^w x1");
    }
}
