use std::fmt;
use std::str::FromStr;

use super::{Direction, Ranker, RankerStep};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Default bound on ranker depth during class enumeration.
pub const DEFAULT_DEPTH_LIMIT: usize = 8;
/// Default bound on alphabet size during class enumeration.
pub const DEFAULT_ALPHABET_LIMIT: usize = 4;

/// The named ranker classes.
///
/// `R*_mn` are exact classes (`m` blocks, depth `n`). The underlined classes `uR*_mn` contain the
/// `m`-block rankers of depth at most `n` with the given initial direction, together with every
/// ranker of fewer blocks and depth at most `n`. The `uR*_m` shapes are the unions over all depths,
/// truncated at the enumeration cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    R,
    RX,
    RY,
    UnderRX,
    UnderRY,
    UnderR,
    UnboundedRX,
    UnboundedRY,
    UnboundedR,
}

impl Shape {
    pub fn is_unbounded(self) -> bool {
        matches!(self, Shape::UnboundedRX | Shape::UnboundedRY | Shape::UnboundedR)
    }

    pub const ALL: [Shape; 9] = [
        Shape::R,
        Shape::RX,
        Shape::RY,
        Shape::UnderRX,
        Shape::UnderRY,
        Shape::UnderR,
        Shape::UnboundedRX,
        Shape::UnboundedRY,
        Shape::UnboundedR,
    ];
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::R => "R_mn",
            Shape::RX => "RX_mn",
            Shape::RY => "RY_mn",
            Shape::UnderRX => "uRX_mn",
            Shape::UnderRY => "uRY_mn",
            Shape::UnderR => "uR_mn",
            Shape::UnboundedRX => "uRX_m",
            Shape::UnboundedRY => "uRY_m",
            Shape::UnboundedR => "uR_m",
        })
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Shape::ALL
            .into_iter()
            .find(|shape| shape.to_string() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown ranker class shape `{s}`")))
    }
}

/// A named, finite class of rankers over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankerClassSpec {
    pub shape: Shape,
    pub m: usize,
    /// Depth bound; for the unbounded shapes this is the enumeration cap.
    pub n: usize,
    pub alphabet: Alphabet,
    pub depth_limit: usize,
    pub alphabet_limit: usize,
}

impl RankerClassSpec {
    pub fn new(shape: Shape, m: usize, n: usize, alphabet: Alphabet) -> Result<Self> {
        if m == 0 || n < m {
            return Err(Error::InvalidParameters(format!("ranker class needs 1 <= m <= n, got m={m}, n={n}")));
        }
        Ok(RankerClassSpec {
            shape,
            m,
            n,
            alphabet,
            depth_limit: DEFAULT_DEPTH_LIMIT,
            alphabet_limit: DEFAULT_ALPHABET_LIMIT,
        })
    }

    pub fn with_limits(mut self, depth_limit: usize, alphabet_limit: usize) -> Self {
        self.depth_limit = depth_limit;
        self.alphabet_limit = alphabet_limit;
        self
    }

    /// Parses `shape:m,n` (for example `uRX_mn:2,3`) or `shape:m` with `cap` as depth bound for
    /// the unbounded shapes.
    pub fn parse(text: &str, alphabet: Alphabet, cap: usize) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("malformed class spec `{text}` (expected shape:m,n)"));
        let (shape, params) = text.split_once(':').ok_or_else(bad)?;
        let shape: Shape = shape.trim().parse()?;
        let nums: Vec<usize> =
            params.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?;
        match (shape.is_unbounded(), nums.as_slice()) {
            (true, [m]) => RankerClassSpec::new(shape, *m, cap, alphabet),
            (false, [m, n]) => RankerClassSpec::new(shape, *m, *n, alphabet),
            _ => Err(bad()),
        }
    }

    pub fn contains(&self, r: &Ranker) -> bool {
        let (m, n) = (self.m, self.n);
        match self.shape {
            Shape::R => in_exact(r, m, n, None),
            Shape::RX => in_exact(r, m, n, Some(Direction::X)),
            Shape::RY => in_exact(r, m, n, Some(Direction::Y)),
            Shape::UnderRX | Shape::UnboundedRX => in_underlined(r, m, n, Some(Direction::X)),
            Shape::UnderRY | Shape::UnboundedRY => in_underlined(r, m, n, Some(Direction::Y)),
            Shape::UnderR | Shape::UnboundedR => in_underlined(r, m, n, None),
        }
    }
}

fn in_exact(r: &Ranker, m: usize, n: usize, initial: Option<Direction>) -> bool {
    r.blocks() == m && r.depth() == n && initial.is_none_or(|d| r.first_direction() == d)
}

fn in_underlined(r: &Ranker, m: usize, n: usize, initial: Option<Direction>) -> bool {
    let b = r.blocks();
    r.depth() <= n && (b < m || (b == m && initial.is_none_or(|d| r.first_direction() == d)))
}

/// The underlined class with `initial = Some(X)`/`Some(Y)`/`None` (both), for any `m, n >= 0`.
/// Empty when `m == 0` or `n == 0`. Used internally where parameters drop below `m <= n`.
pub(crate) fn underlined_class(alphabet: &Alphabet, m: usize, n: usize, initial: Option<Direction>) -> Vec<Ranker> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    collect(alphabet, m, n, &mut steps, &mut |r| {
        if in_underlined(r, m, n, initial) {
            out.push(r.clone());
        }
    });
    out.sort();
    out
}

/// Depth-first generation of all rankers with at most `max_blocks` blocks and depth at most
/// `max_depth`.
fn collect(
    alphabet: &Alphabet,
    max_blocks: usize,
    max_depth: usize,
    steps: &mut Vec<RankerStep>,
    emit: &mut dyn FnMut(&Ranker),
) {
    if steps.len() == max_depth {
        return;
    }
    for direction in [Direction::X, Direction::Y] {
        for &letter in alphabet.letters() {
            steps.push(RankerStep { direction, letter });
            let r = Ranker { steps: steps.clone() };
            if r.blocks() <= max_blocks {
                emit(&r);
                collect(alphabet, max_blocks, max_depth, steps, emit);
            }
            steps.pop();
        }
    }
}

/// All rankers of the class, sorted by depth and then lexicographically.
pub fn enumerate_rankers(spec: &RankerClassSpec) -> Result<Vec<Ranker>> {
    if spec.n > spec.depth_limit {
        return Err(Error::CapExceeded(format!("depth {} exceeds limit {}", spec.n, spec.depth_limit)));
    }
    if spec.alphabet.len() > spec.alphabet_limit {
        return Err(Error::CapExceeded(format!(
            "alphabet size {} exceeds limit {}",
            spec.alphabet.len(),
            spec.alphabet_limit
        )));
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    collect(&spec.alphabet, spec.m, spec.n, &mut steps, &mut |r| {
        if spec.contains(r) {
            out.push(r.clone());
        }
    });
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AgreementMode {
    Defined,
    Condensed,
}

impl FromStr for AgreementMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "defined" => Ok(AgreementMode::Defined),
            "condensed" => Ok(AgreementMode::Condensed),
            _ => Err(Error::InvalidParameters(format!("unknown agreement mode `{s}`"))),
        }
    }
}

/// Whether exactly the same rankers of the class are defined (or condensed) on `u` and `v`.
pub fn agree_on_rankers(u: &Word, v: &Word, spec: &RankerClassSpec, mode: AgreementMode) -> Result<bool> {
    let class = enumerate_rankers(spec)?;
    Ok(agree_on(&class, u, v, mode))
}

pub(crate) fn agree_on(class: &[Ranker], u: &Word, v: &Word, mode: AgreementMode) -> bool {
    class.iter().all(|r| match mode {
        AgreementMode::Defined => r.is_defined_on(u) == r.is_defined_on(v),
        AgreementMode::Condensed => r.is_condensed_on(u) == r.is_condensed_on(v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[Ranker]) -> Vec<String> {
        v.iter().map(|r| r.to_string()).collect()
    }

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn depth_one_class() {
        let spec = RankerClassSpec::new(Shape::R, 1, 1, ab()).unwrap();
        assert_eq!(names(&enumerate_rankers(&spec).unwrap()), ["Xa", "Xb", "Ya", "Yb"]);
    }

    #[test]
    fn two_block_x_initial_unary() {
        let spec = RankerClassSpec::new(Shape::RX, 2, 2, Alphabet::parse("a").unwrap()).unwrap();
        assert_eq!(names(&enumerate_rankers(&spec).unwrap()), ["Xa.Ya"]);
    }

    #[test]
    fn one_block_depth_two() {
        let spec = RankerClassSpec::new(Shape::RX, 1, 2, ab()).unwrap();
        assert_eq!(names(&enumerate_rankers(&spec).unwrap()), ["Xa.Xa", "Xa.Xb", "Xb.Xa", "Xb.Xb"]);
    }

    #[test]
    fn underlined_class_contents() {
        let spec = RankerClassSpec::new(Shape::UnderRX, 2, 2, Alphabet::parse("a").unwrap()).unwrap();
        // 2-block X-initial up to depth 2 plus all 1-block rankers up to depth 2
        assert_eq!(names(&enumerate_rankers(&spec).unwrap()), ["Xa", "Ya", "Xa.Xa", "Xa.Ya", "Ya.Ya"]);
    }

    #[test]
    fn unbounded_shape_uses_cap() {
        let spec = RankerClassSpec::parse("uRX_m:1", Alphabet::parse("a").unwrap(), 3).unwrap();
        assert_eq!(names(&enumerate_rankers(&spec).unwrap()), ["Xa", "Xa.Xa", "Xa.Xa.Xa"]);
    }

    #[test]
    fn limits_are_enforced() {
        let spec = RankerClassSpec::new(Shape::R, 1, 9, ab()).unwrap();
        assert!(matches!(enumerate_rankers(&spec), Err(Error::CapExceeded(_))));
        let spec = RankerClassSpec::new(Shape::R, 1, 2, Alphabet::parse("abcde").unwrap()).unwrap();
        assert!(matches!(enumerate_rankers(&spec), Err(Error::CapExceeded(_))));
        let spec = RankerClassSpec::new(Shape::R, 1, 2, Alphabet::parse("abcde").unwrap()).unwrap().with_limits(8, 5);
        assert_eq!(enumerate_rankers(&spec).unwrap().len(), 50);
    }

    #[test]
    fn spec_validation_and_parsing() {
        assert!(RankerClassSpec::new(Shape::R, 2, 1, ab()).is_err());
        assert!(RankerClassSpec::new(Shape::R, 0, 1, ab()).is_err());
        assert!(RankerClassSpec::parse("R_mn:1", ab(), 8).is_err());
        assert!(RankerClassSpec::parse("Q_mn:1,1", ab(), 8).is_err());
        let s = RankerClassSpec::parse("uRY_mn:2,3", ab(), 8).unwrap();
        assert_eq!((s.shape, s.m, s.n), (Shape::UnderRY, 2, 3));
    }

    #[test]
    fn agreement_examples() {
        let (u, v) = (Word::from("ab"), Word::from("ba"));
        let r11 = RankerClassSpec::new(Shape::R, 1, 1, ab()).unwrap();
        assert!(agree_on_rankers(&u, &v, &r11, AgreementMode::Defined).unwrap());
        let rx12 = RankerClassSpec::new(Shape::RX, 1, 2, ab()).unwrap();
        assert!(!agree_on_rankers(&u, &v, &rx12, AgreementMode::Defined).unwrap());
        assert!(agree_on_rankers(&u, &u, &rx12, AgreementMode::Condensed).unwrap());
    }
}
