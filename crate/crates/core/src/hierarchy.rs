//! The `R_m` / `L_m` hierarchies inside DA and the alternation bounds they give for FO².
//!
//! `R_m = DA ∩ [[φ(G_m) = φ(I_m)]]` and `L_m` uses the mirrored words; `R_1 = L_1 = J`.

use std::fmt;

use serde::Serialize;

use crate::congruence::Side;
use crate::error::{Error, Result};
use crate::monoid::{
    green_summary, is_da, satisfies_identity, satisfies_identity_on, FiniteMonoid, OmegaTerm, DEFAULT_VARIABLE_BOUND,
};

/// A non-empty word over the variables `x1, x2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VariableWord(Vec<usize>);

impl VariableWord {
    pub fn new(vars: Vec<usize>) -> Result<Self> {
        if vars.is_empty() || vars.contains(&0) {
            return Err(Error::InvalidParameters("variable words are non-empty over x1, x2, ...".into()));
        }
        Ok(VariableWord(vars))
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> VariableWord {
        VariableWord(self.0.iter().rev().copied().collect())
    }

    fn concat(&self, other: &VariableWord) -> VariableWord {
        VariableWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for VariableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{k}")?;
        }
        Ok(())
    }
}

/// `(G_m, I_m)`: `G_2 = x2 x1`, `I_2 = x2 x1 x2`, `G_m = x_m rev(G_{m-1})`,
/// `I_m = G_m x_m rev(I_{m-1})`.
pub fn build_sequences(m: usize) -> Result<(VariableWord, VariableWord)> {
    if m < 2 {
        return Err(Error::InvalidParameters(format!("the sequences start at m = 2, got {m}")));
    }
    let mut g = vec![2, 1];
    let mut i = vec![2, 1, 2];
    for k in 3..=m {
        let g_next: Vec<usize> = std::iter::once(k).chain(g.iter().rev().copied()).collect();
        i = g_next.iter().copied().chain([k]).chain(i.iter().rev().copied()).collect();
        g = g_next;
    }
    Ok((VariableWord(g), VariableWord(i)))
}

fn phi_var(k: usize) -> OmegaTerm {
    let w = |k| OmegaTerm::omega(OmegaTerm::var(k));
    match k {
        1 => OmegaTerm::omega(OmegaTerm::product([w(1), w(2), w(1)])),
        2 => w(2),
        _ => {
            let (g, _) = build_sequences(k - 1).expect("k - 1 >= 2");
            let inner = phi_expand(&g.reversed().concat(&g));
            OmegaTerm::omega(OmegaTerm::product([w(k), OmegaTerm::omega(inner), w(k)]))
        }
    }
}

/// Letterwise substitution of `φ` into a variable word.
pub fn phi_expand(w: &VariableWord) -> OmegaTerm {
    OmegaTerm::product(w.vars().iter().map(|&k| phi_var(k)))
}

/// The identity `φ(G_m) = φ(I_m)` (side R) or `φ(rev G_m) = φ(rev I_m)` (side L).
pub fn level_identity(m: usize, side: Side) -> Result<(OmegaTerm, OmegaTerm)> {
    let (g, i) = build_sequences(m)?;
    Ok(match side {
        Side::Right => (phi_expand(&g), phi_expand(&i)),
        Side::Left => (phi_expand(&g.reversed()), phi_expand(&i.reversed())),
    })
}

/// Membership of `M` in `R_m` (side Right) or `L_m` (side Left).
pub fn level_membership(monoid: &FiniteMonoid, m: usize, side: Side) -> Result<bool> {
    match m {
        0 => Err(Error::InvalidParameters("levels start at m = 1".into())),
        1 => Ok(green_summary(monoid).j_trivial),
        _ if m > DEFAULT_VARIABLE_BOUND => Err(Error::TooManyVariables { vars: m, bound: DEFAULT_VARIABLE_BOUND }),
        _ => {
            if !is_da(monoid) {
                return Ok(false);
            }
            let (lhs, rhs) = level_identity(m, side)?;
            // every variable of a φ-term sits under ω, so idempotent values suffice
            debug_assert!((1..=m).all(|k| lhs.only_under_omega(k) && rhs.only_under_omega(k)));
            let domains = vec![monoid.idempotents(); m];
            Ok(satisfies_identity_on(monoid, &lhs, &rhs, &domains).holds)
        }
    }
}

/// One row of a level scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub m: usize,
    #[serde(rename = "R")]
    pub r: bool,
    #[serde(rename = "L")]
    pub l: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub in_da: bool,
    pub r_level: Option<usize>,
    pub l_level: Option<usize>,
    pub joint_level: Option<usize>,
    pub fo2_definable: bool,
    /// `(lo, hi)`: definable with `hi` alternation blocks, not with fewer than `lo`.
    pub alternation_interval: Option<(usize, usize)>,
    /// Levels scanned, in order.
    pub scan: Vec<LevelRow>,
    /// `#generators + 1`, the level at which membership is guaranteed inside DA.
    pub level_bound: usize,
    /// The scan stopped at the variable bound before reaching `level_bound`.
    pub inconclusive: bool,
}

/// Number of distinct non-identity generator elements; all non-identity elements if the monoid
/// carries no generators.
fn generator_count(monoid: &FiniteMonoid) -> usize {
    let mut gens: Vec<usize> = if monoid.generators().is_empty() {
        monoid.elements().collect()
    } else {
        monoid.generators().iter().map(|(_, g)| *g).collect()
    };
    gens.sort_unstable();
    gens.dedup();
    gens.retain(|&g| g != monoid.identity());
    gens.len()
}

/// Scans `m = 1, 2, ...` for the least joint level `m₀` with `M ∈ R_{m₀} ∩ L_{m₀}`.
pub fn min_joint_level(monoid: &FiniteMonoid) -> LevelReport {
    let level_bound = generator_count(monoid) + 1;
    let mut report = LevelReport {
        in_da: is_da(monoid),
        r_level: None,
        l_level: None,
        joint_level: None,
        fo2_definable: false,
        alternation_interval: None,
        scan: Vec::new(),
        level_bound,
        inconclusive: false,
    };
    if !report.in_da {
        return report;
    }
    report.fo2_definable = true;
    for m in 1..=level_bound {
        if m > DEFAULT_VARIABLE_BOUND {
            report.inconclusive = true;
            break;
        }
        let r = level_membership(monoid, m, Side::Right).expect("m is within the variable bound");
        let l = level_membership(monoid, m, Side::Left).expect("m is within the variable bound");
        report.scan.push(LevelRow { m, r, l });
        if r && report.r_level.is_none() {
            report.r_level = Some(m);
        }
        if l && report.l_level.is_none() {
            report.l_level = Some(m);
        }
        if r && l {
            report.joint_level = Some(m);
            report.alternation_interval = Some(if m == 1 { (1, 1) } else { (m - 1, m) });
            break;
        }
    }
    debug_assert!(
        report.joint_level.is_some() || report.inconclusive,
        "a DA monoid with {} generators must lie in R_{level_bound} ∩ L_{level_bound}",
        level_bound - 1
    );
    report.inconclusive |= report.joint_level.is_none();
    report
}

/// `(x2 x3)^ω (x1 x2)^ω = (x2 x3)^ω x2 (x1 x2)^ω`. Advisory only.
pub fn join_diagnostic(monoid: &FiniteMonoid) -> bool {
    let lhs: OmegaTerm = "(x2 x3)^w (x1 x2)^w".parse().expect("valid term");
    let rhs: OmegaTerm = "(x2 x3)^w x2 (x1 x2)^w".parse().expect("valid term");
    satisfies_identity(monoid, &lhs, &rhs).expect("three variables").holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile_regex;
    use crate::monoid::fixtures::*;
    use crate::monoid::transition_monoid;

    fn vw(v: &[usize]) -> String {
        VariableWord::new(v.to_vec()).unwrap().to_string()
    }

    #[test]
    fn sequences() {
        let (g, i) = build_sequences(2).unwrap();
        assert_eq!((g.to_string(), i.to_string()), (vw(&[2, 1]), vw(&[2, 1, 2])));
        let (g, i) = build_sequences(3).unwrap();
        assert_eq!((g.to_string(), i.to_string()), (vw(&[3, 1, 2]), vw(&[3, 1, 2, 3, 2, 1, 2])));
        assert_eq!(build_sequences(4).unwrap().0.to_string(), vw(&[4, 2, 1, 3]));
        assert!(build_sequences(1).is_err());
    }

    #[test]
    fn phi_images() {
        let t = |s: &str| s.parse::<OmegaTerm>().unwrap();
        assert_eq!(phi_var(2), t("x2^w"));
        assert_eq!(phi_var(1), t("(x1^w x2^w x1^w)^w"));
        assert_eq!(phi_var(3), t("(x3^w ((x1^w x2^w x1^w)^w x2^w x2^w (x1^w x2^w x1^w)^w)^w x3^w)^w"));
    }

    fn bc_ca_ab_monoid() -> FiniteMonoid {
        transition_monoid(&compile_regex("[bc]*ca[ab]*", None).unwrap())
    }

    #[test]
    fn levels_of_small_monoids() {
        assert!(level_membership(&semilattice(), 2, Side::Right).unwrap());
        assert!(!level_membership(&b2(), 3, Side::Right).unwrap());
        assert!(level_membership(&trivial(), 1, Side::Left).unwrap());
        assert!(matches!(level_membership(&trivial(), 5, Side::Left), Err(Error::TooManyVariables { .. })));
    }

    #[test]
    fn bc_ca_ab_levels() {
        let m = bc_ca_ab_monoid();
        assert!(!level_membership(&m, 2, Side::Right).unwrap());
        assert!(!level_membership(&m, 2, Side::Left).unwrap());
        assert!(level_membership(&m, 3, Side::Right).unwrap());
        assert!(level_membership(&m, 3, Side::Left).unwrap());
        let r = min_joint_level(&m);
        assert_eq!(r.joint_level, Some(3));
        assert_eq!(r.alternation_interval, Some((2, 3)));
        assert!(!join_diagnostic(&m));
    }

    #[test]
    fn reports() {
        let pt = transition_monoid(&compile_regex("[ab]*a[ab]*b[ab]*", None).unwrap());
        let r = min_joint_level(&pt);
        assert_eq!((r.joint_level, r.alternation_interval), (Some(1), Some((1, 1))));
        let r = min_joint_level(&b2());
        assert!(!r.fo2_definable && r.alternation_interval.is_none());
        assert!(join_diagnostic(&semilattice()) && join_diagnostic(&trivial()));
    }
}
