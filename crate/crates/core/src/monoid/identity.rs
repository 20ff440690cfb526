use std::collections::HashMap;

use serde::Serialize;

use super::{FiniteMonoid, OmegaTerm};
use crate::error::{Error, Result};

/// Default bound on the number of variables of an identity (`|M|^k` assignments).
pub const DEFAULT_VARIABLE_BOUND: usize = 4;

/// Outcome of an identity check. `counterexample[k - 1]` is the value of `x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

/// Checks `lhs = rhs` under every assignment of `M`, in row-major order (`x1` most significant).
/// On failure the first counterexample in that order is returned.
pub fn satisfies_identity(m: &FiniteMonoid, lhs: &OmegaTerm, rhs: &OmegaTerm) -> Result<IdentityCheck> {
    satisfies_identity_with_bound(m, lhs, rhs, DEFAULT_VARIABLE_BOUND)
}

/// As [`satisfies_identity`], with an explicit variable bound. Cost grows as `|M|^bound`.
pub fn satisfies_identity_with_bound(
    m: &FiniteMonoid,
    lhs: &OmegaTerm,
    rhs: &OmegaTerm,
    bound: usize,
) -> Result<IdentityCheck> {
    let vars = lhs.max_variable().max(rhs.max_variable());
    if vars > bound {
        return Err(Error::TooManyVariables { vars, bound });
    }
    let all: Vec<usize> = m.elements().collect();
    Ok(satisfies_identity_on(m, lhs, rhs, &vec![all; vars]))
}

/// Checks the identity with `x_k` ranging over `domains[k - 1]`.
pub(crate) fn satisfies_identity_on(
    m: &FiniteMonoid,
    lhs: &OmegaTerm,
    rhs: &OmegaTerm,
    domains: &[Vec<usize>],
) -> IdentityCheck {
    let k = domains.len();
    if domains.iter().any(|d| d.is_empty()) {
        return IdentityCheck { holds: true, counterexample: None };
    }
    let mut prog = Program::default();
    let (l, r) = (prog.compile(lhs), prog.compile(rhs));
    let mut values = vec![0usize; prog.ops.len()];
    let mut idx = vec![0usize; k];
    let mut assignment: Vec<usize> = domains.iter().map(|d| d[0]).collect();
    loop {
        prog.run(m, &assignment, &mut values);
        if values[l] != values[r] {
            return IdentityCheck { holds: false, counterexample: Some(assignment) };
        }
        // odometer, last variable fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return IdentityCheck { holds: true, counterexample: None };
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < domains[pos].len() {
                assignment[pos] = domains[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            assignment[pos] = domains[pos][0];
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Var(usize),
    Mul(usize, usize),
    Omega(usize),
}

/// Both sides of an identity as one straight-line program with shared subterms.
#[derive(Default)]
struct Program {
    ops: Vec<Op>,
    index: HashMap<Op, usize>,
}

impl Program {
    fn push(&mut self, op: Op) -> usize {
        if let Some(&i) = self.index.get(&op) {
            return i;
        }
        self.ops.push(op);
        self.index.insert(op, self.ops.len() - 1);
        self.ops.len() - 1
    }

    fn compile(&mut self, t: &OmegaTerm) -> usize {
        match t {
            OmegaTerm::Var(k) => self.push(Op::Var(k - 1)),
            OmegaTerm::Omega(inner) => {
                let i = self.compile(inner);
                self.push(Op::Omega(i))
            }
            OmegaTerm::Product(fs) => {
                let mut acc = self.compile(&fs[0]);
                for f in &fs[1..] {
                    let b = self.compile(f);
                    acc = self.push(Op::Mul(acc, b));
                }
                acc
            }
        }
    }

    fn run(&self, m: &FiniteMonoid, assignment: &[usize], values: &mut [usize]) {
        for (i, op) in self.ops.iter().enumerate() {
            values[i] = match *op {
                Op::Var(k) => assignment[k],
                Op::Mul(a, b) => m.mul(values[a], values[b]),
                Op::Omega(a) => m.omega(values[a]),
            };
        }
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
    fn group_is_not_aperiodic() {
        let c = satisfies_identity(&z2(), &t("x1^w"), &t("x1^w x1")).unwrap();
        assert_eq!(c, IdentityCheck { holds: false, counterexample: Some(vec![1]) });
    }

    #[test]
    fn da_identity() {
        let (l, r) = (t("(x1 x2)^w x1 (x1 x2)^w"), t("(x1 x2)^w"));
        assert!(satisfies_identity(&semilattice(), &l, &r).unwrap().holds);
        let c = satisfies_identity(&b2(), &l, &r).unwrap();
        // x = a, y = b: ab a ab = 0 != ab
        assert_eq!(c.counterexample, Some(vec![1, 2]));
    }

    #[test]
    fn closed_terms_and_bounds() {
        assert!(satisfies_identity(&b2(), &t("x1 x2 x3 x4"), &t("x1 x2 x3 x4")).unwrap().holds);
        assert_eq!(satisfies_identity(&b2(), &t("x5"), &t("x5")), Err(Error::TooManyVariables { vars: 5, bound: 4 }));
        assert!(satisfies_identity_with_bound(&trivial(), &t("x5"), &t("x1"), 5).unwrap().holds);
    }
}
