use serde::Serialize;

use super::FiniteMonoid;

/// Green's R-, L- and J-classes, each listed by increasing least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenSummary {
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    pub r_trivial: bool,
    pub l_trivial: bool,
    pub j_trivial: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

fn partition_by(ideals: &[BitSet]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen: std::collections::HashMap<&BitSet, usize> = std::collections::HashMap::new();
    for (s, ideal) in ideals.iter().enumerate() {
        match seen.get(ideal) {
            Some(&c) => classes[c].push(s),
            None => {
                seen.insert(ideal, classes.len());
                classes.push(vec![s]);
            }
        }
    }
    classes
}

/// Computes Green's relations from principal ideals: `s R t` iff `sM = tM`, `s L t` iff
/// `Ms = Mt`, `s J t` iff `MsM = MtM`.
pub fn green_summary(m: &FiniteMonoid) -> GreenSummary {
    let n = m.len();
    let mut right = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    for s in m.elements() {
        let mut r = BitSet::new(n);
        let mut l = BitSet::new(n);
        for t in m.elements() {
            r.insert(m.mul(s, t));
            l.insert(m.mul(t, s));
        }
        right.push(r);
        left.push(l);
    }
    let two_sided: Vec<BitSet> = right
        .iter()
        .map(|r| {
            let mut j = BitSet::new(n);
            for x in r.iter() {
                j.union_with(&left[x]);
            }
            j
        })
        .collect();

    let r_classes = partition_by(&right);
    let l_classes = partition_by(&left);
    let j_classes = partition_by(&two_sided);
    GreenSummary {
        r_trivial: r_classes.len() == n,
        l_trivial: l_classes.len() == n,
        j_trivial: j_classes.len() == n,
        r_classes,
        l_classes,
        j_classes,
    }
}
