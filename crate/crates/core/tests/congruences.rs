mod common;

use common::*;
use fo2hier::congruence::DEFAULT_LENGTH_CAP;
use fo2hier::monoid::variety_membership;
use fo2hier::{
    cong_equivalent, quotient_monoid, subword_equivalent, wi_equivalent, CongruenceQuery, Side, WiMode, Word,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(s: &str) -> Word {
    Word::from(s)
}

fn q(m: usize, n: usize, side: Side) -> CongruenceQuery {
    CongruenceQuery::new(m, n, side).unwrap()
}

#[test]
fn subword_examples() {
    assert!(subword_equivalent(&w("abab"), &w("abba"), 2));
    assert!(!subword_equivalent(&w("abab"), &w("abba"), 3));
    assert!(subword_equivalent(&w(""), &w(""), 5));
}

#[test]
fn subwords_match_brute_force() {
    let ws = words("ab", 5);
    for n in 1..=3 {
        let sets: Vec<_> = ws.iter().map(|u| subword_set(u.letters(), n)).collect();
        for (i, u) in ws.iter().enumerate() {
            for (j, v) in ws.iter().enumerate() {
                assert_eq!(subword_equivalent(u, v, n), sets[i] == sets[j], "{u} {v} {n}");
            }
        }
    }
}

#[test]
fn congruence_examples() {
    assert!(cong_equivalent(&w("abab"), &w("abba"), q(1, 2, Side::Right)));
    assert!(!cong_equivalent(&w("bac"), &w("bca"), q(1, 2, Side::Right)));
    assert!(!cong_equivalent(&w("bac"), &w("bca"), q(2, 3, Side::Right)));
    for side in [Side::Right, Side::Left] {
        assert!(cong_equivalent(&w("abcab"), &w("abcab"), q(3, 3, side)));
    }
}

#[test]
fn recursion_matches_condensed_agreement() {
    // lengths up to 4 here; the full length-5 sweep is an acceptance criterion
    let ab = ['a', 'b'];
    let ws = words("ab", 4);
    for m in 1..=3 {
        for n in m..=3 {
            for (side, x) in [(Side::Right, true), (Side::Left, false)] {
                let class = underlined(&ab, m, n, Some(x));
                for u in &ws {
                    for v in &ws {
                        let oracle = condensed_agree(u.letters(), v.letters(), &class);
                        assert_eq!(cong_equivalent(u, v, q(m, n, side)), oracle, "{u} {v} ({m},{n}) {side}");
                    }
                }
            }
        }
    }
}

#[test]
fn compatible_with_concatenation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ws = words("ab", 5);
    let contexts = words("ab", 3);
    for (m, n) in [(1, 2), (2, 2), (2, 3), (3, 3)] {
        for side in [Side::Right, Side::Left] {
            let mut tested = 0;
            while tested < 40 {
                let (u, v) = (ws.choose(&mut rng).unwrap(), ws.choose(&mut rng).unwrap());
                if u == v || !cong_equivalent(u, v, q(m, n, side)) {
                    continue;
                }
                tested += 1;
                for _ in 0..5 {
                    let (x, z) = (contexts.choose(&mut rng).unwrap(), contexts.choose(&mut rng).unwrap());
                    let (xuz, xvz) = (x.concat(u).concat(z), x.concat(v).concat(z));
                    assert!(cong_equivalent(&xuz, &xvz, q(m, n, side)), "{x}.{u}.{z} vs {x}.{v}.{z}");
                }
            }
        }
    }
}

#[test]
fn refinement_and_duality() {
    let ws = words("ab", 4);
    for m in 2..=3 {
        for n in m..=4 {
            for u in &ws {
                for v in &ws {
                    let right = cong_equivalent(u, v, q(m, n, Side::Right));
                    let left = cong_equivalent(u, v, q(m, n, Side::Left));
                    if right {
                        if n > m {
                            assert!(cong_equivalent(u, v, q(m, n - 1, Side::Right)));
                        }
                        assert!(cong_equivalent(u, v, q(m - 1, n - 1, Side::Left)));
                    }
                    assert_eq!(right, cong_equivalent(&u.reversed(), &v.reversed(), q(m, n, Side::Left)), "{u} {v}");
                    assert_eq!(left, cong_equivalent(&u.reversed(), &v.reversed(), q(m, n, Side::Right)), "{u} {v}");
                }
            }
        }
    }
}

#[test]
fn base_case_is_subword_equivalence() {
    let ws = words("ab", 5);
    for n in 1..=4 {
        for u in &ws {
            for v in &ws {
                let s = subword_equivalent(u, v, n);
                assert_eq!(cong_equivalent(u, v, q(1, n, Side::Right)), s);
                assert_eq!(cong_equivalent(u, v, q(1, n, Side::Left)), s);
            }
        }
    }
}

#[test]
fn interweaving_small() {
    let ab = alphabet("ab");
    let ws = words("ab", 4);
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        for u in &ws {
            for v in &ws {
                if cong_equivalent(u, v, q(m + 1, 2 * n, Side::Right)) {
                    assert!(wi_equivalent(u, v, &ab, m, n, WiMode::Condensed).unwrap(), "{u} {v} ({m},{n})");
                }
            }
        }
    }
}

#[test]
fn quotient_examples() {
    let a = alphabet("a");
    let ab = alphabet("ab");
    let unary = quotient_monoid(&a, q(1, 2, Side::Right), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(unary.monoid.len(), 3);
    assert_eq!(unary.project(&w("aaa")), unary.project(&w("aa")));
    let content = quotient_monoid(&ab, q(1, 1, Side::Right), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(content.monoid.len(), 4);
    let flags = variety_membership(&content.monoid);
    assert!(flags.j1);
}

#[test]
fn quotients_are_the_congruence_classes() {
    let ab = alphabet("ab");
    let ws = words("ab", 5);
    for (m, n) in [(1, 2), (2, 2), (2, 3)] {
        for side in [Side::Right, Side::Left] {
            let quotient = quotient_monoid(&ab, q(m, n, side), DEFAULT_LENGTH_CAP).unwrap();
            let proj: Vec<usize> = ws.iter().map(|u| quotient.project(u).unwrap()).collect();
            for (i, u) in ws.iter().enumerate() {
                for (j, v) in ws.iter().enumerate() {
                    assert_eq!(proj[i] == proj[j], cong_equivalent(u, v, q(m, n, side)), "{u} {v}");
                    assert_eq!(quotient.project(&u.concat(v)), Some(quotient.monoid.mul(proj[i], proj[j])));
                }
            }
            for (s, rep) in quotient.representatives.iter().enumerate() {
                assert_eq!(quotient.project(rep), Some(s));
            }
            // the right-congruence quotients lie in R, the left ones in L
            let flags = variety_membership(&quotient.monoid);
            match side {
                Side::Right => assert!(flags.r),
                Side::Left => assert!(flags.l),
            }
        }
    }
}
