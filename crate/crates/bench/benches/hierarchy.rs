use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fo2hier::{cong_equivalent, min_joint_level, Alphabet, CongruenceQuery, Ranker};
use fo2hier_bench::{syntactic_monoid, words_of_length, PATTERNS};

fn joint_level(c: &mut Criterion) {
    for pattern in PATTERNS {
        let m = syntactic_monoid(pattern);
        c.bench_function(&format!("min_joint_level {pattern}"), |b| b.iter(|| min_joint_level(black_box(&m))));
    }
}

fn congruence(c: &mut Criterion) {
    let words = words_of_length(&['a', 'b'], 5);
    let q = CongruenceQuery::right(2, 3).unwrap();
    c.bench_function("cong_equivalent (2,3) all pairs of length 5", |b| {
        b.iter(|| {
            let mut n = 0usize;
            for u in &words {
                for v in &words {
                    n += usize::from(cong_equivalent(u, v, q));
                }
            }
            n
        })
    });
}

fn ranker_eval(c: &mut Criterion) {
    let abc = Alphabet::parse("abc").unwrap();
    let r = Ranker::parse("Xa.Yb.Xc", &abc).unwrap();
    let words = words_of_length(&['a', 'b', 'c'], 6);
    c.bench_function("condensed eval Xa.Yb.Xc on length 6", |b| {
        b.iter(|| words.iter().filter(|u| r.is_condensed_on(u)).count())
    });
}

criterion_group!(benches, joint_level, congruence, ranker_eval);
criterion_main!(benches);
