use std::collections::BTreeSet;

use heisenberg::combinat::*;
use heisenberg::lincomb::int;
use num_bigint::BigInt;
use proptest::prelude::*;

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec()).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn perm(w: &str) -> Permutation {
    Permutation::from_word(w).unwrap()
}

/// Independent count: fill cells one at a time, each bounded by what its
/// row and column still need, and check the margins at the end.
fn brute_margin_count(alpha: &Composition, beta: &Composition, n: usize) -> usize {
    let (p, q) = (alpha.weight(), beta.weight());
    let mut cols = vec![n - p];
    cols.extend_from_slice(alpha.parts());
    let mut rows = vec![n - q];
    rows.extend_from_slice(beta.parts());
    fn rec(cell: usize, width: usize, rows: &mut [usize], cols: &mut [usize]) -> usize {
        if cell == rows.len() * width {
            return usize::from(rows.iter().chain(cols.iter()).all(|&r| r == 0));
        }
        let (i, j) = (cell / width, cell % width);
        let hi = if cell == 0 { 0 } else { rows[i].min(cols[j]) };
        let mut total = 0;
        for v in 0..=hi {
            rows[i] -= v;
            cols[j] -= v;
            total += rec(cell + 1, width, rows, cols);
            rows[i] += v;
            cols[j] += v;
        }
        total
    }
    let width = cols.len();
    rec(0, width, &mut rows, &mut cols)
}

#[test]
fn margin_matrix_examples() {
    let a = comp(&[2, 1]);
    let b = comp(&[3]);
    let m3 = enumerate_margin_matrices(&a, &b, 3).unwrap();
    assert_eq!(m3.len(), 1);
    assert_eq!(m3[0].rows(), &[vec![0, 0, 0], vec![0, 2, 1]]);
    let m6 = enumerate_margin_matrices(&a, &b, 6).unwrap();
    assert_eq!(m6.len(), 1);
    assert_eq!(m6[0].rows(), &[vec![0, 2, 1], vec![3, 0, 0]]);
    let counts: Vec<usize> = (3..=6)
        .map(|n| enumerate_margin_matrices(&a, &b, n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 2, 1]);
    assert!(enumerate_margin_matrices(&a, &b, 2).is_err());
    assert!(enumerate_margin_matrices(&a, &b, 7).is_err());
}

#[test]
fn margin_counts_match_brute_force() {
    for p in 0..=3 {
        for q in 0..=3 {
            for a in Composition::all_of(p) {
                for b in Composition::all_of(q) {
                    for n in p.max(q)..=p + q {
                        let fast = enumerate_margin_matrices(&a, &b, n).unwrap().len();
                        assert_eq!(fast, brute_margin_count(&a, &b, n), "{a} {b} {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn matrix_readoffs() {
    let m = MarginMatrix::from_rows(vec![vec![0, 2, 1], vec![3, 0, 0]]).unwrap();
    assert_eq!(matrix_composition(&m), comp(&[2, 1, 3]));
    assert_eq!(matrix_partition(&m), part(&[3, 2, 1]));
    let m = MarginMatrix::from_rows(vec![vec![0, 1], vec![1, 2]]).unwrap();
    assert_eq!(matrix_composition(&m), comp(&[1, 1, 2]));
    let m = MarginMatrix::from_rows(vec![vec![0, 1, 0], vec![1, 1, 1]]).unwrap();
    assert_eq!(matrix_partition(&m), part(&[1, 1, 1, 1]));
    let z = MarginMatrix::from_rows(vec![vec![0]]).unwrap();
    assert!(matrix_composition(&z).is_empty());
    assert!(matrix_partition(&z).is_empty());
}

#[test]
fn shuffle_examples() {
    assert_eq!(shuffles(2, 0), vec![Permutation::identity(2)]);
    let s11: BTreeSet<_> = shuffles(1, 1).into_iter().collect();
    assert_eq!(s11, [perm("12"), perm("21")].into_iter().collect());
    assert_eq!(shuffles(2, 2).len(), 6);
    for p in 0..=5 {
        for q in 0..=5 {
            let s = shuffles(p, q);
            assert_eq!(BigInt::from(s.len()), binomial(p + q, p));
            for x in &s {
                let img = x.image();
                assert!(img[..p].windows(2).all(|w| w[0] < w[1]));
                assert!(img[p..].windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}

#[test]
fn max_shuffle() {
    assert_eq!(beta_max_shuffle(2, 3), perm("45123"));
    assert_eq!(beta_max_shuffle(4, 0), Permutation::identity(4));
    for p in 0..=4 {
        for q in 0..=4 {
            let s = beta_max_shuffle(p, q).compose(&beta_max_shuffle(q, p));
            assert_eq!(s, Permutation::identity(p + q));
        }
    }
}

#[test]
fn descents() {
    assert_eq!(descent_set(&perm("132")), [2].into_iter().collect());
    assert_eq!(descent_composition(&perm("132")), comp(&[2, 1]));
    assert_eq!(descent_composition(&Permutation::identity(4)), comp(&[4]));
    assert_eq!(comp(&[1, 2, 4, 2]).to_subset(), [1, 3, 7].into_iter().collect());
}

#[test]
fn z_factor_examples_and_class_sizes() {
    assert_eq!(z_factor(&part(&[1, 1])), BigInt::from(2));
    assert_eq!(z_factor(&Partition::empty()), BigInt::from(1));
    for k in 0..=6 {
        assert_eq!(z_factor(&Partition::ones(k)), factorial(k));
    }
    for n in 0..=7 {
        let perms = Permutation::all_of(n);
        for l in Partition::all_of(n) {
            let class = perms.iter().filter(|s| s.cycle_type() == l).count();
            assert_eq!(z_factor(&l) * BigInt::from(class), factorial(n), "{l}");
        }
    }
}

#[test]
fn concatenation_and_embedding() {
    assert_eq!(
        concat_partitions(&part(&[3, 2, 1, 1]), &part(&[2, 2, 1])),
        part(&[3, 2, 2, 2, 1, 1, 1])
    );
    assert_eq!(parabolic_embed(&perm("12"), &perm("21")), perm("1243"));
}

#[test]
fn egf_first_coefficient() {
    let ones = vec![int(1); 4];
    let c = egf_heisenberg(&ones, &ones, 3);
    assert_eq!(c[0], int(1));
    assert_eq!(c[1], int(3));
}

fn composition_strategy(max: usize) -> impl Strategy<Value = Composition> {
    (0..=max).prop_flat_map(|n| {
        let all = Composition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn margin_transpose_symmetry(a in composition_strategy(4), b in composition_strategy(4), k in 0usize..5) {
        let (p, q) = (a.weight(), b.weight());
        let n = p.max(q) + k.min(p + q - p.max(q));
        let ab = enumerate_margin_matrices(&a, &b, n).unwrap();
        let ba = enumerate_margin_matrices(&b, &a, n).unwrap();
        prop_assert_eq!(ab.len(), ba.len());
        for m in &ab {
            prop_assert_eq!(&m.transpose().transpose(), m);
            prop_assert!(ba.contains(&m.transpose()));
            prop_assert_eq!(matrix_partition(&m.transpose()), matrix_partition(m));
            prop_assert_eq!(m.total(), n);
        }
    }

    #[test]
    fn subset_composition_roundtrip(n in 1usize..=8, mask in 0u32..128) {
        let subset: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let c = Composition::from_subset(n, &subset).unwrap();
        prop_assert_eq!(c.weight(), n);
        prop_assert_eq!(c.to_subset(), subset);
    }

    #[test]
    fn composition_subset_roundtrip(c in composition_strategy(8)) {
        prop_assume!(!c.is_empty());
        prop_assert_eq!(Composition::from_subset(c.weight(), &c.to_subset()).unwrap(), c);
    }

    #[test]
    fn inverse_and_composition(n in 0usize..=6, i in 0usize..720, j in 0usize..720) {
        let all = Permutation::all_of(n);
        let s = &all[i % all.len()];
        let t = &all[j % all.len()];
        prop_assert_eq!(s.compose(&s.inverse()), Permutation::identity(n));
        let st = s.compose(t);
        for k in 1..=n {
            prop_assert_eq!(st.apply(k), s.apply(t.apply(k)));
        }
    }
}
