mod common;

use common::ac;
use monideal::generic::{
    classify_coordinates, is_order_generic, ordered_bell, p_c_set, p_c_union, type3_cardinality, type3_parts,
    type3_generators, type3_sets, weak_orderings, Type3Class,
};
use monideal::lattice::{is_antichain, Antichain};
use monideal::reconstruct::zero_dim_ideal_from_socle;
use monideal::sample::{random_antichain, random_order_generic};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn order_generic(k: usize, dmin: usize, dmax: usize) -> impl Strategy<Value = Antichain> {
    (any::<u64>(), dmin..=dmax).prop_map(move |(seed, d)| {
        random_order_generic(&mut ChaCha8Rng::seed_from_u64(seed), k, d, 9).unwrap()
    })
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << k)).map(|m| (0..k).filter(|i| m & (1 << i) != 0).collect()).collect()
}

fn binomial(n: u64, r: u64) -> u64 {
    (1..=r).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

#[test]
fn ordered_bell_recurrence() {
    // a(n) = sum_{j=1..n} C(n, j) a(n - j)
    let mut a = vec![1u64];
    for n in 1..=10u64 {
        let next = (1..=n).map(|j| binomial(n, j) * a[(n - j) as usize]).sum();
        a.push(next);
    }
    for (k, &expected) in a.iter().enumerate() {
        assert_eq!(ordered_bell(k).unwrap(), expected, "k={k}");
    }
    let mut factorial = 1u64;
    for k in 2..=10u64 {
        factorial *= k;
        assert!(ordered_bell(k as usize).unwrap() > factorial);
    }
    for k in 0..=5 {
        assert_eq!(weak_orderings(k).len() as u64, ordered_bell(k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_sizes_sum_to_dimension(q in common::antichain(6, 4, 0, 4)) {
        let c = classify_coordinates(&q);
        prop_assert_eq!(c.classes().values().map(Vec::len).sum::<usize>(), q.dim());
        for w in c.classes().keys() {
            prop_assert_eq!(w.len(), q.len());
        }
    }

    #[test]
    fn order_generic_union_is_the_ideal(q in prop_oneof![order_generic(2, 2, 5), order_generic(3, 6, 9)]) {
        let union = p_c_union(&q).unwrap();
        prop_assert!(union.order_generic);
        prop_assert!(is_antichain(&union.points).unwrap());
        let ideal = zero_dim_ideal_from_socle(&q).unwrap();
        prop_assert_eq!(union.points.as_slice(), ideal.points());
    }

    #[test]
    fn p_c_sets_are_pairwise_incomparable(q in order_generic(3, 6, 8)) {
        // r <= s with r in P_C, s in P_C' and C ⊆ C' forces C = C' and r = s
        let sets: Vec<(Vec<usize>, Vec<_>)> =
            subsets(3).into_iter().map(|c| { let p = p_c_set(&c, &q).unwrap().points; (c, p) }).collect();
        for (c, pc) in &sets {
            for (c2, pc2) in &sets {
                if !c.iter().all(|i| c2.contains(i)) {
                    continue;
                }
                for r in pc {
                    for s in pc2 {
                        if r.leq(s).unwrap() {
                            prop_assert_eq!(c, c2);
                            prop_assert_eq!(r, s);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn type3_matches_reconstruction(q in order_generic(3, 6, 10)) {
        let gens = type3_generators(&q).unwrap();
        prop_assert_eq!(&gens, &zero_dim_ideal_from_socle(&q).unwrap());
        let union = p_c_union(&q).unwrap();
        prop_assert_eq!(gens.points(), union.points.as_slice());
        let sizes = type3_sets(&q).unwrap().sizes();
        prop_assert_eq!(type3_cardinality(&sizes).unwrap(), gens.len() as u64);
    }

    #[test]
    fn pair_pieces_overlap_only_on_ties(q in order_generic(3, 6, 10)) {
        let parts = type3_parts(&q).unwrap();
        let sets = type3_sets(&q).unwrap();
        for u in 0..3 {
            let touching: Vec<_> = parts.pairs.iter().filter(|((a, b), _)| *a == u || *b == u).collect();
            let (r_set, s_set) = (&touching[0].1, &touching[1].1);
            let tied = sets.class(Type3Class::TiedLow { top: u });
            let mins = sets.sole_min(u);
            for r in r_set {
                for s in s_set {
                    if r.leq(s).unwrap() || s.leq(r).unwrap() {
                        prop_assert_eq!(r, s);
                        let support: Vec<usize> = (0..q.dim()).filter(|&i| r.coords()[i] != 0).collect();
                        prop_assert_eq!(support.len(), 2);
                        let hits = support.iter().filter(|i| mins.contains(i)).count()
                            + support.iter().filter(|i| tied.contains(i)).count();
                        prop_assert_eq!(hits, 2);
                    }
                }
            }
        }
    }
}

#[test]
fn all_tied_triple_is_not_order_generic() {
    let q = ac(&[&[0, 5, 5, 5, 5, 5], &[5, 0, 5, 5, 5, 5], &[5, 5, 0, 5, 5, 5]]);
    assert!(!is_order_generic(&q));
    assert!(type3_generators(&q).is_err());
}

#[test]
fn singleton_classes_example() {
    // columns realise the six strict orders once each
    let q = ac(&[&[0, 0, 1, 2, 1, 2], &[1, 2, 0, 0, 2, 1], &[2, 1, 2, 1, 0, 0]]);
    assert!(is_order_generic(&q));
    let sizes = type3_sets(&q).unwrap().sizes();
    assert_eq!(type3_cardinality(&sizes).unwrap(), type3_generators(&q).unwrap().len() as u64);
}

#[test]
fn non_generic_union_is_still_flagged() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let q = random_antichain(&mut rng, 3, 3, 0, 4).unwrap();
        let union = p_c_union(&q).unwrap();
        assert_eq!(union.order_generic, is_order_generic(&q));
    }
}
