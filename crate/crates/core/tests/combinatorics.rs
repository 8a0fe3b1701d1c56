use num_bigint::{BigInt, BigUint};
use plethyra::partition::{partition_count, partitions_of, Partition};
use plethyra::perm::Permutation;
use plethyra::setpart::{all_set_partitions, bell, mobius, mobius_closed_form, mobius_upper_set, SetPartition};
use plethyra::tableaux::std_tableaux_count_brute;
use proptest::prelude::*;

fn partition_strategy(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| proptest::sample::select(partitions_of(n)))
}

fn set_partition_strategy(n: usize) -> impl Strategy<Value = SetPartition> {
    proptest::collection::vec(0..n.max(1), n).prop_map(|raw| SetPartition::from_labels(&raw))
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition_strategy(12)) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.len(), p.first());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn text_round_trip(p in partition_strategy(12)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn hook_formula_matches_enumeration(p in partition_strategy(7)) {
        prop_assert_eq!(p.std_tableaux_count(), std_tableaux_count_brute(&p));
    }

    #[test]
    fn mobius_matches_closed_form(a in set_partition_strategy(6), b in set_partition_strategy(6)) {
        prop_assert_eq!(mobius(&a, &b).ok(), mobius_closed_form(&a, &b).ok());
    }

    #[test]
    fn mobius_rows_sum_to_zero(a in set_partition_strategy(6)) {
        let total: BigInt = mobius_upper_set(&a).into_iter().map(|(_, m)| m).sum();
        let expected = BigInt::from(u8::from(a.num_blocks() <= 1));
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn relabelling_is_canonical(a in set_partition_strategy(7)) {
        prop_assert_eq!(SetPartition::from_labels(a.labels()), a.clone());
        for c in a.coarsenings() {
            prop_assert!(a.is_finer_than(&c));
        }
    }

    #[test]
    fn permutation_group_laws(a in permutation_strategy(6), b in permutation_strategy(6), c in permutation_strategy(6)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
    }
}

#[test]
fn partition_counts_match_enumeration() {
    for n in 0..=20 {
        assert_eq!(BigUint::from(partitions_of(n).len()), partition_count(n), "n = {n}");
    }
    assert_eq!(partition_count(100).to_string(), "190569292");
}

#[test]
fn sum_of_squared_dimensions_is_factorial() {
    for n in 0..=8usize {
        let total: BigUint = partitions_of(n).iter().map(|p| p.std_tableaux_count().pow(2)).sum();
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        assert_eq!(total, fact, "n = {n}");
    }
}

#[test]
fn bell_numbers_count_set_partitions() {
    for n in 0..=8 {
        assert_eq!(BigUint::from(all_set_partitions(n).len()), bell(n), "n = {n}");
    }
}
