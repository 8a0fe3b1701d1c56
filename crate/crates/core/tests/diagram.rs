use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use plethyra::diagram::*;
use plethyra::partition::Partition;
use plethyra::perm::Permutation;
use plethyra::setpart::SetPartition;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn d(text: &str) -> PartitionDiagram {
    text.parse().unwrap()
}

fn rd(text: &str) -> RamifiedDiagram {
    text.parse().unwrap()
}

fn idx(text: &str) -> PropIndex {
    text.parse().unwrap()
}

fn random_partition(rng: &mut StdRng, n: usize) -> SetPartition {
    let raw: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.max(1))).collect();
    SetPartition::from_labels(&raw)
}

fn random_diagram(rng: &mut StdRng, r: usize) -> PartitionDiagram {
    PartitionDiagram::new(r, r, random_partition(rng, 2 * r)).unwrap()
}

fn random_ramified(rng: &mut StdRng, r: usize) -> RamifiedDiagram {
    let outer = random_partition(rng, 2 * r);
    let raw: Vec<(usize, usize)> = (0..2 * r).map(|v| (outer.label(v), rng.gen_range(0..3))).collect();
    let inner = SetPartition::from_labels(&raw);
    RamifiedDiagram::new(PartitionDiagram::new(r, r, inner).unwrap(), PartitionDiagram::new(r, r, outer).unwrap())
        .unwrap()
}

fn assoc(a: &PartitionDiagram, b: &PartitionDiagram, c: &PartitionDiagram) {
    let ab = a.compose(b).unwrap();
    let left = ab.diagram.compose(c).unwrap();
    let bc = b.compose(c).unwrap();
    let right = a.compose(&bc.diagram).unwrap();
    assert_eq!(left.diagram, right.diagram);
    assert_eq!(ab.exp_out + left.exp_out, bc.exp_out + right.exp_out, "{a} {b} {c}");
}

#[test]
fn composition_is_associative_exhaustively_up_to_three_strands() {
    for r in 0..=3 {
        let all = PartitionDiagram::all(r, r);
        std::thread::scope(|scope| {
            for chunk in all.chunks(all.len().div_ceil(8).max(1)) {
                let all = &all;
                scope.spawn(move || {
                    for a in chunk {
                        for b in all {
                            for c in all {
                                assoc(a, b, c);
                            }
                        }
                    }
                });
            }
        });
    }
}

#[test]
fn composition_is_associative_on_random_four_strand_triples() {
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..200 {
        let (a, b, c) = (random_diagram(&mut rng, 4), random_diagram(&mut rng, 4), random_diagram(&mut rng, 4));
        assoc(&a, &b, &c);
    }
}

#[test]
fn propagating_count_never_increases() {
    let all = PartitionDiagram::all(2, 2);
    for a in &all {
        for b in &all {
            let c = a.compose(b).unwrap().diagram;
            assert!(c.propagating_count() <= a.propagating_count().min(b.propagating_count()));
        }
    }
}

#[test]
fn orbit_round_trip_up_to_six_vertices() {
    let mut checked = 0;
    for n in 0..=6 {
        for north in 0..=n {
            for x in PartitionDiagram::all(north, n - north) {
                let back = orbit_collapse(&orbit_expand(&x));
                assert_eq!(back, BTreeMap::from([(x.clone(), BigInt::one())]), "{x}");
                checked += 1;
            }
        }
    }
    // Σ_{n ≤ 6} (n+1)·Bell(n).
    assert_eq!(checked, 1 + 2 + 3 * 2 + 4 * 5 + 5 * 15 + 6 * 52 + 7 * 203);
}

#[test]
fn orbit_basis_of_a_single_strand() {
    let expanded = orbit_expand(&d("{1}|{1'}"));
    let keys: BTreeSet<String> = expanded.keys().map(ToString::to_string).collect();
    assert_eq!(keys, BTreeSet::from(["{1}|{1'}".to_string(), "{1,1'}".to_string()]));
    assert_eq!(orbit_to_diagram(&d("{1}|{1'}")).get(&d("{1,1'}")), Some(&BigInt::from(-1)));
}

#[test]
fn diagonal_embedding_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..200 {
        let (a, b) = (random_diagram(&mut rng, 3), random_diagram(&mut rng, 3));
        let plain = a.compose(&b).unwrap();
        let ram = RamifiedDiagram::diagonal(&a).compose(&RamifiedDiagram::diagonal(&b)).unwrap();
        assert_eq!(ram.diagram, RamifiedDiagram::diagonal(&plain.diagram));
        assert_eq!((ram.exp_in, ram.exp_out), (plain.exp_out, plain.exp_out));
    }
}

fn ramified_assoc(a: &RamifiedDiagram, b: &RamifiedDiagram, c: &RamifiedDiagram) {
    let ab = a.compose(b).unwrap();
    let left = ab.diagram.compose(c).unwrap();
    let bc = b.compose(c).unwrap();
    let right = a.compose(&bc.diagram).unwrap();
    assert_eq!(left.diagram, right.diagram);
    assert_eq!(ab.exp_in + left.exp_in, bc.exp_in + right.exp_in);
    assert_eq!(ab.exp_out + left.exp_out, bc.exp_out + right.exp_out);
}

#[test]
fn ramified_composition_is_associative() {
    for r in 0..=2 {
        let all = RamifiedDiagram::all(r, r);
        for a in &all {
            for b in &all {
                for c in &all {
                    ramified_assoc(a, b, c);
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..2000 {
        let (a, b, c) = (random_ramified(&mut rng, 3), random_ramified(&mut rng, 3), random_ramified(&mut rng, 3));
        ramified_assoc(&a, &b, &c);
    }
}

#[test]
fn two_strand_indices_and_squares() {
    let pictured = [
        ("{1,2'}|{2,1'}@{1,2'}|{2,1'}", "(1,1)"),
        ("{1,2'}|{2,1'}@{1,2,1',2'}", "(2)"),
        ("{1}|{2,2'}|{1'}@{1,1'}|{2,2'}", "(1,0)"),
        ("{1}|{2,2'}|{1'}@{1}|{2,2'}|{1'}", "(1)"),
        ("{1}|{2}|{1'}|{2'}@{1,1'}|{2,2'}", "(0,0)"),
        ("{1,2}|{1'}|{2'}@{1,2,2'}|{1'}", "(0)"),
        ("{1,2}|{1'}|{2'}@{1,2}|{1'}|{2'}", "∅"),
    ];
    for (text, index) in pictured {
        assert_eq!(propagating_index(&rd(text)), idx(index), "{text}");
    }
    let third = rd(pictured[2].0);
    let sq = third.compose(&third).unwrap();
    assert_eq!((sq.diagram, sq.exp_in, sq.exp_out), (third, 1, 0));
    let seventh = rd(pictured[6].0);
    let sq = seventh.compose(&seventh).unwrap();
    assert_eq!((sq.diagram, sq.exp_in, sq.exp_out), (seventh, 1, 1));
}

#[test]
fn ten_strand_propagating_index() {
    let outer = "{1,2,3,1',2'}|{4,5,3',4',5'}|{6,6'}|{7,8,7',8'}|{9,10}|{9'}|{10'}";
    let inner = "{1,1'}|{2,3,2'}|{4,5'}|{5,4'}|{6}|{7,8,7',8'}|{9}|{10}|{3'}|{6'}|{9'}|{10'}";
    let diagram = rd(&format!("{inner}@{outer}"));
    assert_eq!(propagating_index(&diagram), idx("(2,2,1,0)"));
}

#[test]
fn theta_idempotent_block_structure() {
    let theta = idx("(3,2,2,1,0,0)");
    let e = e_theta(&theta, 13).unwrap();
    assert_eq!(propagating_index(&e), theta);
    let outer_sizes: Vec<usize> = e.outer().blocks().iter().map(Vec::len).collect();
    assert_eq!(outer_sizes, vec![6, 4, 4, 2, 2, 2, 1, 1, 1, 1, 1, 1]);
    // The two zero entries give outer-propagating blocks of inner singletons.
    assert_eq!(e.outer().propagating_count(), 6);
    assert_eq!(e.inner().propagating_count(), 8);
    let sq = e.compose(&e).unwrap();
    assert_eq!(sq.diagram, e);
    assert_eq!((sq.exp_in, sq.exp_out), (2 + 3, 3));
}

#[test]
fn propagating_index_never_rises_in_theta_order() {
    let poset = ThetaPoset::new(2);
    let all = RamifiedDiagram::all(2, 2);
    for a in &all {
        for b in &all {
            let c = a.compose(b).unwrap().diagram;
            let ic = propagating_index(&c);
            assert!(poset.le(&ic, &propagating_index(a)), "{a} · {b}");
            assert!(poset.le(&ic, &propagating_index(b)), "{a} · {b}");
        }
    }
    let poset = ThetaPoset::new(3);
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..2000 {
        let (a, b) = (random_ramified(&mut rng, 3), random_ramified(&mut rng, 3));
        let ic = propagating_index(&a.compose(&b).unwrap().diagram);
        assert!(poset.le(&ic, &propagating_index(&a)) && poset.le(&ic, &propagating_index(&b)));
    }
}

#[test]
fn theta_two_has_the_listed_elements() {
    let names: Vec<String> = theta_elements(2).iter().map(ToString::to_string).collect();
    let expected: BTreeSet<&str> = ["∅", "(0)", "(0,0)", "(1)", "(1,0)", "(1,1)", "(2)"].into();
    assert_eq!(names.iter().map(String::as_str).collect::<BTreeSet<_>>(), expected);
}

#[test]
fn wreath_diagrams_multiply_like_the_group() {
    let (a, b) = (2, 3);
    let mut rng = StdRng::seed_from_u64(7);
    let random_perm = |rng: &mut StdRng, n: usize| {
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            v.swap(i, rng.gen_range(0..=i));
        }
        Permutation::from_images(v).unwrap()
    };
    for _ in 0..50 {
        let s1: Vec<Permutation> = (0..b).map(|_| random_perm(&mut rng, a)).collect();
        let p1 = random_perm(&mut rng, b);
        let s2: Vec<Permutation> = (0..b).map(|_| random_perm(&mut rng, a)).collect();
        let p2 = random_perm(&mut rng, b);
        let w1 = wreath_diagram(&s1, &p1, a, b).unwrap();
        let w2 = wreath_diagram(&s2, &p2, a, b).unwrap();
        let prod = w1.compose(&w2).unwrap();
        assert_eq!((prod.exp_in, prod.exp_out), (0, 0));
        // Reading top to bottom: block j goes to p1(j), then to p2(p1(j)).
        let sigmas: Vec<Permutation> = (0..b).map(|j| s2[p1.apply(j)].compose(&s1[j])).collect();
        let expected = wreath_diagram(&sigmas, &p2.compose(&p1), a, b).unwrap();
        assert_eq!(prod.diagram, expected);
    }
}

#[test]
fn concatenated_elementary_pieces() {
    let v22 = v_pair(Some(2), 2).unwrap();
    let v3 = v_pair(None, 3).unwrap();
    let joined = v22.horizontal_concat(&v3);
    assert_eq!(joined, rd("{1,1'}|{2,2'}|{3'}|{4'}|{5'}|{6'}|{7'}@{1,2,1',2',3',4'}|{5',6',7'}"));
    assert_eq!(joined, v_elementary(2, &[2], &Partition::from_slice(&[3]).unwrap()).unwrap());
    let big = v_elementary(2, &[2, 2, 0], &Partition::from_slice(&[3, 2]).unwrap()).unwrap();
    assert_eq!((big.north(), big.south()), (6, 15));
    assert_eq!(propagating_index(&big), idx("(2,2,2)"));
    let ty = type_of(&big, 2, 3).unwrap();
    assert_eq!(ty.to_string(), "((2,2,0),(3,2))");
}

#[test]
fn plenty_diagrams_share_a_type() {
    let outer = "{1,2,1',3'}|{3,4,2',4',5'}|{6',7'}";
    let inner = "{1,1'}|{2,3'}|{3,5'}|{4,2'}|{4'}|{6'}|{7'}";
    let first = rd(&format!("{inner}@{outer}"));
    let ty = type_of(&first, 2, 2).unwrap();
    assert_eq!(ty, DiagramType { gamma: vec![1, 0], epsilon: Partition::from_slice(&[2]).unwrap() });
    // Right action of a permutation of the southern vertices.
    let sigma = Permutation::from_cycles(7, &[&[1, 4, 6], &[2, 5, 7, 3]]).unwrap();
    let twist = |diag: &RamifiedDiagram| {
        let relabel = |p: &PartitionDiagram| {
            let blocks: Vec<Vec<usize>> = p
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&v| if v < 4 { v } else { 4 + sigma.apply(v - 4) }).collect())
                .collect();
            PartitionDiagram::from_blocks(4, 7, &blocks).unwrap()
        };
        RamifiedDiagram::new(relabel(diag.inner()), relabel(diag.outer())).unwrap()
    };
    let second = twist(&first);
    assert_eq!(type_of(&second, 2, 2).unwrap(), ty);
    // Left action of ((12), 1; (12)) ∈ S_2 ≀ S_2 on the northern vertices.
    let w = wreath_diagram(
        &[Permutation::transposition(2, 0, 1), Permutation::identity(2)],
        &Permutation::transposition(2, 0, 1),
        2,
        2,
    )
    .unwrap();
    let third = w.compose(&first).unwrap();
    assert_eq!((third.exp_in, third.exp_out), (0, 0));
    assert_eq!(type_of(&third.diagram, 2, 2).unwrap(), ty);
    assert_eq!(normalize_v_labels(&third.diagram, 2, 2).unwrap(), normalize_v_labels(&first, 2, 2).unwrap());
}

#[test]
fn depth_quotient_example_with_two_pairs() {
    let basis = v0_basis(4, 0, 0).unwrap();
    assert_eq!(basis.len(), 1 + 3);
    let pairs: Vec<_> =
        basis.iter().filter(|x| type_of(x, 0, 0).unwrap().epsilon == Partition::from_slice(&[2, 2]).unwrap()).collect();
    assert_eq!(pairs.len(), 3);
}

#[test]
fn depth_radical_complements_the_quotient_basis() {
    for (r, a, b) in [(3, 1, 1), (3, 0, 2), (3, 0, 1), (4, 1, 2), (4, 2, 1), (4, 0, 2), (4, 0, 0), (3, 1, 3)] {
        let north = if a == 0 { b } else { a * b };
        let basis: BTreeSet<RamifiedDiagram> = v0_basis(r, a, b).unwrap().into_iter().collect();
        let target = PropIndex::new(vec![a; b]);
        let mut survivors = BTreeSet::new();
        for x in RamifiedDiagram::all(north, r) {
            if propagating_index(&x) != target {
                assert!(is_depth_radical(&x, a, b).is_err());
                continue;
            }
            if !is_depth_radical(&x, a, b).unwrap() {
                survivors.insert(normalize_v_labels(&x, a, b).unwrap());
            }
        }
        assert_eq!(survivors, basis, "r={r} a={a} b={b}");
        for x in &basis {
            assert!(!is_depth_radical(x, a, b).unwrap());
        }
    }
}

#[test]
fn depth_radical_conditions() {
    // An outer southern singleton.
    let single = rd("{1,1'}|{2'}@{1,1'}|{2'}");
    assert!(is_depth_radical(&single, 1, 1).unwrap());
    // Two southern vertices in one inner block.
    let joined = rd("{1,1',2'}@{1,1',2'}");
    assert!(is_depth_radical(&joined, 1, 1).unwrap());
    let fine = rd("{1,1'}|{2'}@{1,1',2'}");
    assert!(!is_depth_radical(&fine, 1, 1).unwrap());
    assert!(is_depth_radical(&fine, 2, 1).is_err());
}

#[test]
fn dimension_consistency() {
    let p = |x: &[usize]| Partition::from_slice(x).unwrap();
    assert_eq!(dq_dimension_check(5, &p(&[2, 1])).unwrap(), (BigInt::from(70), BigInt::from(70)));
    for r in 0..=5 {
        for b in 0..=r.min(3) {
            for beta in plethyra::partition::partitions_of(b) {
                let (x, y) = dq_dimension_check(r, &beta).unwrap();
                assert_eq!(x, y, "r={r} β={beta}");
            }
        }
    }
    for (r, alpha, beta) in [(5, p(&[1]), p(&[2, 1])), (4, p(&[2]), p(&[1])), (4, p(&[1, 1]), p(&[2])), (5, p(&[2]), p(&[1, 1]))] {
        let (x, y) = plethyra::diagram::dq_dimension_check_ramified(r, &alpha, &beta).unwrap();
        assert_eq!(x, y, "r={r} α={alpha} β={beta}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_form_round_trips(labels in proptest::collection::vec(0usize..6, 6)) {
        let x = PartitionDiagram::new(3, 3, SetPartition::from_labels(&labels)).unwrap();
        let parsed: PartitionDiagram = x.to_string().parse().unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn cell_action_untwists(vl in proptest::collection::vec(0usize..5, 5), dl in proptest::collection::vec(0usize..8, 8)) {
        // v: a (2,3)-diagram built so that northern 1, 2 propagate in order.
        let mut raw = vec![0usize, 1, 0];
        raw.extend(vl.iter().take(2).map(|&x| x % 3));
        let labels = SetPartition::from_labels(&raw);
        let v = PartitionDiagram::new(2, 3, labels).unwrap();
        let (count, pi) = v.propagating_data();
        prop_assume!(count == 2 && pi.is_identity());
        let dd = PartitionDiagram::new(3, 3, SetPartition::from_labels(&dl[..6])).unwrap();
        if let Some(out) = cell_action(&v, &dd).unwrap() {
            let (count, pi) = out.diagram.propagating_data();
            prop_assert_eq!(count, 2);
            prop_assert!(pi.is_identity());
        }
    }
}
