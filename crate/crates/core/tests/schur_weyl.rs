use num_bigint::BigInt;
use num_rational::BigRational;
use plethyra::coefficients::Limits;
use plethyra::diagram::*;
use plethyra::perm::Permutation;
use plethyra::schur_weyl::*;
use plethyra::setpart::SetPartition;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn limits() -> Limits {
    Limits::default()
}

fn power(base: usize, exponent: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(exponent as u32))
}

fn random_partition(rng: &mut StdRng, n: usize) -> SetPartition {
    let raw: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.max(1))).collect();
    SetPartition::from_labels(&raw)
}

fn random_diagram(rng: &mut StdRng, r: usize) -> PartitionDiagram {
    PartitionDiagram::new(r, r, random_partition(rng, 2 * r)).unwrap()
}

fn random_ramified(rng: &mut StdRng, r: usize) -> RamifiedDiagram {
    let outer = random_diagram(rng, r);
    let refined: Vec<usize> = outer
        .set_partition()
        .labels()
        .iter()
        .map(|&b| b * 2 * r + rng.gen_range(0..2))
        .collect();
    let inner = PartitionDiagram::new(r, r, SetPartition::from_labels(&refined)).unwrap();
    RamifiedDiagram::new(inner, outer).unwrap()
}

fn random_permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(images).unwrap()
}

#[test]
fn wreath_actions_commute_with_ramified_generators() {
    assert!(check_commute(2, 2, 2, &limits()).unwrap());
    assert!(check_commute(2, 2, 3, &limits()).unwrap());
    assert!(check_commute(3, 2, 2, &limits()).unwrap());
    assert!(check_commute(1, 3, 2, &limits()).unwrap());
}

#[test]
fn swapped_embedding_breaks_commutation() {
    assert!(!check_commute_with(2, 2, 2, Embedding::Swapped, &limits()).unwrap());
    assert!(!check_commute_with(3, 2, 2, Embedding::Swapped, &limits()).unwrap());
}

#[test]
fn faithfulness_ranks() {
    assert_eq!(faithfulness_rank(4, 2, &limits()).unwrap(), 15);
    assert_eq!(faithfulness_rank(1, 1, &limits()).unwrap(), 1);
    assert_eq!(faithfulness_rank(2, 1, &limits()).unwrap(), 2);
    let small = faithfulness_rank(2, 2, &limits()).unwrap();
    assert!(small < 15, "rank {small}");
    // Diagrams with at most two blocks stay independent: S(4,1) + S(4,2).
    assert_eq!(small, 8);
}

#[test]
fn faithfulness_rank_six_three() {
    // d = 2r: all Bell(6) diagrams act independently on (C^6)^{⊗3}.
    assert_eq!(faithfulness_rank(6, 3, &limits()).unwrap(), 203);
}

#[test]
fn diagram_basis_is_sum_over_orbit_coarsenings() {
    for dim in [2usize, 3] {
        for r in 1..=2 {
            for d in PartitionDiagram::all(r, r) {
                let mut total = SparseExactMatrix::zeros(dim.pow(r as u32), dim.pow(r as u32));
                for (x, c) in orbit_expand(&d) {
                    let term = orbit_action(&x, dim, &limits()).unwrap();
                    total = total.add(&term.scale(&BigRational::from_integer(c)));
                }
                assert_eq!(total, diagram_action(&d, dim, &limits()).unwrap(), "{d} at dim {dim}");
            }
        }
    }
}

#[test]
fn orbit_actions_partition_the_all_ones_matrix() {
    let dim = 3;
    let mut total = SparseExactMatrix::zeros(9, 9);
    for x in PartitionDiagram::all(2, 2) {
        total = total.add(&orbit_action(&x, dim, &limits()).unwrap());
    }
    assert_eq!(total.nnz(), 81);
    assert!(total.entries().all(|(_, v)| *v == BigRational::from_integer(BigInt::from(1))));
}

#[test]
fn diagram_action_is_an_algebra_map() {
    let mut rng = StdRng::seed_from_u64(7);
    let dim = 3;
    for _ in 0..100 {
        let (a, b) = (random_diagram(&mut rng, 2), random_diagram(&mut rng, 2));
        let product = a.compose(&b).unwrap();
        let lhs = diagram_action(&a, dim, &limits()).unwrap().mul(&diagram_action(&b, dim, &limits()).unwrap());
        let rhs = diagram_action(&product.diagram, dim, &limits()).unwrap().scale(&power(dim, product.exp_out));
        assert_eq!(lhs, rhs, "{a} · {b}");
    }
}

#[test]
fn ramified_action_respects_composition() {
    let mut rng = StdRng::seed_from_u64(11);
    let (m, n) = (2, 3);
    for _ in 0..60 {
        let (a, b) = (random_ramified(&mut rng, 2), random_ramified(&mut rng, 2));
        let product = a.compose(&b).unwrap();
        let lhs = ramified_action(&a, m, n, &limits()).unwrap().mul(&ramified_action(&b, m, n, &limits()).unwrap());
        let scale = power(m, product.exp_in) * power(n, product.exp_out);
        let rhs = ramified_action(&product.diagram, m, n, &limits()).unwrap().scale(&scale);
        assert_eq!(lhs, rhs, "{a} · {b}");
    }
}

#[test]
fn diagonal_pair_acts_like_the_plain_diagram() {
    let (m, n) = (2, 2);
    for d in PartitionDiagram::all(2, 2) {
        let lhs = ramified_action(&RamifiedDiagram::diagonal(&d), m, n, &limits()).unwrap();
        assert_eq!(lhs, diagram_action(&d, m * n, &limits()).unwrap(), "{d}");
    }
}

#[test]
fn permutation_diagrams_match_place_permutations() {
    // A permutation diagram permutes tensor positions, so it commutes with
    // the diagonal group action.
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let tau = random_permutation(&mut rng, 3);
        let dm = diagram_action(&PartitionDiagram::from_permutation(&tau), 2, &limits()).unwrap();
        assert_eq!(dm.nnz(), 8);
        let sigma = random_permutation(&mut rng, 2);
        let g = sym_action(&sigma, 3, &limits()).unwrap();
        assert_eq!(dm.transpose().mul(&g), g.mul(&dm.transpose()));
    }
}

#[test]
fn sym_action_is_a_homomorphism() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..30 {
        let (s, t) = (random_permutation(&mut rng, 3), random_permutation(&mut rng, 3));
        let lhs = sym_action(&s.compose(&t), 2, &limits()).unwrap();
        let rhs = sym_action(&s, 2, &limits()).unwrap().mul(&sym_action(&t, 2, &limits()).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn wreath_multiplication_matches_embedding() {
    let mut rng = StdRng::seed_from_u64(13);
    let (m, n) = (3, 3);
    for _ in 0..200 {
        let g = WreathElement::new((0..n).map(|_| random_permutation(&mut rng, m)).collect(), random_permutation(&mut rng, n)).unwrap();
        let h = WreathElement::new((0..n).map(|_| random_permutation(&mut rng, m)).collect(), random_permutation(&mut rng, n)).unwrap();
        assert_eq!(wreath_embed(&g.mul(&h)), wreath_embed(&g).compose(&wreath_embed(&h)));
    }
    assert!(wreath_embed(&WreathElement::identity(m, n)).is_identity());
}

#[test]
fn full_wreath_group_commutes_at_small_size() {
    // Every element, not just generators, on (C^2 ⊗ C^2)^{⊗2}.
    let (m, n, r) = (2, 2, 2);
    let perms = |k: usize| -> Vec<Permutation> {
        if k == 2 {
            vec![Permutation::identity(2), Permutation::transposition(2, 0, 1)]
        } else {
            vec![Permutation::identity(k)]
        }
    };
    let mut elements = Vec::new();
    for pi in perms(n) {
        for s0 in perms(m) {
            for s1 in perms(m) {
                elements.push(WreathElement::new(vec![s0.clone(), s1.clone()], pi.clone()).unwrap());
            }
        }
    }
    assert_eq!(elements.len(), 8);
    for d in RamifiedDiagram::all(r, r).into_iter().step_by(7) {
        let dt = ramified_action(&d, m, n, &limits()).unwrap().transpose();
        for g in &elements {
            let mat = sym_action(&wreath_embed(g), r, &limits()).unwrap();
            assert_eq!(dt.mul(&mat), mat.mul(&dt), "{d}");
        }
    }
}

#[test]
fn group_and_diagram_actions_commute_on_both_sides() {
    // (g·v)·d = g·(v·d): with v a row vector, v·d is v·D and g·v is M·vᵀ.
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..50 {
        let g = sym_action(&random_permutation(&mut rng, 3), 2, &limits()).unwrap();
        let dt = diagram_action(&random_diagram(&mut rng, 2), 3, &limits()).unwrap().transpose();
        assert_eq!(dt.mul(&g), g.mul(&dt));
    }
}
