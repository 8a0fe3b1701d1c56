//! Self-contained verification batteries: a quick golden-example sweep and
//! the full acceptance suite. Each check recomputes everything from scratch
//! and reports a one-line verdict.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use crate::coefficients::{
    cayley_sylvester, hook_stable, minimal_stable_mn, plethysm_coefficient, ramified_branching,
    ramified_branching_terms, stable_plethysm, tightness_check, two_row_stable, Limits, Route, StableQuery,
};
use crate::diagram::{
    dq_dimension_check, orbit_collapse, orbit_expand, theta_elements, type_census, DiagramType, PartitionDiagram,
    RamifiedDiagram,
};
use crate::partition::{partition_counts, partitions_no_singletons, partitions_of, Partition};
use crate::schur_weyl::{check_commute, check_commute_with, faithfulness_rank, minimal_r_tuple, ramified_value_type, Embedding};
use crate::series::stable_two_row_gf;
use crate::symfunc::{character, lr_coefficient, plethysm, SchurPoly};

/// Which battery to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Acceptance,
}

/// The verdict of one check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type CheckFn = fn() -> Result<String, String>;

struct Check {
    title: &'static str,
    budget: Option<Duration>,
    run: CheckFn,
}

pub fn run_suite(suite: Suite) -> Vec<CheckOutcome> {
    run_suite_with(suite, |_| {})
}

/// Runs every check of `suite`, calling `on_done` as each one finishes.
pub fn run_suite_with(suite: Suite, mut on_done: impl FnMut(&CheckOutcome)) -> Vec<CheckOutcome> {
    let checks = match suite {
        Suite::Examples => examples(),
        Suite::Acceptance => acceptance(),
    };
    checks
        .into_iter()
        .enumerate()
        .map(|(i, check)| {
            let start = Instant::now();
            let result = (check.run)();
            let elapsed = start.elapsed();
            let (mut passed, mut detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            if let Some(budget) = check.budget {
                if elapsed > budget {
                    passed = false;
                    detail = format!("{detail}; took {elapsed:.2?}, budget {budget:.0?}");
                }
            }
            let outcome = CheckOutcome { id: i + 1, title: check.title, passed, detail, elapsed };
            on_done(&outcome);
            outcome
        })
        .collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts).expect("literal partitions are valid")
}

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn show(values: &[BigInt]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn lift<T>(r: crate::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rc_column(alpha: &Partition, beta: &Partition, r: usize) -> Result<Vec<BigInt>, String> {
    partitions_of(r).iter().map(|k| lift(ramified_branching(alpha, beta, k))).collect()
}

fn acceptance() -> Vec<Check> {
    let secs = Duration::from_secs;
    vec![
        Check { title: "rc(∅^(2,1), κ) for κ ⊢ 5", budget: Some(secs(1)), run: criterion_empty_alpha_table },
        Check { title: "rc((1)^(2,1), κ) against degree-12 brute force", budget: Some(secs(30)), run: criterion_alpha_one_table },
        Check { title: "s_(2)∘s_(2) = s_(4) + s_(2,2)", budget: None, run: criterion_small_plethysm },
        Check { title: "stable formula at exact bounds, |β| ≤ 2, r ≤ 4", budget: Some(secs(300)), run: criterion_exact_bounds },
        Check { title: "tightness one step below the bounds", budget: None, run: criterion_tightness },
        Check { title: "two-row generating functions", budget: None, run: criterion_generating_functions },
        Check { title: "rc(∅^(3,3,3), (3,3,3,2)) breakdown", budget: None, run: criterion_staircase },
        Check { title: "diagram kernel: product, associativity, orbit basis, embedding", budget: None, run: criterion_diagram_kernel },
        Check { title: "depth-quotient dimensions and type census", budget: None, run: criterion_depth_quotient },
        Check { title: "Schur–Weyl commutation and faithfulness", budget: None, run: criterion_schur_weyl },
        Check { title: "Cayley–Sylvester oracle against brute force", budget: Some(secs(120)), run: criterion_cayley_sylvester },
        Check { title: "hook and column cases", budget: None, run: criterion_hooks },
    ]
}

fn criterion_empty_alpha_table() -> Result<String, String> {
    let got = rc_column(&Partition::empty(), &p(&[2, 1]), 5)?;
    expect_eq("rc column", show(&got), show(&ints(&[2, 5, 4, 3, 2, 0, 0])))?;
    Ok(format!("rc = {}", show(&got)))
}

fn criterion_alpha_one_table() -> Result<String, String> {
    let (alpha, beta) = (p(&[1]), p(&[2, 1]));
    let kappas = partitions_of(5);
    let rc = rc_column(&alpha, &beta, 5)?;
    // The column follows the definition of G^α_{β,γ}, cross terms included;
    // its dimension sum must equal f^α·f^β·|V⁰| = 1·2·100.
    expect_eq("rc column", show(&rc), show(&ints(&[2, 8, 9, 10, 8, 5, 1])))?;
    let dim: BigInt = kappas.iter().zip(&rc).map(|(k, c)| c * BigInt::from(k.std_tableaux_count())).sum();
    expect_eq("Σ rc·f^κ", dim, BigInt::from(200))?;
    let brute: Vec<BigInt> = kappas
        .iter()
        .map(|k| lift(plethysm_coefficient(&beta, &p(&[3, 1]), &k.padded(12).expect("κ fits"))))
        .collect::<Result<_, _>>()?;
    expect_eq("brute-force column", show(&brute), show(&ints(&[1, 3, 4, 4, 3, 2, 0])))?;
    ensure(brute.iter().zip(&rc).all(|(x, y)| x <= y), || "brute force exceeds rc".into())?;
    Ok(format!(
        "rc = {} (Σ rc·f^κ = 200; the column (2,6,7,6,6,3,1) would give 140), brute force = {} ≤ rc",
        show(&rc),
        show(&brute)
    ))
}

fn criterion_small_plethysm() -> Result<String, String> {
    let got = lift(plethysm(&SchurPoly::schur(p(&[2])), &SchurPoly::schur(p(&[2]))))?;
    let want = SchurPoly::from_terms([(p(&[4]), BigInt::one()), (p(&[2, 2]), BigInt::one())]);
    expect_eq("s_(2)∘s_(2)", &got, &want)?;
    Ok(got.to_string())
}

fn criterion_exact_bounds() -> Result<String, String> {
    let mut comparisons = 0;
    for beta in [Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])] {
        for r in 0..=4 {
            let (m, n) = minimal_stable_mn(&beta, r);
            if m == 0 {
                continue;
            }
            let outer = beta.padded(n).expect("n ≥ ℓ(β)");
            for kappa in partitions_of(r) {
                let Some(target) = kappa.padded(m * n) else { continue };
                let brute = lift(plethysm_coefficient(&outer, &Partition::row(m), &target))?;
                let rc = lift(ramified_branching(&Partition::empty(), &beta, &kappa))?;
                expect_eq(&format!("β={beta} κ={kappa} (m,n)=({m},{n})"), brute, rc)?;
                comparisons += 1;
            }
        }
    }
    Ok(format!("{comparisons} comparisons agree"))
}

fn criterion_tightness() -> Result<String, String> {
    let mut cases = 0;
    for r in [4, 5] {
        for b in 0..=2 {
            if r <= b {
                continue;
            }
            let rec = lift(tightness_check(b, r))?;
            for boundary in rec.boundaries() {
                ensure(boundary.holds(), || {
                    format!(
                        "b={b} r={r}: p({},{},{}) = {} but stable value is {}",
                        boundary.nu, boundary.mu, boundary.lambda, boundary.brute, boundary.stable
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} boundary coefficients equal stable − 1"))
}

fn criterion_generating_functions() -> Result<String, String> {
    const LEN: usize = 12;
    let counts: Vec<BigInt> = partition_counts(LEN).into_iter().map(BigInt::from).collect();
    let no_ones: Vec<BigInt> = (0..LEN).map(|r| BigInt::from(partitions_no_singletons(r).len())).collect();
    let shifted: Vec<BigInt> = (0..LEN).map(|r| if r == 0 { BigInt::from(0) } else { counts[r - 1].clone() }).collect();
    let twos: Vec<BigInt> =
        (0..LEN).map(|r| BigInt::from(partitions_of(r).iter().map(|q| q.multiplicity(2)).sum::<usize>())).collect();
    for (b, want) in [(0, no_ones), (1, shifted), (2, twos)] {
        let got: Vec<BigInt> = stable_two_row_gf(b, LEN).into_iter().take(LEN).collect();
        expect_eq(&format!("b={b}"), show(&got), show(&want))?;
        for (r, c) in got.iter().enumerate() {
            expect_eq(&format!("b={b} r={r} against rc"), c.clone(), two_row_stable(b, r))?;
        }
    }
    Ok(format!("b ∈ {{0,1,2}}, {LEN} coefficients each"))
}

fn criterion_staircase() -> Result<String, String> {
    let (beta, kappa) = (p(&[3, 3, 3]), p(&[3, 3, 3, 2]));
    let terms = lift(ramified_branching_terms(&Partition::empty(), &beta, &kappa))?;
    let values: Vec<BigInt> = terms.iter().map(|t| t.value.clone()).collect();
    expect_eq("summands", show(&values), show(&ints(&[1, 2, 1])))?;
    let total = lift(ramified_branching(&Partition::empty(), &beta, &kappa))?;
    expect_eq("rc", total.clone(), BigInt::from(4))?;
    let listed: Vec<String> = terms.iter().map(|t| format!("({},{})→{}", t.gamma, t.epsilon, t.value)).collect();
    Ok(format!("rc = {total} = {}", listed.join(" + ")))
}

fn diagram(text: &str) -> Result<PartitionDiagram, String> {
    lift(text.parse())
}

fn criterion_diagram_kernel() -> Result<String, String> {
    let lam = diagram("{1,2,4,2',5'}|{3}|{5,6,7,8,3',4',6',7',8'}|{1'}")?;
    let gam = diagram("{1}|{2,1',2'}|{3,4'}|{4,3'}|{5,5',6'}|{6}|{7,8,7',8'}")?;
    let prod = lift(lam.compose(&gam))?;
    expect_eq("product", prod.diagram.to_string(), "{1,2,4,1',2',5',6'}|{3}|{5,6,7,8,3',4',7',8'}".into())?;
    expect_eq("product exponent", prod.exp_out, 1)?;

    let mut triples = 0usize;
    for r in 0..=3 {
        let all = PartitionDiagram::all(r, r);
        let failures: Vec<String> = std::thread::scope(|scope| {
            let workers: Vec<_> = all
                .chunks(all.len().div_ceil(8).max(1))
                .map(|chunk| {
                    let all = &all;
                    scope.spawn(move || {
                        for a in chunk {
                            for b in all {
                                let ab = a.compose(b).expect("equal sizes");
                                for c in all {
                                    let left = ab.diagram.compose(c).expect("equal sizes");
                                    let bc = b.compose(c).expect("equal sizes");
                                    let right = a.compose(&bc.diagram).expect("equal sizes");
                                    if left.diagram != right.diagram || ab.exp_out + left.exp_out != bc.exp_out + right.exp_out {
                                        return Some(format!("({a})({b})({c}) is not associative"));
                                    }
                                }
                            }
                        }
                        None
                    })
                })
                .collect();
            workers.into_iter().filter_map(|w| w.join().expect("worker panicked")).collect()
        });
        ensure(failures.is_empty(), || failures[0].clone())?;
        triples += all.len().pow(3);
    }

    let mut round_trips = 0usize;
    for n in 0..=6 {
        for north in 0..=n {
            for x in PartitionDiagram::all(north, n - north) {
                let back = orbit_collapse(&orbit_expand(&x));
                ensure(back == BTreeMap::from([(x.clone(), BigInt::one())]), || format!("orbit round trip fails at {x}"))?;
                round_trips += 1;
            }
        }
    }

    let all3 = PartitionDiagram::all(3, 3);
    let mut pairs = 0usize;
    for a in &all3 {
        for b in &all3 {
            let plain = lift(a.compose(b))?;
            let ram = lift(RamifiedDiagram::diagonal(a).compose(&RamifiedDiagram::diagonal(b)))?;
            ensure(
                ram.diagram == RamifiedDiagram::diagonal(&plain.diagram) && (ram.exp_in, ram.exp_out) == (plain.exp_out, plain.exp_out),
                || format!("embedding not multiplicative on ({a})({b})"),
            )?;
            pairs += 1;
        }
    }
    Ok(format!(
        "product δ·{}; {triples} associativity triples (r ≤ 3); {round_trips} orbit round trips; embedding multiplicative on all {pairs} pairs at r = 3",
        prod.diagram
    ))
}

fn criterion_depth_quotient() -> Result<String, String> {
    let (x, y) = lift(dq_dimension_check(5, &p(&[2, 1])))?;
    expect_eq("dq_dimension_check(5,(2,1))", (x.clone(), y.clone()), (BigInt::from(70), BigInt::from(70)))?;
    let census = lift(type_census(5, 0, 3))?;
    let want = BTreeMap::from([
        (DiagramType { gamma: vec![3, 1, 1], epsilon: Partition::empty() }, 10),
        (DiagramType { gamma: vec![2, 2, 1], epsilon: Partition::empty() }, 15),
        (DiagramType { gamma: vec![1, 1, 1], epsilon: p(&[2]) }, 10),
    ]);
    expect_eq("type census (5,0,3)", &census, &want)?;
    let small = lift(type_census(4, 0, 0))?;
    let count = small.get(&DiagramType { gamma: vec![], epsilon: p(&[2, 2]) }).copied().unwrap_or(0);
    expect_eq("|V⁰₄(∅;∅,(2,2))|", count, 3)?;
    let listed: Vec<String> = census.iter().map(|(t, c)| format!("{t}:{c}")).collect();
    Ok(format!("({x},{y}); census {}; |V⁰₄(∅;∅,(2,2))| = {count}", listed.join(" ")))
}

fn criterion_schur_weyl() -> Result<String, String> {
    let limits = Limits::default();
    for (m, n, r) in [(2, 2, 2), (2, 2, 3)] {
        ensure(lift(check_commute(m, n, r, &limits))?, || format!("no commutation at ({m},{n},{r})"))?;
    }
    let rank = lift(faithfulness_rank(4, 2, &limits))?;
    expect_eq("faithfulness_rank(4,2)", rank, 15)?;
    let control = lift(check_commute_with(2, 2, 2, Embedding::Swapped, &limits))?;
    ensure(!control, || "the swapped embedding unexpectedly commutes".into())?;
    Ok("commutes at (2,2,2) and (2,2,3); rank(4,2) = 15; swapped embedding fails".into())
}

fn criterion_cayley_sylvester() -> Result<String, String> {
    let mut comparisons = 0;
    for b in 0..=2usize {
        for r in 0..=5usize {
            for m in 1..=4usize {
                for n in 1..=r + b + 1 {
                    if n < 2 * b || m * n < 2 * r {
                        continue;
                    }
                    let oracle = lift(cayley_sylvester(b, m, n, r))?;
                    let nu = lift(Partition::new(vec![n - b, b]))?;
                    let lambda = lift(Partition::new(vec![m * n - r, r]))?;
                    let brute = lift(plethysm_coefficient(&nu, &Partition::row(m), &lambda))?;
                    expect_eq(&format!("b={b} m={m} n={n} r={r}"), oracle, brute)?;
                    comparisons += 1;
                }
            }
        }
    }
    Ok(format!("{comparisons} comparisons agree"))
}

fn criterion_hooks() -> Result<String, String> {
    let mut brute_cases = 0;
    for b in 0..=3 {
        for r in b..=4 {
            let beta = Partition::column(b);
            let (m, n) = minimal_stable_mn(&beta, r);
            if m == 0 {
                continue;
            }
            let (Some(outer), Some(target)) = (beta.padded(n), Partition::column(r).padded(m * n)) else { continue };
            let brute = lift(plethysm_coefficient(&outer, &Partition::row(m), &target))?;
            expect_eq(&format!("column b={b} r={r}"), brute, BigInt::from(u8::from(r == b)))?;
            brute_cases += 1;
        }
    }
    let mut formula_cases = 0;
    for b in 0..=3 {
        for r in 0..=6 {
            let rc = lift(ramified_branching(&Partition::empty(), &Partition::column(b), &Partition::row(r)))?;
            expect_eq(&format!("hook b={b} r={r}"), hook_stable(b, r, false), rc)?;
            formula_cases += 1;
        }
    }
    Ok(format!("{brute_cases} brute-force column cases; {formula_cases} hook formula cases"))
}

fn examples() -> Vec<Check> {
    vec![
        Check { title: "Littlewood–Richardson and characters", budget: None, run: example_lr_and_characters },
        Check { title: "plethysm coefficients", budget: None, run: example_plethysm },
        Check { title: "rc and stable queries", budget: None, run: example_rc_and_stable },
        Check { title: "diagram parsing and products", budget: None, run: example_diagrams },
        Check { title: "Θ poset sizes", budget: None, run: example_theta },
        Check { title: "depth-quotient dimensions", budget: None, run: example_depth_quotient },
        Check { title: "value types and minimal tuples", budget: None, run: example_value_types },
        Check { title: "small Schur–Weyl checks", budget: None, run: example_schur_weyl },
    ]
}

fn example_lr_and_characters() -> Result<String, String> {
    expect_eq("c^(3,2,1)_(2,1),(2,1)", lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), BigInt::from(2))?;
    expect_eq("c^(2,1)_(1),(1,1)", lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), BigInt::from(1))?;
    expect_eq("χ^(2,1)(1,1,1)", character(&p(&[2, 1]), &p(&[1, 1, 1])), BigInt::from(2))?;
    expect_eq("χ^(2,1)(3)", character(&p(&[2, 1]), &p(&[3])), BigInt::from(-1))?;
    expect_eq("χ^(3,1)(2,2)", character(&p(&[3, 1]), &p(&[2, 2])), BigInt::from(-1))?;
    Ok("4 LR and character values".into())
}

fn example_plethysm() -> Result<String, String> {
    let s = |x: &[usize]| SchurPoly::schur(p(x));
    let h2h3 = lift(plethysm(&s(&[2]), &s(&[3])))?;
    let want = SchurPoly::from_terms([(p(&[6]), BigInt::one()), (p(&[4, 2]), BigInt::one())]);
    expect_eq("s_(2)∘s_(3)", &h2h3, &want)?;
    let e2h2 = lift(plethysm(&s(&[1, 1]), &s(&[2])))?;
    expect_eq("s_(1,1)∘s_(2)", e2h2, SchurPoly::schur(p(&[3, 1])))?;
    expect_eq("p((3),(2),(4,2))", lift(plethysm_coefficient(&p(&[3]), &p(&[2]), &p(&[4, 2])))?, BigInt::one())?;
    Ok("s_(2)∘s_(3), s_(1,1)∘s_(2), p((3),(2),(4,2))".into())
}

fn example_rc_and_stable() -> Result<String, String> {
    expect_eq("rc(∅^(2,1),(5))", lift(ramified_branching(&Partition::empty(), &p(&[2, 1]), &p(&[5])))?, BigInt::from(2))?;
    let rep = lift(stable_plethysm(&StableQuery { beta: p(&[2, 1]), m: 3, n: 7, kappa: p(&[5]) }))?;
    expect_eq("stable value", rep.value, BigInt::from(2))?;
    expect_eq("route", rep.route, Route::StableFormula)?;
    ensure(rep.bounds_met, || "bounds should be met".into())?;
    Ok("rc = 2; stable (2,1),(3,7),(5) = 2 via stable formula".into())
}

fn example_diagrams() -> Result<String, String> {
    let lam = diagram("{1,2,4,2',5'}|{3}|{5,6,7,4',6',7',8'}|{8,3'}|{1'}")?;
    let (count, pi) = lam.propagating_data();
    expect_eq("propagating data", (count, pi.to_string()), (3, "(2,3)".into()))?;
    let p1 = PartitionDiagram::p(2, 1);
    let sq = lift(p1.compose(&p1))?;
    expect_eq("p₁²", (sq.diagram, sq.exp_out), (p1, 1))?;
    Ok("propagating data and p₁² = δ·p₁".into())
}

fn example_theta() -> Result<String, String> {
    let sizes: Vec<usize> = (0..=3).map(|r| theta_elements(r).len()).collect();
    expect_eq("|Θ_r|, r ≤ 3", sizes.clone(), vec![1, 3, 7, 14])?;
    Ok(format!("|Θ_r| = {sizes:?}"))
}

fn example_depth_quotient() -> Result<String, String> {
    for beta in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
        let (x, y) = lift(dq_dimension_check(beta.size(), &beta))?;
        expect_eq(&format!("dq({beta})"), x, y)?;
    }
    let (x, y) = lift(dq_dimension_check(5, &p(&[2, 1])))?;
    expect_eq("dq(5,(2,1))", (x, y), (BigInt::from(70), BigInt::from(70)))?;
    Ok("dimension sums agree".into())
}

fn example_value_types() -> Result<String, String> {
    let pairs = [(2, 1), (1, 1), (1, 1), (3, 2), (2, 3), (3, 2), (3, 3)];
    let (r, s) = ramified_value_type(&pairs);
    expect_eq("S", s.to_string(), "{1,2,3}|{4,6}|{5,7}".into())?;
    expect_eq("R", r.to_string(), "{1}|{2,3}|{4,6}|{5}|{7}".into())?;
    expect_eq("minimal tuple", lift(minimal_r_tuple(&r, &s))?, vec![1, 2, 2, 1, 1, 1, 2])?;
    Ok("(1,2,2,1,1,1,2)".into())
}

fn example_schur_weyl() -> Result<String, String> {
    let limits = Limits::default();
    ensure(lift(check_commute(2, 2, 2, &limits))?, || "no commutation at (2,2,2)".into())?;
    expect_eq("rank(1,1)", lift(faithfulness_rank(1, 1, &limits))?, 1)?;
    Ok("commutation at (2,2,2); rank(1,1) = 1".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_battery_passes() {
        for outcome in run_suite(Suite::Examples) {
            assert!(outcome.passed, "{}: {}", outcome.title, outcome.detail);
        }
    }
}
