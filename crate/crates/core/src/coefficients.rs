//! Plethysm coefficients, ramified branching coefficients, the stable
//! formula and its closed-form and tableau-model cross-checks.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::partition::{
    marked_partitions, marked_partitions_distinct, partitions_no_singletons, partitions_of, partitions_with,
    PaddedPartition, Partition,
};
use crate::symfunc::{g_sym, h_eps, plethysm_powersum, product_coefficient, PowerSumPoly, SchurPoly};
use crate::tableaux::{cayley_tableaux_count, ssyt_weight_sets};

/// Default ceiling on `|ν|·|μ|` for brute-force plethysm.
pub const DEFAULT_MAX_DEGREE: usize = 60;
/// Default cap on stored sparse-matrix entries.
pub const DEFAULT_MAX_ENTRIES: usize = 1_000_000;

/// Size ceilings applied by the brute-force routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_entries: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: DEFAULT_MAX_DEGREE, max_entries: DEFAULT_MAX_ENTRIES }
    }
}

/// How a reported coefficient was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    BruteForce,
    StableFormula,
    ClosedForm,
    TableauxOracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::BruteForce => "brute_force",
            Route::StableFormula => "stable_formula",
            Route::ClosedForm => "closed_form",
            Route::TableauxOracle => "tableaux_oracle",
        })
    }
}

/// A coefficient together with the route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub value: BigInt,
    pub route: Route,
    pub bounds_met: bool,
}

/// A query `p(β[n], (m), κ[mn])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableQuery {
    pub beta: Partition,
    pub m: usize,
    pub n: usize,
    pub kappa: Partition,
}

impl StableQuery {
    /// The outer, inner and target partitions `(β[n], (m), κ[mn])`.
    pub fn padded(&self) -> Result<(Partition, Partition, Partition)> {
        if self.m == 0 || self.n == 0 {
            return domain("m and n must be positive");
        }
        let outer = PaddedPartition::new(self.beta.clone(), self.n).to_partition()?;
        let target = PaddedPartition::new(self.kappa.clone(), self.m * self.n).to_partition()?;
        Ok((outer, Partition::row(self.m), target))
    }

    /// `m ≥ r − |β| + [β ≠ ∅]` and `n ≥ r + β₁`, with `r = |κ|`.
    pub fn bounds_met(&self) -> bool {
        stable_bounds_met(&self.beta, self.m, self.n, self.kappa.size())
    }
}

/// `m ≥ r − |β| + [β ≠ ∅]` and `n ≥ r + β₁`.
pub fn stable_bounds_met(beta: &Partition, m: usize, n: usize, r: usize) -> bool {
    let nonempty = usize::from(!beta.is_empty());
    m + beta.size() >= r + nonempty && n >= r + beta.first()
}

/// The smallest `(m, n)` meeting the stable bounds for `β` and `r = |κ|`.
pub fn minimal_stable_mn(beta: &Partition, r: usize) -> (usize, usize) {
    let nonempty = usize::from(!beta.is_empty());
    ((r + nonempty).saturating_sub(beta.size()), r + beta.first())
}

thread_local! {
    static POWERSUM_CACHE: RefCell<HashMap<(Partition, Partition), PowerSumPoly>> = RefCell::new(HashMap::new());
}

/// `p(ν, μ, λ) = ⟨s_ν ∘ s_μ, s_λ⟩` with the default degree ceiling.
pub fn plethysm_coefficient(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<BigInt> {
    plethysm_coefficient_with(nu, mu, lambda, &Limits::default())
}

/// `p(ν, μ, λ)`, refusing `|ν|·|μ|` above `limits.max_degree`.
pub fn plethysm_coefficient_with(nu: &Partition, mu: &Partition, lambda: &Partition, limits: &Limits) -> Result<BigInt> {
    let degree = nu.size() * mu.size();
    if lambda.size() != degree {
        return Ok(BigInt::zero());
    }
    if nu.is_empty() {
        return Ok(BigInt::from(u8::from(lambda.is_empty())));
    }
    if mu.is_empty() {
        return domain("plethysm coefficient: inner partition μ must be nonempty");
    }
    if degree > limits.max_degree {
        return Err(Error::Budget(format!(
            "|ν|·|μ| = {degree} exceeds the brute-force degree ceiling {}",
            limits.max_degree
        )));
    }
    if mu.size() == 1 {
        return Ok(BigInt::from(u8::from(nu == lambda)));
    }
    let key = (nu.clone(), mu.clone());
    let cached = POWERSUM_CACHE.with(|c| c.borrow().get(&key).cloned());
    let expansion = match cached {
        Some(e) => e,
        None => {
            let e = plethysm_powersum(&SchurPoly::schur(nu.clone()), &SchurPoly::schur(mu.clone()))?;
            POWERSUM_CACHE.with(|c| c.borrow_mut().insert(key, e.clone()));
            e
        }
    };
    expansion.schur_coefficient(lambda)
}

/// One summand `⟨G^α_{β,γ} H_ε, s_κ⟩` of the ramified branching coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RcTerm {
    pub gamma: Partition,
    pub epsilon: Partition,
    #[serde(serialize_with = "crate::coefficients::ser_bigint")]
    pub value: BigInt,
}

pub(crate) fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The nonzero summands of `rc(α^β, κ)`, indexed by `(γ, ε)`.
///
/// The sum runs over `p + q = |κ| − |α||β|`, `γ ⊢ p` (with `ℓ(γ) = |β|` when
/// `α = ∅`, `ℓ(γ) ≤ |β|` otherwise) and singleton-free `ε ⊢ q`.
pub fn ramified_branching_terms(alpha: &Partition, beta: &Partition, kappa: &Partition) -> Result<Vec<RcTerm>> {
    let (a, b, r) = (alpha.size(), beta.size(), kappa.size());
    if r < a * b {
        return domain(format!("ramified branching needs |κ| = {r} ≥ |α|·|β| = {}", a * b));
    }
    let total = r - a * b;
    let mut out = Vec::new();
    for p in (0..=total).rev() {
        let q = total - p;
        let gammas: Vec<Partition> = if alpha.is_empty() {
            partitions_with(p, p, b, 1).into_iter().filter(|g| g.len() == b).collect()
        } else {
            partitions_with(p, p, b, 1)
        };
        let epsilons = partitions_no_singletons(q);
        if epsilons.is_empty() {
            continue;
        }
        for gamma in gammas {
            let g = g_sym(alpha, beta, &gamma);
            if g.is_zero() {
                continue;
            }
            for epsilon in &epsilons {
                let h = h_eps(epsilon);
                let value = product_coefficient(&g, &h, kappa);
                if !value.is_zero() {
                    out.push(RcTerm { gamma: gamma.clone(), epsilon: epsilon.clone(), value });
                }
            }
        }
    }
    Ok(out)
}

/// `rc(α^β, κ)`, the ramified branching coefficient at `r = |κ|`.
pub fn ramified_branching(alpha: &Partition, beta: &Partition, kappa: &Partition) -> Result<BigInt> {
    Ok(ramified_branching_terms(alpha, beta, kappa)?.into_iter().map(|t| t.value).sum())
}

/// `p(β[n], (m), κ[mn])`: the stable formula when the bounds hold, brute
/// force otherwise.
pub fn stable_plethysm(q: &StableQuery) -> Result<CoefficientReport> {
    stable_plethysm_with(q, &Limits::default())
}

pub fn stable_plethysm_with(q: &StableQuery, limits: &Limits) -> Result<CoefficientReport> {
    let (outer, inner, target) = q.padded()?;
    if q.bounds_met() {
        let value = ramified_branching(&Partition::empty(), &q.beta, &q.kappa)?;
        Ok(CoefficientReport { value, route: Route::StableFormula, bounds_met: true })
    } else {
        let value = plethysm_coefficient_with(&outer, &inner, &target, limits)?;
        Ok(CoefficientReport { value, route: Route::BruteForce, bounds_met: false })
    }
}

/// `|MP_b(r)|`, the stable value of `p((n−b,b),(m),(mn−r,r))`.
pub fn two_row_stable(b: usize, r: usize) -> BigInt {
    BigInt::from(marked_partitions(b, r, None).len())
}

/// Stable value for a hook `β = (1^b)` with `κ = (r)` (`column = false`:
/// marked partitions with distinct `γ` parts) or for `β = (b)` with
/// `κ = (1^r)` (`column = true`: `[r = b]`).
pub fn hook_stable(b: usize, r: usize, column: bool) -> BigInt {
    if column {
        BigInt::from(u8::from(r == b))
    } else {
        BigInt::from(marked_partitions_distinct(b, r).len())
    }
}

/// `Σ_{p=|β|}^{r} |S_β(p)| · |P_{>1}(r−p)|`, the stable value for `κ = (r)`.
pub fn one_row_kappa_stable(beta: &Partition, r: usize) -> BigInt {
    (beta.size()..=r)
        .map(|p| BigInt::from(ssyt_weight_sets(beta, p)) * BigInt::from(partitions_no_singletons(r - p).len()))
        .sum()
}

/// Stable value for `|κ| ≤ |β| + 1`: 0 below `|β|`, `[κ = β]` at `|β|`, and at
/// `|β|+1` the number of ways to remove one box of `β` and then add a
/// horizontal two-box strip to reach `κ`.
pub fn small_r_stable(beta: &Partition, kappa: &Partition) -> Result<BigInt> {
    let (b, r) = (beta.size(), kappa.size());
    if r < b {
        return Ok(BigInt::zero());
    }
    if r == b {
        return Ok(BigInt::from(u8::from(kappa == beta)));
    }
    if r > b + 1 {
        return domain(format!("small_r_stable needs |κ| ≤ |β| + 1, got |κ| = {r}, |β| = {b}"));
    }
    let mut count = BigInt::zero();
    for row in beta.removable_rows() {
        let smaller = beta.remove_box(row);
        if smaller.add_horizontal_strip(2).contains(kappa) {
            count += 1;
        }
    }
    Ok(count)
}

/// `|T(m,n,b,r)| − |T(m,n,b,r−1)|`, which equals `p((n−b,b),(m),(mn−r,r))`.
pub fn cayley_sylvester(b: usize, m: usize, n: usize, r: usize) -> Result<BigInt> {
    if n < 2 * b {
        return domain(format!("cayley_sylvester needs n − b ≥ b (n = {n}, b = {b})"));
    }
    if m * n < 2 * r {
        return domain(format!("cayley_sylvester needs mn − r ≥ r (m = {m}, n = {n}, r = {r})"));
    }
    let here = BigInt::from(cayley_tableaux_count(m, n, b, r)?);
    let below = if r == 0 { BigInt::zero() } else { BigInt::from(cayley_tableaux_count(m, n, b, r - 1)?) };
    Ok(here - below)
}

/// A boundary instance of the stable bounds: a brute-force plethysm
/// coefficient and the stable value it falls one short of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub nu: Partition,
    pub mu: Partition,
    pub lambda: Partition,
    pub brute: BigInt,
    pub stable: BigInt,
}

impl Boundary {
    pub fn holds(&self) -> bool {
        self.brute.clone() + BigInt::one() == self.stable
    }
}

/// The boundary plethysm coefficients just outside the stable bounds for
/// `β = (b)`, `κ = (r)`; each should be one less than the stable value.
///
/// * `m_below`: `m` one below its bound with `n = r + b`, i.e.
///   `p((r,b), (r−b), κ[(r−b)(r+b)])` for `b ≥ 1` and `p((r), (r−1), κ[r²−r])`
///   for `b = 0`.
/// * `n_below`: `n = r + b − 1` one below its bound with
///   `m = r − b + [b ≠ 0]`, i.e. `p((r−1,b), (m), κ[m(r+b−1)])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessRecord {
    pub b: usize,
    pub r: usize,
    pub m_below: Boundary,
    pub n_below: Boundary,
}

impl TightnessRecord {
    pub fn boundaries(&self) -> [&Boundary; 2] {
        [&self.m_below, &self.n_below]
    }

    pub fn all_hold(&self) -> bool {
        self.boundaries().iter().all(|x| x.holds())
    }
}

fn boundary(nu: Partition, m: usize, r: usize, stable: &BigInt, limits: &Limits) -> Result<Boundary> {
    let mu = Partition::row(m);
    let lambda = PaddedPartition::new(Partition::row(r), nu.size() * m).to_partition()?;
    let brute = plethysm_coefficient_with(&nu, &mu, &lambda, limits)?;
    Ok(Boundary { nu, mu, lambda, brute, stable: stable.clone() })
}

/// Computes the boundary coefficients for `(b, r)` by brute force.
pub fn tightness_check(b: usize, r: usize) -> Result<TightnessRecord> {
    tightness_check_with(b, r, &Limits::default())
}

pub fn tightness_check_with(b: usize, r: usize, limits: &Limits) -> Result<TightnessRecord> {
    if r <= b {
        return domain(format!("tightness_check needs r > b (r = {r}, b = {b})"));
    }
    let stable = ramified_branching(&Partition::empty(), &Partition::row(b), &Partition::row(r))?;
    let outer = if b >= 1 { Partition::new(vec![r, b])? } else { Partition::row(r) };
    let m = r - b + usize::from(b != 0);
    let m_below = boundary(outer, m - 1, r, &stable, limits)?;
    let n_below = boundary(Partition::new(vec![r - 1, b])?, m, r, &stable, limits)?;
    Ok(TightnessRecord { b, r, m_below, n_below })
}

/// Every `κ ⊢ r` paired with its stable value `rc(∅^β, κ)`.
pub fn stable_column(beta: &Partition, r: usize) -> Result<Vec<(Partition, BigInt)>> {
    partitions_of(r)
        .into_iter()
        .map(|kappa| ramified_branching(&Partition::empty(), beta, &kappa).map(|v| (kappa, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::from_slice(x).unwrap()
    }
    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_plethysm_coefficients() {
        let two = p(&[2]);
        for lambda in partitions_of(4) {
            let expected = u8::from(lambda == p(&[4]) || lambda == p(&[2, 2]));
            assert_eq!(plethysm_coefficient(&two, &two, &lambda).unwrap(), BigInt::from(expected));
        }
        assert_eq!(plethysm_coefficient(&p(&[1, 1]), &p(&[2]), &p(&[3, 1])).unwrap(), BigInt::one());
        assert_eq!(plethysm_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2, 1])).unwrap(), BigInt::one());
        assert_eq!(plethysm_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[3])).unwrap(), BigInt::zero());
        let tight = Limits { max_degree: 5, ..Limits::default() };
        assert!(matches!(
            plethysm_coefficient_with(&p(&[3]), &p(&[2]), &p(&[6]), &tight),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn example_one_row_stable_column() {
        let values: Vec<BigInt> = stable_column(&p(&[2, 1]), 5).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(values, ints(&[2, 5, 4, 3, 2, 0, 0]));
    }

    #[test]
    fn empty_beta_counts_singleton_free_partitions() {
        for r in 0..=8 {
            let rc = ramified_branching(&Partition::empty(), &Partition::empty(), &Partition::row(r)).unwrap();
            assert_eq!(rc, BigInt::from(partitions_no_singletons(r).len()));
        }
    }

    #[test]
    fn domain_errors() {
        assert!(ramified_branching(&p(&[1]), &p(&[2, 1]), &p(&[2])).is_err());
        assert!(small_r_stable(&p(&[1]), &p(&[3])).is_err());
        assert!(cayley_sylvester(3, 2, 4, 1).is_err());
        assert!(tightness_check(2, 2).is_err());
        let bad = StableQuery { beta: p(&[2, 1]), m: 1, n: 3, kappa: p(&[5]) };
        assert!(stable_plethysm(&bad).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(two_row_stable(0, 4), BigInt::from(2));
        assert_eq!(two_row_stable(2, 4), BigInt::from(3));
        assert_eq!(two_row_stable(5, 5), BigInt::one());
        assert_eq!(hook_stable(2, 4, false), BigInt::one());
        assert_eq!(hook_stable(3, 3, true), BigInt::one());
        assert_eq!(hook_stable(2, 5, true), BigInt::zero());
        assert_eq!(one_row_kappa_stable(&p(&[2, 1]), 5), BigInt::from(2));
        assert_eq!(small_r_stable(&p(&[3, 2, 1]), &p(&[4, 2, 1])).unwrap(), BigInt::from(3));
        assert_eq!(small_r_stable(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::one());
        assert_eq!(small_r_stable(&p(&[2, 1]), &p(&[2])).unwrap(), BigInt::zero());
    }

    #[test]
    fn cayley_small() {
        for n in 2..=5 {
            assert_eq!(cayley_sylvester(0, 2, n, 2).unwrap(), BigInt::one());
        }
    }
}
