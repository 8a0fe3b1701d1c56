//! Plethysm through the power-sum basis, where `p_k ∘ p_l = p_{kl}`.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{character, z_rho, PowerSumPoly, SchurPoly};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Converts to power sums: `s_λ = Σ_ρ χ^λ(ρ)/z_ρ · p_ρ`.
pub fn schur_to_powersum(f: &SchurPoly) -> PowerSumPoly {
    let mut out = PowerSumPoly::zero();
    for (lambda, c) in f.terms() {
        for rho in partitions_of(lambda.size()) {
            let chi = character(lambda, &rho);
            if chi.is_zero() {
                continue;
            }
            let coeff = BigRational::new(chi * c, z_rho(&rho).into());
            out.add_term(rho, coeff);
        }
    }
    out
}

/// Converts back to the Schur basis; errors if a coefficient is not integral.
pub fn powersum_to_schur(g: &PowerSumPoly) -> Result<SchurPoly> {
    let mut degrees: Vec<usize> = g.terms().map(|(r, _)| r.size()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = SchurPoly::zero();
    for d in degrees {
        for lambda in partitions_of(d) {
            let c = g.schur_coefficient(&lambda)?;
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

/// `f ∘ g` in the power-sum basis, for homogeneous `f` and `g` with
/// `deg g ≥ 1`.
pub fn plethysm_powersum(f: &SchurPoly, g: &SchurPoly) -> Result<PowerSumPoly> {
    if f.is_zero() || g.is_zero() {
        return Ok(PowerSumPoly::zero());
    }
    let df = f.degree().ok_or_else(|| Error::Domain("plethysm: outer operand is not homogeneous".into()))?;
    let dg = g.degree().ok_or_else(|| Error::Domain("plethysm: inner operand is not homogeneous".into()))?;
    if dg == 0 {
        return Err(Error::Domain("plethysm: inner operand must have degree ≥ 1".into()));
    }
    let outer = schur_to_powersum(f);
    let inner = schur_to_powersum(g);
    let mut stretched: HashMap<usize, PowerSumPoly> = HashMap::new();
    let mut products: HashMap<Vec<usize>, PowerSumPoly> = HashMap::new();
    products.insert(Vec::new(), PowerSumPoly::one());
    let mut out = PowerSumPoly::zero();
    for (rho, a) in outer.terms() {
        let prod = product_for(rho.parts(), &inner, &mut stretched, &mut products);
        for (sigma, b) in prod.terms() {
            out.add_term(sigma.clone(), a * b);
        }
    }
    debug_assert!(out.terms().all(|(r, _)| r.size() == df * dg));
    Ok(out)
}

/// `p_ρ ∘ g = ∏_i p_{ρ_i} ∘ g`, memoized over prefixes of `ρ`.
fn product_for(
    rho: &[usize],
    inner: &PowerSumPoly,
    stretched: &mut HashMap<usize, PowerSumPoly>,
    products: &mut HashMap<Vec<usize>, PowerSumPoly>,
) -> PowerSumPoly {
    if let Some(p) = products.get(rho) {
        return p.clone();
    }
    let (last, prefix) = rho.split_last().expect("empty product is pre-seeded");
    let head = product_for(prefix, inner, stretched, products);
    let factor = stretched.entry(*last).or_insert_with(|| inner.stretch(*last)).clone();
    let p = head.mul(&factor);
    products.insert(rho.to_vec(), p.clone());
    p
}

/// `f ∘ g` in the Schur basis.
pub fn plethysm(f: &SchurPoly, g: &SchurPoly) -> Result<SchurPoly> {
    // s_(1) is the plethystic identity on either side.
    let unit = SchurPoly::schur(Partition::row(1));
    if g == &unit && (f.is_homogeneous() || f.is_zero()) {
        return Ok(f.clone());
    }
    if f == &unit && g.is_homogeneous() && g.degree() != Some(0) {
        return Ok(g.clone());
    }
    powersum_to_schur(&plethysm_powersum(f, g)?)
}
