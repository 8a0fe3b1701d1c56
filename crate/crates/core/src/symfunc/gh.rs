//! The symmetric functions `H_ε` and `G^α_{β,γ}` indexing the stable formula.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{generalized_lr, plethysm, schur_product, SchurPoly};
use crate::partition::{partitions_of, Partition};

thread_local! {
    /// `s_ν ∘ (s_α s_(i))`, keyed by `(ν, α, i)`.
    static PLETHYSM_CACHE: RefCell<HashMap<(Partition, Partition, usize), SchurPoly>> = RefCell::new(HashMap::new());
}

/// `s_ν ∘ (s_α · s_(i))` with `s_(0) = 1`; memoized per thread.
fn schur_on_product(nu: &Partition, alpha: &Partition, i: usize) -> SchurPoly {
    if nu.is_empty() {
        return SchurPoly::one();
    }
    let key = (nu.clone(), alpha.clone(), i);
    if let Some(v) = PLETHYSM_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let inner = schur_product(&SchurPoly::schur(alpha.clone()), &SchurPoly::schur(Partition::row(i)));
    let v = plethysm(&SchurPoly::schur(nu.clone()), &inner).expect("homogeneous operands of positive degree");
    PLETHYSM_CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
    v
}

/// `H_ε = ∏_j s_(e_j) ∘ s_(j)`, where `e_j` is the multiplicity of `j` in `ε`.
pub fn h_eps(epsilon: &Partition) -> SchurPoly {
    let mut out = SchurPoly::one();
    let mut distinct: Vec<usize> = epsilon.parts().to_vec();
    distinct.dedup();
    for j in distinct {
        let e = epsilon.multiplicity(j);
        let factor = schur_on_product(&Partition::row(e), &Partition::empty(), j);
        out = schur_product(&out, &factor);
    }
    out
}

/// `G^α_{β,γ}`.
///
/// With `c_i` the multiplicity of `i` in `γ`, this is the sum over
/// `βⁱ ⊢ c_i` of `c^β_{β^p,…,β^1(,β^0)} ∏_i s_{βⁱ} ∘ (s_α s_(i))`. When `α = ∅`
/// it requires `ℓ(γ) = |β|` and `i` ranges over `1..p`; when `α ≠ ∅` it
/// requires `ℓ(γ) ≤ |β|`, sets `c_0 = |β| − ℓ(γ)` and treats `s_(0)` as 1.
/// Returns 0 when the side condition fails.
pub fn g_sym(alpha: &Partition, beta: &Partition, gamma: &Partition) -> SchurPoly {
    let b = beta.size();
    let counts: Vec<(usize, usize)> = if alpha.is_empty() {
        if gamma.len() != b {
            return SchurPoly::zero();
        }
        multiplicities(gamma)
    } else {
        if gamma.len() > b {
            return SchurPoly::zero();
        }
        let mut c = multiplicities(gamma);
        c.push((0, b - gamma.len()));
        c
    };
    // Candidate βⁱ ⊢ c_i contained in β, one list per distinct part i.
    let candidates: Vec<Vec<Partition>> =
        counts.iter().map(|&(_, c)| partitions_of(c).into_iter().filter(|p| beta.contains(p)).collect()).collect();
    let mut out = SchurPoly::zero();
    let mut choice = vec![0usize; counts.len()];
    loop {
        let seq: Vec<Partition> = choice.iter().zip(&candidates).map(|(&k, list)| list[k].clone()).collect();
        let coeff = generalized_lr(beta, &seq);
        if !coeff.is_zero() {
            let mut term = SchurPoly::one();
            for ((i, _), part) in counts.iter().zip(&seq) {
                term = schur_product(&term, &schur_on_product(part, alpha, *i));
            }
            out = out.add(&term.scale(&coeff));
        }
        if !advance(&mut choice, &candidates) {
            break;
        }
    }
    out
}

/// `(i, c_i)` for each distinct part `i` of `γ`, largest part first.
fn multiplicities(gamma: &Partition) -> Vec<(usize, usize)> {
    let mut distinct: Vec<usize> = gamma.parts().to_vec();
    distinct.dedup();
    distinct.into_iter().map(|i| (i, gamma.multiplicity(i))).collect()
}

/// Odometer step over the cartesian product; false when exhausted.
fn advance(choice: &mut [usize], lists: &[Vec<Partition>]) -> bool {
    if lists.iter().any(Vec::is_empty) {
        return false;
    }
    for k in (0..choice.len()).rev() {
        choice[k] += 1;
        if choice[k] < lists[k].len() {
            return true;
        }
        choice[k] = 0;
    }
    false
}

/// `⟨f · g, s_κ⟩` without expanding the product.
pub(crate) fn product_coefficient(f: &SchurPoly, g: &SchurPoly, kappa: &Partition) -> BigInt {
    let mut acc = BigInt::zero();
    for (mu, a) in f.terms() {
        if !kappa.contains(mu) {
            continue;
        }
        for (nu, b) in g.terms() {
            if mu.size() + nu.size() != kappa.size() {
                continue;
            }
            let c = super::lr_coefficient(kappa, mu, nu);
            if !c.is_zero() {
                acc += a * b * c;
            }
        }
    }
    acc
}
