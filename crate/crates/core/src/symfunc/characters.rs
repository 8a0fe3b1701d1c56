//! Symmetric-group characters by the Murnaghan–Nakayama rule.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Character values keyed by `(λ, ρ)` as raw part lists.
type CharacterCache = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

thread_local! {
    static CHAR_CACHE: RefCell<CharacterCache> = RefCell::new(HashMap::new());
}

/// `χ^λ(ρ)`, the irreducible character `λ` evaluated at cycle type `ρ`.
///
/// Returns 0 when `|λ| ≠ |ρ|`. Values are memoized per thread.
pub fn character(lambda: &Partition, rho: &Partition) -> BigInt {
    if lambda.size() != rho.size() {
        return BigInt::zero();
    }
    chi(lambda.parts(), rho.parts())
}

fn chi(lambda: &[usize], rho: &[usize]) -> BigInt {
    if rho.is_empty() {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    // Two short-cuts that keep the memo table small.
    if lambda.len() == 1 {
        return BigInt::one();
    }
    if rho.iter().all(|&x| x == 1) {
        let shape = Partition::from_slice(lambda).expect("valid shape");
        return BigInt::from(shape.std_tableaux_count());
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = CHAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let k = rho[0];
    let rest = &rho[1..];
    let mut total = BigInt::zero();
    for (shape, negative) in remove_rim_hooks(lambda, k) {
        let v = chi(&shape, rest);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    CHAR_CACHE.with(|c| c.borrow_mut().insert(key, total.clone()));
    total
}

/// All shapes obtained by removing a rim hook of length `k`, with a flag that
/// is true when the hook has odd leg length (negative sign).
pub fn remove_rim_hooks(lambda: &[usize], k: usize) -> Vec<(Vec<usize>, bool)> {
    let len = lambda.len();
    // Beta-set (first-column hook lengths): strictly decreasing.
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &x) in beta.iter().enumerate() {
        if x < k {
            continue;
        }
        let y = x - k;
        if beta.contains(&y) {
            continue;
        }
        let between = beta.iter().filter(|&&z| z > y && z < x).count();
        let mut nb = beta.clone();
        nb[idx] = y;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut shape: Vec<usize> = nb.iter().enumerate().map(|(i, &z)| z - (len - 1 - i)).collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        out.push((shape, between % 2 == 1));
    }
    out
}

/// `z_ρ = ∏_i i^{m_i} m_i!`, the centralizer order of cycle type `ρ`.
pub fn z_rho(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let parts = rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut m = 0usize;
        while i < parts.len() && parts[i] == v {
            i += 1;
            m += 1;
            z *= BigUint::from(v) * BigUint::from(m);
        }
    }
    z
}
