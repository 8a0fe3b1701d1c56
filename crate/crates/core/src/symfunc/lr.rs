//! Littlewood–Richardson coefficients by lattice-word tableau enumeration.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

thread_local! {
    static LR_CACHE: RefCell<HashMap<(Partition, Partition, Partition), BigInt>> = RefCell::new(HashMap::new());
}

/// All LR fillings of `shape/μ` with content `ν`, grouped by outer shape.
///
/// Labels `1, 2, …` are added one value at a time, each as a horizontal strip
/// at the ends of rows; the reverse reading word is kept a lattice word by
/// requiring that, for every row `i`, the number of `k`s in rows `≤ i` does
/// not exceed the number of `(k−1)`s in rows `< i`. When `bound` is given,
/// only shapes contained in it are explored.
pub fn lr_expand(mu: &Partition, nu: &Partition, bound: Option<&Partition>) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    let start: Vec<usize> = mu.parts().to_vec();
    let prev: Vec<usize> = Vec::new();
    add_label(&start, &prev, nu.parts(), 0, bound, &mut out);
    out
}

fn add_label(
    shape: &[usize],
    prev_counts: &[usize],
    nu: &[usize],
    k: usize,
    bound: Option<&Partition>,
    out: &mut BTreeMap<Partition, BigInt>,
) {
    if k == nu.len() {
        let p = Partition::new(shape.to_vec()).expect("LR growth keeps partitions");
        *out.entry(p).or_insert_with(BigInt::zero) += 1;
        return;
    }
    let mut base = shape.to_vec();
    base.push(0);
    let mut adds = vec![0usize; base.len()];
    strip(&base, prev_counts, k, nu[k], 0, 0, 0, &mut adds, bound, &mut |adds| {
        let new_shape: Vec<usize> = base.iter().zip(adds).map(|(b, a)| b + a).filter(|&x| x > 0).collect();
        add_label(&new_shape, adds, nu, k + 1, bound, out);
    });
}

#[allow(clippy::too_many_arguments)]
fn strip(
    base: &[usize],
    prev_counts: &[usize],
    k: usize,
    left: usize,
    row: usize,
    placed_so_far: usize,
    prev_above: usize,
    adds: &mut Vec<usize>,
    bound: Option<&Partition>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if row == base.len() {
        if left == 0 {
            emit(adds);
        }
        return;
    }
    let mut cap = left;
    if row > 0 {
        cap = cap.min(base[row - 1] - base[row]);
    }
    if let Some(b) = bound {
        let limit = b.part(row);
        if base[row] > limit {
            return;
        }
        cap = cap.min(limit - base[row]);
    }
    if k > 0 {
        // Lattice condition for the prefix ending with this row's k's.
        if placed_so_far > prev_above {
            return;
        }
        cap = cap.min(prev_above - placed_so_far);
    }
    let prev_here = prev_counts.get(row).copied().unwrap_or(0);
    for a in (0..=cap).rev() {
        adds[row] = a;
        strip(base, prev_counts, k, left - a, row + 1, placed_so_far + a, prev_above + prev_here, adds, bound, emit);
    }
    adds[row] = 0;
}

/// `c^λ_{μν}`: the number of LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return BigInt::zero();
    }
    if mu.is_empty() || nu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = LR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v = lr_expand(mu, nu, Some(lambda)).remove(lambda).unwrap_or_else(BigInt::zero);
    LR_CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
    v
}

/// `c^β_{β¹,…,β^k}`: the multiplicity of `s_β` in `s_{β¹}⋯s_{β^k}`.
pub fn generalized_lr(beta: &Partition, seq: &[Partition]) -> BigInt {
    if seq.iter().map(Partition::size).sum::<usize>() != beta.size() {
        return BigInt::zero();
    }
    if seq.iter().any(|p| !beta.contains(p)) {
        return BigInt::zero();
    }
    let mut current: BTreeMap<Partition, BigInt> = BTreeMap::new();
    current.insert(Partition::empty(), BigInt::one());
    for part in seq {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (shape, c) in &current {
            for (grown, m) in lr_expand(shape, part, Some(beta)) {
                *next.entry(grown).or_insert_with(BigInt::zero) += c * m;
            }
        }
        current = next;
    }
    current.remove(beta).unwrap_or_else(BigInt::zero)
}
