//! Set partitions of a finite ground set `{0, …, n−1}`, the refinement order
//! and its Möbius function.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A set partition stored as a restricted growth string: `labels[v]` is the
/// index of the block containing `v`, blocks numbered by increasing minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
}

/// Set partitions of the line `{1, …, q}` (0-based internally).
pub type LineSetPartition = SetPartition;

impl SetPartition {
    /// Canonicalizes an arbitrary labelling (equal labels = same block).
    pub fn from_labels<T: Eq + std::hash::Hash>(raw: &[T]) -> Self {
        let mut map: HashMap<&T, usize> = HashMap::new();
        let labels = raw
            .iter()
            .map(|x| {
                let next = map.len();
                *map.entry(x).or_insert(next)
            })
            .collect();
        SetPartition { labels }
    }

    /// Builds from explicit blocks, which must partition `{0, …, n−1}`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::Domain(format!("vertex {v} outside ground set of size {n}")));
                }
                if raw[v] != usize::MAX {
                    return Err(Error::Domain(format!("vertex {v} appears in two blocks")));
                }
                raw[v] = b;
            }
        }
        if let Some(v) = raw.iter().position(|&x| x == usize::MAX) {
            return Err(Error::Domain(format!("vertex {v} is not covered by any block")));
        }
        Ok(Self::from_labels(&raw))
    }

    /// The partition into singletons.
    pub fn finest(n: usize) -> Self {
        SetPartition { labels: (0..n).collect() }
    }

    /// The one-block partition (∅ when `n = 0`).
    pub fn coarsest(n: usize) -> Self {
        SetPartition { labels: vec![0; n] }
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m + 1)
    }

    /// Blocks as sorted vertex lists, ordered by increasing minima.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (v, &b) in self.labels.iter().enumerate() {
            blocks[b].push(v);
        }
        blocks
    }

    pub fn same_block(&self, u: usize, v: usize) -> bool {
        self.labels[u] == self.labels[v]
    }

    /// True when every block of `self` lies inside a block of `other`
    /// (`self ≤ other`, i.e. `other` is coarser).
    pub fn is_finer_than(&self, other: &SetPartition) -> bool {
        if self.ground_size() != other.ground_size() {
            return false;
        }
        let mut image = vec![usize::MAX; self.num_blocks()];
        for (v, &b) in self.labels.iter().enumerate() {
            let o = other.labels[v];
            if image[b] == usize::MAX {
                image[b] = o;
            } else if image[b] != o {
                return false;
            }
        }
        true
    }

    /// Every set partition coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        all_set_partitions(self.num_blocks())
            .into_iter()
            .map(|merge| {
                let raw: Vec<usize> = self.labels.iter().map(|&b| merge.labels[b]).collect();
                SetPartition::from_labels(&raw)
            })
            .collect()
    }

    /// Restriction to a subset of the ground set (order of `vertices` kept).
    pub fn restrict(&self, vertices: &[usize]) -> SetPartition {
        let raw: Vec<usize> = vertices.iter().map(|&v| self.labels[v]).collect();
        SetPartition::from_labels(&raw)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let inner: Vec<String> = b.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

/// True when `a ≤ b` in the refinement order (`b` coarser).
pub fn is_coarser(a: &SetPartition, b: &SetPartition) -> bool {
    a.is_finer_than(b)
}

/// All set partitions of an `n`-element set, in restricted-growth-string order.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == n {
            out.push(SetPartition { labels: cur.clone() });
            return;
        }
        for b in 0..=max {
            cur.push(b);
            rec(i + 1, n, if b == max { max + 1 } else { max }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every set partition of `{1, …, q}`.
pub fn line_set_partitions(q: usize) -> Vec<LineSetPartition> {
    all_set_partitions(q)
}

/// Bell number `B(n)`.
pub fn bell(n: usize) -> BigUint {
    // Bell triangle.
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Möbius function `μ(a, b)` of the refinement order, computed by recursive
/// inversion over the interval `[a, b]`.
pub fn mobius(a: &SetPartition, b: &SetPartition) -> Result<BigInt> {
    if !a.is_finer_than(b) {
        return Err(Error::Domain(format!("mobius({a}, {b}): pair is not comparable as a ≤ b")));
    }
    // The interval is the set of coarsenings of `a` lying below `b`.
    let mut interval: Vec<SetPartition> = a.coarsenings().into_iter().filter(|z| z.is_finer_than(b)).collect();
    // Finer elements (more blocks) first, so every predecessor is ready.
    interval.sort_by(|x, y| y.num_blocks().cmp(&x.num_blocks()).then(x.cmp(y)));
    let mut mu: Vec<BigInt> = Vec::with_capacity(interval.len());
    for (i, z) in interval.iter().enumerate() {
        if z == a {
            mu.push(BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for j in 0..i {
            if interval[j].is_finer_than(z) {
                acc -= &mu[j];
            }
        }
        mu.push(acc);
    }
    let pos = interval.iter().position(|z| z == b).expect("b lies in its own interval");
    Ok(mu[pos].clone())
}

/// `μ(a, z)` for every coarsening `z` of `a`, by one pass of the same
/// recursion over the whole upper set.
pub fn mobius_upper_set(a: &SetPartition) -> Vec<(SetPartition, BigInt)> {
    let mut upper = a.coarsenings();
    upper.sort_by(|x, y| y.num_blocks().cmp(&x.num_blocks()).then(x.cmp(y)));
    let mut mu: Vec<BigInt> = Vec::with_capacity(upper.len());
    for (i, z) in upper.iter().enumerate() {
        if z == a {
            mu.push(BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for j in 0..i {
            if upper[j].is_finer_than(z) {
                acc -= &mu[j];
            }
        }
        mu.push(acc);
    }
    upper.into_iter().zip(mu).collect()
}

/// Closed product form `∏_B (−1)^{k_B−1} (k_B−1)!` over blocks `B` of `b`,
/// where `k_B` counts the blocks of `a` inside `B`.
pub fn mobius_closed_form(a: &SetPartition, b: &SetPartition) -> Result<BigInt> {
    if !a.is_finer_than(b) {
        return Err(Error::Domain("pair is not comparable".into()));
    }
    let mut counts = vec![std::collections::BTreeSet::new(); b.num_blocks()];
    for v in 0..a.ground_size() {
        counts[b.label(v)].insert(a.label(v));
    }
    let mut out = BigInt::one();
    for set in counts {
        let k = set.len();
        for i in 1..k {
            out *= BigInt::from(i);
        }
        if k % 2 == 0 {
            out = -out;
        }
    }
    Ok(out)
}
