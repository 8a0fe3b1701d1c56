//! Integer partitions and the decorated variants used by the stable formulas.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the empty partition ∅. Ordering is lexicographic on
/// the parts, so among partitions of one size `(3) > (2,1) > (1,1,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros and rejecting sequences
    /// that are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("parts {parts:?} contain an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn from_slice(parts: &[usize]) -> Result<Self> {
        Self::new(parts.to_vec())
    }

    /// Sorts arbitrary positive parts into a partition (zeros are dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)` (∅ when `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, or 0 for ∅.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// True when all parts are pairwise distinct.
    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let mut out = Vec::with_capacity(self.first());
        for j in 0..self.first() {
            out.push(self.0.iter().take_while(|&&p| p > j).count());
        }
        Partition(out)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The padded partition `self[d] = (d − |self|, self₁, self₂, …)`, or
    /// `None` when the first entry would be smaller than `self₁`.
    pub fn padded(&self, d: usize) -> Option<Partition> {
        PaddedPartition::new(self.clone(), d).to_partition().ok()
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j + conj.0[j] - i - 1);
            }
        }
        hooks
    }

    /// Rows from which a box can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    /// Rows to which a box can be added leaving a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len()).filter(|&i| i == 0 || self.part(i - 1) > self.part(i)).collect()
    }

    /// Removes one box from row `i` (caller guarantees it is removable).
    pub fn remove_box(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[i] -= 1;
        Partition::from_unsorted(parts)
    }

    /// All partitions obtained by adding a horizontal strip of `k` boxes
    /// (no two added boxes in one column).
    pub fn add_horizontal_strip(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        cur.push(0);
        fn rec(base: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Partition::from_unsorted(cur.clone()));
                }
                return;
            }
            let cap = if i == 0 { left } else { (base[i - 1] - base[i]).min(left) };
            for add in (0..=cap).rev() {
                cur[i] = base[i] + add;
                rec(base, i + 1, left - add, cur, out);
            }
            cur[i] = base[i];
        }
        let base = cur.clone();
        rec(&base, 0, k, &mut cur, &mut out);
        out
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn std_tableaux_count(&self) -> BigUint {
        let mut num: BigUint = One::one();
        for k in 2..=self.size() {
            num *= BigUint::from(k);
        }
        let den: BigUint = self.hook_lengths().into_iter().map(BigUint::from).product();
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"[3,2,1]"`, `"3,2,1"`, `"(3,2,1)"`, and `"∅"` / `"[]"` for ∅.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "∅" {
            return Ok(Partition::empty());
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid partition part {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {s:?} has a zero part")));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The padded partition `base[total] = (total − |base|, base₁, …)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaddedPartition {
    pub base: Partition,
    pub total: usize,
}

impl PaddedPartition {
    pub fn new(base: Partition, total: usize) -> Self {
        PaddedPartition { base, total }
    }

    pub fn is_valid(&self) -> bool {
        self.total >= self.base.size() && self.total - self.base.size() >= self.base.first()
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_valid() {
            return Err(Error::Domain(format!(
                "{}[{}] is not a partition: need {} − |{}| ≥ {}",
                self.base,
                self.total,
                self.total,
                self.base,
                self.base.first()
            )));
        }
        let mut parts = vec![self.total - self.base.size()];
        parts.extend_from_slice(self.base.parts());
        Partition::new(parts)
    }
}

/// A partition together with a number of distinguished zero parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroExtendedPartition {
    pub gamma: Partition,
    pub zero_count: usize,
}

impl ZeroExtendedPartition {
    /// Total number of entries, zeros included.
    pub fn len(&self) -> usize {
        self.gamma.len() + self.zero_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries as a weakly decreasing sequence with trailing zeros.
    pub fn entries(&self) -> Vec<usize> {
        let mut v = self.gamma.parts().to_vec();
        v.extend(std::iter::repeat(0).take(self.zero_count));
        v
    }
}

/// A pair `(γ, ε)` with `ε` free of parts equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkedPartition {
    pub gamma: Partition,
    pub epsilon: Partition,
}

impl MarkedPartition {
    pub fn new(gamma: Partition, epsilon: Partition) -> Result<Self> {
        if epsilon.multiplicity(1) > 0 {
            return Err(Error::Domain(format!("ε = {epsilon} has a singleton part")));
        }
        Ok(MarkedPartition { gamma, epsilon })
    }

    pub fn size(&self) -> usize {
        self.gamma.size() + self.epsilon.size()
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.gamma, self.epsilon)
    }
}

/// Partitions of `n` with every part at most `max_part`, in lexicographically
/// descending order.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    partitions_with(n, max_part, usize::MAX, 1)
}

/// Partitions of `n` with parts in `[min_part, max_part]` and at most
/// `max_len` parts, lexicographically descending.
pub fn partitions_with(n: usize, max_part: usize, max_len: usize, min_part: usize) -> Vec<Partition> {
    fn rec(n: usize, max_part: usize, max_len: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        let top = max_part.min(n);
        for k in (min_part.max(1)..=top).rev() {
            cur.push(k);
            rec(n - k, k, max_len - 1, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, min_part, &mut Vec::new(), &mut out);
    out
}

/// Every partition of `n`, lexicographically descending; `[∅]` for `n = 0`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with exactly `len` parts, lexicographically descending.
pub fn partitions_of_length(n: usize, len: usize) -> Vec<Partition> {
    partitions_with(n, n, len, 1).into_iter().filter(|p| p.len() == len).collect()
}

/// Partitions of `q` with no part equal to 1; `[∅]` for `q = 0`.
pub fn partitions_no_singletons(q: usize) -> Vec<Partition> {
    partitions_with(q, q, usize::MAX, 2)
}

/// Number of partitions of `n`, via Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().unwrap_or_default()
}

/// `p(0), …, p(n)` via the pentagonal-number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    use num_bigint::BigInt;
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::default();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_pos = k % 2 == 1;
            let mut term = p[m - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_pos {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter().map(|x| x.to_biguint().expect("partition counts are positive")).collect()
}

/// All `b`-marked partitions of `r`: pairs `(γ, ε)` with `ℓ(γ) = b`, `ε`
/// singleton-free and `|γ| + |ε| = r`. With `cap`, also `γ₁ ≤ cap` and
/// `ε₁ ≤ cap`.
///
/// Ordered by decreasing `|γ|`, then lexicographically descending `γ`, then `ε`.
pub fn marked_partitions(b: usize, r: usize, cap: Option<usize>) -> Vec<MarkedPartition> {
    let cap = cap.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for p in (0..=r).rev() {
        let gammas: Vec<Partition> = if b == 0 {
            if p == 0 { vec![Partition::empty()] } else { Vec::new() }
        } else {
            partitions_with(p, cap, b, 1).into_iter().filter(|g| g.len() == b).collect()
        };
        if gammas.is_empty() {
            continue;
        }
        let epsilons = partitions_with(r - p, cap, usize::MAX, 2);
        for g in &gammas {
            for e in &epsilons {
                out.push(MarkedPartition { gamma: g.clone(), epsilon: e.clone() });
            }
        }
    }
    out
}

/// The `b`-marked partitions of `r` whose `γ` has pairwise distinct parts.
pub fn marked_partitions_distinct(b: usize, r: usize) -> Vec<MarkedPartition> {
    marked_partitions(b, r, None).into_iter().filter(|mp| mp.gamma.has_distinct_parts()).collect()
}
