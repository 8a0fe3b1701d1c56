//! Ramified diagrams: pairs `(Λ, Λ')` of diagrams with the inner partition
//! `Λ` refining the outer partition `Λ'`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{PartitionDiagram, ScaledDiagram};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::setpart::{all_set_partitions, SetPartition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamifiedDiagram {
    inner: PartitionDiagram,
    outer: PartitionDiagram,
}

impl RamifiedDiagram {
    pub fn new(inner: PartitionDiagram, outer: PartitionDiagram) -> Result<Self> {
        if inner.north() != outer.north() || inner.south() != outer.south() {
            return Err(Error::SizeMismatch(format!(
                "inner ({},{}) and outer ({},{}) sizes differ",
                inner.north(),
                inner.south(),
                outer.north(),
                outer.south()
            )));
        }
        if !inner.is_finer_than(&outer) {
            return Err(Error::Domain(format!("inner {inner} does not refine outer {outer}")));
        }
        Ok(RamifiedDiagram { inner, outer })
    }

    /// The diagonal embedding `d ↦ (d, d)`.
    pub fn diagonal(d: &PartitionDiagram) -> Self {
        RamifiedDiagram { inner: d.clone(), outer: d.clone() }
    }

    pub fn identity(r: usize) -> Self {
        Self::diagonal(&PartitionDiagram::identity(r))
    }

    /// `p_i^(2)`: strand `i` (1-based) cut in the inner partition only.
    pub fn p_inner(r: usize, i: usize) -> Self {
        RamifiedDiagram { inner: PartitionDiagram::p(r, i), outer: PartitionDiagram::identity(r) }
    }

    /// `p_{i,j}^(2)`: strands `i` and `j` merged in the outer partition only.
    pub fn p_pair_outer(r: usize, i: usize, j: usize) -> Self {
        RamifiedDiagram { inner: PartitionDiagram::identity(r), outer: PartitionDiagram::p_pair(r, i, j) }
    }

    /// The generators `s_i`, `p_i`, `p_i^(2)`, `p_{i,j}`, `p_{i,j}^(2)` of the
    /// ramified algebra on `r` strands (all pairs `i < j`).
    pub fn generators(r: usize) -> Vec<RamifiedDiagram> {
        let mut out = Vec::new();
        for i in 1..r {
            out.push(Self::diagonal(&PartitionDiagram::s(r, i)));
        }
        for i in 1..=r {
            out.push(Self::diagonal(&PartitionDiagram::p(r, i)));
            out.push(Self::p_inner(r, i));
        }
        for i in 1..=r {
            for j in i + 1..=r {
                out.push(Self::diagonal(&PartitionDiagram::p_pair(r, i, j)));
                out.push(Self::p_pair_outer(r, i, j));
            }
        }
        out
    }

    pub fn inner(&self) -> &PartitionDiagram {
        &self.inner
    }

    pub fn outer(&self) -> &PartitionDiagram {
        &self.outer
    }

    pub fn north(&self) -> usize {
        self.outer.north()
    }

    pub fn south(&self) -> usize {
        self.outer.south()
    }

    /// Composes inner and outer partitions independently; `exp_in` and
    /// `exp_out` count the closed middle components of each.
    pub fn compose(&self, other: &RamifiedDiagram) -> Result<ScaledDiagram<RamifiedDiagram>> {
        let inner = self.inner.compose(&other.inner)?;
        let outer = self.outer.compose(&other.outer)?;
        debug_assert!(inner.diagram.is_finer_than(&outer.diagram));
        Ok(ScaledDiagram {
            diagram: RamifiedDiagram { inner: inner.diagram, outer: outer.diagram },
            exp_in: inner.exp_out,
            exp_out: outer.exp_out,
        })
    }

    pub fn horizontal_concat(&self, other: &RamifiedDiagram) -> RamifiedDiagram {
        RamifiedDiagram {
            inner: self.inner.horizontal_concat(&other.inner),
            outer: self.outer.horizontal_concat(&other.outer),
        }
    }

    /// Every ramified diagram with the given sizes.
    pub fn all(north: usize, south: usize) -> Vec<RamifiedDiagram> {
        let mut out = Vec::new();
        for outer in PartitionDiagram::all(north, south) {
            for inner in refinements(outer.set_partition()) {
                out.push(RamifiedDiagram { inner: outer.with_part(inner), outer: outer.clone() });
            }
        }
        out
    }

    /// Applies a vertex relabelling to both partitions.
    pub(crate) fn relabel(&self, map: &[usize]) -> RamifiedDiagram {
        RamifiedDiagram { inner: self.inner.relabel(map), outer: self.outer.relabel(map) }
    }
}

/// Every set partition refining `p`.
fn refinements(p: &SetPartition) -> Vec<SetPartition> {
    let blocks = p.blocks();
    let mut out = vec![vec![usize::MAX; p.ground_size()]];
    for (b, block) in blocks.iter().enumerate() {
        let mut next = Vec::new();
        for split in all_set_partitions(block.len()) {
            for raw in &out {
                let mut raw = raw.clone();
                for (k, &v) in block.iter().enumerate() {
                    raw[v] = b * p.ground_size() + split.label(k);
                }
                next.push(raw);
            }
        }
        out = next;
    }
    out.iter().map(|raw| SetPartition::from_labels(raw)).collect()
}

/// `inner@outer`.
impl fmt::Display for RamifiedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.inner, self.outer)
    }
}

impl FromStr for RamifiedDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (inner, outer) =
            text.split_once('@').ok_or_else(|| Error::Parse(format!("'{text}' is not of the form inner@outer")))?;
        let inner: PartitionDiagram = inner.parse()?;
        let outer: PartitionDiagram = outer.parse()?;
        RamifiedDiagram::new(inner, outer).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// For each outer-propagating block, the number of inner-propagating blocks
/// inside it, sorted weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PropIndex(Vec<usize>);

impl PropIndex {
    /// Sorts the entries into weakly decreasing order.
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        PropIndex(entries)
    }

    pub fn empty() -> Self {
        PropIndex(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Number of strands used by the idempotent `e_θ`: `Σ max(a_i, 1)`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&a| a.max(1)).sum()
    }

    /// The elements immediately below `self` in `Θ`: subtract 1 from one
    /// positive entry, merge two entries, or drop `(0)` to `∅`.
    pub fn covers_below(&self) -> Vec<PropIndex> {
        let mut out = Vec::new();
        let e = &self.0;
        for i in 0..e.len() {
            if e[i] > 0 && (i == 0 || e[i - 1] != e[i]) {
                let mut v = e.clone();
                v[i] -= 1;
                out.push(PropIndex::new(v));
            }
        }
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let mut v = e.clone();
                let merged = v[i] + v[j];
                v.remove(j);
                v[i] = merged;
                out.push(PropIndex::new(v));
            }
        }
        if e == &[0] {
            out.push(PropIndex::empty());
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for PropIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let items: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

impl FromStr for PropIndex {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "∅" || t == "[]" || t == "()" {
            return Ok(PropIndex::empty());
        }
        let body = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|x| x.strip_suffix(']')))
            .unwrap_or(t);
        let entries = body
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index entry '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("'{text}' is not weakly decreasing")));
        }
        Ok(PropIndex(entries))
    }
}

/// The propagating index of a ramified diagram.
pub fn propagating_index(d: &RamifiedDiagram) -> PropIndex {
    let inner = d.inner();
    let inner_prop: Vec<Vec<usize>> = inner.propagating_blocks();
    let entries = d
        .outer()
        .propagating_blocks()
        .iter()
        .map(|block| inner_prop.iter().filter(|ib| block.contains(&ib[0])).count())
        .collect();
    PropIndex::new(entries)
}

/// Every element of `Θ_r`: weakly decreasing tuples with `Σ max(a_i,1) ≤ r`.
pub fn theta_elements(r: usize) -> Vec<PropIndex> {
    fn rec(budget: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PropIndex>) {
        out.push(PropIndex(cur.clone()));
        for a in (0..=max.min(budget)).rev() {
            if a.max(1) > budget {
                continue;
            }
            cur.push(a);
            rec(budget - a.max(1), a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `Θ_r` with its order, the reflexive-transitive closure of the covering
/// moves.
#[derive(Clone, Debug)]
pub struct ThetaPoset {
    pub r: usize,
    pub elements: Vec<PropIndex>,
    below: Vec<Vec<bool>>,
    position: HashMap<PropIndex, usize>,
}

impl ThetaPoset {
    pub fn new(r: usize) -> Self {
        let elements = theta_elements(r);
        let position: HashMap<PropIndex, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elements.len();
        let covers: Vec<Vec<usize>> =
            elements.iter().map(|e| e.covers_below().iter().map(|c| position[c]).collect()).collect();
        let mut below = vec![vec![false; n]; n];
        for (start, row) in below.iter_mut().enumerate() {
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if row[x] {
                    continue;
                }
                row[x] = true;
                stack.extend(covers[x].iter().copied());
            }
        }
        ThetaPoset { r, elements, below, position }
    }

    pub fn contains(&self, x: &PropIndex) -> bool {
        self.position.contains_key(x)
    }

    /// `x ≤ y`; false when either lies outside `Θ_r`.
    pub fn le(&self, x: &PropIndex, y: &PropIndex) -> bool {
        match (self.position.get(x), self.position.get(y)) {
            (Some(&i), Some(&j)) => self.below[j][i],
            _ => false,
        }
    }

    pub fn lt(&self, x: &PropIndex, y: &PropIndex) -> bool {
        x != y && self.le(x, y)
    }

    /// Pairs `(x, y)` with `y` covering `x`.
    pub fn cover_pairs(&self) -> Vec<(PropIndex, PropIndex)> {
        let mut out = Vec::new();
        for y in &self.elements {
            for x in y.covers_below() {
                out.push((x, y.clone()));
            }
        }
        out
    }
}

/// The quasi-idempotent `e_θ` on `r` strands: the `j`-th outer block holds
/// the next `max(a_j, 1)` nodes of both rows, joined vertically in the inner
/// partition unless `a_j = 0`; remaining nodes are singletons.
pub fn e_theta(theta: &PropIndex, r: usize) -> Result<RamifiedDiagram> {
    if theta.weight() > r {
        return Err(Error::Domain(format!("{theta} needs {} strands but only {r} are available", theta.weight())));
    }
    let mut outer_blocks: Vec<Vec<usize>> = Vec::new();
    let mut inner_blocks: Vec<Vec<usize>> = Vec::new();
    let mut pos = 0;
    for &a in theta.entries() {
        let width = a.max(1);
        let nodes: Vec<usize> = (pos..pos + width).collect();
        outer_blocks.push(nodes.iter().flat_map(|&k| [k, r + k]).collect());
        for &k in &nodes {
            if a > 0 {
                inner_blocks.push(vec![k, r + k]);
            } else {
                inner_blocks.push(vec![k]);
                inner_blocks.push(vec![r + k]);
            }
        }
        pos += width;
    }
    for k in pos..r {
        for v in [k, r + k] {
            outer_blocks.push(vec![v]);
            inner_blocks.push(vec![v]);
        }
    }
    RamifiedDiagram::new(
        PartitionDiagram::from_blocks(r, r, &inner_blocks)?,
        PartitionDiagram::from_blocks(r, r, &outer_blocks)?,
    )
}

/// The image of `(σ_1, …, σ_b; π) ∈ S_a ≀ S_b` as an `(ab, ab)`-ramified
/// diagram: outer block `j` joins northern `[j]` to southern `[π(j)]` and,
/// inside it, northern `(j, i)` joins southern `(π(j), σ_j(i))`.
pub fn wreath_diagram(sigmas: &[Permutation], pi: &Permutation, a: usize, b: usize) -> Result<RamifiedDiagram> {
    if sigmas.len() != b || pi.len() != b || sigmas.iter().any(|s| s.len() != a) {
        return Err(Error::SizeMismatch(format!("wreath element does not lie in S_{a} ≀ S_{b}")));
    }
    let n = a * b;
    let mut outer_blocks = Vec::new();
    let mut inner_blocks = Vec::new();
    for (j, sigma) in sigmas.iter().enumerate() {
        let target = pi.apply(j);
        let mut block: Vec<usize> = (j * a..(j + 1) * a).collect();
        block.extend((target * a..(target + 1) * a).map(|k| n + k));
        outer_blocks.push(block);
        for i in 0..a {
            inner_blocks.push(vec![j * a + i, n + target * a + sigma.apply(i)]);
        }
    }
    RamifiedDiagram::new(
        PartitionDiagram::from_blocks(n, n, &inner_blocks)?,
        PartitionDiagram::from_blocks(n, n, &outer_blocks)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(text: &str) -> RamifiedDiagram {
        text.parse().unwrap()
    }
    fn t(text: &str) -> PropIndex {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_validate() {
        let d = r("{1,1'}|{2}|{2'}@{1,1'}|{2,2'}");
        assert_eq!(d.to_string(), "{1,1'}|{2}|{2'}@{1,1'}|{2,2'}");
        assert!("{1,1'}|{2,2'}@{1,2'}|{2,1'}".parse::<RamifiedDiagram>().is_err());
        assert!("{1,1'}".parse::<RamifiedDiagram>().is_err());
    }

    #[test]
    fn refinement_counts() {
        // Σ_Λ' Π_B Bell(|B|) over (1,1)-partitions: {1,1'} gives 2, {1}|{1'} gives 1.
        assert_eq!(RamifiedDiagram::all(1, 1).len(), 3);
        for d in RamifiedDiagram::all(2, 2) {
            assert!(d.inner().is_finer_than(d.outer()));
        }
    }

    #[test]
    fn theta_sizes_and_order() {
        assert_eq!(theta_elements(2).len(), 7);
        assert_eq!(theta_elements(3).len(), 14);
        let p3 = ThetaPoset::new(3);
        assert!(p3.lt(&t("(2,0)"), &t("(1,1,0)")));
        assert!(p3.lt(&PropIndex::empty(), &t("(0)")));
        assert!(p3.lt(&t("(0)"), &t("(1,1,1)")));
        assert!(!p3.le(&t("(3)"), &t("(1,1,0)")));
        assert!(!p3.le(&t("(1,0,0)"), &t("(2)")));
    }

    #[test]
    fn e_theta_index() {
        for rr in 0..=4 {
            for theta in theta_elements(rr) {
                let e = e_theta(&theta, rr).unwrap();
                assert_eq!(propagating_index(&e), theta);
            }
        }
        assert!(e_theta(&t("(2,1)"), 2).is_err());
    }

    #[test]
    fn wreath_example() {
        let swap = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        let id = Permutation::identity(2);
        let pi = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let w = wreath_diagram(&[swap, id.clone(), id], &pi, 2, 3).unwrap();
        let expected = r("{1,4'}|{2,3'}|{3,5'}|{4,6'}|{5,1'}|{6,2'}@{1,2,3',4'}|{3,4,5',6'}|{5,6,1',2'}");
        assert_eq!(w, expected);
        assert_eq!(propagating_index(&w), t("(2,2,2)"));
    }
}
