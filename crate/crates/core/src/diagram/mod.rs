//! Partition diagrams and ramified partition diagrams.
//!
//! An `(r,s)`-diagram is a set partition of `r` northern vertices
//! `1, …, r` and `s` southern vertices `1', …, s'`. Internally the northern
//! vertices are `0..r` and the southern ones `r..r+s`, so the total order
//! `1 < … < r < 1' < … < s'` is the order of the internal indices and blocks
//! are numbered by increasing minima.
//!
//! Products never substitute the loop parameters: they return the diagram
//! together with the number of closed middle components.

mod depth;
mod ramified;

pub use depth::{
    dq_dimension_check, dq_dimension_check_ramified, is_depth_radical, normalize_v_labels, type_census, type_of, v0_basis, v_elementary,
    v_pair, DiagramType,
};
pub use ramified::{e_theta, propagating_index, theta_elements, wreath_diagram, PropIndex, RamifiedDiagram, ThetaPoset};

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::setpart::{all_set_partitions, mobius_upper_set, SetPartition};

/// A diagram multiplied by `δ_in^exp_in · δ_out^exp_out`. Plain partition
/// diagrams have a single parameter and only use `exp_out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledDiagram<D> {
    pub diagram: D,
    pub exp_in: usize,
    pub exp_out: usize,
}

/// A set partition of `north + south` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    north: usize,
    south: usize,
    part: SetPartition,
}

impl PartitionDiagram {
    pub fn new(north: usize, south: usize, part: SetPartition) -> Result<Self> {
        if part.ground_size() != north + south {
            return Err(Error::SizeMismatch(format!(
                "a ({north},{south})-diagram needs {} vertices, got {}",
                north + south,
                part.ground_size()
            )));
        }
        Ok(PartitionDiagram { north, south, part })
    }

    /// Builds from blocks of internal vertex indices.
    pub fn from_blocks(north: usize, south: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        Self::new(north, south, SetPartition::from_blocks(north + south, blocks)?)
    }

    /// Parses the text form with explicit sizes, so trailing singletons may
    /// be left implicit.
    pub fn parse_sized(text: &str, north: usize, south: usize) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        let mut seen = vec![false; north + south];
        let mut internal: Vec<Vec<usize>> = Vec::new();
        for block in blocks {
            let mut b = Vec::with_capacity(block.len());
            for (v, barred) in block {
                let idx = match barred {
                    false if v <= north => v - 1,
                    true if v <= south => north + v - 1,
                    _ => return Err(Error::Parse(format!("vertex {v}{} outside a ({north},{south})-diagram", if barred { "'" } else { "" }))),
                };
                seen[idx] = true;
                b.push(idx);
            }
            internal.push(b);
        }
        for (v, s) in seen.iter().enumerate() {
            if !s {
                internal.push(vec![v]);
            }
        }
        Self::from_blocks(north, south, &internal).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn identity(r: usize) -> Self {
        Self::from_permutation(&Permutation::identity(r))
    }

    /// The diagram joining northern `i` to southern `σ(i)`.
    pub fn from_permutation(sigma: &Permutation) -> Self {
        let r = sigma.len();
        let blocks: Vec<Vec<usize>> = (0..r).map(|i| vec![i, r + sigma.apply(i)]).collect();
        Self::from_blocks(r, r, &blocks).expect("a permutation gives a valid diagram")
    }

    /// The transposition diagram `s_i` exchanging strands `i` and `i+1` (1-based).
    pub fn s(r: usize, i: usize) -> Self {
        Self::from_permutation(&Permutation::transposition(r, i - 1, i))
    }

    /// `p_i`: strand `i` (1-based) cut into two singletons.
    pub fn p(r: usize, i: usize) -> Self {
        let mut blocks: Vec<Vec<usize>> = (0..r).filter(|&k| k != i - 1).map(|k| vec![k, r + k]).collect();
        blocks.push(vec![i - 1]);
        blocks.push(vec![r + i - 1]);
        Self::from_blocks(r, r, &blocks).expect("valid generator")
    }

    /// `p_{i,j}`: strands `i` and `j` (1-based) merged into one block.
    pub fn p_pair(r: usize, i: usize, j: usize) -> Self {
        let mut blocks: Vec<Vec<usize>> = (0..r).filter(|&k| k != i - 1 && k != j - 1).map(|k| vec![k, r + k]).collect();
        blocks.push(vec![i - 1, j - 1, r + i - 1, r + j - 1]);
        Self::from_blocks(r, r, &blocks).expect("valid generator")
    }

    pub fn north(&self) -> usize {
        self.north
    }

    pub fn south(&self) -> usize {
        self.south
    }

    pub fn set_partition(&self) -> &SetPartition {
        &self.part
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.part.blocks()
    }

    pub fn is_northern(&self, v: usize) -> bool {
        v < self.north
    }

    pub fn block_is_propagating(&self, block: &[usize]) -> bool {
        block.iter().any(|&v| v < self.north) && block.iter().any(|&v| v >= self.north)
    }

    /// Blocks with at least one northern and one southern vertex, in
    /// increasing-minima order.
    pub fn propagating_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks().into_iter().filter(|b| self.block_is_propagating(b)).collect()
    }

    pub fn propagating_count(&self) -> usize {
        self.propagating_blocks().len()
    }

    /// The number of propagating blocks and the permutation `π` read off by
    /// keeping only the minimal northern and southern vertex of each
    /// propagating block: `π(i) = j` when the block with the `i`-th smallest
    /// northern minimum has the `j`-th smallest southern minimum.
    pub fn propagating_data(&self) -> (usize, Permutation) {
        let props = self.propagating_blocks();
        // Blocks come ordered by overall minimum, which is the northern minimum.
        let mut south_min: Vec<(usize, usize)> = props
            .iter()
            .enumerate()
            .map(|(k, b)| (*b.iter().find(|&&v| v >= self.north).expect("propagating"), k))
            .collect();
        south_min.sort_unstable();
        let mut images = vec![0; props.len()];
        for (rank, &(_, k)) in south_min.iter().enumerate() {
            images[k] = rank;
        }
        (props.len(), Permutation::from_images(images).expect("ranks form a permutation"))
    }

    /// Concatenates `self` above `other`, identifying `self`'s southern
    /// vertices with `other`'s northern ones. The exponent counts components
    /// consisting only of middle vertices.
    pub fn compose(&self, other: &PartitionDiagram) -> Result<ScaledDiagram<PartitionDiagram>> {
        if self.south != other.north {
            return Err(Error::SizeMismatch(format!(
                "cannot compose a ({},{})-diagram with a ({},{})-diagram",
                self.north, self.south, other.north, other.south
            )));
        }
        let (top, mid, bot) = (self.north, self.south, other.south);
        // Vertices: top 0..top, middle top..top+mid, bottom top+mid..
        let mut uf = UnionFind::new(top + mid + bot);
        link_blocks(&mut uf, &self.part, |v| v);
        link_blocks(&mut uf, &other.part, |v| top + v);
        let outer: Vec<usize> = (0..top).chain(top + mid..top + mid + bot).collect();
        let mut touches_outer = vec![false; top + mid + bot];
        for &v in &outer {
            touches_outer[uf.find(v)] = true;
        }
        let mut closed = 0;
        let mut counted = vec![false; top + mid + bot];
        for v in top..top + mid {
            let root = uf.find(v);
            if !touches_outer[root] && !counted[root] {
                counted[root] = true;
                closed += 1;
            }
        }
        let roots: Vec<usize> = outer.iter().map(|&v| uf.find(v)).collect();
        let diagram = PartitionDiagram { north: top, south: bot, part: SetPartition::from_labels(&roots) };
        Ok(ScaledDiagram { diagram, exp_in: 0, exp_out: closed })
    }

    /// Places `other` to the right of `self`.
    pub fn horizontal_concat(&self, other: &PartitionDiagram) -> PartitionDiagram {
        let (n1, s1, n2) = (self.north, self.south, other.north);
        let mut raw = vec![0usize; n1 + n2 + s1 + other.south];
        let offset = self.part.num_blocks();
        for (v, slot) in raw.iter_mut().take(n1).enumerate() {
            *slot = self.part.label(v);
        }
        for v in 0..s1 {
            raw[n1 + n2 + v] = self.part.label(n1 + v);
        }
        for v in 0..n2 {
            raw[n1 + v] = offset + other.part.label(v);
        }
        for v in 0..other.south {
            raw[n1 + n2 + s1 + v] = offset + other.part.label(n2 + v);
        }
        PartitionDiagram { north: n1 + n2, south: s1 + other.south, part: SetPartition::from_labels(&raw) }
    }

    /// Replaces the vertex set partition, keeping the sizes.
    pub(crate) fn with_part(&self, part: SetPartition) -> PartitionDiagram {
        debug_assert_eq!(part.ground_size(), self.north + self.south);
        PartitionDiagram { north: self.north, south: self.south, part }
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `map[v]`.
    pub(crate) fn relabel(&self, map: &[usize]) -> PartitionDiagram {
        let mut raw = vec![0usize; map.len()];
        for (v, &w) in map.iter().enumerate() {
            raw[w] = self.part.label(v);
        }
        self.with_part(SetPartition::from_labels(&raw))
    }

    /// Every diagram with the given sizes.
    pub fn all(north: usize, south: usize) -> Vec<PartitionDiagram> {
        all_set_partitions(north + south).into_iter().map(|part| PartitionDiagram { north, south, part }).collect()
    }

    /// Every diagram whose blocks are unions of blocks of `self`.
    pub fn coarsenings(&self) -> Vec<PartitionDiagram> {
        self.part.coarsenings().into_iter().map(|p| self.with_part(p)).collect()
    }

    pub fn is_finer_than(&self, other: &PartitionDiagram) -> bool {
        self.north == other.north && self.south == other.south && self.part.is_finer_than(&other.part)
    }
}

/// The text form: blocks separated by `|`, southern vertices primed, e.g.
/// `{1,2,4,2',5'}|{3}`; the empty diagram prints as `∅`.
impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        if blocks.is_empty() {
            return write!(f, "∅");
        }
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let items: Vec<String> = b
                .iter()
                .map(|&v| if v < self.north { (v + 1).to_string() } else { format!("{}'", v - self.north + 1) })
                .collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// Parses the text form, taking the sizes from the largest vertex of each
/// kind; every vertex must appear in some block.
impl FromStr for PartitionDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        let north = blocks.iter().flatten().filter(|(_, b)| !b).map(|(v, _)| *v).max().unwrap_or(0);
        let south = blocks.iter().flatten().filter(|(_, b)| *b).map(|(v, _)| *v).max().unwrap_or(0);
        let count: usize = blocks.iter().map(Vec::len).sum();
        if count != north + south {
            return Err(Error::Parse(format!("'{text}' does not cover 1..{north} and 1'..{south}'")));
        }
        Self::parse_sized(text, north, south)
    }
}

/// Splits `{1,2'}|{3}` into `[[(1,false),(2,true)],[(3,false)]]`.
fn parse_blocks(text: &str) -> Result<Vec<Vec<(usize, bool)>>> {
    let text = text.trim();
    if text.is_empty() || text == "∅" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for chunk in text.split('|') {
        let chunk = chunk.trim();
        let inner = chunk
            .strip_prefix('{')
            .and_then(|c| c.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("block '{chunk}' must be written as {{…}}")))?;
        let mut block = Vec::new();
        for item in inner.split(',') {
            let item = item.trim();
            let (num, barred) = match item.strip_suffix('\'').or_else(|| item.strip_suffix('̄')) {
                Some(n) => (n, true),
                None => (item, false),
            };
            let v: usize = num.parse().map_err(|_| Error::Parse(format!("bad vertex '{item}'")))?;
            if v == 0 {
                return Err(Error::Parse("vertices are numbered from 1".into()));
            }
            block.push((v, barred));
        }
        out.push(block);
    }
    Ok(out)
}

fn link_blocks(uf: &mut UnionFind, part: &SetPartition, shift: impl Fn(usize) -> usize) {
    for block in part.blocks() {
        for w in block.windows(2) {
            uf.union(shift(w[0]), shift(w[1]));
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A linear combination of diagrams with integer coefficients.
pub type DiagramCombination = BTreeMap<PartitionDiagram, BigInt>;

/// `d_Λ = Σ_{Λ ≤ Λ'} x_{Λ'}`: the diagram basis element in the orbit basis.
pub fn orbit_expand(d: &PartitionDiagram) -> DiagramCombination {
    d.coarsenings().into_iter().map(|c| (c, BigInt::one())).collect()
}

/// `x_Λ = Σ_{Λ ≤ Λ'} μ(Λ, Λ') d_{Λ'}`: an orbit basis element in the
/// diagram basis.
pub fn orbit_to_diagram(x: &PartitionDiagram) -> DiagramCombination {
    let row = MOBIUS_ROWS.with(|cache| {
        cache.borrow_mut().entry(x.set_partition().clone()).or_insert_with(|| mobius_upper_set(x.set_partition())).clone()
    });
    row.into_iter().map(|(p, m)| (x.with_part(p), m)).collect()
}

thread_local! {
    /// Möbius values `μ(Λ, ·)` on the upper set of `Λ`; they depend only on
    /// the set partition, not on how vertices split into north and south.
    static MOBIUS_ROWS: RefCell<HashMap<SetPartition, Vec<(SetPartition, BigInt)>>> = RefCell::new(HashMap::new());
}

/// Rewrites a combination of orbit basis elements in the diagram basis.
pub fn orbit_collapse(combination: &DiagramCombination) -> DiagramCombination {
    let mut out = DiagramCombination::new();
    for (x, c) in combination {
        for (d, m) in orbit_to_diagram(x) {
            *out.entry(d).or_insert_with(BigInt::zero) += c * m;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The outcome of a diagram acting on a cell-module basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellAction {
    /// Number of closed middle components (the power of `δ`).
    pub exponent: usize,
    /// The permutation of the propagating strands that is moved onto the
    /// symmetric-group factor.
    pub tau: Permutation,
    /// The canonical representative with `π = 1`.
    pub diagram: PartitionDiagram,
}

/// Acts with an `(r,r)`-diagram on a `(k,r)`-diagram `v` with `k`
/// propagating blocks and `π_v = 1`.
///
/// Returns `None` when the product has fewer than `k` propagating blocks.
/// Otherwise the product `w` has each northern vertex in its own propagating
/// block; `τ = π_w`, and the returned diagram moves northern vertex `i` to
/// `τ(i)` so that its own permutation is the identity.
pub fn cell_action(v: &PartitionDiagram, d: &PartitionDiagram) -> Result<Option<CellAction>> {
    let k = v.north();
    let (count, pi) = v.propagating_data();
    if count != k || !pi.is_identity() {
        return Err(Error::Domain(format!("{v} is not a cell basis diagram: needs {k} propagating blocks and π = 1")));
    }
    if d.north() != d.south() {
        return Err(Error::Domain(format!("{d} is not an (r,r)-diagram")));
    }
    let product = v.compose(d)?;
    let w = product.diagram;
    let (count, tau) = w.propagating_data();
    if count < k {
        return Ok(None);
    }
    let mut map: Vec<usize> = (0..k + w.south()).collect();
    for (i, slot) in map.iter_mut().enumerate().take(k) {
        *slot = tau.apply(i);
    }
    let diagram = w.relabel(&map);
    Ok(Some(CellAction { exponent: product.exp_out, tau, diagram }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> PartitionDiagram {
        text.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        let text = "{1,2,4,2',5'}|{3}|{5,6,7,4',6',7',8'}|{8,3'}|{1'}";
        let lam = d(text);
        assert_eq!((lam.north(), lam.south()), (8, 8));
        assert_eq!(lam.to_string(), text);
        assert!("{1,2'}".parse::<PartitionDiagram>().is_err());
        assert!("{1,0}".parse::<PartitionDiagram>().is_err());
        assert_eq!(PartitionDiagram::parse_sized("{1,1'}", 2, 2).unwrap(), d("{1,1'}|{2}|{2'}"));
    }

    #[test]
    fn propagating_permutation() {
        let lam = d("{1,2,4,2',5'}|{3}|{5,6,7,4',6',7',8'}|{8,3'}|{1'}");
        let (count, pi) = lam.propagating_data();
        assert_eq!(count, 3);
        assert_eq!(pi.to_string(), "(2,3)");
        let sigma = Permutation::from_cycles(4, &[&[1, 3, 4]]).unwrap();
        assert_eq!(PartitionDiagram::from_permutation(&sigma).propagating_data(), (4, sigma));
        let singles = PartitionDiagram::new(3, 3, SetPartition::finest(6)).unwrap();
        assert_eq!(singles.propagating_count(), 0);
    }

    #[test]
    fn composition_example() {
        // The pictured top factor joins 3' and 4', merging {8,3'} into the large block.
        let lam = d("{1,2,4,2',5'}|{3}|{5,6,7,8,3',4',6',7',8'}|{1'}");
        let gam = d("{1}|{2,1',2'}|{3,4'}|{4,3'}|{5,5',6'}|{6}|{7,8,7',8'}");
        let prod = lam.compose(&gam).unwrap();
        assert_eq!(prod.exp_out, 1);
        assert_eq!(prod.diagram, d("{1,2,4,1',2',5',6'}|{3}|{5,6,7,8,3',4',7',8'}"));
        // Without that arc the block {8,3'} stays separate and picks up 4'.
        let lam1 = d("{1,2,4,2',5'}|{3}|{5,6,7,4',6',7',8'}|{8,3'}|{1'}");
        let prod1 = lam1.compose(&gam).unwrap();
        assert_eq!(prod1.exp_out, 1);
        assert_eq!(prod1.diagram, d("{1,2,4,1',2',5',6'}|{3}|{5,6,7,3',7',8'}|{8,4'}"));
    }

    #[test]
    fn identity_and_p_generators() {
        for r in 1..=3 {
            let id = PartitionDiagram::identity(r);
            for x in PartitionDiagram::all(r, r) {
                assert_eq!(id.compose(&x).unwrap(), ScaledDiagram { diagram: x.clone(), exp_in: 0, exp_out: 0 });
                assert_eq!(x.compose(&id).unwrap().diagram, x);
            }
            for i in 1..=r {
                let p = PartitionDiagram::p(r, i);
                let sq = p.compose(&p).unwrap();
                assert_eq!((sq.diagram, sq.exp_out), (p, 1));
            }
        }
        assert!(PartitionDiagram::identity(2).compose(&PartitionDiagram::identity(3)).is_err());
    }

    #[test]
    fn orbit_small_cases() {
        let d1 = d("{1}|{1'}");
        let expanded = orbit_expand(&d1);
        assert_eq!(expanded.len(), 2);
        assert!(expanded.contains_key(&d("{1,1'}")));
        assert_eq!(orbit_expand(&d("{1,1'}")).len(), 1);
        let back = orbit_collapse(&expanded);
        assert_eq!(back, DiagramCombination::from([(d1, BigInt::one())]));
    }

    #[test]
    fn concat_sizes() {
        let a = d("{1,1'}|{2'}");
        let b = d("{1,2'}|{1'}");
        let c = a.horizontal_concat(&b);
        assert_eq!(c, d("{1,1'}|{2,4'}|{2'}|{3'}"));
    }

    #[test]
    fn cell_action_worked_example() {
        let v = PartitionDiagram::parse_sized("{1,1',3'}|{2,2',5'}|{3,4'}", 3, 5).unwrap();
        let gamma = PartitionDiagram::parse_sized("{1,3,1'}|{2,3',4',5'}|{4,2'}|{5}", 5, 5).unwrap();
        let out = cell_action(&v, &gamma).unwrap().expect("three propagating blocks survive");
        assert_eq!(out.exponent, 0);
        assert_eq!(out.tau.to_string(), "(2,3)");
        assert_eq!(out.diagram, PartitionDiagram::parse_sized("{1,1'}|{2,2'}|{3,3',4',5'}", 3, 5).unwrap());
        let gamma2 = PartitionDiagram::parse_sized("{1,3}|{1'}|{2,3',4',5'}|{4,2'}|{5}", 5, 5).unwrap();
        assert_eq!(cell_action(&v, &gamma2).unwrap(), None);
        let id = cell_action(&v, &PartitionDiagram::identity(5)).unwrap().unwrap();
        assert_eq!((id.exponent, id.tau.is_identity(), id.diagram), (0, true, v.clone()));
        let twisted = PartitionDiagram::parse_sized("{1,2'}|{2,1'}", 2, 2).unwrap();
        assert!(cell_action(&twisted, &PartitionDiagram::identity(2)).is_err());
    }
}
