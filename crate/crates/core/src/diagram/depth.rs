//! The depth radical and depth quotient of the ramified standard modules
//! `V_r(a^b)`, the types `(γ, ε)` of their diagrams, and the elementary
//! diagrams `v_{γ,ε}`.
//!
//! A module diagram of index `(a^b)` is an `(ab, r)`-ramified diagram
//! (`(b, r)` when `a = 0`) whose outer partition has `b` propagating blocks,
//! each containing `a` inner-propagating blocks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::{propagating_index, PartitionDiagram, PropIndex, RamifiedDiagram};
use crate::coefficients::ramified_branching;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::setpart::all_set_partitions;

/// The type `(γ, ε)` of a module diagram: `γ_j` counts the southern vertices
/// of the `j`-th outer-propagating block that are not inner-propagating
/// (zeros kept, sorted decreasing), and `ε` lists the sizes of the
/// non-propagating outer blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramType {
    pub gamma: Vec<usize>,
    pub epsilon: Partition,
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gamma.iter().map(usize::to_string).collect();
        let eps: Vec<String> = self.epsilon.parts().iter().map(usize::to_string).collect();
        write!(f, "(({}),({}))", g.join(","), eps.join(","))
    }
}

fn northern_count(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        a * b
    }
}

fn check_module_diagram(d: &RamifiedDiagram, a: usize, b: usize) -> Result<()> {
    let index = propagating_index(d);
    if d.north() != northern_count(a, b) || index != PropIndex::new(vec![a; b]) {
        return Err(Error::Domain(format!(
            "{d} has index {index} on {} northern vertices, expected ({a}^{b}) on {}",
            d.north(),
            northern_count(a, b)
        )));
    }
    Ok(())
}

/// True when some inner block holds two southern vertices, or some outer
/// block is a southern singleton.
pub fn is_depth_radical(d: &RamifiedDiagram, a: usize, b: usize) -> Result<bool> {
    check_module_diagram(d, a, b)?;
    let north = d.north();
    let inner_pair = d.inner().blocks().iter().any(|blk| blk.iter().filter(|&&v| v >= north).count() >= 2);
    let outer_single = d.outer().blocks().iter().any(|blk| blk.len() == 1 && blk[0] >= north);
    Ok(inner_pair || outer_single)
}

/// Relabels the northern vertices so that outer-propagating blocks appear in
/// order of their southern minima and, inside each, the inner-propagating
/// blocks appear in order of their southern minima.
pub fn normalize_v_labels(d: &RamifiedDiagram, a: usize, b: usize) -> Result<RamifiedDiagram> {
    check_module_diagram(d, a, b)?;
    let north = d.north();
    let south_min = |blk: &[usize]| *blk.iter().find(|&&v| v >= north).expect("propagating block");
    let mut outer = d.outer().propagating_blocks();
    outer.sort_by_key(|blk| south_min(blk));
    let inner = d.inner().propagating_blocks();
    let mut map: Vec<usize> = (0..north + d.south()).collect();
    for (j, oblk) in outer.iter().enumerate() {
        if a == 0 {
            let v = *oblk.iter().find(|&&v| v < north).expect("one northern vertex per block");
            map[v] = j;
            continue;
        }
        let mut pieces: Vec<&Vec<usize>> = inner.iter().filter(|ib| oblk.contains(&ib[0])).collect();
        pieces.sort_by_key(|ib| south_min(ib));
        for (i, ib) in pieces.iter().enumerate() {
            map[ib[0]] = j * a + i;
        }
    }
    Ok(d.relabel(&map))
}

/// The type of a module diagram of index `(a^b)`.
pub fn type_of(d: &RamifiedDiagram, a: usize, b: usize) -> Result<DiagramType> {
    check_module_diagram(d, a, b)?;
    let north = d.north();
    let inner_prop: Vec<Vec<usize>> = d.inner().propagating_blocks();
    let paired = |v: usize| inner_prop.iter().any(|ib| ib.contains(&v));
    let mut gamma = Vec::new();
    let mut epsilon = Vec::new();
    for blk in d.outer().blocks() {
        let south: Vec<usize> = blk.iter().copied().filter(|&v| v >= north).collect();
        if blk.iter().any(|&v| v < north) {
            if !south.is_empty() {
                gamma.push(south.iter().filter(|&&v| !paired(v)).count());
            }
        } else {
            epsilon.push(south.len());
        }
    }
    gamma.sort_unstable_by(|x, y| y.cmp(x));
    Ok(DiagramType { gamma, epsilon: Partition::from_unsorted(epsilon) })
}

/// `v_{x,y}`: a single outer block; for `Some(x)` with `(x, y) ≠ (0, 0)` it
/// is a `(max(1,x), x+y)`-diagram whose first `x` strands are inner
/// propagating, and for `None` it is the `(0, y)`-diagram of one southern
/// block of inner singletons.
pub fn v_pair(x: Option<usize>, y: usize) -> Result<RamifiedDiagram> {
    let (north, south, pairs) = match x {
        None => (0, y, 0),
        Some(0) if y == 0 => return Err(Error::Domain("v_{0,0} is not defined".into())),
        Some(x) => (x.max(1), x + y, x),
    };
    if north + south == 0 {
        return Err(Error::Domain("v_{∅,0} is not defined".into()));
    }
    let mut inner_blocks: Vec<Vec<usize>> = (0..pairs).map(|k| vec![k, north + k]).collect();
    inner_blocks.extend((pairs..north).map(|k| vec![k]));
    inner_blocks.extend((pairs..south).map(|k| vec![north + k]));
    RamifiedDiagram::new(
        PartitionDiagram::from_blocks(north, south, &inner_blocks)?,
        PartitionDiagram::from_blocks(north, south, &[(0..north + south).collect()])?,
    )
}

/// `v_{γ,ε} = v_{a,γ_1} ⊛ … ⊛ v_{a,γ_b} ⊛ v_{∅,ε_1} ⊛ …`.
pub fn v_elementary(a: usize, gamma: &[usize], epsilon: &Partition) -> Result<RamifiedDiagram> {
    if a == 0 && gamma.contains(&0) {
        return Err(Error::Domain("with a = 0 every γ_j must be positive".into()));
    }
    if epsilon.multiplicity(1) > 0 {
        return Err(Error::Domain(format!("ε = {epsilon} has a part equal to 1")));
    }
    let mut pieces = Vec::new();
    for &g in gamma {
        pieces.push(v_pair(Some(a), g)?);
    }
    for &e in epsilon.parts() {
        pieces.push(v_pair(None, e)?);
    }
    let empty = RamifiedDiagram::new(PartitionDiagram::identity(0), PartitionDiagram::identity(0))?;
    Ok(pieces.iter().fold(empty, |acc, p| acc.horizontal_concat(p)))
}

/// A basis of the depth quotient of `V_r(a^b)`: module diagrams with no
/// inner southern pairs and no outer southern singletons, with outer blocks
/// ordered by southern minima and inner pairs ordered inside each block.
pub fn v0_basis(r: usize, a: usize, b: usize) -> Result<Vec<RamifiedDiagram>> {
    let north = northern_count(a, b);
    if north > r {
        return Err(Error::Domain(format!("index ({a}^{b}) needs {north} ≤ r = {r}")));
    }
    let min_prop = a.max(1);
    let mut out = Vec::new();
    for south_part in all_set_partitions(r) {
        let blocks = south_part.blocks();
        for chosen in combinations(blocks.len(), b) {
            if chosen.iter().any(|&c| blocks[c].len() < min_prop) {
                continue;
            }
            let rest_ok =
                (0..blocks.len()).filter(|c| !chosen.contains(c)).all(|c| blocks[c].len() >= 2);
            if !rest_ok {
                continue;
            }
            let pair_choices: Vec<Vec<Vec<usize>>> =
                chosen.iter().map(|&c| combinations(blocks[c].len(), a)).collect();
            let mut pick = vec![0usize; b];
            loop {
                out.push(build_v0(r, a, north, &blocks, &chosen, &pair_choices, &pick)?);
                if !advance(&mut pick, &pair_choices) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn build_v0(
    r: usize,
    a: usize,
    north: usize,
    blocks: &[Vec<usize>],
    chosen: &[usize],
    pair_choices: &[Vec<Vec<usize>>],
    pick: &[usize],
) -> Result<RamifiedDiagram> {
    let mut outer_blocks: Vec<Vec<usize>> = Vec::new();
    let mut inner_blocks: Vec<Vec<usize>> = Vec::new();
    for (j, &c) in chosen.iter().enumerate() {
        let south: Vec<usize> = blocks[c].iter().map(|&v| north + v).collect();
        let northern: Vec<usize> = if a == 0 { vec![j] } else { (j * a..(j + 1) * a).collect() };
        let paired: Vec<usize> = pair_choices[j][pick[j]].iter().map(|&k| south[k]).collect();
        for (i, &s) in paired.iter().enumerate() {
            inner_blocks.push(vec![northern[i], s]);
        }
        if a == 0 {
            inner_blocks.push(vec![northern[0]]);
        }
        inner_blocks.extend(south.iter().filter(|s| !paired.contains(s)).map(|&s| vec![s]));
        outer_blocks.push(northern.into_iter().chain(south).collect());
    }
    for (c, blk) in blocks.iter().enumerate() {
        if !chosen.contains(&c) {
            outer_blocks.push(blk.iter().map(|&v| north + v).collect());
            inner_blocks.extend(blk.iter().map(|&v| vec![north + v]));
        }
    }
    RamifiedDiagram::new(
        PartitionDiagram::from_blocks(north, r, &inner_blocks)?,
        PartitionDiagram::from_blocks(north, r, &outer_blocks)?,
    )
}

/// Increasing `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn advance<T>(pick: &mut [usize], lists: &[Vec<T>]) -> bool {
    for k in (0..pick.len()).rev() {
        pick[k] += 1;
        if pick[k] < lists[k].len() {
            return true;
        }
        pick[k] = 0;
    }
    false
}

/// Number of depth-quotient basis diagrams of each type.
pub fn type_census(r: usize, a: usize, b: usize) -> Result<BTreeMap<DiagramType, usize>> {
    let mut out = BTreeMap::new();
    for d in v0_basis(r, a, b)? {
        *out.entry(type_of(&d, a, b)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// `(f^β · |V⁰_r(∅^β)|, Σ_{κ ⊢ r} rc(∅^β, κ) f^κ)`: the depth quotient's
/// dimension computed from diagrams and from the branching coefficients.
pub fn dq_dimension_check(r: usize, beta: &Partition) -> Result<(BigInt, BigInt)> {
    dq_dimension_check_ramified(r, &Partition::empty(), beta)
}

/// The same comparison for `α ≠ ∅`, where `S_a ≀ S_b` acts freely on the
/// basis: `(f^α)^b f^β |V⁰_r(a^b)|` against `Σ_κ rc(α^β, κ) f^κ`.
pub fn dq_dimension_check_ramified(r: usize, alpha: &Partition, beta: &Partition) -> Result<(BigInt, BigInt)> {
    let (a, b) = (alpha.size(), beta.size());
    let count = BigInt::from(v0_basis(r, a, b)?.len());
    let f_alpha = BigInt::from(alpha.std_tableaux_count()).pow(b as u32);
    let diagrammatic = f_alpha * BigInt::from(beta.std_tableaux_count()) * count;
    let mut formula = BigInt::from(0);
    for kappa in partitions_of(r) {
        formula += ramified_branching(alpha, beta, &kappa)? * BigInt::from(kappa.std_tableaux_count());
    }
    Ok((diagrammatic, formula))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::from_slice(x).unwrap()
    }

    #[test]
    fn census_and_counts() {
        let census = type_census(5, 0, 3).unwrap();
        let expected = BTreeMap::from([
            (DiagramType { gamma: vec![3, 1, 1], epsilon: Partition::empty() }, 10),
            (DiagramType { gamma: vec![2, 2, 1], epsilon: Partition::empty() }, 15),
            (DiagramType { gamma: vec![1, 1, 1], epsilon: p(&[2]) }, 10),
        ]);
        assert_eq!(census, expected);
        assert_eq!(type_census(4, 0, 0).unwrap()[&DiagramType { gamma: vec![], epsilon: p(&[2, 2]) }], 3);
        assert!(v0_basis(2, 1, 3).is_err());
    }

    #[test]
    fn elementary_types() {
        for (a, gamma, eps) in [(0, vec![2, 1], p(&[3])), (2, vec![2, 0, 1], p(&[2, 2])), (1, vec![0], Partition::empty())] {
            let b = gamma.len();
            let v = v_elementary(a, &gamma, &eps).unwrap();
            let ty = type_of(&v, a, b).unwrap();
            let mut sorted = gamma.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            assert_eq!(ty, DiagramType { gamma: sorted, epsilon: eps.clone() });
            assert!(!is_depth_radical(&v, a, b).unwrap());
            assert_eq!(normalize_v_labels(&v, a, b).unwrap(), v);
        }
        assert!(v_elementary(0, &[0], &Partition::empty()).is_err());
        assert!(v_elementary(1, &[1], &p(&[1])).is_err());
    }

    #[test]
    fn dq_small_cases() {
        let (x, y) = dq_dimension_check(5, &p(&[2, 1])).unwrap();
        assert_eq!((x.clone(), y), (BigInt::from(70), BigInt::from(70)));
        let (x, y) = dq_dimension_check(2, &Partition::empty()).unwrap();
        assert_eq!((x, y), (BigInt::from(1), BigInt::from(1)));
        for beta in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let (x, y) = dq_dimension_check(beta.size(), &beta).unwrap();
            assert_eq!(x, y);
            assert_eq!(x, BigInt::from(beta.std_tableaux_count()));
        }
    }
}
