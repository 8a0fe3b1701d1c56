//! Symmetric-group, wreath-product, partition-diagram and ramified-diagram
//! actions on tensor space, as exact sparse matrices.
//!
//! A basis tensor `e^{i_1} ⊗ … ⊗ e^{i_r}` of `(C^d)^{⊗r}` is encoded as the
//! base-`d` number with `i_1` as its most significant digit (all indices
//! 0-based). For the ramified setting `v^j_i = e^{j·m + i}` with `i < m`,
//! `j < n`.
//!
//! Group elements act on the left: `sym_action(σ)` has a 1 in row `σ·t`,
//! column `t`, so `sym_action(στ) = sym_action(σ)·sym_action(τ)`. Diagrams act
//! on the right: `diagram_action(d)` has rows indexed by the northern values
//! and columns by the southern values, so `v·d₁·d₂` is computed by
//! `D₁·D₂`. The two actions commute exactly when `Dᵀ·M = M·Dᵀ`.

mod matrix;

pub use matrix::{rank_of_rows, SparseExactMatrix};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coefficients::Limits;
use crate::diagram::{PartitionDiagram, RamifiedDiagram};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::setpart::{LineSetPartition, SetPartition};

/// `dim^r`, or a budget error when the square exceeds the entry cap.
fn tensor_dimension(dim: usize, r: usize, limits: &Limits) -> Result<usize> {
    let size = dim.checked_pow(r as u32);
    match size.and_then(|s| s.checked_mul(s)) {
        Some(sq) if sq <= limits.max_entries => Ok(size.expect("checked above")),
        _ => Err(Error::Budget(format!(
            "({dim})^{r} × ({dim})^{r} potential entries exceed the cap of {}",
            limits.max_entries
        ))),
    }
}

/// Digits of `index` in base `dim`, most significant first.
pub fn decode_index(mut index: usize, dim: usize, r: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

pub fn encode_index(digits: &[usize], dim: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * dim + x)
}

/// The diagonal action of `σ ∈ S_d` on `(C^d)^{⊗r}`.
pub fn sym_action(sigma: &Permutation, r: usize, limits: &Limits) -> Result<SparseExactMatrix> {
    let d = sigma.len();
    let size = tensor_dimension(d, r, limits)?;
    let mut m = SparseExactMatrix::zeros(size, size);
    for t in 0..size {
        let image: Vec<usize> = decode_index(t, d, r).iter().map(|&x| sigma.apply(x)).collect();
        m.add_to(encode_index(&image, d), t, BigRational::one());
    }
    Ok(m)
}

/// An element `(σ_1, …, σ_n; π)` of `S_m ≀ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    pub sigmas: Vec<Permutation>,
    pub pi: Permutation,
}

impl WreathElement {
    pub fn new(sigmas: Vec<Permutation>, pi: Permutation) -> Result<Self> {
        let m = sigmas.first().map_or(0, Permutation::len);
        if sigmas.len() != pi.len() || sigmas.iter().any(|s| s.len() != m) {
            return Err(Error::SizeMismatch("wreath element components have inconsistent sizes".into()));
        }
        Ok(WreathElement { sigmas, pi })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        WreathElement { sigmas: vec![Permutation::identity(m); n], pi: Permutation::identity(n) }
    }

    pub fn m(&self) -> usize {
        self.sigmas.first().map_or(0, Permutation::len)
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }

    /// The product `self · other` (apply `other` first), matching composition
    /// of the embedded permutations.
    pub fn mul(&self, other: &WreathElement) -> WreathElement {
        let pi = self.pi.compose(&other.pi);
        let inv = self.pi.inverse();
        let sigmas = (0..self.n()).map(|k| self.sigmas[k].compose(&other.sigmas[inv.apply(k)])).collect();
        WreathElement { sigmas, pi }
    }

    /// Generators: adjacent transpositions inside the first block and
    /// adjacent transpositions of the blocks.
    pub fn generators(m: usize, n: usize) -> Vec<WreathElement> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        for i in 0..m.saturating_sub(1) {
            let mut g = Self::identity(m, n);
            g.sigmas[0] = Permutation::transposition(m, i, i + 1);
            out.push(g);
        }
        for j in 0..n - 1 {
            let mut g = Self::identity(m, n);
            g.pi = Permutation::transposition(n, j, j + 1);
            out.push(g);
        }
        out
    }
}

/// The embedding `S_m ≀ S_n → S_{mn}`: the point `j·m + i` goes to
/// `π(j)·m + σ_{π(j)}(i)`.
pub fn wreath_embed(g: &WreathElement) -> Permutation {
    let (m, n) = (g.m(), g.n());
    let mut images = vec![0; m * n];
    for j in 0..n {
        let target = g.pi.apply(j);
        for i in 0..m {
            images[j * m + i] = target * m + g.sigmas[target].apply(i);
        }
    }
    Permutation::from_images(images).expect("the embedding is a bijection")
}

/// Every assignment of values in `0..dim` to the blocks of `part`, written
/// out as vertex values; `injective` keeps only assignments with distinct
/// values on distinct blocks.
fn block_assignments(part: &SetPartition, dim: usize, injective: bool) -> Vec<Vec<usize>> {
    let k = part.num_blocks();
    let mut out = Vec::new();
    let mut values = vec![0usize; k];
    if k > 0 && dim == 0 {
        return out;
    }
    loop {
        let ok = !injective || {
            let mut seen = values.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        };
        if ok {
            out.push(part.labels().iter().map(|&b| values[b]).collect());
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < dim {
                break;
            }
            values[pos] = 0;
        }
    }
}

fn action_from_assignments(
    north: usize,
    dim: usize,
    size: usize,
    assignments: impl IntoIterator<Item = Vec<usize>>,
) -> SparseExactMatrix {
    let mut m = SparseExactMatrix::zeros(size, size);
    for values in assignments {
        let row = encode_index(&values[..north], dim);
        let col = encode_index(&values[north..], dim);
        m.add_to(row, col, BigRational::one());
    }
    m
}

fn check_square(d: &PartitionDiagram) -> Result<usize> {
    if d.north() != d.south() {
        return Err(Error::Domain(format!("{d} is not an (r,r)-diagram")));
    }
    Ok(d.north())
}

/// The diagram basis element `d_Λ` on `(C^dim)^{⊗r}`: entry 1 exactly when
/// the index tuple is constant on every block.
pub fn diagram_action(d: &PartitionDiagram, dim: usize, limits: &Limits) -> Result<SparseExactMatrix> {
    let r = check_square(d)?;
    let size = tensor_dimension(dim, r, limits)?;
    Ok(action_from_assignments(r, dim, size, block_assignments(d.set_partition(), dim, false)))
}

/// The orbit basis element `x_Λ`: entry 1 exactly when two positions carry
/// equal indices if and only if they share a block.
pub fn orbit_action(d: &PartitionDiagram, dim: usize, limits: &Limits) -> Result<SparseExactMatrix> {
    let r = check_square(d)?;
    let size = tensor_dimension(dim, r, limits)?;
    Ok(action_from_assignments(r, dim, size, block_assignments(d.set_partition(), dim, true)))
}

/// The ramified diagram `(Λ, Λ')` on `(C^m ⊗ C^n)^{⊗r}`: the inner partition
/// constrains the subscripts `i` and the outer one the superscripts `j`.
pub fn ramified_action(d: &RamifiedDiagram, m: usize, n: usize, limits: &Limits) -> Result<SparseExactMatrix> {
    let r = check_square(d.outer())?;
    let dim = m * n;
    let size = tensor_dimension(dim, r, limits)?;
    let subs = block_assignments(d.inner().set_partition(), m, false);
    let sups = block_assignments(d.outer().set_partition(), n, false);
    let combined = sups.iter().flat_map(|j| subs.iter().map(move |i| j.iter().zip(i).map(|(&j, &i)| j * m + i).collect()));
    Ok(action_from_assignments(r, dim, size, combined))
}

/// How the wreath product is placed inside `S_{mn}` for a commutation check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// `v^j_i = e^{j·m+i}`, the placement under which the actions commute.
    Standard,
    /// The same permutations conjugated by `j·m + i ↦ i·n + j`, so the group
    /// permutes subscripts where it should permute superscripts.
    Swapped,
}

/// True when every embedded wreath generator commutes with every ramified
/// generator on `(C^m ⊗ C^n)^{⊗r}`.
pub fn check_commute(m: usize, n: usize, r: usize, limits: &Limits) -> Result<bool> {
    check_commute_with(m, n, r, Embedding::Standard, limits)
}

pub fn check_commute_with(m: usize, n: usize, r: usize, embedding: Embedding, limits: &Limits) -> Result<bool> {
    tensor_dimension(m * n, r, limits)?;
    let swap = Permutation::from_images((0..m * n).map(|e| (e % m) * n + e / m).collect())?;
    let group: Vec<SparseExactMatrix> = WreathElement::generators(m, n)
        .iter()
        .map(|g| {
            let p = wreath_embed(g);
            let p = match embedding {
                Embedding::Standard => p,
                Embedding::Swapped => swap.inverse().compose(&p).compose(&swap),
            };
            sym_action(&p, r, limits)
        })
        .collect::<Result<_>>()?;
    for d in RamifiedDiagram::generators(r) {
        let dt = ramified_action(&d, m, n, limits)?.transpose();
        for g in &group {
            if dt.mul(g) != g.mul(&dt) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rank of the span of the actions of all `(r,r)`-diagrams on
/// `(C^dim)^{⊗r}`.
pub fn faithfulness_rank(dim: usize, r: usize, limits: &Limits) -> Result<usize> {
    let size = tensor_dimension(dim, r, limits)?;
    let rows = PartitionDiagram::all(r, r).into_iter().map(|d| {
        block_assignments(d.set_partition(), dim, false)
            .into_iter()
            .map(|values| {
                let row = encode_index(&values[..r], dim);
                let col = encode_index(&values[r..], dim);
                (row * size + col, BigInt::one())
            })
            .collect::<BTreeMap<usize, BigInt>>()
    });
    Ok(rank_of_rows(rows))
}

/// The set partition of positions recording which indices agree.
pub fn value_type(index: &[usize]) -> LineSetPartition {
    SetPartition::from_labels(index)
}

/// `(R, S)` for a pure tensor `v^{j_1}_{i_1} ⊗ …` given as `(i, j)` pairs: `S`
/// groups positions by superscript and `R` by the whole pair.
pub fn ramified_value_type(pairs: &[(usize, usize)]) -> (LineSetPartition, LineSetPartition) {
    let sups: Vec<usize> = pairs.iter().map(|&(_, j)| j).collect();
    (SetPartition::from_labels(pairs), SetPartition::from_labels(&sups))
}

/// The lexicographically least 1-based subscript sequence whose pairs
/// realise `(R, S)` when superscripts are constant on the blocks of `S`.
pub fn minimal_r_tuple(r_part: &LineSetPartition, s_part: &LineSetPartition) -> Result<Vec<usize>> {
    if !r_part.is_finer_than(s_part) {
        return Err(Error::Domain(format!("{r_part} does not refine {s_part}")));
    }
    let q = r_part.ground_size();
    let mut out = vec![0usize; q];
    for k in 0..q {
        if let Some(prev) = (0..k).find(|&p| r_part.same_block(p, k)) {
            out[k] = out[prev];
            continue;
        }
        let used: Vec<usize> = (0..k).filter(|&p| s_part.same_block(p, k)).map(|p| out[p]).collect();
        out[k] = (1..).find(|v| !used.contains(v)).expect("some subscript is free");
    }
    Ok(out)
}

/// Sums `c · action` over a combination of diagrams.
pub fn combination_action(
    combination: &BTreeMap<PartitionDiagram, BigInt>,
    dim: usize,
    limits: &Limits,
) -> Result<SparseExactMatrix> {
    let mut out: Option<SparseExactMatrix> = None;
    for (d, c) in combination {
        let term = diagram_action(d, dim, limits)?.scale(&BigRational::from_integer(c.clone()));
        out = Some(match out {
            Some(acc) => acc.add(&term),
            None => term,
        });
    }
    out.ok_or_else(|| Error::Domain("empty combination".into()))
}
