//! Sparse matrices over the rationals and exact rank.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A sparse matrix with exact rational entries; zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseExactMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.entries.iter()
    }

    /// Adds `value` to entry `(i, j)`, dropping the entry if it becomes zero.
    pub fn add_to(&mut self, i: usize, j: usize, value: BigRational) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) outside a {}×{} matrix", self.rows, self.cols);
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn transpose(&self) -> Self {
        SparseExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        SparseExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "adding matrices of different shape");
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_to(i, j, v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "multiplying incompatible matrices");
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigRational)>> = BTreeMap::new();
        for (&(k, j), v) in &other.entries {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_to(i, j, a * b);
                }
            }
        }
        out
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut rows: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
        for (&(i, j), v) in &self.entries {
            rows.entry(i).or_default().insert(j, v.clone());
        }
        rank_of_rows(rows.into_values().map(|r| integer_row(&r)))
    }

    /// Coordinate-list text, one `row col value` line per stored entry.
    pub fn to_coordinate_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.entries.len());
        for (&(i, j), v) in &self.entries {
            let _ = writeln!(out, "{i} {j} {v}");
        }
        out
    }
}

/// Clears denominators of a rational row.
fn integer_row(row: &BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigInt> {
    let lcm = row.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|(&j, v)| (j, (v * BigRational::from_integer(lcm.clone())).to_integer())).collect()
}

/// Rank of a family of sparse integer vectors by fraction-free elimination.
///
/// Rows are processed in order and reduced against the echelon rows found
/// so far, always eliminating the leading column; each reduced row is divided
/// by the gcd of its entries, so intermediate values stay small and the
/// computation is deterministic.
pub fn rank_of_rows(rows: impl IntoIterator<Item = BTreeMap<usize, BigInt>>) -> usize {
    let mut echelon: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, _)) = row.iter().next() {
            let Some(pivot) = echelon.get(&lead) else {
                primitive(&mut row);
                echelon.insert(lead, row);
                break;
            };
            let a = pivot[&lead].clone();
            let b = row[&lead].clone();
            let mut next: BTreeMap<usize, BigInt> = row.iter().map(|(&j, v)| (j, v * &a)).collect();
            for (&j, v) in pivot {
                let slot = next.entry(j).or_insert_with(BigInt::zero);
                *slot -= v * &b;
            }
            next.retain(|_, v| !v.is_zero());
            primitive(&mut next);
            row = next;
        }
    }
    echelon.len()
}

fn primitive(row: &mut BTreeMap<usize, BigInt>) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    if row.values().next().is_some_and(|v| v.is_negative()) {
        for v in row.values_mut() {
            *v = -v.clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn dense(rows: &[&[i64]]) -> SparseExactMatrix {
        let mut m = SparseExactMatrix::zeros(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.add_to(i, j, q(v));
            }
        }
        m
    }

    #[test]
    fn ranks() {
        assert_eq!(dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        assert_eq!(dense(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).rank(), 3);
        assert_eq!(SparseExactMatrix::zeros(3, 3).rank(), 0);
        let mut half = SparseExactMatrix::zeros(2, 2);
        half.add_to(0, 0, BigRational::new(BigInt::from(1), BigInt::from(2)));
        half.add_to(1, 0, BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(half.rank(), 1);
    }

    #[test]
    fn products_and_zeros() {
        let a = dense(&[&[1, 1], &[0, 1]]);
        let b = dense(&[&[1, -1], &[0, 1]]);
        assert_eq!(a.mul(&b), SparseExactMatrix::identity(2));
        let mut c = a.clone();
        c.add_to(0, 1, q(-1));
        assert_eq!(c.nnz(), 2);
        assert_eq!(a.transpose().get(1, 0), q(1));
        assert!(a.to_coordinate_text().starts_with("2 2 3\n"));
    }
}
