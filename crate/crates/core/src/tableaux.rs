//! Tableau counting: standard tableaux, semistandard tableaux with bounded
//! entries and prescribed entry sum.

use num_bigint::BigUint;

use crate::error::{domain, Result};
use crate::partition::Partition;

/// `f^λ`, the number of standard Young tableaux of shape `λ`.
pub fn std_tableaux_count(lambda: &Partition) -> BigUint {
    lambda.std_tableaux_count()
}

/// Counts standard tableaux by removing the largest entry recursively.
///
/// Exponential; intended as an independent check of the hook length formula.
pub fn std_tableaux_count_brute(lambda: &Partition) -> BigUint {
    if lambda.size() <= 1 {
        return BigUint::from(1u32);
    }
    lambda
        .removable_rows()
        .into_iter()
        .map(|i| std_tableaux_count_brute(&lambda.remove_box(i)))
        .sum()
}

/// Number of semistandard tableaux of shape `shape` with entries in
/// `[lo, hi]` whose entries sum to `total`.
pub fn count_ssyt_with_sum(shape: &Partition, lo: usize, hi: usize, total: usize) -> BigUint {
    let rows = shape.parts().to_vec();
    let cells: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut count = BigUint::default();
    fill(&cells, 0, &mut grid, lo, hi, total, &mut count);
    count
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<usize>>,
    lo: usize,
    hi: usize,
    left: usize,
    count: &mut BigUint,
) {
    if idx == cells.len() {
        if left == 0 {
            *count += 1u32;
        }
        return;
    }
    let (i, j) = cells[idx];
    let mut min = lo;
    if j > 0 {
        min = min.max(grid[i][j - 1]);
    }
    if i > 0 {
        min = min.max(grid[i - 1][j] + 1);
    }
    let remaining_cells = cells.len() - idx - 1;
    for v in min..=hi {
        // Every later cell in this row is at least v; every other later cell at least lo.
        let row_rest = grid[i].len() - j - 1;
        let floor = v + row_rest * v + (remaining_cells - row_rest) * lo;
        if floor > left {
            break;
        }
        grid[i][j] = v;
        fill(cells, idx + 1, grid, lo, hi, left - v, count);
    }
}

/// `|S_β(p)|`: semistandard `β`-tableaux with entries ≥ 1 and entry sum `p`.
pub fn ssyt_weight_sets(beta: &Partition, p: usize) -> BigUint {
    if p < beta.size() {
        return BigUint::default();
    }
    count_ssyt_with_sum(beta, 1, p.max(1), p)
}

/// `|T(m,n,k,r)|`: semistandard `(n−k, k)`-tableaux with entries in
/// `{0,…,m}` and entry sum `r`.
pub fn cayley_tableaux_count(m: usize, n: usize, k: usize, r: usize) -> Result<BigUint> {
    if n < 2 * k {
        return domain(format!("shape (n−k, k) = ({}, {k}) is not a partition", n as i64 - k as i64));
    }
    let shape = Partition::new(vec![n - k, k])?;
    Ok(count_ssyt_with_sum(&shape, 0, m, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(x: &[usize]) -> Partition {
        Partition::from_slice(x).unwrap()
    }

    #[test]
    fn hook_formula_matches_brute_force() {
        for n in 0..=8 {
            let mut mass = BigUint::default();
            for l in partitions_of(n) {
                let f = std_tableaux_count(&l);
                assert_eq!(f, std_tableaux_count_brute(&l), "shape {l}");
                mass += &f * &f;
            }
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(mass, fact);
        }
    }

    #[test]
    fn weight_sets() {
        assert_eq!(ssyt_weight_sets(&p(&[2, 1]), 3), BigUint::from(0u32));
        assert_eq!(ssyt_weight_sets(&p(&[2, 1]), 5), BigUint::from(2u32));
        for k in 1..8 {
            assert_eq!(ssyt_weight_sets(&p(&[1]), k), BigUint::from(1u32));
        }
    }

    #[test]
    fn cayley_counts() {
        for m in 3..7 {
            assert_eq!(cayley_tableaux_count(m, 8, 3, 5).unwrap(), BigUint::from(5u32));
        }
        // The all-zero tableau exists only for a single row; a second row
        // forces entries ≥ 1 by column strictness.
        for m in 0..4 {
            assert_eq!(cayley_tableaux_count(m, 5, 0, 0).unwrap(), BigUint::from(1u32));
            assert_eq!(cayley_tableaux_count(m, 5, 2, 0).unwrap(), BigUint::from(0u32));
        }
        // k = 0: partitions of r fitting in an n × m box.
        let boxed = crate::partition::partitions_with(6, 3, 4, 1).len();
        assert_eq!(cayley_tableaux_count(3, 4, 0, 6).unwrap(), BigUint::from(boxed));
        assert!(cayley_tableaux_count(3, 4, 3, 2).is_err());
    }
}
