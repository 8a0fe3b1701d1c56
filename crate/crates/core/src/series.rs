//! Truncated power series with integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::partition_counts;

/// Coefficients `[z^0, …, z^N]` of `z^b / ((1−z²)(1−z³)⋯(1−z^b)) · P(z)`,
/// where `P(z) = ∏_{k≥1} 1/(1−z^k)` is the partition generating function.
///
/// Coefficient `r` counts the `b`-marked partitions of `r`. For `b = 0` the
/// factor `1/(1−z)` from "partitions with exactly `b` parts" is absent, so the
/// series is `(1−z)·P(z)` (partitions without singleton parts).
pub fn stable_two_row_gf(b: usize, n: usize) -> Vec<BigInt> {
    let mut series: Vec<BigInt> = partition_counts(n).into_iter().map(BigInt::from).collect();
    if b == 0 {
        return (0..series.len())
            .map(|i| if i == 0 { series[0].clone() } else { &series[i] - &series[i - 1] })
            .collect();
    }
    for k in 2..=b {
        series = divide_by_one_minus_power(&series, k);
    }
    shift(&series, b)
}

/// Multiplies by `1/(1 − z^k)`, truncating at the input length.
pub fn divide_by_one_minus_power(series: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = series.to_vec();
    for i in k..out.len() {
        let prev = out[i - k].clone();
        out[i] += prev;
    }
    out
}

/// Multiplies by `z^b`, truncating at the input length.
pub fn shift(series: &[BigInt], b: usize) -> Vec<BigInt> {
    (0..series.len()).map(|i| if i >= b { series[i - b].clone() } else { BigInt::zero() }).collect()
}

/// Product of two truncated series.
pub fn multiply(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// The series `1` truncated to `len` terms.
pub fn one(len: usize) -> Vec<BigInt> {
    (0..len).map(|i| if i == 0 { BigInt::one() } else { BigInt::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{marked_partitions, partition_count};

    #[test]
    fn known_prefixes() {
        let b0: Vec<i64> = stable_two_row_gf(0, 6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(b0, vec![1, 0, 1, 1, 2, 2, 4]);
        let b1 = stable_two_row_gf(1, 10);
        for (r, c) in b1.iter().enumerate().skip(1) {
            assert_eq!(c, &BigInt::from(partition_count(r - 1)));
        }
        assert_eq!(stable_two_row_gf(2, 4)[4], BigInt::from(3));
    }

    #[test]
    fn matches_marked_partition_counts() {
        for b in 0..=6 {
            let gf = stable_two_row_gf(b, 12);
            for (r, c) in gf.iter().enumerate() {
                assert_eq!(c, &BigInt::from(marked_partitions(b, r, None).len()), "b={b} r={r}");
            }
        }
    }
}
