//! Symmetric functions in the Schur and power-sum bases.

mod characters;
mod gh;
mod lr;
mod plethysm;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use characters::{character, remove_rim_hooks, z_rho};
pub use gh::{g_sym, h_eps};
pub(crate) use gh::product_coefficient;
pub use lr::{generalized_lr, lr_coefficient, lr_expand};
pub use plethysm::{plethysm, plethysm_powersum, powersum_to_schur, schur_to_powersum};

/// A symmetric function in the Schur basis with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurPoly {
    pub fn zero() -> Self {
        SchurPoly::default()
    }

    /// The constant 1 = `s_∅`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    /// The single Schur function `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurPoly { terms }
    }

    /// Builds from `(λ, c)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = SchurPoly::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Coefficient of `s_λ`.
    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree when all terms share one (`None` for 0 or mixed).
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    pub fn add(&self, other: &SchurPoly) -> SchurPoly {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> SchurPoly {
        SchurPoly::from_terms(self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    /// Product in the Schur basis via Littlewood–Richardson coefficients.
    pub fn mul(&self, other: &SchurPoly) -> SchurPoly {
        schur_product(self, other)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c >= &BigInt::zero())
    }
}

impl fmt::Display for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &BigInt::zero();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.magnitude();
            if a.is_one() {
                write!(f, "s{l}")?;
            } else {
                write!(f, "{a}·s{l}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SchurPoly {
    /// A list of `{partition, coefficient}` sorted lexicographically
    /// descending by partition; coefficients are decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (partition, coefficient) in self.terms.iter().rev() {
            seq.serialize_element(&SchurTermOut { partition, coefficient: coefficient.to_string() })?;
        }
        seq.end()
    }
}

/// One `{partition, coefficient}` entry of the JSON form.
#[derive(Serialize)]
struct SchurTermOut<'a> {
    partition: &'a Partition,
    coefficient: String,
}

/// A symmetric function in the power-sum basis with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        PowerSumPoly::default()
    }

    pub fn one() -> Self {
        Self::power_sum(Partition::empty())
    }

    /// The power-sum product `p_ρ`.
    pub fn power_sum(rho: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(rho, BigRational::one());
        PowerSumPoly { terms }
    }

    pub fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(rho.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&rho);
        }
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    /// Product using `p_ρ p_σ = p_{ρ ∪ σ}`.
    pub fn mul(&self, other: &PowerSumPoly) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), x * y);
            }
        }
        out
    }

    /// The plethysm `p_k ∘ self`, i.e. every `p_j` replaced by `p_{kj}`.
    pub fn stretch(&self, k: usize) -> PowerSumPoly {
        PowerSumPoly {
            terms: self
                .terms
                .iter()
                .map(|(r, c)| (Partition::from_unsorted(r.parts().iter().map(|x| x * k).collect()), c.clone()))
                .collect(),
        }
    }

    /// `⟨self, s_λ⟩ = Σ_ρ a_ρ χ^λ(ρ)`; errors unless the result is integral.
    pub fn schur_coefficient(&self, lambda: &Partition) -> Result<BigInt> {
        let mut acc = BigRational::zero();
        for (rho, c) in &self.terms {
            if rho.size() != lambda.size() {
                continue;
            }
            let chi = character(lambda, rho);
            if !chi.is_zero() {
                acc += c * BigRational::from_integer(chi);
            }
        }
        if !acc.is_integer() {
            return Err(Error::Arithmetic(format!("coefficient of s{lambda} is {acc}, not an integer")));
        }
        Ok(acc.to_integer())
    }
}

/// `f · g` in the Schur basis.
pub fn schur_product(f: &SchurPoly, g: &SchurPoly) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for (mu, a) in f.terms() {
        for (nu, b) in g.terms() {
            // Enumerate with the smaller content: fewer labels to place.
            let (big, small) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
            let ab = a * b;
            for (lambda, c) in lr_expand(big, small, None) {
                out.add_term(lambda, &ab * c);
            }
        }
    }
    out
}

/// `⟨f, g⟩ = Σ_λ f_λ g_λ` (the Schur basis is orthonormal).
pub fn inner_product(f: &SchurPoly, g: &SchurPoly) -> BigInt {
    f.terms().filter_map(|(l, c)| g.terms.get(l).map(|d| c * d)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::from_slice(x).unwrap()
    }
    fn s(x: &[usize]) -> SchurPoly {
        SchurPoly::schur(p(x))
    }

    #[test]
    fn products() {
        assert_eq!(schur_product(&s(&[1]), &s(&[1])), s(&[2]).add(&s(&[1, 1])));
        let prod = schur_product(&s(&[3]), &s(&[3, 3, 2]));
        assert_eq!(prod.coefficient(&p(&[3, 3, 3, 2])), BigInt::one());
        assert_eq!(schur_product(&SchurPoly::one(), &s(&[2, 1])), s(&[2, 1]));
    }

    #[test]
    fn inner_products() {
        assert_eq!(inner_product(&s(&[2, 1]), &s(&[2, 1])), BigInt::one());
        assert_eq!(inner_product(&s(&[2, 1]), &s(&[3])), BigInt::zero());
    }

    #[test]
    fn json_form_is_sorted_descending() {
        let f = s(&[1, 1]).add(&s(&[2])).scale(&BigInt::from(3));
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"[{"partition":"[2]","coefficient":"3"},{"partition":"[1,1]","coefficient":"3"}]"#);
    }

    #[test]
    fn display() {
        let f = s(&[2]).add(&s(&[1, 1]).scale(&BigInt::from(-2)));
        assert_eq!(f.to_string(), "s[2] - 2·s[1,1]");
    }
}
