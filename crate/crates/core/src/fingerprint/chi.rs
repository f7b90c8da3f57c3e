use std::collections::HashMap;

use num_bigint::BigInt;

use super::partition::{enumerate_set_partitions, DEFAULT_PARTITION_CAP};
use crate::error::Result;
use crate::scalar::ExactScalar;
use crate::signature::Signature;

/// A fingerprint value, or `Undefined` when `s(0) = 0` but `s` is not the zero function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fingerprint {
    Value(ExactScalar),
    Undefined,
}

impl Fingerprint {
    pub fn value(&self) -> Option<&ExactScalar> {
        match self {
            Fingerprint::Value(v) => Some(v),
            Fingerprint::Undefined => None,
        }
    }

    pub fn is_nonzero(&self) -> bool {
        matches!(self, Fingerprint::Value(v) if !v.is_zero())
    }
}

fn degenerate(s: &Signature) -> Option<Fingerprint> {
    if s.is_identically_zero() {
        Some(Fingerprint::Value(ExactScalar::zero()))
    } else if s.eval(0).is_zero() {
        Some(Fingerprint::Undefined)
    } else {
        None
    }
}

/// `m_n = s(n)/s(0)` for `n ≤ a`.
fn moments(a: usize, s: &Signature) -> Vec<ExactScalar> {
    let inv = s.eval(0).inverse().expect("s(0) ≠ 0 checked by caller");
    (0..=a).map(|n| &s.eval(n) * &inv).collect()
}

/// The defining sum over all partitions of `[a]`, with the default cap.
pub fn fingerprint(a: usize, s: &Signature) -> Result<Fingerprint> {
    fingerprint_capped(a, s, DEFAULT_PARTITION_CAP)
}

/// `Σ_σ (−1)^{|σ|−1} (|σ|−1)! ∏_{B∈σ} s(|B|)/s(0)`, by explicit enumeration.
///
/// The product only depends on the multiset of block sizes, so integer
/// coefficients are accumulated per block-size shape before any scalar work.
pub fn fingerprint_capped(a: usize, s: &Signature, cap: usize) -> Result<Fingerprint> {
    let partitions = enumerate_set_partitions(a, cap)?;
    if let Some(d) = degenerate(s) {
        return Ok(d);
    }
    let m = moments(a, s);
    let mut by_shape: HashMap<Vec<usize>, BigInt> = HashMap::new();
    for sigma in partitions {
        let mut shape: Vec<usize> = sigma.blocks().iter().map(Vec::len).collect();
        shape.sort_unstable();
        let b = shape.len();
        let mut coeff = BigInt::from(1);
        for j in 1..b {
            coeff *= j;
        }
        if b.is_multiple_of(2) {
            coeff = -coeff;
        }
        *by_shape.entry(shape).or_default() += coeff;
    }
    let total = by_shape
        .into_iter()
        .map(|(shape, c)| {
            let mut term = ExactScalar::from_bigint(c);
            for size in shape {
                term *= &m[size];
            }
            term
        })
        .sum();
    Ok(Fingerprint::Value(total))
}

/// `χ(1), …, χ(upto)` by the convolution recurrence
/// `m_a = Σ_{j=1..a} C(a−1, j−1) χ(j) m_{a−j}`; index 0 of the result is unused (zero).
/// Returns `None` when the fingerprint is undefined.
pub fn fingerprints_fast(upto: usize, s: &Signature) -> Option<Vec<ExactScalar>> {
    if s.is_identically_zero() {
        return Some(vec![ExactScalar::zero(); upto + 1]);
    }
    if s.eval(0).is_zero() {
        return None;
    }
    let m = moments(upto, s);
    let mut chi = vec![ExactScalar::zero(); upto + 1];
    // binom holds row a−1 of Pascal's triangle.
    let mut binom: Vec<BigInt> = vec![BigInt::from(1)];
    for a in 1..=upto {
        let mut acc = m[a].clone();
        for j in 1..a {
            let c = ExactScalar::from_bigint(binom[j - 1].clone());
            acc -= &(&(&c * &chi[j]) * &m[a - j]);
        }
        chi[a] = acc;
        let mut next = vec![BigInt::from(1); a + 1];
        for j in 1..a {
            next[j] = &binom[j - 1] + &binom[j];
        }
        binom = next;
    }
    Some(chi)
}

/// `χ(a, s)` by the recurrence; agrees exactly with [`fingerprint`].
pub fn fingerprint_fast(a: usize, s: &Signature) -> Fingerprint {
    match fingerprints_fast(a, s) {
        Some(mut v) => Fingerprint::Value(v.swap_remove(a)),
        None => Fingerprint::Undefined,
    }
}
