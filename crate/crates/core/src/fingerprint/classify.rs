use serde::Serialize;

use super::chi::fingerprints_fast;
use crate::error::{HolantError, Result};
use crate::scalar::ExactScalar;
use crate::signature::Signature;

pub const DEFAULT_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeTag {
    T1,
    T2,
    Tinf,
}

/// A non-vanishing fingerprint: `χ(a, members[index]) = chi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: usize,
    pub index: usize,
    pub chi: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureType {
    #[serde(rename = "type")]
    pub tag: TypeTag,
    pub witness: Option<Witness>,
    /// The search bound the verdict was computed with.
    pub bound: usize,
    /// True when the verdict does not depend on `bound`.
    pub exact: bool,
    /// True when no member has `s(0) ≠ 0`, so the verdict is T1 by vacuity.
    pub vacuous: bool,
    /// Indices of members with `s(0) = 0`; these are excluded from the verdict.
    pub zero_part: Vec<usize>,
}

/// Classifies the members with `s(0) ≠ 0`.
///
/// * `Tinf` if some `χ(a, s) ≠ 0` with `3 ≤ a ≤ bound`. Also `Tinf` when a
///   member has `χ(2) = … = χ(bound) = 0` yet is not geometric: its first
///   non-geometric index `n` then has `χ(n) = s(n)/s(0) − α^n ≠ 0`, which is
///   reported as a witness beyond the bound.
/// * `T2` if otherwise some `χ(2, s) ≠ 0`; relative to the bound.
/// * `T1` if every member is exactly geometric; always exact.
pub fn classify(members: &[Signature], bound: usize) -> Result<SignatureType> {
    if bound < 3 {
        return Err(HolantError::Precondition(format!(
            "classification bound must be at least 3, got {bound}"
        )));
    }
    let zero_part: Vec<usize> = (0..members.len())
        .filter(|&i| members[i].eval(0).is_zero())
        .collect();
    let live: Vec<usize> = (0..members.len())
        .filter(|i| !zero_part.contains(i))
        .collect();
    let mut verdict = SignatureType {
        tag: TypeTag::T1,
        witness: None,
        bound,
        exact: true,
        vacuous: live.is_empty(),
        zero_part,
    };

    let chis: Vec<Vec<ExactScalar>> = live
        .iter()
        .map(|&i| fingerprints_fast(bound, &members[i]).expect("s(0) ≠ 0"))
        .collect();

    // Smallest a ≥ 3 first, then smallest member index.
    #[allow(clippy::needless_range_loop)]
    for a in 3..=bound {
        if let Some(j) = (0..live.len()).find(|&j| !chis[j][a].is_zero()) {
            verdict.tag = TypeTag::Tinf;
            verdict.witness = Some(Witness {
                a,
                index: live[j],
                chi: chis[j][a].clone(),
            });
            return Ok(verdict);
        }
    }

    let mut beyond: Option<Witness> = None;
    for (j, &i) in live.iter().enumerate() {
        if !chis[j][2].is_zero() {
            continue;
        }
        if let Some(n) = members[i].geometric_deviation() {
            let chi = fingerprints_fast(n, &members[i])
                .expect("s(0) ≠ 0")
                .swap_remove(n);
            debug_assert!(!chi.is_zero());
            if beyond.as_ref().is_none_or(|w| n < w.a) {
                beyond = Some(Witness {
                    a: n,
                    index: i,
                    chi,
                });
            }
        }
    }
    if let Some(w) = beyond {
        verdict.tag = TypeTag::Tinf;
        verdict.witness = Some(w);
        return Ok(verdict);
    }

    if let Some(j) = (0..live.len()).find(|&j| !chis[j][2].is_zero()) {
        verdict.tag = TypeTag::T2;
        verdict.exact = false;
        verdict.witness = Some(Witness {
            a: 2,
            index: live[j],
            chi: chis[j][2].clone(),
        });
        return Ok(verdict);
    }

    // Every live member has χ(a) = 0 for 2 ≤ a ≤ bound and no geometric deviation.
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Tail;

    #[test]
    fn geometric_is_exact_t1() {
        let t = classify(&[Signature::geometric(ExactScalar::from_int(3))], 8).unwrap();
        assert_eq!(t.tag, TypeTag::T1);
        assert!(t.exact && !t.vacuous);
    }

    #[test]
    fn matchings_are_tinf_at_three() {
        let t = classify(&[Signature::hw_le1()], 8).unwrap();
        assert_eq!(t.tag, TypeTag::Tinf);
        let w = t.witness.unwrap();
        assert_eq!((w.a, w.index, w.chi), (3, 0, ExactScalar::from_int(2)));
    }

    #[test]
    fn parity_is_tinf_at_four() {
        let t = classify(&[Signature::mod_p(2)], 4).unwrap();
        assert_eq!(t.tag, TypeTag::Tinf);
        let w = t.witness.unwrap();
        assert_eq!((w.a, w.chi), (4, ExactScalar::from_int(-2)));
    }

    #[test]
    fn gaussian_table_is_t2_at_four() {
        let s = Signature::from_ints(&[1, 0, 1, 0, 3], Tail::Zero).unwrap();
        let t = classify(std::slice::from_ref(&s), 4).unwrap();
        assert_eq!(t.tag, TypeTag::T2);
        assert!(!t.exact);
        assert_eq!(t.witness.unwrap().a, 2);
        // The zero tail breaks the moment sequence at 6.
        assert_eq!(classify(&[s], 6).unwrap().tag, TypeTag::Tinf);
    }

    #[test]
    fn hidden_deviation_is_found_beyond_bound() {
        let s = Signature::from_ints(&[1, 0, 0, 0, 0, 0, 1], Tail::Zero).unwrap();
        let t = classify(&[s], 3).unwrap();
        assert_eq!(t.tag, TypeTag::Tinf);
        assert_eq!(t.witness.unwrap().a, 6);
    }

    #[test]
    fn zero_part_is_split_off() {
        let t = classify(
            &[
                Signature::hw_ge1(),
                Signature::geometric(ExactScalar::from_int(2)),
            ],
            8,
        )
        .unwrap();
        assert_eq!(t.tag, TypeTag::T1);
        assert_eq!(t.zero_part, vec![0]);
        let v = classify(&[Signature::hw_ge1()], 8).unwrap();
        assert!(v.vacuous);
        assert_eq!(v.tag, TypeTag::T1);
    }

    #[test]
    fn bound_below_three_rejected() {
        assert!(classify(&[Signature::one()], 2).is_err());
    }
}
