//! Symmetric signatures: functions from a Hamming weight to a scalar.

use serde::{Deserialize, Serialize};

use crate::error::{HolantError, Result};
use crate::scalar::ExactScalar;

/// How a signature continues past the end of its table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tail {
    /// `s(n) = 0` for `n > D`.
    Zero,
    /// `s(n) = table[D] · ratio^(n − D)`.
    Geometric { ratio: ExactScalar },
    /// The last `period` table entries repeat forever.
    Periodic { period: usize },
}

/// A symmetric function `ℕ → ExactScalar` given by a finite table and a tail policy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSignature", into = "RawSignature")]
pub struct Signature {
    table: Vec<ExactScalar>,
    tail: Tail,
}

#[derive(Serialize, Deserialize)]
struct RawSignature {
    table: Vec<ExactScalar>,
    tail: Tail,
}

impl TryFrom<RawSignature> for Signature {
    type Error = HolantError;
    fn try_from(raw: RawSignature) -> Result<Self> {
        Signature::new(raw.table, raw.tail)
    }
}

impl From<Signature> for RawSignature {
    fn from(s: Signature) -> Self {
        RawSignature {
            table: s.table,
            tail: s.tail,
        }
    }
}

impl Signature {
    /// Builds a signature. The table must be non-empty and a periodic tail
    /// needs `1 ≤ period ≤ table.len()`.
    pub fn new(table: Vec<ExactScalar>, tail: Tail) -> Result<Self> {
        if table.is_empty() {
            return Err(HolantError::InvalidSignature("empty table".into()));
        }
        if let Tail::Periodic { period } = tail {
            if period == 0 || period > table.len() {
                return Err(HolantError::InvalidSignature(format!(
                    "period {period} must lie in 1..={}",
                    table.len()
                )));
            }
        }
        Ok(Signature { table, tail })
    }

    /// Convenience constructor from integer table entries.
    pub fn from_ints(table: &[i64], tail: Tail) -> Result<Self> {
        Self::new(
            table.iter().map(|&x| ExactScalar::from_int(x)).collect(),
            tail,
        )
    }

    /// At most one selected edge: `[1, 1]`, then zero.
    pub fn hw_le1() -> Self {
        Self::from_ints(&[1, 1], Tail::Zero).unwrap()
    }

    /// At least one selected edge: `[0, 1]`, then ones.
    pub fn hw_ge1() -> Self {
        Self::from_ints(&[0, 1], Tail::Periodic { period: 1 }).unwrap()
    }

    /// `1` when the weight is divisible by `p`.
    pub fn mod_p(p: usize) -> Self {
        assert!(p >= 1, "modulus must be positive");
        let mut table = vec![0; p];
        table[0] = 1;
        Self::from_ints(&table, Tail::Periodic { period: p }).unwrap()
    }

    /// The constant-one signature.
    pub fn one() -> Self {
        Self::from_ints(&[1], Tail::Periodic { period: 1 }).unwrap()
    }

    /// `s(n) = alpha^n`.
    pub fn geometric(alpha: ExactScalar) -> Self {
        Self::new(vec![ExactScalar::one()], Tail::Geometric { ratio: alpha }).unwrap()
    }

    /// `s(n) = c · alpha^n`.
    pub fn scaled_geometric(c: ExactScalar, alpha: ExactScalar) -> Self {
        Self::new(vec![c], Tail::Geometric { ratio: alpha }).unwrap()
    }

    /// Indicator of a finite set of degrees.
    pub fn indicator(degrees: &[usize]) -> Result<Self> {
        let max = degrees
            .iter()
            .copied()
            .max()
            .ok_or_else(|| HolantError::InvalidSignature("empty degree set".into()))?;
        let mut table = vec![ExactScalar::zero(); max + 1];
        for &d in degrees {
            table[d] = ExactScalar::one();
        }
        Self::new(table, Tail::Zero)
    }

    pub fn table(&self) -> &[ExactScalar] {
        &self.table
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Largest index stored in the table.
    pub fn max_degree(&self) -> usize {
        self.table.len() - 1
    }

    pub fn eval(&self, n: usize) -> ExactScalar {
        let d = self.max_degree();
        if n <= d {
            return self.table[n].clone();
        }
        match &self.tail {
            Tail::Zero => ExactScalar::zero(),
            Tail::Geometric { ratio } => &self.table[d] * &ratio.pow_u((n - d) as u64),
            Tail::Periodic { period } => {
                let m = *period;
                self.table[d + 1 - m + (n - d - 1) % m].clone()
            }
        }
    }

    /// Values `s(0), …, s(upto)`.
    pub fn values(&self, upto: usize) -> Vec<ExactScalar> {
        (0..=upto).map(|n| self.eval(n)).collect()
    }

    /// Every tail policy repeats or scales table values, so a zero table means
    /// a zero function.
    pub fn is_identically_zero(&self) -> bool {
        self.table.iter().all(ExactScalar::is_zero)
    }

    /// Smallest `n` with `s(n) ≠ 0`, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        if self.is_identically_zero() {
            return None;
        }
        // A non-zero function has a non-zero table entry, hence the search ends in the table.
        (0..self.table.len()).find(|&n| !self.table[n].is_zero())
    }

    /// Returns `(s / s(0), s(0))` when `s(0) ≠ 0` and `(s, 1)` otherwise.
    pub fn normalize(&self) -> Result<(Signature, ExactScalar)> {
        if self.is_identically_zero() {
            return Err(HolantError::ZeroSignature);
        }
        let s0 = self.table[0].clone();
        if s0.is_zero() {
            return Ok((self.clone(), ExactScalar::one()));
        }
        let inv = s0.inverse()?;
        let table = self.table.iter().map(|x| x * &inv).collect();
        Ok((
            Signature {
                table,
                tail: self.tail.clone(),
            },
            s0,
        ))
    }

    /// Multiplies every value by `c`.
    pub fn scaled(&self, c: &ExactScalar) -> Signature {
        Signature {
            table: self.table.iter().map(|x| x * c).collect(),
            tail: self.tail.clone(),
        }
    }

    /// Index up to which checking `s(n) = s(0)·α^n` decides the geometric
    /// property for the whole of ℕ under this tail policy.
    pub fn geometric_horizon(&self) -> usize {
        let m = match self.tail {
            Tail::Periodic { period } => period,
            _ => 1,
        };
        self.max_degree() + m
    }

    /// For `s(0) ≠ 0`: the first `n` with `s(n) ≠ s(0)·(s(1)/s(0))^n`,
    /// or `None` when the signature is exactly geometric.
    pub fn geometric_deviation(&self) -> Option<usize> {
        let s0 = self.eval(0);
        if s0.is_zero() {
            return Some(0);
        }
        let alpha = self.eval(1).checked_div(&s0).expect("non-zero s(0)");
        let mut expected = s0;
        for n in 1..=self.geometric_horizon() {
            expected = &expected * &alpha;
            if self.eval(n) != expected {
                return Some(n);
            }
        }
        None
    }

    /// True when `s(n) = s(0)·α^n` for every `n` and `s(0) ≠ 0`.
    pub fn is_geometric(&self) -> bool {
        self.geometric_deviation().is_none()
    }

    /// Checks the geometric form only up to `n = upto`.
    pub fn is_geometric_upto(&self, upto: usize) -> bool {
        let s0 = self.eval(0);
        if s0.is_zero() {
            return false;
        }
        let alpha = self.eval(1).checked_div(&s0).expect("non-zero s(0)");
        let mut expected = s0;
        for n in 1..=upto {
            expected = &expected * &alpha;
            if self.eval(n) != expected {
                return false;
            }
        }
        true
    }
}
