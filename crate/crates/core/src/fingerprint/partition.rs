use num_bigint::BigUint;
use num_traits::One;

use crate::error::{HolantError, Result};

/// Largest ground set [`enumerate_set_partitions`] accepts by default.
pub const DEFAULT_PARTITION_CAP: usize = 12;

/// A partition of `{0, …, a−1}`; blocks are sorted and ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    a: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates disjointness and coverage.
    pub fn new(a: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; a];
        for b in &blocks {
            if b.is_empty() {
                return Err(HolantError::InvalidInput("empty block".into()));
            }
            for &x in b {
                if x >= a || seen[x] {
                    return Err(HolantError::InvalidInput(format!(
                        "element {x} out of range or repeated"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(HolantError::InvalidInput(
                "blocks do not cover the ground set".into(),
            ));
        }
        Ok(Self::normalized(a, blocks))
    }

    fn normalized(a: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        SetPartition { a, blocks }
    }

    /// From a block label per element.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks.retain(|b| !b.is_empty());
        Self::normalized(labels.len(), blocks)
    }

    /// All singletons.
    pub fn finest(a: usize) -> Self {
        SetPartition {
            a,
            blocks: (0..a).map(|x| vec![x]).collect(),
        }
    }

    /// One block (empty when `a = 0`).
    pub fn coarsest(a: usize) -> Self {
        let blocks = if a == 0 {
            vec![]
        } else {
            vec![(0..a).collect()]
        };
        SetPartition { a, blocks }
    }

    pub fn ground_size(&self) -> usize {
        self.a
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every element.
    pub fn labels(&self) -> Vec<usize> {
        let mut l = vec![0; self.a];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                l[x] = i;
            }
        }
        l
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.a != other.a {
            return false;
        }
        let lo = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| lo[x] == lo[b[0]]))
    }
}

/// Iterator over all partitions of `{0, …, n−1}` via restricted growth strings.
pub struct SetPartitions {
    labels: Vec<usize>,
    /// `prefix_max[i] = max(labels[..=i])`.
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_labels(&self.labels);
        let n = self.labels.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// All partitions of `[a]`, refusing ground sets larger than `cap`.
pub fn enumerate_set_partitions(a: usize, cap: usize) -> Result<SetPartitions> {
    if a == 0 {
        return Err(HolantError::Precondition(
            "ground set must be non-empty".into(),
        ));
    }
    if a > cap {
        return Err(HolantError::CapExceeded {
            what: "set-partition ground size",
            value: a,
            cap,
        });
    }
    Ok(SetPartitions::new(a))
}

/// Bell numbers via the Bell triangle.
pub fn bell_number(n: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_are_bell_numbers() {
        assert_eq!(enumerate_set_partitions(3, 12).unwrap().count(), 5);
        assert_eq!(enumerate_set_partitions(4, 12).unwrap().count(), 15);
        for n in 1..=8 {
            let all: HashSet<_> = SetPartitions::new(n).collect();
            assert_eq!(BigUint::from(all.len()), bell_number(n), "n = {n}");
        }
    }

    #[test]
    fn singleton_ground_set() {
        let parts: Vec<_> = enumerate_set_partitions(1, 12).unwrap().collect();
        assert_eq!(parts, vec![SetPartition::finest(1)]);
        assert_eq!(SetPartition::finest(1), SetPartition::coarsest(1));
    }

    #[test]
    fn caps_and_empty() {
        assert!(enumerate_set_partitions(13, 12).err().unwrap().is_guard());
        assert!(enumerate_set_partitions(0, 12).is_err());
        assert_eq!(SetPartitions::new(0).count(), 1);
    }

    #[test]
    fn refinement_order() {
        let bot = SetPartition::finest(4);
        let top = SetPartition::coarsest(4);
        let mid = SetPartition::new(4, vec![vec![0, 2], vec![1], vec![3]]).unwrap();
        assert!(bot.refines(&mid) && mid.refines(&top) && !top.refines(&mid));
        assert!(SetPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn bell_twelve() {
        assert_eq!(bell_number(12), BigUint::from(4_213_597u32));
    }
}
