//! Set partitions of `{0, ..., n-1}` in canonical form.
//!
//! A partition is stored as its restricted-growth string: position `x` holds
//! the index of the block containing `x`, and blocks are numbered in order of
//! their minimum element. Two partitions are equal exactly when their label
//! strings are equal, and the derived ordering is the lexicographic order on
//! those strings.
//!
//! The same value doubles as an equivalence relation on the base set. In
//! relation terms `p.refines(q)` is the containment `p ⊆ q`.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ensure_min_size, ensure_same_size, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u8>,
}

impl SetPartition {
    /// Builds a partition from arbitrary block labels, one per point.
    ///
    /// Labels are renumbered into restricted-growth form, so any labelling of
    /// the same blocks yields the same value.
    pub fn from_labels<L: Copy + Eq>(labels: &[L]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("empty base set".into()));
        }
        if labels.len() > u8::MAX as usize {
            return Err(Error::InvalidPartition(format!(
                "base set of size {} is too large",
                labels.len()
            )));
        }
        let mut seen: Vec<L> = Vec::new();
        let canonical = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i as u8,
                None => {
                    seen.push(*l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        Ok(Self { labels: canonical })
    }

    /// Builds a partition from a list of blocks covering `{0, ..., n-1}`,
    /// where `n` is the total number of listed points.
    pub fn from_blocks(blocks: &[Vec<u8>]) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidPartition(format!("blocks cover {n} points")));
        }
        let mut labels: Vec<Option<usize>> = vec![None; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                let slot = labels.get_mut(x as usize).ok_or_else(|| {
                    Error::InvalidPartition(format!("point {x} outside base set of size {n}"))
                })?;
                if slot.is_some() {
                    return Err(Error::InvalidPartition(format!("point {x} appears twice")));
                }
                *slot = Some(i);
            }
        }
        // n points placed without repetition into n slots, so every slot is filled
        let labels: Vec<usize> = labels.into_iter().map(Option::unwrap).collect();
        Self::from_labels(&labels)
    }

    /// The partition into singletons.
    pub fn identity(n: usize) -> Self {
        Self {
            labels: (0..n as u8).collect(),
        }
    }

    /// The one-block partition.
    pub fn coarsest(n: usize) -> Self {
        Self { labels: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .copied()
            .max()
            .map_or(0, |m| m as usize + 1)
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: u8) -> usize {
        self.labels[x as usize] as usize
    }

    pub fn related(&self, x: u8, y: u8) -> bool {
        self.labels[x as usize] == self.labels[y as usize]
    }

    pub fn block(&self, i: usize) -> Vec<u8> {
        (0..self.n() as u8)
            .filter(|&x| self.labels[x as usize] as usize == i)
            .collect()
    }

    pub fn blocks(&self) -> Vec<Vec<u8>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(x as u8);
        }
        blocks
    }

    /// Least element of block `i`.
    pub fn block_min(&self, i: usize) -> u8 {
        self.labels
            .iter()
            .position(|&l| l as usize == i)
            .expect("block index in range") as u8
    }

    /// Greatest element of block `i`.
    pub fn block_max(&self, i: usize) -> u8 {
        self.labels
            .iter()
            .rposition(|&l| l as usize == i)
            .expect("block index in range") as u8
    }

    pub fn block_len(&self, i: usize) -> usize {
        self.labels.iter().filter(|&&l| l as usize == i).count()
    }

    /// True for the all-singletons partition.
    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.n()
    }

    /// Re-derives the canonical form from the stored labels.
    pub fn canonicalize(&self) -> Self {
        Self::from_labels(&self.labels).expect("stored partitions are valid")
    }

    /// True iff every block of `self` lies inside a block of `other`,
    /// i.e. `self ⊆ other` as equivalence relations.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        ensure_same_size(self.n(), other.n())?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Self) -> bool {
        // every block of self maps into a single block of other
        let mut target: Vec<Option<u8>> = vec![None; self.num_blocks()];
        self.labels
            .iter()
            .zip(&other.labels)
            .all(|(&mine, &theirs)| match &mut target[mine as usize] {
                Some(t) => *t == theirs,
                slot @ None => {
                    *slot = Some(theirs);
                    true
                }
            })
    }
}

/// Free-function form of [`SetPartition::refines`].
pub fn refines(p: &SetPartition, q: &SetPartition) -> Result<bool> {
    p.refines(q)
}

/// All partitions of `{0, ..., n-1}` in lexicographic order of their
/// restricted-growth strings, optionally without the identity partition.
pub fn enumerate_partitions(n: usize, non_identity_only: bool) -> Result<Vec<SetPartition>> {
    ensure_min_size(n, 2)?;
    if n > u8::MAX as usize {
        return Err(Error::InvalidSize { got: n, min: 2 });
    }
    let mut out = Vec::new();
    let mut labels = vec![0u8; n];
    grow(&mut labels, 1, 0, &mut out);
    if non_identity_only {
        out.retain(|p| !p.is_identity());
    }
    Ok(out)
}

fn grow(labels: &mut [u8], pos: usize, max: u8, out: &mut Vec<SetPartition>) {
    if pos == labels.len() {
        out.push(SetPartition {
            labels: labels.to_vec(),
        });
        return;
    }
    for l in 0..=max + 1 {
        labels[pos] = l;
        grow(labels, pos + 1, max.max(l), out);
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<u8>>::deserialize(deserializer)?;
        Self::from_blocks(&blocks).map_err(D::Error::custom)
    }
}
