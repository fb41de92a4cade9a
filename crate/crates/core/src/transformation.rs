//! Self-maps of a finite set and the singular transformation semigroup.
//!
//! Maps act on the right and compose left to right: `s.compose(&t)` is the
//! map `x ↦ (x s) t`, which is also what `&s * &t` computes. There is no
//! right-to-left variant.

use std::fmt;
use std::ops::Mul;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ensure_min_size, ensure_same_size, Error, Result};
use crate::partition::SetPartition;
use crate::subset::Subset;

/// A map `{0, ..., n-1} → {0, ..., n-1}`; position `x` stores `x t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u8>,
}

impl Transformation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidTransformation(format!("length {n}")));
        }
        if let Some(&y) = images.iter().find(|&&y| y as usize >= n) {
            return Err(Error::InvalidTransformation(format!(
                "value {y} outside base set of size {n}"
            )));
        }
        Ok(Self { images })
    }

    /// Like [`Transformation::new`] but additionally requires a singular map.
    pub fn singular(images: Vec<u8>) -> Result<Self> {
        let t = Self::new(images)?;
        if t.is_bijective() {
            return Err(Error::NotSingular(t.images));
        }
        Ok(t)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    pub fn constant(n: usize, k: u8) -> Self {
        Self { images: vec![k; n] }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.n()];
        for &y in &self.images {
            if std::mem::replace(&mut hit[y as usize], true) {
                return false;
            }
        }
        true
    }

    pub fn is_singular(&self) -> bool {
        !self.is_bijective()
    }

    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&y| self.apply(y) == y)
    }

    /// `x ↦ (x self) t`.
    pub fn compose(&self, t: &Self) -> Result<Self> {
        ensure_same_size(self.n(), t.n())?;
        Ok(self.then(t))
    }

    pub(crate) fn then(&self, t: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&y| t.apply(y)).collect(),
        }
    }

    /// The kernel partition: blocks are the non-empty fibres of the map.
    pub fn kernel(&self) -> SetPartition {
        SetPartition::from_labels(&self.images).expect("non-empty map")
    }

    /// Sorted image set, without the singularity requirement of [`Self::image`].
    pub fn image_points(&self) -> Vec<u8> {
        let mut pts = self.images.clone();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    pub fn image(&self) -> Result<Subset> {
        if self.is_bijective() {
            return Err(Error::NotSingular(self.images.clone()));
        }
        Subset::new(self.n(), self.image_points())
    }

    pub fn rank(&self) -> usize {
        self.image_points().len()
    }
}

impl Mul for &Transformation {
    type Output = Transformation;

    /// Left-to-right product; panics on a size mismatch.
    fn mul(self, rhs: &Transformation) -> Transformation {
        assert_eq!(self.n(), rhs.n(), "composing maps of different sizes");
        self.then(rhs)
    }
}

/// Free-function form of [`Transformation::compose`].
pub fn compose(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    s.compose(t)
}

pub fn kernel(t: &Transformation) -> SetPartition {
    t.kernel()
}

pub fn image(t: &Transformation) -> Result<Subset> {
    t.image()
}

/// Every self-map of `{0, ..., n-1}`, in lexicographic order.
pub fn all_maps(n: usize) -> impl Iterator<Item = Transformation> {
    let total = (n as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    (0..total).map(move |mut code| {
        let mut images = vec![0u8; n];
        for slot in images.iter_mut().rev() {
            *slot = (code % n as u64) as u8;
            code /= n as u64;
        }
        Transformation { images }
    })
}

/// The carrier of the singular semigroup: all `nⁿ − n!` non-bijective maps.
pub fn enumerate_singular(n: usize) -> Result<Vec<Transformation>> {
    ensure_min_size(n, 2)?;
    Ok(all_maps(n).filter(Transformation::is_singular).collect())
}

/// The idempotent whose kernel is `p` and whose image is `cross_section`.
pub fn idempotent_from(p: &SetPartition, cross_section: &Subset) -> Result<Transformation> {
    ensure_same_size(p.n(), cross_section.n())?;
    if p.is_identity() {
        return Err(Error::InvalidCrossSection(
            "identity partition has no singular idempotent".into(),
        ));
    }
    let mut rep: Vec<Option<u8>> = vec![None; p.num_blocks()];
    for &a in cross_section.members() {
        let slot = &mut rep[p.block_of(a)];
        if slot.is_some() {
            return Err(Error::InvalidCrossSection(format!(
                "{cross_section} meets block {:?} twice",
                p.block(p.block_of(a))
            )));
        }
        *slot = Some(a);
    }
    let images = (0..p.n() as u8)
        .map(|x| {
            rep[p.block_of(x)].ok_or_else(|| {
                Error::InvalidCrossSection(format!(
                    "{cross_section} misses block {:?}",
                    p.block(p.block_of(x))
                ))
            })
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(Transformation { images })
}

/// The idempotent with kernel `p` that sends each block to its least element.
pub fn min_idempotent(p: &SetPartition) -> Transformation {
    Transformation {
        images: (0..p.n() as u8)
            .map(|x| p.block_min(p.block_of(x)))
            .collect(),
    }
}

/// All sets meeting every block of `p` exactly once, in lexicographic order.
pub fn cross_sections(p: &SetPartition) -> Vec<Subset> {
    let blocks = p.blocks();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(blocks.len());
    choose(&blocks, &mut pick, &mut |chosen| {
        if chosen.len() < p.n() {
            out.push(Subset::new(p.n(), chosen.iter().copied()).expect("valid cross-section"));
        }
    });
    out.sort_by(|a, b| a.members().cmp(b.members()));
    out
}

fn choose(blocks: &[Vec<u8>], pick: &mut Vec<u8>, emit: &mut impl FnMut(&[u8])) {
    match blocks.split_first() {
        None => emit(pick),
        Some((first, rest)) => {
            for &x in first {
                pick.push(x);
                choose(rest, pick, emit);
                pick.pop();
            }
        }
    }
}

/// All idempotents of the singular semigroup, in lexicographic order.
pub fn idempotents(n: usize) -> Result<Vec<Transformation>> {
    Ok(enumerate_singular(n)?
        .into_iter()
        .filter(Transformation::is_idempotent)
        .collect())
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Transformation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::<u8>::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}
