//! The normal dual of the power-set category: H-functors with the natural
//! transformations between them.
//!
//! A natural transformation `H(e; −) → H(f; −)` is determined by a single
//! map `v ∈ fSe` and acts on every H-set by `a ↦ v a`. The stored `hat` is
//! normalized to `v ē`, with `ē` the representative of the source, so equal
//! transformations have equal data.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::category::FiniteCategory;
use crate::error::{ensure_min_size, Error, Result};
use crate::partition::enumerate_partitions;
use crate::powerset::{h_object, in_h_object, powerset_objects, HFunctor};
use crate::subset::Subset;
use crate::transformation::Transformation;

/// One H-functor per non-identity partition.
pub fn dual_objects(n: usize) -> Result<Vec<HFunctor>> {
    enumerate_partitions(n, true)?
        .into_iter()
        .map(HFunctor::new)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DualMorphism {
    source: HFunctor,
    target: HFunctor,
    hat: Transformation,
}

/// Checks `v ∈ fSe'` for some idempotent `e'` with kernel `π_e`: `v` is
/// constant on the blocks of `π_f` and meets each block of `π_e` at most once.
pub(crate) fn check_carrier(
    e: &crate::partition::SetPartition,
    f: &crate::partition::SetPartition,
    v: &Transformation,
) -> Result<()> {
    let fail = |reason: String| Error::Membership {
        carrier: v.images().to_vec(),
        reason,
    };
    if v.n() != e.n() || v.n() != f.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: e.n(),
        });
    }
    if !f.refines_unchecked(&v.kernel()) {
        return Err(fail(format!("not constant on the blocks of {f}")));
    }
    let mut seen = vec![None; e.num_blocks()];
    for y in v.image_points() {
        if let Some(other) = seen[e.block_of(y)].replace(y) {
            return Err(fail(format!("{other} and {y} share a block of {e}")));
        }
    }
    Ok(())
}

impl DualMorphism {
    pub fn new(source: HFunctor, target: HFunctor, hat: Transformation) -> Result<Self> {
        check_carrier(source.kernel(), target.kernel(), &hat)?;
        let hat = hat.then(source.representative());
        Ok(Self {
            source,
            target,
            hat,
        })
    }

    pub fn source(&self) -> &HFunctor {
        &self.source
    }

    pub fn target(&self) -> &HFunctor {
        &self.target
    }

    pub fn hat(&self) -> &Transformation {
        &self.hat
    }

    /// The component at `c`: `a ↦ v a` on `H(e; c)`.
    pub fn apply(&self, c: &Subset) -> BTreeMap<Transformation, Transformation> {
        h_object(&self.source, c)
            .into_iter()
            .map(|a| {
                let va = self.hat.then(&a);
                (a, va)
            })
            .collect()
    }
}

/// [`DualMorphism::apply`], checking that every value lands in the target's
/// H-set.
pub fn dual_morphism_apply(
    m: &DualMorphism,
    c: &Subset,
) -> Result<BTreeMap<Transformation, Transformation>> {
    let map = m.apply(c);
    if let Some((a, va)) = map.iter().find(|(_, va)| !in_h_object(&m.target, c, va)) {
        return Err(Error::Membership {
            carrier: m.hat.images().to_vec(),
            reason: format!("{a} goes to {va}, outside {}({c})", m.target),
        });
    }
    Ok(map)
}

/// True iff `m` is the inclusion: `ē = f̄ v`.
pub fn dual_inclusion_test(m: &DualMorphism) -> bool {
    *m.source.representative() == m.target.representative().then(&m.hat)
}

/// `σ` then `τ`: hat `u v` where `v`, `u` are the hats of `σ`, `τ`.
pub fn compose_dual(sigma: &DualMorphism, tau: &DualMorphism) -> Result<DualMorphism> {
    if sigma.target != tau.source {
        return Err(Error::NotComposable(format!(
            "{} → {} then {} → {}",
            sigma.source, sigma.target, tau.source, tau.target
        )));
    }
    Ok(DualMorphism {
        source: sigma.source.clone(),
        target: tau.target.clone(),
        hat: tau.hat.then(&sigma.hat).then(sigma.source.representative()),
    })
}

/// The normal dual as a finite category.
///
/// The subobject order is containment of functors, `H(e; A) ⊆ H(f; A)` for
/// every `A`, and the inclusions are the transformations whose components
/// are all inclusion maps. Both are computed from the H-sets at
/// construction.
#[derive(Debug, Clone)]
pub struct NormalDual {
    n: usize,
    objects: Vec<HFunctor>,
    order: Vec<Vec<bool>>,
    inclusions: BTreeMap<(usize, usize), DualMorphism>,
}

impl NormalDual {
    pub fn new(n: usize) -> Result<Self> {
        ensure_min_size(n, 2)?;
        let objects = dual_objects(n)?;
        let subsets = powerset_objects(n)?;
        let h_sets: Vec<Vec<_>> = objects
            .iter()
            .map(|h| subsets.iter().map(|a| h_object(h, a)).collect())
            .collect();
        let order: Vec<Vec<bool>> = h_sets
            .iter()
            .map(|small| {
                h_sets
                    .iter()
                    .map(|big| small.iter().zip(big).all(|(x, y)| x.is_subset(y)))
                    .collect()
            })
            .collect();
        let mut inclusions = BTreeMap::new();
        for (i, a) in objects.iter().enumerate() {
            for (k, b) in objects.iter().enumerate() {
                if !order[i][k] {
                    continue;
                }
                // every component of an inclusion is the identity map
                let found: Vec<DualMorphism> = dual_hom(a, b)
                    .into_iter()
                    .filter(|m| h_sets[i].iter().flatten().all(|x| &m.hat.then(x) == x))
                    .collect();
                match <[DualMorphism; 1]>::try_from(found) {
                    Ok([m]) => {
                        inclusions.insert((i, k), m);
                    }
                    Err(found) => {
                        return Err(Error::NotASubobject(
                            format!("{a} ({} inclusion candidates)", found.len()),
                            b.to_string(),
                        ))
                    }
                }
            }
        }
        Ok(Self {
            n,
            objects,
            order,
            inclusions,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, h: &HFunctor) -> Option<usize> {
        self.objects.binary_search(h).ok()
    }
}

/// All `|π_e|^|π_f|` transformations `H(e; −) → H(f; −)`: maps constant on
/// the blocks of `π_f` with values in `Im ē`.
pub fn dual_hom(a: &HFunctor, b: &HFunctor) -> Vec<DualMorphism> {
    if a.n() != b.n() {
        return Vec::new();
    }
    let values = a.representative().image_points();
    let (k, m) = (b.kernel().num_blocks(), values.len());
    (0..m.pow(k as u32))
        .map(|mut code| {
            let mut per_block = vec![0u8; k];
            for slot in per_block.iter_mut().rev() {
                *slot = values[code % m];
                code /= m;
            }
            let hat = Transformation::new(
                (0..a.n() as u8)
                    .map(|x| per_block[b.kernel().block_of(x)])
                    .collect(),
            )
            .expect("values in range");
            DualMorphism {
                source: a.clone(),
                target: b.clone(),
                hat,
            }
        })
        .collect()
}

impl FiniteCategory for NormalDual {
    type Object = HFunctor;
    type Morphism = DualMorphism;

    fn objects(&self) -> &[HFunctor] {
        &self.objects
    }

    fn hom(&self, a: &HFunctor, b: &HFunctor) -> Vec<DualMorphism> {
        dual_hom(a, b)
    }

    fn domain(&self, f: &DualMorphism) -> HFunctor {
        f.source.clone()
    }

    fn codomain(&self, f: &DualMorphism) -> HFunctor {
        f.target.clone()
    }

    fn compose(&self, f: &DualMorphism, g: &DualMorphism) -> Result<DualMorphism> {
        compose_dual(f, g)
    }

    fn identity(&self, a: &HFunctor) -> DualMorphism {
        DualMorphism {
            source: a.clone(),
            target: a.clone(),
            hat: a.representative().clone(),
        }
    }

    fn leq(&self, a: &HFunctor, b: &HFunctor) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(i), Some(k)) => self.order[i][k],
            _ => false,
        }
    }

    fn inclusion(&self, a: &HFunctor, b: &HFunctor) -> Option<DualMorphism> {
        self.inclusions
            .get(&(self.index(a)?, self.index(b)?))
            .cloned()
    }

    fn object_index(&self, a: &HFunctor) -> Option<usize> {
        self.index(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::SetPartition;

    fn t(v: &[u8]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    fn h(e: &[u8]) -> HFunctor {
        HFunctor::of(&t(e)).unwrap()
    }

    fn s(members: &[u8]) -> Subset {
        Subset::new(3, members.iter().copied()).unwrap()
    }

    #[test]
    fn object_counts() {
        assert_eq!(dual_objects(3).unwrap().len(), 4);
        assert_eq!(dual_objects(4).unwrap().len(), 14);
        let top = &dual_objects(3).unwrap()[0];
        assert_eq!(top.kernel(), &SetPartition::coarsest(3));
        assert_eq!(top.representative(), &t(&[0, 0, 0]));
    }

    #[test]
    fn apply_example() {
        let m = DualMorphism::new(h(&[0, 0, 2]), h(&[0, 1, 1]), t(&[0, 2, 2])).unwrap();
        let map = dual_morphism_apply(&m, &s(&[0, 2])).unwrap();
        assert_eq!(map[&t(&[0, 0, 0])], t(&[0, 0, 0]));
        assert_eq!(map[&t(&[2, 2, 0])], t(&[2, 0, 0]));
    }

    #[test]
    fn membership_is_enforced() {
        // not constant on {1,2}
        assert!(DualMorphism::new(h(&[0, 0, 2]), h(&[0, 1, 1]), t(&[0, 2, 0])).is_err());
        // hits the block {0,1} twice
        assert!(DualMorphism::new(h(&[0, 0, 2]), h(&[0, 1, 1]), t(&[0, 1, 1])).is_err());
        // a carrier for another representative normalizes onto the canonical one
        let m = DualMorphism::new(h(&[0, 0, 2]), h(&[0, 1, 1]), t(&[1, 2, 2])).unwrap();
        assert_eq!(m.hat(), &t(&[0, 2, 2]));
    }

    #[test]
    fn hom_counts() {
        let objs = dual_objects(3).unwrap();
        for a in &objs {
            for b in &objs {
                let expected = a.kernel().num_blocks().pow(b.kernel().num_blocks() as u32);
                assert_eq!(dual_hom(a, b).len(), expected);
            }
        }
    }

    #[test]
    fn apply_lands_in_the_target_everywhere() {
        let cat = NormalDual::new(3).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                for m in dual_hom(a, b) {
                    for c in powerset_objects(3).unwrap() {
                        dual_morphism_apply(&m, &c).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn composition_matches_componentwise_composition() {
        let cat = NormalDual::new(3).unwrap();
        let subsets = powerset_objects(3).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                for sigma in dual_hom(a, b) {
                    for c in cat.objects() {
                        for tau in dual_hom(b, c) {
                            let both = compose_dual(&sigma, &tau).unwrap();
                            for x in &subsets {
                                let (first, second) = (sigma.apply(x), tau.apply(x));
                                for (a, va) in both.apply(x) {
                                    assert_eq!(second[&first[&a]], va);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inclusion_test_matches_extensional_inclusions() {
        let cat = NormalDual::new(3).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                let flagged: Vec<_> = dual_hom(a, b)
                    .into_iter()
                    .filter(dual_inclusion_test)
                    .collect();
                match cat.inclusion(a, b) {
                    Some(j) => assert_eq!(flagged, vec![j]),
                    None => assert!(flagged.is_empty()),
                }
                // containment runs opposite to refinement of kernels
                assert_eq!(cat.leq(a, b), b.kernel().refines(a.kernel()).unwrap());
            }
        }
        let id = cat.identity(&h(&[0, 0, 2]));
        assert!(dual_inclusion_test(&id));
    }
}
