//! The category of partitions.
//!
//! An object stands for the set of all functions from the blocks of a
//! non-identity partition `π` into the base set. A morphism `π̄₁ → π̄₂` is
//! precomposition with a block map `η: π₂ → π₁`, stored as an array indexed
//! by the blocks of `π₂` whose entries index blocks of `π₁`. Block indices
//! follow the canonical block order of [`SetPartition`].
//!
//! Objects are ordered by reverse refinement: `π̄₁ ≤ π̄₂` iff `π₂` refines
//! `π₁`, and the inclusion sends each block of `π₂` to the block of `π₁`
//! containing it.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::category::{
    Cone, ConeOf, FiniteCategory, NormalCategory, NormalFactorization, TieBreak,
};
use crate::error::{ensure_min_size, Error, Result};
use crate::partition::{enumerate_partitions, SetPartition};

/// An object of the partition category, keyed by a non-identity partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PartitionObject(SetPartition);

impl PartitionObject {
    pub fn new(partition: SetPartition) -> Result<Self> {
        if partition.is_identity() {
            return Err(Error::InvalidPartition(format!(
                "{partition} is the identity partition"
            )));
        }
        Ok(Self(partition))
    }

    pub fn partition(&self) -> &SetPartition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn num_blocks(&self) -> usize {
        self.0.num_blocks()
    }
}

impl std::fmt::Debug for PartitionObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::fmt::Display for PartitionObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'de> Deserialize<'de> for PartitionObject {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::new(SetPartition::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionMorphism {
    source: PartitionObject,
    target: PartitionObject,
    eta: Vec<u8>,
}

impl PartitionMorphism {
    pub fn new(source: PartitionObject, target: PartitionObject, eta: Vec<u8>) -> Result<Self> {
        if source.n() != target.n() {
            return Err(Error::SizeMismatch {
                left: source.n(),
                right: target.n(),
            });
        }
        if eta.len() != target.num_blocks() {
            return Err(Error::InvalidBlockMap(format!(
                "{} entries for {} target blocks",
                eta.len(),
                target.num_blocks()
            )));
        }
        if let Some(&i) = eta.iter().find(|&&i| i as usize >= source.num_blocks()) {
            return Err(Error::InvalidBlockMap(format!(
                "entry {i} but the source has {} blocks",
                source.num_blocks()
            )));
        }
        Ok(Self {
            source,
            target,
            eta,
        })
    }

    pub fn source(&self) -> &PartitionObject {
        &self.source
    }

    pub fn target(&self) -> &PartitionObject {
        &self.target
    }

    /// The block map `η: π₂ → π₁`.
    pub fn eta(&self) -> &[u8] {
        &self.eta
    }

    /// Block of the source partition that block `j` of the target goes to.
    pub fn eta_at(&self, j: usize) -> usize {
        self.eta[j] as usize
    }

    /// Whether this is the designated inclusion of its source in its target.
    pub fn is_inclusion(&self) -> bool {
        object_leq(&self.source, &self.target)
            && inclusion_map(&self.source, &self.target) == self.eta
    }

    /// `(α) P_η = η α`: `alpha` lists a point for each source block, the
    /// result a point for each target block.
    pub fn act(&self, alpha: &[u8]) -> Vec<u8> {
        self.eta.iter().map(|&i| alpha[i as usize]).collect()
    }
}

impl<'de> Deserialize<'de> for PartitionMorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            source: PartitionObject,
            target: PartitionObject,
            eta: Vec<u8>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Self::new(raw.source, raw.target, raw.eta).map_err(D::Error::custom)
    }
}

/// `a ≤ b` iff `b`'s partition refines `a`'s.
pub fn object_leq(a: &PartitionObject, b: &PartitionObject) -> bool {
    a.n() == b.n() && b.0.refines_unchecked(&a.0)
}

fn inclusion_map(a: &PartitionObject, b: &PartitionObject) -> Vec<u8> {
    (0..b.num_blocks())
        .map(|j| a.0.block_of(b.0.block_min(j)) as u8)
        .collect()
}

/// All `|π₁|^|π₂|` morphisms `a → b`, block maps in lexicographic order.
pub fn hom(a: &PartitionObject, b: &PartitionObject) -> Vec<PartitionMorphism> {
    if a.n() != b.n() {
        return Vec::new();
    }
    let (k1, k2) = (a.num_blocks(), b.num_blocks());
    let total = k1.pow(k2 as u32);
    (0..total)
        .map(|mut code| {
            let mut eta = vec![0u8; k2];
            for slot in eta.iter_mut().rev() {
                *slot = (code % k1) as u8;
                code /= k1;
            }
            PartitionMorphism {
                source: a.clone(),
                target: b.clone(),
                eta,
            }
        })
        .collect()
}

/// `f` then `g`: each block of `g`'s target goes through `g`'s block map
/// and then `f`'s.
pub fn compose_morphisms(
    f: &PartitionMorphism,
    g: &PartitionMorphism,
) -> Result<PartitionMorphism> {
    if f.target != g.source {
        return Err(Error::NotComposable(format!(
            "{} → {} then {} → {}",
            f.source, f.target, g.source, g.target
        )));
    }
    Ok(PartitionMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        eta: g.eta.iter().map(|&j| f.eta[j as usize]).collect(),
    })
}

pub fn identity(a: &PartitionObject) -> PartitionMorphism {
    PartitionMorphism {
        source: a.clone(),
        target: a.clone(),
        eta: (0..a.num_blocks() as u8).collect(),
    }
}

pub fn inclusion(a: &PartitionObject, b: &PartitionObject) -> Result<PartitionMorphism> {
    if !object_leq(a, b) {
        return Err(Error::NotASubobject(a.to_string(), b.to_string()));
    }
    Ok(PartitionMorphism {
        source: a.clone(),
        target: b.clone(),
        eta: inclusion_map(a, b),
    })
}

/// The retraction `b → a` for `a ≤ b`: each block of `a` goes to the block
/// of `b` holding its least element.
pub fn retraction(a: &PartitionObject, b: &PartitionObject) -> Result<PartitionMorphism> {
    if !object_leq(a, b) {
        return Err(Error::NotASubobject(a.to_string(), b.to_string()));
    }
    Ok(PartitionMorphism {
        source: b.clone(),
        target: a.clone(),
        eta: (0..a.num_blocks())
            .map(|i| b.0.block_of(a.0.block_min(i)) as u8)
            .collect(),
    })
}

/// True iff the block map is a bijection.
pub fn is_isomorphism(f: &PartitionMorphism) -> bool {
    if f.source.num_blocks() != f.target.num_blocks() {
        return false;
    }
    let mut hit = vec![false; f.source.num_blocks()];
    f.eta
        .iter()
        .all(|&i| !std::mem::replace(&mut hit[i as usize], true))
}

/// The intermediate partitions of a normal factorization, alongside the
/// factors themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionFactorization {
    /// Target blocks merged when they share an image under `η`.
    pub sigma: PartitionObject,
    /// The source partition with every block missed by `η` merged into the
    /// distinguished block.
    pub gamma: PartitionObject,
    /// Source blocks hit by `η`.
    pub image_blocks: Vec<usize>,
    /// Union of the source blocks missed by `η`.
    pub leftover: Vec<u8>,
    /// The image block that absorbs the leftover.
    pub distinguished: usize,
    pub factors: NormalFactorization<PartitionMorphism>,
}

/// Factors `f: π̄₁ → π̄₂` as retraction `π̄₁ → γ̄`, isomorphism `γ̄ → σ̄` and
/// inclusion `σ̄ → π̄₂`.
///
/// `tie` picks the distinguished image block: the one with the least or the
/// greatest minimum element.
pub fn normal_factorize(f: &PartitionMorphism, tie: TieBreak) -> PartitionFactorization {
    let pi1 = &f.source.0;
    let pi2 = &f.target.0;

    let sigma_labels: Vec<u8> = (0..pi2.n() as u8).map(|x| f.eta[pi2.block_of(x)]).collect();
    let sigma = SetPartition::from_labels(&sigma_labels).expect("non-empty");

    let mut used = vec![false; pi1.num_blocks()];
    for &i in &f.eta {
        used[i as usize] = true;
    }
    let image_blocks: Vec<usize> = (0..used.len()).filter(|&i| used[i]).collect();
    let distinguished = match tie {
        TieBreak::Least => image_blocks[0],
        TieBreak::Greatest => *image_blocks.last().expect("η has a non-empty image"),
    };
    let leftover: Vec<u8> = (0..pi1.n() as u8)
        .filter(|&x| !used[pi1.block_of(x)])
        .collect();
    let gamma_labels: Vec<usize> = (0..pi1.n() as u8)
        .map(|x| {
            let i = pi1.block_of(x);
            if used[i] {
                i
            } else {
                distinguished
            }
        })
        .collect();
    let gamma = SetPartition::from_labels(&gamma_labels).expect("non-empty");

    // each γ-block contains exactly one image block of π₁
    let zeta: Vec<u8> = (0..gamma.num_blocks())
        .map(|c| {
            gamma
                .block(c)
                .into_iter()
                .map(|x| pi1.block_of(x))
                .find(|&i| used[i])
                .expect("every γ-block holds an image block") as u8
        })
        .collect();
    let u: Vec<u8> = (0..sigma.num_blocks())
        .map(|s| {
            let i = f.eta[pi2.block_of(sigma.block_min(s))] as usize;
            gamma.block_of(pi1.block_min(i)) as u8
        })
        .collect();
    let vartheta: Vec<u8> = (0..pi2.num_blocks())
        .map(|j| sigma.block_of(pi2.block_min(j)) as u8)
        .collect();

    let sigma = PartitionObject::new(sigma).expect("σ is coarser than a non-identity partition");
    let gamma = PartitionObject::new(gamma).expect("γ is coarser than a non-identity partition");
    let retraction = PartitionMorphism {
        source: f.source.clone(),
        target: gamma.clone(),
        eta: zeta,
    };
    let isomorphism = PartitionMorphism {
        source: gamma.clone(),
        target: sigma.clone(),
        eta: u,
    };
    let inclusion = PartitionMorphism {
        source: sigma.clone(),
        target: f.target.clone(),
        eta: vartheta,
    };
    let epimorphic_part = compose_morphisms(&retraction, &isomorphism).expect("factors chain");
    debug_assert_eq!(
        compose_morphisms(&epimorphic_part, &inclusion).as_ref(),
        Ok(f),
        "factorization recomposes"
    );
    PartitionFactorization {
        sigma,
        gamma,
        image_blocks,
        leftover,
        distinguished,
        factors: NormalFactorization {
            retraction,
            isomorphism,
            inclusion,
            epimorphic_part,
        },
    }
}

/// All non-identity partitions of an `n`-point set as a normal category.
#[derive(Debug, Clone)]
pub struct PartitionCategory {
    n: usize,
    objects: Vec<PartitionObject>,
}

impl PartitionCategory {
    pub fn new(n: usize) -> Result<Self> {
        ensure_min_size(n, 2)?;
        let objects = enumerate_partitions(n, true)?
            .into_iter()
            .map(PartitionObject)
            .collect();
        Ok(Self { n, objects })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn object(&self, partition: &SetPartition) -> Option<&PartitionObject> {
        self.objects.iter().find(|o| &o.0 == partition)
    }

    /// The normal cone to `p` whose component at `q` sends each block of `p`
    /// to the block of `q` holding its least element.
    pub fn identity_cone_at(&self, p: &PartitionObject) -> Result<ConeOf<Self>> {
        let components = self
            .objects
            .iter()
            .map(|q| PartitionMorphism {
                source: q.clone(),
                target: p.clone(),
                eta: (0..p.num_blocks())
                    .map(|i| q.0.block_of(p.0.block_min(i)) as u8)
                    .collect(),
            })
            .collect();
        Cone::new(self, p.clone(), components)
    }
}

impl FiniteCategory for PartitionCategory {
    type Object = PartitionObject;
    type Morphism = PartitionMorphism;

    fn objects(&self) -> &[PartitionObject] {
        &self.objects
    }

    fn hom(&self, a: &PartitionObject, b: &PartitionObject) -> Vec<PartitionMorphism> {
        hom(a, b)
    }

    fn domain(&self, f: &PartitionMorphism) -> PartitionObject {
        f.source.clone()
    }

    fn codomain(&self, f: &PartitionMorphism) -> PartitionObject {
        f.target.clone()
    }

    fn compose(&self, f: &PartitionMorphism, g: &PartitionMorphism) -> Result<PartitionMorphism> {
        compose_morphisms(f, g)
    }

    fn identity(&self, a: &PartitionObject) -> PartitionMorphism {
        identity(a)
    }

    fn leq(&self, a: &PartitionObject, b: &PartitionObject) -> bool {
        object_leq(a, b)
    }

    fn inclusion(&self, a: &PartitionObject, b: &PartitionObject) -> Option<PartitionMorphism> {
        inclusion(a, b).ok()
    }

    fn object_index(&self, a: &PartitionObject) -> Option<usize> {
        self.objects.binary_search(a).ok()
    }
}

impl NormalCategory for PartitionCategory {
    fn normal_factorization_with(
        &self,
        f: &PartitionMorphism,
        tie: TieBreak,
    ) -> Result<NormalFactorization<PartitionMorphism>> {
        Ok(normal_factorize(f, tie).factors)
    }

    fn identity_cone(&self, c: &PartitionObject) -> Result<ConeOf<Self>> {
        self.identity_cone_at(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{
        cone_check, cone_product, epimorphic_part, factorization_violations,
        is_isomorphism as generic_iso,
    };

    fn obj(blocks: &[&[u8]]) -> PartitionObject {
        PartitionObject::new(
            SetPartition::from_blocks(&blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>())
                .unwrap(),
        )
        .unwrap()
    }

    fn mor(source: &PartitionObject, target: &PartitionObject, eta: &[u8]) -> PartitionMorphism {
        PartitionMorphism::new(source.clone(), target.clone(), eta.to_vec()).unwrap()
    }

    /// Every function from the blocks of `p` into the base set.
    fn functions_on(p: &PartitionObject) -> Vec<Vec<u8>> {
        let (k, n) = (p.num_blocks(), p.n());
        (0..n.pow(k as u32))
            .map(|mut code| {
                let mut alpha = vec![0u8; k];
                for slot in alpha.iter_mut().rev() {
                    *slot = (code % n) as u8;
                    code /= n;
                }
                alpha
            })
            .collect()
    }

    #[test]
    fn identity_partition_is_not_an_object() {
        assert!(PartitionObject::new(SetPartition::identity(3)).is_err());
        assert_eq!(PartitionCategory::new(3).unwrap().objects().len(), 4);
        assert_eq!(PartitionCategory::new(4).unwrap().objects().len(), 14);
        assert_eq!(PartitionCategory::new(2).unwrap().objects().len(), 1);
        assert!(PartitionCategory::new(1).is_err());
    }

    #[test]
    fn order_examples() {
        let top = obj(&[&[0, 1, 2]]);
        let a = obj(&[&[0, 1], &[2]]);
        let b = obj(&[&[0, 2], &[1]]);
        assert!(object_leq(&a, &a));
        assert!(object_leq(&top, &a));
        assert!(!object_leq(&a, &top));
        assert!(!object_leq(&a, &b));
    }

    #[test]
    fn hom_set_sizes() {
        let top = obj(&[&[0, 1, 2]]);
        let a = obj(&[&[0, 1], &[2]]);
        let c = obj(&[&[0], &[1, 2]]);
        assert_eq!(hom(&a, &top).len(), 2);
        for b in PartitionCategory::new(3).unwrap().objects() {
            assert_eq!(hom(&top, b).len(), 1);
        }
        assert_eq!(hom(&a, &c).len(), 4);
    }

    #[test]
    fn composition_examples() {
        let top = obj(&[&[0, 1, 2]]);
        let a = obj(&[&[0, 1], &[2]]);
        let c = obj(&[&[0], &[1, 2]]);
        let f = mor(&a, &top, &[0]);
        let g = mor(&top, &c, &[0, 0]);
        assert_eq!(compose_morphisms(&f, &g).unwrap(), mor(&a, &c, &[0, 0]));
        assert_eq!(compose_morphisms(&identity(&a), &f).unwrap(), f);
        assert!(compose_morphisms(&g, &g).is_err());
        let j1 = inclusion(&top, &a).unwrap();
        let fine = obj(&[&[0, 1], &[2, 3]]);
        let finer = obj(&[&[0, 1], &[2], &[3]]);
        let coarse = obj(&[&[0, 1, 2, 3]]);
        let j = compose_morphisms(
            &inclusion(&coarse, &fine).unwrap(),
            &inclusion(&fine, &finer).unwrap(),
        )
        .unwrap();
        assert_eq!(j, inclusion(&coarse, &finer).unwrap());
        assert!(j1.is_inclusion());
    }

    #[test]
    fn block_maps_act_like_precomposition() {
        // (α) P_f P_g must equal (α) P_{f·g} on every function α
        let cat = PartitionCategory::new(3).unwrap();
        let objs = cat.objects();
        for a in objs {
            for b in objs {
                for f in hom(a, b) {
                    for alpha in functions_on(a) {
                        let acted = f.act(&alpha);
                        for (j, x) in acted.iter().enumerate() {
                            assert_eq!(*x, alpha[f.eta_at(j)]);
                        }
                    }
                    for c in objs {
                        for g in hom(b, c) {
                            let fg = compose_morphisms(&f, &g).unwrap();
                            for alpha in functions_on(a) {
                                assert_eq!(fg.act(&alpha), g.act(&f.act(&alpha)));
                            }
                        }
                    }
                    // isomorphisms are exactly the operators that are bijections
                    let images: std::collections::HashSet<Vec<u8>> =
                        functions_on(a).iter().map(|alpha| f.act(alpha)).collect();
                    let bijective =
                        a.num_blocks() == b.num_blocks() && images.len() == functions_on(b).len();
                    assert_eq!(is_isomorphism(&f), bijective);
                }
            }
        }
    }

    #[test]
    fn inclusion_and_retraction_examples() {
        let top = obj(&[&[0, 1, 2]]);
        let a = obj(&[&[0, 1], &[2]]);
        assert_eq!(inclusion(&a, &a).unwrap(), identity(&a));
        assert_eq!(retraction(&a, &a).unwrap(), identity(&a));
        assert_eq!(inclusion(&top, &a).unwrap().eta(), &[0, 0]);
        assert_eq!(retraction(&top, &a).unwrap().eta(), &[0]);
        assert!(matches!(inclusion(&a, &top), Err(Error::NotASubobject(..))));
        assert!(matches!(
            retraction(&a, &top),
            Err(Error::NotASubobject(..))
        ));
    }

    #[test]
    fn retraction_law_holds_for_every_comparable_pair() {
        for n in 3..=4 {
            let cat = PartitionCategory::new(n).unwrap();
            for a in cat.objects() {
                for b in cat.objects() {
                    if object_leq(a, b) {
                        let j = inclusion(a, b).unwrap();
                        let r = retraction(a, b).unwrap();
                        assert_eq!(compose_morphisms(&j, &r).unwrap(), identity(a));
                    }
                }
            }
        }
    }

    #[test]
    fn flagged_inclusions_are_exactly_the_designated_ones() {
        let cat = PartitionCategory::new(4).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                let flagged: Vec<_> = hom(a, b).into_iter().filter(|f| f.is_inclusion()).collect();
                match inclusion(a, b) {
                    Ok(j) => assert_eq!(flagged, vec![j]),
                    Err(_) => assert!(flagged.is_empty()),
                }
            }
        }
    }

    #[test]
    fn worked_factorization() {
        let a = obj(&[&[0, 1], &[2]]);
        let f = mor(&a, &a, &[0, 0]);
        let fact = normal_factorize(&f, TieBreak::Least);
        let top = obj(&[&[0, 1, 2]]);
        assert_eq!(fact.sigma, top);
        assert_eq!(fact.image_blocks, vec![0]);
        assert_eq!(fact.leftover, vec![2]);
        assert_eq!(fact.distinguished, 0);
        assert_eq!(fact.gamma, top);
        assert_eq!(fact.factors.retraction, mor(&a, &top, &[0]));
        assert_eq!(fact.factors.isomorphism, mor(&top, &top, &[0]));
        assert_eq!(fact.factors.inclusion, inclusion(&top, &a).unwrap());
        assert_eq!(
            compose_morphisms(&fact.factors.epimorphic_part, &fact.factors.inclusion).unwrap(),
            f
        );
        assert_eq!(fact.factors.epimorphic_part, mor(&a, &top, &[0]));
    }

    #[test]
    fn isomorphisms_factor_trivially() {
        let a = obj(&[&[0, 1], &[2]]);
        let swap = mor(&a, &a, &[1, 0]);
        let fact = normal_factorize(&swap, TieBreak::Least);
        assert_eq!(fact.factors.retraction, identity(&a));
        assert_eq!(fact.factors.inclusion, identity(&a));
        assert_eq!(fact.factors.isomorphism, swap);
        assert_eq!(fact.factors.epimorphic_part, swap);
    }

    #[test]
    fn inclusions_have_identity_epimorphic_part() {
        let cat = PartitionCategory::new(4).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                if let Ok(j) = inclusion(a, b) {
                    assert_eq!(epimorphic_part(&cat, &j).unwrap(), identity(a));
                }
            }
        }
    }

    #[test]
    fn every_morphism_factors_normally() {
        for n in 3..=4 {
            let cat = PartitionCategory::new(n).unwrap();
            for a in cat.objects() {
                for b in cat.objects() {
                    for f in hom(a, b) {
                        for tie in [TieBreak::Least, TieBreak::Greatest] {
                            let fact = normal_factorize(&f, tie);
                            assert!(!fact.gamma.partition().is_identity());
                            assert!(!fact.sigma.partition().is_identity());
                            assert!(is_isomorphism(&fact.factors.isomorphism));
                            if n == 3 {
                                let bad = factorization_violations(&cat, &f, &fact.factors);
                                assert!(bad.is_empty(), "{f:?}: {bad:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn block_bijection_matches_inverse_search() {
        let cat = PartitionCategory::new(3).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                for f in hom(a, b) {
                    assert_eq!(is_isomorphism(&f), generic_iso(&cat, &f));
                }
            }
        }
        let top = obj(&[&[0, 1, 2]]);
        let a = obj(&[&[0, 1], &[2]]);
        assert!(is_isomorphism(&identity(&a)));
        assert!(!is_isomorphism(&mor(&a, &a, &[0, 0])));
        assert!(!is_isomorphism(&mor(&a, &top, &[1])));
    }

    #[test]
    fn identity_cones() {
        let cat = PartitionCategory::new(3).unwrap();
        for p in cat.objects() {
            let cone = cat.identity_cone_at(p).unwrap();
            assert_eq!(cone.component_at(&cat, p), Some(&identity(p)));
            assert!(cone_check(&cat, &cone).unwrap());
            assert!(cone.is_normal());
            assert_eq!(cone_product(&cat, &cone, &cone).unwrap(), cone);
        }
    }

    #[test]
    fn morphism_encoding() {
        let a = obj(&[&[0, 1], &[2]]);
        let top = obj(&[&[0, 1, 2]]);
        let f = mor(&a, &top, &[1]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"source":[[0,1],[2]],"target":[[0,1,2]],"eta":[1]}"#
        );
        assert_eq!(serde_json::from_str::<PartitionMorphism>(&json).unwrap(), f);
        assert!(serde_json::from_str::<PartitionMorphism>(
            r#"{"source":[[0,1],[2]],"target":[[0,1,2]],"eta":[2]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<PartitionMorphism>(
            r#"{"source":[[0],[1],[2]],"target":[[0,1,2]],"eta":[0]}"#
        )
        .is_err());
    }
}
