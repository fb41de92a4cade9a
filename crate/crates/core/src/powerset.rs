//! The category of non-empty proper subsets of `{0, ..., n-1}` with all
//! functions between them, its principal cones and the H-functors that make
//! up its normal dual.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::category::{
    h_set, Cone, ConeOf, FiniteCategory, NormalCategory, NormalFactorization, TieBreak,
};
use crate::error::{ensure_min_size, ensure_same_size, Error, Result};
use crate::partition::SetPartition;
use crate::subset::Subset;
use crate::transformation::{enumerate_singular, min_idempotent, Transformation};

/// All non-empty proper subsets, by size and then lexicographically.
pub fn powerset_objects(n: usize) -> Result<Vec<Subset>> {
    ensure_min_size(n, 2)?;
    let mut out: Vec<Subset> = (1u32..(1 << n) - 1)
        .map(|mask| Subset::new(n, (0..n as u8).filter(|&x| mask & (1 << x) != 0)).expect("proper"))
        .collect();
    out.sort();
    Ok(out)
}

/// A function `source → target`; `map[i]` is the image of the `i`-th member
/// of `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetMorphism {
    source: Subset,
    target: Subset,
    map: Vec<u8>,
}

impl SetMorphism {
    pub fn new(source: Subset, target: Subset, map: Vec<u8>) -> Result<Self> {
        ensure_same_size(source.n(), target.n())?;
        if map.len() != source.len() {
            return Err(Error::InvalidSubset(format!(
                "{} values for a domain of {} points",
                map.len(),
                source.len()
            )));
        }
        if let Some(&y) = map.iter().find(|&&y| !target.contains(y)) {
            return Err(Error::InvalidSubset(format!("{y} lies outside {target}")));
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    /// `a` restricted to `source`, landing in `target`.
    pub fn restrict(a: &Transformation, source: &Subset, target: &Subset) -> Result<Self> {
        ensure_same_size(a.n(), source.n())?;
        Self::new(
            source.clone(),
            target.clone(),
            source.members().iter().map(|&x| a.apply(x)).collect(),
        )
    }

    pub fn source(&self) -> &Subset {
        &self.source
    }

    pub fn target(&self) -> &Subset {
        &self.target
    }

    pub fn map(&self) -> &[u8] {
        &self.map
    }

    /// The value at `x`, or `None` off the domain.
    pub fn apply(&self, x: u8) -> Option<u8> {
        self.source.position(x).map(|i| self.map[i])
    }

    pub fn image_points(&self) -> Vec<u8> {
        let mut pts = self.map.clone();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    pub fn is_injective(&self) -> bool {
        self.image_points().len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_points() == self.target.members()
    }
}

fn set_hom(a: &Subset, b: &Subset) -> Vec<SetMorphism> {
    let (k, m) = (a.len(), b.len());
    (0..m.pow(k as u32))
        .map(|mut code| {
            let mut map = vec![0u8; k];
            for slot in map.iter_mut().rev() {
                *slot = b.members()[code % m];
                code /= m;
            }
            SetMorphism {
                source: a.clone(),
                target: b.clone(),
                map,
            }
        })
        .collect()
}

fn set_compose(f: &SetMorphism, g: &SetMorphism) -> Result<SetMorphism> {
    if f.target != g.source {
        return Err(Error::NotComposable(format!(
            "{} → {} then {} → {}",
            f.source, f.target, g.source, g.target
        )));
    }
    Ok(SetMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        map: f
            .map
            .iter()
            .map(|&y| g.apply(y).expect("value lies in the target"))
            .collect(),
    })
}

fn set_inclusion(a: &Subset, b: &Subset) -> SetMorphism {
    SetMorphism {
        source: a.clone(),
        target: b.clone(),
        map: a.members().to_vec(),
    }
}

/// `f = e u j`: `e` sends each fibre of `f` to its least (or greatest)
/// point, `u` is the induced bijection onto the image, `j` the inclusion of
/// the image in the target.
pub fn normal_factorize_set(f: &SetMorphism, tie: TieBreak) -> NormalFactorization<SetMorphism> {
    let n = f.source.n();
    let mut rep: BTreeMap<u8, u8> = BTreeMap::new();
    for (&x, &y) in f.source.members().iter().zip(&f.map) {
        rep.entry(y)
            .and_modify(|r| {
                if tie == TieBreak::Greatest {
                    *r = x
                }
            })
            .or_insert(x);
    }
    let reps = Subset::new(n, rep.values().copied()).expect("subset of a proper subset");
    let image = Subset::new(n, rep.keys().copied()).expect("subset of a proper subset");
    let retraction = SetMorphism {
        source: f.source.clone(),
        target: reps.clone(),
        map: f.map.iter().map(|y| rep[y]).collect(),
    };
    let isomorphism = SetMorphism {
        source: reps.clone(),
        target: image.clone(),
        map: reps
            .members()
            .iter()
            .map(|&x| f.apply(x).expect("representative in domain"))
            .collect(),
    };
    let inclusion = set_inclusion(&image, &f.target);
    let epimorphic_part = set_compose(&retraction, &isomorphism).expect("factors chain");
    debug_assert_eq!(set_compose(&epimorphic_part, &inclusion).as_ref(), Ok(f));
    NormalFactorization {
        retraction,
        isomorphism,
        inclusion,
        epimorphic_part,
    }
}

#[derive(Debug, Clone)]
pub struct PowersetCategory {
    n: usize,
    objects: Vec<Subset>,
}

impl PowersetCategory {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            objects: powerset_objects(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `ρ^a`: vertex `Im a`, component at `A` the restriction of `a` to `A`.
    pub fn principal_cone(&self, a: &Transformation) -> Result<ConeOf<Self>> {
        ensure_same_size(self.n, a.n())?;
        let vertex = a.image()?;
        let components = self
            .objects
            .iter()
            .map(|c| SetMorphism::restrict(a, c, &vertex))
            .collect::<Result<Vec<_>>>()?;
        Cone::new(self, vertex, components)
    }

    /// The map whose principal cone is `cone`, read off the components at
    /// the singletons. `None` when the cone is not principal.
    pub fn principal_of(&self, cone: &ConeOf<Self>) -> Option<Transformation> {
        let images = (0..self.n as u8)
            .map(|x| {
                let single = Subset::new(self.n, [x]).ok()?;
                cone.component_at(self, &single)?.apply(x)
            })
            .collect::<Option<Vec<u8>>>()?;
        let a = Transformation::singular(images).ok()?;
        (self.principal_cone(&a).ok()? == *cone).then_some(a)
    }
}

impl FiniteCategory for PowersetCategory {
    type Object = Subset;
    type Morphism = SetMorphism;

    fn objects(&self) -> &[Subset] {
        &self.objects
    }

    fn hom(&self, a: &Subset, b: &Subset) -> Vec<SetMorphism> {
        if a.n() != b.n() {
            return Vec::new();
        }
        set_hom(a, b)
    }

    fn domain(&self, f: &SetMorphism) -> Subset {
        f.source.clone()
    }

    fn codomain(&self, f: &SetMorphism) -> Subset {
        f.target.clone()
    }

    fn compose(&self, f: &SetMorphism, g: &SetMorphism) -> Result<SetMorphism> {
        set_compose(f, g)
    }

    fn identity(&self, a: &Subset) -> SetMorphism {
        set_inclusion(a, a)
    }

    fn leq(&self, a: &Subset, b: &Subset) -> bool {
        a.is_subset_of(b)
    }

    fn inclusion(&self, a: &Subset, b: &Subset) -> Option<SetMorphism> {
        a.is_subset_of(b).then(|| set_inclusion(a, b))
    }

    fn object_index(&self, a: &Subset) -> Option<usize> {
        self.objects.binary_search(a).ok()
    }
}

impl NormalCategory for PowersetCategory {
    fn normal_factorization_with(
        &self,
        f: &SetMorphism,
        tie: TieBreak,
    ) -> Result<NormalFactorization<SetMorphism>> {
        Ok(normal_factorize_set(f, tie))
    }

    /// `ρ^e` for the idempotent fixing `c` and sending the rest to `min c`.
    fn identity_cone(&self, c: &Subset) -> Result<ConeOf<Self>> {
        let low = c.members()[0];
        let e = Transformation::new(
            (0..self.n as u8)
                .map(|x| if c.contains(x) { x } else { low })
                .collect(),
        )?;
        self.principal_cone(&e)
    }
}

/// The H-functor `H(e; −)`, keyed by the kernel of `e`.
///
/// `representative` is the idempotent with that kernel sending each block to
/// its least element; everything computed from an `HFunctor` is independent
/// of that choice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HFunctor {
    kernel: SetPartition,
    #[serde(skip)]
    representative: Transformation,
}

impl HFunctor {
    pub fn new(kernel: SetPartition) -> Result<Self> {
        if kernel.is_identity() {
            return Err(Error::InvalidPartition(format!(
                "{kernel} is the identity partition"
            )));
        }
        let representative = min_idempotent(&kernel);
        Ok(Self {
            kernel,
            representative,
        })
    }

    /// The H-functor of an idempotent.
    pub fn of(e: &Transformation) -> Result<Self> {
        if !e.is_idempotent() {
            return Err(Error::InvalidTransformation(format!(
                "{e} is not idempotent"
            )));
        }
        Self::new(e.kernel())
    }

    pub fn kernel(&self) -> &SetPartition {
        &self.kernel
    }

    pub fn representative(&self) -> &Transformation {
        &self.representative
    }

    pub fn n(&self) -> usize {
        self.kernel.n()
    }
}

impl std::fmt::Display for HFunctor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H({})", self.kernel)
    }
}

/// `H(e; A) = { a ∈ T_X : π_e ⊆ π_a, Im a ⊆ A }`, filtered from all of `T_X`.
pub fn h_object(h: &HFunctor, subset: &Subset) -> BTreeSet<Transformation> {
    enumerate_singular(h.n())
        .expect("n ≥ 2")
        .into_iter()
        .filter(|a| in_h_object(h, subset, a))
        .collect()
}

pub(crate) fn in_h_object(h: &HFunctor, subset: &Subset, a: &Transformation) -> bool {
    h.kernel.refines_unchecked(&a.kernel()) && a.images().iter().all(|&y| subset.contains(y))
}

/// `H(e; A)` built from cones: `{ ρ^e ∗ f° : f: Im e → A }`, each cone read
/// back as the map it is principal for. `e` may be any idempotent.
pub fn h_object_via_cones(
    cat: &PowersetCategory,
    e: &Transformation,
    subset: &Subset,
) -> Result<BTreeSet<Transformation>> {
    if !e.is_idempotent() {
        return Err(Error::InvalidTransformation(format!(
            "{e} is not idempotent"
        )));
    }
    let rho = cat.principal_cone(e)?;
    h_set(cat, &rho, subset)?
        .iter()
        .map(|cone| {
            cat.principal_of(cone).ok_or_else(|| {
                Error::MalformedCone(format!("non-principal cone at {:?}", cone.vertex()))
            })
        })
        .collect()
}

/// `H(e; g)`: `a ↦ a` followed by `g`.
pub fn h_morphism(h: &HFunctor, g: &SetMorphism) -> BTreeMap<Transformation, Transformation> {
    h_object(h, g.source())
        .into_iter()
        .map(|a| {
            let ag = Transformation::new(
                a.images()
                    .iter()
                    .map(|&y| g.apply(y).expect("Im a lies in the domain of g"))
                    .collect(),
            )
            .expect("values in range");
            (a, ag)
        })
        .collect()
}

/// Equality of H-functors, decided on kernels.
pub fn h_equal(h1: &HFunctor, h2: &HFunctor) -> bool {
    h1.kernel == h2.kernel
}

/// Equality of H-functors decided by comparing every H-set.
pub fn h_equal_extensional(cat: &PowersetCategory, h1: &HFunctor, h2: &HFunctor) -> bool {
    cat.objects()
        .iter()
        .all(|a| h_object(h1, a) == h_object(h2, a))
}
