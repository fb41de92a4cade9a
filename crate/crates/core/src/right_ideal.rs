//! The category of principal right ideals `eS` of the singular semigroup,
//! with the left translations `λ(e, v, f): eS → fS`, `v ∈ fSe`.
//!
//! Objects are keyed by the kernel of `e`, since `eS = e'S` exactly when
//! the kernels agree. Carriers are normalized to `v ē` on construction.

use std::sync::Arc;

use serde::Serialize;

use crate::category::{
    Cone, ConeOf, FiniteCategory, NormalCategory, NormalFactorization, TieBreak,
};
use crate::dual::check_carrier;
use crate::error::{ensure_min_size, Error, Result};
use crate::green::{green_l, green_r};
use crate::partition::{enumerate_partitions, SetPartition};
use crate::transformation::{enumerate_singular, min_idempotent, Transformation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RightIdealObject {
    kernel: SetPartition,
    #[serde(skip)]
    representative: Transformation,
}

impl RightIdealObject {
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

    /// The ideal `eS` of an idempotent `e`.
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

impl std::fmt::Display for RightIdealObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}S", self.representative)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LambdaMorphism {
    #[serde(rename = "source_kernel", serialize_with = "kernel_only")]
    source: RightIdealObject,
    carrier: Transformation,
    #[serde(rename = "target_kernel", serialize_with = "kernel_only")]
    target: RightIdealObject,
}

fn kernel_only<S: serde::Serializer>(
    o: &RightIdealObject,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    o.kernel.serialize(serializer)
}

impl LambdaMorphism {
    /// `λ(e, v, f)`, accepting `v ∈ fSe'` for any idempotent `e'` in the
    /// class of the source.
    pub fn new(
        source: RightIdealObject,
        carrier: Transformation,
        target: RightIdealObject,
    ) -> Result<Self> {
        check_carrier(&source.kernel, &target.kernel, &carrier)?;
        let carrier = carrier.then(&source.representative);
        Ok(Self {
            source,
            carrier,
            target,
        })
    }

    /// `λ(e, v, f)` from raw idempotents and carrier.
    pub fn from_parts(e: &Transformation, v: &Transformation, f: &Transformation) -> Result<Self> {
        Self::new(
            RightIdealObject::of(e)?,
            v.clone(),
            RightIdealObject::of(f)?,
        )
    }

    pub fn source(&self) -> &RightIdealObject {
        &self.source
    }

    pub fn target(&self) -> &RightIdealObject {
        &self.target
    }

    pub fn carrier(&self) -> &Transformation {
        &self.carrier
    }
}

/// `λ(e, u, f) = λ(e', v, f')` iff `e 𝓡 e'`, `f 𝓡 f'` and `u = v e`.
pub fn lambda_equal(m1: &LambdaMorphism, m2: &LambdaMorphism) -> bool {
    m1 == m2
}

/// `m1` then `m2`: `λ(e, u, f) λ(f, v, g) = λ(e, v u, g)`.
pub fn compose_lambda(m1: &LambdaMorphism, m2: &LambdaMorphism) -> Result<LambdaMorphism> {
    if m1.target != m2.source {
        return Err(Error::NotComposable(format!(
            "{} → {} then {} → {}",
            m1.source, m1.target, m2.source, m2.target
        )));
    }
    Ok(LambdaMorphism {
        source: m1.source.clone(),
        carrier: m2.carrier.then(&m1.carrier).then(&m1.source.representative),
        target: m2.target.clone(),
    })
}

/// `eS ⊆ fS` iff `f̄ ē = ē`.
pub fn ideal_leq(a: &RightIdealObject, b: &RightIdealObject) -> bool {
    a.n() == b.n() && b.representative.then(&a.representative) == a.representative
}

/// The category at a fixed `n`, with the singular maps and idempotents
/// cached for hom-set filtering and factorization.
#[derive(Debug, Clone)]
pub struct RightIdealCategory {
    n: usize,
    objects: Vec<RightIdealObject>,
    singular: Arc<Vec<Transformation>>,
    idempotents: Arc<Vec<Transformation>>,
}

impl RightIdealCategory {
    pub fn new(n: usize) -> Result<Self> {
        ensure_min_size(n, 2)?;
        let objects = enumerate_partitions(n, true)?
            .into_iter()
            .map(RightIdealObject::new)
            .collect::<Result<Vec<_>>>()?;
        let singular = enumerate_singular(n)?;
        let idempotents = singular
            .iter()
            .filter(|t| t.is_idempotent())
            .cloned()
            .collect();
        Ok(Self {
            n,
            objects,
            singular: Arc::new(singular),
            idempotents: Arc::new(idempotents),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn idempotents(&self) -> &[Transformation] {
        &self.idempotents
    }

    /// Every `λ(e, v, f)` with `v ∈ fSē`, filtered from all singular maps.
    pub fn lambda_hom(&self, a: &RightIdealObject, b: &RightIdealObject) -> Vec<LambdaMorphism> {
        if a.n() != self.n || b.n() != self.n {
            return Vec::new();
        }
        let image = a.representative.image_points();
        self.singular
            .iter()
            .filter(|v| {
                b.kernel.refines_unchecked(&v.kernel())
                    && v.images().iter().all(|y| image.binary_search(y).is_ok())
            })
            .map(|v| LambdaMorphism {
                source: a.clone(),
                carrier: v.clone(),
                target: b.clone(),
            })
            .collect()
    }

    /// `λ = λ(e, g, g) λ(g, u, h) λ(h, h, f)` with `g` an idempotent of image
    /// `Im u` below `e` and `h` an idempotent of kernel `π_u`; `tie` picks
    /// the lexicographically least or greatest of each.
    pub fn normal_factorize_lambda(
        &self,
        m: &LambdaMorphism,
        tie: TieBreak,
    ) -> Result<NormalFactorization<LambdaMorphism>> {
        let e = &m.source.representative;
        let u = &m.carrier;
        let pick = |candidates: Vec<&Transformation>| -> Option<Transformation> {
            match tie {
                TieBreak::Least => candidates.first().map(|t| (*t).clone()),
                TieBreak::Greatest => candidates.last().map(|t| (*t).clone()),
            }
        };
        // g e = e g = g: Im g ⊆ Im e and π_e ⊆ π_g
        let g = pick(
            self.idempotents
                .iter()
                .filter(|g| green_l(g, u) && &g.then(e) == *g && &e.then(g) == *g)
                .collect(),
        )
        .ok_or_else(|| Error::NotNormal(format!("no idempotent below {e} with image of {u}")))?;
        let h = pick(self.idempotents.iter().filter(|h| green_r(h, u)).collect())
            .ok_or_else(|| Error::NotNormal(format!("no idempotent with the kernel of {u}")))?;
        let gs = RightIdealObject::new(g.kernel())?;
        let hs = RightIdealObject::new(h.kernel())?;
        let retraction = LambdaMorphism::new(m.source.clone(), g.clone(), gs.clone())?;
        let isomorphism = LambdaMorphism::new(gs, u.clone(), hs.clone())?;
        let inclusion = LambdaMorphism::new(hs, h, m.target.clone())?;
        let fact = NormalFactorization::assemble(self, retraction, isomorphism, inclusion)?;
        debug_assert_eq!(
            compose_lambda(&fact.epimorphic_part, &fact.inclusion).as_ref(),
            Ok(m)
        );
        Ok(fact)
    }
}

impl FiniteCategory for RightIdealCategory {
    type Object = RightIdealObject;
    type Morphism = LambdaMorphism;

    fn objects(&self) -> &[RightIdealObject] {
        &self.objects
    }

    fn hom(&self, a: &RightIdealObject, b: &RightIdealObject) -> Vec<LambdaMorphism> {
        self.lambda_hom(a, b)
    }

    fn domain(&self, f: &LambdaMorphism) -> RightIdealObject {
        f.source.clone()
    }

    fn codomain(&self, f: &LambdaMorphism) -> RightIdealObject {
        f.target.clone()
    }

    fn compose(&self, f: &LambdaMorphism, g: &LambdaMorphism) -> Result<LambdaMorphism> {
        compose_lambda(f, g)
    }

    fn identity(&self, a: &RightIdealObject) -> LambdaMorphism {
        LambdaMorphism {
            source: a.clone(),
            carrier: a.representative.clone(),
            target: a.clone(),
        }
    }

    fn leq(&self, a: &RightIdealObject, b: &RightIdealObject) -> bool {
        ideal_leq(a, b)
    }

    fn inclusion(&self, a: &RightIdealObject, b: &RightIdealObject) -> Option<LambdaMorphism> {
        ideal_leq(a, b).then(|| LambdaMorphism {
            source: a.clone(),
            carrier: a.representative.clone(),
            target: b.clone(),
        })
    }

    fn object_index(&self, a: &RightIdealObject) -> Option<usize> {
        self.objects.binary_search(a).ok()
    }
}

impl NormalCategory for RightIdealCategory {
    fn normal_factorization_with(
        &self,
        f: &LambdaMorphism,
        tie: TieBreak,
    ) -> Result<NormalFactorization<LambdaMorphism>> {
        self.normal_factorize_lambda(f, tie)
    }

    /// Component at `dS` sends each block of `π_c` to the least point of
    /// the `π_d`-block holding the block's minimum.
    fn identity_cone(&self, c: &RightIdealObject) -> Result<ConeOf<Self>> {
        let components = self
            .objects
            .iter()
            .map(|d| {
                let v = Transformation::new(
                    (0..self.n as u8)
                        .map(|x| {
                            let low = c.kernel.block_min(c.kernel.block_of(x));
                            d.kernel.block_min(d.kernel.block_of(low))
                        })
                        .collect(),
                )?;
                LambdaMorphism::new(d.clone(), v, c.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Cone::new(self, c.clone(), components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{cone_check, cone_product, factorization_violations};

    fn t(v: &[u8]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    fn obj(e: &[u8]) -> RightIdealObject {
        RightIdealObject::of(&t(e)).unwrap()
    }

    #[test]
    fn objects_are_keyed_by_kernel() {
        assert_eq!(obj(&[0, 0, 2]), obj(&[1, 1, 2]));
        assert_ne!(obj(&[0, 0, 2]), obj(&[0, 1, 1]));
        assert_eq!(obj(&[1, 1, 2]).representative(), &t(&[0, 0, 2]));
        let cat = RightIdealCategory::new(3).unwrap();
        assert_eq!(cat.objects().len(), 4);
        assert_eq!(cat.idempotents().len(), 9);
    }

    #[test]
    fn order_is_reverse_kernel_containment() {
        let cat = RightIdealCategory::new(4).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                assert_eq!(ideal_leq(a, b), b.kernel().refines(a.kernel()).unwrap());
            }
        }
    }

    #[test]
    fn hom_examples() {
        let cat = RightIdealCategory::new(3).unwrap();
        assert_eq!(cat.lambda_hom(&obj(&[0, 0, 2]), &obj(&[0, 0, 0])).len(), 2);
        assert_eq!(cat.lambda_hom(&obj(&[0, 0, 0]), &obj(&[0, 0, 0])).len(), 1);
        for a in cat.objects() {
            for b in cat.objects() {
                let hom = cat.lambda_hom(a, b);
                let expected = a.kernel().num_blocks().pow(b.kernel().num_blocks() as u32);
                assert_eq!(hom.len(), expected);
                for m in &hom {
                    // normalized carriers are fixed by re-normalization
                    let again =
                        LambdaMorphism::new(a.clone(), m.carrier().clone(), b.clone()).unwrap();
                    assert_eq!(&again, m);
                }
            }
        }
    }

    #[test]
    fn equality_after_normalization() {
        let e = t(&[0, 0, 2]);
        let e2 = t(&[1, 1, 2]);
        let f = t(&[0, 1, 1]);
        let m1 = LambdaMorphism::from_parts(&e, &t(&[0, 2, 2]), &f).unwrap();
        let m2 = LambdaMorphism::from_parts(&e2, &t(&[1, 2, 2]), &f).unwrap();
        assert!(lambda_equal(&m1, &m2));
        let m3 = LambdaMorphism::from_parts(&e, &t(&[2, 0, 0]), &f).unwrap();
        assert!(!lambda_equal(&m1, &m3));
        let m4 = LambdaMorphism::from_parts(&e, &t(&[0, 0, 0]), &t(&[0, 0, 0])).unwrap();
        let m5 = LambdaMorphism::from_parts(&e, &t(&[0, 0, 0]), &f).unwrap();
        assert!(!lambda_equal(&m4, &m5));
    }

    #[test]
    fn identity_and_associativity() {
        let cat = RightIdealCategory::new(3).unwrap();
        let objs = cat.objects();
        for a in objs {
            for b in objs {
                for m in cat.lambda_hom(a, b) {
                    assert_eq!(compose_lambda(&cat.identity(a), &m).unwrap(), m);
                    assert_eq!(compose_lambda(&m, &cat.identity(b)).unwrap(), m);
                }
            }
        }
        for a in objs {
            for b in objs {
                for f in cat.lambda_hom(a, b) {
                    for c in objs {
                        for g in cat.lambda_hom(b, c) {
                            let fg = compose_lambda(&f, &g).unwrap();
                            for d in objs {
                                for h in cat.lambda_hom(c, d) {
                                    let left = compose_lambda(&fg, &h).unwrap();
                                    let right =
                                        compose_lambda(&f, &compose_lambda(&g, &h).unwrap())
                                            .unwrap();
                                    assert_eq!(left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn every_morphism_factors_normally() {
        let cat = RightIdealCategory::new(3).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                for m in cat.lambda_hom(a, b) {
                    let least = cat.normal_factorize_lambda(&m, TieBreak::Least).unwrap();
                    let greatest = cat.normal_factorize_lambda(&m, TieBreak::Greatest).unwrap();
                    assert!(
                        factorization_violations(&cat, &m, &least).is_empty(),
                        "{m:?}"
                    );
                    assert!(
                        factorization_violations(&cat, &m, &greatest).is_empty(),
                        "{m:?}"
                    );
                    assert_eq!(least.epimorphic_part, greatest.epimorphic_part);
                    assert_eq!(least.inclusion, greatest.inclusion);
                }
            }
        }
    }

    #[test]
    fn target_side_reading_of_the_idempotent_can_fail() {
        // an idempotent with image Im v commuting with the target f does not
        // exist here, while one below the source e does
        let (e, f, v) = (t(&[0, 0, 2]), t(&[0, 1, 1]), t(&[0, 2, 2]));
        let cat = RightIdealCategory::new(3).unwrap();
        let below_target = cat
            .idempotents()
            .iter()
            .any(|g| green_l(g, &v) && g.then(&f) == *g && f.then(g) == *g);
        assert!(!below_target);
        let m = LambdaMorphism::from_parts(&e, &v, &f).unwrap();
        assert!(cat.normal_factorize_lambda(&m, TieBreak::Least).is_ok());
    }

    #[test]
    fn inclusions_factor_with_identity_epimorphic_part() {
        let cat = RightIdealCategory::new(3).unwrap();
        for a in cat.objects() {
            for b in cat.objects() {
                if let Some(j) = cat.inclusion(a, b) {
                    let fact = cat.normal_factorization(&j).unwrap();
                    assert_eq!(fact.epimorphic_part, cat.identity(a));
                    assert_eq!(fact.inclusion, j);
                }
            }
        }
    }

    #[test]
    fn identity_cones() {
        let cat = RightIdealCategory::new(3).unwrap();
        for c in cat.objects() {
            let cone = cat.identity_cone(c).unwrap();
            assert_eq!(cone.component_at(&cat, c), Some(&cat.identity(c)));
            assert!(cone_check(&cat, &cone).unwrap());
            assert_eq!(cone_product(&cat, &cone, &cone).unwrap(), cone);
        }
    }
}
