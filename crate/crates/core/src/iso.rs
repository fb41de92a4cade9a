//! The functors `G: ℛ(T_X) → Π(X)`, `P: N*𝒫(X) → Π(X)` and
//! `Q: Π(X) → N*𝒫(X)`, materialized as tables and audited.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{FiniteCategory, NormalCategory, TieBreak};
use crate::dual::{check_carrier, DualMorphism, NormalDual};
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::partition_category::{
    normal_factorize, PartitionCategory, PartitionMorphism, PartitionObject,
};
use crate::powerset::HFunctor;
use crate::report::{CheckRecord, Status};
use crate::right_ideal::{RightIdealCategory, RightIdealObject};
use crate::transformation::{cross_sections, idempotent_from, Transformation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FunctorKind {
    G,
    P,
    Q,
}

impl std::fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A functor given by its object and morphism tables.
///
/// `presentations` pairs a source morphism with its image computed from
/// another presentation of the same morphism (other idempotents in the same
/// classes); the audit requires them to agree with `morphism_map`.
pub struct FunctorWitness<S: FiniteCategory, T: FiniteCategory> {
    pub kind: FunctorKind,
    pub object_map: BTreeMap<S::Object, T::Object>,
    pub morphism_map: HashMap<S::Morphism, T::Morphism>,
    pub presentations: Vec<(S::Morphism, T::Morphism)>,
}

impl<S: FiniteCategory, T: FiniteCategory> Clone for FunctorWitness<S, T> {
    fn clone(&self) -> Self {
        Self {
            kind: self.kind,
            object_map: self.object_map.clone(),
            morphism_map: self.morphism_map.clone(),
            presentations: self.presentations.clone(),
        }
    }
}

impl<S: FiniteCategory, T: FiniteCategory> FunctorWitness<S, T> {
    pub fn object(&self, a: &S::Object) -> Option<&T::Object> {
        self.object_map.get(a)
    }

    pub fn morphism(&self, f: &S::Morphism) -> Option<&T::Morphism> {
        self.morphism_map.get(f)
    }
}

fn check_idempotent(e: &Transformation) -> Result<()> {
    if e.is_idempotent() && e.is_singular() {
        Ok(())
    } else {
        Err(Error::InvalidTransformation(format!(
            "{e} is not a singular idempotent"
        )))
    }
}

/// `η_v: π_f → π_e`, sending the block `x f⁻¹` (`x ∈ Im f`) to the block
/// `(x v) e⁻¹`. Fails unless `v ∈ fSe`, or if some block of `π_f` would go
/// to two places.
pub fn eta_from_carrier(
    e: &Transformation,
    v: &Transformation,
    f: &Transformation,
) -> Result<Vec<u8>> {
    check_idempotent(e)?;
    check_idempotent(f)?;
    let (pe, pf) = (e.kernel(), f.kernel());
    check_carrier(&pe, &pf, v)?;
    let image_e = e.image_points();
    if let Some(y) = v
        .image_points()
        .into_iter()
        .find(|y| image_e.binary_search(y).is_err())
    {
        return Err(Error::Membership {
            carrier: v.images().to_vec(),
            reason: format!("{y} lies outside the image of {e}"),
        });
    }
    (0..pf.num_blocks())
        .map(|j| {
            let x = f.apply(pf.block_min(j));
            let target = pe.block_of(v.apply(x));
            if let Some(b) = pf
                .block(j)
                .into_iter()
                .find(|&b| pe.block_of(v.apply(b)) != target)
            {
                return Err(Error::Membership {
                    carrier: v.images().to_vec(),
                    reason: format!("block of {b} has two images"),
                });
            }
            Ok(target as u8)
        })
        .collect()
}

/// The carrier induced by a block map `η: π_f → π_e`: `x` goes to the point
/// of `Im e` in the block `η([x]_f)`.
pub fn carrier_from_eta(
    eta: &[u8],
    e: &Transformation,
    f: &Transformation,
) -> Result<Transformation> {
    check_idempotent(e)?;
    check_idempotent(f)?;
    let (pe, pf) = (e.kernel(), f.kernel());
    if eta.len() != pf.num_blocks() || eta.iter().any(|&i| i as usize >= pe.num_blocks()) {
        return Err(Error::InvalidBlockMap(format!(
            "{eta:?} is not a map from {} blocks to {} blocks",
            pf.num_blocks(),
            pe.num_blocks()
        )));
    }
    Transformation::new(
        (0..pf.n() as u8)
            .map(|x| e.apply(pe.block_min(eta[pf.block_of(x)] as usize)))
            .collect(),
    )
}

/// Every idempotent with kernel `p`.
fn class_of(p: &SetPartition) -> Vec<Transformation> {
    cross_sections(p)
        .iter()
        .map(|a| idempotent_from(p, a).expect("cross-section"))
        .collect()
}

fn partition_object(p: &SetPartition) -> PartitionObject {
    PartitionObject::new(p.clone()).expect("object kernels are non-identity")
}

fn all_morphisms<C: FiniteCategory>(cat: &C) -> Vec<C::Morphism> {
    let objs = cat.objects();
    objs.iter()
        .flat_map(|a| objs.iter().map(move |b| (a, b)))
        .flat_map(|(a, b)| cat.hom(a, b))
        .collect()
}

/// The image of `λ(e, v, f)` under `G`, from raw data.
fn g_image(
    e: &Transformation,
    v: &Transformation,
    f: &Transformation,
) -> Result<PartitionMorphism> {
    PartitionMorphism::new(
        partition_object(&e.kernel()),
        partition_object(&f.kernel()),
        eta_from_carrier(e, v, f)?,
    )
}

/// `G(eS) = π̄_e`, `G(λ(e, v, f)) = P_{η_v}`.
pub fn functor_g(
    source: &RightIdealCategory,
) -> Result<FunctorWitness<RightIdealCategory, PartitionCategory>> {
    let object_map = source
        .objects()
        .iter()
        .map(|o| (o.clone(), partition_object(o.kernel())))
        .collect();
    let morphisms = all_morphisms(source);
    let morphism_map = morphisms
        .par_iter()
        .map(|m| {
            let image = g_image(
                m.source().representative(),
                m.carrier(),
                m.target().representative(),
            )?;
            Ok((m.clone(), image))
        })
        .collect::<Result<HashMap<_, _>>>()?;
    let presentations = morphisms
        .par_iter()
        .map(|m| {
            let mut out = Vec::new();
            for e in class_of(m.source().kernel()) {
                for f in class_of(m.target().kernel()) {
                    // v e' is the carrier of the same morphism read through e'
                    let v = m.carrier().then(&e);
                    out.push((m.clone(), g_image(&e, &v, &f)?));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(FunctorWitness {
        kind: FunctorKind::G,
        object_map,
        morphism_map,
        presentations,
    })
}

/// `P(H(e; −)) = π̄_e`, `P(σ) = P_{η_v}` with `v = σ̂`.
pub fn functor_p(source: &NormalDual) -> Result<FunctorWitness<NormalDual, PartitionCategory>> {
    let object_map = source
        .objects()
        .iter()
        .map(|h| (h.clone(), partition_object(h.kernel())))
        .collect();
    let morphisms = all_morphisms(source);
    let morphism_map = morphisms
        .par_iter()
        .map(|m| {
            let image = g_image(
                m.source().representative(),
                m.hat(),
                m.target().representative(),
            )?;
            Ok((m.clone(), image))
        })
        .collect::<Result<HashMap<_, _>>>()?;
    let presentations = morphisms
        .par_iter()
        .map(|m| {
            let mut out = Vec::new();
            for e in class_of(m.source().kernel()) {
                for f in class_of(m.target().kernel()) {
                    let v = m.hat().then(&e);
                    out.push((m.clone(), g_image(&e, &v, &f)?));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(FunctorWitness {
        kind: FunctorKind::P,
        object_map,
        morphism_map,
        presentations,
    })
}

/// `Q(π̄) = H(e; −)` with `π_e = π`, `Q(P_η)` the transformation whose hat
/// is the carrier induced by `η`.
pub fn functor_q(
    source: &PartitionCategory,
) -> Result<FunctorWitness<PartitionCategory, NormalDual>> {
    let object_map = source
        .objects()
        .iter()
        .map(|p| Ok((p.clone(), HFunctor::new(p.partition().clone())?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let image =
        |m: &PartitionMorphism, e: &Transformation, f: &Transformation| -> Result<DualMorphism> {
            DualMorphism::new(
                HFunctor::new(m.source().partition().clone())?,
                HFunctor::new(m.target().partition().clone())?,
                carrier_from_eta(m.eta(), e, f)?,
            )
        };
    let morphisms = all_morphisms(source);
    let morphism_map = morphisms
        .par_iter()
        .map(|m| {
            let e = crate::transformation::min_idempotent(m.source().partition());
            let f = crate::transformation::min_idempotent(m.target().partition());
            Ok((m.clone(), image(m, &e, &f)?))
        })
        .collect::<Result<HashMap<_, _>>>()?;
    let presentations = morphisms
        .par_iter()
        .map(|m| {
            let mut out = Vec::new();
            for e in class_of(m.source().partition()) {
                for f in class_of(m.target().partition()) {
                    out.push((m.clone(), image(m, &e, &f)?));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(FunctorWitness {
        kind: FunctorKind::Q,
        object_map,
        morphism_map,
        presentations,
    })
}

/// The nine audit checks on one functor witness.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub functor: FunctorKind,
    pub checks: Vec<CheckRecord>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn check(&self, label: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.label == label)
    }
}

pub const AUDIT_LABELS: [&str; 9] = [
    "well-defined",
    "identities",
    "composition",
    "inclusions",
    "v-injective",
    "v-surjective",
    "full",
    "faithful",
    "order-iso",
];

fn enc<X: Serialize>(x: &X) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Audits `w` as a functor `source → target`.
///
/// Composition is checked on every composable pair when their number is at
/// most `bound`; otherwise on all pairs over as many object triples as fit
/// in the bound, and the record says so.
pub fn verify_functor<S: FiniteCategory, T: FiniteCategory>(
    source: &S,
    target: &T,
    w: &FunctorWitness<S, T>,
    bound: u64,
) -> AuditReport {
    let objs = source.objects();
    let fo = |a: &S::Object| w.object_map.get(a);
    let fm = |f: &S::Morphism| w.morphism_map.get(f);
    let homs: Vec<Vec<Vec<S::Morphism>>> = objs
        .iter()
        .map(|a| objs.iter().map(|b| source.hom(a, b)).collect())
        .collect();
    let mut checks = Vec::new();

    // well-defined: total, typed, independent of presentation
    {
        let mut bad = Vec::new();
        let mut checked = 0u64;
        for a in objs {
            checked += 1;
            if fo(a).is_none() {
                bad.push(json!({ "object": enc(a), "reason": "no image" }));
            }
        }
        for (i, a) in objs.iter().enumerate() {
            for (k, b) in objs.iter().enumerate() {
                for f in &homs[i][k] {
                    checked += 1;
                    match (fm(f), fo(a), fo(b)) {
                        (Some(g), Some(fa), Some(fb)) => {
                            if &target.domain(g) != fa || &target.codomain(g) != fb {
                                bad.push(json!({ "morphism": enc(f), "image": enc(g), "reason": "mistyped" }));
                            }
                        }
                        _ => bad.push(json!({ "morphism": enc(f), "reason": "no image" })),
                    }
                }
            }
        }
        for (f, g) in &w.presentations {
            checked += 1;
            if fm(f) != Some(g) {
                bad.push(json!({ "morphism": enc(f), "image": enc(&fm(f)), "other_presentation": enc(g) }));
            }
        }
        checks.push(CheckRecord::from_failures("well-defined", checked, bad));
    }

    // identities
    {
        let bad: Vec<Value> = objs
            .iter()
            .filter_map(|a| {
                let id = source.identity(a);
                let expected = fo(a).map(|fa| target.identity(fa));
                (fm(&id) != expected.as_ref())
                    .then(|| json!({ "object": enc(a), "image": enc(&fm(&id)) }))
            })
            .collect();
        checks.push(CheckRecord::from_failures(
            "identities",
            objs.len() as u64,
            bad,
        ));
    }

    // composition
    {
        let n = objs.len();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .collect();
        let cost =
            |&(i, j, k): &(usize, usize, usize)| (homs[i][j].len() * homs[j][k].len()) as u64;
        let total: u64 = triples.iter().map(cost).sum();
        let mut chosen = Vec::new();
        let mut budget = 0u64;
        for t in &triples {
            if budget + cost(t) > bound {
                continue;
            }
            budget += cost(t);
            chosen.push(*t);
        }
        let bad: Vec<Value> = chosen
            .par_iter()
            .flat_map_iter(|&(i, j, k)| {
                let mut bad = Vec::new();
                for f in &homs[i][j] {
                    for g in &homs[j][k] {
                        let fg = source.compose(f, g).expect("composable");
                        let ok = match (fm(&fg), fm(f), fm(g)) {
                            (Some(x), Some(y), Some(z)) => {
                                target.compose(y, z).ok().as_ref() == Some(x)
                            }
                            _ => false,
                        };
                        if !ok {
                            bad.push(json!({ "first": enc(f), "second": enc(g) }));
                        }
                    }
                }
                bad
            })
            .collect();
        let mut record = CheckRecord::from_failures("composition", budget, bad);
        if chosen.len() < triples.len() {
            if chosen.is_empty() {
                record = CheckRecord::skipped(
                    "composition",
                    format!("{total} pairs exceed the bound of {bound}"),
                );
            } else {
                record = record.with_note(format!(
                    "{budget} of {total} composable pairs, on {} of {} object triples",
                    chosen.len(),
                    triples.len()
                ));
            }
        }
        checks.push(record);
    }

    // inclusions
    {
        let mut bad = Vec::new();
        let mut checked = 0;
        for a in objs {
            for b in objs {
                if a == b || !source.leq(a, b) {
                    continue;
                }
                checked += 1;
                let j = source.inclusion(a, b);
                let image = j.as_ref().and_then(&fm);
                let expected = fo(a)
                    .zip(fo(b))
                    .and_then(|(fa, fb)| target.inclusion(fa, fb));
                if image.is_none() || image != expected.as_ref() {
                    bad.push(json!({ "smaller": enc(a), "larger": enc(b), "image": enc(&image) }));
                }
            }
        }
        checks.push(CheckRecord::from_failures("inclusions", checked, bad));
    }

    // object map injective and surjective
    {
        let mut seen: BTreeMap<&T::Object, &S::Object> = BTreeMap::new();
        let mut bad = Vec::new();
        for a in objs {
            if let Some(fa) = fo(a) {
                if let Some(other) = seen.insert(fa, a) {
                    bad.push(json!({ "objects": [enc(other), enc(a)], "image": enc(fa) }));
                }
            }
        }
        checks.push(CheckRecord::from_failures(
            "v-injective",
            objs.len() as u64,
            bad,
        ));
        let bad: Vec<Value> = target
            .objects()
            .iter()
            .filter(|t| !seen.contains_key(t))
            .map(|t| json!({ "missed": enc(t) }))
            .collect();
        checks.push(CheckRecord::from_failures(
            "v-surjective",
            target.objects().len() as u64,
            bad,
        ));
    }

    // full and faithful, per hom-set
    {
        let mut not_full = Vec::new();
        let mut not_faithful = Vec::new();
        let mut pairs = 0u64;
        for (i, a) in objs.iter().enumerate() {
            for (k, b) in objs.iter().enumerate() {
                pairs += 1;
                let (Some(fa), Some(fb)) = (fo(a), fo(b)) else {
                    not_full.push(json!({ "source": enc(a), "target": enc(b) }));
                    continue;
                };
                let images: Vec<&T::Morphism> = homs[i][k].iter().filter_map(&fm).collect();
                let distinct: BTreeSet<&T::Morphism> = images.iter().copied().collect();
                if distinct.len() < homs[i][k].len() {
                    let mut by_image: HashMap<&T::Morphism, &S::Morphism> = HashMap::new();
                    let clash = homs[i][k].iter().find_map(|f| {
                        let g = fm(f)?;
                        by_image.insert(g, f).map(
                            |other| json!({ "morphisms": [enc(other), enc(f)], "image": enc(g) }),
                        )
                    });
                    not_faithful.push(
                        clash.unwrap_or_else(|| json!({ "source": enc(a), "target": enc(b) })),
                    );
                }
                let wanted: BTreeSet<T::Morphism> = target.hom(fa, fb).into_iter().collect();
                if let Some(missed) = wanted.iter().find(|g| !distinct.contains(g)) {
                    not_full
                        .push(json!({ "source": enc(a), "target": enc(b), "missed": enc(missed) }));
                }
            }
        }
        checks.push(CheckRecord::from_failures("full", pairs, not_full));
        checks.push(CheckRecord::from_failures("faithful", pairs, not_faithful));
    }

    // order isomorphism on objects
    {
        let mut bad = Vec::new();
        for a in objs {
            for b in objs {
                let image_leq = match (fo(a), fo(b)) {
                    (Some(fa), Some(fb)) => target.leq(fa, fb),
                    _ => !source.leq(a, b),
                };
                if source.leq(a, b) != image_leq {
                    bad.push(json!({ "left": enc(a), "right": enc(b) }));
                }
            }
        }
        checks.push(CheckRecord::from_failures(
            "order-iso",
            (objs.len() * objs.len()) as u64,
            bad,
        ));
    }

    AuditReport {
        functor: w.kind,
        checks,
    }
}

/// Objects and morphisms `x` of `A` with `second(first(x)) ≠ x`.
pub fn round_trip_failures<A: FiniteCategory, B: FiniteCategory>(
    source: &A,
    first: &FunctorWitness<A, B>,
    second: &FunctorWitness<B, A>,
) -> (u64, Vec<Value>) {
    let mut bad = Vec::new();
    let mut checked = 0u64;
    for a in source.objects() {
        checked += 1;
        if first.object(a).and_then(|b| second.object(b)) != Some(a) {
            bad.push(json!({ "object": enc(a) }));
        }
    }
    for f in all_morphisms(source) {
        checked += 1;
        if first.morphism(&f).and_then(|g| second.morphism(g)) != Some(&f) {
            bad.push(json!({ "morphism": enc(&f) }));
        }
    }
    (checked, bad)
}

/// Morphisms of `ℛ(T_X)` whose epimorphic part or inclusion, carried
/// through `G`, differs from the one factored natively in `Π(X)`.
pub fn g_transport_failures(
    source: &RightIdealCategory,
    w: &FunctorWitness<RightIdealCategory, PartitionCategory>,
) -> Result<(u64, Vec<Value>)> {
    let morphisms = all_morphisms(source);
    let bad = morphisms
        .par_iter()
        .map(|m| {
            let here = source.normal_factorization(m)?;
            let image = &w.morphism_map[m];
            let there = normal_factorize(image, TieBreak::Least).factors;
            let ok = w.morphism_map.get(&here.epimorphic_part) == Some(&there.epimorphic_part)
                && w.morphism_map.get(&here.inclusion) == Some(&there.inclusion);
            Ok((!ok).then(|| json!({ "morphism": enc(m), "image": enc(image) })))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((morphisms.len() as u64, bad.into_iter().flatten().collect()))
}

/// Hom-set sizes of the three categories for every pair of kernels; the
/// first entry where they disagree, if any.
pub fn hom_cardinality_failures(
    pi: &PartitionCategory,
    ri: &RightIdealCategory,
    dual: &NormalDual,
) -> Result<(u64, Vec<Value>)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for a in pi.objects() {
        for b in pi.objects() {
            checked += 1;
            let (ra, rb) = (
                RightIdealObject::new(a.partition().clone())?,
                RightIdealObject::new(b.partition().clone())?,
            );
            let (da, db) = (
                HFunctor::new(a.partition().clone())?,
                HFunctor::new(b.partition().clone())?,
            );
            let sizes = [
                pi.hom(a, b).len(),
                ri.hom(&ra, &rb).len(),
                dual.hom(&da, &db).len(),
            ];
            if sizes[0] != sizes[1] || sizes[0] != sizes[2] {
                bad.push(json!({ "source": enc(a), "target": enc(b), "sizes": sizes }));
            }
        }
    }
    Ok((checked, bad))
}

/// Summary line for an audit, e.g. `G: 9/9 checks pass`.
pub fn summarize(report: &AuditReport) -> String {
    let passing = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Pass)
        .count();
    format!(
        "{}: {passing}/{} checks pass",
        report.functor,
        report.checks.len()
    )
}
