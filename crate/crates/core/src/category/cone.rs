use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{epimorphic_part, is_epimorphism, is_isomorphism, FiniteCategory, NormalCategory};
use crate::error::{Error, Result};

/// A cone to `vertex`: one morphism `c → vertex` per object `c`, listed in
/// the order of [`FiniteCategory::objects`].
///
/// `m_set` holds the indices of the objects whose component is an
/// isomorphism; it is computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cone<O, M> {
    vertex: O,
    components: Vec<M>,
    #[serde(skip)]
    m_set: Vec<usize>,
}

pub type ConeOf<C> = Cone<<C as FiniteCategory>::Object, <C as FiniteCategory>::Morphism>;

impl<O: Clone + Eq + std::fmt::Debug, M: Clone + Eq + std::fmt::Debug> Cone<O, M> {
    /// Checks that every component has the right domain and codomain.
    /// Compatibility with inclusions is left to [`cone_check`].
    pub fn new<C>(cat: &C, vertex: O, components: Vec<M>) -> Result<Self>
    where
        C: FiniteCategory<Object = O, Morphism = M> + ?Sized,
    {
        check_shape(cat, &vertex, &components)?;
        let m_set = components
            .iter()
            .enumerate()
            .filter(|(_, f)| is_isomorphism(cat, f))
            .map(|(i, _)| i)
            .collect();
        Ok(Self {
            vertex,
            components,
            m_set,
        })
    }

    pub fn vertex(&self) -> &O {
        &self.vertex
    }

    pub fn components(&self) -> &[M] {
        &self.components
    }

    pub fn component(&self, index: usize) -> &M {
        &self.components[index]
    }

    pub fn component_at<C>(&self, cat: &C, c: &O) -> Option<&M>
    where
        C: FiniteCategory<Object = O, Morphism = M> + ?Sized,
    {
        cat.object_index(c).map(|i| &self.components[i])
    }

    /// Indices of the objects at which the component is an isomorphism.
    pub fn m_set(&self) -> &[usize] {
        &self.m_set
    }

    pub fn is_normal(&self) -> bool {
        !self.m_set.is_empty()
    }
}

fn check_shape<C: FiniteCategory + ?Sized>(
    cat: &C,
    vertex: &C::Object,
    components: &[C::Morphism],
) -> Result<()> {
    let objs = cat.objects();
    if components.len() != objs.len() {
        return Err(Error::MalformedCone(format!(
            "{} components for {} objects",
            components.len(),
            objs.len()
        )));
    }
    if cat.object_index(vertex).is_none() {
        return Err(Error::MalformedCone(format!("unknown vertex {vertex:?}")));
    }
    for (c, f) in objs.iter().zip(components) {
        if &cat.domain(f) != c || &cat.codomain(f) != vertex {
            return Err(Error::MalformedCone(format!(
                "component {f:?} at {c:?} is not a morphism to {vertex:?}"
            )));
        }
    }
    Ok(())
}

/// True iff `j(c', c) · γ(c) = γ(c')` whenever `c' ⊆ c`.
pub fn cone_check<C: FiniteCategory + ?Sized>(cat: &C, gamma: &ConeOf<C>) -> Result<bool> {
    check_shape(cat, &gamma.vertex, &gamma.components)?;
    let objs = cat.objects();
    for (small, a) in objs.iter().enumerate() {
        for (big, b) in objs.iter().enumerate() {
            if small == big || !cat.leq(a, b) {
                continue;
            }
            let j = cat
                .inclusion(a, b)
                .ok_or_else(|| Error::MalformedCone(format!("no inclusion {a:?} ⊆ {b:?}")))?;
            if cat.compose(&j, &gamma.components[big])? != gamma.components[small] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(γ ∗ f)(a) = γ(a) · f` for an epimorphism `f` leaving the vertex.
pub fn cone_star_epi<C: FiniteCategory + ?Sized>(
    cat: &C,
    gamma: &ConeOf<C>,
    f: &C::Morphism,
) -> Result<ConeOf<C>> {
    if cat.domain(f) != gamma.vertex {
        return Err(Error::NotComposable(format!(
            "{f:?} does not leave the vertex {:?}",
            gamma.vertex
        )));
    }
    if !is_epimorphism(cat, f) {
        return Err(Error::NotEpimorphism(format!("{f:?}")));
    }
    star(cat, gamma, f)
}

/// [`cone_star_epi`] without the epimorphism test, for morphisms that are
/// epimorphic parts by construction.
pub(crate) fn star<C: FiniteCategory + ?Sized>(
    cat: &C,
    gamma: &ConeOf<C>,
    f: &C::Morphism,
) -> Result<ConeOf<C>> {
    let components = gamma
        .components
        .iter()
        .map(|g| cat.compose(g, f))
        .collect::<Result<Vec<_>>>()?;
    Cone::new(cat, cat.codomain(f), components)
}

/// The product of normal cones: `(γ ∗ σ)(a) = γ(a) · σ(c_γ)°`.
pub fn cone_product<C: NormalCategory + ?Sized>(
    cat: &C,
    gamma: &ConeOf<C>,
    sigma: &ConeOf<C>,
) -> Result<ConeOf<C>> {
    let at_vertex = sigma
        .component_at(cat, &gamma.vertex)
        .ok_or_else(|| Error::MalformedCone(format!("unknown vertex {:?}", gamma.vertex)))?;
    let epi = epimorphic_part(cat, at_vertex)?;
    star(cat, gamma, &epi)
}

/// Every normal cone of `cat`, sorted by vertex and then by components.
///
/// The search assigns components object by object and discards an
/// assignment as soon as it breaks compatibility, so it visits far fewer
/// than the `∏ |hom(c, d)|` candidate assignments per vertex `d`. That
/// product is still what `bound` limits.
pub fn enumerate_all_normal_cones<C: FiniteCategory>(
    cat: &C,
    bound: u64,
) -> Result<Vec<ConeOf<C>>> {
    let objs = cat.objects();
    let homs: Vec<Vec<Vec<C::Morphism>>> = objs
        .iter()
        .map(|d| objs.iter().map(|c| cat.hom(c, d)).collect())
        .collect();
    let needed: u128 = homs
        .iter()
        .map(|per_vertex| {
            per_vertex
                .iter()
                .try_fold(1u128, |acc, h| acc.checked_mul(h.len() as u128))
                .unwrap_or(u128::MAX)
        })
        .fold(0u128, u128::saturating_add);
    if needed > bound as u128 {
        return Err(Error::BoundExceeded {
            what: "cone enumeration".into(),
            needed,
            bound,
        });
    }

    // inclusion pairs (smaller, larger) by index
    let mut below: Vec<Vec<(usize, C::Morphism)>> = vec![Vec::new(); objs.len()];
    let mut above: Vec<Vec<(usize, C::Morphism)>> = vec![Vec::new(); objs.len()];
    for (i, a) in objs.iter().enumerate() {
        for (k, b) in objs.iter().enumerate() {
            if i != k && cat.leq(a, b) {
                if let Some(j) = cat.inclusion(a, b) {
                    above[i].push((k, j.clone()));
                    below[k].push((i, j));
                }
            }
        }
    }

    let per_vertex = (0..objs.len())
        .into_par_iter()
        .map(|d| {
            let mut found = Vec::new();
            let mut chosen: Vec<C::Morphism> = Vec::with_capacity(objs.len());
            search(
                cat,
                &homs[d],
                &below,
                &above,
                &mut chosen,
                &mut |components| {
                    let cone = Cone::new(cat, objs[d].clone(), components.to_vec())?;
                    if cone.is_normal() {
                        found.push(cone);
                    }
                    Ok(())
                },
            )?;
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut all: Vec<_> = per_vertex.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

fn search<C: FiniteCategory>(
    cat: &C,
    homs: &[Vec<C::Morphism>],
    below: &[Vec<(usize, C::Morphism)>],
    above: &[Vec<(usize, C::Morphism)>],
    chosen: &mut Vec<C::Morphism>,
    emit: &mut impl FnMut(&[C::Morphism]) -> Result<()>,
) -> Result<()> {
    let i = chosen.len();
    if i == homs.len() {
        return emit(chosen);
    }
    for f in &homs[i] {
        let mut fits = true;
        // objects already assigned that sit above or below object i
        for (k, j) in &above[i] {
            if *k < i && &cat.compose(j, &chosen[*k])? != f {
                fits = false;
                break;
            }
        }
        if fits {
            for (k, j) in &below[i] {
                if *k < i && cat.compose(j, f)? != chosen[*k] {
                    fits = false;
                    break;
                }
            }
        }
        if fits {
            chosen.push(f.clone());
            search(cat, homs, below, above, chosen, emit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// `H(γ; c) = { γ ∗ f° : f ∈ hom(c_γ, c) }`.
pub fn h_set<C: NormalCategory + ?Sized>(
    cat: &C,
    gamma: &ConeOf<C>,
    c: &C::Object,
) -> Result<BTreeSet<ConeOf<C>>> {
    cat.hom(&gamma.vertex, c)
        .iter()
        .map(|f| star(cat, gamma, &epimorphic_part(cat, f)?))
        .collect()
}

/// `H(γ; g): γ ∗ f° ↦ γ ∗ (f g)°`, checked to be single-valued.
pub fn h_map<C: NormalCategory + ?Sized>(
    cat: &C,
    gamma: &ConeOf<C>,
    g: &C::Morphism,
) -> Result<BTreeMap<ConeOf<C>, ConeOf<C>>> {
    let mut map = BTreeMap::new();
    for f in cat.hom(&gamma.vertex, &cat.domain(g)) {
        let from = star(cat, gamma, &epimorphic_part(cat, &f)?)?;
        let fg = cat.compose(&f, g)?;
        let to = star(cat, gamma, &epimorphic_part(cat, &fg)?)?;
        if let Some(previous) = map.insert(from, to.clone()) {
            if previous != to {
                return Err(Error::NotComposable(format!(
                    "H(γ; {g:?}) sends one element to two places"
                )));
            }
        }
    }
    Ok(map)
}

/// Equality of `H(γ; −)` and `H(γ'; −)` as functors: the same set at every
/// object and the same map at every morphism.
pub fn h_functors_equal<C: NormalCategory + ?Sized>(
    cat: &C,
    gamma: &ConeOf<C>,
    other: &ConeOf<C>,
) -> Result<bool> {
    let objs = cat.objects();
    for c in objs {
        if h_set(cat, gamma, c)? != h_set(cat, other, c)? {
            return Ok(false);
        }
    }
    for a in objs {
        for b in objs {
            for g in cat.hom(a, b) {
                if h_map(cat, gamma, &g)? != h_map(cat, other, &g)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
