//! Finite categories with subobjects, normal factorizations and normal cones.
//!
//! Everything here is generic over [`FiniteCategory`]; the concrete
//! categories live in their own modules and only plug in hom-set
//! enumeration, composition, the subobject order and a factorization
//! routine. Composition is written left to right: `compose(f, g)` is "`f`
//! then `g`" and needs `codomain(f) == domain(g)`.

mod check;
mod cone;
mod semigroup;

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

pub use check::{
    check_category_with_subobjects, materialize, AxiomCheck, AxiomReport, Materialized,
};
pub use cone::{
    cone_check, cone_product, cone_star_epi, enumerate_all_normal_cones, h_functors_equal, h_map,
    h_set, Cone, ConeOf,
};
pub use semigroup::{check_regular, generate_semigroup, ConeSemigroup, ProductTable};

pub trait FiniteCategory: Sync {
    type Object: Clone + Eq + Ord + Hash + Debug + Serialize + Send + Sync;
    type Morphism: Clone + Eq + Ord + Hash + Debug + Serialize + Send + Sync;

    /// All objects, in a fixed order. Cone components are indexed by it.
    fn objects(&self) -> &[Self::Object];

    fn hom(&self, a: &Self::Object, b: &Self::Object) -> Vec<Self::Morphism>;

    fn domain(&self, f: &Self::Morphism) -> Self::Object;

    fn codomain(&self, f: &Self::Morphism) -> Self::Object;

    /// `f` then `g`.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;

    fn identity(&self, a: &Self::Object) -> Self::Morphism;

    /// The subobject order: `a ⊆ b`.
    fn leq(&self, a: &Self::Object, b: &Self::Object) -> bool;

    /// The inclusion `j(a, b)`, present exactly when `a ⊆ b`.
    fn inclusion(&self, a: &Self::Object, b: &Self::Object) -> Option<Self::Morphism>;

    fn object_index(&self, a: &Self::Object) -> Option<usize> {
        self.objects().iter().position(|o| o == a)
    }

    fn morphism_count(&self) -> usize {
        let objs = self.objects();
        objs.iter()
            .flat_map(|a| objs.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.hom(a, b).len())
            .sum()
    }
}

/// Which of several admissible choices a factorization routine makes.
///
/// Normal factorizations are not unique; running the same routine under both
/// policies and comparing epimorphic parts is how factorization independence
/// gets checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum TieBreak {
    #[default]
    Least,
    Greatest,
}

/// `f = retraction · isomorphism · inclusion`, with the epimorphic part
/// `retraction · isomorphism` cached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalFactorization<M> {
    pub retraction: M,
    pub isomorphism: M,
    pub inclusion: M,
    pub epimorphic_part: M,
}

impl<M: Clone> NormalFactorization<M> {
    pub fn assemble<C>(cat: &C, retraction: M, isomorphism: M, inclusion: M) -> Result<Self>
    where
        C: FiniteCategory<Morphism = M> + ?Sized,
    {
        let epimorphic_part = cat.compose(&retraction, &isomorphism)?;
        Ok(Self {
            retraction,
            isomorphism,
            inclusion,
            epimorphic_part,
        })
    }
}

pub trait NormalCategory: FiniteCategory {
    fn normal_factorization_with(
        &self,
        f: &Self::Morphism,
        tie: TieBreak,
    ) -> Result<NormalFactorization<Self::Morphism>>;

    fn normal_factorization(
        &self,
        f: &Self::Morphism,
    ) -> Result<NormalFactorization<Self::Morphism>> {
        self.normal_factorization_with(f, TieBreak::Least)
    }

    /// A normal cone with vertex `c` whose component at `c` is the identity.
    ///
    /// There is no generic construction for this, so every normal category
    /// supplies its own.
    fn identity_cone(&self, c: &Self::Object) -> Result<ConeOf<Self>>;
}

/// Searches `hom(codomain f, domain f)` for a two-sided inverse.
pub fn find_inverse<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> Option<C::Morphism> {
    let (a, b) = (cat.domain(f), cat.codomain(f));
    let id_a = cat.identity(&a);
    let id_b = cat.identity(&b);
    cat.hom(&b, &a).into_iter().find(|g| {
        cat.compose(f, g).ok().as_ref() == Some(&id_a)
            && cat.compose(g, f).ok().as_ref() == Some(&id_b)
    })
}

pub fn is_isomorphism<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> bool {
    find_inverse(cat, f).is_some()
}

/// Left cancellation: `g f = h f` forces `g = h`, over every finite hom-set.
pub fn is_monomorphism<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> bool {
    let a = cat.domain(f);
    cat.objects().iter().all(|x| {
        let mut seen = std::collections::HashSet::new();
        cat.hom(x, &a)
            .iter()
            .all(|g| cat.compose(g, f).map(|gf| seen.insert(gf)).unwrap_or(false))
    })
}

/// Right cancellation: `f g = f h` forces `g = h`, over every finite hom-set.
pub fn is_epimorphism<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> bool {
    let b = cat.codomain(f);
    cat.objects().iter().all(|y| {
        let mut seen = std::collections::HashSet::new();
        cat.hom(&b, y)
            .iter()
            .all(|g| cat.compose(f, g).map(|fg| seen.insert(fg)).unwrap_or(false))
    })
}

/// A retraction `e: d → c` has `c ⊆ d` and `j(c, d) · e = 1_c`.
pub fn is_retraction<C: FiniteCategory + ?Sized>(cat: &C, e: &C::Morphism) -> bool {
    let (d, c) = (cat.domain(e), cat.codomain(e));
    match cat.inclusion(&c, &d) {
        Some(j) => cat.compose(&j, e).ok() == Some(cat.identity(&c)),
        None => false,
    }
}

/// The epimorphic part `f°` of `f`, taken from the category's own
/// factorization routine.
pub fn epimorphic_part<C: NormalCategory + ?Sized>(
    cat: &C,
    f: &C::Morphism,
) -> Result<C::Morphism> {
    cat.normal_factorization(f)
        .map(|nf| nf.epimorphic_part)
        .map_err(|e| match e {
            Error::NotNormal(_) => e,
            other => Error::NotNormal(other.to_string()),
        })
}

/// Lists every way `fact` fails to be a normal factorization of `f`.
pub fn factorization_violations<C: FiniteCategory + ?Sized>(
    cat: &C,
    f: &C::Morphism,
    fact: &NormalFactorization<C::Morphism>,
) -> Vec<String> {
    let mut bad = Vec::new();
    let NormalFactorization {
        retraction: e,
        isomorphism: u,
        inclusion: j,
        epimorphic_part,
    } = fact;
    let (c, d) = (cat.domain(f), cat.codomain(f));
    if cat.domain(e) != c {
        bad.push(format!(
            "retraction starts at {:?}, not {c:?}",
            cat.domain(e)
        ));
    }
    if cat.codomain(e) != cat.domain(u) || cat.codomain(u) != cat.domain(j) {
        bad.push("factors do not chain".to_string());
    }
    if cat.codomain(j) != d {
        bad.push(format!(
            "inclusion ends at {:?}, not {d:?}",
            cat.codomain(j)
        ));
    }
    if !is_retraction(cat, e) {
        bad.push(format!("{e:?} is not a retraction"));
    }
    if !is_isomorphism(cat, u) {
        bad.push(format!("{u:?} is not an isomorphism"));
    }
    let (dp, dd) = (cat.domain(j), cat.codomain(j));
    if cat.inclusion(&dp, &dd).as_ref() != Some(j) {
        bad.push(format!("{j:?} is not the inclusion j({dp:?}, {dd:?})"));
    }
    match cat.compose(e, u) {
        Ok(eu) if &eu == epimorphic_part => {}
        _ => bad.push("cached epimorphic part is not e·u".to_string()),
    }
    match cat.compose(epimorphic_part, j) {
        Ok(whole) if &whole == f => {}
        _ => bad.push(format!("e·u·j does not recompose {f:?}")),
    }
    bad
}
