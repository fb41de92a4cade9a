use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::FiniteCategory;
use crate::error::{Error, Result};

/// A category with every hom-set listed and every composite tabulated.
///
/// Morphisms are numbered in hom-set order. `compose(f, g)` looks up
/// `comp[f][pos(g)]`, where `pos(g)` is the position of `g` among the
/// morphisms leaving `domain(g)`.
pub struct Materialized<'a, C: FiniteCategory> {
    cat: &'a C,
    morphisms: Vec<C::Morphism>,
    index: HashMap<C::Morphism, usize>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    hom: Vec<Vec<Vec<usize>>>,
    outgoing: Vec<Vec<usize>>,
    out_pos: Vec<usize>,
    comp: Vec<Vec<u32>>,
    identity: Vec<usize>,
    inclusion: Vec<Vec<Option<usize>>>,
    mistyped: Vec<String>,
}

/// Tabulates `cat`, provided the number of composable pairs stays within
/// `bound`.
pub fn materialize<C: FiniteCategory>(cat: &C, bound: u64) -> Result<Materialized<'_, C>> {
    let objs = cat.objects();
    let k = objs.len();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    let mut dom = Vec::new();
    let mut cod = Vec::new();
    let mut hom = vec![vec![Vec::new(); k]; k];
    let mut mistyped = Vec::new();
    for (ai, a) in objs.iter().enumerate() {
        for (bi, b) in objs.iter().enumerate() {
            for f in cat.hom(a, b) {
                if &cat.domain(&f) != a || &cat.codomain(&f) != b {
                    mistyped.push(format!("{f:?} listed in hom({a:?}, {b:?})"));
                }
                if index.contains_key(&f) {
                    mistyped.push(format!("{f:?} listed twice"));
                    continue;
                }
                let id = morphisms.len();
                index.insert(f.clone(), id);
                morphisms.push(f);
                dom.push(ai);
                cod.push(bi);
                hom[ai][bi].push(id);
            }
        }
    }

    let mut outgoing = vec![Vec::new(); k];
    let mut out_pos = vec![0; morphisms.len()];
    for (id, &d) in dom.iter().enumerate() {
        out_pos[id] = outgoing[d].len();
        outgoing[d].push(id);
    }

    let pairs: u128 = cod.iter().map(|&c| outgoing[c].len() as u128).sum();
    if pairs > bound as u128 {
        return Err(Error::BoundExceeded {
            what: "composition table".into(),
            needed: pairs,
            bound,
        });
    }

    let comp = (0..morphisms.len())
        .into_par_iter()
        .map(|f| {
            outgoing[cod[f]]
                .iter()
                .map(|&g| {
                    let fg = cat.compose(&morphisms[f], &morphisms[g])?;
                    index.get(&fg).map(|&id| id as u32).ok_or_else(|| {
                        Error::NotComposable(format!(
                            "{:?} then {:?} gives {fg:?}, which is in no hom-set",
                            morphisms[f], morphisms[g]
                        ))
                    })
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let identity =
        objs.iter()
            .map(|a| {
                let id = cat.identity(a);
                index.get(&id).copied().ok_or_else(|| {
                    Error::NotComposable(format!("identity {id:?} is in no hom-set"))
                })
            })
            .collect::<Result<Vec<_>>>()?;

    let inclusion = objs
        .iter()
        .map(|a| {
            objs.iter()
                .map(|b| cat.inclusion(a, b).and_then(|j| index.get(&j).copied()))
                .collect()
        })
        .collect();

    Ok(Materialized {
        cat,
        morphisms,
        index,
        dom,
        cod,
        hom,
        outgoing,
        out_pos,
        comp,
        identity,
        inclusion,
        mistyped,
    })
}

impl<'a, C: FiniteCategory> Materialized<'a, C> {
    pub fn category(&self) -> &'a C {
        self.cat
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn morphism(&self, id: usize) -> &C::Morphism {
        &self.morphisms[id]
    }

    pub fn id_of(&self, f: &C::Morphism) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn domain(&self, id: usize) -> usize {
        self.dom[id]
    }

    pub fn codomain(&self, id: usize) -> usize {
        self.cod[id]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a][b]
    }

    pub fn identity(&self, a: usize) -> usize {
        self.identity[a]
    }

    pub fn inclusion(&self, a: usize, b: usize) -> Option<usize> {
        self.inclusion[a][b]
    }

    /// `f` then `g`; `None` unless `codomain(f) == domain(g)`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        (self.cod[f] == self.dom[g]).then(|| self.comp[f][self.out_pos[g]] as usize)
    }

    pub fn composable_pairs(&self) -> u64 {
        self.comp.iter().map(|row| row.len() as u64).sum()
    }

    fn object_count(&self) -> usize {
        self.hom.len()
    }

    fn is_monic(&self, j: usize) -> bool {
        let a = self.dom[j];
        (0..self.object_count()).all(|x| {
            let mut seen = std::collections::HashSet::new();
            self.hom[x][a]
                .iter()
                .all(|&g| seen.insert(self.comp[g][self.out_pos[j]]))
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub checked: u64,
    pub violation_count: u64,
    /// The first few violations, for the report.
    pub examples: Vec<String>,
}

impl AxiomCheck {
    const KEEP: usize = 5;

    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            violation_count: 0,
            examples: Vec::new(),
        }
    }

    fn tick(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violation_count += 1;
            if self.examples.len() < Self::KEEP {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub objects: usize,
    pub morphisms: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Exhaustively checks the category laws and the three subobject axioms:
/// the inclusions form a partial order on all objects, every inclusion is a
/// monomorphism, and `f = h g` with `f, g` inclusions forces `h` to be one.
///
/// Only an exceeded bound is reported as an error; everything else lands in
/// the returned report.
pub fn check_category_with_subobjects<C: FiniteCategory>(
    cat: &C,
    bound: u64,
) -> Result<AxiomReport> {
    let objs = cat.objects();
    let k = objs.len();
    let m = match materialize(cat, bound) {
        Ok(m) => m,
        Err(e @ Error::BoundExceeded { .. }) => return Err(e),
        Err(other) => {
            let mut closed = AxiomCheck::new("composition-closed");
            closed.tick(false, || other.to_string());
            return Ok(AxiomReport {
                objects: k,
                morphisms: 0,
                checks: vec![closed],
            });
        }
    };

    let triples: u128 = (0..m.len())
        .map(|f| {
            m.outgoing[m.cod[f]]
                .iter()
                .map(|&g| m.outgoing[m.cod[g]].len() as u128)
                .sum::<u128>()
        })
        .sum();
    if triples > bound as u128 {
        return Err(Error::BoundExceeded {
            what: "associativity check".into(),
            needed: triples,
            bound,
        });
    }

    let mut typing = AxiomCheck::new("hom-typing");
    typing.checked = m.len() as u64;
    for bad in &m.mistyped {
        typing.tick(false, || bad.clone());
    }

    let mut identity = AxiomCheck::new("identity-laws");
    for f in 0..m.len() {
        let (a, b) = (m.dom[f], m.cod[f]);
        identity.tick(m.compose(m.identity[a], f) == Some(f), || {
            format!("1 · {:?} differs", m.morphisms[f])
        });
        identity.tick(m.compose(f, m.identity[b]) == Some(f), || {
            format!("{:?} · 1 differs", m.morphisms[f])
        });
    }

    let mut assoc = AxiomCheck::new("associativity");
    let (count, violations, bad): (u64, u64, Vec<String>) = (0..m.len())
        .into_par_iter()
        .map(|f| {
            let (mut count, mut violations) = (0u64, 0u64);
            let mut bad = Vec::new();
            for &g in &m.outgoing[m.cod[f]] {
                let fg = m.comp[f][m.out_pos[g]] as usize;
                for &h in &m.outgoing[m.cod[g]] {
                    count += 1;
                    let left = m.comp[fg][m.out_pos[h]];
                    let gh = m.comp[g][m.out_pos[h]] as usize;
                    let right = m.comp[f][m.out_pos[gh]];
                    if left != right {
                        violations += 1;
                        if bad.len() < AxiomCheck::KEEP {
                            bad.push(format!(
                                "({:?} · {:?}) · {:?}",
                                m.morphisms[f], m.morphisms[g], m.morphisms[h]
                            ));
                        }
                    }
                }
            }
            (count, violations, bad)
        })
        .reduce(
            || (0, 0, Vec::new()),
            |(c1, v1, mut b1), (c2, v2, b2)| {
                b1.extend(b2);
                (c1 + c2, v1 + v2, b1)
            },
        );
    assoc.checked = count;
    assoc.violation_count = violations;
    assoc.examples = bad.into_iter().take(AxiomCheck::KEEP).collect();

    // axiom 1: the inclusions form a strict preorder, i.e. a partial order
    let mut order = AxiomCheck::new("subobject-order");
    for (ai, a) in objs.iter().enumerate() {
        order.tick(cat.leq(a, a), || format!("{a:?} ⊄ itself"));
        order.tick(m.inclusion[ai][ai] == Some(m.identity[ai]), || {
            format!("j({a:?}, {a:?}) is not the identity")
        });
        for (bi, b) in objs.iter().enumerate() {
            let leq = cat.leq(a, b);
            order.tick(leq == m.inclusion[ai][bi].is_some(), || {
                format!("order and inclusions disagree on ({a:?}, {b:?})")
            });
            if let Some(j) = m.inclusion[ai][bi] {
                order.tick(m.dom[j] == ai && m.cod[j] == bi, || {
                    format!("j({a:?}, {b:?}) has the wrong type")
                });
            }
            if ai != bi {
                order.tick(!(leq && cat.leq(b, a)), || {
                    format!("{a:?} and {b:?} contain each other")
                });
            }
            for (ci, c) in objs.iter().enumerate() {
                if leq && cat.leq(b, c) {
                    order.tick(cat.leq(a, c), || {
                        format!("{a:?} ⊆ {b:?} ⊆ {c:?} not transitive")
                    });
                    if let (Some(ab), Some(bc), Some(ac)) = (
                        m.inclusion[ai][bi],
                        m.inclusion[bi][ci],
                        m.inclusion[ai][ci],
                    ) {
                        order.tick(m.compose(ab, bc) == Some(ac), || {
                            format!("j({a:?},{b:?}) · j({b:?},{c:?}) ≠ j({a:?},{c:?})")
                        });
                    }
                }
            }
        }
    }

    // axiom 2
    let mut monic = AxiomCheck::new("inclusions-monic");
    for ai in 0..k {
        for bi in 0..k {
            if let Some(j) = m.inclusion[ai][bi] {
                monic.tick(m.is_monic(j), || {
                    format!("{:?} is not a monomorphism", m.morphisms[j])
                });
            }
        }
    }

    // axiom 3
    let mut closure = AxiomCheck::new("factor-closure");
    for ci in 0..k {
        for ai in 0..k {
            let Some(f) = m.inclusion[ai][ci] else {
                continue;
            };
            for bi in 0..k {
                let Some(g) = m.inclusion[bi][ci] else {
                    continue;
                };
                for &h in &m.hom[ai][bi] {
                    if m.compose(h, g) == Some(f) {
                        closure.tick(m.inclusion[ai][bi] == Some(h), || {
                            format!(
                                "{:?} factors one inclusion through another but is not an inclusion",
                                m.morphisms[h]
                            )
                        });
                    }
                }
            }
        }
    }

    Ok(AxiomReport {
        objects: k,
        morphisms: m.len(),
        checks: vec![typing, identity, assoc, order, monic, closure],
    })
}
