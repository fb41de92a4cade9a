//! The eight acceptance criteria, each checked exhaustively at its stated
//! sizes and against its time limit. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use normcat::category::{
    check_category_with_subobjects, check_regular, cone_check, cone_product,
    enumerate_all_normal_cones, factorization_violations, generate_semigroup, is_retraction,
    FiniteCategory, NormalCategory, TieBreak,
};
use normcat::dual::NormalDual;
use normcat::iso::{
    functor_g, functor_p, functor_q, g_transport_failures, hom_cardinality_failures,
    round_trip_failures, verify_functor,
};
use normcat::partition::enumerate_partitions;
use normcat::partition_category::PartitionCategory;
use normcat::powerset::{h_equal, h_equal_extensional, h_object, HFunctor, PowersetCategory};
use normcat::right_ideal::RightIdealCategory;
use normcat::suites::{self, Suite, SuiteConfig, DEFAULT_BOUND};
use normcat::transformation::{all_maps, enumerate_singular, idempotents, Transformation};

type Outcome = Result<String, String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn all_morphisms<C: FiniteCategory>(cat: &C) -> Vec<C::Morphism> {
    let objs = cat.objects();
    objs.iter()
        .flat_map(|a| objs.iter().map(move |b| cat.hom(a, b)))
        .flatten()
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: normcat::Error) -> String {
    e.to_string()
}

fn pi_normality() -> Outcome {
    let mut notes = Vec::new();
    for n in [3, 4] {
        let pi = PartitionCategory::new(n).map_err(e2s)?;
        let axioms = check_category_with_subobjects(&pi, DEFAULT_BOUND).map_err(e2s)?;
        ensure(axioms.passed(), || {
            format!("n={n}: axioms {:?}", axioms.failures().next())
        })?;
        for a in pi.objects() {
            for b in pi.objects() {
                if a != b && pi.leq(a, b) {
                    let e = normcat::partition_category::retraction(a, b).map_err(e2s)?;
                    let j = pi.inclusion(a, b).unwrap();
                    ensure(
                        is_retraction(&pi, &e) && pi.compose(&j, &e).ok() == Some(pi.identity(a)),
                        || format!("n={n}: retraction law fails for {a} ⊆ {b}"),
                    )?;
                }
            }
        }
        let morphisms = all_morphisms(&pi);
        for f in &morphisms {
            let fact = pi.normal_factorization(f).map_err(e2s)?;
            let bad = factorization_violations(&pi, f, &fact);
            ensure(bad.is_empty(), || format!("n={n}: {f:?}: {bad:?}"))?;
            ensure(
                pi.compose(&fact.epimorphic_part, &fact.inclusion)
                    .ok()
                    .as_ref()
                    == Some(f),
                || format!("n={n}: {f:?} does not recompose"),
            )?;
        }
        for (i, c) in pi.objects().iter().enumerate() {
            let cone = pi.identity_cone(c).map_err(e2s)?;
            ensure(
                cone_check(&pi, &cone).map_err(e2s)?
                    && cone.is_normal()
                    && *cone.component(i) == pi.identity(c),
                || format!("n={n}: identity cone at {c}"),
            )?;
        }
        notes.push(format!(
            "n={n}: {} objects, {} morphisms",
            pi.objects().len(),
            morphisms.len()
        ));
    }
    Ok(notes.join("; "))
}

fn g_isomorphism() -> Outcome {
    let mut notes = Vec::new();
    for n in [3, 4] {
        let ri = RightIdealCategory::new(n).map_err(e2s)?;
        let pi = PartitionCategory::new(n).map_err(e2s)?;
        let dual = NormalDual::new(n).map_err(e2s)?;
        let (_, bad) = hom_cardinality_failures(&pi, &ri, &dual).map_err(e2s)?;
        ensure(bad.is_empty(), || {
            format!("n={n}: hom sizes differ: {}", bad[0])
        })?;
        let g = functor_g(&ri).map_err(e2s)?;
        let audit = verify_functor(&ri, &pi, &g, DEFAULT_BOUND);
        for c in &audit.checks {
            ensure(c.passed(), || {
                format!("n={n}: G.{} {:?}", c.label, c.counterexample)
            })?;
            ensure(
                c.note.is_none() || c.label != "composition" || n > 3,
                || "composition audit was partial at n=3".into(),
            )?;
        }
        let composition = audit.check("composition").unwrap();
        notes.push(format!(
            "n={n}: 9/9 audits, {} composable pairs{}",
            composition.checked,
            composition
                .note
                .as_deref()
                .map(|s| format!(" ({s})"))
                .unwrap_or_default()
        ));
    }
    Ok(notes.join("; "))
}

fn pq_isomorphism() -> Outcome {
    let pi = PartitionCategory::new(3).map_err(e2s)?;
    let dual = NormalDual::new(3).map_err(e2s)?;
    let p = functor_p(&dual).map_err(e2s)?;
    let q = functor_q(&pi).map_err(e2s)?;
    let (checked_pq, bad) = round_trip_failures(&dual, &p, &q);
    ensure(bad.is_empty(), || format!("P then Q moves {}", bad[0]))?;
    let (checked_qp, bad) = round_trip_failures(&pi, &q, &p);
    ensure(bad.is_empty(), || format!("Q then P moves {}", bad[0]))?;
    let audit = verify_functor(&dual, &pi, &p, DEFAULT_BOUND);
    ensure(audit.passed(), || {
        format!("P audit: {:?}", audit.checks.iter().find(|c| !c.passed()))
    })?;
    let config = SuiteConfig::new(3, vec![Suite::IsoPq], DEFAULT_BOUND)?;
    let report = suites::run(&config);
    ensure(report.exit_code() == 0, || report.to_text())?;
    Ok(format!(
        "identity tables on {checked_pq} + {checked_qp} items, P 9/9, suite exit 0"
    ))
}

fn cone_semigroup() -> Outcome {
    let ps = PowersetCategory::new(3).map_err(e2s)?;
    let maps = enumerate_singular(3).map_err(e2s)?;
    let seeds: Vec<_> = maps
        .iter()
        .map(|a| ps.principal_cone(a))
        .collect::<Result<_, _>>()
        .map_err(e2s)?;
    let sg = generate_semigroup(&ps, &seeds, 10_000).map_err(e2s)?;
    ensure(sg.len() == 21, || {
        format!("closure has {} elements", sg.len())
    })?;
    ensure(sg.associativity_violation.is_none(), || {
        format!("{:?}", sg.associativity_violation)
    })?;
    let witnesses = check_regular(&sg.table).map_err(|x| format!("element {x} has no inverse"))?;
    ensure(witnesses.len() == 21, || "missing witnesses".into())?;
    let mut pairs = 0;
    for n in [3, 4] {
        let ps = PowersetCategory::new(n).map_err(e2s)?;
        let maps = enumerate_singular(n).map_err(e2s)?;
        let cones: Vec<_> = maps
            .iter()
            .map(|a| ps.principal_cone(a))
            .collect::<Result<_, _>>()
            .map_err(e2s)?;
        for (a, ca) in maps.iter().zip(&cones) {
            for (b, cb) in maps.iter().zip(&cones) {
                pairs += 1;
                let product = cone_product(&ps, ca, cb).map_err(e2s)?;
                let expected = ps.principal_cone(&(a * b)).map_err(e2s)?;
                ensure(product == expected, || {
                    format!("n={n}: ρ^{a} ∗ ρ^{b} ≠ ρ^(ab)")
                })?;
            }
        }
    }
    ensure(pairs == 441 + 53_824, || format!("{pairs} pairs"))?;
    Ok(format!(
        "21 elements, associative, regular; {pairs} products ρ^a ∗ ρ^b = ρ^(ab)"
    ))
}

fn principality() -> Outcome {
    let ps = PowersetCategory::new(3).map_err(e2s)?;
    let found: BTreeSet<_> = enumerate_all_normal_cones(&ps, DEFAULT_BOUND)
        .map_err(e2s)?
        .into_iter()
        .collect();
    let principal: BTreeSet<_> = enumerate_singular(3)
        .map_err(e2s)?
        .iter()
        .map(|a| ps.principal_cone(a))
        .collect::<Result<_, _>>()
        .map_err(e2s)?;
    ensure(found.len() == 21, || {
        format!("{} normal cones", found.len())
    })?;
    ensure(found == principal, || {
        "normal cones differ from the principal cones".into()
    })?;
    Ok("21 normal cones, all principal".into())
}

fn h_functors() -> Outcome {
    let mut notes = Vec::new();
    for (n, expected) in [(3, 9 * 6), (4, 40 * 14)] {
        let ps = PowersetCategory::new(n).map_err(e2s)?;
        let every_map: Vec<Transformation> = all_maps(n).collect();
        let mut pairs = 0;
        for e in idempotents(n).map_err(e2s)? {
            let h = HFunctor::of(&e).map_err(e2s)?;
            let ker = e.kernel();
            for a in ps.objects() {
                pairs += 1;
                // maps constant on the blocks of ker e, with values in A
                let brute: BTreeSet<Transformation> = every_map
                    .iter()
                    .filter(|x| {
                        (0..n as u8).all(|p| {
                            (0..n as u8).all(|q| !ker.related(p, q) || x.apply(p) == x.apply(q))
                        }) && x.images().iter().all(|&y| a.contains(y))
                    })
                    .cloned()
                    .collect();
                ensure(h_object(&h, a) == brute, || format!("n={n}: H({e}; {a})"))?;
            }
        }
        ensure(pairs == expected, || format!("n={n}: {pairs} pairs"))?;
        notes.push(format!("n={n}: {pairs} pairs"));
    }
    let ps = PowersetCategory::new(3).map_err(e2s)?;
    let functors: Vec<HFunctor> = idempotents(3)
        .map_err(e2s)?
        .iter()
        .map(HFunctor::of)
        .collect::<Result<_, _>>()
        .map_err(e2s)?;
    for h1 in &functors {
        for h2 in &functors {
            ensure(h_equal(h1, h2) == h_equal_extensional(&ps, h1, h2), || {
                format!("{h1} vs {h2}")
            })?;
        }
    }
    notes.push(format!(
        "h_equal agrees on {} pairs",
        functors.len() * functors.len()
    ));
    Ok(notes.join("; "))
}

fn tie_break_independence<C: NormalCategory>(cat: &C) -> Result<usize, String> {
    let morphisms = all_morphisms(cat);
    for f in &morphisms {
        let a = cat
            .normal_factorization_with(f, TieBreak::Least)
            .map_err(e2s)?;
        let b = cat
            .normal_factorization_with(f, TieBreak::Greatest)
            .map_err(e2s)?;
        ensure(
            a.epimorphic_part == b.epimorphic_part && a.inclusion == b.inclusion,
            || format!("{f:?}: epimorphic parts or inclusions differ"),
        )?;
    }
    Ok(morphisms.len())
}

fn epimorphic_uniqueness() -> Outcome {
    let pi = PartitionCategory::new(3).map_err(e2s)?;
    let ri = RightIdealCategory::new(3).map_err(e2s)?;
    let a = tie_break_independence(&pi)?;
    let b = tie_break_independence(&ri)?;
    let g = functor_g(&ri).map_err(e2s)?;
    let (checked, bad) = g_transport_failures(&ri, &g).map_err(e2s)?;
    ensure(bad.is_empty(), || format!("transport fails: {}", bad[0]))?;
    Ok(format!(
        "{a} + {b} morphisms under both policies, {checked} transported"
    ))
}

fn counts() -> Outcome {
    let got = [
        enumerate_singular(3).map_err(e2s)?.len(),
        enumerate_singular(4).map_err(e2s)?.len(),
        idempotents(3).map_err(e2s)?.len(),
        idempotents(4).map_err(e2s)?.len(),
        enumerate_partitions(3, true).map_err(e2s)?.len(),
        enumerate_partitions(4, true).map_err(e2s)?.len(),
    ];
    ensure(got == [21, 232, 9, 40, 4, 14], || format!("counts {got:?}"))?;
    Ok("|T_X| 21/232, idempotents 9/40, objects 4/14".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 partition category is normal", 10, pi_normality),
        (
            "2 right-ideal category ≅ partition category",
            60,
            g_isomorphism,
        ),
        ("3 normal dual ≅ partition category", 30, pq_isomorphism),
        ("4 cone semigroup of principal cones", 120, cone_semigroup),
        ("5 normal cones are principal", 60, principality),
        ("6 H-functor characterization", 30, h_functors),
        ("7 epimorphic parts are unique", 30, epimorphic_uniqueness),
        ("8 combinatorial counts", 10, counts),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(note) if elapsed > Duration::from_secs(limit) => Err(format!(
                "{note}; took {:.2}s, limit {limit}s",
                elapsed.as_secs_f64()
            )),
            other => other,
        };
        match outcome {
            Ok(note) => println!(
                "PASS criterion {name} ({:.2}s < {limit}s): {note}",
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {name} ({:.2}s, limit {limit}s): {why}",
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
