//! Named verification suites over the structures at one base-set size, and
//! the report they produce.
//!
//! Every check is exhaustive unless its cost estimate exceeds the work
//! bound, in which case it is recorded as skipped.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{
    check_category_with_subobjects, check_regular, cone_check, cone_product, cone_star_epi,
    enumerate_all_normal_cones, epimorphic_part, factorization_violations, generate_semigroup,
    h_functors_equal, h_set, is_retraction, AxiomReport, ConeOf, FiniteCategory, NormalCategory,
    TieBreak,
};
use crate::dual::{compose_dual, dual_inclusion_test, dual_objects, NormalDual};
use crate::error::{Error, Result};
use crate::green::{divides_left_oracle, divides_right_oracle, green_l, green_r};
use crate::iso::{
    carrier_from_eta, eta_from_carrier, functor_g, functor_p, functor_q, g_transport_failures,
    hom_cardinality_failures, round_trip_failures, verify_functor,
};
use crate::partition::{enumerate_partitions, SetPartition};
use crate::partition_category::{normal_factorize, retraction, PartitionCategory};
use crate::powerset::{
    h_equal, h_equal_extensional, h_morphism, h_object, h_object_via_cones, powerset_objects,
    HFunctor, PowersetCategory,
};
use crate::report::{CheckRecord, Status};
use crate::right_ideal::{ideal_leq, lambda_equal, LambdaMorphism, RightIdealCategory};
use crate::subset::Subset;
use crate::transformation::{
    cross_sections, enumerate_singular, idempotent_from, idempotents, Transformation,
};

/// Default work bound, in elementary steps.
pub const DEFAULT_BOUND: u64 = 100_000_000;

/// Largest base set the suites accept.
pub const MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Suite {
    #[serde(rename = "core")]
    Core,
    #[serde(rename = "pi-normal")]
    PiNormal,
    #[serde(rename = "powerset")]
    Powerset,
    #[serde(rename = "dual")]
    Dual,
    #[serde(rename = "iso-G")]
    IsoG,
    #[serde(rename = "iso-PQ")]
    IsoPq,
    #[serde(rename = "cones")]
    Cones,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Core,
        Suite::PiNormal,
        Suite::Powerset,
        Suite::Dual,
        Suite::IsoG,
        Suite::IsoPq,
        Suite::Cones,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::PiNormal => "pi-normal",
            Suite::Powerset => "powerset",
            Suite::Dual => "dual",
            Suite::IsoG => "iso-G",
            Suite::IsoPq => "iso-PQ",
            Suite::Cones => "cones",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!(
                    "unknown suite {s:?} (expected one of {}, all)",
                    names.join(", ")
                )
            })
    }
}

/// Parses suite names, expanding `all`.
pub fn parse_suites<S: AsRef<str>>(names: &[S]) -> std::result::Result<Vec<Suite>, String> {
    let mut out = BTreeSet::new();
    for name in names {
        if name.as_ref().eq_ignore_ascii_case("all") {
            out.extend(Suite::ALL);
        } else {
            out.insert(name.as_ref().parse()?);
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub n: usize,
    pub suites: Vec<Suite>,
    pub bound: u64,
}

impl SuiteConfig {
    /// Validates and normalizes: suites are sorted and deduplicated.
    pub fn new(n: usize, suites: Vec<Suite>, bound: u64) -> std::result::Result<Self, String> {
        if !(2..=MAX_N).contains(&n) {
            return Err(format!("n must be between 2 and {MAX_N}, got {n}"));
        }
        if suites.is_empty() {
            return Err("no suites selected".into());
        }
        if bound == 0 {
            return Err("bound must be positive".into());
        }
        let suites: BTreeSet<Suite> = suites.into_iter().collect();
        Ok(Self {
            n,
            suites: suites.into_iter().collect(),
            bound,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteCheck {
    pub suite: Suite,
    #[serde(flatten)]
    pub record: CheckRecord,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub n: usize,
    pub bound: u64,
    pub suites: Vec<Suite>,
    pub checks: Vec<SuiteCheck>,
    pub summary: Summary,
}

impl Report {
    fn new(config: &SuiteConfig, checks: Vec<SuiteCheck>) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.record.status == s).count();
        let (pass, fail, skipped) = (
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped),
        );
        let status = if fail > 0 {
            Status::Fail
        } else if skipped > 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        Self {
            n: config.n,
            bound: config.bound,
            suites: config.suites.clone(),
            checks,
            summary: Summary {
                pass,
                fail,
                skipped,
                status,
            },
        }
    }

    pub fn status(&self) -> Status {
        self.summary.status
    }

    /// 0 when everything passed, 1 on any failure, 3 when nothing failed
    /// but some check was skipped.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skipped => 3,
        }
    }

    pub fn check(&self, label: &str) -> Option<&SuiteCheck> {
        self.checks.iter().find(|c| c.record.label == label)
    }

    /// Pretty JSON. Timings are left out so identical runs give identical
    /// bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "normcat  n={}  bound={}  suites={}\n",
            self.n,
            self.bound,
            self.suites
                .iter()
                .map(|s| s.name())
                .collect::<Vec<_>>()
                .join(",")
        );
        let width = self
            .checks
            .iter()
            .map(|c| c.record.label.len())
            .max()
            .unwrap_or(0);
        for c in &self.checks {
            let r = &c.record;
            out.push_str(&format!(
                "{:<9} {:<7} {:<width$} {:>10} cases {:>8.2}s",
                c.suite.name(),
                r.status.to_string().to_uppercase(),
                r.label,
                r.checked,
                c.elapsed.as_secs_f64(),
            ));
            if let Some(note) = &r.note {
                out.push_str(&format!("  ({note})"));
            }
            out.push('\n');
            if let Some(cx) = &r.counterexample {
                out.push_str(&format!("          counterexample: {cx}\n"));
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skipped -> {}\n",
            self.summary.pass,
            self.summary.fail,
            self.summary.skipped,
            self.status()
        ));
        out
    }
}

/// Runs the selected suites concurrently; the report lists checks in suite
/// order and, within a suite, in a fixed order.
pub fn run(config: &SuiteConfig) -> Report {
    let per_suite: Vec<Vec<SuiteCheck>> = config
        .suites
        .par_iter()
        .map(|&suite| run_suite(suite, config.n, config.bound))
        .collect();
    Report::new(config, per_suite.into_iter().flatten().collect())
}

pub fn run_suite(suite: Suite, n: usize, bound: u64) -> Vec<SuiteCheck> {
    let mut r = Runner {
        suite,
        n,
        bound,
        out: Vec::new(),
    };
    let setup = match suite {
        Suite::Core => core_suite(&mut r),
        Suite::PiNormal => pi_suite(&mut r),
        Suite::Powerset => powerset_suite(&mut r),
        Suite::Dual => dual_suite(&mut r),
        Suite::IsoG => iso_g_suite(&mut r),
        Suite::IsoPq => iso_pq_suite(&mut r),
        Suite::Cones => cones_suite(&mut r),
    };
    if let Err(e) = setup {
        r.push(format!("{}.setup", suite.name()), Err(e), Duration::ZERO);
    }
    r.out
}

struct Runner {
    suite: Suite,
    n: usize,
    bound: u64,
    out: Vec<SuiteCheck>,
}

impl Runner {
    fn check(&mut self, label: &str, f: impl FnOnce(Gate) -> Result<CheckRecord>) {
        let start = Instant::now();
        let result = f(Gate { bound: self.bound });
        self.push(label.to_string(), result, start.elapsed());
    }

    fn push(&mut self, label: String, result: Result<CheckRecord>, elapsed: Duration) {
        let record = match result {
            Ok(mut r) => {
                r.label = label;
                r
            }
            Err(e @ Error::BoundExceeded { .. }) => CheckRecord::skipped(label, e.to_string()),
            Err(e) => CheckRecord::fail(label, 0, json!({ "error": e.to_string() })),
        };
        self.out.push(SuiteCheck {
            suite: self.suite,
            record,
            elapsed,
        });
    }

    fn gate(&self, what: &str, needed: u128) -> Result<()> {
        Gate { bound: self.bound }.gate(what, needed)
    }
}

#[derive(Debug, Clone, Copy)]
struct Gate {
    bound: u64,
}

impl Gate {
    /// Errors with `BoundExceeded` when `needed` is above the bound.
    fn gate(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.bound as u128 {
            Err(Error::BoundExceeded {
                what: what.to_string(),
                needed,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }
}

fn enc<X: Serialize>(x: &X) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn all_morphisms<C: FiniteCategory>(cat: &C) -> Vec<C::Morphism> {
    let objs = cat.objects();
    objs.iter()
        .flat_map(|a| objs.iter().map(move |b| (a, b)))
        .flat_map(|(a, b)| cat.hom(a, b))
        .collect()
}

fn axiom_record(report: AxiomReport) -> CheckRecord {
    let checked = report.checks.iter().map(|c| c.checked).sum();
    let failures = report
        .failures()
        .map(
            |c| json!({ "axiom": c.name, "violations": c.violation_count, "examples": c.examples }),
        )
        .collect();
    CheckRecord::from_failures("", checked, failures).with_note(format!(
        "{} objects, {} morphisms",
        report.objects, report.morphisms
    ))
}

/// Number of block maps `π_q → π_p` over all pairs of non-identity
/// partitions: the morphism count shared by the three isomorphic
/// categories.
fn block_map_count(n: usize) -> Result<u128> {
    let parts = enumerate_partitions(n, true)?;
    Ok(parts
        .iter()
        .flat_map(|p| parts.iter().map(move |q| (p, q)))
        .map(|(p, q)| (p.num_blocks() as u128).pow(q.num_blocks() as u32))
        .sum())
}

/// Morphisms counted once per choice of idempotents in the source and
/// target kernel classes: the work of building a functor witness.
fn presentation_count(n: usize) -> Result<u128> {
    let parts = enumerate_partitions(n, true)?;
    let sections = |p: &SetPartition| -> u128 {
        (0..p.num_blocks())
            .map(|i| p.block_len(i) as u128)
            .product()
    };
    Ok(parts
        .iter()
        .flat_map(|p| parts.iter().map(move |q| (p, q)))
        .map(|(p, q)| {
            (p.num_blocks() as u128).pow(q.num_blocks() as u32) * sections(p) * sections(q)
        })
        .sum())
}

fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn count_check(expected: u64, got: u64) -> CheckRecord {
    if expected == got {
        CheckRecord::pass("", 1).with_note(format!("{got}"))
    } else {
        CheckRecord::fail("", 1, json!({ "expected": expected, "got": got }))
    }
}

// ---------------------------------------------------------------- core

fn core_suite(r: &mut Runner) -> Result<()> {
    let n = r.n;
    let nn = (n as u64).pow(n as u32);
    let singular = enumerate_singular(n)?;

    r.check("counts.singular", |_| {
        let factorial: u64 = (1..=n as u64).product();
        Ok(count_check(nn - factorial, singular.len() as u64))
    });
    r.check("counts.idempotents", |_| {
        let expected: u64 = (1..=n as u64)
            .map(|k| binomial(n as u64, k) * k.pow((n as u64 - k) as u32))
            .sum::<u64>()
            - 1;
        Ok(count_check(expected, idempotents(n)?.len() as u64))
    });
    r.check("counts.partitions", |_| {
        Ok(count_check(
            bell(n) - 1,
            enumerate_partitions(n, true)?.len() as u64,
        ))
    });
    r.check("core.refinement-order", |w| {
        let parts = enumerate_partitions(n, false)?;
        let k = parts.len() as u128;
        w.gate("refinement order", k * k * k)?;
        let leq: Vec<Vec<bool>> = parts
            .iter()
            .map(|p| parts.iter().map(|q| p.refines(q)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let mut bad = Vec::new();
        for i in 0..parts.len() {
            if !leq[i][i] {
                bad.push(json!({ "reflexivity": enc(&parts[i]) }));
            }
            for j in 0..parts.len() {
                if i != j && leq[i][j] && leq[j][i] {
                    bad.push(json!({ "antisymmetry": [enc(&parts[i]), enc(&parts[j])] }));
                }
                for k in 0..parts.len() {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        bad.push(json!({ "transitivity": [enc(&parts[i]), enc(&parts[j]), enc(&parts[k])] }));
                    }
                }
            }
        }
        Ok(CheckRecord::from_failures("", (k * k * k) as u64, bad))
    });
    r.check("core.green-divisibility", |w| {
        let t = singular.len() as u128;
        w.gate("divisibility search", t * t * nn as u128 * 2)?;
        let bad: Vec<Value> = singular
            .par_iter()
            .flat_map_iter(|a| {
                singular.iter().filter_map(move |b| {
                    let right_ideal = divides_left_oracle(a, b).is_some();
                    let left_ideal = divides_right_oracle(a, b).is_some();
                    let kernel_ok = right_ideal == a.kernel().refines(&b.kernel()).ok()?;
                    let image_ok = left_ideal
                        == b.image_points()
                            .iter()
                            .all(|y| a.image_points().contains(y));
                    let r_ok =
                        green_r(a, b) == (right_ideal && divides_left_oracle(b, a).is_some());
                    let l_ok =
                        green_l(a, b) == (left_ideal && divides_right_oracle(b, a).is_some());
                    (!(kernel_ok && image_ok && r_ok && l_ok))
                        .then(|| json!({ "a": enc(a), "b": enc(b) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures("", (t * t) as u64, bad))
    });
    r.check("core.idempotent-from", |_| {
        let mut built = BTreeSet::new();
        let mut bad = Vec::new();
        let mut checked = 0;
        for p in enumerate_partitions(n, true)? {
            for a in cross_sections(&p) {
                checked += 1;
                let e = idempotent_from(&p, &a)?;
                if !e.is_idempotent() || e.kernel() != p || e.image_points() != a.members() {
                    bad.push(json!({ "partition": enc(&p), "cross_section": enc(&a) }));
                }
                built.insert(e);
            }
        }
        let all: BTreeSet<_> = idempotents(n)?.into_iter().collect();
        if built != all {
            bad.push(json!({ "built": built.len(), "idempotents": all.len() }));
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("core.kernel-image-products", |w| {
        let t = singular.len() as u128;
        w.gate("product check", t * t * n as u128)?;
        let bad: Vec<Value> = singular
            .par_iter()
            .flat_map_iter(|s| {
                singular.iter().filter_map(move |t| {
                    let st = s * t;
                    let ok = s.kernel().refines(&st.kernel()).unwrap_or(false)
                        && st
                            .image_points()
                            .iter()
                            .all(|y| t.image_points().contains(y));
                    (!ok).then(|| json!({ "s": enc(s), "t": enc(t) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures("", (t * t) as u64, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- Π(X)

/// Recomposition under both tie-breaks, plus agreement of the epimorphic
/// parts and inclusions between them.
fn factorization_failures<C: NormalCategory>(
    cat: &C,
    morphisms: &[C::Morphism],
) -> Result<(u64, Vec<Value>, Vec<Value>)> {
    let results = morphisms
        .par_iter()
        .map(|f| {
            let least = cat.normal_factorization_with(f, TieBreak::Least)?;
            let greatest = cat.normal_factorization_with(f, TieBreak::Greatest)?;
            let mut bad = factorization_violations(cat, f, &least);
            bad.extend(factorization_violations(cat, f, &greatest));
            let recomposed = cat.compose(&least.epimorphic_part, &least.inclusion)?;
            if &recomposed != f {
                bad.push("recomposition differs".into());
            }
            let fact = (!bad.is_empty()).then(|| json!({ "morphism": enc(f), "violations": bad }));
            let indep = (least.epimorphic_part != greatest.epimorphic_part
                || least.inclusion != greatest.inclusion)
                .then(|| json!({ "morphism": enc(f), "least": enc(&least), "greatest": enc(&greatest) }));
            Ok((fact, indep))
        })
        .collect::<Result<Vec<_>>>()?;
    let (fact, indep): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok((
        morphisms.len() as u64,
        fact.into_iter().flatten().collect(),
        indep.into_iter().flatten().collect(),
    ))
}

fn identity_cone_failures<C: NormalCategory>(cat: &C) -> Result<(u64, Vec<Value>)> {
    let mut bad = Vec::new();
    for (i, c) in cat.objects().iter().enumerate() {
        let cone = cat.identity_cone(c)?;
        if !cone_check(cat, &cone)? || !cone.is_normal() || cone.component(i) != &cat.identity(c) {
            bad.push(json!({ "vertex": enc(c) }));
        }
    }
    Ok((cat.objects().len() as u64, bad))
}

fn pi_suite(r: &mut Runner) -> Result<()> {
    let pi = PartitionCategory::new(r.n)?;
    let count = block_map_count(r.n)?;

    r.check("pi.category-axioms", |w| {
        Ok(axiom_record(check_category_with_subobjects(&pi, w.bound)?))
    });
    r.check("pi.retraction-law", |_| {
        let mut bad = Vec::new();
        let mut checked = 0;
        for a in pi.objects() {
            for b in pi.objects() {
                if a == b || !pi.leq(a, b) {
                    continue;
                }
                checked += 1;
                let e = retraction(a, b)?;
                let j = pi.inclusion(a, b).expect("a ⊆ b");
                if pi.compose(&j, &e)? != pi.identity(a) || !is_retraction(&pi, &e) {
                    bad.push(json!({ "small": enc(a), "big": enc(b) }));
                }
            }
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    let morphisms = (count <= r.bound as u128).then(|| all_morphisms(&pi));
    let start = Instant::now();
    let factored = morphisms.as_ref().map(|m| factorization_failures(&pi, m));
    let factoring = start.elapsed();
    r.check("pi.normal-factorization", |w| {
        w.gate("factorization of every morphism", count)?;
        let (checked, mut bad, _) = factored.clone().expect("gated")?;
        // the intermediate partitions: γ̄ and σ̄ have as many blocks as Im η
        bad.extend(
            morphisms
                .as_ref()
                .expect("gated")
                .par_iter()
                .filter_map(|f| {
                    let pf = normal_factorize(f, TieBreak::Least);
                    let ok = pf.gamma.num_blocks() == pf.image_blocks.len()
                        && pf.sigma.num_blocks() == pf.image_blocks.len();
                    (!ok).then(|| json!({ "morphism": enc(f) }))
                })
                .collect::<Vec<_>>(),
        );
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.out.last_mut().expect("just pushed").elapsed += factoring;
    r.check("pi.epimorphic-part-independence", |w| {
        w.gate("factorization of every morphism", count)?;
        let (checked, _, indep) = factored.clone().expect("gated")?;
        Ok(CheckRecord::from_failures("", checked, indep))
    });
    r.check("pi.identity-cones", |_| {
        let (checked, bad) = identity_cone_failures(&pi)?;
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("pi.semantic-action", |w| {
        // acting by f then g must match acting by the composite
        let objs = pi.objects();
        let max_blocks = objs.iter().map(|o| o.num_blocks()).max().unwrap_or(1);
        let pairs: u128 = objs
            .iter()
            .flat_map(|a| objs.iter().map(move |b| (a, b)))
            .flat_map(|(a, b)| objs.iter().map(move |c| (a, b, c)))
            .map(|(a, b, c)| {
                (b.num_blocks() as u128).pow(a.num_blocks() as u32)
                    * (c.num_blocks() as u128).pow(b.num_blocks() as u32)
            })
            .sum();
        w.gate(
            "block-map action",
            pairs * (max_blocks as u128).pow(max_blocks as u32),
        )?;
        let mut checked = 0u64;
        let mut bad = Vec::new();
        for a in objs {
            for b in objs {
                for f in pi.hom(a, b) {
                    for c in objs {
                        for g in pi.hom(b, c) {
                            let fg = pi.compose(&f, &g)?;
                            // α labels the blocks of the source; k labels suffice
                            let k = a.num_blocks();
                            for code in 0..k.pow(k as u32) {
                                let alpha: Vec<u8> = (0..k)
                                    .map(|i| ((code / k.pow(i as u32)) % k) as u8)
                                    .collect();
                                checked += 1;
                                if fg.act(&alpha) != g.act(&f.act(&alpha)) {
                                    bad.push(json!({ "f": enc(&f), "g": enc(&g), "alpha": alpha }));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- 𝒫(X)

fn powerset_suite(r: &mut Runner) -> Result<()> {
    let n = r.n;
    let ps = PowersetCategory::new(n)?;
    let objs = ps.objects().to_vec();
    let singular = enumerate_singular(n)?;
    let idem = idempotents(n)?;
    let t = singular.len() as u128;
    let k = objs.len() as u128;

    r.check("powerset.category-axioms", |w| {
        Ok(axiom_record(check_category_with_subobjects(&ps, w.bound)?))
    });
    r.check("powerset.normal-factorization", |w| {
        let count: u128 = objs
            .iter()
            .flat_map(|a| {
                objs.iter()
                    .map(move |b| (b.len() as u128).pow(a.len() as u32))
            })
            .sum();
        w.gate("factorization of every morphism", count * n as u128)?;
        let morphisms = all_morphisms(&ps);
        let (checked, mut bad, indep) = factorization_failures(&ps, &morphisms)?;
        bad.extend(indep);
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("powerset.principal-cones", |w| {
        w.gate("principal cones", t * k * k)?;
        let bad: Vec<Value> = singular
            .par_iter()
            .filter_map(|a| {
                let ok = ps.principal_cone(a).ok().is_some_and(|cone| {
                    cone_check(&ps, &cone).unwrap_or(false)
                        && cone.is_normal()
                        && ps.principal_of(&cone).as_ref() == Some(a)
                        && cone
                            .m_set()
                            .iter()
                            .map(|&i| objs[i].clone())
                            .eq(cross_sections(&a.kernel()))
                });
                (!ok).then(|| json!({ "a": enc(a) }))
            })
            .collect();
        Ok(CheckRecord::from_failures("", t as u64, bad))
    });
    r.check("powerset.rho-homomorphism", |w| {
        w.gate("principal cone products", t * t * k * k)?;
        let cones: Vec<ConeOf<PowersetCategory>> = singular
            .par_iter()
            .map(|a| ps.principal_cone(a))
            .collect::<Result<_>>()?;
        let bad: Vec<Value> = (0..singular.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let (ps, cones, singular) = (&ps, &cones, &singular);
                (0..singular.len()).filter_map(move |j| {
                    let ab = &singular[i] * &singular[j];
                    let ok = cone_product(ps, &cones[i], &cones[j]).ok().as_ref()
                        == ps.principal_cone(&ab).ok().as_ref();
                    (!ok).then(|| json!({ "a": enc(&singular[i]), "b": enc(&singular[j]) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures("", (t * t) as u64, bad))
    });
    r.check("powerset.principality", |w| {
        let cones = enumerate_all_normal_cones(&ps, w.bound)?;
        let found: BTreeSet<_> = cones.iter().collect();
        let principal: Vec<_> = singular
            .iter()
            .map(|a| ps.principal_cone(a))
            .collect::<Result<_>>()?;
        let principal: BTreeSet<_> = principal.iter().collect();
        let mut bad = Vec::new();
        if found != principal {
            let extra = found.difference(&principal).next().map(enc);
            let missing = principal.difference(&found).next().map(enc);
            bad.push(json!({
                "found": found.len(),
                "principal": principal.len(),
                "extra": extra,
                "missing": missing,
            }));
        }
        Ok(CheckRecord::from_failures("", cones.len() as u64, bad)
            .with_note(format!("{} normal cones", cones.len())))
    });
    r.check("powerset.h-object", |w| {
        let max_hom = (n as u128 - 1).pow(n as u32 - 1);
        w.gate("H-sets from cones", idem.len() as u128 * k * max_hom * k)?;
        let bad: Vec<Value> = idem
            .par_iter()
            .flat_map_iter(|e| {
                let ps = &ps;
                objs.iter().filter_map(move |a| {
                    let h = HFunctor::of(e).ok()?;
                    let filtered: BTreeSet<Transformation> = enumerate_singular(n)
                        .ok()?
                        .into_iter()
                        .filter(|x| {
                            e.kernel().refines(&x.kernel()).unwrap_or(false)
                                && x.images().iter().all(|&y| a.contains(y))
                        })
                        .collect();
                    let via = h_object_via_cones(ps, e, a).ok();
                    let ok = h_object(&h, a) == filtered && via.as_ref() == Some(&filtered);
                    (!ok).then(|| json!({ "e": enc(e), "subset": enc(a) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures(
            "",
            idem.len() as u64 * k as u64,
            bad,
        ))
    });
    r.check("powerset.h-equal", |w| {
        w.gate("H-set tables", idem.len() as u128 * k * t)?;
        let functors: Vec<HFunctor> = idem.iter().map(HFunctor::of).collect::<Result<_>>()?;
        let tables: Vec<Vec<BTreeSet<Transformation>>> = functors
            .par_iter()
            .map(|h| objs.iter().map(|a| h_object(h, a)).collect())
            .collect();
        let mut bad = Vec::new();
        for i in 0..functors.len() {
            for j in 0..functors.len() {
                if h_equal(&functors[i], &functors[j]) != (tables[i] == tables[j]) {
                    bad.push(json!({ "e": enc(&idem[i]), "f": enc(&idem[j]) }));
                }
            }
        }
        // the extensional comparison itself, on the diagonal and one neighbour
        for i in 0..functors.len() {
            let j = (i + 1) % functors.len();
            if h_equal_extensional(&ps, &functors[i], &functors[j]) != (tables[i] == tables[j]) {
                bad.push(json!({ "e": enc(&idem[i]), "f": enc(&idem[j]) }));
            }
        }
        Ok(CheckRecord::from_failures(
            "",
            (functors.len() * functors.len()) as u64,
            bad,
        ))
    });
    r.check("powerset.h-morphism", |w| {
        let morphisms: u128 = objs
            .iter()
            .flat_map(|a| {
                objs.iter()
                    .map(move |b| (b.len() as u128).pow(a.len() as u32))
            })
            .sum();
        w.gate("H-functor action", (bell(n) as u128) * morphisms * t)?;
        let functors = dual_objects(n)?;
        let morphisms = all_morphisms(&ps);
        let bad: Vec<Value> = functors
            .par_iter()
            .flat_map_iter(|h| {
                let sets: BTreeMap<&Subset, BTreeSet<Transformation>> =
                    objs.iter().map(|a| (a, h_object(h, a))).collect();
                let ps = &ps;
                morphisms.iter().filter_map(move |g| {
                    let map = h_morphism(h, g);
                    let lands = map.values().all(|v| sets[g.target()].contains(v));
                    let identity = g.source() != g.target()
                        || *g != ps.identity(g.source())
                        || map.iter().all(|(a, b)| a == b);
                    (!(lands && identity)).then(|| json!({ "functor": enc(h), "g": enc(g) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures(
            "",
            (functors.len() * morphisms.len()) as u64,
            bad,
        ))
    });
    r.check("powerset.identity-cones", |_| {
        let (checked, bad) = identity_cone_failures(&ps)?;
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- N*𝒫(X)

fn dual_suite(r: &mut Runner) -> Result<()> {
    let n = r.n;
    let count = block_map_count(n)?;
    r.gate("normal dual", count * (1u128 << n))?;
    let dual = NormalDual::new(n)?;
    let subsets = powerset_objects(n)?;
    let objs = dual.objects().to_vec();
    let h_sets: Vec<Vec<BTreeSet<Transformation>>> = objs
        .par_iter()
        .map(|h| subsets.iter().map(|a| h_object(h, a)).collect())
        .collect();

    r.check("dual.objects", |_| {
        let idem = idempotents(n)?;
        let classes: BTreeSet<SetPartition> = idem.iter().map(|e| e.kernel()).collect();
        let mut bad = Vec::new();
        if classes.len() != objs.len() || objs.len() as u64 != bell(n) - 1 {
            bad.push(json!({ "objects": objs.len(), "kernel classes": classes.len() }));
        }
        for h in &objs {
            let rep = h.representative();
            let least = idem.iter().filter(|e| &e.kernel() == h.kernel()).min();
            if !rep.is_idempotent() || Some(rep) != least {
                bad.push(json!({ "functor": enc(h), "representative": enc(rep) }));
            }
        }
        Ok(CheckRecord::from_failures("", objs.len() as u64, bad))
    });
    r.check("dual.category-axioms", |w| {
        Ok(axiom_record(check_category_with_subobjects(
            &dual, w.bound,
        )?))
    });
    r.check("dual.order-kernels", |_| {
        let mut bad = Vec::new();
        for a in &objs {
            for b in &objs {
                if dual.leq(a, b) != b.kernel().refines(a.kernel())? {
                    bad.push(json!({ "a": enc(a), "b": enc(b) }));
                }
            }
        }
        Ok(CheckRecord::from_failures(
            "",
            (objs.len() * objs.len()) as u64,
            bad,
        ))
    });
    let index = |h: &HFunctor| objs.binary_search(h).expect("known object");
    r.check("dual.apply-lands", |_| {
        let mut bad = Vec::new();
        let mut checked = 0;
        for a in &objs {
            for b in &objs {
                for m in dual.hom(a, b) {
                    for (c, set) in h_sets[index(a)].iter().enumerate() {
                        for x in set {
                            checked += 1;
                            if !h_sets[index(b)][c].contains(&(m.hat() * x)) {
                                bad.push(json!({ "morphism": enc(&m), "element": enc(x) }));
                            }
                        }
                    }
                }
            }
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("dual.componentwise-composition", |w| {
        let max_h = h_sets.iter().flatten().map(|s| s.len()).max().unwrap_or(0) as u128;
        let pairs: u128 = objs
            .iter()
            .flat_map(|a| objs.iter().map(move |b| (a, b)))
            .flat_map(|(a, b)| objs.iter().map(move |c| (a, b, c)))
            .map(|(a, b, c)| {
                (a.kernel().num_blocks() as u128).pow(b.kernel().num_blocks() as u32)
                    * (b.kernel().num_blocks() as u128).pow(c.kernel().num_blocks() as u32)
            })
            .sum();
        w.gate("componentwise composition", pairs * max_h)?;
        let bad: Vec<Value> = objs
            .par_iter()
            .flat_map_iter(|a| {
                let mut bad = Vec::new();
                for b in &objs {
                    for sigma in dual.hom(a, b) {
                        for c in &objs {
                            for tau in dual.hom(b, c) {
                                let st = match compose_dual(&sigma, &tau) {
                                    Ok(st) => st,
                                    Err(e) => {
                                        bad.push(json!({ "error": e.to_string() }));
                                        continue;
                                    }
                                };
                                let ok = h_sets[index(a)]
                                    .iter()
                                    .flatten()
                                    .all(|x| st.hat() * x == tau.hat() * &(sigma.hat() * x));
                                if !ok {
                                    bad.push(json!({ "sigma": enc(&sigma), "tau": enc(&tau) }));
                                }
                            }
                        }
                    }
                }
                bad
            })
            .collect();
        Ok(CheckRecord::from_failures("", pairs as u64, bad))
    });
    r.check("dual.naturality", |w| {
        let ps = PowersetCategory::new(n)?;
        let set_morphisms = all_morphisms(&ps);
        let max_h = h_sets.iter().flatten().map(|s| s.len()).max().unwrap_or(0) as u128;
        w.gate(
            "naturality squares",
            count * set_morphisms.len() as u128 * max_h,
        )?;
        // H(e; g) for every functor and every g, computed once
        let actions: Vec<Vec<BTreeMap<Transformation, Transformation>>> = objs
            .par_iter()
            .map(|h| set_morphisms.iter().map(|g| h_morphism(h, g)).collect())
            .collect();
        let all = all_morphisms(&dual);
        let bad: Vec<Value> = all
            .par_iter()
            .flat_map_iter(|m| {
                let (i, k) = (index(m.source()), index(m.target()));
                let (set_morphisms, actions) = (&set_morphisms, &actions);
                set_morphisms.iter().enumerate().filter_map(move |(gi, g)| {
                    let ok = actions[i][gi].iter().all(|(x, after)| {
                        actions[k][gi].get(&(m.hat() * x)) == Some(&(m.hat() * after))
                    });
                    (!ok).then(|| json!({ "morphism": enc(m), "g": enc(g) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures(
            "",
            (all.len() * set_morphisms.len()) as u64,
            bad,
        ))
    });
    r.check("dual.hat-uniqueness", |_| {
        let mut bad = Vec::new();
        let mut checked = 0;
        for a in &objs {
            for b in &objs {
                let mut seen = HashSet::new();
                for m in dual.hom(a, b) {
                    checked += 1;
                    let components: Vec<Vec<Transformation>> = h_sets[index(a)]
                        .iter()
                        .map(|set| set.iter().map(|x| m.hat() * x).collect())
                        .collect();
                    if !seen.insert(components) {
                        bad.push(json!({ "morphism": enc(&m) }));
                    }
                }
            }
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("dual.inclusion-test", |_| {
        let mut bad = Vec::new();
        let mut checked = 0;
        for a in &objs {
            for b in &objs {
                let inclusion = dual.inclusion(a, b);
                for m in dual.hom(a, b) {
                    checked += 1;
                    if dual_inclusion_test(&m) != (inclusion.as_ref() == Some(&m)) {
                        bad.push(json!({ "morphism": enc(&m) }));
                    }
                }
            }
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- ℛ(T_X) and G

fn iso_g_suite(r: &mut Runner) -> Result<()> {
    let n = r.n;
    let count = block_map_count(n)?;
    let ri = RightIdealCategory::new(n)?;
    let pi = PartitionCategory::new(n)?;
    let singular = enumerate_singular(n)?;
    let t = singular.len() as u128;

    r.check("rideal.category-axioms", |w| {
        Ok(axiom_record(check_category_with_subobjects(&ri, w.bound)?))
    });
    r.check("rideal.order-ideals", |w| {
        let objs = ri.objects();
        w.gate("right ideals", objs.len() as u128 * t * t)?;
        // eS as a set, straight from products
        let ideals: Vec<BTreeSet<Transformation>> = objs
            .iter()
            .map(|o| singular.iter().map(|s| o.representative() * s).collect())
            .collect();
        let mut bad = Vec::new();
        for (i, a) in objs.iter().enumerate() {
            for (j, b) in objs.iter().enumerate() {
                if ideal_leq(a, b) != ideals[i].is_subset(&ideals[j])
                    || ri.leq(a, b) != ideal_leq(a, b)
                {
                    bad.push(json!({ "a": enc(a), "b": enc(b) }));
                }
            }
        }
        Ok(CheckRecord::from_failures(
            "",
            (objs.len() * objs.len()) as u64,
            bad,
        ))
    });
    let morphisms = (count <= r.bound as u128).then(|| all_morphisms(&ri));
    let start = Instant::now();
    let factored = morphisms.as_ref().map(|m| factorization_failures(&ri, m));
    let factoring = start.elapsed();
    for (label, pick) in [
        ("rideal.normal-factorization", 0),
        ("rideal.epimorphic-part-independence", 1),
    ] {
        r.check(label, |w| {
            w.gate("factorization of every morphism", count)?;
            let (checked, fact, indep) = factored.clone().expect("gated")?;
            Ok(CheckRecord::from_failures(
                "",
                checked,
                if pick == 0 { fact } else { indep },
            ))
        });
        if pick == 0 {
            r.out.last_mut().expect("just pushed").elapsed += factoring;
        }
    }
    r.check("rideal.lambda-equal-eta", |w| {
        w.gate("pairwise comparison", count * count)?;
        let all = morphisms.as_ref().expect("gated");
        let etas: Vec<Vec<u8>> = all
            .par_iter()
            .map(|m| {
                eta_from_carrier(
                    m.source().representative(),
                    m.carrier(),
                    m.target().representative(),
                )
            })
            .collect::<Result<_>>()?;
        let bad: Vec<Value> = (0..all.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let (all, etas) = (all, &etas);
                (0..all.len()).filter_map(move |j| {
                    let same_ends =
                        all[i].source() == all[j].source() && all[i].target() == all[j].target();
                    let by_eta = same_ends && etas[i] == etas[j];
                    (lambda_equal(&all[i], &all[j]) != by_eta)
                        .then(|| json!({ "m1": enc(&all[i]), "m2": enc(&all[j]) }))
                })
            })
            .collect();
        Ok(CheckRecord::from_failures(
            "",
            (all.len() * all.len()) as u64,
            bad,
        ))
    });
    r.check("rideal.presentations", |w| {
        w.gate("alternate presentations", presentation_count(n)?)?;
        let all = morphisms.as_ref().expect("gated");
        let mut checked = 0u64;
        let mut bad = Vec::new();
        for m in all {
            for e in ri
                .idempotents()
                .iter()
                .filter(|e| &e.kernel() == m.source().kernel())
            {
                for f in ri
                    .idempotents()
                    .iter()
                    .filter(|f| &f.kernel() == m.target().kernel())
                {
                    checked += 1;
                    let v = m.carrier() * e;
                    if LambdaMorphism::from_parts(e, &v, f).ok().as_ref() != Some(m) {
                        bad.push(json!({ "morphism": enc(m), "e": enc(e), "f": enc(f) }));
                    }
                }
            }
        }
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("rideal.identity-cones", |_| {
        let (checked, bad) = identity_cone_failures(&ri)?;
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("rideal.block-map-round-trip", |w| {
        w.gate("round trip", count * n as u128 * 2)?;
        let mut bad = Vec::new();
        for m in morphisms.as_ref().expect("gated") {
            let (e, f) = (m.source().representative(), m.target().representative());
            let eta = eta_from_carrier(e, m.carrier(), f)?;
            if &carrier_from_eta(&eta, e, f)? != m.carrier() {
                bad.push(json!({ "morphism": enc(m) }));
            }
        }
        for f in all_morphisms(&pi) {
            let (e, g) = (
                crate::transformation::min_idempotent(f.source().partition()),
                crate::transformation::min_idempotent(f.target().partition()),
            );
            let v = carrier_from_eta(f.eta(), &e, &g)?;
            if eta_from_carrier(&e, &v, &g)? != f.eta() {
                bad.push(json!({ "block_map": enc(&f) }));
            }
        }
        Ok(CheckRecord::from_failures("", count as u64 * 2, bad))
    });

    let presentations = presentation_count(n)?;
    let witness = r
        .gate("functor G", presentations)
        .and_then(|_| functor_g(&ri));
    match witness {
        Ok(g) => {
            let start = Instant::now();
            let audit = verify_functor(&ri, &pi, &g, r.bound);
            let elapsed = start.elapsed();
            for (i, record) in audit.checks.into_iter().enumerate() {
                let label = format!("G.{}", record.label);
                r.push(
                    label,
                    Ok(record),
                    if i == 0 { elapsed } else { Duration::ZERO },
                );
            }
            r.check("G.factorization-transport", |_| {
                let (checked, bad) = g_transport_failures(&ri, &g)?;
                Ok(CheckRecord::from_failures("", checked, bad))
            });
        }
        Err(e) => {
            for label in crate::iso::AUDIT_LABELS {
                r.push(format!("G.{label}"), Err(e.clone()), Duration::ZERO);
            }
            r.push("G.factorization-transport".into(), Err(e), Duration::ZERO);
        }
    }
    r.check("iso.hom-cardinality", |w| {
        w.gate("hom-set sizes", count * (1u128 << n))?;
        let dual = NormalDual::new(n)?;
        let (checked, bad) = hom_cardinality_failures(&pi, &ri, &dual)?;
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- P and Q

fn iso_pq_suite(r: &mut Runner) -> Result<()> {
    let n = r.n;
    r.gate("functors P and Q", presentation_count(n)? * 2)?;
    let pi = PartitionCategory::new(n)?;
    let dual = NormalDual::new(n)?;
    let p = functor_p(&dual)?;
    let q = functor_q(&pi)?;
    for (name, audit) in [
        ("P", {
            let start = Instant::now();
            (verify_functor(&dual, &pi, &p, r.bound), start.elapsed())
        }),
        ("Q", {
            let start = Instant::now();
            (verify_functor(&pi, &dual, &q, r.bound), start.elapsed())
        }),
    ] {
        let (audit, elapsed) = audit;
        for (i, record) in audit.checks.into_iter().enumerate() {
            let label = format!("{name}.{}", record.label);
            r.push(
                label,
                Ok(record),
                if i == 0 { elapsed } else { Duration::ZERO },
            );
        }
    }
    r.check("PQ.identity", |_| {
        let (checked, bad) = round_trip_failures(&dual, &p, &q);
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    r.check("QP.identity", |_| {
        let (checked, bad) = round_trip_failures(&pi, &q, &p);
        Ok(CheckRecord::from_failures("", checked, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- cone semigroups

fn cones_suite(r: &mut Runner) -> Result<()> {
    let n = r.n;
    let ps = PowersetCategory::new(n)?;
    let singular = enumerate_singular(n)?;
    let t = singular.len() as u128;
    let k = ps.objects().len() as u128;

    let start = Instant::now();
    let closure = r
        .gate("cone semigroup closure", t * t * k * k)
        .and_then(|_| {
            let seeds: Vec<_> = singular
                .iter()
                .map(|a| ps.principal_cone(a))
                .collect::<Result<_>>()?;
            let sg = generate_semigroup(&ps, &seeds, singular.len() + 1)?;
            let principal: Vec<Option<Transformation>> =
                sg.elements.iter().map(|c| ps.principal_of(c)).collect();
            Ok((sg, principal))
        });
    let closure = match closure {
        Ok(c) => Some(c),
        Err(e) => {
            for label in [
                "cones.powerset-closure",
                "cones.powerset-associativity",
                "cones.powerset-regular",
                "cones.powerset-valid",
                "cones.powerset-idempotents",
            ] {
                r.push(label.into(), Err(e.clone()), Duration::ZERO);
            }
            None
        }
    };
    if let Some((sg, principal)) = &closure {
        r.check("cones.powerset-closure", |_| {
            let mut bad = Vec::new();
            if sg.len() != singular.len() || principal.iter().any(Option::is_none) {
                bad.push(json!({ "elements": sg.len(), "expected": singular.len() }));
            }
            Ok(CheckRecord::from_failures("", sg.len() as u64, bad)
                .with_note(format!("{} elements", sg.len())))
        });
        r.out.last_mut().expect("just pushed").elapsed += start.elapsed();
        r.check("cones.powerset-associativity", |_| {
            let bad = sg.associativity_violation.map(|v| json!({ "triple": v }));
            Ok(CheckRecord::from_failures(
                "",
                (t * t * t) as u64,
                bad.into_iter().collect(),
            ))
        });
        r.check("cones.powerset-regular", |_| {
            Ok(match check_regular(&sg.table) {
                Ok(witnesses) => CheckRecord::pass("", witnesses.len() as u64)
                    .with_note(format!("{} witnesses", witnesses.len())),
                Err(x) => CheckRecord::fail(
                    "",
                    sg.len() as u64,
                    json!({ "no_inverse_for": enc(&sg.elements[x]) }),
                ),
            })
        });
        r.check("cones.powerset-valid", |_| {
            let bad: Vec<Value> = sg
                .invalid_cones
                .iter()
                .chain(&sg.non_normal)
                .map(|&i| json!({ "cone": enc(&sg.elements[i]) }))
                .collect();
            Ok(CheckRecord::from_failures("", sg.len() as u64, bad))
        });
        r.check("cones.powerset-idempotents", |_| {
            let table: BTreeSet<usize> = sg.table.idempotents().into_iter().collect();
            let bad: Vec<Value> = principal
                .iter()
                .enumerate()
                .filter(|(i, a)| a.as_ref().is_some_and(|a| a.is_idempotent()) != table.contains(i))
                .map(|(i, _)| json!({ "cone": enc(&sg.elements[i]) }))
                .collect();
            Ok(CheckRecord::from_failures("", sg.len() as u64, bad))
        });
    }
    r.check("cones.r-classes", |w| {
        let (sg, principal) = closure.as_ref().ok_or_else(|| Error::BoundExceeded {
            what: "cone semigroup closure".into(),
            needed: t * t * k * k,
            bound: w.bound,
        })?;
        let morphisms = all_morphisms(&ps).len() as u128;
        w.gate("H-functor comparison", t * t * morphisms * k)?;
        let related = sg.table.r_related();
        let sets: Vec<Vec<BTreeSet<ConeOf<PowersetCategory>>>> = sg
            .elements
            .par_iter()
            .map(|g| {
                ps.objects()
                    .iter()
                    .map(|c| h_set(&ps, g, c))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        let size = sg.len();
        let bad = (0..size)
            .into_par_iter()
            .map(|i| {
                let mut bad = Vec::new();
                for j in 0..size {
                    let equal = sets[i] == sets[j]
                        && h_functors_equal(&ps, &sg.elements[i], &sg.elements[j])?;
                    let same_kernel = principal[i].as_ref().map(Transformation::kernel)
                        == principal[j].as_ref().map(Transformation::kernel);
                    if equal != related[i][j] || related[i][j] != same_kernel {
                        bad.push(json!({ "a": enc(&principal[i]), "b": enc(&principal[j]) }));
                    }
                }
                Ok(bad)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CheckRecord::from_failures(
            "",
            (size * size) as u64,
            bad.into_iter().flatten().collect(),
        ))
    });
    r.check("cones.star-epi", |w| {
        let morphisms = all_morphisms(&ps);
        w.gate(
            "cone-epimorphism products",
            t * morphisms.len() as u128 * k * k,
        )?;
        let bad: Vec<Value> = singular
            .par_iter()
            .flat_map_iter(|a| {
                let image = a.image().expect("singular");
                let (ps, morphisms) = (&ps, &morphisms);
                morphisms
                    .iter()
                    .filter(move |f| f.source() == &image && f.is_surjective())
                    .filter_map(move |f| {
                        let rho = ps.principal_cone(a).ok()?;
                        let extended = Transformation::new(
                            (0..n as u8)
                                .map(|x| f.apply(x).unwrap_or(f.map()[0]))
                                .collect(),
                        )
                        .ok()?;
                        let expected = ps.principal_cone(&(a * &extended)).ok();
                        (cone_star_epi(ps, &rho, f).ok() != expected)
                            .then(|| json!({ "a": enc(a), "f": enc(f) }))
                    })
            })
            .collect();
        Ok(CheckRecord::from_failures("", t as u64, bad))
    });
    r.check("cones.pi-closure", |w| {
        let pi = PartitionCategory::new(n)?;
        let cones = enumerate_all_normal_cones(&pi, w.bound)?;
        let c = cones.len() as u128;
        w.gate(
            "closure of the Π cones",
            c * c * (pi.objects().len() as u128).pow(2) * 8,
        )?;
        let sg = generate_semigroup(&pi, &cones, cones.len() + 1)?;
        let mut bad = Vec::new();
        if sg.len() != cones.len() {
            bad.push(json!({ "cones": cones.len(), "closure": sg.len() }));
        }
        if let Some(v) = sg.associativity_violation {
            bad.push(json!({ "non_associative": v }));
        }
        if let Err(x) = check_regular(&sg.table) {
            bad.push(json!({ "not_regular": enc(&sg.elements[x]) }));
        }
        for &i in sg.invalid_cones.iter().chain(&sg.non_normal) {
            bad.push(json!({ "invalid": enc(&sg.elements[i]) }));
        }
        Ok(CheckRecord::from_failures("", sg.len() as u64, bad)
            .with_note(format!("{} normal cones", cones.len())))
    });
    r.check("cones.epimorphic-parts", |w| {
        // f° of every component of ρ^a is the corestriction onto its image
        w.gate("epimorphic parts", t * k * k)?;
        let mut bad = Vec::new();
        for a in &singular {
            let rho = ps.principal_cone(a)?;
            for g in rho.components() {
                let epi = epimorphic_part(&ps, g)?;
                if epi.image_points() != g.image_points() || !epi.is_surjective() {
                    bad.push(json!({ "component": enc(g) }));
                }
            }
        }
        Ok(CheckRecord::from_failures("", (t * k) as u64, bad))
    });
    Ok(())
}

// ---------------------------------------------------------------- listings

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Partitions,
    Transformations,
    Idempotents,
    Cones,
    DualObjects,
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "partitions" => Kind::Partitions,
            "transformations" => Kind::Transformations,
            "idempotents" => Kind::Idempotents,
            "cones" => Kind::Cones,
            "dual-objects" => Kind::DualObjects,
            _ => {
                return Err(format!(
                    "unknown kind {s:?} (expected partitions, transformations, idempotents, cones, dual-objects)"
                ))
            }
        })
    }
}

/// Canonical listing of one kind of structure, one JSON value per item.
///
/// Partitions are the non-identity ones; cones are the normal cones of the
/// power-set category.
pub fn enumerate(kind: Kind, n: usize, bound: u64) -> Result<Vec<Value>> {
    Ok(match kind {
        Kind::Partitions => enumerate_partitions(n, true)?.iter().map(enc).collect(),
        Kind::Transformations => enumerate_singular(n)?.iter().map(enc).collect(),
        Kind::Idempotents => idempotents(n)?.iter().map(enc).collect(),
        Kind::Cones => {
            let ps = PowersetCategory::new(n)?;
            enumerate_all_normal_cones(&ps, bound)?
                .iter()
                .map(|c| json!({ "principal_for": enc(&ps.principal_of(c)), "cone": enc(c) }))
                .collect()
        }
        Kind::DualObjects => dual_objects(n)?
            .iter()
            .map(
                |h| json!({ "kernel": enc(h.kernel()), "representative": enc(h.representative()) }),
            )
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_helpers() {
        assert_eq!((1..=5).map(bell).collect::<Vec<_>>(), [1, 2, 5, 15, 52]);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(block_map_count(3).unwrap(), 46);
        assert_eq!(presentation_count(3).unwrap(), 207);
        assert_eq!(presentation_count(4).unwrap(), 11584);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(parse_suites(&["all"]).unwrap(), Suite::ALL.to_vec());
        assert!(parse_suites(&["nope"]).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::new(1, vec![Suite::Core], 10).is_err());
        assert!(SuiteConfig::new(3, vec![], 10).is_err());
        assert!(SuiteConfig::new(3, vec![Suite::Core], 0).is_err());
        let c = SuiteConfig::new(3, vec![Suite::Cones, Suite::Core, Suite::Core], 10).unwrap();
        assert_eq!(c.suites, [Suite::Core, Suite::Cones]);
    }

    #[test]
    fn tiny_bound_skips_instead_of_failing() {
        let c = SuiteConfig::new(3, vec![Suite::Powerset], 10).unwrap();
        let report = run(&c);
        assert_eq!(report.summary.fail, 0, "{}", report.to_text());
        assert!(report.summary.skipped > 0);
        assert_eq!(report.exit_code(), 3);
    }
}
