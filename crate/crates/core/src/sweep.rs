//! Batch verification over the enumerated catalog.

use std::collections::BTreeMap;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::catalog::{dump_line, enumerate_semigroups};
use crate::check::{CheckReport, Status};
use crate::congruence::{
    enumerate_congruences, verify_corollary1, verify_theorem1_converse, verify_theorem1_forward,
    Congruence,
};
use crate::error::{Error, Result};
use crate::lemmas::{verify_lemma1, verify_lemma2, verify_lemma3};
use crate::permutative::{
    find_permutation_identity, verify_corollary2, verify_lemma4, verify_theorem2_converse,
    verify_theorem2_forward, PermutationIdentity,
};
use crate::semigroup::{ElementSet, FiniteSemigroup};
use crate::subset::separator;
use crate::text::format_family;

/// Which families of subsets feed the forward theorem checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMode {
    /// Every subset as a one-member family.
    SingleSets,
    /// The classes of every congruence.
    CongruenceClasses,
    SingleSetsAndClasses,
    /// The given families, applied to instances of matching order.
    Explicit(Vec<Vec<ElementSet>>),
}

/// Subset of the results to check; `All` runs everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    Theorem1,
    Theorem2,
    Corollary1,
    Corollary2,
    Lemmas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub min_order: usize,
    pub max_order: usize,
    /// Largest identity length tried when looking for a permutation identity.
    pub n_max_permutation: usize,
    pub family_mode: FamilyMode,
    /// Seeded multi-set families drawn per semigroup.
    pub random_families: usize,
    pub seed: u64,
    pub selection: Selection,
    pub parallelism: usize,
    pub output: OutputFormat,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_order: 1,
            max_order: 4,
            n_max_permutation: 4,
            family_mode: FamilyMode::SingleSetsAndClasses,
            random_families: 100,
            seed: 0x5e9a_2a7e,
            selection: Selection::All,
            parallelism: 1,
            output: OutputFormat::Text,
        }
    }
}

impl SweepConfig {
    pub fn up_to(max_order: usize) -> Self {
        SweepConfig {
            max_order,
            ..Default::default()
        }
    }

    fn wants(&self, part: Selection) -> bool {
        self.selection == Selection::All || self.selection == part
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub unmet: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::PreconditionUnmet => self.unmet += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.unmet
    }
}

/// One check applied to one instance.
#[derive(Debug, Clone)]
pub struct Record {
    pub order: usize,
    pub table_hash: String,
    /// What the check was applied to, e.g. `A={0,1}`; `-` for whole-instance checks.
    pub subject: String,
    pub report: CheckReport,
}

impl Record {
    pub fn to_line(&self) -> String {
        format!(
            "order={} table={} subject={} check={} status={} witness={}",
            self.order,
            self.table_hash,
            self.subject,
            self.report.check,
            self.report.status,
            self.report
                .witness
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string)
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub instances: usize,
    pub instances_per_order: BTreeMap<usize, usize>,
    /// Instances with a permutation identity found within the bound.
    pub permutative: usize,
    pub counts: BTreeMap<String, Counts>,
    pub failures: Vec<Record>,
    /// Every record, in instance order; filled only for structured output.
    pub records: Vec<Record>,
}

impl SweepReport {
    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn counts_for(&self, check: &str) -> Counts {
        self.counts.get(check).copied().unwrap_or_default()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let verdict = if self.has_failures() {
            format!("{} fail", self.failures.len())
        } else {
            "pass only".to_string()
        };
        let _ = writeln!(out, "instances: {}, checks: {verdict}", self.instances);
        for (order, count) in &self.instances_per_order {
            let _ = writeln!(out, "order {order}: {count} semigroups");
        }
        let _ = writeln!(out, "permutative (witnessed): {}", self.permutative);
        for (check, c) in &self.counts {
            let _ = writeln!(
                out,
                "{check}: pass {}, fail {}, precondition-unmet {}",
                c.pass, c.fail, c.unmet
            );
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAIL {} detail={:?}", f.to_line(), f.report.detail);
        }
        out
    }

    /// Line-delimited records.
    pub fn structured(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }
}

/// First 16 hex digits of the SHA-256 of the catalog line.
pub fn table_hash(s: &FiniteSemigroup) -> String {
    hex::encode(&Sha256::digest(dump_line(s).as_bytes())[..8])
}

struct InstanceRun<'a> {
    s: &'a FiniteSemigroup,
    hash: String,
    records: Vec<Record>,
}

impl InstanceRun<'_> {
    fn push(&mut self, subject: impl Into<String>, report: CheckReport) {
        self.records.push(Record {
            order: self.s.order(),
            table_hash: self.hash.clone(),
            subject: subject.into(),
            report,
        });
    }
}

/// Families drawn from the subsets with nonempty separator, two to four
/// members each, reproducible from the seed and the table.
pub fn random_families(
    s: &FiniteSemigroup,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<ElementSet>>> {
    let pool = ElementSet::all_subsets(s.order())
        .map(|a| Ok((separator(s, &a)?.is_empty(), a)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(empty, a)| (!empty).then_some(a))
        .collect::<Vec<_>>();
    let digest = Sha256::digest(dump_line(s).as_bytes());
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from_le_bytes(bytes));
    Ok((0..count)
        .map(|_| {
            let size = rng.gen_range(2..=4);
            (0..size)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect()
        })
        .collect())
}

fn run_instance(cfg: &SweepConfig, s: &FiniteSemigroup) -> Result<Vec<Record>> {
    let mut run = InstanceRun {
        s,
        hash: table_hash(s),
        records: Vec::new(),
    };
    let n = s.order();
    let subsets: Vec<ElementSet> = ElementSet::all_subsets(n).collect();
    let congruences = enumerate_congruences(s)?;
    let class_families: Vec<(String, Vec<ElementSet>)> = congruences
        .iter()
        .map(|c| (format!("F={c}"), c.classes()))
        .collect();

    let mut families: Vec<(String, Vec<ElementSet>)> = Vec::new();
    let singles = || subsets.iter().map(|a| (format!("F={a}"), vec![a.clone()]));
    match &cfg.family_mode {
        FamilyMode::SingleSets => families.extend(singles()),
        FamilyMode::CongruenceClasses => families.extend(class_families.iter().cloned()),
        FamilyMode::SingleSetsAndClasses => {
            families.extend(singles());
            families.extend(class_families.iter().cloned());
        }
        FamilyMode::Explicit(list) => families.extend(
            list.iter()
                .filter(|f| f.iter().all(|a| a.ambient() == n))
                .map(|f| (format!("F={}", format_family(f)), f.clone())),
        ),
    }
    let random: Vec<(String, Vec<ElementSet>)> = random_families(s, cfg.random_families, cfg.seed)?
        .into_iter()
        .map(|f| (format!("R={}", format_family(&f)), f))
        .collect();

    if cfg.wants(Selection::Lemmas) {
        for a in &subsets {
            run.push(format!("A={a}"), verify_lemma1(s, a)?);
            run.push(format!("A={a}"), verify_lemma2(s, a)?);
            run.push(format!("A={a}"), verify_lemma3(s, a)?);
        }
    }
    if cfg.wants(Selection::Theorem1) {
        for (subject, family) in families.iter().chain(&random) {
            run.push(subject.clone(), verify_theorem1_forward(s, family)?);
        }
        for sigma in &congruences {
            run.push(
                format!("sigma={sigma}"),
                verify_theorem1_converse(s, sigma)?,
            );
        }
    }
    if cfg.wants(Selection::Corollary1) {
        for a in &subsets {
            run.push(format!("A={a}"), verify_corollary1(s, a)?);
        }
    }

    let permutative_parts = [
        Selection::Theorem2,
        Selection::Corollary2,
        Selection::Lemmas,
    ];
    if permutative_parts.iter().any(|&p| cfg.wants(p)) {
        let witness = find_permutation_identity(s, cfg.n_max_permutation);
        let mut report = CheckReport::new("permutativity");
        report = match &witness {
            Some(id) => report.with_detail(id.to_string()),
            None => report.unmet(
                None,
                format!("permutativity unknown up to n={}", cfg.n_max_permutation),
            ),
        };
        run.push("-", report);
        if let Some(id) = witness {
            permutative_checks(
                cfg,
                &mut run,
                &subsets,
                &families,
                &random,
                &congruences,
                &id,
            )?;
        }
    }
    Ok(run.records)
}

#[allow(clippy::too_many_arguments)]
fn permutative_checks(
    cfg: &SweepConfig,
    run: &mut InstanceRun<'_>,
    subsets: &[ElementSet],
    families: &[(String, Vec<ElementSet>)],
    random: &[(String, Vec<ElementSet>)],
    congruences: &[Congruence],
    id: &PermutationIdentity,
) -> Result<()> {
    let s = run.s;
    if cfg.wants(Selection::Theorem2) {
        let mut r = CheckReport::new("permutative-monoid-commutative");
        r = if s.is_monoid() {
            let w = s.commutativity_witness();
            r.stage(
                "commutative",
                w.is_none(),
                || w.map(|(a, b)| crate::check::Witness::new([("a", a), ("b", b)])),
                || format!("monoid satisfying {id} is not commutative"),
            );
            r
        } else {
            r.unmet(None, "no identity element")
        };
        run.push("-", r);
    }
    if cfg.wants(Selection::Theorem2) || cfg.wants(Selection::Lemmas) {
        run.push("-", verify_lemma4(s, id));
    }
    if cfg.wants(Selection::Theorem2) {
        for (subject, family) in families.iter().chain(random) {
            run.push(subject.clone(), verify_theorem2_forward(s, family, id)?);
        }
        for sigma in congruences {
            run.push(
                format!("sigma={sigma}"),
                verify_theorem2_converse(s, sigma, id)?,
            );
        }
    }
    if cfg.wants(Selection::Corollary2) {
        for a in subsets {
            run.push(format!("A={a}"), verify_corollary2(s, a, id)?);
        }
    }
    Ok(())
}

/// Runs every selected check over all labelled semigroups with order in
/// `min_order..=max_order`. Results do not depend on `parallelism`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.min_order < 1 || cfg.min_order > cfg.max_order {
        return Err(Error::InvalidConfig(format!(
            "order range {}..={} is empty",
            cfg.min_order, cfg.max_order
        )));
    }
    if cfg.n_max_permutation < 2 {
        return Err(Error::InvalidConfig(
            "permutation search bound must be at least 2".into(),
        ));
    }
    let mut instances = Vec::new();
    for order in cfg.min_order..=cfg.max_order {
        instances.extend(enumerate_semigroups(order, false)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism.max(1))
        .build()
        .expect("thread pool");
    let per_instance: Vec<Vec<Record>> = pool.install(|| {
        instances
            .par_iter()
            .map(|s| run_instance(cfg, s))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut report = SweepReport {
        instances: instances.len(),
        ..Default::default()
    };
    for (s, records) in instances.iter().zip(per_instance) {
        *report.instances_per_order.entry(s.order()).or_default() += 1;
        for rec in records {
            if rec.report.check == "permutativity" && rec.report.passed() {
                report.permutative += 1;
            }
            report
                .counts
                .entry(rec.report.check.clone())
                .or_default()
                .add(rec.report.status);
            if rec.report.failed() {
                report.failures.push(rec.clone());
            }
            if cfg.output == OutputFormat::Structured {
                report.records.push(rec);
            }
        }
    }
    Ok(report)
}
