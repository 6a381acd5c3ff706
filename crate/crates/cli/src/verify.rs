//! Replays the classification and constructions against the golden tables.
//!
//! Output is deterministic: no timings, and every list is in a fixed order.

use std::collections::BTreeMap;

use qcy_core::classify::{classify, gamma_max_table, Classification, ClassifyOptions, PermClass};
use qcy_core::realize::catalog::{catalog_outcomes, realization_catalog, MatchKind};
use qcy_core::realize::{bundled_group, ore_type, twist_type, Cyc24, RealizedGroup};
use qcy_core::typealg::text::{format_matrix, parse_matrix};
use qcy_core::typealg::{canonical_adjacency, types_equivalent, IntMat, Permutation, QuiverType};
use serde::Serialize;

use crate::golden::{ConstructionCheck, Golden, GoldenMatrix};
use crate::report::reason_name;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub diffs: Vec<String>,
    /// Informational lines that do not affect `passed`.
    pub notes: Vec<String>,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, diffs: Vec<String>) -> Self {
        Check { criterion, name: name.into(), passed: diffs.is_empty(), diffs, notes: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn criterion(&self, n: u8) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.criterion == n)
    }

    pub fn criterion_passed(&self, n: u8) -> bool {
        self.criterion(n).all(|c| c.passed)
    }

    pub fn criteria(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.checks.iter().map(|c| c.criterion).collect();
        v.dedup();
        v
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for n in self.criteria() {
            let verdict = if self.criterion_passed(n) { "PASS" } else { "FAIL" };
            out.push_str(&format!("criterion {n}: {verdict}\n"));
            for c in self.criterion(n) {
                out.push_str(&format!("  [{}] {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
                for d in &c.diffs {
                    out.push_str(&format!("      diff: {d}\n"));
                }
                for d in &c.notes {
                    out.push_str(&format!("      note: {d}\n"));
                }
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Classification runs shared between criteria.
#[derive(Default)]
pub struct Runs {
    cache: BTreeMap<(PermClass, u32), Classification>,
}

impl Runs {
    pub fn get(&mut self, class: PermClass, s: u32) -> &Classification {
        self.cache.entry((class, s)).or_insert_with(|| classify(class, s, &ClassifyOptions::default()))
    }
}

/// Multiset comparison of quivers (up to relabeling) with star flags.
pub fn compare_quiver_lists(computed: &[(IntMat, bool)], golden: &[&GoldenMatrix]) -> Vec<String> {
    let key = |m: &IntMat, star: bool| (canonical_adjacency(m), star);
    let mut counts: BTreeMap<(IntMat, bool), i64> = BTreeMap::new();
    for (m, star) in computed {
        *counts.entry(key(m, *star)).or_default() += 1;
    }
    let mut diffs = Vec::new();
    let mut unmatched_golden = Vec::new();
    for g in golden {
        match counts.get_mut(&key(&g.m, g.starred)) {
            Some(c) if *c > 0 => *c -= 1,
            _ => unmatched_golden.push(*g),
        }
    }
    for g in unmatched_golden {
        let other = counts.get(&key(&g.m, !g.starred)).copied().unwrap_or(0);
        if other > 0 {
            *counts.get_mut(&key(&g.m, !g.starred)).expect("present") -= 1;
            diffs.push(format!(
                "{} is {} in the golden list but {} in the output",
                format_matrix(&g.m),
                star_word(g.starred),
                star_word(!g.starred)
            ));
        } else {
            diffs.push(format!("missing {}{}", format_matrix(&g.m), if g.starred { " *" } else { "" }));
        }
    }
    for (m, star) in computed {
        let c = counts.get_mut(&key(m, *star)).expect("counted");
        if *c > 0 {
            *c -= 1;
            diffs.push(format!("extra {}{}", format_matrix(m), if *star { " *" } else { "" }));
        }
    }
    diffs
}

fn star_word(starred: bool) -> &'static str {
    if starred {
        "starred"
    } else {
        "unstarred"
    }
}

/// Stars are only meaningful for the final list; pre-stage lists carry none.
fn stage_list(c: &Classification, stage: &str) -> Vec<(IntMat, bool)> {
    if stage == "pre" {
        c.stage_pre.iter().map(|r| (r.ty.m, false)).collect()
    } else {
        c.stage_full.iter().map(|r| (r.ty.m, r.starred)).collect()
    }
}

fn list_check(criterion: u8, runs: &mut Runs, golden: &[&GoldenMatrix], class: PermClass, s: u32, stage: &str) -> Check {
    let c = runs.get(class, s);
    let computed = stage_list(c, stage);
    let diffs = compare_quiver_lists(&computed, golden);
    let mut check = Check::new(
        criterion,
        format!("{} s={} {}: {} computed, {} expected", class.name(), s, stage, computed.len(), golden.len()),
        diffs,
    );
    if stage == "pre" {
        for r in &c.stage_pre {
            for v in &r.variants {
                check.notes.push(format!(
                    "{} also occurs as the non-equivalent labeling {}",
                    format_matrix(&r.ty.m),
                    format_matrix(&v.m)
                ));
            }
        }
    }
    check
}

fn classification_checks(criterion: u8, class: PermClass, golden: &Golden, runs: &mut Runs) -> Vec<Check> {
    let mut checks = Vec::new();
    for s in [3, 4] {
        for stage in ["pre", "full"] {
            if let Some(list) = golden.list_for(class, s, stage) {
                checks.push(list_check(criterion, runs, &list, class, s, stage));
            }
        }
    }
    checks
}

fn rule_out_check(golden: &Golden, runs: &mut Runs, s: u32) -> Check {
    let expected = golden.two_two_ruled_out.select(PermClass::TwoTwo, s, "ruled");
    let c = runs.get(PermClass::TwoTwo, s);
    let mut diffs = Vec::new();
    let mut remaining: Vec<_> = c.rule_outs.iter().collect();
    for g in &expected {
        let want = g.reason.expect("ruled-out golden rows carry a reason");
        let pos = remaining.iter().position(|r| canonical_adjacency(&r.report.ty.m) == canonical_adjacency(&g.m));
        match pos {
            Some(p) => {
                let r = remaining.remove(p);
                if r.reason != want {
                    diffs.push(format!(
                        "{} ruled out by {} (expected {})",
                        format_matrix(&g.m),
                        reason_name(r.reason),
                        reason_name(want)
                    ));
                }
            }
            None => diffs.push(format!("{} not ruled out (expected {})", format_matrix(&g.m), reason_name(want))),
        }
    }
    for r in remaining {
        diffs.push(format!("extra rule-out {} by {}", format_matrix(&r.report.ty.m), reason_name(r.reason)));
    }
    let partition = |reasons: Vec<&str>| {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for r in reasons {
            *counts.entry(r).or_default() += 1;
        }
        counts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    };
    let got = partition(c.rule_outs.iter().map(|r| reason_name(r.reason)).collect());
    let want = partition(expected.iter().map(|g| reason_name(g.reason.expect("reason"))).collect());
    Check::new(3, format!("two-two s={s} rule-outs: {got} (expected {want})"), diffs)
}

fn gamma_checks(golden: &Golden) -> Vec<Check> {
    [3, 4]
        .into_iter()
        .map(|s| {
            let computed: Vec<(i64, i64, i64)> =
                gamma_max_table(s).iter().map(|r| (r.a, r.g, r.gamma_max)).collect();
            let expected: Vec<(i64, i64, i64)> =
                golden.gamma.gamma.iter().filter(|r| r.s == s).map(|r| (r.a, r.g, r.gamma_max)).collect();
            let mut diffs = Vec::new();
            for row in &expected {
                if !computed.contains(row) {
                    diffs.push(format!("missing row (a,g,gamma_max) = {row:?}"));
                }
            }
            for row in &computed {
                if !expected.contains(row) {
                    diffs.push(format!("extra row (a,g,gamma_max) = {row:?}"));
                }
            }
            if diffs.is_empty() && computed != expected {
                diffs.push("rows agree but their order differs".into());
            }
            Check::new(4, format!("gamma table s={s}: {} rows, {} expected", computed.len(), expected.len()), diffs)
        })
        .collect()
}

fn field_matrix(c: &ConstructionCheck, key: &str) -> Result<IntMat, String> {
    let text = c.get(key).ok_or_else(|| format!("line {}: missing {key}", c.line))?;
    parse_matrix(text).map_err(|e| format!("line {}: {key}: {e}", c.line))
}

fn field_perm(c: &ConstructionCheck, key: &str) -> Result<Permutation, String> {
    let m = field_matrix(c, key)?;
    Permutation::from_matrix(&m).ok_or_else(|| format!("line {}: {key} is not a permutation matrix", c.line))
}

fn field_group(c: &ConstructionCheck) -> Result<RealizedGroup, String> {
    let name = c.get("group").ok_or_else(|| format!("line {}: missing group", c.line))?;
    bundled_group(name).and_then(RealizedGroup::new).map_err(|e| format!("group {name}: {e}"))
}

fn expect_eq(diffs: &mut Vec<String>, what: &str, got: &IntMat, want: &IntMat) {
    if got != want {
        diffs.push(format!("{what}: got {}, expected {}", format_matrix(got), format_matrix(want)));
    }
}

fn run_construction(c: &ConstructionCheck) -> Result<Vec<String>, String> {
    let mut diffs = Vec::new();
    let err = |e: qcy_core::realize::RealizeError| e.to_string();
    match c.kind.as_str() {
        "mckay" => {
            let g = field_group(c)?;
            let mk = g.mckay().map_err(err)?;
            if !mk.is_complete() {
                diffs.push(format!("McKay column defect {:?}", mk.defect));
            }
            let m = mk.to_int_mat().ok_or("McKay matrix is not 4x4")?;
            let want = field_matrix(c, "M")?;
            match c.get("compare") {
                Some("quiver") => {
                    if canonical_adjacency(&m) != canonical_adjacency(&want) {
                        diffs.push(format!(
                            "McKay quiver {} is not isomorphic to {}",
                            format_matrix(&m),
                            format_matrix(&want)
                        ));
                    }
                }
                Some("exact") => expect_eq(&mut diffs, "McKay matrix", &m, &want),
                other => return Err(format!("line {}: unknown compare mode {other:?}", c.line)),
            }
            if c.get("P").is_some() {
                let p = g.mckay_type().map_err(err)?.p;
                expect_eq(&mut diffs, "winding permutation", &p.matrix(), &field_matrix(c, "P")?);
            }
        }
        "twist" => {
            let g = field_group(c)?;
            let name = c.get("char").ok_or("missing char")?;
            let n = g.character_permutation(name).map_err(err)?;
            expect_eq(&mut diffs, "N", &n.matrix(), &field_matrix(c, "N")?);
            let t = twist_type(&g.mckay_type().map_err(err)?, &n);
            expect_eq(&mut diffs, "twisted M", &t.m, &field_matrix(c, "M")?);
            expect_eq(&mut diffs, "twisted P", &t.p.matrix(), &field_matrix(c, "P")?);
        }
        "ore" => {
            let want_m = field_matrix(c, "M_out")?;
            let want_p = field_perm(c, "P_out")?;
            if c.get("group").is_some() {
                let g = field_group(c)?;
                let name = c.get("char").ok_or("missing char")?;
                let pp = g.character_permutation(name).map_err(err)?;
                expect_eq(&mut diffs, "P'", &pp.matrix(), &field_matrix(c, "Pprime")?);
                let o = ore_type(&g.mckay_type().map_err(err)?, &pp).map_err(err)?;
                let want = QuiverType { m: want_m, p: want_p, s: 3 };
                if !types_equivalent(&o, &want) {
                    diffs.push(format!("Ore type {o} is not equivalent to {want}"));
                }
            } else {
                let input = QuiverType { m: field_matrix(c, "M")?, p: field_perm(c, "P")?, s: 2 };
                let o = ore_type(&input, &field_perm(c, "Pprime")?).map_err(err)?;
                expect_eq(&mut diffs, "M + P'^-1", &o.m, &want_m);
                expect_eq(&mut diffs, "P P'^-1", &o.p.matrix(), &want_p.matrix());
            }
        }
        "hdet" => {
            let g = field_group(c)?;
            let want: Cyc24 = c.get("value").ok_or("missing value")?.parse().map_err(|e| format!("{e}"))?;
            let gen = g.group.index_of(&g.group.generators[0]).ok_or("generator not in group")?;
            let got = g.hdet().map_err(err)?[g.group.class_of[gen]].clone();
            if got != want {
                diffs.push(format!("hdet of the generator is {got}, expected {want}"));
            }
        }
        other => return Err(format!("line {}: unknown construction kind '{other}'", c.line)),
    }
    Ok(diffs)
}

fn construction_name(c: &ConstructionCheck) -> String {
    let mut parts = vec![c.kind.clone()];
    for key in ["group", "char"] {
        if let Some(v) = c.get(key) {
            parts.push(format!("{key}={v}"));
        }
    }
    if c.get("group").is_none() {
        if let Some(v) = c.get("Pprime") {
            parts.push(format!("Pprime={v}"));
        }
    }
    parts.join(" ")
}

fn construction_checks(golden: &Golden) -> Vec<Check> {
    let mut checks: Vec<Check> = golden
        .constructions
        .iter()
        .map(|c| {
            let diffs = run_construction(c).unwrap_or_else(|e| vec![format!("error: {e}")]);
            Check::new(5, construction_name(c), diffs)
        })
        .collect();
    let mut diffs = Vec::new();
    let mut notes = Vec::new();
    for (entry, outcome) in realization_catalog().iter().zip(catalog_outcomes()) {
        match outcome {
            Err(e) => diffs.push(format!("{}: {e}", entry.id)),
            Ok(o) => match o.matched {
                Some(MatchKind::Mismatch) => diffs.push(o.error(entry).expect("mismatch").to_string()),
                Some(MatchKind::Mirror) => {
                    notes.push(format!("{}: recipe yields the mirror labeling {}", entry.id, o.computed.expect("run")))
                }
                _ => {}
            },
        }
    }
    let mut catalog = Check::new(5, format!("realization catalog: {} entries", realization_catalog().len()), diffs);
    catalog.notes = notes;
    checks.push(catalog);
    checks
}

fn headline_checks(golden: &Golden, runs: &mut Runs) -> Vec<Check> {
    let mut checks = Vec::new();
    for class in [PermClass::FourCycle, PermClass::ThreeCycle, PermClass::TwoTwo] {
        for s in [3, 4] {
            let list = golden.headline.select(class, s, "full");
            let c = runs.get(class, s);
            let computed = stage_list(c, "full");
            let diffs = compare_quiver_lists(&computed, &list);
            checks.push(Check::new(
                7,
                format!("summary table {} s={}: {} computed, {} expected", class.name(), s, computed.len(), list.len()),
                diffs,
            ));
        }
    }
    checks
}

/// Criteria 1-5 and 7. The randomized property suites live in the test tree.
pub fn verify_all(golden: &Golden) -> VerifyReport {
    let mut runs = Runs::default();
    let mut checks = Vec::new();
    checks.extend(classification_checks(1, PermClass::FourCycle, golden, &mut runs));
    checks.extend(classification_checks(2, PermClass::ThreeCycle, golden, &mut runs));
    checks.extend(classification_checks(3, PermClass::TwoTwo, golden, &mut runs));
    for s in [3, 4] {
        checks.push(rule_out_check(golden, &mut runs, s));
    }
    checks.extend(gamma_checks(golden));
    checks.extend(construction_checks(golden));
    checks.extend(headline_checks(golden, &mut runs));
    VerifyReport { checks }
}

/// Diffs of a classify run against its golden list, if one exists.
pub fn classify_diffs(golden: &Golden, c: &Classification, stage: &str) -> Option<Vec<String>> {
    golden.list_for(c.perm_class, c.s, stage).map(|list| compare_quiver_lists(&stage_list(c, stage), &list))
}
