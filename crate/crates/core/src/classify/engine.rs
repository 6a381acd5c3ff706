use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::filters::{Evaluation, FilterKind, FilterOutcome};
use super::forms::{PermClass, ThreeCycleForm, TwoTwoForm};
use super::gamma::gamma_max_table;
use crate::realize::catalog::annotation_for;
use crate::typealg::{canonical_adjacency, canonical_type, circulant, CanonicalKey, IntMat, QuiverType};

pub const DEFAULT_HILBERT_TERMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Entry bound for the two-two search; `None` means 6 - s.
    pub bound: Option<i64>,
    pub hilbert_terms: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { bound: None, hilbert_terms: DEFAULT_HILBERT_TERMS }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    #[serde(rename = "type")]
    pub ty: QuiverType,
    pub filters: Vec<FilterOutcome>,
    /// Types with an isomorphic quiver and the same P that are not simultaneously
    /// conjugate to `ty` (mirror labelings).
    pub variants: Vec<QuiverType>,
    pub realization: Option<String>,
    pub starred: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleOutReason {
    SpectralRadius,
    NegativeHilbert,
    NotStronglyConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOut {
    pub report: CandidateReport,
    /// The reason the candidate is listed under; spectral radius takes precedence.
    pub reason: RuleOutReason,
    pub all_reasons: Vec<RuleOutReason>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub perm_class: PermClass,
    pub s: u32,
    pub bound: Option<i64>,
    pub hilbert_terms: usize,
    pub stage_pre: Vec<CandidateReport>,
    pub stage_full: Vec<CandidateReport>,
    pub rule_outs: Vec<RuleOut>,
}

pub fn classify(class: PermClass, s: u32, opts: &ClassifyOptions) -> Classification {
    match class {
        PermClass::FourCycle => enumerate_four_cycle(s, opts),
        PermClass::ThreeCycle => enumerate_three_cycle(s, opts),
        PermClass::TwoTwo => enumerate_two_two(s, opts),
    }
}

fn check_s(s: u32) {
    assert!(s == 3 || s == 4, "classification is defined for s in {{3, 4}}");
}

/// Circulants C(a,b,c,d) with a+b+c+d = 6-s.
pub fn enumerate_four_cycle(s: u32, opts: &ClassifyOptions) -> Classification {
    check_s(s);
    let total = 6 - s as i64;
    let rows: Vec<[i64; 4]> = (0..=total)
        .flat_map(|a| {
            (0..=total - a).flat_map(move |b| {
                (0..=total - a - b).map(move |c| [a, b, c, total - a - b - c])
            })
        })
        .collect();
    let survivors = pre_filter(PermClass::FourCycle, s, rows.into_par_iter().map(circulant));
    assemble(PermClass::FourCycle, s, None, opts.hilbert_terms, survivors)
}

/// Three-cycle forms with u = v, w <= 4 (s = 3) or 5 (s = 4), r <= 6-s,
/// w+x+y+r <= 2(6-s) and u in {0,1}.
pub fn enumerate_three_cycle(s: u32, opts: &ClassifyOptions) -> Classification {
    check_s(s);
    let w_max = if s == 3 { 4 } else { 5 };
    let top = 6 - s as i64;
    let mut forms = Vec::new();
    for w in 0..=w_max {
        for r in 0..=top {
            for x in 0..=2 * top {
                for y in 0..=2 * top {
                    if w + x + y + r > 2 * top {
                        continue;
                    }
                    for u in 0..=1 {
                        forms.push(ThreeCycleForm { w, x, y, u, v: u, r });
                    }
                }
            }
        }
    }
    let survivors = pre_filter(PermClass::ThreeCycle, s, forms.into_par_iter().map(|f| f.matrix()));
    assemble(PermClass::ThreeCycle, s, None, opts.hilbert_terms, survivors)
}

/// Two-two forms with entries at most `bound`, pruned by the (a, g) table and gamma_max.
pub fn enumerate_two_two(s: u32, opts: &ClassifyOptions) -> Classification {
    check_s(s);
    let bound = opts.bound.unwrap_or(6 - s as i64);
    let table: BTreeMap<(i64, i64), i64> =
        gamma_max_table(s).into_iter().map(|r| ((r.a, r.g), r.gamma_max)).collect();
    let mut seeds = Vec::new();
    for a in 0..=bound {
        for g in 0..=bound {
            let key = (a.max(g), a.min(g));
            if let Some(&gmax) = table.get(&key) {
                if 2 * (a + g) <= 4 * s as i64 {
                    for b in 0..=bound {
                        seeds.push((a, g, b, gmax));
                    }
                }
            }
        }
    }
    let matrices = seeds.into_par_iter().flat_map_iter(move |(a, g, b, gmax)| {
        let mut out = Vec::new();
        for h in 0..=bound {
            let base = (b - 1) * (b - 1) + (h - 1) * (h - 1) - 2;
            if base > gmax {
                continue;
            }
            for c in 0..=bound {
                for e in 0..=bound {
                    let ce = base + 2 * c * e;
                    if ce > gmax {
                        continue;
                    }
                    for d in 0..=bound {
                        for f in 0..=bound {
                            if ce + 2 * d * f <= gmax {
                                out.push(TwoTwoForm { a, b, c, d, e, f, g, h }.matrix());
                            }
                        }
                    }
                }
            }
        }
        out
    });
    let survivors = pre_filter(PermClass::TwoTwo, s, matrices);
    assemble(PermClass::TwoTwo, s, Some(bound), opts.hilbert_terms, survivors)
}

/// Types from the class-S engine that pass the pre stage, keyed by strict class.
fn pre_filter(
    class: PermClass,
    s: u32,
    matrices: impl ParallelIterator<Item = IntMat>,
) -> BTreeMap<CanonicalKey, QuiverType> {
    let p = class.reference();
    let found: Vec<(CanonicalKey, QuiverType)> = matrices
        .filter_map(|m| {
            let t = QuiverType::new(m, p, s).ok()?;
            Evaluation::pre(&t)?;
            Some((canonical_type(&t), t))
        })
        .collect();
    let mut classes: BTreeMap<CanonicalKey, QuiverType> = BTreeMap::new();
    for (key, t) in found {
        classes
            .entry(key)
            .and_modify(|cur| {
                if t.m < cur.m {
                    *cur = t;
                }
            })
            .or_insert(t);
    }
    classes
}

fn assemble(
    class: PermClass,
    s: u32,
    bound: Option<i64>,
    hilbert_terms: usize,
    strict: BTreeMap<CanonicalKey, QuiverType>,
) -> Classification {
    let evaluated: Vec<(CanonicalKey, QuiverType, Evaluation)> = strict
        .into_par_iter()
        .map(|(k, t)| {
            let e = Evaluation::full(&t, hilbert_terms);
            (k, t, e)
        })
        .collect();
    let mut quivers: BTreeMap<IntMat, Vec<(CanonicalKey, QuiverType, Evaluation)>> = BTreeMap::new();
    for item in evaluated {
        quivers.entry(canonical_adjacency(&item.1.m)).or_default().push(item);
    }
    let mut groups: Vec<Vec<(CanonicalKey, QuiverType, Evaluation)>> = quivers.into_values().collect();
    for g in &mut groups {
        g.sort_by(|a, b| a.0.cmp(&b.0));
        // full-stage survivors first, so they represent the class
        g.sort_by_key(|item| !item.2.passes_full());
    }
    groups.sort_by(|a, b| a[0].0.cmp(&b[0].0));

    let mut stage_pre = Vec::new();
    let mut stage_full = Vec::new();
    let mut rule_outs = Vec::new();
    for g in groups {
        let (_, rep, eval) = &g[0];
        let (realization, starred) = annotation_for(class, s, &rep.m);
        let report = CandidateReport {
            ty: *rep,
            filters: eval.outcomes(),
            variants: g[1..].iter().map(|item| item.1).collect(),
            realization,
            starred,
        };
        stage_pre.push(report.clone());
        if eval.passes_full() {
            stage_full.push(report);
        } else {
            let mut all_reasons = Vec::new();
            if eval.spectral == Some(false) {
                all_reasons.push(RuleOutReason::SpectralRadius);
            }
            if eval.first_negative.is_some() {
                all_reasons.push(RuleOutReason::NegativeHilbert);
            }
            if !eval.strongly_connected {
                all_reasons.push(RuleOutReason::NotStronglyConnected);
            }
            rule_outs.push(RuleOut { report, reason: all_reasons[0], all_reasons });
        }
    }
    Classification { perm_class: class, s, bound, hilbert_terms, stage_pre, stage_full, rule_outs }
}

/// Stage-pre candidates of the two-two search removed by the full stage.
pub fn rule_out_report(s: u32, opts: &ClassifyOptions) -> Vec<RuleOut> {
    enumerate_two_two(s, opts).rule_outs
}

impl CandidateReport {
    pub fn outcome(&self, kind: FilterKind) -> Option<&FilterOutcome> {
        self.filters.iter().find(|f| f.filter == kind)
    }
}
