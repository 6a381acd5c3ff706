//! The pruned engines against a plain scan of every form with small entries.

use std::collections::BTreeSet;

use qcy_core::classify::{classify, ClassifyOptions, Evaluation, PermClass, ThreeCycleForm, TwoTwoForm};
use qcy_core::typealg::{canonical_adjacency, circulant, IntMat, QuiverType};

fn odometer(len: usize, max: i64) -> impl Iterator<Item = Vec<i64>> {
    let total = (max + 1).pow(len as u32);
    (0..total).map(move |mut n| {
        (0..len)
            .map(|_| {
                let d = n % (max + 1);
                n /= max + 1;
                d
            })
            .collect()
    })
}

fn forms(class: PermClass, max: i64) -> Vec<IntMat> {
    match class {
        PermClass::FourCycle => odometer(4, max).map(|v| circulant([v[0], v[1], v[2], v[3]])).collect(),
        PermClass::ThreeCycle => odometer(6, max)
            .map(|v| ThreeCycleForm { w: v[0], x: v[1], y: v[2], u: v[3], v: v[4], r: v[5] }.matrix())
            .collect(),
        PermClass::TwoTwo => odometer(8, max)
            .map(|v| TwoTwoForm::from_array(v.try_into().unwrap()).matrix())
            .collect(),
    }
}

/// Canonical quivers passing (pre, full) among all forms with entries at most `max`.
fn scan(class: PermClass, s: u32, max: i64) -> (BTreeSet<IntMat>, BTreeSet<IntMat>) {
    scan_where(class, s, max, |_| true)
}

fn scan_where(class: PermClass, s: u32, max: i64, keep: impl Fn(&IntMat) -> bool) -> (BTreeSet<IntMat>, BTreeSet<IntMat>) {
    let mut pre = BTreeSet::new();
    let mut full = BTreeSet::new();
    for m in forms(class, max).into_iter().filter(|m| keep(m)) {
        let t = QuiverType::new(m, class.reference(), s).unwrap();
        if Evaluation::pre(&t).is_none() {
            continue;
        }
        pre.insert(canonical_adjacency(&m));
        if Evaluation::full(&t, qcy_core::classify::DEFAULT_HILBERT_TERMS).passes_full() {
            full.insert(canonical_adjacency(&m));
        }
    }
    (pre, full)
}

fn engine(class: PermClass, s: u32, max: i64, bound: Option<i64>) -> (BTreeSet<IntMat>, BTreeSet<IntMat>) {
    let c = classify(class, s, &ClassifyOptions { bound, ..ClassifyOptions::default() });
    let small = |m: &IntMat| m.iter().flatten().all(|&x| x <= max);
    let collect = |list: &[qcy_core::classify::CandidateReport]| {
        list.iter()
            .flat_map(|r| std::iter::once(&r.ty).chain(&r.variants))
            .filter(|t| small(&t.m))
            .map(|t| canonical_adjacency(&t.m))
            .collect()
    };
    (collect(&c.stage_pre), collect(&c.stage_full))
}

/// The search only visits circulants with row sum 6 - s, which a normal M must have;
/// the final list is compared against every circulant.
#[test]
fn four_cycle_engine_matches_scan() {
    for s in [3, 4] {
        let (pre, full) = engine(PermClass::FourCycle, s, 4, None);
        let row_sum = |m: &IntMat| m[0].iter().sum::<i64>() == 6 - s as i64;
        assert_eq!(pre, scan_where(PermClass::FourCycle, s, 4, row_sum).0, "s = {s}");
        assert_eq!(full, scan(PermClass::FourCycle, s, 4).1, "s = {s}");
    }
}

#[test]
fn three_cycle_engine_matches_scan() {
    for s in [3, 4] {
        assert_eq!(engine(PermClass::ThreeCycle, s, 2, None), scan(PermClass::ThreeCycle, s, 2), "s = {s}");
    }
}

#[test]
fn two_two_engine_matches_scan() {
    for s in [3, 4] {
        assert_eq!(engine(PermClass::TwoTwo, s, 2, Some(2)), scan(PermClass::TwoTwo, s, 2), "s = {s}");
    }
}

#[test]
fn two_two_final_list_is_stable_past_the_bound() {
    for s in [3, 4] {
        let at = classify(PermClass::TwoTwo, s, &ClassifyOptions::default());
        let past = classify(PermClass::TwoTwo, s, &ClassifyOptions { bound: Some(7 - s as i64), ..Default::default() });
        let key = |c: &qcy_core::classify::Classification| -> BTreeSet<IntMat> {
            c.stage_full.iter().map(|r| canonical_adjacency(&r.ty.m)).collect()
        };
        assert_eq!(key(&at), key(&past), "s = {s}");
    }
}
