//! Machine (JSON) and human (table) renderings of command results.

use qcy_core::classify::{
    CandidateReport, Classification, FilterOutcome, GammaRow, PermClass, RuleOut, RuleOutReason,
    ThreeCycleForm, TwoTwoForm,
};
use qcy_core::typealg::text::format_matrix;
use qcy_core::typealg::{IntMat, QuiverType};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeJson {
    #[serde(rename = "M")]
    pub m: IntMat,
    #[serde(rename = "P")]
    pub p: String,
    pub s: u32,
}

impl From<&QuiverType> for TypeJson {
    fn from(t: &QuiverType) -> Self {
        TypeJson { m: t.m, p: t.p.to_string(), s: t.s }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateJson {
    #[serde(rename = "M")]
    pub m: IntMat,
    #[serde(rename = "P")]
    pub p: String,
    pub s: u32,
    pub filters: Vec<FilterOutcome>,
    pub variants: Vec<TypeJson>,
    pub realization: Option<String>,
    pub starred: bool,
}

impl From<&CandidateReport> for CandidateJson {
    fn from(c: &CandidateReport) -> Self {
        CandidateJson {
            m: c.ty.m,
            p: c.ty.p.to_string(),
            s: c.ty.s,
            filters: c.filters.clone(),
            variants: c.variants.iter().map(TypeJson::from).collect(),
            realization: c.realization.clone(),
            starred: c.starred,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOutJson {
    pub candidate: CandidateJson,
    pub reason: RuleOutReason,
    pub all_reasons: Vec<RuleOutReason>,
}

impl From<&RuleOut> for RuleOutJson {
    fn from(r: &RuleOut) -> Self {
        RuleOutJson { candidate: (&r.report).into(), reason: r.reason, all_reasons: r.all_reasons.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub perm_class: PermClass,
    pub s: u32,
    pub stage: String,
    pub bound: Option<i64>,
    pub hilbert_terms: usize,
    pub candidates: Vec<CandidateJson>,
    pub rule_outs: Vec<RuleOutJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diffs: Option<Vec<String>>,
}

impl Report {
    pub fn new(c: &Classification, stage: &str) -> Self {
        let (candidates, rule_outs) = if stage == "pre" {
            (&c.stage_pre, Vec::new())
        } else {
            (&c.stage_full, c.rule_outs.iter().map(RuleOutJson::from).collect())
        };
        Report {
            perm_class: c.perm_class,
            s: c.s,
            stage: stage.to_string(),
            bound: c.bound,
            hilbert_terms: c.hilbert_terms,
            candidates: candidates.iter().map(CandidateJson::from).collect(),
            rule_outs,
            diffs: None,
        }
    }
}

/// Compact parameter label: C(a,b,c,d), (w,x,y,u,v,r) or (a,...,h).
pub fn form_label(class: PermClass, m: &IntMat) -> String {
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    match class {
        PermClass::FourCycle => format!("C({})", join(&m[0])),
        PermClass::ThreeCycle => {
            let f = ThreeCycleForm { w: m[0][0], x: m[0][1], y: m[0][2], v: m[0][3], u: m[3][0], r: m[3][3] };
            if f.matrix() == *m {
                format!("({})", join(&[f.w, f.x, f.y, f.u, f.v, f.r]))
            } else {
                "-".into()
            }
        }
        PermClass::TwoTwo => match TwoTwoForm::from_matrix(m) {
            Some(f) => format!("({})", join(&[f.a, f.b, f.c, f.d, f.e, f.f, f.g, f.h])),
            None => "-".into(),
        },
    }
}

fn candidate_rows(class: PermClass, cands: &[CandidateJson], extra: impl Fn(usize) -> String) -> Vec<String> {
    cands
        .iter()
        .enumerate()
        .map(|(k, c)| {
            format!(
                "{:>3}  {:<20} {:<36} {:<7} {}{}",
                k + 1,
                form_label(class, &c.m),
                format_matrix(&c.m),
                if c.starred { "yes" } else { "no" },
                extra(k),
                c.realization.as_deref().unwrap_or("-")
            )
        })
        .collect()
}

pub fn render_table(r: &Report) -> String {
    let mut out = vec![format!(
        "perm {}  s {}  stage {}  bound {}  hilbert_terms {}  candidates {}",
        r.perm_class.name(),
        r.s,
        r.stage,
        r.bound.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
        r.hilbert_terms,
        r.candidates.len()
    )];
    if !r.candidates.is_empty() {
        out.push(format!("{:>3}  {:<20} {:<36} {:<7} {}", "#", "form", "M", "starred", "realization"));
        out.extend(candidate_rows(r.perm_class, &r.candidates, |_| String::new()));
    }
    if !r.rule_outs.is_empty() {
        out.push(format!("ruled out {}", r.rule_outs.len()));
        let cands: Vec<CandidateJson> = r.rule_outs.iter().map(|x| x.candidate.clone()).collect();
        out.extend(candidate_rows(r.perm_class, &cands, |k| {
            let names: Vec<&str> = r.rule_outs[k].all_reasons.iter().map(|x| reason_name(*x)).collect();
            format!("[{}] ", names.join(","))
        }));
    }
    if let Some(diffs) = &r.diffs {
        out.push(format!("diffs vs golden: {}", diffs.len()));
        out.extend(diffs.iter().map(|d| format!("  {d}")));
    }
    out.join("\n") + "\n"
}

pub fn reason_name(r: RuleOutReason) -> &'static str {
    match r {
        RuleOutReason::SpectralRadius => "spectral_radius",
        RuleOutReason::NegativeHilbert => "negative_hilbert",
        RuleOutReason::NotStronglyConnected => "not_strongly_connected",
    }
}

pub fn render_gamma_table(s: u32, rows: &[GammaRow]) -> String {
    let mut out = format!("s {s}\n(a,g)   gamma_max\n");
    for r in rows {
        out.push_str(&format!("({},{})   {}\n", r.a, r.g, r.gamma_max));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcy_core::classify::{classify, ClassifyOptions};

    #[test]
    fn labels() {
        assert_eq!(form_label(PermClass::FourCycle, &qcy_core::typealg::circulant([0, 1, 2, 0])), "C(0,1,2,0)");
        let m = TwoTwoForm::from_array([1, 0, 2, 0, 0, 2, 1, 0]).matrix();
        assert_eq!(form_label(PermClass::TwoTwo, &m), "(1,0,2,0,0,2,1,0)");
    }

    #[test]
    fn json_round_trip_and_table_agree() {
        let c = classify(PermClass::FourCycle, 3, &ClassifyOptions::default());
        let r = Report::new(&c, "full");
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let table = render_table(&r);
        for cand in &r.candidates {
            assert!(table.contains(&format_matrix(&cand.m)));
        }
        assert_eq!(table.lines().count(), 2 + r.candidates.len());
    }
}
