//! Golden tables under `data/golden`.
//!
//! Matrix tables are line based: `class NAME`, `s N` and `stage NAME` set the context
//! for following `M <matrix> [*] [reason]` lines. Gamma tables use `row a g gamma_max`.
//! Construction checks are `KIND key=value ...` lines.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use qcy_core::classify::{PermClass, RuleOutReason};
use qcy_core::typealg::text::parse_matrix;
use qcy_core::typealg::IntMat;
use thiserror::Error;

pub const GOLDEN_ENV: &str = "QCY_GOLDEN_DIR";

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenMatrix {
    pub class: PermClass,
    pub s: u32,
    pub stage: String,
    pub m: IntMat,
    pub starred: bool,
    pub reason: Option<RuleOutReason>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaGolden {
    pub s: u32,
    pub a: i64,
    pub g: i64,
    pub gamma_max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCheck {
    pub kind: String,
    pub fields: BTreeMap<String, String>,
    pub line: usize,
}

impl ConstructionCheck {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.get(key).map(String::as_str)
    }
}

#[derive(Debug, Clone, Default)]
pub struct GoldenFile {
    pub matrices: Vec<GoldenMatrix>,
    pub gamma: Vec<GammaGolden>,
    /// Every (class, s, stage) section declared, including empty ones.
    pub sections: Vec<(PermClass, u32, String)>,
}

impl GoldenFile {
    pub fn select(&self, class: PermClass, s: u32, stage: &str) -> Vec<&GoldenMatrix> {
        self.matrices.iter().filter(|g| g.class == class && g.s == s && g.stage == stage).collect()
    }

    pub fn has_section(&self, class: PermClass, s: u32, stage: &str) -> bool {
        self.sections.iter().any(|(c, t, st)| *c == class && *t == s && st == stage)
    }
}

fn reason_from_name(name: &str) -> Option<RuleOutReason> {
    match name {
        "spectral_radius" => Some(RuleOutReason::SpectralRadius),
        "negative_hilbert" => Some(RuleOutReason::NegativeHilbert),
        "not_strongly_connected" => Some(RuleOutReason::NotStronglyConnected),
        _ => None,
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_golden(file: &str, text: &str) -> Result<GoldenFile, GoldenError> {
    let err = |line: usize, msg: String| GoldenError::Parse { file: file.to_string(), line, msg };
    let mut out = GoldenFile::default();
    let mut class: Option<PermClass> = None;
    let mut s: Option<u32> = None;
    let mut stage: Option<String> = None;
    for (line, body) in content_lines(text) {
        let words: Vec<&str> = body.split_whitespace().collect();
        match words[0] {
            "class" => {
                let name = words.get(1).copied().unwrap_or("");
                class = Some(PermClass::from_name(name).ok_or_else(|| err(line, format!("unknown class '{name}'")))?);
                stage = None;
            }
            "s" => {
                let v = words.get(1).and_then(|w| w.parse().ok()).ok_or_else(|| err(line, "bad s".into()))?;
                s = Some(v);
                stage = None;
            }
            "stage" => {
                let name = words.get(1).ok_or_else(|| err(line, "missing stage name".into()))?.to_string();
                let (Some(c), Some(sv)) = (class, s) else {
                    return Err(err(line, "stage before class and s".into()));
                };
                out.sections.push((c, sv, name.clone()));
                stage = Some(name);
            }
            "M" => {
                let (Some(c), Some(sv), Some(st)) = (class, s, stage.clone()) else {
                    return Err(err(line, "matrix before class, s and stage".into()));
                };
                let m = parse_matrix(words.get(1).copied().unwrap_or(""))
                    .map_err(|e| err(line, e.to_string()))?;
                let mut starred = false;
                let mut reason = None;
                for w in &words[2..] {
                    if *w == "*" {
                        starred = true;
                    } else {
                        reason = Some(reason_from_name(w).ok_or_else(|| err(line, format!("unknown reason '{w}'")))?);
                    }
                }
                out.matrices.push(GoldenMatrix { class: c, s: sv, stage: st, m, starred, reason });
            }
            "row" => {
                let sv = s.ok_or_else(|| err(line, "row before s".into()))?;
                let nums: Vec<i64> = words[1..]
                    .iter()
                    .map(|w| w.parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| err(line, "row entries must be integers".into()))?;
                let [a, g, gamma_max] = nums[..] else {
                    return Err(err(line, "expected 'row a g gamma_max'".into()));
                };
                out.gamma.push(GammaGolden { s: sv, a, g, gamma_max });
            }
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }
    Ok(out)
}

pub fn parse_constructions(file: &str, text: &str) -> Result<Vec<ConstructionCheck>, GoldenError> {
    content_lines(text)
        .map(|(line, body)| {
            let mut words = body.split_whitespace();
            let kind = words.next().expect("nonempty line").to_string();
            let fields = words
                .map(|w| {
                    w.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())).ok_or_else(|| {
                        GoldenError::Parse { file: file.to_string(), line, msg: format!("expected key=value, got '{w}'") }
                    })
                })
                .collect::<Result<_, _>>()?;
            Ok(ConstructionCheck { kind, fields, line })
        })
        .collect()
}

/// `$QCY_GOLDEN_DIR`, or the `data/golden` directory of the source tree.
pub fn golden_dir() -> PathBuf {
    std::env::var_os(GOLDEN_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/golden"))
}

fn read(dir: &Path, name: &str) -> Result<String, GoldenError> {
    let path = dir.join(name);
    std::fs::read_to_string(&path).map_err(|source| GoldenError::Io { path, source })
}

#[derive(Debug, Clone)]
pub struct Golden {
    pub four: GoldenFile,
    pub three: GoldenFile,
    pub two_two_candidates: GoldenFile,
    pub two_two_final: GoldenFile,
    pub two_two_ruled_out: GoldenFile,
    pub gamma: GoldenFile,
    pub headline: GoldenFile,
    pub constructions: Vec<ConstructionCheck>,
}

impl Golden {
    pub fn load(dir: &Path) -> Result<Self, GoldenError> {
        let table = |name: &str| parse_golden(name, &read(dir, name)?);
        Ok(Golden {
            four: table("four.txt")?,
            three: table("three.txt")?,
            two_two_candidates: table("two_two_candidates.txt")?,
            two_two_final: table("two_two_final.txt")?,
            two_two_ruled_out: table("two_two_ruled_out.txt")?,
            gamma: table("gamma.txt")?,
            headline: table("headline.txt")?,
            constructions: parse_constructions("constructions.txt", &read(dir, "constructions.txt")?)?,
        })
    }

    /// The golden list for a classify run, if one exists.
    pub fn list_for(&self, class: PermClass, s: u32, stage: &str) -> Option<Vec<&GoldenMatrix>> {
        let file = match (class, stage) {
            (PermClass::FourCycle, _) => &self.four,
            (PermClass::ThreeCycle, _) => &self.three,
            (PermClass::TwoTwo, "pre") => &self.two_two_candidates,
            (PermClass::TwoTwo, _) => &self.two_two_final,
        };
        file.has_section(class, s, stage).then(|| file.select(class, s, stage))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_and_marks() {
        let text = "# c\nclass two-two\ns 4\nstage ruled\nM 0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0 spectral_radius\n\
                    stage full\nM 1,0,1,0;0,1,0,1;0,1,0,1;1,0,1,0 *\ns 3\nstage pre\n";
        let g = parse_golden("t", text).unwrap();
        assert_eq!(g.matrices.len(), 2);
        assert_eq!(g.matrices[0].reason, Some(RuleOutReason::SpectralRadius));
        assert!(g.matrices[1].starred);
        assert!(g.has_section(PermClass::TwoTwo, 3, "pre"));
        assert!(g.select(PermClass::TwoTwo, 3, "pre").is_empty());
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_golden("t", "M 0,0,0,0;0,0,0,0;0,0,0,0;0,0,0,0\n").is_err());
        assert!(parse_golden("t", "class five\n").is_err());
        assert!(parse_golden("t", "s 3\nrow 1 2\n").is_err());
        assert!(parse_constructions("t", "mckay group\n").is_err());
    }

    #[test]
    fn bundled_golden_loads() {
        let g = Golden::load(&golden_dir()).unwrap();
        assert_eq!(g.two_two_candidates.select(PermClass::TwoTwo, 3, "pre").len(), 13);
        assert_eq!(g.two_two_candidates.select(PermClass::TwoTwo, 4, "pre").len(), 7);
        assert_eq!(g.gamma.gamma.len(), 13);
        assert_eq!(g.constructions.len(), 14);
    }
}
