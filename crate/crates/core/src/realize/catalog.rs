//! The realization catalog: every classified quiver with the construction that
//! produces it, read from `data/catalog.txt`.
//!
//! ```text
//! entry F5 four 3
//!   matrix 1,1,0,1;1,1,1,0;0,1,1,1;1,0,1,1
//!   ore c4_plane char rho_neg
//! ```
//!
//! Recipes: `mckay GROUP`, `ore GROUP char NAME`, `ore GROUP perm PERM`,
//! `twist GROUP char NAME`, `twist GROUP perm PERM`, `linked ENTRY perm PERM`
//! (the entry exists iff the twist of ENTRY by PERM does) and `starred`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::groupfile::{bundled_group, RealizedGroup};
use super::transform::{ore_type, twist_type};
use super::RealizeError;
use crate::classify::PermClass;
use crate::typealg::text::{format_matrix, parse_matrix, parse_permutation};
use crate::typealg::{quivers_isomorphic, types_equivalent, IntMat, Permutation, QuiverType};

const CATALOG_TEXT: &str = include_str!("../../../../data/catalog.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexMap {
    Char(String),
    Perm(Permutation),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    McKay { group: String },
    Ore { group: String, by: VertexMap },
    Twist { group: String, by: VertexMap },
    Linked { entry: String, by: Permutation },
    Starred,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub class: PermClass,
    pub s: u32,
    pub matrix: IntMat,
    pub recipe: Recipe,
}

impl CatalogEntry {
    /// (matrix, reference permutation of the class, s).
    pub fn target(&self) -> QuiverType {
        QuiverType { m: self.matrix, p: self.class.reference(), s: self.s }
    }

    pub fn is_starred(&self) -> bool {
        matches!(self.recipe, Recipe::Starred | Recipe::Linked { .. })
    }
}

fn perr(line: usize, msg: impl Into<String>) -> RealizeError {
    RealizeError::Parse { line, msg: msg.into() }
}

fn parse_vertex_map(line: usize, words: &[&str]) -> Result<VertexMap, RealizeError> {
    match words {
        ["char", name] => Ok(VertexMap::Char(name.to_string())),
        ["perm", rest @ ..] if !rest.is_empty() => parse_permutation(&rest.join(" "))
            .map(VertexMap::Perm)
            .map_err(|e| perr(line, e.to_string())),
        _ => Err(perr(line, "expected 'char NAME' or 'perm PERM'")),
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, RealizeError> {
    struct Partial {
        id: String,
        class: PermClass,
        s: u32,
        matrix: Option<IntMat>,
        recipe: Option<Recipe>,
        line: usize,
    }
    let finish = |p: Partial| -> Result<CatalogEntry, RealizeError> {
        Ok(CatalogEntry {
            matrix: p.matrix.ok_or_else(|| perr(p.line, format!("entry {} has no matrix", p.id)))?,
            recipe: p.recipe.ok_or_else(|| perr(p.line, format!("entry {} has no recipe", p.id)))?,
            id: p.id,
            class: p.class,
            s: p.s,
        })
    };
    let mut out = Vec::new();
    let mut cur: Option<Partial> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let words: Vec<&str> = body.split_whitespace().collect();
        if words[0] == "entry" {
            if let Some(p) = cur.take() {
                out.push(finish(p)?);
            }
            let [_, id, class, s] = words[..] else {
                return Err(perr(line, "expected 'entry ID CLASS S'"));
            };
            cur = Some(Partial {
                id: id.to_string(),
                class: PermClass::from_name(class).ok_or_else(|| perr(line, format!("unknown class '{class}'")))?,
                s: s.parse().map_err(|_| perr(line, format!("bad s '{s}'")))?,
                matrix: None,
                recipe: None,
                line,
            });
            continue;
        }
        let p = cur.as_mut().ok_or_else(|| perr(line, "line outside an entry"))?;
        let set_recipe = |p: &mut Partial, r: Recipe| {
            if p.recipe.replace(r).is_some() {
                Err(perr(line, format!("entry {} has two recipes", p.id)))
            } else {
                Ok(())
            }
        };
        match words[..] {
            ["matrix", m] => p.matrix = Some(parse_matrix(m).map_err(|e| perr(line, e.to_string()))?),
            ["mckay", g] => set_recipe(p, Recipe::McKay { group: g.to_string() })?,
            ["ore", g, ref rest @ ..] => {
                let by = parse_vertex_map(line, rest)?;
                set_recipe(p, Recipe::Ore { group: g.to_string(), by })?
            }
            ["twist", g, ref rest @ ..] => {
                let by = parse_vertex_map(line, rest)?;
                set_recipe(p, Recipe::Twist { group: g.to_string(), by })?
            }
            ["linked", e, "perm", ref rest @ ..] => {
                let by = parse_permutation(&rest.join(" ")).map_err(|e| perr(line, e.to_string()))?;
                set_recipe(p, Recipe::Linked { entry: e.to_string(), by })?
            }
            ["starred"] => set_recipe(p, Recipe::Starred)?,
            _ => return Err(perr(line, format!("unexpected line '{body}'"))),
        }
    }
    if let Some(p) = cur.take() {
        out.push(finish(p)?);
    }
    Ok(out)
}

pub fn realization_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_TEXT).expect("bundled catalog parses"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchKind {
    /// Simultaneously conjugate to the catalogued type.
    Exact,
    /// Isomorphic quiver and conjugate permutation, but not simultaneously conjugate.
    Mirror,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogOutcome {
    pub id: String,
    pub description: String,
    /// `None` for starred entries.
    pub computed: Option<QuiverType>,
    pub matched: Option<MatchKind>,
}

impl CatalogOutcome {
    pub fn error(&self, entry: &CatalogEntry) -> Option<RealizeError> {
        match (&self.computed, self.matched) {
            (Some(c), Some(MatchKind::Mismatch)) => Some(RealizeError::CatalogMismatch {
                id: self.id.clone(),
                computed: c.to_string(),
                expected: entry.target().to_string(),
            }),
            _ => None,
        }
    }
}

pub fn compare(computed: &QuiverType, target: &QuiverType) -> MatchKind {
    if types_equivalent(computed, target) {
        MatchKind::Exact
    } else if computed.s == target.s
        && computed.p.cycle_type() == target.p.cycle_type()
        && quivers_isomorphic(&computed.m, &target.m)
    {
        MatchKind::Mirror
    } else {
        MatchKind::Mismatch
    }
}

fn vertex_map(g: &RealizedGroup, by: &VertexMap) -> Result<Permutation, RealizeError> {
    match by {
        VertexMap::Char(name) => g.character_permutation(name),
        VertexMap::Perm(p) => Ok(*p),
    }
}

fn describe_map(by: &VertexMap) -> String {
    match by {
        VertexMap::Char(name) => format!("the character {name}"),
        VertexMap::Perm(p) => format!("the vertex permutation {p}"),
    }
}

pub fn describe(recipe: &Recipe) -> String {
    let group_desc = |name: &str| {
        bundled_group(name).map(|d| d.description).unwrap_or_else(|_| format!("unknown group {name}"))
    };
    match recipe {
        Recipe::McKay { group } => format!("McKay quiver of {}", group_desc(group)),
        Recipe::Ore { group, by } => {
            format!("Ore extension of the skew group algebra for {} twisted by {}", group_desc(group), describe_map(by))
        }
        Recipe::Twist { group, by } => {
            format!("graded twist of the skew group algebra for {} by {}", group_desc(group), describe_map(by))
        }
        Recipe::Linked { entry, by } => {
            format!("exists iff entry {entry} exists (graded twist by the vertex permutation {by})")
        }
        Recipe::Starred => "existence open".to_string(),
    }
}

/// Runs a recipe. `Ok(None)` for starred entries.
pub fn execute(entry: &CatalogEntry) -> Result<Option<QuiverType>, RealizeError> {
    let realized = |name: &str| bundled_group(name).and_then(RealizedGroup::new);
    Ok(Some(match &entry.recipe {
        Recipe::McKay { group } => realized(group)?.mckay_type()?,
        Recipe::Ore { group, by } => {
            let g = realized(group)?;
            ore_type(&g.mckay_type()?, &vertex_map(&g, by)?)?
        }
        Recipe::Twist { group, by } => {
            let g = realized(group)?;
            twist_type(&g.mckay_type()?, &vertex_map(&g, by)?)
        }
        Recipe::Linked { entry: other, by } => {
            let base = realization_catalog()
                .iter()
                .find(|e| &e.id == other)
                .ok_or_else(|| RealizeError::InvalidType(format!("unknown catalog entry {other}")))?;
            twist_type(&base.target(), by)
        }
        Recipe::Starred => return Ok(None),
    }))
}

pub fn run_entry(entry: &CatalogEntry) -> Result<CatalogOutcome, RealizeError> {
    let computed = execute(entry)?;
    Ok(CatalogOutcome {
        id: entry.id.clone(),
        description: describe(&entry.recipe),
        matched: computed.as_ref().map(|c| compare(c, &entry.target())),
        computed,
    })
}

/// Every entry executed once, in catalog order.
pub fn catalog_outcomes() -> &'static [Result<CatalogOutcome, RealizeError>] {
    static OUTCOMES: OnceLock<Vec<Result<CatalogOutcome, RealizeError>>> = OnceLock::new();
    OUTCOMES.get_or_init(|| realization_catalog().iter().map(run_entry).collect())
}

pub fn find_entry(class: PermClass, s: u32, m: &IntMat) -> Option<&'static CatalogEntry> {
    realization_catalog().iter().find(|e| e.class == class && e.s == s && quivers_isomorphic(&e.matrix, m))
}

/// Realization note and starred flag for a classified quiver.
pub fn annotation_for(class: PermClass, s: u32, m: &IntMat) -> (Option<String>, bool) {
    let Some(entry) = find_entry(class, s, m) else {
        return (None, false);
    };
    let pos = realization_catalog().iter().position(|e| e.id == entry.id).expect("entry is in the catalog");
    let mut note = format!("{}: {}", entry.id, describe(&entry.recipe));
    match &catalog_outcomes()[pos] {
        Ok(o) if o.matched == Some(MatchKind::Mismatch) => {
            note.push_str(&format!(" [recipe yields {}]", format_matrix(&o.computed.expect("executed").m)))
        }
        Err(e) => note.push_str(&format!(" [recipe failed: {e}]")),
        _ => {}
    }
    (Some(note), entry.is_starred())
}
