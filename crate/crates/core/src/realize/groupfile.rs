//! Group data files.
//!
//! ```text
//! # comment
//! group c4_plane
//! description C4 acting on k[x,y] by diag(1,i)
//! degree 2
//! generators g
//! rep V 2
//!   g = 1 0 ; 0 (0,0,0,0,0,0,1,0)
//! irrep chi0 1
//!   g = 1
//! char rho 1
//!   g = -1
//! action V
//! hdet det
//! ```
//!
//! `irrep` lines declare McKay vertices in order; `rep` and `char` declare other
//! representations. `hdet` is `det`, `superpotential` (followed by a
//! `superpotential` block of `coefficient word` lines) or `char NAME`.

use super::cyc24::Cyc24;
use super::group::{group_closure, CycMatrix, MatrixGroup, DEFAULT_CLOSURE_CAP};
use super::mckay::{class_function, mckay_matrix, verify_irreps, winding_permutation, Irrep, McKayResult};
use super::superpot::{hdet_of_linear_action, hdet_of_superpotential_action, FreeElement};
use super::RealizeError;
use crate::typealg::{Permutation, QuiverType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    Rep,
    Irrep,
    Char,
}

#[derive(Debug, Clone)]
pub struct RepDecl {
    pub name: String,
    pub kind: RepKind,
    pub dim: usize,
    /// One image per generator, in declaration order.
    pub images: Vec<CycMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HdetSpec {
    Det,
    Superpotential,
    Char(String),
}

#[derive(Debug, Clone)]
pub struct GroupData {
    pub name: String,
    pub description: String,
    pub degree: u32,
    pub generators: Vec<String>,
    pub reps: Vec<RepDecl>,
    pub action: String,
    pub hdet: HdetSpec,
    pub superpotential: Option<FreeElement>,
}

fn perr(line: usize, msg: impl Into<String>) -> RealizeError {
    RealizeError::Parse { line, msg: msg.into() }
}

/// Splits on whitespace outside parentheses.
fn tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else if !ch.is_whitespace() {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Rows separated by `;`, entries by whitespace.
pub fn parse_cyc_matrix(text: &str) -> Result<CycMatrix, RealizeError> {
    let rows = text
        .split(';')
        .map(|row| tokens(row).iter().map(|t| t.parse::<Cyc24>()).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    CycMatrix::from_rows(rows).ok_or_else(|| perr(0, format!("matrix '{text}' is not square")))
}

enum Section {
    None,
    Rep(usize),
    Superpotential,
}

pub fn parse_group_file(text: &str) -> Result<GroupData, RealizeError> {
    let mut name = None;
    let mut description = String::new();
    let mut degree = None;
    let mut generators: Vec<String> = Vec::new();
    let mut reps: Vec<RepDecl> = Vec::new();
    let mut action = None;
    let mut hdet = None;
    let mut superpotential: Option<FreeElement> = None;
    let mut section = Section::None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let wrap = |e: RealizeError| match e {
            RealizeError::Parse { msg, .. } => perr(line_no, msg),
            other => other,
        };
        match key {
            "group" => name = Some(rest.to_string()),
            "description" => description = rest.to_string(),
            "degree" => {
                degree = Some(rest.parse::<u32>().map_err(|_| perr(line_no, format!("bad degree '{rest}'")))?)
            }
            "generators" => generators = rest.split_whitespace().map(String::from).collect(),
            "rep" | "irrep" | "char" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [rname, dim] = parts[..] else {
                    return Err(perr(line_no, format!("expected '{key} NAME DIM'")));
                };
                let dim: usize = dim.parse().map_err(|_| perr(line_no, format!("bad dimension '{dim}'")))?;
                if reps.iter().any(|r| r.name == rname) {
                    return Err(perr(line_no, format!("duplicate representation '{rname}'")));
                }
                let kind = match key {
                    "rep" => RepKind::Rep,
                    "irrep" => RepKind::Irrep,
                    _ => RepKind::Char,
                };
                if kind == RepKind::Char && dim != 1 {
                    return Err(perr(line_no, "characters are one-dimensional"));
                }
                reps.push(RepDecl { name: rname.to_string(), kind, dim, images: Vec::new() });
                section = Section::Rep(reps.len() - 1);
            }
            "action" => action = Some(rest.to_string()),
            "hdet" => {
                hdet = Some(match rest.split_whitespace().collect::<Vec<_>>()[..] {
                    ["det"] => HdetSpec::Det,
                    ["superpotential"] => HdetSpec::Superpotential,
                    ["char", c] => HdetSpec::Char(c.to_string()),
                    _ => return Err(perr(line_no, format!("unknown hdet mode '{rest}'"))),
                })
            }
            "superpotential" => {
                superpotential = Some(FreeElement::new());
                section = Section::Superpotential;
            }
            _ => match section {
                Section::Rep(r) => {
                    let (gname, mat) =
                        line.split_once('=').ok_or_else(|| perr(line_no, format!("unexpected line '{line}'")))?;
                    let gname = gname.trim();
                    let expected = generators.get(reps[r].images.len());
                    if expected.map(String::as_str) != Some(gname) {
                        return Err(perr(
                            line_no,
                            format!("expected image of generator {:?}, got '{gname}'", expected),
                        ));
                    }
                    let m = parse_cyc_matrix(mat).map_err(wrap)?;
                    if m.dim() != reps[r].dim {
                        return Err(perr(line_no, format!("image has size {}, expected {}", m.dim(), reps[r].dim)));
                    }
                    reps[r].images.push(m);
                }
                Section::Superpotential => {
                    let (w, c) = FreeElement::parse_term(line).map_err(|m| perr(line_no, m))?;
                    superpotential.as_mut().expect("section open").add_term(w, c);
                }
                Section::None => return Err(perr(line_no, format!("unexpected line '{line}'"))),
            },
        }
    }

    let name = name.ok_or_else(|| perr(0, "missing 'group' line"))?;
    if generators.is_empty() {
        return Err(perr(0, "missing 'generators' line"));
    }
    if let Some(r) = reps.iter().find(|r| r.images.len() != generators.len()) {
        return Err(perr(0, format!("representation '{}' does not give every generator image", r.name)));
    }
    let action = action.ok_or_else(|| perr(0, "missing 'action' line"))?;
    if !reps.iter().any(|r| r.name == action) {
        return Err(perr(0, format!("unknown action representation '{action}'")));
    }
    let hdet = hdet.unwrap_or(HdetSpec::Det);
    if hdet == HdetSpec::Superpotential && superpotential.is_none() {
        return Err(perr(0, "hdet superpotential needs a superpotential block"));
    }
    Ok(GroupData {
        name,
        description,
        degree: degree.ok_or_else(|| perr(0, "missing 'degree' line"))?,
        generators,
        reps,
        action,
        hdet,
        superpotential,
    })
}

/// A group file with its closure and every declared representation evaluated on
/// every element.
#[derive(Debug, Clone)]
pub struct RealizedGroup {
    pub data: GroupData,
    pub group: MatrixGroup,
    /// `images[r][g]`: image of element g in representation r.
    pub images: Vec<Vec<CycMatrix>>,
}

impl RealizedGroup {
    /// Closes the direct sum of all declared representations, so every one of them
    /// is a representation of the resulting group.
    pub fn new(data: GroupData) -> Result<Self, RealizeError> {
        Self::with_cap(data, DEFAULT_CLOSURE_CAP)
    }

    pub fn with_cap(data: GroupData, cap: usize) -> Result<Self, RealizeError> {
        let gens: Vec<CycMatrix> = (0..data.generators.len())
            .map(|k| CycMatrix::direct_sum(&data.reps.iter().map(|r| r.images[k].clone()).collect::<Vec<_>>()))
            .collect();
        let group = group_closure(&gens, cap)?;
        let mut images = Vec::with_capacity(data.reps.len());
        let mut off = 0;
        for r in &data.reps {
            images.push(group.elements.iter().map(|e| e.block(off, r.dim)).collect());
            off += r.dim;
        }
        Ok(RealizedGroup { data, group, images })
    }

    pub fn rep_index(&self, name: &str) -> Result<usize, RealizeError> {
        self.data
            .reps
            .iter()
            .position(|r| r.name == name)
            .ok_or_else(|| RealizeError::UnknownRepresentation { name: name.to_string() })
    }

    pub fn character(&self, name: &str) -> Result<Vec<Cyc24>, RealizeError> {
        Ok(class_function(&self.group, &self.images[self.rep_index(name)?]))
    }

    pub fn linear_character(&self, name: &str) -> Result<Vec<Cyc24>, RealizeError> {
        let r = self.rep_index(name)?;
        if self.data.reps[r].dim != 1 {
            return Err(RealizeError::NotLinearCharacter { name: name.to_string() });
        }
        self.character(name)
    }

    /// Irreps in declaration order, without verification.
    pub fn irreps(&self) -> Vec<Irrep> {
        self.data
            .reps
            .iter()
            .zip(&self.images)
            .filter(|(r, _)| r.kind == RepKind::Irrep)
            .map(|(r, imgs)| Irrep {
                name: r.name.clone(),
                dim: r.dim,
                images: r.images.clone(),
                character: class_function(&self.group, imgs),
            })
            .collect()
    }

    pub fn verified_irreps(&self) -> Result<Vec<Irrep>, RealizeError> {
        let irreps = self.irreps();
        verify_irreps(&self.group, &irreps)?;
        Ok(irreps)
    }

    pub fn mckay(&self) -> Result<McKayResult, RealizeError> {
        let irreps = self.verified_irreps()?;
        let v = self.rep_index(&self.data.action)?;
        mckay_matrix(&self.group, &irreps, &self.character(&self.data.action)?, self.data.reps[v].dim)
    }

    /// hdet as a class function.
    pub fn hdet(&self) -> Result<Vec<Cyc24>, RealizeError> {
        let v = self.rep_index(&self.data.action)?;
        let reps: Vec<&CycMatrix> = self.group.classes.iter().map(|c| &self.images[v][c[0]]).collect();
        match &self.data.hdet {
            HdetSpec::Det => Ok(reps.into_iter().map(hdet_of_linear_action).collect()),
            HdetSpec::Superpotential => {
                let omega = self.data.superpotential.as_ref().expect("checked at parse time");
                reps.into_iter().map(|g| hdet_of_superpotential_action(omega, g)).collect()
            }
            HdetSpec::Char(name) => self.linear_character(name),
        }
    }

    pub fn winding(&self, lambda: &[Cyc24]) -> Result<Vec<usize>, RealizeError> {
        winding_permutation(&self.verified_irreps()?, lambda)
    }

    /// The type (McKay matrix, winding permutation of hdet, degree); needs four irreps.
    pub fn mckay_type(&self) -> Result<QuiverType, RealizeError> {
        let mk = self.mckay()?;
        let m = mk.to_int_mat().ok_or(RealizeError::NotFourVertices { count: mk.matrix.len() })?;
        let p = perm4(&self.winding(&self.hdet()?)?)?;
        QuiverType::new(m, p, self.data.degree).map_err(|e| RealizeError::InvalidType(e.to_string()))
    }

    /// The vertex permutation induced by twisting with the named linear character.
    pub fn character_permutation(&self, name: &str) -> Result<Permutation, RealizeError> {
        perm4(&self.winding(&self.linear_character(name)?)?)
    }
}

pub fn perm4(images: &[usize]) -> Result<Permutation, RealizeError> {
    let arr: [usize; 4] =
        images.try_into().map_err(|_| RealizeError::NotFourVertices { count: images.len() })?;
    Ok(Permutation::from_images(arr).expect("winding maps are bijective on distinct characters"))
}

pub const BUNDLED_GROUPS: &[(&str, &str)] = &[
    ("c4_iii", include_str!("../../../../data/groups/c4_iii.grp")),
    ("c4_negone_negone_negi", include_str!("../../../../data/groups/c4_negone_negone_negi.grp")),
    ("c4_i_i_negi", include_str!("../../../../data/groups/c4_i_i_negi.grp")),
    ("c4_one_negone_i", include_str!("../../../../data/groups/c4_one_negone_i.grp")),
    ("c4_one_one_i", include_str!("../../../../data/groups/c4_one_one_i.grp")),
    ("c4_one_negi_negi", include_str!("../../../../data/groups/c4_one_negi_negi.grp")),
    ("c4_negone_i_negi", include_str!("../../../../data/groups/c4_negone_i_negi.grp")),
    ("klein4_xyz", include_str!("../../../../data/groups/klein4_xyz.grp")),
    ("klein4_a", include_str!("../../../../data/groups/klein4_a.grp")),
    ("klein4_b", include_str!("../../../../data/groups/klein4_b.grp")),
    ("a4", include_str!("../../../../data/groups/a4.grp")),
    ("c4_plane", include_str!("../../../../data/groups/c4_plane.grp")),
    ("c4_quartic_sym", include_str!("../../../../data/groups/c4_quartic_sym.grp")),
    ("c4_quartic_rot", include_str!("../../../../data/groups/c4_quartic_rot.grp")),
    ("binary_swap", include_str!("../../../../data/groups/binary_swap.grp")),
];

pub fn bundled_group(name: &str) -> Result<GroupData, RealizeError> {
    let (_, text) = BUNDLED_GROUPS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| RealizeError::UnknownGroup { name: name.to_string() })?;
    parse_group_file(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_keep_tuples() {
        assert_eq!(tokens(" 1 (0, 1,0,0,0,0,0,0)  -1/2 "), vec!["1", "(0,1,0,0,0,0,0,0)", "-1/2"]);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let text = "group t\ndegree 3\ngenerators g\nrep V 2\n  g = 1 0 ; 0\n";
        match parse_group_file(text) {
            Err(RealizeError::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_group_file("group t\ndegree 3\ngenerators g\naction V\n").is_err());
        assert!(parse_group_file("group t\nbogus line\n").is_err());
    }

    #[test]
    fn every_bundled_group_parses_and_closes() {
        for (name, _) in BUNDLED_GROUPS {
            let g = RealizedGroup::new(bundled_group(name).unwrap()).unwrap();
            assert_eq!(&g.data.name, name);
            g.verified_irreps().unwrap();
        }
    }
}
