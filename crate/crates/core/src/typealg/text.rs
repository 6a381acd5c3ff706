//! Text formats: `0,0,0,3;3,0,0,0;0,3,0,0;0,0,3,0` for matrices and
//! `cycles:(1 2)(3 4)` (or an explicit matrix) for permutations.

use thiserror::Error;

use super::{IntMat, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, msg: msg.into() }
}

/// Parses a 4x4 integer matrix; negative entries are allowed here.
pub fn parse_int_matrix(text: &str) -> Result<IntMat, ParseError> {
    let mut out = [[0; 4]; 4];
    let mut pos = 0;
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 4 {
        return Err(err(0, format!("expected 4 rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 4 {
            return Err(err(pos, format!("row {} has {} entries, expected 4", i + 1, fields.len())));
        }
        let mut fpos = pos;
        for (j, f) in fields.iter().enumerate() {
            let t = f.trim();
            out[i][j] = t
                .parse::<i64>()
                .map_err(|_| err(fpos, format!("expected an integer, found {t:?}")))?;
            fpos += f.len() + 1;
        }
        pos += row.len() + 1;
    }
    Ok(out)
}

/// Parses an adjacency matrix, rejecting negative entries.
pub fn parse_matrix(text: &str) -> Result<IntMat, ParseError> {
    let m = parse_int_matrix(text)?;
    if let Some(e) = (0..16).find(|&e| m[e / 4][e % 4] < 0) {
        return Err(err(0, format!("negative entry at row {}, column {}", e / 4 + 1, e % 4 + 1)));
    }
    Ok(m)
}

pub fn format_matrix(m: &IntMat) -> String {
    m.iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

/// Accepts `cycles:(1 2 3 4)`, `cycles:(1 2)(3 4)`, `cycles:()` or a 0/1 matrix.
pub fn parse_permutation(text: &str) -> Result<Permutation, ParseError> {
    let t = text.trim();
    let Some(body) = t.strip_prefix("cycles:") else {
        let m = parse_int_matrix(t)?;
        return Permutation::from_matrix(&m).ok_or_else(|| err(0, "matrix is not a permutation"));
    };
    let offset = text.len() - text.trim_start().len() + "cycles:".len();
    let mut images = [0, 1, 2, 3];
    let mut moved = [false; 4];
    let bytes = body.as_bytes();
    let mut k = 0;
    while k < bytes.len() {
        if bytes[k] != b'(' {
            return Err(err(offset + k, "expected '('"));
        }
        let close = body[k..]
            .find(')')
            .map(|c| c + k)
            .ok_or_else(|| err(offset + k, "unclosed cycle"))?;
        let mut cycle = Vec::new();
        for tok in body[k + 1..close].split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| err(offset + k, format!("bad vertex {tok:?}")))?;
            if !(1..=4).contains(&v) {
                return Err(err(offset + k, format!("vertex {v} out of range 1..4")));
            }
            if std::mem::replace(&mut moved[v - 1], true) {
                return Err(err(offset + k, format!("vertex {v} repeated")));
            }
            cycle.push(v - 1);
        }
        for (idx, &v) in cycle.iter().enumerate() {
            images[v] = cycle[(idx + 1) % cycle.len()];
        }
        k = close + 1;
    }
    Permutation::from_images(images).ok_or_else(|| err(offset, "not a permutation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typealg::circulant;

    #[test]
    fn reads_c0003() {
        let m = parse_matrix("0,0,0,3;3,0,0,0;0,3,0,0;0,0,3,0").unwrap();
        assert_eq!(m, circulant([0, 0, 0, 3]));
        assert_eq!(format_matrix(&m), "0,0,0,3;3,0,0,0;0,3,0,0;0,0,3,0");
    }

    #[test]
    fn reads_cycles() {
        let p = parse_permutation("cycles:(1 2 3 4)").unwrap();
        assert_eq!(p.matrix(), [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]);
        let q = parse_permutation("cycles:(1 2)(3 4)").unwrap();
        assert_eq!(q.to_string(), "cycles:(1 2)(3 4)");
        let r = parse_permutation("0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0").unwrap();
        assert_eq!(q, r);
        assert_eq!(parse_permutation("cycles:()").unwrap(), Permutation::identity());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_matrix("0,0;1").is_err());
        assert!(parse_matrix("0,0,0,-1;0,0,0,0;0,0,0,0;0,0,0,0").is_err());
        assert!(parse_permutation("cycles:(1 2)(2 3)").is_err());
        assert!(parse_permutation("cycles:(1 5)").is_err());
        assert!(parse_permutation("1,1,0,0;0,0,0,0;0,0,1,0;0,0,0,1").is_err());
        let e = parse_matrix("0,0,0,0;0,x,0,0;0,0,0,0;0,0,0,0").unwrap_err();
        assert_eq!(e.pos, 10);
    }
}
