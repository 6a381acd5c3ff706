//! Quiver types (M, P, s), their matrix polynomials, Hilbert series and equivalence.

mod equiv;
mod graph;
mod perm;
mod polymat;
pub mod text;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use equiv::{
    all_relabelings, canonical_adjacency, canonical_type, quivers_isomorphic, relabel,
    types_equivalent, CanonicalKey,
};
pub use graph::{
    char_poly, is_normal, orbit_quotient_strongly_connected, spectral_radius_equals,
    spectral_radius_general, strongly_connected, SpectralError,
};
pub use perm::Permutation;
pub use polymat::{
    det_bareiss, det_cofactor, det_poly, hilbert_prefix, matrix_polynomial, BigMat,
    HilbertPrefix, NegativeEntry, PolyMatrix,
};

/// 4x4 integer matrix, row-major.
pub type IntMat = [[i64; 4]; 4];

pub const IDENTITY: IntMat = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_add(a: &IntMat, b: &IntMat) -> IntMat {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] += b[i][j];
        }
    }
    out
}

pub fn transpose(a: &IntMat) -> IntMat {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[j][i] = a[i][j];
        }
    }
    out
}

pub fn trace(a: &IntMat) -> i64 {
    (0..4).map(|i| a[i][i]).sum()
}

/// C(a,b,c,d): row i is the first row rotated right i places.
pub fn circulant(first_row: [i64; 4]) -> IntMat {
    let mut out = [[0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = first_row[(j + 4 - i) % 4];
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("adjacency matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("superpotential degree {0} is outside 2..=4")]
    BadDegree(u32),
}

/// A type (M, P, s). `m[i][j]` counts arrows i -> j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverType {
    pub m: IntMat,
    pub p: Permutation,
    pub s: u32,
}

impl QuiverType {
    pub fn new(m: IntMat, p: Permutation, s: u32) -> Result<Self, TypeError> {
        for (row, r) in m.iter().enumerate() {
            if let Some(col) = r.iter().position(|&x| x < 0) {
                return Err(TypeError::NegativeEntry { row, col });
            }
        }
        if !(2..=4).contains(&s) {
            return Err(TypeError::BadDegree(s));
        }
        Ok(QuiverType { m, p, s })
    }

    pub fn p_matrix(&self) -> IntMat {
        self.p.matrix()
    }

    pub fn commutes(&self) -> bool {
        let p = self.p_matrix();
        mat_mul(&self.m, &p) == mat_mul(&p, &self.m)
    }
}

impl std::fmt::Display for QuiverType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(M={}, P={}, s={})", text::format_matrix(&self.m), self.p, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_rows_rotate() {
        assert_eq!(
            circulant([0, 0, 0, 3]),
            [[0, 0, 0, 3], [3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0]]
        );
    }

    #[test]
    fn circulants_commute_with_four_cycle() {
        let p = Permutation::from_cycles(&[&[0, 1, 2, 3]]);
        for row in [[0, 1, 2, 0], [1, 1, 0, 1], [2, 1, 0, 0]] {
            assert!(QuiverType::new(circulant(row), p, 3).unwrap().commutes());
        }
    }

    #[test]
    fn rejects_bad_types() {
        let mut m = IDENTITY;
        m[2][1] = -1;
        assert_eq!(
            QuiverType::new(m, Permutation::identity(), 3),
            Err(TypeError::NegativeEntry { row: 2, col: 1 })
        );
        assert_eq!(
            QuiverType::new(IDENTITY, Permutation::identity(), 5),
            Err(TypeError::BadDegree(5))
        );
    }
}
