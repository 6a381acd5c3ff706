use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{transpose, IntMat, QuiverType};
use crate::cycpoly::IntPoly;

/// 4x4 matrix of integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub entries: [[IntPoly; 4]; 4],
}

impl PolyMatrix {
    pub fn zero() -> Self {
        PolyMatrix { entries: Default::default() }
    }

    /// sum_k coeffs[k] t^k
    pub fn from_coefficients(coeffs: &[IntMat]) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] =
                    IntPoly::from_i64s(&coeffs.iter().map(|c| c[i][j]).collect::<Vec<_>>());
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = IntPoly::zero();
                for k in 0..4 {
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().flatten().filter_map(IntPoly::degree).max()
    }

    /// Coefficient matrix of t^k.
    pub fn coefficient(&self, k: usize) -> [[BigInt; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entries[i][j].coeff(k)))
    }
}

/// Coefficient matrices p_0..p_s of p(t) = I - Mt + P M^T t^(s-1) - P t^s.
pub fn coefficient_matrices(t: &QuiverType) -> Vec<IntMat> {
    let s = t.s as usize;
    let p = t.p_matrix();
    let pmt = super::mat_mul(&p, &transpose(&t.m));
    let mut coeffs = vec![[[0i64; 4]; 4]; s + 1];
    for i in 0..4 {
        coeffs[0][i][i] = 1;
        for j in 0..4 {
            coeffs[1][i][j] -= t.m[i][j];
            coeffs[s - 1][i][j] += pmt[i][j];
            coeffs[s][i][j] -= p[i][j];
        }
    }
    coeffs
}

pub fn matrix_polynomial(t: &QuiverType) -> PolyMatrix {
    PolyMatrix::from_coefficients(&coefficient_matrices(t))
}

fn minor2(m: &PolyMatrix, r: (usize, usize), c: (usize, usize)) -> IntPoly {
    &(&m.entries[r.0][c.0] * &m.entries[r.1][c.1]) - &(&m.entries[r.0][c.1] * &m.entries[r.1][c.0])
}

/// Laplace expansion along the top two rows (products of complementary 2x2 minors).
pub fn det_cofactor(m: &PolyMatrix) -> IntPoly {
    const PAIRS: [((usize, usize), (usize, usize), i64); 6] = [
        ((0, 1), (2, 3), 1),
        ((0, 2), (1, 3), -1),
        ((0, 3), (1, 2), 1),
        ((1, 2), (0, 3), 1),
        ((1, 3), (0, 2), -1),
        ((2, 3), (0, 1), 1),
    ];
    let mut acc = IntPoly::zero();
    for (top, bottom, sign) in PAIRS {
        let term = &minor2(m, (0, 1), top) * &minor2(m, (2, 3), bottom);
        acc = if sign > 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free (Bareiss) elimination over Z[t] with row pivoting.
pub fn det_bareiss(m: &PolyMatrix) -> IntPoly {
    let mut a = m.entries.clone();
    let mut prev = IntPoly::one();
    let mut negate = false;
    for k in 0..3 {
        if a[k][k].is_zero() {
            match (k + 1..4).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..4 {
            for j in k + 1..4 {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[3][3].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant. Debug builds cross-check the two algorithms.
pub fn det_poly(m: &PolyMatrix) -> IntPoly {
    let det = det_cofactor(m);
    debug_assert_eq!(det, det_bareiss(m));
    det
}

pub type BigMat = [[BigInt; 4]; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeEntry {
    pub degree: usize,
    pub row: usize,
    pub col: usize,
}

/// Terms H_0..H_N of the Hilbert series p(t)^-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPrefix {
    pub terms: Vec<BigMat>,
    pub first_negative: Option<NegativeEntry>,
}

pub fn hilbert_prefix(t: &QuiverType, n: usize) -> HilbertPrefix {
    let coeffs: Vec<[[BigInt; 4]; 4]> = coefficient_matrices(t)
        .iter()
        .map(|c| c.map(|row| row.map(BigInt::from)))
        .collect();
    let identity: BigMat =
        std::array::from_fn(|i| std::array::from_fn(|j| BigInt::from((i == j) as i64)));
    let mut terms = vec![identity];
    let mut first_negative = None;
    for k in 1..=n {
        let mut h: BigMat = Default::default();
        for (j, pj) in coeffs.iter().enumerate().take(k.min(t.s as usize) + 1).skip(1) {
            let prev = &terms[k - j];
            for r in 0..4 {
                for c in 0..4 {
                    for x in 0..4 {
                        if !pj[r][x].is_zero() {
                            h[r][c] -= &pj[r][x] * &prev[x][c];
                        }
                    }
                }
            }
        }
        if first_negative.is_none() {
            first_negative = (0..16)
                .find(|&e| h[e / 4][e % 4].is_negative())
                .map(|e| NegativeEntry { degree: k, row: e / 4, col: e % 4 });
        }
        terms.push(h);
    }
    HilbertPrefix { terms, first_negative }
}
