use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::cyc24::Cyc24;
use super::group::{CycMatrix, MatrixGroup};
use super::RealizeError;

/// An irreducible representation with its character as a class function.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub name: String,
    pub dim: usize,
    /// Images of the group generators.
    pub images: Vec<CycMatrix>,
    /// One value per conjugacy class of the group.
    pub character: Vec<Cyc24>,
}

/// ⟨a, b⟩ = (1/|G|) Σ_g a(g) conj(b(g)) for class functions given per class.
pub fn inner_product(g: &MatrixGroup, a: &[Cyc24], b: &[Cyc24]) -> Cyc24 {
    let mut acc = Cyc24::zero();
    for (k, class) in g.classes.iter().enumerate() {
        let term = &a[k] * &b[k].conj();
        acc = &acc + &term.scale(&BigRational::from_integer(class.len().into()));
    }
    acc.scale(&BigRational::new(1.into(), g.order().into()))
}

/// Character of `images` (one matrix per group element) as a class function.
pub fn class_function(g: &MatrixGroup, images: &[CycMatrix]) -> Vec<Cyc24> {
    g.classes.iter().map(|c| images[c[0]].trace()).collect()
}

/// Checks ⟨χ, χ⟩ = 1 for each irrep and ⟨χ_i, χ_j⟩ = 0 for i ≠ j.
pub fn verify_irreps(g: &MatrixGroup, irreps: &[Irrep]) -> Result<(), RealizeError> {
    for (i, a) in irreps.iter().enumerate() {
        if !inner_product(g, &a.character, &a.character).is_one() {
            return Err(RealizeError::NotIrreducible { name: a.name.clone() });
        }
        for b in &irreps[i + 1..] {
            if !inner_product(g, &a.character, &b.character).is_zero() {
                return Err(RealizeError::DuplicateIrrep { first: a.name.clone(), second: b.name.clone() });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McKayResult {
    /// `matrix[i][j]` = multiplicity of W_i in V ⊗ W_j.
    pub matrix: Vec<Vec<i64>>,
    /// Per column j: Σ_i M_ij dim W_i - dim V · dim W_j.
    pub defect: Vec<i64>,
}

impl McKayResult {
    pub fn is_complete(&self) -> bool {
        self.defect.iter().all(|&d| d == 0)
    }

    pub fn to_int_mat(&self) -> Option<crate::typealg::IntMat> {
        if self.matrix.len() != 4 {
            return None;
        }
        Some(std::array::from_fn(|i| std::array::from_fn(|j| self.matrix[i][j])))
    }
}

pub fn mckay_matrix(
    g: &MatrixGroup,
    irreps: &[Irrep],
    chi_v: &[Cyc24],
    dim_v: usize,
) -> Result<McKayResult, RealizeError> {
    let n = irreps.len();
    let mut matrix = vec![vec![0i64; n]; n];
    for (j, wj) in irreps.iter().enumerate() {
        let product: Vec<Cyc24> = chi_v.iter().zip(&wj.character).map(|(a, b)| a * b).collect();
        for (i, wi) in irreps.iter().enumerate() {
            let value = inner_product(g, &product, &wi.character);
            matrix[i][j] = value
                .as_integer()
                .filter(|v| !v.is_negative())
                .and_then(|v: BigInt| v.to_i64())
                .ok_or(RealizeError::NonIntegerEntry { row: i, col: j })?;
        }
    }
    let defect = (0..n)
        .map(|j| {
            let total: i64 = (0..n).map(|i| matrix[i][j] * irreps[i].dim as i64).sum();
            total - (dim_v * irreps[j].dim) as i64
        })
        .collect();
    Ok(McKayResult { matrix, defect })
}

/// The vertex permutation i ↦ j with χ_j = χ_i · conj(λ), for a linear character λ.
pub fn winding_permutation(irreps: &[Irrep], lambda: &[Cyc24]) -> Result<Vec<usize>, RealizeError> {
    let twisted: Vec<Cyc24> = lambda.iter().map(Cyc24::conj).collect();
    irreps
        .iter()
        .map(|wi| {
            let target: Vec<Cyc24> = wi.character.iter().zip(&twisted).map(|(a, b)| a * b).collect();
            irreps
                .iter()
                .position(|wj| wj.character == target)
                .ok_or_else(|| RealizeError::NoMatchingCharacter { irrep: wi.name.clone() })
        })
        .collect()
}
