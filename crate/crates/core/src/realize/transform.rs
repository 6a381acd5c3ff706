use super::RealizeError;
use crate::typealg::{mat_add, mat_mul, Permutation, QuiverType};

/// Type of the Ore extension B[t; ρ] of a dimension-2 algebra B of type (M, P, 2),
/// where ρ permutes the vertices by P': (M + P'^{-1}, P P'^{-1}, 3).
pub fn ore_type(t: &QuiverType, p_prime: &Permutation) -> Result<QuiverType, RealizeError> {
    if t.s != 2 {
        return Err(RealizeError::OreNeedsDegreeTwo { s: t.s });
    }
    let inv = p_prime.inverse();
    let m = mat_add(&t.m, &inv.matrix());
    QuiverType::new(m, t.p.then(&inv), 3).map_err(|e| RealizeError::InvalidType(e.to_string()))
}

/// Type of the graded twist by an automorphism permuting vertices by N: (NM, NP, s).
pub fn twist_type(t: &QuiverType, n: &Permutation) -> QuiverType {
    QuiverType { m: mat_mul(&n.matrix(), &t.m), p: n.then(&t.p), s: t.s }
}
