use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{det_poly, mat_mul, transpose, IntMat, Permutation, PolyMatrix};
use crate::cycpoly::IntPoly;

pub fn strongly_connected(m: &IntMat) -> bool {
    let mut reach = [[false; 4]; 4];
    for i in 0..4 {
        reach[i][i] = true;
        for j in 0..4 {
            reach[i][j] |= m[i][j] > 0;
        }
    }
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                reach[i][j] |= reach[i][k] && reach[k][j];
            }
        }
    }
    reach.iter().all(|r| r.iter().all(|&x| x))
}

/// Strong connectivity of the quotient graph on the orbits of `p`.
pub fn orbit_quotient_strongly_connected(m: &IntMat, p: &Permutation) -> bool {
    let orbits = p.cycles();
    let k = orbits.len();
    let mut reach = vec![vec![false; k]; k];
    for (a, oa) in orbits.iter().enumerate() {
        reach[a][a] = true;
        for (b, ob) in orbits.iter().enumerate() {
            reach[a][b] |= oa.iter().any(|&i| ob.iter().any(|&j| m[i][j] > 0));
        }
    }
    for c in 0..k {
        for a in 0..k {
            for b in 0..k {
                reach[a][b] |= reach[a][c] && reach[c][b];
            }
        }
    }
    reach.iter().all(|r| r.iter().all(|&x| x))
}

pub fn is_normal(m: &IntMat) -> bool {
    let mt = transpose(m);
    mat_mul(m, &mt) == mat_mul(&mt, m)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("matrix is not normal; the spectral-radius criterion does not apply")]
    NotNormal,
}

/// det(xI - M).
pub fn char_poly(m: &IntMat) -> IntPoly {
    let mut pm = PolyMatrix::zero();
    for i in 0..4 {
        for j in 0..4 {
            pm.entries[i][j] = IntPoly::from_i64s(&[-m[i][j], (i == j) as i64]);
        }
    }
    det_poly(&pm)
}

/// Whether rho(M) equals `target`, decided exactly.
///
/// Structured forms use closed-form spectra; everything else goes through
/// [`spectral_radius_general`].
pub fn spectral_radius_equals(m: &IntMat, target: i64) -> Result<bool, SpectralError> {
    if !is_normal(m) {
        return Err(SpectralError::NotNormal);
    }
    if !char_poly(m).eval(&BigInt::from(target)).is_zero() {
        return Ok(false);
    }
    if let Some(v) = circulant_check(m, target) {
        return Ok(v);
    }
    if let Some(v) = three_cycle_check(m, target) {
        return Ok(v);
    }
    if let Some(v) = two_two_check(m, target) {
        return Ok(v);
    }
    Ok(spectral_radius_general(m, target))
}

/// For nonnegative M the spectral radius is itself an eigenvalue, so rho(M) = target
/// exactly when target is a root of the characteristic polynomial and no real root
/// exceeds it. The latter is a Sturm count on (target, inf).
pub fn spectral_radius_general(m: &IntMat, target: i64) -> bool {
    let chi = char_poly(m);
    let x0 = BigInt::from(target);
    if !chi.eval(&x0).is_zero() {
        return false;
    }
    let linear = IntPoly::from_i64s(&[-target, 1]);
    let mut rest = chi;
    while let Some(q) = rest.div_exact(&linear) {
        rest = q;
    }
    sturm_roots_above(&rest, &x0) == 0
}

fn is_circulant(m: &IntMat) -> bool {
    (0..4).all(|i| (0..4).all(|j| m[i][j] == m[(i + 1) % 4][(j + 1) % 4]))
}

/// |x| <= target where x = (tr + sign*sqrt(disc))/2 with disc >= 0.
fn half_sqrt_within(tr: i64, disc: i64, target: i64) -> bool {
    // need -2T <= tr +- sqrt(D) <= 2T for both signs
    let hi = 2 * target - tr;
    let lo = 2 * target + tr;
    hi >= 0 && lo >= 0 && disc <= hi * hi && disc <= lo * lo
}

/// Eigenvalues of a 2x2 integer block all have modulus at most `target`.
fn block_within(a: i64, b: i64, c: i64, d: i64, target: i64) -> bool {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = tr * tr - 4 * det;
    if disc >= 0 {
        half_sqrt_within(tr, disc, target)
    } else {
        det <= target * target
    }
}

fn circulant_check(m: &IntMat, target: i64) -> Option<bool> {
    if !is_circulant(m) {
        return None;
    }
    let [a, b, c, d] = m[0];
    let mu0 = a + b + c + d;
    let mu2 = a - b + c - d;
    let mod13 = (a - c) * (a - c) + (b - d) * (b - d);
    Some(mu0.abs() <= target && mu2.abs() <= target && mod13 <= target * target)
}

fn three_cycle_check(m: &IntMat, target: i64) -> Option<bool> {
    let [w, x, y, v] = m[0];
    let expected = [[w, x, y, v], [y, w, x, v], [x, y, w, v], [v, v, v, m[3][3]]];
    if *m != expected {
        return None;
    }
    let (u, r) = (v, m[3][3]);
    let s = w + x + y;
    // e+- from the invariant block [[s, u], [3u, r]]
    let pair_ok = block_within(s, u, 3 * u, r, target);
    let rot_mod2 = w * w + x * x + y * y - w * x - x * y - y * w;
    Some(pair_ok && rot_mod2 <= target * target)
}

fn two_two_check(m: &IntMat, target: i64) -> Option<bool> {
    let [a, b, c, d] = m[0];
    let [e, f, g, h] = m[2];
    let expected = [[a, b, c, d], [b, a, d, c], [e, f, g, h], [f, e, h, g]];
    if *m != expected {
        return None;
    }
    let plus = block_within(a + b, c + d, e + f, g + h, target);
    let minus = block_within(a - b, c - d, e - f, g - h, target);
    Some(plus && minus)
}

type RatPoly = Vec<BigRational>;

fn rat_trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rat_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let q = &r[r.len() - 1] / &lead;
        for (j, c) in b.iter().enumerate() {
            r[k + j] -= &q * c;
        }
        r = rat_trim(r);
    }
    r
}

fn rat_eval_sign(p: &RatPoly, x: &BigRational) -> i32 {
    let v = p
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let nonzero: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in (x0, inf); `p(x0)` must be nonzero.
fn sturm_roots_above(p: &IntPoly, x0: &BigInt) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let to_rat = |q: &IntPoly| -> RatPoly {
        q.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
    };
    let mut seq = vec![to_rat(p), to_rat(&p.derivative())];
    loop {
        let n = seq.len();
        let r = rat_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let x = BigRational::from_integer(x0.clone());
    let at_x0 = variations(seq.iter().map(|q| rat_eval_sign(q, &x)));
    let at_inf = variations(seq.iter().map(|q| {
        let lead = q.last().expect("nonzero member");
        if lead.is_positive() {
            1
        } else {
            -1
        }
    }));
    at_x0 - at_inf
}
