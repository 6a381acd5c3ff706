//! Integer polynomials, cyclotomic polynomials and cyclotomic factorization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("cyclotomic index must be positive")]
    ZeroIndex,
    #[error("polynomial is not a product of cyclotomic polynomials")]
    NotCyclotomicProduct,
    #[error("bad polynomial text at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Dense polynomial over the integers; `coeffs[k]` is the coefficient of t^k.
/// The zero polynomial has no coefficients and trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Coefficient reversal about the formal degree `d`: returns t^d f(1/t).
    /// Panics if `d` is below the degree.
    pub fn reverse_at(&self, d: usize) -> Self {
        assert!(self.degree().map_or(true, |k| k <= d));
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit.
    pub fn div_rem_unit(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let lead = d.leading().expect("division by zero polynomial");
        assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact quotient in Z[t], or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let lead = d.leading().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Text form: comma-separated coefficients, constant term first. Zero prints as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut coeffs = Vec::new();
        let mut pos = 0;
        for field in s.split(',') {
            let trimmed = field.trim();
            let c = trimmed.parse::<BigInt>().map_err(|_| CycError::Parse {
                pos,
                msg: format!("expected an integer, found {trimmed:?}"),
            })?;
            coeffs.push(c);
            pos += field.len() + 1;
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn t_pow_minus_one(d: u64) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); d as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[d as usize] = BigInt::one();
    IntPoly::new(coeffs)
}

fn compute_cyclotomic(n: u64) -> IntPoly {
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in (1..=n).filter(|d| n % d == 0) {
        match mobius(n / d) {
            1 => num = &num * &t_pow_minus_one(d),
            -1 => den = &den * &t_pow_minus_one(d),
            _ => {}
        }
    }
    num.div_exact(&den).expect("Mobius product is exact")
}

const CACHE_MAX_DEGREE: u64 = 16;

fn cache() -> &'static HashMap<u64, IntPoly> {
    static CACHE: OnceLock<HashMap<u64, IntPoly>> = OnceLock::new();
    CACHE.get_or_init(|| {
        indices_with_totient_at_most(CACHE_MAX_DEGREE)
            .into_iter()
            .map(|d| (d, compute_cyclotomic(d)))
            .collect()
    })
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> Result<IntPoly, CycError> {
    if n == 0 {
        return Err(CycError::ZeroIndex);
    }
    Ok(cache()
        .get(&n)
        .cloned()
        .unwrap_or_else(|| compute_cyclotomic(n)))
}

/// All d with phi(d) <= k, ascending. phi(d) >= sqrt(d/2), so d <= 2k^2 is complete.
pub fn indices_with_totient_at_most(k: u64) -> Vec<u64> {
    static SMALL: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    if k <= CACHE_MAX_DEGREE {
        let table = SMALL.get_or_init(|| (0..=CACHE_MAX_DEGREE).map(scan_indices).collect());
        return table[k as usize].clone();
    }
    scan_indices(k)
}

fn scan_indices(k: u64) -> Vec<u64> {
    (1..=(2 * k * k).max(2)).filter(|&d| totient(d) <= k).collect()
}

/// sign * prod Phi_d^m, with `factors` keyed by ascending d.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycFactorization {
    pub sign: i8,
    pub factors: BTreeMap<u64, u32>,
}

impl CycFactorization {
    pub fn from_pairs(sign: i8, pairs: &[(u64, u32)]) -> Self {
        let mut factors = BTreeMap::new();
        for &(d, m) in pairs {
            if m > 0 {
                *factors.entry(d).or_insert(0) += m;
            }
        }
        CycFactorization { sign, factors }
    }

    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::from(self.sign));
        for (&d, &m) in &self.factors {
            let phi = cyclotomic(d).expect("positive index");
            acc = &acc * &phi.pow(m);
        }
        acc
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(&d, &m)| totient(d) * m as u64).sum()
    }

    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    fn sort_key(&self) -> Vec<(u64, u32)> {
        self.factors.iter().map(|(&d, &m)| (d, m)).collect()
    }
}

/// Text form used in reports, e.g. `+Phi1^4*Phi4^2`.
impl fmt::Display for CycFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "-" } else { "+" })?;
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (d, m)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "Phi{d}")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

pub fn factor_into_cyclotomics(p: &IntPoly) -> Result<CycFactorization, CycError> {
    let deg = p.degree().ok_or(CycError::ZeroPolynomial)? as u64;
    let mut rest = p.clone();
    let mut factors = BTreeMap::new();
    for d in indices_with_totient_at_most(deg) {
        let phi_d = totient(d);
        let phi = cyclotomic(d)?;
        loop {
            let remaining = rest.degree().unwrap_or(0) as u64;
            if phi_d > remaining {
                break;
            }
            let (q, r) = rest.div_rem_unit(&phi);
            if !r.is_zero() {
                break;
            }
            rest = q;
            *factors.entry(d).or_insert(0) += 1;
        }
        if rest.degree() == Some(0) {
            break;
        }
    }
    match (rest.degree(), rest.leading()) {
        (Some(0), Some(c)) if c.abs().is_one() => Ok(CycFactorization {
            sign: if c.is_positive() { 1 } else { -1 },
            factors,
        }),
        _ => Err(CycError::NotCyclotomicProduct),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Palindromicity {
    Palindromic,
    Antipalindromic,
    Neither,
}

pub fn palindromicity(p: &IntPoly) -> Result<Palindromicity, CycError> {
    let d = p.degree().ok_or(CycError::ZeroPolynomial)?;
    let c = p.coeffs();
    if (0..=d).all(|i| c[i] == c[d - i]) {
        Ok(Palindromicity::Palindromic)
    } else if (0..=d).all(|i| c[i] == -&c[d - i]) {
        Ok(Palindromicity::Antipalindromic)
    } else {
        Ok(Palindromicity::Neither)
    }
}

pub fn root1_multiplicity(p: &IntPoly) -> Result<u32, CycError> {
    if p.is_zero() {
        return Err(CycError::ZeroPolynomial);
    }
    let t_minus_1 = IntPoly::from_i64s(&[-1, 1]);
    let mut rest = p.clone();
    let mut m = 0;
    loop {
        let (q, r) = rest.div_rem_unit(&t_minus_1);
        if !r.is_zero() {
            return Ok(m);
        }
        rest = q;
        m += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProductConstraint {
    pub total_degree: u32,
    pub t1_coeff: Option<i64>,
    pub min_root1_mult: u32,
    pub palindromicity: Option<Palindromicity>,
}

/// Every monic product of cyclotomic polynomials meeting `c`, in canonical order.
pub fn enumerate_cyclotomic_products(c: &ProductConstraint) -> Vec<CycFactorization> {
    let total = c.total_degree as u64;
    if c.min_root1_mult > c.total_degree {
        return Vec::new();
    }
    let indices: Vec<(u64, u64)> = indices_with_totient_at_most(total)
        .into_iter()
        .map(|d| (d, totient(d)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_multisets(&indices, 0, total, c.min_root1_mult, &mut chosen, &mut |pairs| {
        let f = CycFactorization::from_pairs(1, pairs);
        let p = f.expand();
        if let Some(t1) = c.t1_coeff {
            if p.coeff(1) != BigInt::from(t1) {
                return;
            }
        }
        if let Some(want) = c.palindromicity {
            if palindromicity(&p).ok() != Some(want) {
                return;
            }
        }
        out.push(f);
    });
    out.sort_by_key(CycFactorization::sort_key);
    out.dedup();
    out
}

fn collect_multisets(
    indices: &[(u64, u64)],
    at: usize,
    remaining: u64,
    min_root1: u32,
    chosen: &mut Vec<(u64, u32)>,
    emit: &mut dyn FnMut(&[(u64, u32)]),
) {
    if remaining == 0 {
        if chosen.iter().find(|(d, _)| *d == 1).map_or(0, |p| p.1) >= min_root1 {
            emit(chosen);
        }
        return;
    }
    let Some(&(d, phi)) = indices.get(at) else {
        return;
    };
    let lowest = if d == 1 { min_root1 as u64 } else { 0 };
    let mut m = lowest;
    while m * phi <= remaining {
        if m > 0 {
            chosen.push((d, m as u32));
        }
        collect_multisets(indices, at + 1, remaining - m * phi, min_root1, chosen, emit);
        if m > 0 {
            chosen.pop();
        }
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(0), Err(CycError::ZeroIndex));
    }

    #[test]
    fn cached_and_computed_agree() {
        for n in 1..=40 {
            assert_eq!(cyclotomic(n).unwrap(), compute_cyclotomic(n), "n = {n}");
        }
    }

    #[test]
    fn divisor_products_give_t_n_minus_1() {
        for n in 1..=60u64 {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d).unwrap());
            assert_eq!(prod, t_pow_minus_one(n));
            let phi = cyclotomic(n).unwrap();
            assert_eq!(phi.leading(), Some(&BigInt::one()));
            assert_eq!(phi.degree(), Some(totient(n) as usize));
        }
    }

    #[test]
    fn factor_constructed_product() {
        let t_minus_1 = p(&[-1, 1]);
        let input = &t_minus_1.pow(4) * &p(&[1, 0, 1]).pow(2);
        let f = factor_into_cyclotomics(&input).unwrap();
        assert_eq!(f, CycFactorization::from_pairs(1, &[(1, 4), (4, 2)]));
        assert_eq!(f.expand(), input);
    }

    #[test]
    fn factor_rejects_golden_ratio_quadratic() {
        assert_eq!(
            factor_into_cyclotomics(&p(&[1, -3, 1])),
            Err(CycError::NotCyclotomicProduct)
        );
        assert_eq!(
            factor_into_cyclotomics(&p(&[2, 0, 2])),
            Err(CycError::NotCyclotomicProduct)
        );
        assert_eq!(factor_into_cyclotomics(&IntPoly::zero()), Err(CycError::ZeroPolynomial));
    }

    #[test]
    fn factor_keeps_negative_sign() {
        let f = factor_into_cyclotomics(&p(&[1, -1])).unwrap();
        assert_eq!(f, CycFactorization::from_pairs(-1, &[(1, 1)]));
        assert_eq!(f.to_string(), "-Phi1");
    }

    #[test]
    fn palindromicity_examples() {
        assert_eq!(palindromicity(&p(&[1, -2, 1])), Ok(Palindromicity::Palindromic));
        assert_eq!(palindromicity(&p(&[-1, 1])), Ok(Palindromicity::Antipalindromic));
        assert_eq!(palindromicity(&p(&[0, 1, 1])), Ok(Palindromicity::Neither));
        assert!(palindromicity(&IntPoly::zero()).is_err());
    }

    #[test]
    fn root1_examples() {
        let t_minus_1 = p(&[-1, 1]);
        assert_eq!(root1_multiplicity(&(&t_minus_1.pow(3) * &p(&[1, 0, 1]))), Ok(3));
        assert_eq!(root1_multiplicity(&p(&[1, 0, 1])), Ok(0));
        let one_minus_t = p(&[1, -1]);
        assert_eq!(root1_multiplicity(&(&one_minus_t.pow(4) * &p(&[1, 1, 1]))), Ok(4));
    }

    #[test]
    fn enumerate_degree_one() {
        let got = enumerate_cyclotomic_products(&ProductConstraint {
            total_degree: 1,
            ..Default::default()
        });
        assert_eq!(
            got,
            vec![
                CycFactorization::from_pairs(1, &[(1, 1)]),
                CycFactorization::from_pairs(1, &[(2, 1)]),
            ]
        );
    }

    #[test]
    fn enumerate_t1_minus_four() {
        let got = enumerate_cyclotomic_products(&ProductConstraint {
            total_degree: 4,
            t1_coeff: Some(-4),
            ..Default::default()
        });
        assert_eq!(got, vec![CycFactorization::from_pairs(1, &[(1, 4)])]);
    }

    #[test]
    fn text_round_trip() {
        let q: IntPoly = "1,-2,1".parse().unwrap();
        assert_eq!(q, p(&[1, -2, 1]));
        assert_eq!(q.to_string(), "1,-2,1");
        assert!(matches!("1,x".parse::<IntPoly>(), Err(CycError::Parse { pos: 2, .. })));
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 2, 3]) * &p(&[2, 0, 5]);
        assert_eq!(a.div_exact(&p(&[2, 0, 5])), Some(p(&[1, 2, 3])));
        assert_eq!(a.div_exact(&p(&[3, 1])), None);
        assert_eq!(p(&[1, 0, 0, 1]).reverse_at(4), p(&[0, 1, 0, 0, 1]));
    }
}
