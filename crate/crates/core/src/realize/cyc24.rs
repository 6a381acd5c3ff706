use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::RealizeError;

/// An element of Q(ζ) for ζ a primitive 24th root of unity, stored in the basis
/// 1, ζ, ..., ζ^7 modulo ζ^8 - ζ^4 + 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyc24 {
    c: [BigRational; 8],
}

fn zero_coeffs() -> [BigRational; 8] {
    std::array::from_fn(|_| BigRational::zero())
}

/// ζ^k in the power basis, for k in 0..24.
fn power_table() -> &'static [Cyc24; 24] {
    static TABLE: OnceLock<[Cyc24; 24]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut cur = Cyc24::one();
        let mut shift = zero_coeffs();
        shift[1] = BigRational::one();
        let zeta = Cyc24 { c: shift };
        std::array::from_fn(|_| {
            let out = cur.clone();
            cur = &cur * &zeta;
            out
        })
    })
}

impl Cyc24 {
    pub fn zero() -> Self {
        Cyc24 { c: zero_coeffs() }
    }

    pub fn one() -> Self {
        Cyc24::from_rational(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Cyc24::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c = zero_coeffs();
        c[0] = r;
        Cyc24 { c }
    }

    pub fn from_coeffs(c: [BigRational; 8]) -> Self {
        Cyc24 { c }
    }

    pub fn coeffs(&self) -> &[BigRational; 8] {
        &self.c
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        power_table()[k.rem_euclid(24) as usize].clone()
    }

    pub fn i() -> Self {
        Cyc24::zeta_pow(6)
    }

    pub fn omega() -> Self {
        Cyc24::zeta_pow(8)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Cyc24::one()
    }

    /// The rational value, if the element is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// The Galois automorphism ζ ↦ ζ^k, k a unit mod 24.
    pub fn galois(&self, k: i64) -> Self {
        let mut out = Cyc24::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                out = &out + &Cyc24::zeta_pow(k * j as i64).scale(cj);
            }
        }
        out
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyc24 { c: std::array::from_fn(|k| &self.c[k] * r) }
    }

    pub fn norm(&self) -> BigRational {
        let mut prod = Cyc24::one();
        for k in [1, 5, 7, 11, 13, 17, 19, 23] {
            prod = &prod * &self.galois(k);
        }
        prod.as_rational().expect("the field norm is rational").clone()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // a^{-1} = (product of the other seven conjugates) / N(a)
        let mut others = Cyc24::one();
        for k in [5, 7, 11, 13, 17, 19, 23] {
            others = &others * &self.galois(k);
        }
        let n = (&others * self).as_rational().expect("the field norm is rational").clone();
        Some(others.scale(&n.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyc24::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &Cyc24 {
    type Output = Cyc24;
    fn add(self, rhs: &Cyc24) -> Cyc24 {
        Cyc24 { c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]) }
    }
}

impl Sub for &Cyc24 {
    type Output = Cyc24;
    fn sub(self, rhs: &Cyc24) -> Cyc24 {
        Cyc24 { c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]) }
    }
}

impl Neg for &Cyc24 {
    type Output = Cyc24;
    fn neg(self) -> Cyc24 {
        Cyc24 { c: std::array::from_fn(|k| -&self.c[k]) }
    }
}

impl Mul for &Cyc24 {
    type Output = Cyc24;
    fn mul(self, rhs: &Cyc24) -> Cyc24 {
        let mut wide: Vec<BigRational> = vec![BigRational::zero(); 15];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        // ζ^k = ζ^{k-4} - ζ^{k-8}
        for k in (8..15).rev() {
            let top = std::mem::take(&mut wide[k]);
            if !top.is_zero() {
                wide[k - 4] += &top;
                wide[k - 8] -= &top;
            }
        }
        wide.truncate(8);
        Cyc24 { c: wide.try_into().expect("eight coefficients") }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyc24 {
            type Output = Cyc24;
            fn $f(self, rhs: Cyc24) -> Cyc24 {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Cyc24 {
    type Output = Cyc24;
    fn neg(self) -> Cyc24 {
        -&self
    }
}

impl fmt::Display for Cyc24 {
    /// Rational elements print as `p` or `p/q`, others as the full 8-tuple.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "(")?;
        for (k, c) in self.c.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad rational '{s}'"))?;
    let den: BigInt = den.parse().map_err(|_| format!("bad rational '{s}'"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Cyc24 {
    type Err = RealizeError;

    /// Accepts `p`, `p/q`, or an 8-tuple `(c0,...,c7)` of such rationals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| RealizeError::Parse { line: 0, msg };
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or_else(|| bad(format!("unclosed tuple '{s}'")))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 8 {
                return Err(bad(format!("expected 8 coefficients in '{s}', found {}", parts.len())));
            }
            let mut c = zero_coeffs();
            for (k, p) in parts.iter().enumerate() {
                c[k] = parse_rational(p).map_err(bad)?;
            }
            Ok(Cyc24 { c })
        } else {
            parse_rational(s).map(Cyc24::from_rational).map_err(bad)
        }
    }
}
