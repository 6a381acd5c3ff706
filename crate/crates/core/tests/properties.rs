use num_bigint::BigInt;
use proptest::prelude::*;
use qcy_core::classify::{PermClass, ThreeCycleForm, TwoTwoForm};
use qcy_core::cycpoly::{
    factor_into_cyclotomics, indices_with_totient_at_most, palindromicity, totient, CycFactorization,
    IntPoly, Palindromicity,
};
use qcy_core::realize::Cyc24;
use qcy_core::typealg::{
    circulant, det_bareiss, det_cofactor, det_poly, hilbert_prefix, matrix_polynomial, trace, IntMat,
    Permutation, PolyMatrix, QuiverType,
};

const CASES: u32 = 256;

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

fn four_cycle() -> impl Strategy<Value = IntMat> {
    prop::array::uniform4(0i64..=3).prop_map(circulant)
}

fn three_cycle(max: i64) -> impl Strategy<Value = ThreeCycleForm> {
    prop::array::uniform6(0i64..=max).prop_map(|[w, x, y, u, v, r]| ThreeCycleForm { w, x, y, u, v, r })
}

fn two_two(max: i64) -> impl Strategy<Value = TwoTwoForm> {
    prop::array::uniform8(0i64..=max).prop_map(TwoTwoForm::from_array)
}

/// A type with M commuting with P, over every permutation class and the identity.
fn any_type() -> impl Strategy<Value = QuiverType> {
    type_with_degree(2..=4)
}

/// For s >= 3 the term P M^T t^(s-1) does not reach t^1.
fn type_with_degree(s: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = QuiverType> {
    prop_oneof![
        (four_cycle(), s.clone()).prop_map(|(m, s)| (m, PermClass::FourCycle.reference(), s)),
        (three_cycle(3), s.clone()).prop_map(|(f, s)| (f.matrix(), PermClass::ThreeCycle.reference(), s)),
        (two_two(3), s.clone()).prop_map(|(f, s)| (f.matrix(), PermClass::TwoTwo.reference(), s)),
        (prop::array::uniform4(prop::array::uniform4(0i64..=3)), s)
            .prop_map(|(m, s)| (m, Permutation::identity(), s)),
    ]
    .prop_map(|(m, p, s)| QuiverType::new(m, p, s).expect("forms commute with their permutation"))
}

fn neg(m: &PolyMatrix) -> PolyMatrix {
    PolyMatrix { entries: m.entries.clone().map(|row| row.map(|e| -e)) }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn functional_equation(t in any_type()) {
        let p = matrix_polynomial(&t);
        let s = t.s as usize;
        let lhs = PolyMatrix { entries: p.entries.clone().map(|row| row.map(|e| e.reverse_at(s))) };
        let rhs = neg(&PolyMatrix::from_coefficients(&[t.p_matrix()]).mul(&p.transpose()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn palindromicity_follows_det_p(t in any_type()) {
        let d = det_poly(&matrix_polynomial(&t));
        prop_assert_eq!(d.degree(), Some(4 * t.s as usize));
        let expected = if t.p.sign() == 1 { Palindromicity::Palindromic } else { Palindromicity::Antipalindromic };
        prop_assert_eq!(palindromicity(&d).unwrap(), expected);
    }

    #[test]
    fn t_coefficient_is_minus_trace(t in type_with_degree(3..=4)) {
        let d = det_poly(&matrix_polynomial(&t));
        prop_assert_eq!(d.coeff(1), BigInt::from(-trace(&t.m)));
    }

    /// D(1) = 9 (u - v)^2 (w - y - 1)^2 for s = 3 and 4; it vanishes exactly when u = v or w = y + 1.
    #[test]
    fn three_cycle_value_at_one(f in three_cycle(4), s in 3u32..=4) {
        let t = QuiverType::new(f.matrix(), PermClass::ThreeCycle.reference(), s).unwrap();
        let d1 = det_poly(&matrix_polynomial(&t)).eval(&BigInt::from(1));
        let root = (f.u - f.v) * (f.w - f.y - 1);
        prop_assert_eq!(d1, BigInt::from(9 * root * root));
    }

    #[test]
    fn two_two_low_coefficients_s3(f in two_two(3)) {
        let t = QuiverType::new(f.matrix(), PermClass::TwoTwo.reference(), 3).unwrap();
        let d = det_poly(&matrix_polynomial(&t));
        prop_assert_eq!(d.coeff(1), BigInt::from(-f.lambda()));
        prop_assert_eq!(d.coeff(2), BigInt::from(f.beta() - f.gamma()));
    }

    /// For s >= 4 only I - Mt reaches t^2, so the coefficient is e2(M) = beta - gamma - 2(b + h).
    #[test]
    fn two_two_low_coefficients_s4(f in two_two(3)) {
        let t = QuiverType::new(f.matrix(), PermClass::TwoTwo.reference(), 4).unwrap();
        let d = det_poly(&matrix_polynomial(&t));
        prop_assert_eq!(d.coeff(1), BigInt::from(-f.lambda()));
        prop_assert_eq!(d.coeff(2), BigInt::from(f.beta() - f.gamma() - 2 * (f.b + f.h)));
    }

    #[test]
    fn hilbert_series_inverts_p(t in any_type(), n in 1usize..=10) {
        let h = hilbert_prefix(&t, n);
        prop_assert_eq!(h.terms.len(), n + 1);
        let p = matrix_polynomial(&t);
        if t.s >= 3 {
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert_eq!(&h.terms[1][i][j], &BigInt::from(t.m[i][j]));
                }
            }
        }
        for k in 0..=n {
            for i in 0..4 {
                for j in 0..4 {
                    let mut acc = BigInt::from(0);
                    for (q, hq) in h.terms.iter().enumerate().take(k + 1) {
                        let pc = p.coefficient(k - q);
                        for x in 0..4 {
                            acc += &pc[i][x] * &hq[x][j];
                        }
                    }
                    let want = BigInt::from((k == 0 && i == j) as i64);
                    prop_assert_eq!(acc, want, "degree {} entry ({}, {})", k, i, j);
                }
            }
        }
    }

    #[test]
    fn circulant_det_matches_eigenvalue_product(row in prop::array::uniform4(0i64..=3), s in 2u32..=4) {
        let t = QuiverType::new(circulant(row), PermClass::FourCycle.reference(), s).unwrap();
        let d = det_poly(&matrix_polynomial(&t));
        let product = circulant_det_over_cyc24(&t);
        prop_assert_eq!(product.len(), d.coeffs().len());
        for (k, c) in product.iter().enumerate() {
            prop_assert_eq!(c.as_integer(), Some(d.coeff(k)));
        }
    }

    #[test]
    fn cofactor_and_bareiss_agree(t in any_type()) {
        let p = matrix_polynomial(&t);
        prop_assert_eq!(det_cofactor(&p), det_bareiss(&p));
    }

    #[test]
    fn factor_expand_round_trip(mults in prop::collection::vec(0u32..=3, 8..=8), sign in prop::bool::ANY) {
        let indices = indices_with_totient_at_most(16);
        let mut budget = 16u64;
        let mut pairs = Vec::new();
        for (k, m) in mults.iter().enumerate() {
            let d = indices[(k * 7 + *m as usize * 5) % indices.len()];
            let m = (*m).min((budget / totient(d)) as u32);
            budget -= totient(d) * m as u64;
            pairs.push((d, m));
        }
        let f = CycFactorization::from_pairs(if sign { 1 } else { -1 }, &pairs);
        prop_assert!(f.degree() <= 16);
        prop_assert_eq!(factor_into_cyclotomics(&f.expand()).unwrap(), f);
    }
}

/// det p(t) for circulant M and the four-cycle P as the product of the eigenvalue
/// polynomials sum_j r_j(t) i^(jk), k = 0..3, where r(t) is the first row of p(t).
fn circulant_det_over_cyc24(t: &QuiverType) -> Vec<Cyc24> {
    let p = matrix_polynomial(t);
    let len = t.s as usize + 1;
    let mut acc: Vec<Cyc24> = vec![Cyc24::one()];
    for k in 0..4 {
        let lam: Vec<Cyc24> = (0..len)
            .map(|deg| {
                (0..4).fold(Cyc24::zero(), |sum, j| {
                    let r = p.get(0, j).coeff(deg);
                    let r = Cyc24::from_i64(i64::try_from(r).unwrap());
                    &sum + &(&r * &Cyc24::i().pow((j * k) as u32))
                })
            })
            .collect();
        let mut next = vec![Cyc24::zero(); acc.len() + lam.len() - 1];
        for (a, x) in acc.iter().enumerate() {
            for (b, y) in lam.iter().enumerate() {
                next[a + b] = &next[a + b] + &(x * y);
            }
        }
        acc = next;
    }
    while acc.len() > 1 && acc.last().is_some_and(Cyc24::is_zero) {
        acc.pop();
    }
    acc
}

#[test]
fn circulant_eigen_product_example() {
    let t = QuiverType::new(circulant([0, 0, 0, 3]), PermClass::FourCycle.reference(), 3).unwrap();
    let d: IntPoly = det_poly(&matrix_polynomial(&t));
    let prod = circulant_det_over_cyc24(&t);
    assert_eq!(prod.iter().map(|c| c.as_integer().unwrap()).collect::<Vec<_>>(), d.coeffs());
}
