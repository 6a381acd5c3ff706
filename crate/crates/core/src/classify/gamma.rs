use std::collections::HashMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cycpoly::{enumerate_cyclotomic_products, Palindromicity, ProductConstraint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaRow {
    pub a: i64,
    pub g: i64,
    pub gamma_max: i64,
}

/// gamma_max = beta - min c2 over palindromic cyclotomic products of degree 4s with
/// t-coefficient -2(a+g) and (1-t)^4 dividing, for g <= a, a+g <= 2s. Rows with
/// gamma_max < -2 are dropped.
pub fn gamma_max_table(s: u32) -> Vec<GammaRow> {
    assert!(s == 3 || s == 4, "gamma tables are defined for s in {{3, 4}}");
    let mut min_c2: HashMap<i64, Option<i64>> = HashMap::new();
    let mut rows = Vec::new();
    for a in 0..=2 * s as i64 {
        for g in 0..=a.min(2 * s as i64 - a) {
            let lambda = 2 * (a + g);
            let c2 = *min_c2.entry(lambda).or_insert_with(|| {
                enumerate_cyclotomic_products(&ProductConstraint {
                    total_degree: 4 * s,
                    t1_coeff: Some(-lambda),
                    min_root1_mult: 4,
                    palindromicity: Some(Palindromicity::Palindromic),
                })
                .iter()
                .map(|f| f.expand().coeff(2).to_i64().expect("small coefficient"))
                .min()
            });
            if let Some(c2) = c2 {
                let beta = a * a + g * g + 4 * a * g;
                let gamma_max = beta - c2;
                if gamma_max >= -2 {
                    rows.push(GammaRow { a, g, gamma_max });
                }
            }
        }
    }
    rows.sort();
    rows
}
