use std::collections::BTreeMap;
use std::fmt;

use super::cyc24::Cyc24;
use super::group::CycMatrix;
use super::RealizeError;

/// A homogeneous element of the free algebra k<x, y>: words over {x = 0, y = 1}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<Vec<u8>, Cyc24>,
}

impl FreeElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, word: Vec<u8>, coeff: Cyc24) {
        let entry = self.terms.entry(word.clone()).or_insert_with(Cyc24::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, Cyc24> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Cyc24) -> FreeElement {
        let mut out = FreeElement::new();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Parses one `coefficient word` line, e.g. `-1 yxxy`.
    pub fn parse_term(line: &str) -> Result<(Vec<u8>, Cyc24), String> {
        let mut parts = line.split_whitespace();
        let (Some(c), Some(w), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("expected 'coefficient word', got '{line}'"));
        };
        let coeff: Cyc24 = c.parse().map_err(|e: RealizeError| e.to_string())?;
        let word = w
            .chars()
            .map(|ch| match ch {
                'x' => Ok(0u8),
                'y' => Ok(1u8),
                _ => Err(format!("word letters must be x or y, got '{ch}'")),
            })
            .collect::<Result<Vec<u8>, String>>()?;
        Ok((word, coeff))
    }

    /// Applies a linear map letterwise: g(e_j) = Σ_i g[i][j] e_i with e_0 = x, e_1 = y.
    pub fn act(&self, g: &CycMatrix) -> FreeElement {
        assert_eq!(g.dim(), 2, "superpotentials live in two letters");
        let mut out = FreeElement::new();
        for (word, coeff) in &self.terms {
            let mut partial: Vec<(Vec<u8>, Cyc24)> = vec![(Vec::new(), coeff.clone())];
            for &letter in word {
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (w, c) in &partial {
                    for target in 0..2u8 {
                        let a = g.get(target as usize, letter as usize);
                        if !a.is_zero() {
                            let mut w2 = w.clone();
                            w2.push(target);
                            next.push((w2, c * a));
                        }
                    }
                }
                partial = next;
            }
            for (w, c) in partial {
                out.add_term(w, c);
            }
        }
        out
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word: String = w.iter().map(|&l| if l == 0 { 'x' } else { 'y' }).collect();
            write!(f, "{c}*{word}")?;
        }
        Ok(())
    }
}

pub fn hdet_of_linear_action(g: &CycMatrix) -> Cyc24 {
    g.det()
}

/// The scalar c with g(ω) = c·ω.
pub fn hdet_of_superpotential_action(omega: &FreeElement, g: &CycMatrix) -> Result<Cyc24, RealizeError> {
    let (w0, c0) = omega.terms.iter().next().ok_or(RealizeError::NotEigenvector)?;
    let image = omega.act(g);
    let ratio = &image.terms.get(w0).cloned().unwrap_or_else(Cyc24::zero) * &c0.inverse().expect("nonzero");
    if image == omega.scale(&ratio) {
        Ok(ratio)
    } else {
        Err(RealizeError::NotEigenvector)
    }
}
