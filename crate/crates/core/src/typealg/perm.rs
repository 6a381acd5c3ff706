use std::fmt;

use serde::{Deserialize, Serialize};

use super::IntMat;

/// Vertex permutation i -> images[i] (0-based). Its matrix has P[i][images[i]] = 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: [u8; 4],
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: [0, 1, 2, 3] }
    }

    pub fn from_images(images: [usize; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &j in &images {
            if j >= 4 || std::mem::replace(&mut seen[j], true) {
                return None;
            }
        }
        Some(Permutation { images: images.map(|j| j as u8) })
    }

    /// Builds from 0-based cycles. Panics on repeated or out-of-range vertices.
    pub fn from_cycles(cycles: &[&[usize]]) -> Self {
        let mut images = [0, 1, 2, 3];
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                images[v] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images).expect("valid cycles")
    }

    pub fn from_matrix(m: &IntMat) -> Option<Self> {
        let mut images = [0; 4];
        for (i, row) in m.iter().enumerate() {
            if row.iter().any(|&x| x != 0 && x != 1) || row.iter().sum::<i64>() != 1 {
                return None;
            }
            images[i] = row.iter().position(|&x| x == 1)?;
        }
        Self::from_images(images)
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> [usize; 4] {
        self.images.map(|j| j as usize)
    }

    pub fn matrix(&self) -> IntMat {
        let mut m = [[0; 4]; 4];
        for i in 0..4 {
            m[i][self.image(i)] = 1;
        }
        m
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0; 4];
        for i in 0..4 {
            images[self.image(i)] = i;
        }
        Self::from_images(images).unwrap()
    }

    /// The permutation whose matrix is `self.matrix() * other.matrix()`:
    /// first apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Self::from_images(std::array::from_fn(|i| other.image(self.image(i)))).unwrap()
    }

    /// Cycle lengths in descending order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// 0-based cycles including fixed points, each starting at its least vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.image(start);
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.image(v);
            }
            out.push(cycle);
        }
        out
    }

    pub fn sign(&self) -> i64 {
        self.cycles()
            .iter()
            .map(|c| if c.len() % 2 == 0 { -1 } else { 1 })
            .product()
    }
}

/// `cycles:(1 2 3 4)` style, 1-based, fixed points omitted; identity is `cycles:()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("cycles:")?;
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_matrix_matches_reference() {
        let p = Permutation::from_cycles(&[&[0, 1, 2, 3]]);
        assert_eq!(p.matrix(), [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]);
        assert_eq!(p.to_string(), "cycles:(1 2 3 4)");
        assert_eq!(p.sign(), -1);
    }

    #[test]
    fn then_is_matrix_product() {
        let a = Permutation::from_cycles(&[&[0, 2, 1]]);
        let b = Permutation::from_cycles(&[&[0, 1], &[2, 3]]);
        let prod = super::super::mat_mul(&a.matrix(), &b.matrix());
        assert_eq!(a.then(&b).matrix(), prod);
        assert_eq!(a.then(&a.inverse()), Permutation::identity());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::from_cycles(&[&[0, 2, 1]]).cycle_type(), vec![3, 1]);
        assert_eq!(Permutation::identity().to_string(), "cycles:()");
        assert!(Permutation::from_images([0, 0, 1, 2]).is_none());
    }
}
