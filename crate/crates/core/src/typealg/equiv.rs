use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{IntMat, Permutation, QuiverType};

/// All 24 vertex relabelings.
pub fn all_relabelings() -> &'static [Permutation] {
    static ALL: OnceLock<Vec<Permutation>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if let Some(p) = Permutation::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    })
}

fn relabel_matrix(m: &IntMat, sigma: &Permutation) -> IntMat {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[sigma.image(i)][sigma.image(j)] = m[i][j];
        }
    }
    out
}

/// Moves vertex i to sigma(i): the result is (S M S^T, S P S^T) for S = sigma^-1's matrix.
pub fn relabel(t: &QuiverType, sigma: &Permutation) -> QuiverType {
    let p = relabel_matrix(&t.p_matrix(), sigma);
    QuiverType {
        m: relabel_matrix(&t.m, sigma),
        p: Permutation::from_matrix(&p).expect("conjugate of a permutation"),
        s: t.s,
    }
}

/// Lexicographically least (M, P) over all relabelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub m: IntMat,
    pub p: [usize; 4],
    pub s: u32,
}

impl CanonicalKey {
    pub fn to_type(&self) -> QuiverType {
        QuiverType {
            m: self.m,
            p: Permutation::from_images(self.p).expect("stored permutation"),
            s: self.s,
        }
    }
}

pub fn canonical_type(t: &QuiverType) -> CanonicalKey {
    all_relabelings()
        .iter()
        .map(|sigma| {
            let r = relabel(t, sigma);
            CanonicalKey { m: r.m, p: r.p.images(), s: r.s }
        })
        .min()
        .expect("nonempty")
}

pub fn types_equivalent(a: &QuiverType, b: &QuiverType) -> bool {
    a.s == b.s && canonical_type(a) == canonical_type(b)
}

/// Lexicographically least relabeling of M alone (quiver isomorphism class).
pub fn canonical_adjacency(m: &IntMat) -> IntMat {
    all_relabelings()
        .iter()
        .map(|sigma| relabel_matrix(m, sigma))
        .min()
        .expect("nonempty")
}

pub fn quivers_isomorphic(a: &IntMat, b: &IntMat) -> bool {
    canonical_adjacency(a) == canonical_adjacency(b)
}
