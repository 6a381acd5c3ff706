use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::cyc24::Cyc24;
use super::RealizeError;

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Square matrix over Q(ζ24), row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    n: usize,
    data: Vec<Cyc24>,
}

impl CycMatrix {
    pub fn from_rows(rows: Vec<Vec<Cyc24>>) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(CycMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Cyc24::one()).collect())
    }

    pub fn diagonal(d: Vec<Cyc24>) -> Self {
        let n = d.len();
        let mut data = vec![Cyc24::zero(); n * n];
        for (k, x) in d.into_iter().enumerate() {
            data[k * n + k] = x;
        }
        CycMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyc24 {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut data = vec![Cyc24::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        data[i * n + j] = &data[i * n + j] + &(a * b);
                    }
                }
            }
        }
        CycMatrix { n, data }
    }

    pub fn trace(&self) -> Cyc24 {
        (0..self.n).fold(Cyc24::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Determinant by Laplace expansion along the first row; dimensions here are tiny.
    pub fn det(&self) -> Cyc24 {
        fn rec(m: &CycMatrix, rows: &[usize], cols: &[usize]) -> Cyc24 {
            if rows.is_empty() {
                return Cyc24::one();
            }
            let mut acc = Cyc24::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(rows[0], c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = a * &rec(m, &rows[1..], &rest);
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let idx: Vec<usize> = (0..self.n).collect();
        rec(self, &idx, &idx)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[CycMatrix]) -> CycMatrix {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut data = vec![Cyc24::zero(); n * n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    data[(off + i) * n + off + j] = b.get(i, j).clone();
                }
            }
            off += b.n;
        }
        CycMatrix { n, data }
    }

    /// The square block starting at `off` of size `len`.
    pub fn block(&self, off: usize, len: usize) -> CycMatrix {
        let mut data = Vec::with_capacity(len * len);
        for i in 0..len {
            for j in 0..len {
                data.push(self.get(off + i, off + j).clone());
            }
        }
        CycMatrix { n: len, data }
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, " ; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub generators: Vec<CycMatrix>,
    /// Element 0 is the identity.
    pub elements: Vec<CycMatrix>,
    pub inverses: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    /// `class_of[g]` indexes `classes`.
    pub class_of: Vec<usize>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &CycMatrix) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }
}

/// Breadth-first closure of `generators` under right multiplication. For a finite
/// group this is closed under inverses as well.
pub fn group_closure(generators: &[CycMatrix], cap: usize) -> Result<MatrixGroup, RealizeError> {
    assert!(!generators.is_empty(), "at least one generator");
    let n = generators[0].dim();
    let mut elements = vec![CycMatrix::identity(n)];
    let mut index: HashMap<CycMatrix, usize> = HashMap::from([(elements[0].clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        for h in generators {
            let prod = elements[g].mul(h);
            if !index.contains_key(&prod) {
                if elements.len() >= cap {
                    return Err(RealizeError::ClosureCapExceeded { cap });
                }
                index.insert(prod.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
    }

    let order = elements.len();
    let identity = &elements[0];
    let mut inverses = vec![usize::MAX; order];
    for g in 0..order {
        if inverses[g] != usize::MAX {
            continue;
        }
        // walk powers of g until the identity; the previous power is the inverse
        let mut prev = 0;
        let mut cur = g;
        while &elements[cur] != identity {
            prev = cur;
            cur = index[&elements[cur].mul(&elements[g])];
        }
        inverses[g] = prev;
        inverses[prev] = g;
    }

    let mut class_of = vec![usize::MAX; order];
    let mut classes = Vec::new();
    for x in 0..order {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for g in 0..order {
            let conj = elements[g].mul(&elements[x]).mul(&elements[inverses[g]]);
            let c = index[&conj];
            if class_of[c] == usize::MAX {
                class_of[c] = id;
                members.push(c);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    Ok(MatrixGroup { generators: generators.to_vec(), elements, inverses, classes, class_of })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[Cyc24]) -> CycMatrix {
        CycMatrix::diagonal(v.to_vec())
    }

    #[test]
    fn cyclic_scalar_group() {
        let i = Cyc24::i();
        let g = group_closure(&[diag(&[i.clone(), i.clone(), i])], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.classes.len(), 4);
    }

    #[test]
    fn klein_four() {
        let (p, m) = (Cyc24::one(), -Cyc24::one());
        let a = diag(&[m.clone(), p.clone(), m.clone()]);
        let b = diag(&[p, m.clone(), m]);
        let g = group_closure(&[a, b], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.classes.iter().all(|c| c.len() == 1));
        assert!((0..4).all(|x| g.inverses[x] == x));
    }

    #[test]
    fn nonabelian_classes_and_cap() {
        // the quaternion-like group generated by diag(i,-i) and a rotation
        let z = Cyc24::zero();
        let one = Cyc24::one();
        let a = diag(&[Cyc24::i(), -Cyc24::i()]);
        let b = CycMatrix::from_rows(vec![vec![z.clone(), one.clone()], vec![-one, z]]).unwrap();
        let g = group_closure(&[a.clone(), b.clone()], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.classes.len(), 5);
        assert_eq!(g.classes.iter().map(Vec::len).sum::<usize>(), 8);
        assert!(matches!(group_closure(&[a, b], 5), Err(RealizeError::ClosureCapExceeded { cap: 5 })));
    }

    #[test]
    fn det_and_sum() {
        let a = CycMatrix::from_rows(vec![
            vec![Cyc24::from_i64(1), Cyc24::from_i64(2)],
            vec![Cyc24::from_i64(3), Cyc24::from_i64(4)],
        ])
        .unwrap();
        assert_eq!(a.det(), Cyc24::from_i64(-2));
        let s = CycMatrix::direct_sum(&[a.clone(), CycMatrix::identity(1)]);
        assert_eq!(s.det(), Cyc24::from_i64(-2));
        assert_eq!(s.block(0, 2), a);
    }
}
