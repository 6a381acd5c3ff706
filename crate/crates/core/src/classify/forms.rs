use serde::{Deserialize, Serialize};

use crate::typealg::{IntMat, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PermClass {
    #[serde(rename = "four")]
    FourCycle,
    #[serde(rename = "three")]
    ThreeCycle,
    #[serde(rename = "two-two")]
    TwoTwo,
}

impl PermClass {
    pub const ALL: [PermClass; 3] = [PermClass::FourCycle, PermClass::ThreeCycle, PermClass::TwoTwo];

    /// The fixed representative P of the class.
    pub fn reference(self) -> Permutation {
        match self {
            PermClass::FourCycle => Permutation::from_cycles(&[&[0, 1, 2, 3]]),
            PermClass::ThreeCycle => Permutation::from_cycles(&[&[0, 2, 1]]),
            PermClass::TwoTwo => Permutation::from_cycles(&[&[0, 1], &[2, 3]]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PermClass::FourCycle => "four",
            PermClass::ThreeCycle => "three",
            PermClass::TwoTwo => "two-two",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn of(p: &Permutation) -> Option<Self> {
        match p.cycle_type().as_slice() {
            [4] => Some(PermClass::FourCycle),
            [3, 1] => Some(PermClass::ThreeCycle),
            [2, 2] => Some(PermClass::TwoTwo),
            _ => None,
        }
    }
}

/// Rows (w,x,y,v), (y,w,x,v), (x,y,w,v), (u,u,u,r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreeCycleForm {
    pub w: i64,
    pub x: i64,
    pub y: i64,
    pub u: i64,
    pub v: i64,
    pub r: i64,
}

impl ThreeCycleForm {
    pub fn matrix(&self) -> IntMat {
        let ThreeCycleForm { w, x, y, u, v, r } = *self;
        [[w, x, y, v], [y, w, x, v], [x, y, w, v], [u, u, u, r]]
    }
}

/// Rows (a,b,c,d), (b,a,d,c), (e,f,g,h), (f,e,h,g).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoTwoForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub g: i64,
    pub h: i64,
}

impl TwoTwoForm {
    pub fn from_array([a, b, c, d, e, f, g, h]: [i64; 8]) -> Self {
        TwoTwoForm { a, b, c, d, e, f, g, h }
    }

    pub fn from_matrix(m: &IntMat) -> Option<Self> {
        let form = Self::from_array([m[0][0], m[0][1], m[0][2], m[0][3], m[2][0], m[2][1], m[2][2], m[2][3]]);
        (form.matrix() == *m).then_some(form)
    }

    pub fn matrix(&self) -> IntMat {
        let TwoTwoForm { a, b, c, d, e, f, g, h } = *self;
        [[a, b, c, d], [b, a, d, c], [e, f, g, h], [f, e, h, g]]
    }

    pub fn lambda(&self) -> i64 {
        2 * (self.a + self.g)
    }

    pub fn beta(&self) -> i64 {
        self.a * self.a + self.g * self.g + 4 * self.a * self.g
    }

    pub fn gamma(&self) -> i64 {
        let TwoTwoForm { b, c, d, e, f, h, .. } = *self;
        (b - 1) * (b - 1) + (h - 1) * (h - 1) + 2 * c * e + 2 * d * f - 2
    }
}
