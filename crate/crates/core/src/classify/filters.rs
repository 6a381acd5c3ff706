use serde::{Deserialize, Serialize};

use crate::cycpoly::{factor_into_cyclotomics, root1_multiplicity, CycFactorization, IntPoly};
use crate::typealg::{
    det_poly, hilbert_prefix, is_normal, matrix_polynomial, orbit_quotient_strongly_connected,
    spectral_radius_equals, strongly_connected, NegativeEntry, QuiverType,
};

/// Filters in pipeline order. The first three form stage "pre".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterKind {
    OrbitConnected,
    DetCyclotomic,
    Root1Multiplicity,
    StronglyConnected,
    SpectralRadius,
    HilbertNonnegative,
}

impl FilterKind {
    pub fn is_pre(self) -> bool {
        matches!(
            self,
            FilterKind::OrbitConnected | FilterKind::DetCyclotomic | FilterKind::Root1Multiplicity
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterOutcome {
    pub filter: FilterKind,
    pub passed: bool,
    pub evidence: String,
}

/// Every quantity the filters look at, computed once per type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub det: IntPoly,
    pub factorization: Option<CycFactorization>,
    pub root1: u32,
    pub orbit_connected: bool,
    pub strongly_connected: bool,
    pub normal: bool,
    pub spectral: Option<bool>,
    pub first_negative: Option<NegativeEntry>,
    pub hilbert_terms: usize,
}

pub const MIN_ROOT1_MULTIPLICITY: u32 = 3;

impl Evaluation {
    /// Cheap pre-stage only; returns `None` when the type fails it.
    pub fn pre(t: &QuiverType) -> Option<(IntPoly, CycFactorization, u32)> {
        if !orbit_quotient_strongly_connected(&t.m, &t.p) {
            return None;
        }
        let det = det_poly(&matrix_polynomial(t));
        let f = factor_into_cyclotomics(&det).ok()?;
        let m1 = f.multiplicity(1);
        (m1 >= MIN_ROOT1_MULTIPLICITY).then_some((det, f, m1))
    }

    pub fn full(t: &QuiverType, hilbert_terms: usize) -> Self {
        let det = det_poly(&matrix_polynomial(t));
        let factorization = factor_into_cyclotomics(&det).ok();
        let root1 = root1_multiplicity(&det).unwrap_or(0);
        let normal = is_normal(&t.m);
        let target = 6 - t.s as i64;
        Evaluation {
            factorization,
            root1,
            orbit_connected: orbit_quotient_strongly_connected(&t.m, &t.p),
            strongly_connected: strongly_connected(&t.m),
            normal,
            spectral: normal.then(|| spectral_radius_equals(&t.m, target).expect("normal")),
            first_negative: hilbert_prefix(t, hilbert_terms).first_negative,
            hilbert_terms,
            det,
        }
    }

    pub fn outcomes(&self) -> Vec<FilterOutcome> {
        let out = |filter, passed, evidence: String| FilterOutcome { filter, passed, evidence };
        vec![
            out(
                FilterKind::OrbitConnected,
                self.orbit_connected,
                if self.orbit_connected { "orbit quotient strongly connected" } else { "no arrows between some P-orbits" }
                    .into(),
            ),
            out(
                FilterKind::DetCyclotomic,
                self.factorization.is_some(),
                match &self.factorization {
                    Some(f) => format!("det = {f}"),
                    None => format!("det {} is not a cyclotomic product", self.det),
                },
            ),
            out(
                FilterKind::Root1Multiplicity,
                self.root1 >= MIN_ROOT1_MULTIPLICITY,
                format!("multiplicity at 1 = {}", self.root1),
            ),
            out(
                FilterKind::StronglyConnected,
                self.strongly_connected,
                if self.strongly_connected { "strongly connected" } else { "not strongly connected" }.into(),
            ),
            out(
                FilterKind::SpectralRadius,
                self.spectral != Some(false),
                match self.spectral {
                    None => "not normal; criterion not applicable".into(),
                    Some(true) => "normal, spectral radius 6-s".into(),
                    Some(false) => "normal, spectral radius differs from 6-s".into(),
                },
            ),
            out(
                FilterKind::HilbertNonnegative,
                self.first_negative.is_none(),
                match self.first_negative {
                    None => format!("no negative entry through degree {}", self.hilbert_terms),
                    Some(n) => format!(
                        "negative entry at degree {}, position ({}, {})",
                        n.degree,
                        n.row + 1,
                        n.col + 1
                    ),
                },
            ),
        ]
    }

    pub fn passes_pre(&self) -> bool {
        self.orbit_connected && self.factorization.is_some() && self.root1 >= MIN_ROOT1_MULTIPLICITY
    }

    pub fn passes_full(&self) -> bool {
        self.passes_pre()
            && self.strongly_connected
            && self.spectral != Some(false)
            && self.first_negative.is_none()
    }
}
