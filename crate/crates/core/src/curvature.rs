//! Combinatorial curvature and light vertices.
//!
//! The curvature of a vertex is `1 - deg(v)/2 + sum 1/deg(f)` over the
//! faces at its corners. A vertex is light when its sorted face-degree type
//! matches a row of [`LIGHT_TABLE`]; every large enough polyhedral map on a
//! surface of non-positive Euler characteristic has one.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{CurvatureError, MapError};
use crate::rational::{int, rat, Rational};
use crate::surface_map::MapTopology;
use crate::validity::ValidityReport;

/// Exact curvature at `v`, counting a face once per corner.
pub fn curvature(top: &MapTopology, v: usize) -> Result<Rational, MapError> {
    let degrees = top.vertex_type(v)?;
    Ok(curvature_of_type(&degrees))
}

/// Curvature of a vertex whose corners see faces of the given degrees.
pub fn curvature_of_type(face_degrees: &[usize]) -> Rational {
    let mut phi = Rational::one() - rat(face_degrees.len() as i64, 2);
    for &d in face_degrees {
        phi += rat(1, d as i64);
    }
    phi
}

/// Sum of the curvature over all vertices; equals the Euler characteristic.
pub fn gauss_bonnet_sum(top: &MapTopology) -> Rational {
    (0..top.num_vertices())
        .map(|v| curvature(top, v).expect("vertex in range"))
        .fold(Rational::zero(), |acc, c| acc + c)
}

/// Upper bound used by the table rows written `<= 2518`.
pub const LIGHT_BOUND: usize = 2518;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeConstraint {
    Exact(usize),
    AtMost(usize),
    Any,
}

impl DegreeConstraint {
    fn admits(self, degree: usize) -> bool {
        match self {
            DegreeConstraint::Exact(k) => degree == k,
            DegreeConstraint::AtMost(k) => degree <= k,
            DegreeConstraint::Any => true,
        }
    }
}

/// One row of the light-vertex table, matched positionally against a
/// sorted vertex type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LightPattern {
    pub entries: &'static [DegreeConstraint],
    /// Marks rows known to be tight.
    pub dagger: bool,
}

impl LightPattern {
    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    /// `sorted_type` must be ascending.
    pub fn matches(&self, sorted_type: &[usize]) -> bool {
        sorted_type.len() == self.entries.len()
            && self
                .entries
                .iter()
                .zip(sorted_type)
                .all(|(c, &d)| c.admits(d))
    }
}

impl fmt::Display for LightPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match c {
                DegreeConstraint::Exact(k) => write!(f, "{k}")?,
                DegreeConstraint::AtMost(k) => write!(f, "≤{k}")?,
                DegreeConstraint::Any => f.write_str("∀")?,
            }
        }
        f.write_str(")")?;
        if self.dagger {
            f.write_str("†")?;
        }
        Ok(())
    }
}

use DegreeConstraint::{Any, AtMost, Exact};

const fn row(entries: &'static [DegreeConstraint], dagger: bool) -> LightPattern {
    LightPattern { entries, dagger }
}

const B: DegreeConstraint = AtMost(LIGHT_BOUND);

/// The light-vertex table, in table order.
pub const LIGHT_TABLE: [LightPattern; 32] = [
    // degree 3
    row(&[Exact(3), Exact(3), Any], true),
    row(&[Exact(3), Exact(4), Any], true),
    row(&[Exact(3), Exact(5), Any], true),
    row(&[Exact(3), Exact(6), B], false),
    row(&[Exact(3), Exact(7), B], false),
    row(&[Exact(3), Exact(8), B], false),
    row(&[Exact(3), Exact(9), B], false),
    row(&[Exact(3), Exact(10), B], false),
    row(&[Exact(3), Exact(11), B], false),
    row(&[Exact(3), Exact(12), B], false),
    row(&[Exact(4), Exact(4), Any], true),
    row(&[Exact(4), Exact(5), B], false),
    row(&[Exact(4), Exact(6), B], false),
    row(&[Exact(4), Exact(7), B], false),
    row(&[Exact(4), Exact(8), B], false),
    row(&[Exact(5), Exact(5), B], false),
    row(&[Exact(5), Exact(6), B], false),
    row(&[Exact(6), Exact(6), Exact(6)], true),
    // degree 4
    row(&[Exact(3), Exact(3), Exact(3), Any], true),
    row(&[Exact(3), Exact(3), Exact(4), B], false),
    row(&[Exact(3), Exact(3), Exact(5), B], false),
    row(&[Exact(3), Exact(3), Exact(6), Exact(6)], true),
    row(&[Exact(3), Exact(4), Exact(4), Exact(4)], true),
    row(&[Exact(3), Exact(4), Exact(4), Exact(5)], true),
    row(&[Exact(3), Exact(4), Exact(4), Exact(6)], true),
    row(&[Exact(4), Exact(4), Exact(4), Exact(4)], true),
    // degree 5
    row(&[Exact(3), Exact(3), Exact(3), Exact(3), Exact(3)], true),
    row(&[Exact(3), Exact(3), Exact(3), Exact(3), Exact(4)], true),
    row(&[Exact(3), Exact(3), Exact(3), Exact(3), Exact(5)], true),
    row(&[Exact(3), Exact(3), Exact(3), Exact(3), Exact(6)], true),
    row(&[Exact(3), Exact(3), Exact(3), Exact(4), Exact(4)], true),
    // degree 6
    row(
        &[Exact(3), Exact(3), Exact(3), Exact(3), Exact(3), Exact(3)],
        true,
    ),
];

/// First table row matching the vertex type, if any. The input need not be
/// sorted.
pub fn match_light(vertex_type: &[usize]) -> Option<(usize, &'static LightPattern)> {
    if !(3..=6).contains(&vertex_type.len()) {
        return None;
    }
    let mut sorted = vertex_type.to_vec();
    sorted.sort_unstable();
    LIGHT_TABLE
        .iter()
        .enumerate()
        .find(|(_, p)| p.matches(&sorted))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LightVertex {
    pub vertex: usize,
    pub vertex_type: Vec<usize>,
    pub row: usize,
    pub pattern: &'static LightPattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanVerdict {
    LightFound,
    /// Hypotheses hold but no light vertex exists. Must never happen.
    CounterexampleCandidate,
    HypothesesNotMet,
}

impl fmt::Display for ScanVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanVerdict::LightFound => "light-found",
            ScanVerdict::CounterexampleCandidate => "counterexample-candidate",
            ScanVerdict::HypothesesNotMet => "hypotheses-not-met",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub simple_polyhedral: bool,
    pub chi_nonpositive: bool,
    /// `V > 126 |chi|`.
    pub enough_vertices: bool,
    pub light: Vec<LightVertex>,
    pub verdict: ScanVerdict,
}

impl ScanReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.simple_polyhedral && self.chi_nonpositive && self.enough_vertices
    }
}

/// Lists the light vertices and decides whether the light-vertex guarantee is met.
pub fn scan_light(top: &MapTopology, validity: &ValidityReport) -> ScanReport {
    let chi = top.euler_characteristic();
    let simple_polyhedral = validity.is_simple && validity.polyhedral;
    let chi_nonpositive = chi <= 0;
    let enough_vertices = top.num_vertices() as i64 > 126 * chi.abs();
    let light: Vec<LightVertex> = (0..top.num_vertices())
        .filter_map(|v| {
            let vertex_type = top.vertex_type(v).expect("vertex in range");
            match_light(&vertex_type).map(|(row, pattern)| LightVertex {
                vertex: v,
                vertex_type,
                row,
                pattern,
            })
        })
        .collect();
    let hypotheses = simple_polyhedral && chi_nonpositive && enough_vertices;
    let verdict = match (hypotheses, light.is_empty()) {
        (false, _) => ScanVerdict::HypothesesNotMet,
        (true, false) => ScanVerdict::LightFound,
        (true, true) => ScanVerdict::CounterexampleCandidate,
    };
    ScanReport {
        simple_polyhedral,
        chi_nonpositive,
        enough_vertices,
        light,
        verdict,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurvatureBound {
    /// Largest last degree keeping the curvature non-negative.
    Max(usize),
    /// Every last degree keeps the curvature non-negative.
    Unbounded,
    /// No last degree at least `max(prefix)` does.
    Infeasible,
}

/// Largest `k` with `curvature(prefix..., k) >= 0`.
///
/// With `n = prefix.len() + 1` this is the largest `k` such that
/// `1/k >= (n/2 - 1) - sum 1/a_i`.
pub fn curvature_bound(prefix: &[usize]) -> Result<CurvatureBound, CurvatureError> {
    if prefix.is_empty() {
        return Err(CurvatureError::EmptyPrefix);
    }
    if prefix.contains(&0) {
        return Err(CurvatureError::ZeroDegree);
    }
    let n = prefix.len() as i64 + 1;
    let mut deficit = rat(n, 2) - int(1);
    for &a in prefix {
        deficit -= rat(1, a as i64);
    }
    if !deficit.is_positive() {
        return Ok(CurvatureBound::Unbounded);
    }
    let k = deficit.recip().floor().to_integer();
    let k = k.to_usize().expect("bound fits in usize");
    let floor = *prefix.iter().max().unwrap();
    Ok(if k >= floor && k > 0 {
        CurvatureBound::Max(k)
    } else {
        CurvatureBound::Infeasible
    })
}
