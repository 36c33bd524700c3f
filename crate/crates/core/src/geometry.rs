//! Perimeter of a connecting cycle on concentric circles and its derivatives.
//!
//! The cycle visits circle `0, 1, ..., n-1` in order and closes back to `0`.
//! All circles are centred at the origin. Vertex `j` sits at polar angle
//! `alpha_j` on circle `j`; the last vertex is pinned at angle zero, so a
//! configuration carries `n - 1` free angles (the reduced torus).
//!
//! Side `j` joins vertex `j` to vertex `j + 1 (mod n)` and has length
//! `l_j = sqrt(r_j^2 + r_{j+1}^2 - 2 r_j r_{j+1} cos(theta_j))` with
//! `theta_j = alpha_{j+1} - alpha_j`. Everything below is expressed through
//! the per-side first and second derivatives of `l_j` with respect to `theta_j`.

use std::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gradient norm below which a configuration counts as stationary.
pub const STATIONARITY_TOL: f64 = 1e-10;
/// Residual threshold for collinearity / bisection tests.
pub const CLASSIFICATION_TOL: f64 = 1e-8;
/// Smallest |eigenvalue| (relative to the largest radius) of a non-degenerate critical point.
pub const DEGENERACY_TOL: f64 = 1e-8;

const GENERIC_GAP: f64 = 1e-12;

/// Reduce an angle into `[0, 2pi)`.
pub fn wrap_angle(x: f64) -> f64 {
    let w = x.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Signed difference reduced into `[-pi, pi)`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    (a - b + PI).rem_euclid(TAU) - PI
}

/// Radii of the circles in the order the cycle visits them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Radii(Vec<f64>);

impl Radii {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::TooFewCircles(values.len()));
        }
        for (index, &value) in values.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidRadius { index, value });
            }
        }
        Ok(Radii(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    /// True when all radii are pairwise distinct.
    pub fn is_generic(&self) -> bool {
        for (i, &a) in self.0.iter().enumerate() {
            for &b in &self.0[i + 1..] {
                if (a - b).abs() <= GENERIC_GAP * a.max(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Copy with radius `index` replaced.
    pub fn with_value(&self, index: usize, value: f64) -> Result<Radii> {
        let mut values = self.0.clone();
        values[index] = value;
        Radii::new(values)
    }
}

impl TryFrom<Vec<f64>> for Radii {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Radii::new(values)
    }
}

impl From<Radii> for Vec<f64> {
    fn from(r: Radii) -> Self {
        r.0
    }
}

/// Polar angles of the first `n - 1` vertices; the last vertex is at angle 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<f64>", into = "Vec<f64>")]
pub struct ReducedConfiguration {
    angles: Vec<f64>,
}

impl ReducedConfiguration {
    /// Builds a configuration, reducing every angle into `[0, 2pi)`.
    pub fn new(angles: Vec<f64>) -> Self {
        ReducedConfiguration {
            angles: angles.into_iter().map(wrap_angle).collect(),
        }
    }

    /// Configuration from a full list of `n` vertex angles, rotated so the
    /// last vertex sits at angle zero.
    pub fn from_full(full: &[f64]) -> Self {
        let pin = full[full.len() - 1];
        ReducedConfiguration::new(full[..full.len() - 1].iter().map(|a| a - pin).collect())
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn dim(&self) -> usize {
        self.angles.len()
    }

    /// All `n` vertex angles including the pinned zero.
    pub fn full_angles(&self) -> Vec<f64> {
        let mut full = self.angles.clone();
        full.push(0.0);
        full
    }

    /// Image under the reflection in the x-axis.
    pub fn mirror(&self) -> Self {
        ReducedConfiguration::new(self.angles.iter().map(|a| -a).collect())
    }

    /// Max-norm distance on the torus.
    pub fn torus_distance(&self, other: &ReducedConfiguration) -> f64 {
        self.angles
            .iter()
            .zip(&other.angles)
            .map(|(a, b)| angle_diff(*a, *b).abs())
            .fold(0.0, f64::max)
    }

    /// Configuration moved by `step` (componentwise, modulo 2pi).
    pub fn offset(&self, step: &[f64]) -> Self {
        ReducedConfiguration::new(self.angles.iter().zip(step).map(|(a, s)| a + s).collect())
    }

    fn check(&self, radii: &Radii) -> Result<()> {
        if self.angles.len() + 1 != radii.len() {
            return Err(Error::DimensionMismatch {
                expected: radii.len() - 1,
                got: self.angles.len(),
            });
        }
        if let Some(index) = self.angles.iter().position(|a| !a.is_finite()) {
            return Err(Error::NonFiniteAngle { index });
        }
        Ok(())
    }
}

impl From<Vec<f64>> for ReducedConfiguration {
    fn from(angles: Vec<f64>) -> Self {
        ReducedConfiguration::new(angles)
    }
}

impl From<ReducedConfiguration> for Vec<f64> {
    fn from(c: ReducedConfiguration) -> Self {
        c.angles
    }
}

/// First two derivatives of side `j`'s length in the side's angular gap.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SideTerm {
    /// `r_j r_{j+1} sin(theta) / l`, signed distance from the origin to the side's line.
    pub slope: f64,
    /// `d^2 l / d theta^2`.
    pub curvature: f64,
}

fn side_lengths(radii: &Radii, full: &[f64]) -> Vec<f64> {
    let n = radii.len();
    (0..n)
        .map(|j| {
            let k = (j + 1) % n;
            let (a, b) = (radii.get(j), radii.get(k));
            let theta = full[k] - full[j];
            // (a - b)^2 + 2ab(1 - cos) loses less precision than the textbook form
            let sq = (a - b).powi(2) + 4.0 * a * b * (0.5 * theta).sin().powi(2);
            sq.max(0.0).sqrt()
        })
        .collect()
}

pub(crate) fn side_terms(radii: &Radii, config: &ReducedConfiguration) -> Result<Vec<SideTerm>> {
    config.check(radii)?;
    let full = config.full_angles();
    let lengths = side_lengths(radii, &full);
    let n = radii.len();
    let scale = radii.max();
    (0..n)
        .map(|j| {
            let k = (j + 1) % n;
            let length = lengths[j];
            if length <= 1e-14 * scale {
                return Err(Error::SingularConfiguration { side: j });
            }
            let p = radii.get(j) * radii.get(k);
            let theta = full[k] - full[j];
            let slope = p * theta.sin() / length;
            let curvature = (p * theta.cos() - slope * slope) / length;
            Ok(SideTerm {
                slope,
                curvature,
            })
        })
        .collect()
}

/// Total length of the cycle.
pub fn perimeter(radii: &Radii, config: &ReducedConfiguration) -> Result<f64> {
    config.check(radii)?;
    Ok(side_lengths(radii, &config.full_angles()).iter().sum())
}

/// Gradient with respect to all `n` vertex angles. Its components sum to zero.
pub fn full_gradient(radii: &Radii, config: &ReducedConfiguration) -> Result<Vec<f64>> {
    let terms = side_terms(radii, config)?;
    let n = terms.len();
    Ok((0..n)
        .map(|j| terms[(j + n - 1) % n].slope - terms[j].slope)
        .collect())
}

/// Gradient on the reduced torus (the pinned last component dropped).
pub fn gradient(radii: &Radii, config: &ReducedConfiguration) -> Result<Vec<f64>> {
    let mut g = full_gradient(radii, config)?;
    g.pop();
    Ok(g)
}

pub fn gradient_norm(radii: &Radii, config: &ReducedConfiguration) -> Result<f64> {
    Ok(gradient(radii, config)?
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt())
}

pub(crate) fn hessian_from_terms(terms: &[SideTerm]) -> DMatrix<f64> {
    let n = terms.len();
    let mut h = DMatrix::zeros(n, n);
    for (j, t) in terms.iter().enumerate() {
        let k = (j + 1) % n;
        let c = t.curvature;
        h[(j, j)] += c;
        h[(k, k)] += c;
        h[(j, k)] -= c;
        h[(k, j)] -= c;
    }
    h
}

/// Cyclic-tridiagonal Hessian over all `n` vertex angles; annihilates the all-ones vector.
pub fn full_hessian(radii: &Radii, config: &ReducedConfiguration) -> Result<DMatrix<f64>> {
    Ok(hessian_from_terms(&side_terms(radii, config)?))
}

/// Hessian on the reduced torus: the full Hessian without its last row and column.
pub fn hessian(radii: &Radii, config: &ReducedConfiguration) -> Result<DMatrix<f64>> {
    let h = full_hessian(radii, config)?;
    let m = radii.len() - 1;
    Ok(h.view((0, 0), (m, m)).into_owned())
}

/// Reduced gradient and Hessian from a single pass over the sides.
pub(crate) fn gradient_and_hessian(
    radii: &Radii,
    config: &ReducedConfiguration,
) -> Result<(DVector<f64>, DMatrix<f64>)> {
    let terms = side_terms(radii, config)?;
    let n = terms.len();
    let g = DVector::from_fn(n - 1, |j, _| terms[(j + n - 1) % n].slope - terms[j].slope);
    let h = hessian_from_terms(&terms).view((0, 0), (n - 1, n - 1)).into_owned();
    Ok((g, h))
}

pub(crate) fn gradient_vector(radii: &Radii, config: &ReducedConfiguration) -> Result<DVector<f64>> {
    Ok(DVector::from_vec(gradient(radii, config)?))
}

/// Distances from the common centre to the lines carrying each side.
///
/// At a stationary cycle these all agree and equal the radius of the
/// tangential circle (zero for parades).
pub fn tangential_distances(radii: &Radii, config: &ReducedConfiguration) -> Result<Vec<f64>> {
    Ok(side_terms(radii, config)?
        .iter()
        .map(|t| t.slope.abs())
        .collect())
}

/// The polygon itself: vertices in the plane and side lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub vertices: Vec<[f64; 2]>,
    pub side_lengths: Vec<f64>,
}

impl Circuit {
    pub fn new(radii: &Radii, config: &ReducedConfiguration) -> Result<Self> {
        config.check(radii)?;
        let full = config.full_angles();
        let vertices = radii
            .as_slice()
            .iter()
            .zip(&full)
            .map(|(r, a)| [r * a.cos(), r * a.sin()])
            .collect();
        let side_lengths = side_lengths(radii, &full);
        Ok(Circuit {
            vertices,
            side_lengths,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn scale(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| p[0].hypot(p[1]))
            .fold(0.0, f64::max)
    }

    /// Normalised cross product of consecutive sides at each vertex (sine of the turning angle).
    pub fn turns(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|j| {
                let prev = self.vertices[(j + n - 1) % n];
                let cur = self.vertices[j];
                let next = self.vertices[(j + 1) % n];
                let a = sub(cur, prev);
                let b = sub(next, cur);
                let la = self.side_lengths[(j + n - 1) % n];
                let lb = self.side_lengths[j];
                if la == 0.0 || lb == 0.0 {
                    0.0
                } else {
                    cross(a, b) / (la * lb)
                }
            })
            .collect()
    }

    /// Twice the signed area (shoelace).
    pub fn signed_area2(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|j| cross(self.vertices[j], self.vertices[(j + 1) % n]))
            .sum()
    }

    /// True if two non-adjacent sides cross properly.
    pub fn self_intersects(&self, tol: f64) -> bool {
        let n = self.len();
        let eps = tol * self.scale().powi(2);
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let (c, d) = (self.vertices[j], self.vertices[(j + 1) % n]);
                let o1 = orient(a, b, c, eps);
                let o2 = orient(a, b, d, eps);
                let o3 = orient(c, d, a, eps);
                let o4 = orient(c, d, b, eps);
                if o1 * o2 < 0 && o3 * o4 < 0 {
                    return true;
                }
            }
        }
        false
    }
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2], eps: f64) -> i32 {
    let v = cross(sub(b, a), sub(c, a));
    if v > eps {
        1
    } else if v < -eps {
        -1
    } else {
        0
    }
}

/// How the two sides meeting at a vertex relate to the radius through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexKind {
    /// The radius bisects the angle between the two sides.
    Reflection,
    /// The two sides lie on one straight line.
    Refraction,
    NonStationary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VertexEvent {
    pub kind: VertexKind,
    pub residual: f64,
}

/// Tags every vertex (all `n`, including the pinned one) as a reflection,
/// refraction or non-stationary vertex.
///
/// The stationarity residual at vertex `j` is `|(u + v) . t|`, where `u`, `v`
/// are the unit directions towards the two neighbours and `t` is the unit
/// tangent of circle `j`; it equals `|dL/d alpha_j| / r_j`.
pub fn classify_vertices(
    radii: &Radii,
    config: &ReducedConfiguration,
    tol: f64,
) -> Result<Vec<VertexEvent>> {
    side_terms(radii, config)?;
    let circuit = Circuit::new(radii, config)?;
    let full = config.full_angles();
    let n = radii.len();
    Ok((0..n)
        .map(|j| {
            let cur = circuit.vertices[j];
            let prev = circuit.vertices[(j + n - 1) % n];
            let next = circuit.vertices[(j + 1) % n];
            let lp = circuit.side_lengths[(j + n - 1) % n];
            let ln = circuit.side_lengths[j];
            let u = sub(prev, cur);
            let u = [u[0] / lp, u[1] / lp];
            let v = sub(next, cur);
            let v = [v[0] / ln, v[1] / ln];
            let t = [-full[j].sin(), full[j].cos()];
            let bisection = ((u[0] + v[0]) * t[0] + (u[1] + v[1]) * t[1]).abs();
            let collinear = cross(u, v).abs();
            if bisection >= tol {
                VertexEvent {
                    kind: VertexKind::NonStationary,
                    residual: bisection,
                }
            } else if collinear < tol {
                VertexEvent {
                    kind: VertexKind::Refraction,
                    residual: bisection.max(collinear),
                }
            } else {
                VertexEvent {
                    kind: VertexKind::Reflection,
                    residual: bisection,
                }
            }
        })
        .collect())
}

/// Geometric shape class of a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Parade,
    Convex,
    Spear,
    PartiallyAligned,
    SelfIntersecting,
    Other,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::Parade => "parade",
            Shape::Convex => "convex",
            Shape::Spear => "spear",
            Shape::PartiallyAligned => "partially-aligned",
            Shape::SelfIntersecting => "self-intersecting",
            Shape::Other => "other",
        }
    }

    pub fn parse(s: &str) -> Option<Shape> {
        Some(match s {
            "parade" => Shape::Parade,
            "convex" => Shape::Convex,
            "spear" => Shape::Spear,
            "partially-aligned" => Shape::PartiallyAligned,
            "self-intersecting" => Shape::SelfIntersecting,
            "other" => Shape::Other,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn shape_of(circuit: &Circuit, tol: f64) -> Shape {
    let n = circuit.len();
    let scale = circuit.scale();
    if circuit.side_lengths.iter().any(|&l| l <= tol * scale) {
        return Shape::Other;
    }
    let pin = circuit.vertices[n - 1];
    let on_diameter = circuit.vertices.iter().all(|p| {
        let rp = p[0].hypot(p[1]) * pin[0].hypot(pin[1]);
        cross(*p, pin).abs() <= tol * rp
    });
    if on_diameter {
        return Shape::Parade;
    }
    let turns = circuit.turns();
    let aligned = turns.iter().filter(|t| t.abs() < tol).count();
    if aligned == n {
        return Shape::Other;
    }
    if aligned > 0 {
        return Shape::PartiallyAligned;
    }
    if circuit.self_intersects(tol) {
        return Shape::SelfIntersecting;
    }
    let positive = turns.iter().filter(|&&t| t > 0.0).count();
    if positive == n || positive == 0 {
        Shape::Convex
    } else {
        Shape::Spear
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn radii(v: &[f64]) -> Radii {
        Radii::new(v.to_vec()).unwrap()
    }

    fn cfg(v: &[f64]) -> ReducedConfiguration {
        ReducedConfiguration::new(v.to_vec())
    }

    #[test]
    fn rejects_bad_radii() {
        assert_eq!(Radii::new(vec![1.0, 2.0]), Err(Error::TooFewCircles(2)));
        assert!(matches!(
            Radii::new(vec![1.0, -2.0, 3.0]),
            Err(Error::InvalidRadius { index: 1, .. })
        ));
        assert!(Radii::new(vec![1.0, f64::NAN, 3.0]).is_err());
    }

    #[test]
    fn generic_flag() {
        assert!(radii(&[1.0, 2.0, 3.0]).is_generic());
        assert!(!radii(&[1.0, 1.0, 3.0]).is_generic());
        assert!(!radii(&[3.0, 1.0, 3.0, 4.6]).is_generic());
    }

    #[test]
    fn angles_are_wrapped() {
        let c = cfg(&[-0.5, 7.0]);
        assert!((c.angles()[0] - (TAU - 0.5)).abs() < 1e-15);
        assert!((c.angles()[1] - (7.0 - TAU)).abs() < 1e-15);
        assert!(cfg(&[0.1, 0.2]).torus_distance(&cfg(&[0.1 + TAU, 0.2])) < 1e-15);
        assert!(c.angles().iter().all(|a| (0.0..TAU).contains(a)));
    }

    #[test]
    fn dimension_mismatch() {
        let r = radii(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            perimeter(&r, &cfg(&[0.0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn shortest_parade_perimeter() {
        let r = radii(&[1.0, 2.0, 3.0]);
        assert!((perimeter(&r, &cfg(&[0.0, 0.0])).unwrap() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn equilateral_triangle() {
        let r = radii(&[1.0, 1.0, 1.0]);
        let c = cfg(&[2.0 * PI / 3.0, 4.0 * PI / 3.0]);
        assert!((perimeter(&r, &c).unwrap() - 3.0 * 3f64.sqrt()).abs() < 1e-14);
        for d in tangential_distances(&r, &c).unwrap() {
            assert!((d - 0.5).abs() < 1e-14);
        }
        let events = classify_vertices(&r, &c, CLASSIFICATION_TOL).unwrap();
        assert!(events.iter().all(|e| e.kind == VertexKind::Reflection));
        assert!(gradient_norm(&r, &c).unwrap() < 1e-14);
    }

    #[test]
    fn perimeter_matches_cartesian_distances() {
        let r = radii(&[1.0, 2.0, 3.0]);
        let c = cfg(&[0.7, 2.1]);
        let full = c.full_angles();
        let pts: Vec<(f64, f64)> = (0..3)
            .map(|j| (r.get(j) * full[j].cos(), r.get(j) * full[j].sin()))
            .collect();
        let direct: f64 = (0..3)
            .map(|j| {
                let (a, b) = (pts[j], pts[(j + 1) % 3]);
                (a.0 - b.0).hypot(a.1 - b.1)
            })
            .sum();
        assert!((perimeter(&r, &c).unwrap() - direct).abs() < 1e-13);
    }

    #[test]
    fn parade_gradient_vanishes() {
        let r = radii(&[1.0, 2.0, 3.0, 4.6]);
        for c in [[0.0, 0.0, 0.0], [PI, 0.0, PI], [PI, PI, PI], [0.0, PI, 0.0]] {
            let g = gradient(&r, &cfg(&c)).unwrap();
            // sin(pi) is 1.2e-16 in floating point, so zero only to rounding
            assert!(g.iter().all(|x| x.abs() < 1e-14), "{g:?}");
        }
    }

    #[test]
    fn shortest_parade_hessian() {
        let r = radii(&[1.0, 2.0, 3.0]);
        let h = hessian(&r, &cfg(&[0.0, 0.0])).unwrap();
        let expected = [[3.5, -2.0], [-2.0, 8.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((h[(i, j)] - expected[i][j]).abs() < 1e-12);
            }
        }
        assert!((h.determinant() - 24.0).abs() < 1e-10);
    }

    #[test]
    fn coincident_vertices_are_singular() {
        let r = radii(&[1.0, 1.0, 3.0]);
        let c = cfg(&[0.4, 0.4]);
        assert!(matches!(
            gradient(&r, &c),
            Err(Error::SingularConfiguration { side: 0 })
        ));
        assert!(hessian(&r, &c).is_err());
        // perimeter itself is still well defined
        assert!(perimeter(&r, &c).unwrap().is_finite());
    }

    #[test]
    fn random_configuration_is_not_stationary() {
        let r = radii(&[1.0, 2.0, 3.0]);
        let c = cfg(&[0.7, 2.1]);
        let events = classify_vertices(&r, &c, CLASSIFICATION_TOL).unwrap();
        assert!(events.iter().any(|e| e.kind == VertexKind::NonStationary));
    }

    #[test]
    fn parade_vertices_are_refractions() {
        let r = radii(&[1.0, 2.0, 3.0]);
        let c = cfg(&[0.0, 0.0]);
        let events = classify_vertices(&r, &c, CLASSIFICATION_TOL).unwrap();
        assert!(events.iter().all(|e| e.kind == VertexKind::Refraction));
        assert!(tangential_distances(&r, &c)
            .unwrap()
            .iter()
            .all(|&d| d == 0.0));
    }

    #[test]
    fn shapes() {
        let r3 = radii(&[1.0, 2.0, 3.0]);
        let parade = Circuit::new(&r3, &cfg(&[0.0, PI])).unwrap();
        assert_eq!(shape_of(&parade, CLASSIFICATION_TOL), Shape::Parade);

        let r4 = radii(&[1.0, 1.0, 1.0, 1.0]);
        let square = Circuit::new(&r4, &cfg(&[PI / 2.0, PI, 1.5 * PI])).unwrap();
        assert_eq!(shape_of(&square, CLASSIFICATION_TOL), Shape::Convex);

        let r5 = radii(&[1.0; 5]);
        let star = Circuit::new(&r5, &pentagram()).unwrap();
        assert_eq!(shape_of(&star, CLASSIFICATION_TOL), Shape::SelfIntersecting);

        let dart = Circuit::new(
            &radii(&[3.0, 1.0, 3.0, 4.6]),
            &cfg(&[2.4, PI, 2.0 * PI - 2.4]),
        )
        .unwrap();
        assert_eq!(shape_of(&dart, CLASSIFICATION_TOL), Shape::Spear);
    }

    fn pentagram() -> ReducedConfiguration {
        ReducedConfiguration::new((1..5).map(|j| j as f64 * 4.0 * PI / 5.0).collect())
    }

    #[test]
    fn mirror_symmetry() {
        let r = radii(&[1.0, 2.0, 3.0, 4.6]);
        let c = cfg(&[0.3, 1.9, 4.4]);
        let m = c.mirror();
        assert!((perimeter(&r, &c).unwrap() - perimeter(&r, &m).unwrap()).abs() < 1e-13);
        let g = gradient(&r, &c).unwrap();
        let gm = gradient(&r, &m).unwrap();
        for (a, b) in g.iter().zip(&gm) {
            assert!((a + b).abs() < 1e-13);
        }
    }
}
