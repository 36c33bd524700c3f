//! Locating every critical point of the perimeter on the reduced torus.

mod newton;
mod oracle;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use crate::morse::morse_index;
pub use newton::{describe, newton_refine};
use newton::newton_solve;
pub use oracle::{brute_force_oracle, OracleReport};

use crate::closed_forms::{all_parade_signs, parade_config, partially_aligned_circuits, snellius_from_socle, socle_roots};
use crate::error::{Error, Result};
use crate::geometry::{Radii, ReducedConfiguration, Shape, VertexEvent};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverSettings {
    /// Grid nodes per angle for multistart seeding.
    pub grid_density: usize,
    /// Convergence when `|grad| < newton_tol * (1 + max r)`.
    pub newton_tol: f64,
    pub max_iter: usize,
    /// Max-norm torus distance under which two points are merged.
    pub dedupe_radius: f64,
    /// Smallest |eigenvalue| (relative to max r) of a non-degenerate point.
    pub degeneracy_threshold: f64,
    /// Cap on the number of grid seeds; the per-angle density is lowered for large `n`.
    pub max_grid_seeds: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            grid_density: 32,
            newton_tol: 1e-12,
            max_iter: 100,
            dedupe_radius: 1e-6,
            degeneracy_threshold: 1e-8,
            max_grid_seeds: 200_000,
        }
    }
}

impl SolverSettings {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if self.grid_density == 0 {
            return Err(Error::InvalidSettings("grid density must be positive".into()));
        }
        if self.max_iter == 0 || self.max_grid_seeds == 0 {
            return Err(Error::InvalidSettings("iteration and seed limits must be positive".into()));
        }
        if !positive(self.newton_tol) || !positive(self.dedupe_radius) || !positive(self.degeneracy_threshold) {
            return Err(Error::InvalidSettings("tolerances must be positive".into()));
        }
        Ok(())
    }

    /// Per-angle grid density actually used for `n` circles.
    pub fn effective_density(&self, n: usize) -> usize {
        let dims = (n - 1) as i32;
        let mut d = self.grid_density;
        while d > 1 && (d as f64).powi(dims) > self.max_grid_seeds as f64 {
            d -= 1;
        }
        d
    }
}

/// A stationary circuit with its classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub config: ReducedConfiguration,
    pub perimeter: f64,
    pub gradient_norm: f64,
    /// Number of negative Hessian eigenvalues; only meaningful when not degenerate.
    pub morse_index: usize,
    pub degenerate: bool,
    pub shape: Shape,
    /// Radius of the concentric circle tangent to every side (0 for parades).
    pub tangential_radius: f64,
    pub vertex_events: Vec<VertexEvent>,
    /// Index of the mirror image within the owning catalogue.
    pub mirror_partner: Option<usize>,
    pub eigenvalues: Vec<f64>,
    pub hessian_det: f64,
}

impl CriticalPoint {
    /// Same point up to `radius` on the torus and `perimeter_tol` in value.
    pub fn coincides(&self, other: &CriticalPoint, radius: f64, perimeter_tol: f64) -> bool {
        self.config.torus_distance(&other.config) < radius
            && (self.perimeter - other.perimeter).abs() <= perimeter_tol
    }
}

/// All critical points found for one set of radii, sorted by perimeter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalCatalogue {
    pub radii: Radii,
    pub points: Vec<CriticalPoint>,
    pub mirror_pairs: Vec<(usize, usize)>,
    /// `morse_counts[k]` = number of non-degenerate points of index `k`.
    pub morse_counts: Vec<usize>,
    /// `sum (-1)^index` over all points.
    pub euler_sum: i64,
    pub non_generic: bool,
    pub warnings: Vec<String>,
    pub observations: Vec<String>,
}

impl CriticalCatalogue {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn has_degenerate(&self) -> bool {
        self.points.iter().any(|p| p.degenerate)
    }

    pub fn count_shape(&self, shape: Shape) -> usize {
        self.points.iter().filter(|p| p.shape == shape).count()
    }
}

fn perimeter_tol(radii: &Radii) -> f64 {
    1e-8 * (1.0 + radii.max())
}

/// Closed-form seeds: parades, socle circuits for every sign pattern, and
/// partially aligned circuits when `n = 4`.
pub fn closed_form_seeds(radii: &Radii) -> Vec<ReducedConfiguration> {
    let n = radii.len();
    let mut seeds: Vec<ReducedConfiguration> = all_parade_signs(n).iter().map(parade_config).collect();
    for k in 0..(1usize << n) - 1 {
        let eps: Vec<i8> = (0..n).map(|i| if k >> i & 1 == 1 { -1 } else { 1 }).collect();
        for sigma in socle_roots(radii, &eps).unwrap_or_default() {
            for orientation in [1, -1] {
                if let Ok(c) = snellius_from_socle(radii, sigma, &eps, orientation) {
                    seeds.push(c);
                }
            }
        }
    }
    if n == 4 {
        for skip in 0..4 {
            if let Ok(pa) = partially_aligned_circuits(radii, skip) {
                seeds.extend(pa.configs);
            }
        }
    }
    seeds
}

/// Uniform grid on the reduced torus, offset by half a cell.
pub fn grid_seeds(n: usize, density: usize) -> Vec<ReducedConfiguration> {
    let dims = n - 1;
    let total = density.pow(dims as u32);
    let h = std::f64::consts::TAU / density as f64;
    (0..total)
        .map(|mut k| {
            let angles = (0..dims)
                .map(|_| {
                    let i = k % density;
                    k /= density;
                    (i as f64 + 0.5) * h
                })
                .collect();
            ReducedConfiguration::new(angles)
        })
        .collect()
}

/// Refines seeds in parallel and classifies each distinct limit once;
/// results keep the seed order of first occurrence.
pub(crate) fn refine_all(
    radii: &Radii,
    seeds: &[ReducedConfiguration],
    settings: &SolverSettings,
) -> Vec<CriticalPoint> {
    let limits: Vec<ReducedConfiguration> = seeds
        .par_iter()
        .map(|s| newton_solve(radii, s, settings).ok())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut distinct: Vec<ReducedConfiguration> = Vec::new();
    for x in limits {
        if !distinct
            .iter()
            .any(|y| y.torus_distance(&x) < 0.1 * settings.dedupe_radius)
        {
            distinct.push(x);
        }
    }
    distinct
        .par_iter()
        .map(|x| describe(radii, x, settings).ok())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Keeps the first of every group of coinciding points.
pub(crate) fn dedupe(radii: &Radii, points: Vec<CriticalPoint>, settings: &SolverSettings) -> Vec<CriticalPoint> {
    let tol = perimeter_tol(radii);
    let mut out: Vec<CriticalPoint> = Vec::new();
    for p in points {
        if !out.iter().any(|q| q.coincides(&p, settings.dedupe_radius, tol)) {
            out.push(p);
        }
    }
    out
}

fn sort_points(points: &mut [CriticalPoint]) {
    points.sort_by(|a, b| {
        let ka = (a.perimeter * 1e8).round();
        let kb = (b.perimeter * 1e8).round();
        ka.total_cmp(&kb).then_with(|| {
            a.config
                .angles()
                .iter()
                .zip(b.config.angles())
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
}

/// Sorts, pairs mirror images and tallies indices.
pub(crate) fn assemble(
    radii: &Radii,
    mut points: Vec<CriticalPoint>,
    settings: &SolverSettings,
    mut warnings: Vec<String>,
) -> CriticalCatalogue {
    sort_points(&mut points);
    let tol = perimeter_tol(radii);
    let mut mirror_pairs = Vec::new();
    for p in &mut points {
        p.mirror_partner = None;
    }
    for i in 0..points.len() {
        if points[i].shape == Shape::Parade || points[i].mirror_partner.is_some() {
            continue;
        }
        let image = points[i].config.mirror();
        let found = (0..points.len()).find(|&j| {
            j != i
                && points[j].mirror_partner.is_none()
                && points[j].config.torus_distance(&image) < settings.dedupe_radius
                && (points[j].perimeter - points[i].perimeter).abs() <= tol
        });
        if let Some(j) = found {
            points[i].mirror_partner = Some(j);
            points[j].mirror_partner = Some(i);
            mirror_pairs.push((i.min(j), i.max(j)));
        }
    }
    let dims = radii.len() - 1;
    let mut morse_counts = vec![0; dims + 1];
    let mut euler_sum = 0i64;
    for p in &points {
        if !p.degenerate {
            morse_counts[p.morse_index] += 1;
        }
        euler_sum += if p.morse_index % 2 == 0 { 1 } else { -1 };
    }
    let non_generic = !radii.is_generic();
    if non_generic {
        warnings.insert(0, "non-generic radii".to_string());
    }
    if points.iter().any(|p| p.degenerate) {
        warnings.push("degenerate critical points present".to_string());
    }
    let mut observations = Vec::new();
    if let Some(top) = points.last() {
        observations.push(format!("maximum perimeter {} attained by a {} circuit", top.perimeter, top.shape));
    }
    CriticalCatalogue {
        radii: radii.clone(),
        points,
        mirror_pairs,
        morse_counts,
        euler_sum,
        non_generic,
        warnings,
        observations,
    }
}

/// Finds all critical points from closed-form and grid seeds.
pub fn find_all(radii: &Radii, settings: &SolverSettings) -> Result<CriticalCatalogue> {
    settings.validate()?;
    let n = radii.len();
    let mut warnings = Vec::new();
    let density = settings.effective_density(n);
    if density < settings.grid_density {
        warnings.push(format!("grid density lowered to {density} per angle for n = {n}"));
    }
    let mut seeds = closed_form_seeds(radii);
    seeds.extend(grid_seeds(n, density));
    let found = refine_all(radii, &seeds, settings);
    let mut points = dedupe(radii, found, settings);

    // mirror images of anything whose twin was missed
    let tol = perimeter_tol(radii);
    let mut extra = Vec::new();
    for p in &points {
        let image = p.config.mirror();
        let known = points
            .iter()
            .chain(&extra)
            .any(|q: &CriticalPoint| q.config.torus_distance(&image) < settings.dedupe_radius);
        if !known {
            if let Ok(q) = newton_refine(radii, &image, settings) {
                if (q.perimeter - p.perimeter).abs() <= tol {
                    extra.push(q);
                }
            }
        }
    }
    points.extend(extra);
    Ok(assemble(radii, points, settings, warnings))
}

/// True when both lists hold the same points (torus distance below `radius`).
pub fn catalogues_match(a: &[CriticalPoint], b: &[CriticalPoint], radius: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|p| {
        match (0..b.len()).find(|&j| !used[j] && b[j].config.torus_distance(&p.config) < radius) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}
