use nalgebra::{DMatrix, DVector};

use super::{CriticalPoint, SolverSettings};
use crate::error::{Error, Result};
use crate::geometry::{
    classify_vertices, gradient_and_hessian, gradient_vector, hessian, perimeter, shape_of, tangential_distances, Circuit, Radii,
    ReducedConfiguration, Shape, CLASSIFICATION_TOL,
};
use crate::morse::{morse_index, symmetric_eigenvalues};

const MAX_STEP: f64 = 1.0;
const MIN_DAMPING: f64 = 1.0 / 1024.0;
const FALLBACK_STEPS: usize = 10;

/// Fully classifies a configuration assumed to be (close to) stationary.
pub fn describe(radii: &Radii, config: &ReducedConfiguration, settings: &SolverSettings) -> Result<CriticalPoint> {
    let g = gradient_vector(radii, config)?;
    let h = hessian(radii, config)?;
    let eigenvalues = symmetric_eigenvalues(&h);
    let (morse_index, degenerate) = morse_index(&h, settings.degeneracy_threshold * radii.max());
    let circuit = Circuit::new(radii, config)?;
    let shape = shape_of(&circuit, CLASSIFICATION_TOL);
    let distances = tangential_distances(radii, config)?;
    let tangential_radius = if shape == Shape::Parade {
        0.0
    } else {
        distances.iter().sum::<f64>() / distances.len() as f64
    };
    Ok(CriticalPoint {
        perimeter: perimeter(radii, config)?,
        gradient_norm: g.norm(),
        morse_index,
        degenerate,
        shape,
        tangential_radius,
        vertex_events: classify_vertices(radii, config, CLASSIFICATION_TOL)?,
        mirror_partner: None,
        hessian_det: h.determinant(),
        eigenvalues,
        config: config.clone(),
    })
}

fn grad_norm(radii: &Radii, config: &ReducedConfiguration) -> f64 {
    gradient_vector(radii, config)
        .map(|g| g.norm())
        .unwrap_or(f64::INFINITY)
}

fn capped(step: DVector<f64>) -> DVector<f64> {
    let big = step.amax();
    if big > MAX_STEP {
        step * (MAX_STEP / big)
    } else {
        step
    }
}

/// Backtracking along `dir` until the gradient norm decreases.
fn damped(
    radii: &Radii,
    x: &ReducedConfiguration,
    dir: &DVector<f64>,
    current: f64,
) -> Option<(ReducedConfiguration, f64)> {
    let mut t = 1.0;
    while t >= MIN_DAMPING {
        let trial = x.offset((dir * t).as_slice());
        let norm = grad_norm(radii, &trial);
        if norm < current {
            return Some((trial, norm));
        }
        t *= 0.5;
    }
    None
}

fn newton_direction(h: &DMatrix<f64>, g: &DVector<f64>) -> Option<DVector<f64>> {
    let scale = h.amax().max(1e-300);
    let lu = h.clone().lu();
    if lu.determinant().abs() <= 1e-14 * scale.powi(h.nrows() as i32) {
        return None;
    }
    let step = lu.solve(&(-g))?;
    if step.iter().all(|v| v.is_finite()) {
        Some(capped(step))
    } else {
        None
    }
}

/// Newton iteration for a zero of the reduced gradient, followed by a full
/// classification of the point it converges to.
///
/// Full steps are halved until the gradient norm decreases. When the Hessian
/// is singular, or no damped step helps, a few descent steps on `|grad|^2`
/// are taken before Newton resumes.
pub fn newton_refine(
    radii: &Radii,
    start: &ReducedConfiguration,
    settings: &SolverSettings,
) -> Result<CriticalPoint> {
    let x = newton_solve(radii, start, settings)?;
    describe(radii, &x, settings)
}

/// The iteration of [`newton_refine`] without the classification.
pub(crate) fn newton_solve(
    radii: &Radii,
    start: &ReducedConfiguration,
    settings: &SolverSettings,
) -> Result<ReducedConfiguration> {
    if start.dim() + 1 != radii.len() {
        return Err(Error::DimensionMismatch {
            expected: radii.len() - 1,
            got: start.dim(),
        });
    }
    let target = settings.newton_tol * (1.0 + radii.max());
    let mut x = start.clone();
    let mut norm = grad_norm(radii, &x);
    for _ in 0..settings.max_iter {
        if !norm.is_finite() {
            break;
        }
        if norm < target {
            return Ok(x);
        }
        let (g, h) = gradient_and_hessian(radii, &x)?;
        let accepted = newton_direction(&h, &g).and_then(|dir| damped(radii, &x, &dir, norm));
        match accepted {
            Some((next, next_norm)) => {
                x = next;
                norm = next_norm;
            }
            None => {
                let mut moved = false;
                for _ in 0..FALLBACK_STEPS {
                    let Ok((g, h)) = gradient_and_hessian(radii, &x) else {
                        break;
                    };
                    let descent = capped(-(&h * &g));
                    match damped(radii, &x, &descent, norm) {
                        Some((next, next_norm)) => {
                            x = next;
                            norm = next_norm;
                            moved = true;
                        }
                        None => break,
                    }
                }
                if !moved {
                    break;
                }
            }
        }
    }
    if norm < target {
        return Ok(x);
    }
    Err(Error::NoConvergence {
        iterations: settings.max_iter,
        gradient_norm: norm,
    })
}
