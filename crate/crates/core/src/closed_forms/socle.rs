//! Stationary circuits built around a tangential circle (socle) of radius `sigma`.
//!
//! Seen from the centre, the tangent point of a side lies at angular distance
//! `phi_i = acos(sigma / r_i)` from each of its two endpoints. With a sign
//! `eps_i` per vertex the angular gap between consecutive vertices is
//! `eps_j phi_j + eps_{j+1} phi_{j+1}`, so a circuit winding once around the
//! centre closes exactly when `sum_i eps_i phi_i = pi`. The circuit is
//! stationary when every signed side `eps_j s_j + eps_{j+1} s_{j+1}` (with
//! `s_i = sqrt(r_i^2 - sigma^2)`) is positive; its perimeter is then
//! `2 sum_i eps_i s_i`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Radii, ReducedConfiguration};
use crate::roots::bracketed_roots;

/// Residual tolerance accepted by [`snellius_from_socle`].
pub const SOCLE_TOL: f64 = 1e-9;

fn check_signs(radii: &Radii, eps: &[i8]) -> Result<()> {
    if eps.len() != radii.len() {
        return Err(Error::SignCountMismatch {
            expected: radii.len(),
            got: eps.len(),
        });
    }
    Ok(())
}

fn check_sigma(radii: &Radii, sigma: f64) -> Result<()> {
    let max = radii.min();
    if !(sigma > 0.0 && sigma < max) {
        return Err(Error::SigmaOutOfRange { sigma, max });
    }
    Ok(())
}

fn closure(radii: &[f64], eps: &[i8], sigma: f64) -> f64 {
    radii
        .iter()
        .zip(eps)
        .map(|(r, e)| *e as f64 * (sigma / r).clamp(-1.0, 1.0).acos())
        .sum::<f64>()
        - PI
}

/// `sum_i eps_i acos(sigma / r_i) - pi`.
pub fn socle_residual(radii: &Radii, sigma: f64, eps: &[i8]) -> Result<f64> {
    check_signs(radii, eps)?;
    check_sigma(radii, sigma)?;
    Ok(closure(radii.as_slice(), eps, sigma))
}

/// All roots of the closure equation in `(0, min r)` for a sign pattern.
pub fn socle_roots(radii: &Radii, eps: &[i8]) -> Result<Vec<f64>> {
    check_signs(radii, eps)?;
    let hi = radii.min();
    let f = |s: f64| closure(radii.as_slice(), eps, s);
    Ok(bracketed_roots(f, 0.0, hi, 4096, 1e-14 * hi)
        .into_iter()
        .filter(|s| *s > 0.0 && *s < hi)
        .collect())
}

/// `2 sum_i eps_i sqrt(r_i^2 - sigma^2)`.
pub fn snellius_perimeter(radii: &Radii, sigma: f64, eps: &[i8]) -> f64 {
    2.0 * radii
        .as_slice()
        .iter()
        .zip(eps)
        .map(|(r, e)| *e as f64 * (r * r - sigma * sigma).max(0.0).sqrt())
        .sum::<f64>()
}

/// Builds the circuit circumscribing the socle. `orientation = -1` gives the mirror image.
pub fn snellius_from_socle(
    radii: &Radii,
    sigma: f64,
    eps: &[i8],
    orientation: i8,
) -> Result<ReducedConfiguration> {
    let residual = socle_residual(radii, sigma, eps)?;
    if residual.abs() > SOCLE_TOL {
        return Err(Error::InconsistentSocle { residual });
    }
    let n = radii.len();
    let r = radii.as_slice();
    let s: Vec<f64> = r.iter().map(|x| (x * x - sigma * sigma).sqrt()).collect();
    let phi: Vec<f64> = r.iter().map(|x| (sigma / x).acos()).collect();
    for j in 0..n {
        let k = (j + 1) % n;
        if eps[j] as f64 * s[j] + eps[k] as f64 * s[k] <= 0.0 {
            return Err(Error::NotStationary { side: j });
        }
    }
    let mut full = Vec::with_capacity(n);
    let mut angle = 0.0;
    for j in 0..n {
        full.push(angle);
        let k = (j + 1) % n;
        angle += eps[j] as f64 * phi[j] + eps[k] as f64 * phi[k];
    }
    let config = ReducedConfiguration::from_full(&full);
    Ok(if orientation < 0 {
        config.mirror()
    } else {
        config
    })
}

/// A circuit found from a root of the closure equation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SocleCircuit {
    pub sigma: f64,
    pub signs: Vec<i8>,
    pub config: ReducedConfiguration,
}

/// Inradius of the strictly convex stationary quadrilateral on circles
/// `a, b, c, d`, or `None` when no such quadrilateral exists.
///
/// The closed form also produces the tangential radius of a spear for some
/// radii; it is accepted only when the all-positive closure equation has a
/// root, i.e. when `sum_i acos(min / r_i) < pi`.
pub fn convex_quad_inradius(a: f64, b: f64, c: f64, d: f64) -> Result<Option<f64>> {
    for v in [a, b, c, d] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::NonPositiveInput(v));
        }
    }
    let q = 0.5 * (a * b * c + a * b * d + a * c * d + b * c * d);
    let numerator = (q - a * b * c) * (q - a * b * d) * (q - b * c * d) * (q - a * c * d);
    let denominator = a * b * c * d * (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
    if numerator <= 0.0 {
        return Ok(None);
    }
    let m = a.min(b).min(c).min(d);
    let at_min: f64 = [a, b, c, d].iter().map(|x| (m / x).clamp(-1.0, 1.0).acos()).sum();
    if at_min >= PI {
        return Ok(None);
    }
    Ok(Some(2.0 * (numerator / denominator).sqrt()))
}
