use serde::{Deserialize, Serialize};

use crate::closed_forms::{all_parade_signs, parade_epsilons, ParadeSigns};
use crate::error::{Error, Result};
use crate::geometry::Radii;

/// A radius value at which some parade has a singular Hessian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocusRoot {
    pub signs: ParadeSigns,
    pub param: f64,
}

/// Values of radius `vary` in the open interval between `from` and `to` at
/// which a parade Hessian determinant vanishes.
///
/// The determinant at a parade factors as a positive number times
/// `S = sum_i eps_i / r_i`, and the `eps_i` only change where the varied
/// radius crosses a neighbour on the same side of the centre. On each piece
/// between those crossings `S = A + eps_vary / rho`, solved exactly.
pub fn parade_degeneracy_locus(radii: &Radii, vary: usize, from: f64, to: f64) -> Result<Vec<LocusRoot>> {
    let n = radii.len();
    if vary >= n {
        return Err(Error::InvalidPlan(format!("vary index {vary} out of range")));
    }
    if !(from.is_finite() && to.is_finite() && from > 0.0 && to > 0.0) {
        return Err(Error::InvalidPlan("radius range must be positive".into()));
    }
    let (lo, hi) = if from < to { (from, to) } else { (to, from) };
    let mut roots = Vec::new();
    for signs in all_parade_signs(n) {
        let sign_of = |i: usize| if i == n - 1 { 1.0 } else { signs.signs()[i] as f64 };
        let mut cuts = vec![lo, hi];
        for nb in [(vary + n - 1) % n, (vary + 1) % n] {
            let r = radii.get(nb);
            if sign_of(nb) == sign_of(vary) && r > lo && r < hi {
                cuts.push(r);
            }
        }
        cuts.sort_by(|a, b| a.total_cmp(b));
        cuts.dedup();
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            let probe = 0.5 * (a + b);
            let x: Vec<f64> = (0..n)
                .map(|i| sign_of(i) * if i == vary { probe } else { radii.get(i) })
                .collect();
            let eps = parade_epsilons(&x);
            let rest: f64 = (0..n)
                .filter(|&i| i != vary)
                .map(|i| eps[i] as f64 / radii.get(i))
                .sum();
            if eps[vary] == 0 || rest == 0.0 {
                continue;
            }
            let rho = -(eps[vary] as f64) / rest;
            if rho > a && rho < b {
                roots.push(LocusRoot {
                    signs: signs.clone(),
                    param: rho,
                });
            }
        }
    }
    roots.sort_by(|a, b| a.param.total_cmp(&b.param));
    Ok(roots)
}
