//! Independent completeness check: scan a fine grid for discrete local
//! minima of `|grad L|^2` and for cells across which every gradient component
//! changes sign, then polish each candidate with Newton.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{assemble, dedupe, newton_refine, CriticalCatalogue, SolverSettings};
use crate::error::{Error, Result};
use crate::geometry::{gradient, Radii, ReducedConfiguration};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub catalogue: CriticalCatalogue,
    /// Grid nodes at which the gradient is undefined (coincident vertices).
    pub singular_nodes: usize,
    /// Grid starts that were polished: discrete minima and sign-change cells.
    pub candidates: usize,
}

pub fn brute_force_oracle(radii: &Radii, density: usize, settings: &SolverSettings) -> Result<OracleReport> {
    let n = radii.len();
    if n > 4 {
        return Err(Error::OracleTooLarge(n));
    }
    if density < 3 {
        return Err(Error::InvalidSettings("oracle density must be at least 3".into()));
    }
    settings.validate()?;
    let dims = n - 1;
    let total = density.pow(dims as u32);
    let h = std::f64::consts::TAU / density as f64;
    let index_to_angles = |mut k: usize| -> Vec<usize> {
        (0..dims)
            .map(|_| {
                let i = k % density;
                k /= density;
                i
            })
            .collect()
    };
    let grads: Vec<Option<Vec<f64>>> = (0..total)
        .into_par_iter()
        .map(|k| {
            let angles = index_to_angles(k).iter().map(|&i| i as f64 * h).collect();
            gradient(radii, &ReducedConfiguration::new(angles)).ok()
        })
        .collect();
    let values: Vec<f64> = grads
        .iter()
        .map(|g| g.as_ref().map_or(f64::INFINITY, |g| g.iter().map(|x| x * x).sum()))
        .collect();
    let singular_nodes = values.iter().filter(|v| v.is_infinite()).count();

    let shift = |idx: &[usize], d: &[isize]| -> usize {
        let mut other = 0usize;
        let mut stride = 1usize;
        for (i, di) in idx.iter().zip(d) {
            let j = (*i as isize + di).rem_euclid(density as isize) as usize;
            other += j * stride;
            stride *= density;
        }
        other
    };

    let neighbours: Vec<Vec<isize>> = (0..3usize.pow(dims as u32))
        .map(|mut m| {
            (0..dims)
                .map(|_| {
                    let d = (m % 3) as isize - 1;
                    m /= 3;
                    d
                })
                .collect()
        })
        .filter(|d: &Vec<isize>| d.iter().any(|x| *x != 0))
        .collect();

    let minima: Vec<usize> = (0..total)
        .into_par_iter()
        .filter(|&k| {
            let v = values[k];
            if !v.is_finite() {
                return false;
            }
            let idx = index_to_angles(k);
            neighbours.iter().all(|d| v <= values[shift(&idx, d)])
        })
        .collect();

    // cells on whose corners every gradient component takes both signs
    let corners: Vec<Vec<isize>> = (0..1usize << dims)
        .map(|m| (0..dims).map(|i| (m >> i & 1) as isize).collect())
        .collect();
    let cells: Vec<usize> = (0..total)
        .into_par_iter()
        .filter(|&k| {
            let idx = index_to_angles(k);
            let mut lo = vec![false; dims];
            let mut hi = vec![false; dims];
            for d in &corners {
                let Some(g) = &grads[shift(&idx, d)] else {
                    return false;
                };
                for (i, &gi) in g.iter().enumerate() {
                    lo[i] |= gi <= 0.0;
                    hi[i] |= gi >= 0.0;
                }
            }
            lo.iter().zip(&hi).all(|(a, b)| *a && *b)
        })
        .collect();

    let starts: Vec<ReducedConfiguration> = minima
        .iter()
        .map(|&k| index_to_angles(k).iter().map(|&i| i as f64 * h).collect())
        .chain(
            cells
                .iter()
                .map(|&k| index_to_angles(k).iter().map(|&i| (i as f64 + 0.5) * h).collect()),
        )
        .map(ReducedConfiguration::new)
        .collect();
    let polished: Vec<_> = starts
        .par_iter()
        .map(|x| newton_refine(radii, x, settings).ok())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let points = dedupe(radii, polished, settings);
    Ok(OracleReport {
        catalogue: assemble(radii, points, settings, Vec::new()),
        singular_nodes,
        candidates: starts.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_large_n() {
        let r = Radii::new(vec![1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert_eq!(
            brute_force_oracle(&r, 10, &SolverSettings::default()),
            Err(Error::OracleTooLarge(5))
        );
    }

    #[test]
    fn equal_radii_triangles() {
        let r = Radii::new(vec![1.0, 1.0, 1.0]).unwrap();
        let rep = brute_force_oracle(&r, 90, &SolverSettings::default()).unwrap();
        // every parade has coincident vertices, so only the two triangles are smooth critical points
        assert!(rep.singular_nodes > 0);
        assert!(rep.catalogue.non_generic);
        let triangles: Vec<_> = rep
            .catalogue
            .points
            .iter()
            .filter(|p| (p.tangential_radius - 0.5).abs() < 1e-9)
            .collect();
        assert_eq!(triangles.len(), 2);
        assert!(triangles.iter().all(|p| p.morse_index == 2 && !p.degenerate));
    }
}
