use serde::{Deserialize, Serialize};

use super::socle::snellius_from_socle;
use super::triangle::fermat_triangle_inradius;
use crate::error::{Error, Result};
use crate::geometry::{Radii, ReducedConfiguration};

/// Default relative tolerance for declaring the skipped circle tangent to the triangle side.
pub const TANGENCY_TOL: f64 = 1e-9;

/// Stationary four-vertex circuits made of a three-circle stationary triangle
/// plus a straight-through vertex on the skipped circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialAlignment {
    /// Index (0-based) of the circle whose vertex lies on a triangle side.
    pub skip: usize,
    /// Tangential radius of the underlying triangle.
    pub sigma: f64,
    /// Solutions per orientation: 0, 1 or 2.
    pub count: usize,
    /// The skipped circle touches the triangle side instead of crossing it.
    pub tangent: bool,
    /// `count` configurations for the positive orientation followed by their mirror images.
    pub configs: Vec<ReducedConfiguration>,
}

pub fn partially_aligned_circuits(radii: &Radii, skip: usize) -> Result<PartialAlignment> {
    partially_aligned_circuits_with_tol(radii, skip, TANGENCY_TOL)
}

/// As [`partially_aligned_circuits`], with `|r_skip - sigma| <= tol * max r`
/// counted as tangency.
pub fn partially_aligned_circuits_with_tol(
    radii: &Radii,
    skip: usize,
    tol: f64,
) -> Result<PartialAlignment> {
    let n = radii.len();
    if n != 4 {
        return Err(Error::UnsupportedCircleCount {
            expected: 4,
            got: n,
        });
    }
    if skip >= n {
        return Err(Error::InvalidSkipIndex { index: skip, n });
    }
    // remaining circles in cyclic order, ending with the skipped circle's predecessor
    let order = [(skip + 1) % n, (skip + 2) % n, (skip + 3) % n];
    let tri = Radii::new(order.iter().map(|&i| radii.get(i)).collect())?;
    let sigma = fermat_triangle_inradius(tri.get(0), tri.get(1), tri.get(2))?;
    let tri_config = snellius_from_socle(&tri, sigma, &[1, 1, 1], 1)?;
    let beta = tri_config.full_angles();

    // side from the predecessor (triangle vertex 2, at angle 0) to the successor (vertex 0)
    let s_pred = (tri.get(2).powi(2) - sigma * sigma).sqrt();
    let s_succ = (tri.get(0).powi(2) - sigma * sigma).sqrt();
    let touch = (sigma / tri.get(2)).acos();
    let r = radii.get(skip);
    let scale = radii.max();

    let mut offsets = Vec::new();
    let tangent = (r - sigma).abs() <= tol * scale;
    if tangent {
        offsets.push(0.0);
    } else if r > sigma {
        let w = (r * r - sigma * sigma).sqrt();
        if w < s_pred {
            offsets.push(-w);
        }
        if w < s_succ {
            offsets.push(w);
        }
    }

    let mut configs: Vec<ReducedConfiguration> = offsets
        .iter()
        .map(|&u| {
            let mut full = vec![0.0; n];
            for (slot, &i) in order.iter().enumerate() {
                full[i] = beta[slot];
            }
            full[skip] = touch + u.atan2(sigma);
            ReducedConfiguration::from_full(&full)
        })
        .collect();
    let mirrors: Vec<ReducedConfiguration> = configs.iter().map(|c| c.mirror()).collect();
    configs.extend(mirrors);

    Ok(PartialAlignment {
        skip,
        sigma,
        count: offsets.len(),
        tangent,
        configs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{classify_vertices, gradient_norm, VertexKind, CLASSIFICATION_TOL};

    fn radii(v: &[f64]) -> Radii {
        Radii::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_crossings() {
        let r = radii(&[3.0, 2.53, 3.0, 4.6]);
        let pa = partially_aligned_circuits(&r, 1).unwrap();
        assert_eq!(pa.count, 2);
        assert!(!pa.tangent);
        assert_eq!(pa.configs.len(), 4);
        for c in &pa.configs {
            assert!(gradient_norm(&r, c).unwrap() < 1e-8);
            let events = classify_vertices(&r, c, CLASSIFICATION_TOL).unwrap();
            assert_eq!(events[1].kind, VertexKind::Refraction);
        }
    }

    #[test]
    fn tangent_case() {
        let sigma = fermat_triangle_inradius(3.0, 3.0, 4.6).unwrap();
        assert!((sigma - 1.7).abs() < 0.05);
        let r = radii(&[3.0, sigma, 3.0, 4.6]);
        let pa = partially_aligned_circuits(&r, 1).unwrap();
        assert!(pa.tangent);
        assert_eq!(pa.count, 1);
        assert!(gradient_norm(&r, &pa.configs[0]).unwrap() < 1e-8);
    }

    #[test]
    fn no_crossing() {
        let r = radii(&[3.0, 1.0, 3.0, 4.6]);
        assert_eq!(partially_aligned_circuits(&r, 1).unwrap().count, 0);
    }

    #[test]
    fn one_crossing_between_neighbours() {
        // the skipped circle is larger than one neighbour and smaller than the other
        let r = radii(&[3.0, 2.53, 3.0, 4.6]);
        let pa = partially_aligned_circuits(&r, 0).unwrap();
        assert_eq!(pa.count, 1);
        for c in &pa.configs {
            assert!(gradient_norm(&r, c).unwrap() < 1e-8);
        }
    }

    #[test]
    fn invalid_inputs() {
        let r = radii(&[3.0, 2.53, 3.0, 4.6]);
        assert!(matches!(
            partially_aligned_circuits(&r, 4),
            Err(Error::InvalidSkipIndex { .. })
        ));
        assert!(partially_aligned_circuits(&radii(&[1.0, 2.0, 3.0]), 0).is_err());
    }
}
