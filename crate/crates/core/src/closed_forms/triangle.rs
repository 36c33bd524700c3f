use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::bisect;

fn check_positive(values: &[f64]) -> Result<()> {
    match values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        Some(v) => Err(Error::NonPositiveInput(*v)),
        None => Ok(()),
    }
}

/// Radius of the circle tangent to all three sides of the stationary triangle
/// on circles of radii `a, b, c`: the unique root in `(0, min)` of
/// `2abc r^3 + (a^2 b^2 + b^2 c^2 + c^2 a^2) r^2 - a^2 b^2 c^2`.
pub fn fermat_triangle_inradius(a: f64, b: f64, c: f64) -> Result<f64> {
    check_positive(&[a, b, c])?;
    let lead = 2.0 * a * b * c;
    let quad = a * a * b * b + b * b * c * c + c * c * a * a;
    let constant = a * a * b * b * c * c;
    let cubic = |r: f64| (lead * r + quad) * r * r - constant;
    let hi = a.min(b).min(c);
    // cubic(0) < 0 and cubic(min) = 2 m^4 (other two) + m^4 (sum of squares) > 0
    Ok(bisect(cubic, 0.0, hi, 1e-14 * hi).expect("cubic changes sign on (0, min radius)"))
}

/// One critical point of the perimeter for three circles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogueEntry {
    pub value: f64,
    pub morse_index: usize,
    /// Number of critical points sharing this value.
    pub multiplicity: usize,
    pub label: String,
}

/// The six critical values for three circles in increasing order: the shortest
/// parade, three saddle parades and the two mirror-image maximal triangles.
///
/// Input may be in any order; the closed form uses the sorted radii.
pub fn three_cc_catalogue(radii: [f64; 3]) -> Result<Vec<CatalogueEntry>> {
    check_positive(&radii)?;
    let mut r = radii;
    r.sort_by(|a, b| a.total_cmp(b));
    if r[1] - r[0] <= 1e-12 * r[1] || r[2] - r[1] <= 1e-12 * r[2] {
        return Err(Error::NonDistinctRadii);
    }
    let [r1, r2, r3] = r;
    let t = fermat_triangle_inradius(r1, r2, r3)?;
    let side = |a: f64, b: f64, c: f64| (a * a + b * b + 2.0 * t * a * b / c).sqrt();
    let l_max = side(r1, r2, r3) + side(r1, r3, r2) + side(r2, r3, r1);
    let entry = |value, morse_index, multiplicity, label: &str| CatalogueEntry {
        value,
        morse_index,
        multiplicity,
        label: label.to_string(),
    };
    Ok(vec![
        entry(2.0 * (r3 - r1), 0, 1, "shortest parade"),
        entry(2.0 * (r1 + r3), 1, 1, "parade"),
        entry(2.0 * (r2 + r3), 1, 2, "parade"),
        entry(2.0 * (r2 + r3), 1, 2, "parade"),
        entry(l_max, 2, 2, "triangle"),
        entry(l_max, 2, 2, "triangle"),
    ])
}
