use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Radii, ReducedConfiguration, DEGENERACY_TOL};
use crate::morse::{morse_index, sylvester_index, symmetric_eigenvalues};

/// Signs of the x-coordinates of the first `n - 1` vertices of a parade.
/// The last vertex sits at `+r_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParadeSigns(Vec<i8>);

impl ParadeSigns {
    /// Panics if any entry is not `+1` or `-1`.
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(
            signs.iter().all(|s| *s == 1 || *s == -1),
            "parade signs must be +1 or -1"
        );
        ParadeSigns(signs)
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Signed x-coordinates of all `n` vertices.
    pub fn coordinates(&self, radii: &Radii) -> Result<Vec<f64>> {
        if self.0.len() + 1 != radii.len() {
            return Err(Error::SignCountMismatch {
                expected: radii.len() - 1,
                got: self.0.len(),
            });
        }
        let mut x: Vec<f64> = self
            .0
            .iter()
            .zip(radii.as_slice())
            .map(|(s, r)| *s as f64 * r)
            .collect();
        x.push(radii.get(radii.len() - 1));
        Ok(x)
    }

    /// Compact label such as `+-+`.
    pub fn label(&self) -> String {
        self.0.iter().map(|s| if *s > 0 { '+' } else { '-' }).collect()
    }

    /// Recognises a configuration whose angles are all 0 or pi (within `tol`).
    pub fn from_config(config: &ReducedConfiguration, tol: f64) -> Option<Self> {
        config
            .angles()
            .iter()
            .map(|&a| {
                if a.sin().abs() > tol {
                    None
                } else if a.cos() > 0.0 {
                    Some(1)
                } else {
                    Some(-1)
                }
            })
            .collect::<Option<Vec<i8>>>()
            .map(ParadeSigns)
    }
}

/// All `2^(n-1)` sign patterns; pattern `k` has a minus sign wherever bit `i` of `k` is set.
pub fn all_parade_signs(n: usize) -> Vec<ParadeSigns> {
    let m = n - 1;
    (0..1usize << m)
        .map(|k| ParadeSigns((0..m).map(|i| if k >> i & 1 == 1 { -1 } else { 1 }).collect()))
        .collect()
}

pub fn parade_config(signs: &ParadeSigns) -> ReducedConfiguration {
    ReducedConfiguration::new(
        signs
            .0
            .iter()
            .map(|&s| if s > 0 { 0.0 } else { PI })
            .collect(),
    )
}

pub fn parade_perimeter(radii: &Radii, signs: &ParadeSigns) -> Result<f64> {
    let x = signs.coordinates(radii)?;
    let n = x.len();
    Ok((0..n).map(|j| (x[j] - x[(j + 1) % n]).abs()).sum())
}

/// Closed-form Hessian data at a parade.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParadeHessianReport {
    /// Reduced tridiagonal Hessian, `(n-1) x (n-1)`, row-major.
    pub matrix: Vec<Vec<f64>>,
    /// `b_k = x_{k-1} x_k / |x_{k-1} - x_k|` for `k = 1..n` (cyclic).
    pub b_values: Vec<f64>,
    pub determinant: f64,
    /// `S = sum_k 1/b_k = sum_i eps_i / r_i`; `det = (prod_k b_k) * S` with `prod_k b_k > 0`.
    pub s_value: f64,
    /// Coefficients `eps_i` in `{-2, 0, 2}`.
    pub epsilons: Vec<i8>,
    pub eigenvalues: Vec<f64>,
    pub morse_index: usize,
    pub degenerate: bool,
    /// Index from leading principal minors, `None` if a minor vanishes.
    pub sylvester_index: Option<usize>,
}

impl ParadeHessianReport {
    pub fn dmatrix(&self) -> DMatrix<f64> {
        let m = self.matrix.len();
        DMatrix::from_fn(m, m, |i, j| self.matrix[i][j])
    }
}

/// `b_k` values of a parade.
pub(crate) fn parade_b_values(x: &[f64]) -> Result<Vec<f64>> {
    let n = x.len();
    (0..n)
        .map(|k| {
            let prev = (k + n - 1) % n;
            let gap = (x[prev] - x[k]).abs();
            if gap <= 1e-14 * x[prev].abs().max(x[k].abs()) {
                Err(Error::DegenerateParade(prev, k))
            } else {
                Ok(x[prev] * x[k] / gap)
            }
        })
        .collect()
}

/// Coefficients of `1/r_i` in `S`: each adjacent pair contributes `-1` to both
/// members when on opposite sides of the centre, otherwise `+1` to the smaller
/// radius and `-1` to the larger.
pub(crate) fn parade_epsilons(x: &[f64]) -> Vec<i8> {
    let n = x.len();
    let mut eps = vec![0i8; n];
    for a in 0..n {
        let b = (a + 1) % n;
        if x[a] * x[b] < 0.0 {
            eps[a] -= 1;
            eps[b] -= 1;
        } else if x[a].abs() < x[b].abs() {
            eps[a] += 1;
            eps[b] -= 1;
        } else {
            eps[a] -= 1;
            eps[b] += 1;
        }
    }
    eps
}

pub fn parade_hessian(radii: &Radii, signs: &ParadeSigns) -> Result<ParadeHessianReport> {
    let x = signs.coordinates(radii)?;
    let n = x.len();
    let b = parade_b_values(&x)?;
    let m = n - 1;
    let h = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            b[i] + b[i + 1]
        } else if j == i + 1 {
            -b[i + 1]
        } else if i == j + 1 {
            -b[j + 1]
        } else {
            0.0
        }
    });
    let determinant = h.determinant();
    let s_value = b.iter().map(|v| 1.0 / v).sum();
    let eigenvalues = symmetric_eigenvalues(&h);
    let (morse_index, degenerate) = morse_index(&h, DEGENERACY_TOL * radii.max());
    Ok(ParadeHessianReport {
        matrix: (0..m).map(|i| (0..m).map(|j| h[(i, j)]).collect()).collect(),
        b_values: b,
        determinant,
        s_value,
        epsilons: parade_epsilons(&x),
        eigenvalues,
        morse_index,
        degenerate,
        sylvester_index: sylvester_index(&h, 1e-12),
    })
}
