//! Inertia of symmetric matrices: eigenvalue signs and Sylvester's leading minors.

use nalgebra::DMatrix;

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Number of negative eigenvalues, and whether the smallest |eigenvalue| falls
/// below `threshold` (absolute).
pub fn morse_index(m: &DMatrix<f64>, threshold: f64) -> (usize, bool) {
    let ev = symmetric_eigenvalues(m);
    let index = ev.iter().filter(|&&x| x < 0.0).count();
    let degenerate = ev.iter().any(|x| x.abs() < threshold);
    (index, degenerate)
}

/// Leading principal minors `D_1 .. D_m`.
pub fn leading_minors(m: &DMatrix<f64>) -> Vec<f64> {
    (1..=m.nrows())
        .map(|k| m.view((0, 0), (k, k)).into_owned().determinant())
        .collect()
}

/// Index from the number of sign changes in `1, D_1, ..., D_m`.
///
/// Returns `None` when some minor vanishes (relative to `tol`), in which case
/// the rule does not apply.
pub fn sylvester_index(m: &DMatrix<f64>, tol: f64) -> Option<usize> {
    let scale = m.iter().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1e-300);
    let minors = leading_minors(m);
    let mut prev = 1.0f64;
    let mut changes = 0;
    for (k, d) in minors.iter().enumerate() {
        if d.abs() <= tol * scale.powi(k as i32 + 1) {
            return None;
        }
        if d.signum() != prev.signum() {
            changes += 1;
        }
        prev = *d;
    }
    Some(changes)
}
