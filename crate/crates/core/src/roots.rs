//! Bracketed scalar root finding.

/// Bisection on `[lo, hi]`, which must bracket a sign change of `f`.
///
/// Returns `None` when the endpoints have the same strict sign. Stops when the
/// bracket is narrower than `xtol` or the midpoint stops moving.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Option<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= xtol || mid <= lo || mid >= hi {
            return Some(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// All sign changes of `f` on the open interval `(lo, hi)`, found by sampling
/// `samples` subintervals and bisecting each bracketing one.
pub fn bracketed_roots<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    samples: usize,
    xtol: f64,
) -> Vec<f64> {
    let mut roots = Vec::new();
    let step = (hi - lo) / samples as f64;
    let mut a = lo;
    let mut fa = f(a);
    for i in 1..=samples {
        let b = if i == samples { hi } else { lo + step * i as f64 };
        let fb = f(b);
        if fb == 0.0 && i < samples {
            roots.push(b);
        } else if fa.is_finite() && fb.is_finite() && fa != 0.0 && fa.signum() != fb.signum() {
            if let Some(root) = bisect(&f, a, b, xtol) {
                roots.push(root);
            }
        }
        a = b;
        fa = fb;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-15).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rejects_unbracketed() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn all_roots_of_cubic() {
        let roots = bracketed_roots(|x| (x - 0.5) * (x - 1.5) * (x - 2.5), 0.0, 3.0, 64, 1e-14);
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip([0.5, 1.5, 2.5]) {
            assert!((r - e).abs() < 1e-12);
        }
    }
}
