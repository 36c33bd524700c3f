use std::f64::consts::PI;

use concentric_cycles::closed_forms::{
    all_parade_signs, convex_quad_inradius, fermat_triangle_inradius, parade_config, parade_hessian,
    parade_perimeter, partially_aligned_circuits, snellius_from_socle, snellius_perimeter, socle_residual,
    socle_roots, three_cc_catalogue,
};
use concentric_cycles::geometry::{gradient_norm, hessian, perimeter};
use concentric_cycles::morse::morse_index;
use concentric_cycles::{Error, Radii};

fn radii(v: &[f64]) -> Radii {
    Radii::new(v.to_vec()).unwrap()
}

#[test]
fn parade_perimeter_matches_configuration() {
    let r = radii(&[1.0, 2.5, 1.7, 4.0, 3.1]);
    for signs in all_parade_signs(5) {
        let direct = perimeter(&r, &parade_config(&signs)).unwrap();
        assert!((direct - parade_perimeter(&r, &signs).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn parade_hessian_agrees_with_general_hessian() {
    let r = radii(&[1.0, 2.5, 1.7, 4.0, 3.1]);
    for signs in all_parade_signs(5) {
        let rep = parade_hessian(&r, &signs).unwrap();
        let h = hessian(&r, &parade_config(&signs)).unwrap();
        assert!((rep.dmatrix() - &h).amax() < 1e-12);
        assert_eq!(morse_index(&h, 1e-8).0, rep.morse_index);
        assert_eq!(rep.sylvester_index, Some(rep.morse_index));
        // determinant factors as (prod b) * S with prod b > 0
        let prod: f64 = rep.b_values.iter().product();
        assert!(prod > 0.0);
        assert!((rep.determinant - prod * rep.s_value).abs() < 1e-9 * rep.determinant.abs().max(1.0));
    }
}

#[test]
fn equal_radii_constructions() {
    assert!((fermat_triangle_inradius(1.0, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-12);
    let q = convex_quad_inradius(1.0, 1.0, 1.0, 1.0).unwrap().unwrap();
    assert!((q - 0.5f64.sqrt()).abs() < 1e-12);
    // the inscribed square
    let c = snellius_from_socle(&radii(&[1.0; 4]), q, &[1, 1, 1, 1], 1).unwrap();
    assert!((perimeter(&radii(&[1.0; 4]), &c).unwrap() - 4.0 * 2f64.sqrt()).abs() < 1e-12);
}

#[test]
fn quadrilateral_needs_room() {
    // one circle much smaller than the rest: no convex quadrilateral wraps around it
    assert_eq!(convex_quad_inradius(0.1, 5.0, 5.0, 5.0).unwrap(), None);
    assert!(convex_quad_inradius(-1.0, 1.0, 1.0, 1.0).is_err());
}

#[test]
fn socle_roots_give_stationary_circuits() {
    let r = radii(&[2.0, 2.5, 3.0, 3.5]);
    let eps = [1, 1, 1, 1];
    let roots = socle_roots(&r, &eps).unwrap();
    assert!(!roots.is_empty());
    for sigma in roots {
        assert!(socle_residual(&r, sigma, &eps).unwrap().abs() < 1e-9);
        if let Ok(c) = snellius_from_socle(&r, sigma, &eps, 1) {
            assert!(gradient_norm(&r, &c).unwrap() < 1e-9);
            let l = perimeter(&r, &c).unwrap();
            assert!((l - snellius_perimeter(&r, sigma, &eps)).abs() < 1e-9);
        }
    }
}

#[test]
fn triangle_closure_for_many_triples() {
    for (a, b, c) in [(0.7, 1.9, 4.2), (3.0, 3.1, 3.2), (0.2, 5.0, 5.5)] {
        let t = fermat_triangle_inradius(a, b, c).unwrap();
        let sum: f64 = [a, b, c].iter().map(|x| (t / x).acos()).sum();
        assert!((sum - PI).abs() < 1e-10);
    }
}

#[test]
fn three_circle_catalogue_is_order_free() {
    let a = three_cc_catalogue([1.0, 2.0, 3.0]).unwrap();
    let b = three_cc_catalogue([3.0, 1.0, 2.0]).unwrap();
    assert_eq!(a, b);
    assert_eq!(three_cc_catalogue([2.0, 2.0, 3.0]), Err(Error::NonDistinctRadii));
}

#[test]
fn partially_aligned_count_across_tangency() {
    // circle 2 against the triangle formed by circles 1, 3, 4
    let sigma = fermat_triangle_inradius(3.0, 3.0, 4.6).unwrap();
    let count = |r2: f64| partially_aligned_circuits(&radii(&[3.0, r2, 3.0, 4.6]), 1).unwrap().count;
    assert_eq!(count(sigma + 1e-3), 2);
    assert_eq!(count(sigma), 1);
    assert_eq!(count(sigma - 1e-3), 0);
}

#[test]
fn partially_aligned_circuits_are_stationary() {
    let r = radii(&[3.0, 2.53, 3.0, 4.6]);
    let pa = partially_aligned_circuits(&r, 1).unwrap();
    assert_eq!(pa.configs.len(), 2 * pa.count);
    for c in &pa.configs {
        assert!(gradient_norm(&r, c).unwrap() < 1e-9);
    }
}
