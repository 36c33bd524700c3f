//! Exact and analytic constructions: parades, Fermat triangles and
//! quadrilaterals, socle circuits and partially aligned circuits.

mod aligned;
mod parade;
mod socle;
mod triangle;

pub use aligned::{partially_aligned_circuits, partially_aligned_circuits_with_tol, PartialAlignment};
pub(crate) use parade::parade_epsilons;
pub use parade::{
    all_parade_signs, parade_config, parade_hessian, parade_perimeter, ParadeHessianReport, ParadeSigns,
};
pub use socle::{
    convex_quad_inradius, snellius_from_socle, snellius_perimeter, socle_residual, socle_roots, SocleCircuit,
};
pub use triangle::{fermat_triangle_inradius, three_cc_catalogue, CatalogueEntry};
