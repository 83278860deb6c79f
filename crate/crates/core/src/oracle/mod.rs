//! Independent numerical references: quadrature, finite differences,
//! brute-force source integrals and loop integrals.

pub mod brute;
pub mod fd;
pub mod path;
pub mod quad;

pub use brute::{brute_phi_cylinder, brute_phi_disk, brute_phi_tube, brute_psi, clearance, MIN_CLEARANCE};
pub use fd::{cylinder_surfaces, fd_gradient, fd_laplacian_cyl, fd_psi_operator, observed_order, Surface};
pub use path::{conjugate_gradient, loop_integral, loop_integral_grad, rectangle};
pub use quad::{quad_1d, quad_2d, quad_3d, QuadratureSpec};
