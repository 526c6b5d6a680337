//! Degree-1 homogeneous harmonic functions on rotationally symmetric cones and
//! their gradient images.

mod herisson;
mod legendre;
mod one_phase;
mod profile;
mod spectral;

pub use herisson::{
    boundary_normal_angles, gradient_image, hausdorff_distance, herisson_surface, verify_prop1,
    verify_prop2, HerissonGrid, HerissonSample, Prop1Report, Prop2Report, HERISSON_STEP,
    MIN_CURVATURE, MIN_HESSIAN_RANK,
};
pub use legendre::{legendre_q1, legendre_q1_prime, legendre_q1_second, q1_positive_root};
pub use one_phase::{
    solve_one_phase, solve_pr2_cap, BoundaryCheck, OnePhaseKind, OnePhaseSolution,
};
pub use profile::{
    gradient_map, hessian, hessian_eigenvalues, spherical_angles, spherical_frame,
    AxisymmetricHarmonic, ConeDomain, CosTwoTheta, Profile, RadialNorm,
};
pub use spectral::{spectral_disk_check, SpectralDiskCheck};
