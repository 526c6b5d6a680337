//! Numerical substrate: Laurent polynomials, root finding, quadrature and
//! finite-difference surface jets.

pub mod jet;
pub mod laurent;
pub mod quadrature;
pub mod roots;

pub use jet::{curvatures, surface_jet, CurvatureRecord, SurfaceJet, Vec3};
pub use laurent::LaurentPoly;
pub use quadrature::{circle_polyline, integrate_path, GaussLegendre};
pub use roots::find_root;
