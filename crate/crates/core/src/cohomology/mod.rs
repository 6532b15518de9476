//! Rational cohomology of quasitoric manifolds as finite graded algebras.
//!
//! The linear relations are solved for the facet classes of the base vertex,
//! so a ring is stored as `ℚ[y₁…y_k]/J` with `k = b₂` and `yⱼ` the remaining
//! facet classes, which form an integral basis of `H²`. Normal forms are
//! computed degree by degree with exact row reduction.

mod beta;
mod class;
mod ring;

pub use beta::{beta_coefficients, beta_from_basis, connected_sum_basis};
pub use class::{a_hat_series, pontryagin_p1, spinc_c1, tangent_roots, CohomologyClass};
pub use ring::{build_face_ring, FaceRing, Monomial, Poly, RingPresentation};
