//! Exact twisted Dirac indices of quasitoric manifolds.
//!
//! The crate computes the Spin^c index twisted by the elliptic-genus bundle
//! `R(V, W)` (Euler characteristic, signature, Â-genus, elliptic genus and the
//! Witten genus as q-series) from the combinatorial data of a quasitoric
//! manifold: a simple polytope together with a characteristic matrix. Two
//! independent routes are implemented and cross-checked:
//!
//! - fixed-point localization with exact Laurent interpolation in the circle
//!   character ([`genus::equivariant_index`]),
//! - integration of characteristic-class expressions in the rational face ring
//!   ([`genus::cohomological_index`]).
//!
//! On top of these, [`theorems`] turns vanishing and finiteness arguments for
//! torus actions into executable checks, and [`cli`] provides the manifest
//! format and report commands used by the `torus-genus` binary.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run --example projective_spaces
//! cargo run --example witten_vanishing
//! cargo run --example face_ring
//! cargo run --example circle_finder
//! cargo run --example symmetry_bounds -- A3 G2 8
//! cargo run --example manifest_cli
//! cargo run --release --example census -- 3 2 1
//! ```

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactalg;
pub mod genus;
pub mod polytope;
pub mod theorems;

pub use error::{Error, Result};
