//! Combinatorial simple polytopes, characteristic matrices and quasitoric
//! manifolds.
//!
//! Facets are numbered `0..m` internally; vertices are sorted `n`-subsets of
//! facets. Polytopes carry no geometric realization.

mod enumerate;
mod manifold;
mod simple;

pub use enumerate::{enumerate_characteristic_matrices, CharacteristicSearch, SearchRoot};
pub use manifold::{CharacteristicMatrix, FixedPointDatum, QuasitoricManifold};
pub use simple::{Facet, SimplePolytope, Vertex};
