//! Executable versions of the arguments: circle finding, the integer `I`,
//! product hypotheses, the `β` bound and its contradiction bundles, symmetry
//! bounds, and a census over connected sums.

mod census;
mod circle;
mod lemma52;
mod symmetry;
mod thm34;

pub use census::{finiteness_census, CensusReport};
pub use circle::{find_circle, index_I, EquivariantDegree4Class};
pub use lemma52::{synthetic_projective_ring, Lemma52Bundles, Lemma52Report};
pub use symmetry::{alpha, alpha_groups, simple_group, symmetry_bounds, SymmetryBoundInput};
pub use thm34::{check_theorem34_hypotheses, Theorem34Report};
