//! Exact scalars, half-exponent Laurent polynomials, truncated q-series and
//! Laurent interpolation. Everything here is immutable and exact; no floating
//! point is used anywhere.

pub mod interp;
pub mod laurent;
pub mod linalg;
pub mod rational;
pub mod series;

pub use interp::{interpolate_sqrt, laurent_interpolate, sample_points};
pub use laurent::HalfLaurent;
pub use rational::{fmt_rational, int, rat, Rational};
pub use series::{LaurentQSeries, QSeries, RationalQSeries};

/// Coefficient ring of a [`QSeries`].
///
/// Zero and one are produced from an existing value so that rings carrying
/// runtime context (cohomology rings) can implement it.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse if the element is a unit.
    fn try_inverse(&self) -> Option<Self>;
}

/// `qseries_mul`: Cauchy product truncated at the common order.
pub fn qseries_mul<T: Coefficient>(a: &QSeries<T>, b: &QSeries<T>) -> crate::Result<QSeries<T>> {
    a.try_mul(b)
}

/// `qseries_invert`: inverse up to the truncation order.
pub fn qseries_invert<T: Coefficient>(a: &QSeries<T>) -> crate::Result<QSeries<T>> {
    a.try_invert()
}
