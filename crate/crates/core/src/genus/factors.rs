//! The q-series factors of the twisting bundle, written once over any
//! coefficient ring. A line with first Chern class `x` enters only through
//! the exponentials `e^{±x}` and `e^{±x/2}`, supplied by the caller: powers of
//! `s = t^{1/2}` on the localization side, exponentials of classes on the
//! cohomology side.

use num_traits::One;

use crate::exactalg::{Coefficient, QSeries, Rational};
use crate::Result;

/// Exponentials of a line class `x`.
#[derive(Clone, Debug)]
pub(crate) struct LineExp<T> {
    /// `e^{x/2}`
    pub half: T,
    /// `e^{-x/2}`
    pub half_inv: T,
}

impl<T: Coefficient> LineExp<T> {
    fn full(&self) -> T {
        self.half.times(&self.half)
    }

    fn full_inv(&self) -> T {
        self.half_inv.times(&self.half_inv)
    }
}

/// `1 + a·q^k`.
fn binomial<T: Coefficient>(order: usize, k: usize, a: T) -> QSeries<T> {
    let one = a.one_like();
    let mut s = QSeries::one(order, &one);
    if k <= order {
        s = s.try_add(&QSeries::monomial(order, k, a)).expect("same order");
    }
    s
}

/// `∏_{k≥1} (1 + a_k q^k)` for a fixed coefficient `a`.
fn pochhammer<T: Coefficient>(order: usize, a: &T) -> Result<QSeries<T>> {
    let one = a.one_like();
    let mut acc = QSeries::one(order, &one);
    for k in 1..=order {
        acc = acc.try_mul(&binomial(order, k, a.clone()))?;
    }
    Ok(acc)
}

/// `∏_{k≥1} (1 - q^k)² / ((1 - e^{x} q^k)(1 - e^{-x} q^k))`.
pub(crate) fn q1<T: Coefficient>(order: usize, x: &LineExp<T>) -> Result<QSeries<T>> {
    let minus_one = x.half.one_like().scale(&-Rational::one());
    let num = pochhammer(order, &minus_one)?;
    let den = pochhammer(order, &x.full().scale(&-Rational::one()))?
        .try_mul(&pochhammer(order, &x.full_inv().scale(&-Rational::one()))?)?;
    num.try_mul(&num)?.try_mul(&den.try_invert()?)
}

/// `∏_{k≥1} (1 - e^{y} q^k)(1 - e^{-y} q^k) / (1 - q^k)²`.
pub(crate) fn q2_tail<T: Coefficient>(order: usize, y: &LineExp<T>) -> Result<QSeries<T>> {
    let minus_one = y.half.one_like().scale(&-Rational::one());
    let num = pochhammer(order, &y.full().scale(&-Rational::one()))?
        .try_mul(&pochhammer(order, &y.full_inv().scale(&-Rational::one()))?)?;
    let den = pochhammer(order, &minus_one)?;
    num.try_mul(&den.try_mul(&den)?.try_invert()?)
}

/// `(1 - e^{-y})` times [`q2_tail`].
pub(crate) fn q2<T: Coefficient>(order: usize, y: &LineExp<T>) -> Result<QSeries<T>> {
    let lead = y.half.one_like().minus(&y.full_inv());
    Ok(q2_tail(order, y)?.mul_coeff(&lead))
}

/// `(e^{b/2} + e^{-b/2}) ∏_{k≥1} (1 + e^{b} q^k)(1 + e^{-b} q^k) / (1 + q^k)²`.
pub(crate) fn q3<T: Coefficient>(order: usize, b: &LineExp<T>) -> Result<QSeries<T>> {
    let one = b.half.one_like();
    let lead = b.half.plus(&b.half_inv);
    let num = pochhammer(order, &b.full())?.try_mul(&pochhammer(order, &b.full_inv())?)?;
    let den = pochhammer(order, &one)?;
    Ok(num.try_mul(&den.try_mul(&den)?.try_invert()?)?.mul_coeff(&lead))
}

/// `∏_{k≥1} (1 - q^k)`.
#[cfg(test)]
fn euler_function(order: usize) -> Result<QSeries<Rational>> {
    pochhammer(order, &-Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, HalfLaurent, RationalQSeries};

    fn trivial() -> LineExp<Rational> {
        LineExp { half: Rational::one(), half_inv: Rational::one() }
    }

    #[test]
    fn trivial_lines() {
        let order = 4;
        assert_eq!(q1(order, &trivial()).unwrap(), RationalQSeries::one(order, &int(0)));
        assert!(q2(order, &trivial()).unwrap().is_zero());
        let three = q3(order, &trivial()).unwrap();
        assert_eq!(three, RationalQSeries::constant(order, int(2)));
    }

    #[test]
    fn euler_function_coefficients() {
        // 1 - q - q² + q⁵ + …
        assert_eq!(euler_function(5).unwrap(), RationalQSeries::from_i64(&[1, -1, -1, 0, 0, 1]));
    }

    #[test]
    fn q3_leading_character() {
        let b = LineExp { half: HalfLaurent::monomial(1, int(1)), half_inv: HalfLaurent::monomial(-1, int(1)) };
        let s = q3(1, &b).unwrap();
        // (t^{1/2} + t^{-1/2})(1 + (t + t^{-1} - 2) q)
        assert_eq!(s.coeff(0).to_string(), "t^1/2 + t^-1/2");
        assert_eq!(s.coeff(1).at_one(), int(0));
    }
}
