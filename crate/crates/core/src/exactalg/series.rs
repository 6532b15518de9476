use std::fmt;

use num_traits::{One, Zero};

use super::laurent::HalfLaurent;
use super::rational::{fmt_rational, Rational};
use super::Coefficient;
use crate::error::{Error, Result};

/// Power series in `q` truncated at a fixed order; coefficient `i` is the
/// coefficient of `q^i`. Arithmetic never reads beyond the truncation order.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries<T> {
    coeffs: Vec<T>,
}

/// q-series whose coefficients are characters of the circle.
pub type LaurentQSeries = QSeries<HalfLaurent>;

/// q-series with rational coefficients.
pub type RationalQSeries = QSeries<Rational>;

impl<T: Coefficient> QSeries<T> {
    /// Builds a series of the given order from leading coefficients; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn new(order: usize, mut coeffs: Vec<T>, template: &T) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(template.zero_like());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize, template: &T) -> Self {
        Self::new(order, Vec::new(), template)
    }

    pub fn one(order: usize, template: &T) -> Self {
        Self::constant(order, template.one_like())
    }

    pub fn constant(order: usize, c: T) -> Self {
        let template = c.zero_like();
        Self::new(order, vec![c], &template)
    }

    /// `c · q^k` (zero if `k` exceeds the order).
    pub fn monomial(order: usize, k: usize, c: T) -> Self {
        let template = c.zero_like();
        let mut coeffs = vec![template.clone(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_nil())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let template = self.coeffs[0].zero_like();
        let mut out = vec![template; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_nil() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_nil() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse up to the truncation order. The `q^0`
    /// coefficient must be a unit of the coefficient ring.
    pub fn try_invert(&self) -> Result<Self> {
        let lead_inv = self.coeffs[0].try_inverse().ok_or_else(|| {
            Error::NotInvertible(format!("q^0 coefficient {:?} is not a unit", self.coeffs[0]))
        })?;
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(lead_inv.clone());
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                if self.coeffs[j].is_nil() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&lead_inv).scale(&-Rational::one()));
        }
        Ok(Self { coeffs: out })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_coeff(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    /// Applies `f` coefficientwise.
    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> QSeries<U> {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Product of a nonempty list of series of equal order.
    pub fn product<'a, I>(order: usize, template: &T, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
        T: 'a,
    {
        let mut acc = Self::one(order, template);
        for s in iter {
            acc = acc.try_mul(s)?;
        }
        Ok(acc)
    }
}

impl RationalQSeries {
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Self {
            coeffs: values.iter().map(|v| Rational::from_integer((*v).into())).collect(),
        }
    }
}

impl LaurentQSeries {
    /// Evaluates every coefficient at `t = 1`.
    pub fn at_one(&self) -> RationalQSeries {
        self.map(|c| c.at_one())
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for QSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})q"),
                _ => format!("({c})q^{k}"),
            })
            .collect();
        write!(f, "{} + O(q^{})", parts.join(" + "), self.coeffs.len())
    }
}

impl<T: Coefficient> fmt::Debug for QSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn rs(v: &[i64]) -> RationalQSeries {
        RationalQSeries::from_i64(v)
    }

    #[test]
    fn difference_of_squares() {
        let a = rs(&[1, 1, 0]);
        let b = rs(&[1, -1, 0]);
        assert_eq!(a.try_mul(&b).unwrap(), rs(&[1, 0, -1]));
    }

    #[test]
    fn identity_multiplication() {
        let a = rs(&[3, -2, 7, 1]);
        let one = RationalQSeries::one(3, &int(0));
        assert_eq!(a.try_mul(&one).unwrap(), a);
    }

    #[test]
    fn geometric_series_times_one_minus_q() {
        let geo = rs(&[1, 1, 1, 1, 1, 1]);
        let b = rs(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(geo.try_mul(&b).unwrap(), rs(&[1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn mismatched_orders() {
        let err = rs(&[1, 1]).try_mul(&rs(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
    }

    #[test]
    fn invert_one_minus_q() {
        assert_eq!(rs(&[1, -1, 0, 0]).try_invert().unwrap(), rs(&[1, 1, 1, 1]));
    }

    #[test]
    fn invert_square_of_one_minus_q() {
        // (1-q)^2 = 1 - 2q + q^2
        assert_eq!(rs(&[1, -2, 1]).try_invert().unwrap(), rs(&[1, 2, 3]));
    }

    #[test]
    fn invert_character_monomial() {
        let t = LaurentQSeries::constant(2, HalfLaurent::t_pow(1));
        let inv = t.try_invert().unwrap();
        assert_eq!(inv, LaurentQSeries::constant(2, HalfLaurent::t_pow(-1)));
    }

    #[test]
    fn non_monomial_lead_is_not_invertible() {
        let lead = HalfLaurent::one().plus(&HalfLaurent::t_pow(1));
        let s = LaurentQSeries::constant(1, lead);
        assert!(matches!(s.try_invert(), Err(Error::NotInvertible(_))));
        assert!(matches!(rs(&[0, 1]).try_invert(), Err(Error::NotInvertible(_))));
    }
}
