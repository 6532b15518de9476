use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{fmt_rational, int, pow_i, Rational};
use super::Coefficient;

/// Laurent polynomial in a formal character variable `t` whose exponents may
/// be half-integers.
///
/// Exponents are stored doubled: the key `k` stands for `t^{k/2}`. Equivalently
/// this is an ordinary Laurent polynomial in `s = t^{1/2}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c · t^{doubled/2}`.
    pub fn monomial(doubled: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(doubled, c);
        }
        Self { terms }
    }

    /// `t^e` for an integer exponent `e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(2 * e, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, doubled: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(doubled).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&doubled);
        }
    }

    pub fn coeff(&self, doubled: i64) -> Rational {
        self.terms.get(&doubled).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest and largest doubled exponent.
    pub fn doubled_range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Value at `s`, where `s = t^{1/2}`.
    pub fn eval_sqrt(&self, s: &Rational) -> Rational {
        // Horner from the top exponent down, then one shift by s^{lowest}.
        let mut iter = self.terms.iter().rev();
        let Some((&top, c)) = iter.next() else {
            return Rational::zero();
        };
        let mut acc = c.clone();
        let mut prev = top;
        for (&k, c) in iter {
            acc = acc * pow_i(s, prev - k) + c;
            prev = k;
        }
        acc * pow_i(s, prev)
    }

    /// Value at `t`. Fails (returns `None`) if a half-integer exponent occurs.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            if k % 2 != 0 {
                return None;
            }
            acc += c * pow_i(t, k / 2);
        }
        Some(acc)
    }

    /// Value at `t = 1`: the sum of coefficients (virtual dimension).
    pub fn at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes `t ↦ t^k` (in doubled exponents, `s ↦ s^k`).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }
}

impl Coefficient for HalfLaurent {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::one()
    }

    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// Only monomials are units.
    fn try_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Self::monomial(-k, c.recip()))
    }
}

impl From<Rational> for HalfLaurent {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for HalfLaurent {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let mut coeff = fmt_rational(c);
            if !first {
                if let Some(stripped) = coeff.strip_prefix('-') {
                    write!(f, " - ")?;
                    coeff = stripped.to_string();
                } else {
                    write!(f, " + ")?;
                }
            }
            first = false;
            let power = if k % 2 == 0 {
                format!("{}", k / 2)
            } else {
                format!("{}/2", k)
            };
            if *k == 0 {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "t^{power}")?;
            } else if coeff == "-1" {
                write!(f, "-t^{power}")?;
            } else {
                write!(f, "{coeff}*t^{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn monomial_inverse() {
        let t = HalfLaurent::t_pow(1);
        let inv = t.try_inverse().unwrap();
        assert_eq!(inv, HalfLaurent::t_pow(-1));
        assert!(HalfLaurent::one().plus(&t).try_inverse().is_none());
        assert!(HalfLaurent::zero().try_inverse().is_none());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = HalfLaurent::from_terms([(1, int(2)), (3, int(1))]);
        let b = HalfLaurent::monomial(1, int(2));
        let d = a.minus(&b);
        assert_eq!(d, HalfLaurent::monomial(3, int(1)));
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn half_exponent_evaluation() {
        // t^{1/2} + t^{-1/2} at s = 2 is 5/2.
        let f = HalfLaurent::from_terms([(1, int(1)), (-1, int(1))]);
        assert_eq!(f.eval_sqrt(&int(2)), rat(5, 2));
        assert_eq!(f.eval(&int(4)), None);
        assert_eq!(f.at_one(), int(2));
        assert_eq!(f.to_string(), "t^1/2 + t^-1/2");
    }
}
