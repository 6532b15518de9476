use std::fmt;

use num_traits::{One, Zero};

use super::ring::{FaceRing, Monomial, Poly};
use crate::exactalg::rational::pow_i;
use crate::exactalg::{fmt_rational, int, Coefficient, Rational, RationalQSeries};
use crate::{Error, Result};

/// Element of a [`FaceRing`], stored as one coordinate vector per degree.
///
/// Classes need not be homogeneous; mixed classes arise as coefficients of
/// q-series and as characteristic-class expressions.
#[derive(Clone, PartialEq)]
pub struct CohomologyClass {
    ring: FaceRing,
    comps: Vec<Vec<Rational>>,
}

impl CohomologyClass {
    pub fn zero(ring: &FaceRing) -> Self {
        let comps = (0..=ring.top_degree()).map(|d| vec![Rational::zero(); ring.dim(d)]).collect();
        Self { ring: ring.clone(), comps }
    }

    pub fn one(ring: &FaceRing) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &FaceRing, c: Rational) -> Self {
        let mut out = Self::zero(ring);
        out.comps[0][0] = c;
        out
    }

    /// Homogeneous class with the given coordinates on `ring.basis(d)`.
    pub fn from_coordinates(ring: &FaceRing, d: usize, coords: Vec<Rational>) -> Result<Self> {
        if d > ring.top_degree() || coords.len() != ring.dim(d) {
            return Err(Error::Shape(format!(
                "degree {d} needs {} coordinates, got {}",
                ring.dim(d),
                coords.len()
            )));
        }
        let mut out = Self::zero(ring);
        out.comps[d] = coords;
        Ok(out)
    }

    pub fn from_poly(ring: &FaceRing, p: &Poly) -> Self {
        let mut out = Self::zero(ring);
        for (mono, c) in p.terms() {
            out.add_monomial(mono, c);
        }
        out
    }

    /// Degree-1 class `Σ coeffs[i]·yᵢ` in the free variables.
    pub fn linear(ring: &FaceRing, coeffs: &[Rational]) -> Self {
        Self::from_poly(ring, &Poly::linear(coeffs))
    }

    /// The class of the `i`-th generator (facet class `v_{i+1}`).
    pub fn generator(ring: &FaceRing, i: usize) -> Self {
        Self::linear(ring, ring.generator_form(i))
    }

    fn add_monomial(&mut self, mono: &Monomial, c: &Rational) {
        if let Some(nf) = self.ring.normal_form(mono) {
            let d: u32 = mono.iter().sum();
            for (x, y) in self.comps[d as usize].iter_mut().zip(nf) {
                *x += c * y;
            }
        }
    }

    pub fn ring(&self) -> &FaceRing {
        &self.ring
    }

    pub fn component(&self, d: usize) -> &[Rational] {
        &self.comps[d]
    }

    /// Keep only the degree-`d` part.
    pub fn part(&self, d: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        out.comps[d] = self.comps[d].clone();
        out
    }

    /// Degree if the class is nonzero and homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut nonzero = (0..self.comps.len()).filter(|&d| self.comps[d].iter().any(|c| !c.is_zero()));
        let d = nonzero.next()?;
        nonzero.next().is_none().then_some(d)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().flatten().all(Zero::is_zero)
    }

    /// `⟨c, [M]⟩`: only homogeneous top-degree classes (or zero) are accepted.
    pub fn integrate(&self) -> Result<Rational> {
        let top = self.ring.top_degree();
        match self.degree() {
            None if self.is_zero() => Ok(Rational::zero()),
            Some(d) if d == top => Ok(&self.comps[top][0] * self.ring.top_value()),
            d => Err(Error::Argument(format!(
                "integration needs degree {top} (real degree {}), got {d:?}",
                2 * top
            ))),
        }
    }

    /// Integral of the top-degree part, ignoring lower degrees.
    pub fn integrate_top(&self) -> Rational {
        &self.comps[self.ring.top_degree()][0] * self.ring.top_value()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.comps.iter_mut().zip(&other.comps) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for x in out.comps.iter_mut().flatten() {
            *x *= r;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let top = self.ring.top_degree();
        let mut out = Self::zero(&self.ring);
        for (d1, a) in self.comps.iter().enumerate() {
            for (d2, b) in other.comps.iter().enumerate().take(top + 1 - d1) {
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let mono: Monomial = self.ring.basis(d1)[i]
                            .iter()
                            .zip(&self.ring.basis(d2)[j])
                            .map(|(p, q)| p + q)
                            .collect();
                        out.add_monomial(&mono, &(x * y));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ring), |acc, _| acc.mul(self))
    }

    /// `Σ aₖ·cᵏ` for a class `c` without degree-0 part; terms beyond the top
    /// degree vanish.
    pub fn apply_series(&self, coeffs: &[Rational]) -> Result<Self> {
        if self.comps[0].iter().any(|c| !c.is_zero()) {
            return Err(Error::Argument("power series needs a nilpotent argument".into()));
        }
        let top = self.ring.top_degree();
        let mut out = Self::zero(&self.ring);
        for k in (0..coeffs.len().min(top + 1)).rev() {
            out = out.mul(self).add(&Self::constant(&self.ring, coeffs[k].clone()));
        }
        Ok(out)
    }

    /// `exp(c)` for nilpotent `c`.
    pub fn exp(&self) -> Result<Self> {
        let top = self.ring.top_degree();
        let mut coeffs = vec![Rational::one()];
        for k in 1..=top {
            let prev = coeffs[k - 1].clone();
            coeffs.push(prev / int(k as i64));
        }
        self.apply_series(&coeffs)
    }

    /// Inverse when the degree-0 part is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let a0 = self.comps[0][0].clone();
        if a0.is_zero() {
            return None;
        }
        let nil = self.sub(&Self::constant(&self.ring, a0.clone())).scale(&-a0.recip());
        let geometric = vec![Rational::one(); self.ring.top_degree() + 1];
        Some(nil.apply_series(&geometric).ok()?.scale(&a0.recip()))
    }
}

/// Coefficients of `(x/2)/sinh(x/2)` up to `x^order`.
pub fn a_hat_series(order: usize) -> Vec<Rational> {
    // sinh(x/2)/(x/2) = Σ x^{2k} / (2^{2k} (2k+1)!)
    let mut sinh = vec![Rational::zero(); order + 1];
    let mut fact = Rational::one();
    for (j, c) in sinh.iter_mut().enumerate() {
        if j > 0 {
            fact *= int(j as i64 + 1);
        }
        if j % 2 == 0 {
            *c = (&fact * pow_i(&int(2), j as i64)).recip();
        }
    }
    RationalQSeries::new(order, sinh, &Rational::zero())
        .try_invert()
        .expect("constant term is 1")
        .into_coeffs()
}

impl Coefficient for CohomologyClass {
    fn zero_like(&self) -> Self {
        Self::zero(&self.ring)
    }

    fn one_like(&self) -> Self {
        Self::one(&self.ring)
    }

    fn is_nil(&self) -> bool {
        self.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }

    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn scale(&self, r: &Rational) -> Self {
        CohomologyClass::scale(self, r)
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

fn superscript(e: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    e.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for CohomologyClass {
    /// Free variables print as `x` (one variable) or `x1, x2, …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.ring.free_variables();
        let mut terms = Vec::new();
        for (d, comp) in self.comps.iter().enumerate() {
            for (i, c) in comp.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mono: String = self.ring.basis(d)[i]
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        let name = if vars == 1 { "x".to_string() } else { format!("x{}", v + 1) };
                        if e == 1 {
                            name
                        } else {
                            format!("{name}{}", superscript(e))
                        }
                    })
                    .collect();
                let coeff = if mono.is_empty() {
                    fmt_rational(c)
                } else if c.is_one() {
                    String::new()
                } else if *c == -Rational::one() {
                    "-".into()
                } else {
                    fmt_rational(c)
                };
                terms.push(format!("{coeff}{mono}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl fmt::Debug for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CohomologyClass({self})")
    }
}

/// `p₁ = Σ rᵢ²` over the tangent roots.
pub fn pontryagin_p1(ring: &FaceRing) -> CohomologyClass {
    ring.root_forms()
        .iter()
        .map(|r| CohomologyClass::linear(ring, r).pow(2))
        .fold(CohomologyClass::zero(ring), |a, b| a.add(&b))
}

/// `c₁` of the Spin^c structure, `Σ γᵢvᵢ` for a quasitoric manifold.
pub fn spinc_c1(ring: &FaceRing) -> CohomologyClass {
    CohomologyClass::linear(ring, ring.spinc_form())
}

/// Tangent roots as degree-1 classes.
pub fn tangent_roots(ring: &FaceRing) -> Vec<CohomologyClass> {
    ring.root_forms().iter().map(|r| CohomologyClass::linear(ring, r)).collect()
}
