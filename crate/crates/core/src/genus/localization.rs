use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use super::factors::{q1, q2, q3, LineExp};
use super::{BundleSpec, EquivariantIndex};
use crate::exactalg::interp::{interpolate_sqrt, unknowns};
use crate::exactalg::rational::pow_i;
use crate::exactalg::{int, Coefficient, HalfLaurent, LaurentQSeries, QSeries, Rational, RationalQSeries};
use crate::polytope::{FixedPointDatum, QuasitoricManifold};
use crate::{Error, Result};

const HELD_OUT: usize = 3;

fn character(weight: i64) -> LineExp<HalfLaurent> {
    LineExp {
        half: HalfLaurent::monomial(weight, Rational::one()),
        half_inv: HalfLaurent::monomial(-weight, Rational::one()),
    }
}

fn line_weight(fp: &FixedPointDatum, coeffs: &[i64], xi: &[i64]) -> i64 {
    fp.restrict(coeffs).iter().zip(xi).map(|(a, b)| a * b).sum()
}

/// Polynomial part of a fixed-point contribution: everything except the
/// tangent denominator `∏ (s^{w} - s^{-w})`, with `s = t^{1/2}`.
///
/// Lines of `V` and `W` are lifted so that the circle acts trivially on
/// their fibers over `base`.
#[derive(Clone, Debug)]
pub struct LocalNumerator {
    pub series: LaurentQSeries,
    /// Tangent weights `⟨w_k, ξ⟩`.
    pub weights: Vec<i64>,
    /// Parity of every `s`-exponent of the full contribution.
    pub parity: i64,
}

pub fn fixed_point_numerator(
    fp: &FixedPointDatum,
    base: &FixedPointDatum,
    xi: &[i64],
    bundles: &BundleSpec,
    gamma: &[i64],
    q_order: usize,
) -> Result<LocalNumerator> {
    let lifted = |c: &[i64]| line_weight(fp, c, xi) - line_weight(base, c, xi);
    let weights = fp.circle_weights(xi);
    if weights.contains(&0) {
        return Err(Error::DegenerateCircle {
            xi: xi.to_vec(),
            vertex: fp.vertex.iter().map(|f| f + 1).collect(),
        });
    }
    let c = line_weight(fp, gamma, xi);
    let lead = HalfLaurent::monomial(c, int(fp.orientation as i64) / pow_i(&int(2), bundles.trivial_w as i64));
    let mut series = QSeries::constant(q_order, lead);
    let mut cache: HashMap<i64, LaurentQSeries> = HashMap::new();
    for &w in &weights {
        let f = match cache.get(&w) {
            Some(f) => f.clone(),
            None => {
                let f = q1(q_order, &character(w))?;
                cache.insert(w, f.clone());
                f
            }
        };
        series = series.try_mul(&f)?;
    }
    for v in &bundles.v {
        series = series.try_mul(&q2(q_order, &character(lifted(v)))?)?;
    }
    let mut w_mass = 0;
    for w in &bundles.w {
        let b = lifted(w);
        w_mass += b;
        series = series.try_mul(&q3(q_order, &character(b))?)?;
    }
    let parity = (c + w_mass + weights.iter().sum::<i64>()).rem_euclid(2);
    Ok(LocalNumerator { series, weights, parity })
}

/// The fixed point over the base vertex.
pub fn base_point(m: &QuasitoricManifold) -> &FixedPointDatum {
    let v = m.polytope().base_vertex();
    m.fixed_points().iter().find(|p| &p.vertex == v).expect("base vertex is a fixed point")
}

/// Sums of contributions at integer `s`, in integer arithmetic over a common
/// denominator. With `P` the numerator scaled by `scale` and shifted by
/// `s^{-shift}`, each fixed point contributes
/// `± P(s)·s^{shift + Σ|w|} / (scale·∏ (s^{2|w|} - 1))`.
struct Sampler {
    scale: BigInt,
    shift: i64,
    /// Per fixed point and `q`-degree: `(exponent - shift, coefficient·scale)`,
    /// highest exponent first.
    polys: Vec<Vec<Vec<(u64, BigInt)>>>,
    weights: Vec<Vec<u64>>,
    signs: Vec<bool>,
}

impl Sampler {
    fn new(locals: &[LocalNumerator], q_order: usize) -> Self {
        let coeffs = || locals.iter().flat_map(|l| l.series.coeffs().iter());
        let scale = coeffs()
            .flat_map(|c| c.terms().map(|(_, r)| r.denom().clone()))
            .fold(BigInt::one(), |a, d| a.lcm(&d));
        let shift = coeffs().filter_map(|c| c.doubled_range()).map(|r| r.0).min().unwrap_or(0);
        let polys = locals
            .iter()
            .map(|l| {
                (0..=q_order)
                    .map(|d| {
                        let mut terms: Vec<(u64, BigInt)> = l
                            .series
                            .coeff(d)
                            .terms()
                            .map(|(e, c)| ((e - shift) as u64, (c * Rational::from_integer(scale.clone())).to_integer()))
                            .collect();
                        terms.reverse();
                        terms
                    })
                    .collect()
            })
            .collect();
        Self {
            scale,
            shift,
            polys,
            weights: locals.iter().map(|l| l.weights.iter().map(|w| w.unsigned_abs()).collect()).collect(),
            signs: locals.iter().map(|l| l.weights.iter().filter(|&&w| w < 0).count() % 2 == 1).collect(),
        }
    }

    fn sample(&self, s: &BigInt) -> Vec<Rational> {
        let dens: Vec<BigInt> = self
            .weights
            .iter()
            .map(|ws| ws.iter().map(|&w| Pow::pow(s, 2 * w) - 1u32).product())
            .collect();
        let common = dens.iter().fold(BigInt::one(), |a, d| a.lcm(d));
        let factors: Vec<BigInt> = dens
            .iter()
            .zip(&self.weights)
            .zip(&self.signs)
            .map(|((d, ws), &neg)| {
                let f = (&common / d) * Pow::pow(s, ws.iter().sum::<u64>());
                if neg {
                    -f
                } else {
                    f
                }
            })
            .collect();
        let (num_shift, den_shift) = if self.shift >= 0 {
            (Pow::pow(s, self.shift as u64), BigInt::one())
        } else {
            (BigInt::one(), Pow::pow(s, self.shift.unsigned_abs()))
        };
        let denominator = &common * &self.scale * den_shift;
        (0..self.polys.first().map_or(0, Vec::len))
            .map(|d| {
                let mut total = BigInt::zero();
                for (poly, f) in self.polys.iter().zip(&factors) {
                    if let Some(v) = horner(&poly[d], s) {
                        total += v * f;
                    }
                }
                Rational::new(total * &num_shift, denominator.clone())
            })
            .collect()
    }
}

/// `Σ c_k s^{e_k}` for terms with descending exponents; `None` if empty.
fn horner(terms: &[(u64, BigInt)], s: &BigInt) -> Option<BigInt> {
    let ((top, first), rest) = terms.split_first()?;
    let mut acc = first.clone();
    let mut prev = *top;
    for (e, c) in rest {
        acc = acc * Pow::pow(s, prev - e) + c;
        prev = *e;
    }
    Some(acc * Pow::pow(s, prev))
}

fn denominator(weights: &[i64], s: &Rational) -> Rational {
    weights
        .iter()
        .map(|&w| pow_i(s, w) - pow_i(s, -w))
        .fold(Rational::one(), |a, b| a * b)
}

/// Contribution of one fixed point evaluated at `s = t^{1/2}`.
pub fn fixed_point_contribution(
    fp: &FixedPointDatum,
    base: &FixedPointDatum,
    xi: &[i64],
    bundles: &BundleSpec,
    gamma: &[i64],
    s: &Rational,
    q_order: usize,
) -> Result<RationalQSeries> {
    if s.is_zero() || s.is_one() || *s == -Rational::one() {
        return Err(Error::Argument("sample point must avoid 0 and ±1".into()));
    }
    let local = fixed_point_numerator(fp, base, xi, bundles, gamma, q_order)?;
    let den = denominator(&local.weights, s).recip();
    Ok(local.series.map(|c| c.eval_sqrt(s) * &den))
}

pub(crate) fn localize(
    m: &QuasitoricManifold,
    xi: &[i64],
    bundles: &BundleSpec,
    gamma: &[i64],
    q_order: usize,
) -> Result<EquivariantIndex> {
    m.check_generic(xi)?;
    bundles.check_shape(m)?;
    let base = base_point(m);
    let locals: Vec<LocalNumerator> = m
        .fixed_points()
        .par_iter()
        .map(|fp| fixed_point_numerator(fp, base, xi, bundles, gamma, q_order))
        .collect::<Result<_>>()?;
    let parity = locals[0].parity;
    if let Some(bad) = locals.iter().position(|l| l.parity != parity) {
        return Err(Error::Parity(format!(
            "fixed point {:?} has exponent parity {}, expected {parity}",
            m.fixed_points()[bad].vertex.iter().map(|f| f + 1).collect::<Vec<_>>(),
            locals[bad].parity
        )));
    }

    // Degree of a sum of fractions is at most the largest degree of a summand,
    // at infinity and at zero alike.
    let mut ranges = Vec::with_capacity(q_order + 1);
    for d in 0..=q_order {
        let mut range: Option<(i64, i64)> = None;
        for l in &locals {
            if let Some((lo, hi)) = l.series.coeff(d).doubled_range() {
                let mass: i64 = l.weights.iter().map(|w| w.abs()).sum();
                let (lo, hi) = (lo + mass, hi - mass);
                range = Some(match range {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                });
            }
        }
        ranges.push(range);
    }
    let needed = ranges
        .iter()
        .flatten()
        .map(|&(lo, hi)| unknowns(lo, hi, 2))
        .max()
        .unwrap_or(0)
        + HELD_OUT;
    let points: Vec<Rational> = (0..needed).map(|i| int(i as i64 + 2)).collect();
    let sampler = Sampler::new(&locals, q_order);
    let values: Vec<Vec<Rational>> = points.par_iter().map(|s| sampler.sample(s.numer())).collect();

    let mut coeffs = Vec::with_capacity(q_order + 1);
    for (d, range) in ranges.iter().enumerate() {
        let Some((lo, hi)) = *range else {
            coeffs.push(HalfLaurent::zero());
            continue;
        };
        let hi = if hi < lo { lo - 2 } else { hi };
        let samples: Vec<(Rational, Rational)> =
            points.iter().zip(&values).map(|(s, v)| (s.clone(), v[d].clone())).collect();
        coeffs.push(interpolate_sqrt(&samples, lo, hi)?);
    }
    Ok(EquivariantIndex {
        xi: xi.to_vec(),
        series: QSeries::new(q_order, coeffs, &HalfLaurent::zero()),
    })
}

/// Euler characteristic as the value at `t = 1` of the localized de Rham
/// Lefschetz number: each fixed point contributes
/// `∏ (1 - t^{w})(1 - t^{-w})` over the same product.
pub fn euler_characteristic(m: &QuasitoricManifold) -> Result<Rational> {
    let xi = m.generic_circle(&[]);
    let factors: Vec<HalfLaurent> = m
        .fixed_points()
        .iter()
        .map(|fp| {
            fp.circle_weights(&xi).iter().fold(HalfLaurent::one(), |acc, &w| {
                let one = HalfLaurent::one();
                acc.times(&one.minus(&HalfLaurent::t_pow(w)).times(&one.minus(&HalfLaurent::t_pow(-w))))
            })
        })
        .collect();
    let points: Vec<Rational> = (0..1 + HELD_OUT).map(|i| int(i as i64 + 2)).collect();
    let samples: Vec<(Rational, Rational)> = points
        .iter()
        .map(|s| {
            let total = factors
                .iter()
                .map(|f| f.eval_sqrt(s) / f.eval_sqrt(s))
                .fold(Rational::zero(), |a, b| a + b);
            (s.clone(), total)
        })
        .collect();
    Ok(interpolate_sqrt(&samples, 0, 0)?.at_one())
}
