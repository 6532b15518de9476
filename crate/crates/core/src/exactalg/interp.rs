//! Exact Laurent interpolation from point samples.
//!
//! A Laurent polynomial `f(x) = Σ_{j<N} c_j x^{lo + step·j}` is recovered by
//! dividing out `x^lo` and solving the Vandermonde system in `z = x^step` with
//! Newton divided differences. Samples beyond the first `N` are held out and
//! must be reproduced exactly.

use num_traits::{One, Zero};

use super::laurent::HalfLaurent;
use super::rational::{fmt_rational, int, pow_i, Rational};
use crate::error::{Error, Result};

/// Deterministic sample points `2, 3, 4, …`.
pub fn sample_points(count: usize) -> Vec<Rational> {
    (0..count).map(|i| int(i as i64 + 2)).collect()
}

/// Recovers the Laurent polynomial in `t` with integer exponents in
/// `[min_exp, max_exp]` through the given samples `(t, f(t))`.
pub fn laurent_interpolate(
    samples: &[(Rational, Rational)],
    min_exp: i64,
    max_exp: i64,
) -> Result<HalfLaurent> {
    let coeffs = fit(samples, min_exp, max_exp, 1)?;
    Ok(HalfLaurent::from_terms(
        coeffs.into_iter().map(|(e, c)| (2 * e, c)),
    ))
}

/// Recovers a character from samples taken at `s = t^{1/2}`.
///
/// Exponents of `s` run over `lo, lo+2, …, hi` (all of one parity); they are
/// exactly the doubled exponents of the result.
pub fn interpolate_sqrt(samples: &[(Rational, Rational)], lo: i64, hi: i64) -> Result<HalfLaurent> {
    if (hi - lo) % 2 != 0 {
        return Err(Error::Argument(format!(
            "doubled exponent range [{lo}, {hi}] mixes parities"
        )));
    }
    let coeffs = fit(samples, lo, hi, 2)?;
    Ok(HalfLaurent::from_terms(coeffs))
}

/// Number of unknowns for a range with the given step.
pub fn unknowns(lo: i64, hi: i64, step: i64) -> usize {
    if hi < lo {
        0
    } else {
        ((hi - lo) / step + 1) as usize
    }
}

fn fit(
    samples: &[(Rational, Rational)],
    lo: i64,
    hi: i64,
    step: i64,
) -> Result<Vec<(i64, Rational)>> {
    for (x, _) in samples {
        if x.is_zero() || x.is_one() || *x == -Rational::one() {
            return Err(Error::Argument(format!(
                "sample point {} is not allowed",
                fmt_rational(x)
            )));
        }
    }
    let n = unknowns(lo, hi, step);
    if samples.len() < n {
        return Err(Error::Argument(format!(
            "{} samples cannot determine {n} coefficients",
            samples.len()
        )));
    }
    let (fit_part, held_out) = samples.split_at(n);

    let z: Vec<Rational> = fit_part.iter().map(|(x, _)| pow_i(x, step)).collect();
    let mut dd: Vec<Rational> = fit_part.iter().map(|(x, y)| y * pow_i(x, -lo)).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = &z[i] - &z[i - level];
            if denom.is_zero() {
                return Err(Error::Interpolation(format!(
                    "sample points collide: {} and {}",
                    fmt_rational(&fit_part[i].0),
                    fmt_rational(&fit_part[i - level].0)
                )));
            }
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }

    // Newton form to monomial coefficients in z.
    let mut poly: Vec<Rational> = Vec::with_capacity(n);
    for k in (0..n).rev() {
        // poly ← poly·(z − z_k) + dd_k
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &z[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly.truncate(n);

    let result: Vec<(i64, Rational)> = poly
        .into_iter()
        .enumerate()
        .map(|(j, c)| (lo + step * j as i64, c))
        .filter(|(_, c)| !c.is_zero())
        .collect();

    for (x, y) in held_out {
        let fitted = result
            .iter()
            .map(|(e, c)| c * pow_i(x, *e))
            .fold(Rational::zero(), |a, b| a + b);
        if &fitted != y {
            return Err(Error::Consistency {
                point: fmt_rational(x),
                fitted: fmt_rational(&fitted),
                sampled: fmt_rational(y),
            });
        }
    }
    Ok(result)
}
