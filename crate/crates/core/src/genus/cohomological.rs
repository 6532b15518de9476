use super::factors::{q1, q2, q2_tail, q3, LineExp};
use super::BundleSpec;
use crate::cohomology::{a_hat_series, build_face_ring, spinc_c1, tangent_roots, CohomologyClass, FaceRing};
use crate::exactalg::rational::pow_i;
use crate::exactalg::{int, rat, QSeries, Rational, RationalQSeries};
use crate::polytope::QuasitoricManifold;
use crate::Result;

fn exponentials(x: &CohomologyClass) -> Result<LineExp<CohomologyClass>> {
    Ok(LineExp {
        half: x.scale(&rat(1, 2)).exp()?,
        half_inv: x.scale(&rat(-1, 2)).exp()?,
    })
}

/// Class of `L(Σ cᵢvᵢ)`.
pub fn line_class(ring: &FaceRing, coeffs: &[i64]) -> CohomologyClass {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(CohomologyClass::zero(ring), |acc, (i, &c)| {
            acc.add(&CohomologyClass::generator(ring, i).scale(&int(c)))
        })
}

/// `e^{c/2} Â Q₁(TM) Q₂(V) Q₃(W)` before integration.
pub fn index_integrand(
    ring: &FaceRing,
    v: &[CohomologyClass],
    w: &[CohomologyClass],
    c: &CohomologyClass,
    q_order: usize,
) -> Result<QSeries<CohomologyClass>> {
    let a_hat = a_hat_series(ring.top_degree());
    let roots = tangent_roots(ring);
    let mut lead = c.scale(&rat(1, 2)).exp()?;
    for x in &roots {
        lead = lead.mul(&x.apply_series(&a_hat)?);
    }
    let mut series = QSeries::constant(q_order, lead);
    for x in &roots {
        series = series.try_mul(&q1(q_order, &exponentials(x)?)?)?;
    }
    for y in v {
        series = series.try_mul(&q2(q_order, &exponentials(y)?)?)?;
    }
    for b in w {
        series = series.try_mul(&q3(q_order, &exponentials(b)?)?)?;
    }
    Ok(series)
}

/// `⟨e^{c/2} Â Q₁ Q₂ Q₃, [M]⟩` in an arbitrary ring with tangent roots and
/// Spin^c class, divided by `2^{trivial_w}`.
pub fn cohomological_index_in(
    ring: &FaceRing,
    v: &[CohomologyClass],
    w: &[CohomologyClass],
    trivial_w: usize,
    q_order: usize,
) -> Result<RationalQSeries> {
    let series = index_integrand(ring, v, w, &spinc_c1(ring), q_order)?;
    let scale = pow_i(&int(2), -(trivial_w as i64));
    Ok(series.map(|c| c.integrate_top() * &scale))
}

/// The twisted index from characteristic classes in the rational
/// cohomology ring.
pub fn cohomological_index(m: &QuasitoricManifold, bundles: &BundleSpec, q_order: usize) -> Result<RationalQSeries> {
    bundles.check_shape(m)?;
    let ring = build_face_ring(m)?;
    let v: Vec<CohomologyClass> = bundles.v.iter().map(|c| line_class(&ring, c)).collect();
    let w: Vec<CohomologyClass> = bundles.w.iter().map(|c| line_class(&ring, c)).collect();
    cohomological_index_in(&ring, &v, &w, bundles.trivial_w, q_order)
}

/// `e^{c₁(V)/2} Q₂(V)` expanded directly.
pub fn twisted_q2(ring: &FaceRing, v: &[CohomologyClass], q_order: usize) -> Result<QSeries<CohomologyClass>> {
    let c1 = v.iter().fold(CohomologyClass::zero(ring), |a, y| a.add(y));
    let mut series = QSeries::constant(q_order, c1.scale(&rat(1, 2)).exp()?);
    for y in v {
        series = series.try_mul(&q2(q_order, &exponentials(y)?)?)?;
    }
    Ok(series)
}

/// `e(V)·Q₂′(V)` with `Q₂′(V) = ∏ sinh(y/2)/(y/2) · ∏_k (…)/(1 - q^k)²`.
/// Equal to [`twisted_q2`] since `e^{y/2}(1 - e^{-y}) = y·sinh(y/2)/(y/2)`.
pub fn euler_form_of_q2(ring: &FaceRing, v: &[CohomologyClass], q_order: usize) -> Result<QSeries<CohomologyClass>> {
    let top = ring.top_degree();
    let a_hat = a_hat_series(top);
    let sinh_ratio = QSeries::new(top, a_hat, &Rational::from_integer(0.into()))
        .try_invert()?
        .into_coeffs();
    let mut euler = CohomologyClass::one(ring);
    let mut series = QSeries::one(q_order, &euler);
    for y in v {
        euler = euler.mul(y);
        let tail = q2_tail(q_order, &exponentials(y)?)?;
        series = series.try_mul(&tail.mul_coeff(&y.apply_series(&sinh_ratio)?))?;
    }
    Ok(series.mul_coeff(&euler))
}
