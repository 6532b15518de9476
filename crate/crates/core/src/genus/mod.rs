//! Twisted Spin^c indices `φ^c(M; V, W)`, circle-equivariant and plain.
//!
//! Two independent evaluations: fixed-point localization with exact
//! interpolation in `s = t^{1/2}` ([`equivariant_index`], [`index`]) and
//! integration in the cohomology ring ([`cohomological_index`]).

mod cohomological;
mod factors;
mod localization;

use std::fmt;

use crate::exactalg::{LaurentQSeries, Rational, RationalQSeries};
use crate::polytope::QuasitoricManifold;
use crate::{Error, Result};

pub use cohomological::{
    cohomological_index, cohomological_index_in, euler_form_of_q2, index_integrand, line_class, twisted_q2,
};
pub use localization::{
    base_point, euler_characteristic, fixed_point_contribution, fixed_point_numerator, LocalNumerator,
};

/// Sums of line bundles `V = ⊕ L(vᵢ-coefficients)` and `W` likewise.
///
/// `trivial_w` counts trivial complex lines that the listed `W` lines carry
/// beyond the intended bundle; each contributes a factor 2, which is divided
/// out. `W = TM` is realized as `⊕_{i=1}^m L(vᵢ) = TM ⊕ ℂ^{m-n}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BundleSpec {
    pub v: Vec<Vec<i64>>,
    pub w: Vec<Vec<i64>>,
    pub trivial_w: usize,
}

impl BundleSpec {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(v: Vec<Vec<i64>>, w: Vec<Vec<i64>>) -> Self {
        Self { v, w, trivial_w: 0 }
    }

    /// `V = 0`, `W = TM`.
    pub fn tangent_w(m: &QuasitoricManifold) -> Self {
        let facets = m.facet_count();
        let w = (0..facets).map(|i| (0..facets).map(|j| (i == j) as i64).collect()).collect();
        Self { v: Vec::new(), w, trivial_w: facets - m.dim() }
    }

    /// Lines on a product `M × M′` pulled back from the factor that owns
    /// facets `offset..offset+own` out of `total`.
    pub fn pull_back(&self, offset: usize, total: usize) -> Self {
        let lift = |c: &Vec<i64>| {
            let mut out = vec![0; total];
            out[offset..offset + c.len()].copy_from_slice(c);
            out
        };
        Self {
            v: self.v.iter().map(lift).collect(),
            w: self.w.iter().map(lift).collect(),
            trivial_w: self.trivial_w,
        }
    }

    pub(crate) fn check_shape(&self, m: &QuasitoricManifold) -> Result<()> {
        let facets = m.facet_count();
        if let Some(bad) = self.v.iter().chain(&self.w).find(|c| c.len() != facets) {
            return Err(Error::Argument(format!(
                "line {bad:?} needs {facets} facet coefficients"
            )));
        }
        Ok(())
    }

    /// Shape check plus `w₂(W) = 0`: the sum of the `W` lines must be even in
    /// `H²(M; ℤ)`.
    pub fn validate(&self, m: &QuasitoricManifold) -> Result<()> {
        self.check_shape(m)?;
        let mut sum = vec![0i64; m.facet_count()];
        for c in &self.w {
            for (s, x) in sum.iter_mut().zip(c) {
                *s += x;
            }
        }
        if !m.is_even_class(&sum) {
            return Err(Error::Argument(format!(
                "W is not spin: Σ of its lines {sum:?} is not divisible by 2"
            )));
        }
        Ok(())
    }
}

/// Circle-equivariant index: one Laurent polynomial in `t^{1/2}` per power
/// of `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantIndex {
    pub xi: Vec<i64>,
    pub series: LaurentQSeries,
}

impl EquivariantIndex {
    /// Character dimensions: every coefficient at `t = 1`.
    pub fn at_one(&self) -> RationalQSeries {
        self.series.at_one()
    }

    pub fn is_identically_zero(&self) -> bool {
        self.series.is_zero()
    }
}

impl fmt::Display for EquivariantIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.series.coeffs().iter().enumerate() {
            writeln!(f, "q^{d}: {c}")?;
        }
        Ok(())
    }
}

/// Equivariant index for the circle `xi`, with the manifold's Spin^c class.
pub fn equivariant_index(
    m: &QuasitoricManifold,
    xi: &[i64],
    bundles: &BundleSpec,
    q_order: usize,
) -> Result<EquivariantIndex> {
    bundles.validate(m)?;
    localization::localize(m, xi, bundles, m.gamma(), q_order)
}

fn index_with_gamma(
    m: &QuasitoricManifold,
    bundles: &BundleSpec,
    gamma: &[i64],
    q_order: usize,
) -> Result<RationalQSeries> {
    let xi1 = m.generic_circle(&[]);
    let xi2 = m.generic_circle(std::slice::from_ref(&xi1));
    let a = localization::localize(m, &xi1, bundles, gamma, q_order)?.at_one();
    let b = localization::localize(m, &xi2, bundles, gamma, q_order)?.at_one();
    if a != b {
        return Err(Error::Internal(format!(
            "index depends on the circle: {:?} for {xi1:?}, {:?} for {xi2:?}",
            a.to_strings(),
            b.to_strings()
        )));
    }
    Ok(a)
}

/// `φ^c(M; V, W)`, evaluated through two generic circles that must agree.
pub fn index(m: &QuasitoricManifold, bundles: &BundleSpec, q_order: usize) -> Result<RationalQSeries> {
    bundles.validate(m)?;
    index_with_gamma(m, bundles, m.gamma(), q_order)
}

fn spin_structure(m: &QuasitoricManifold, what: &str) -> Result<QuasitoricManifold> {
    if !m.is_spin() {
        return Err(Error::Precondition(format!(
            "{what} needs a spin manifold, but w₂ = Σ vᵢ mod 2 is not in the span of the rows of λ"
        )));
    }
    m.with_gamma(vec![0; m.facet_count()])
}

/// `φ(M; 0, 0)` for the spin structure.
pub fn witten_genus(m: &QuasitoricManifold, q_order: usize) -> Result<RationalQSeries> {
    index(&spin_structure(m, "the Witten genus")?, &BundleSpec::none(), q_order)
}

/// `φ(M; 0, TM)` for the spin structure.
pub fn elliptic_genus(m: &QuasitoricManifold, q_order: usize) -> Result<RationalQSeries> {
    let spin = spin_structure(m, "the elliptic genus")?;
    index(&spin, &BundleSpec::tangent_w(&spin), q_order)
}

/// Â-genus of a spin manifold.
pub fn a_hat_genus(m: &QuasitoricManifold) -> Result<Rational> {
    Ok(witten_genus(m, 0)?.coeff(0).clone())
}

/// Signature: the `q⁰` term of the index with `c = 0`, `W = TM`. The
/// characteristic number `⟨Â(M) ch(Δ(TM)), [M]⟩` is defined for every
/// oriented `M`, spin or not.
pub fn signature(m: &QuasitoricManifold) -> Result<Rational> {
    let zeros = vec![0; m.facet_count()];
    Ok(index_with_gamma(m, &BundleSpec::tangent_w(m), &zeros, 0)?.coeff(0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{build_face_ring, CohomologyClass};
    use crate::exactalg::{int, RationalQSeries};
    use crate::polytope::{CharacteristicMatrix, SimplePolytope};

    fn cp(n: usize) -> QuasitoricManifold {
        QuasitoricManifold::projective_space(n).unwrap()
    }

    #[test]
    fn two_sphere_contributions_cancel() {
        let s2 = QuasitoricManifold::two_sphere();
        let gamma = vec![0, 0];
        let base = base_point(&s2);
        let total: RationalQSeries = s2
            .fixed_points()
            .iter()
            .map(|fp| fixed_point_contribution(fp, base, &[1], &BundleSpec::none(), &gamma, &int(2), 2).unwrap())
            .reduce(|a, b| a.try_add(&b).unwrap())
            .unwrap();
        assert!(total.is_zero());
    }

    #[test]
    fn witten_genus_of_sphere_vanishes_equivariantly() {
        let s2 = QuasitoricManifold::two_sphere().with_gamma(vec![0, 0]).unwrap();
        let eq = equivariant_index(&s2, &[1], &BundleSpec::none(), 3).unwrap();
        assert!(eq.is_identically_zero());
        assert!(witten_genus(&QuasitoricManifold::two_sphere(), 3).unwrap().is_zero());
    }

    #[test]
    fn degenerate_circle_is_reported() {
        let err = equivariant_index(&cp(2), &[1, 0], &BundleSpec::none(), 0).unwrap_err();
        assert!(matches!(err, Error::DegenerateCircle { .. }));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(&cp(2)).unwrap(), int(3));
        assert_eq!(euler_characteristic(&QuasitoricManifold::sphere_product(3).unwrap()).unwrap(), int(8));
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&cp(2)).unwrap(), int(1));
        assert_eq!(signature(&QuasitoricManifold::sphere_product(2).unwrap()).unwrap(), int(0));
        assert_eq!(signature(&cp(4)).unwrap(), int(1));
    }

    #[test]
    fn spin_preconditions() {
        assert!(matches!(witten_genus(&cp(2), 2), Err(Error::Precondition(_))));
        assert!(matches!(elliptic_genus(&cp(2), 0), Err(Error::Precondition(_))));
        assert_eq!(a_hat_genus(&cp(3)).unwrap(), int(0));
        let e = elliptic_genus(&QuasitoricManifold::sphere_product(2).unwrap(), 2).unwrap();
        assert_eq!(e.coeff(0), &int(0));
        assert!(witten_genus(&QuasitoricManifold::sphere_product(2).unwrap(), 3).unwrap().is_zero());
    }

    #[test]
    fn todd_genus_of_projective_plane() {
        // γ = (1,1,1) is c₁; the untwisted index is the Todd genus.
        assert_eq!(index(&cp(2), &BundleSpec::none(), 0).unwrap().coeff(0), &int(1));
    }

    #[test]
    fn both_routes_agree() {
        let lambda = CharacteristicMatrix::from_columns(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]).unwrap();
        let hirzebruch = QuasitoricManifold::with_default_spinc(SimplePolytope::cube(2).unwrap(), lambda).unwrap();
        let cases = vec![
            (cp(2), BundleSpec::none()),
            (cp(2), BundleSpec::new(vec![vec![1, 0, 0]], vec![vec![1, 1, 0]])),
            (cp(3), BundleSpec::new(vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0]], Vec::new())),
            (cp(3).with_gamma(vec![0, 0, 0, 0]).unwrap(), BundleSpec::tangent_w(&cp(3))),
            (hirzebruch, BundleSpec::new(vec![vec![0, 0, 1, 0]], vec![vec![1, 0, 0, 0], vec![1, 0, 0, 0]])),
        ];
        for (m, b) in cases {
            let loc = index(&m, &b, 2).unwrap();
            let coh = cohomological_index(&m, &b, 2).unwrap();
            assert_eq!(loc, coh, "{:?} {:?}", m.lambda(), b);
        }
    }

    #[test]
    fn q2_identity_on_cp3() {
        let ring = build_face_ring(&cp(3)).unwrap();
        let x = CohomologyClass::generator(&ring, 0);
        let v = vec![x.scale(&int(2)), x.clone(), x.clone()];
        assert_eq!(twisted_q2(&ring, &v, 2).unwrap(), euler_form_of_q2(&ring, &v, 2).unwrap());
        let e = euler_form_of_q2(&ring, &v, 0).unwrap();
        assert_eq!(e.coeff(0).integrate_top(), int(2));
    }

    #[test]
    fn spin_bundle_check() {
        let b = BundleSpec::new(Vec::new(), vec![vec![1, 0, 0]]);
        assert!(matches!(b.validate(&cp(2)), Err(Error::Argument(_))));
        assert!(BundleSpec::new(Vec::new(), vec![vec![1, 1, 0]]).validate(&cp(2)).is_ok());
    }
}
