//! Hypotheses on the second factor of a product `M × M′`: classes
//! `x₁…x_n` of degree 2 summing to `c₁` of the Spin^c structure, with squares
//! summing to `p₁` and nonzero product.

use crate::cohomology::{pontryagin_p1, spinc_c1, CohomologyClass, FaceRing};
use crate::exactalg::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Theorem34Report {
    pub sum_is_c1: bool,
    pub squares_are_p1: bool,
    pub pairing: Rational,
}

impl Theorem34Report {
    pub fn pairing_nonzero(&self) -> bool {
        self.pairing != Rational::from_integer(0.into())
    }

    pub fn all_hold(&self) -> bool {
        self.sum_is_c1 && self.squares_are_p1 && self.pairing_nonzero()
    }
}

/// Checks the three conditions exactly. Torsion does not arise: the ring is
/// rational.
pub fn check_theorem34_hypotheses(ring: &FaceRing, x: &[CohomologyClass]) -> Result<Theorem34Report> {
    let n = ring.top_degree();
    if x.len() != n {
        return Err(Error::Argument(format!("need {n} classes, got {}", x.len())));
    }
    if let Some(i) = x.iter().position(|c| c.ring() != ring) {
        return Err(Error::Argument(format!("x{} lives in another ring", i + 1)));
    }
    if let Some(i) = x.iter().position(|c| c.degree().is_some_and(|d| d != 1)) {
        return Err(Error::Argument(format!("x{} is not of degree 2", i + 1)));
    }
    let sum = x.iter().fold(CohomologyClass::zero(ring), |a, c| a.add(c));
    let squares = x.iter().fold(CohomologyClass::zero(ring), |a, c| a.add(&c.pow(2)));
    let product = x.iter().fold(CohomologyClass::one(ring), |a, c| a.mul(c));
    Ok(Theorem34Report {
        sum_is_c1: sum == spinc_c1(ring),
        squares_are_p1: squares == pontryagin_p1(ring),
        pairing: product.integrate_top(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::build_face_ring;
    use crate::exactalg::int;
    use crate::polytope::QuasitoricManifold;

    #[test]
    fn two_sphere_with_euler_class() {
        let ring = build_face_ring(&QuasitoricManifold::projective_space(1).unwrap()).unwrap();
        let euler = CohomologyClass::generator(&ring, 0).add(&CohomologyClass::generator(&ring, 1));
        assert_eq!(euler.to_string(), "2x");
        let r = check_theorem34_hypotheses(&ring, &[euler]).unwrap();
        assert!(r.sum_is_c1 && r.squares_are_p1);
        assert_eq!(r.pairing, int(2));
    }

    #[test]
    fn projective_space_pairing() {
        for n in 2..=4 {
            let ring = build_face_ring(&QuasitoricManifold::projective_space(n).unwrap()).unwrap();
            let x = vec![CohomologyClass::generator(&ring, 0); n];
            let r = check_theorem34_hypotheses(&ring, &x).unwrap();
            assert_eq!(r.pairing, int(1));
            // Σx = n·x but c₁ = (n+1)x.
            assert!(!r.sum_is_c1);
        }
    }

    #[test]
    fn zero_classes_fail_pairing() {
        let ring = build_face_ring(&QuasitoricManifold::projective_space(2).unwrap()).unwrap();
        let r = check_theorem34_hypotheses(&ring, &vec![CohomologyClass::zero(&ring); 2]).unwrap();
        assert!(!r.pairing_nonzero());
        assert!(check_theorem34_hypotheses(&ring, &[CohomologyClass::zero(&ring)]).is_err());
    }
}
