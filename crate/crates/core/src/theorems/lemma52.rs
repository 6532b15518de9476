//! Bundles `V`, `W` that would contradict `βᵢ ≤ n+1` on a ring of
//! connected-sum type.
//!
//! Line bundles are given by coordinates in the connected-sum basis
//! `v₁…v_k` of the ring, not by facets.

use num_traits::ToPrimitive;

use crate::cohomology::{beta_coefficients, connected_sum_basis, pontryagin_p1, spinc_c1, tangent_roots};
use crate::cohomology::{CohomologyClass, FaceRing};
use crate::exactalg::linalg::solve;
use crate::exactalg::rational::pow_i;
use crate::exactalg::{int, Rational};
use crate::genus::index_integrand;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Lemma52Bundles {
    pub ring: FaceRing,
    pub basis: Vec<CohomologyClass>,
    pub i0: usize,
    /// 1 when `α_{i₀} ≡ n+1`, 2 when `α_{i₀} ≡ n` (mod 2).
    pub case: u8,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub w: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma52Report {
    pub c1_matches: bool,
    pub p1_matches: bool,
    pub w_spin: bool,
    pub euler_pairing: Rational,
    /// `q⁰` of the index with `c = c₁(V)`.
    pub index_q0: Rational,
}

impl Lemma52Report {
    pub fn all_hold(&self) -> bool {
        self.c1_matches && self.p1_matches && self.w_spin
    }
}

fn as_integers(v: &[Rational], what: &str) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Shape(format!("{what} is not integral: {v:?}")))
}

fn line(k: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut out = vec![0; k];
    for &(i, c) in entries {
        out[i] += c;
    }
    out
}

impl Lemma52Bundles {
    /// Builds `V` and `W`. Fails with a hypothesis error when a multiplicity
    /// would be negative, which means `β_{i₀} ≤ n+1` holds.
    pub fn construct(ring: &FaceRing, i0: usize) -> Result<Self> {
        let n = ring.top_degree() as i64;
        let basis = connected_sum_basis(ring)?;
        let k = basis.len();
        if i0 >= k {
            return Err(Error::Argument(format!("i0 = {i0} but b₂ = {k}")));
        }
        let beta = as_integers(&beta_coefficients(ring)?, "β")?;
        let matrix: Vec<Vec<Rational>> =
            (0..k).map(|i| basis.iter().map(|b| b.component(1)[i].clone()).collect()).collect();
        let w2 = tangent_roots(ring).iter().fold(CohomologyClass::zero(ring), |a, r| a.add(r));
        let coords = solve(&matrix, w2.component(1), k).ok_or_else(|| Error::Internal("basis does not span".into()))?;
        let alpha: Vec<i64> = as_integers(&coords, "Σ roots")?.iter().map(|a| a.rem_euclid(2)).collect();

        let rest: Vec<(usize, i64)> = (0..k).filter(|&i| i != i0).map(|i| (i, alpha[i])).collect();
        let mut lead = rest.clone();
        lead.push((i0, 1));
        let (case, v, w_extra) = if alpha[i0] == (n + 1).rem_euclid(2) {
            let mut v = vec![line(k, &[(i0, 2)]), line(k, &lead)];
            v.extend((0..n - 2).map(|_| line(k, &[(i0, 1)])));
            (1, v, n + 3)
        } else {
            let mut v = vec![line(k, &lead)];
            v.extend((0..n - 1).map(|_| line(k, &[(i0, 1)])));
            (2, v, n)
        };
        let mut w = Vec::new();
        for i in 0..k {
            let mult = if i == i0 { beta[i] - w_extra } else { beta[i] - alpha[i] };
            if mult < 0 {
                return Err(Error::Hypothesis {
                    reason: format!(
                        "multiplicity of L(v{}) in W is {mult}: β{} = {} ≤ n+1, the bound holds",
                        i + 1,
                        i0 + 1,
                        beta[i0]
                    ),
                    kernel: None,
                });
            }
            w.extend((0..mult).map(|_| line(k, &[(i, 1)])));
        }
        Ok(Self { ring: ring.clone(), basis, i0, case, alpha, beta, v, w })
    }

    fn class(&self, coords: &[i64]) -> CohomologyClass {
        coords
            .iter()
            .zip(&self.basis)
            .fold(CohomologyClass::zero(&self.ring), |a, (&c, b)| a.add(&b.scale(&int(c))))
    }

    pub fn c1_v(&self) -> CohomologyClass {
        self.v.iter().fold(CohomologyClass::zero(&self.ring), |a, l| a.add(&self.class(l)))
    }

    pub fn verify(&self, q_order: usize) -> Result<Lemma52Report> {
        let ring = &self.ring;
        let v: Vec<CohomologyClass> = self.v.iter().map(|l| self.class(l)).collect();
        let w: Vec<CohomologyClass> = self.w.iter().map(|l| self.class(l)).collect();
        let c1 = self.c1_v();
        let p1 = v.iter().chain(&w).fold(CohomologyClass::zero(ring), |a, y| a.add(&y.pow(2)));
        let w_total: Vec<i64> =
            (0..self.basis.len()).map(|i| self.w.iter().map(|l| l[i]).sum::<i64>()).collect();
        let euler = v.iter().fold(CohomologyClass::one(ring), |a, y| a.mul(y)).integrate_top();
        let series = index_integrand(ring, &v, &w, &c1, q_order)?;
        Ok(Lemma52Report {
            c1_matches: c1 == spinc_c1(ring),
            p1_matches: p1 == pontryagin_p1(ring),
            w_spin: w_total.iter().all(|x| x % 2 == 0),
            euler_pairing: euler,
            index_q0: series.coeff(0).integrate_top(),
        })
    }

    /// The value the `q⁰` term should take: `⟨e(V)⟩·2^{rank W}`.
    pub fn expected_q0(&self, euler_pairing: &Rational) -> Rational {
        euler_pairing * pow_i(&int(2), self.w.len() as i64)
    }
}

/// `ℚ[x]/(x^{n+1})` with tangent roots `2x, x, …, x`: not a manifold, but
/// of connected-sum type with `β = n+3`.
pub fn synthetic_projective_ring(n: usize) -> Result<FaceRing> {
    let mut roots = vec![2];
    roots.extend(std::iter::repeat_n(1, n - 1));
    FaceRing::truncated_polynomial(n, &roots, n as i64 + 1)
}
