//! Circles on which an equivariant degree-4 class restricts to a multiple of
//! `x²`, and the integer `I` of that multiple.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cohomology::{build_face_ring, pontryagin_p1};
use crate::exactalg::linalg::{kernel, solve, QMatrix};
use crate::exactalg::rational::{normalize_sign, primitive_integer_vector};
use crate::exactalg::{int, rat, Rational};
use crate::genus::{base_point, line_class, BundleSpec};
use crate::polytope::{FixedPointDatum, QuasitoricManifold};
use crate::{Error, Result};

/// A class in `H⁴_T(M; ℚ)` split as `Sym²(t*) ⊕ t* ⊗ H²(M) ⊕ H⁴(M)`.
///
/// `a22[i][b]` is the coefficient of `tᵢ·y_b` where `y_b` runs over a basis
/// of `H²(M)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantDegree4Class {
    pub a40: QMatrix,
    pub a22: QMatrix,
    pub a04_vanishes: bool,
}

impl EquivariantDegree4Class {
    pub fn new(a40: QMatrix, a22: QMatrix, a04_vanishes: bool) -> Result<Self> {
        let n = a40.len();
        if a40.iter().any(|r| r.len() != n) {
            return Err(Error::Argument("a40 must be square".into()));
        }
        if (0..n).any(|i| (0..i).any(|j| a40[i][j] != a40[j][i])) {
            return Err(Error::Argument("a40 must be symmetric".into()));
        }
        if a22.len() != n {
            return Err(Error::Argument(format!("a22 needs {n} rows, got {}", a22.len())));
        }
        let b2 = a22.first().map_or(0, Vec::len);
        if a22.iter().any(|r| r.len() != b2) {
            return Err(Error::Argument("a22 rows differ in length".into()));
        }
        Ok(Self { a40, a22, a04_vanishes })
    }

    /// Only the mixed part, e.g. for testing the circle search on its own.
    pub fn from_mixed(a22: QMatrix) -> Result<Self> {
        let n = a22.len();
        Self::new(vec![vec![Rational::zero(); n]; n], a22, true)
    }

    pub fn torus_rank(&self) -> usize {
        self.a22.len()
    }

    pub fn b2(&self) -> usize {
        self.a22.first().map_or(0, Vec::len)
    }

    /// `p₁^T(V ⊕ W ⊖ TM)` for lifts normalized at the base vertex. `y_b` are
    /// the equivariant facet classes off the base vertex.
    pub fn pontryagin_defect(m: &QuasitoricManifold, bundles: &BundleSpec) -> Result<Self> {
        bundles.validate(m)?;
        let n = m.dim();
        let ring = build_face_ring(m)?;
        let lines = bundles.v.iter().chain(&bundles.w);
        let defect = lines
            .fold(pontryagin_p1(&ring).scale(&int(-1)), |acc, c| acc.add(&line_class(&ring, c).pow(2)));
        let a04_vanishes = defect.is_zero();

        let base = base_point(m);
        let free: Vec<usize> = (0..m.facet_count()).filter(|f| !base.vertex.contains(f)).collect();
        let k = free.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let unknowns = pairs.len() + n * k;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for fp in m.fixed_points() {
            let q = restricted_form(fp, base, bundles);
            let ells: Vec<Vec<i64>> = free.iter().map(|&b| fp.restrict(&unit(m.facet_count(), b))).collect();
            for &(i, j) in &pairs {
                let mut row = vec![Rational::zero(); unknowns];
                row[pairs.iter().position(|&p| p == (i, j)).expect("pair")] = int(1);
                for (b, ell) in ells.iter().enumerate() {
                    if i == j {
                        row[pairs.len() + i * k + b] += int(ell[i]);
                    } else {
                        row[pairs.len() + i * k + b] += int(ell[j]);
                        row[pairs.len() + j * k + b] += int(ell[i]);
                    }
                }
                rows.push(row);
                rhs.push(int(if i == j { q[i][i] } else { 2 * q[i][j] }));
            }
        }
        let mut a40 = vec![vec![Rational::zero(); n]; n];
        let mut a22 = vec![vec![Rational::zero(); k]; n];
        if a04_vanishes {
            let x = solve(&rows, &rhs, unknowns).ok_or_else(|| {
                Error::Internal("class with vanishing H⁴(M) part is not in t*·H²_T(M)".into())
            })?;
            for (p, &(i, j)) in pairs.iter().enumerate() {
                let c = if i == j { x[p].clone() } else { &x[p] * rat(1, 2) };
                a40[i][j] = c.clone();
                a40[j][i] = c;
            }
            for (i, row) in a22.iter_mut().enumerate() {
                for (b, e) in row.iter_mut().enumerate() {
                    *e = x[pairs.len() + i * k + b].clone();
                }
            }
        }
        Self::new(a40, a22, a04_vanishes)
    }

    /// `a22ᵀ ξ`: the mixed component after pulling back along `ξ`.
    pub fn mixed_part_along(&self, xi: &[BigInt]) -> Vec<Rational> {
        (0..self.b2())
            .map(|b| {
                self.a22
                    .iter()
                    .zip(xi)
                    .map(|(row, x)| &row[b] * Rational::from_integer(x.clone()))
                    .sum()
            })
            .collect()
    }
}

fn unit(m: usize, i: usize) -> Vec<i64> {
    (0..m).map(|j| (j == i) as i64).collect()
}

/// Symmetric matrix of `Σ ℓ² − Σ w²` at a fixed point, with line weights
/// shifted to vanish at `base`.
fn restricted_form(fp: &FixedPointDatum, base: &FixedPointDatum, bundles: &BundleSpec) -> Vec<Vec<i64>> {
    let n = fp.weights.len();
    let mut q = vec![vec![0i64; n]; n];
    let mut add = |v: &[i64], sign: i64| {
        for i in 0..n {
            for j in 0..n {
                q[i][j] += sign * v[i] * v[j];
            }
        }
    };
    for c in bundles.v.iter().chain(&bundles.w) {
        let ell: Vec<i64> = fp.restrict(c).iter().zip(base.restrict(c)).map(|(a, b)| a - b).collect();
        add(&ell, 1);
    }
    for w in &fp.weights {
        add(w, -1);
    }
    q
}

/// A primitive `ξ` with `a22ᵀ ξ = 0`, first nonzero entry positive.
pub fn find_circle(a: &EquivariantDegree4Class) -> Result<Vec<i64>> {
    let n = a.torus_rank();
    let b2 = a.b2();
    let transposed: QMatrix = (0..b2).map(|b| a.a22.iter().map(|r| r[b].clone()).collect()).collect();
    let witness = kernel(&transposed, n).first().and_then(|v| primitive_integer_vector(v)).map(|mut v| {
        normalize_sign(&mut v);
        v
    });
    let witness = match witness {
        Some(v) => Some(
            v.iter()
                .map(|x| x.to_i64())
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::Internal("kernel vector overflows i64".into()))?,
        ),
        None => None,
    };
    if !a.a04_vanishes {
        return Err(Error::Hypothesis { reason: "the H⁴(M) component is nonzero".into(), kernel: witness });
    }
    if n <= b2 {
        return Err(Error::Hypothesis {
            reason: format!("torus rank {n} does not exceed b₂ = {b2}"),
            kernel: witness,
        });
    }
    witness.ok_or_else(|| Error::Internal("kernel is empty despite rank T > b₂".into()))
}

/// The integer `I` with `p₁^{S¹}(V ⊕ W ⊖ TM)|_y = I·x²` at every fixed point
/// `y`, for lifts normalized at the base vertex.
#[allow(non_snake_case)]
pub fn index_I(m: &QuasitoricManifold, xi: &[i64], bundles: &BundleSpec) -> Result<i64> {
    if xi.len() != m.dim() {
        return Err(Error::Argument(format!("circle has {} entries, torus rank is {}", xi.len(), m.dim())));
    }
    m.check_generic(xi)?;
    bundles.check_shape(m)?;
    let base = base_point(m);
    let value_at = |fp: &FixedPointDatum| -> i64 {
        let lines: i64 = bundles
            .v
            .iter()
            .chain(&bundles.w)
            .map(|c| {
                let l: i64 = fp.restrict(c).iter().zip(base.restrict(c)).zip(xi).map(|((a, b), x)| (a - b) * x).sum();
                l * l
            })
            .sum();
        let tangent: i64 = fp.circle_weights(xi).iter().map(|w| w * w).sum();
        lines - tangent
    };
    let values: Vec<(Vec<usize>, i64)> = m
        .fixed_points()
        .iter()
        .map(|fp| (fp.vertex.iter().map(|f| f + 1).collect(), value_at(fp)))
        .collect();
    let first = values[0].1;
    if let Some((v, x)) = values.iter().find(|(_, x)| *x != first) {
        return Err(Error::Hypothesis {
            reason: format!(
                "p₁ of V ⊕ W ⊖ TM restricts to {first}x² at {:?} but {x}x² at {v:?}",
                values[0].0
            ),
            kernel: None,
        });
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::linalg::to_qmatrix;
    use crate::genus::equivariant_index;

    fn mixed(rows_t: &[Vec<i64>]) -> EquivariantDegree4Class {
        // Input is a22ᵀ.
        let b2 = rows_t.len();
        let n = rows_t[0].len();
        let a22 = (0..n).map(|i| (0..b2).map(|b| int(rows_t[b][i])).collect()).collect();
        EquivariantDegree4Class::from_mixed(a22).unwrap()
    }

    #[test]
    fn circle_examples() {
        assert_eq!(find_circle(&mixed(&[vec![1, 1]])).unwrap(), vec![1, -1]);
        assert_eq!(find_circle(&mixed(&[vec![2, 4]])).unwrap(), vec![2, -1]);
        assert_eq!(find_circle(&mixed(&[vec![1, 0, 1], vec![0, 1, 1]])).unwrap(), vec![1, 1, -1]);
    }

    #[test]
    fn rank_hypothesis() {
        match find_circle(&mixed(&[vec![1, 2], vec![2, 4]])) {
            Err(Error::Hypothesis { kernel, .. }) => assert_eq!(kernel, Some(vec![2, -1])),
            other => panic!("{other:?}"),
        }
        match find_circle(&mixed(&[vec![1, 0], vec![0, 1]])) {
            Err(Error::Hypothesis { kernel, .. }) => assert_eq!(kernel, None),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn index_i_examples() {
        let s2 = QuasitoricManifold::two_sphere();
        assert_eq!(index_I(&s2, &[1], &BundleSpec::none()).unwrap(), -1);
        let s2s2 = QuasitoricManifold::sphere_product(2).unwrap();
        assert_eq!(index_I(&s2s2, &[1, 1], &BundleSpec::none()).unwrap(), -2);
        let cp2 = QuasitoricManifold::projective_space(2).unwrap();
        assert!(matches!(index_I(&cp2, &[1, 2], &BundleSpec::none()), Err(Error::Hypothesis { .. })));
    }

    #[test]
    fn negative_index_forces_vanishing() {
        for n in 1..=2 {
            let m = QuasitoricManifold::sphere_product(n).unwrap();
            let xi = vec![1; n];
            assert!(index_I(&m, &xi, &BundleSpec::none()).unwrap() < 0);
            assert!(equivariant_index(&m, &xi, &BundleSpec::none(), 2).unwrap().is_identically_zero());
        }
    }

    #[test]
    fn defect_on_sphere_products() {
        // p₁ = 0 and every restriction is -Σ⟨wᵢ,ξ⟩² = -Σ ξᵢ², with no mixed part.
        let m = QuasitoricManifold::sphere_product(2).unwrap();
        let a = EquivariantDegree4Class::pontryagin_defect(&m, &BundleSpec::none()).unwrap();
        assert!(a.a04_vanishes);
        assert_eq!(a.a40, to_qmatrix(&[vec![-1, 0], vec![0, -1]]));
        assert!(a.a22.iter().flatten().all(Zero::is_zero));
        assert!(matches!(find_circle(&a), Err(Error::Hypothesis { .. })));
    }

    #[test]
    fn defect_with_tangent_lines() {
        // V = TM ⊕ ℂ on ℂP³: p₁ cancels, the mixed part comes from the shifted
        // lifts, and rank T = 3 > b₂ = 1 gives a circle with constant I.
        let m = QuasitoricManifold::projective_space(3).unwrap();
        let v: Vec<Vec<i64>> = (0..4).map(|i| unit(4, i)).collect();
        let bundles = BundleSpec::new(v, Vec::new());
        let a = EquivariantDegree4Class::pontryagin_defect(&m, &bundles).unwrap();
        assert!(a.a04_vanishes);
        let xi = find_circle(&a).unwrap();
        let big: Vec<BigInt> = xi.iter().map(|&x| BigInt::from(x)).collect();
        assert!(a.mixed_part_along(&big).iter().all(Zero::is_zero));
        if m.check_generic(&xi).is_ok() {
            index_I(&m, &xi, &bundles).unwrap();
        }
    }

    #[test]
    fn cp2_defect_is_not_mixed() {
        let m = QuasitoricManifold::projective_space(2).unwrap();
        let a = EquivariantDegree4Class::pontryagin_defect(&m, &BundleSpec::none()).unwrap();
        assert!(!a.a04_vanishes);
    }
}
