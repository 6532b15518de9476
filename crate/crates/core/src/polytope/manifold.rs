use std::fmt;

use super::simple::{Facet, SimplePolytope, Vertex};
use crate::error::{Error, Result};
use crate::exactalg::linalg::{det_i64, in_f2_span, unimodular_inverse};

/// Integer `n × m` matrix; column `j` is attached to facet `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharacteristicMatrix {
    rows: Vec<Vec<i64>>,
}

impl CharacteristicMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Argument("characteristic matrix has no rows".into()));
        };
        let m = first.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Argument("characteristic matrix rows differ in length".into()));
        }
        Ok(Self { rows })
    }

    pub fn from_columns(n: usize, columns: &[Vec<i64>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != n) {
            return Err(Error::Argument(format!("every column must have {n} entries")));
        }
        Self::from_rows((0..n).map(|i| columns.iter().map(|c| c[i]).collect()).collect())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Square matrix whose columns are the columns at the given facets.
    pub fn minor(&self, facets: &[Facet]) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| facets.iter().map(|&f| r[f]).collect())
            .collect()
    }

    /// Block-diagonal sum, matching [`SimplePolytope::product`].
    pub fn block_sum(&self, other: &Self) -> Self {
        let (m1, m2) = (self.m(), other.m());
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().chain(std::iter::repeat_n(0, m2)).collect())
            .chain(
                other
                    .rows
                    .iter()
                    .map(|r| std::iter::repeat_n(0, m1).chain(r.iter().copied()).collect()),
            )
            .collect();
        Self { rows }
    }

    /// Vertices (1-based facets) whose minor has determinant other than ±1.
    pub fn validate(&self, p: &SimplePolytope) -> Result<()> {
        if self.n() != p.dim() || self.m() != p.facet_count() {
            return Err(Error::Argument(format!(
                "matrix is {}×{}, polytope needs {}×{}",
                self.n(),
                self.m(),
                p.dim(),
                p.facet_count()
            )));
        }
        let failing: Vec<Vertex> = p
            .vertices()
            .iter()
            .filter(|v| det_i64(&self.minor(v)).abs() != 1)
            .map(|v| v.iter().map(|f| f + 1).collect())
            .collect();
        if failing.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidLambda(failing))
        }
    }
}

impl fmt::Debug for CharacteristicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ{:?}", self.rows)
    }
}

/// Local data at a torus-fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    /// Facets meeting at the fixed point, ascending.
    pub vertex: Vertex,
    /// `weights[k]` is dual to the column of `vertex[k]`:
    /// `⟨weights[k], λ_{vertex[l]}⟩ = δ_{kl}`.
    pub weights: Vec<Vec<i64>>,
    /// Determinant of the ordered column minor.
    pub sign: i8,
    /// Sign comparing the complex orientation of the tangent space (from the
    /// weights) with the orientation of the manifold. This is `sign` times
    /// the orientation sign of the vertex in the polytope.
    pub orientation: i8,
}

impl FixedPointDatum {
    /// Weight of the line bundle `L(Σ c_i v_i)` at this point, as a vector in
    /// the weight lattice: `v_i` restricts to its dual weight for `i` in the
    /// vertex and to zero otherwise.
    pub fn restrict(&self, coeffs: &[i64]) -> Vec<i64> {
        let n = self.weights.len();
        let mut out = vec![0i64; n];
        for (k, &f) in self.vertex.iter().enumerate() {
            let c = coeffs[f];
            if c != 0 {
                for (o, w) in out.iter_mut().zip(&self.weights[k]) {
                    *o += c * w;
                }
            }
        }
        out
    }

    /// Tangent weights paired with a circle `xi`.
    pub fn circle_weights(&self, xi: &[i64]) -> Vec<i64> {
        self.weights.iter().map(|w| dot(w, xi)).collect()
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A quasitoric manifold: polytope, characteristic matrix and a Spin^c
/// class `c = Σ γ_i v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitoricManifold {
    polytope: SimplePolytope,
    lambda: CharacteristicMatrix,
    gamma: Vec<i64>,
    fixed_points: Vec<FixedPointDatum>,
}

impl QuasitoricManifold {
    /// Validates λ on every vertex and that `Σ γ_i v_i ≡ Σ v_i` modulo 2 in
    /// `H²(M; ℤ/2)`.
    pub fn new(polytope: SimplePolytope, lambda: CharacteristicMatrix, gamma: Vec<i64>) -> Result<Self> {
        lambda.validate(&polytope)?;
        if gamma.len() != polytope.facet_count() {
            return Err(Error::Argument(format!(
                "spin^c vector has {} entries, expected {}",
                gamma.len(),
                polytope.facet_count()
            )));
        }
        let shifted: Vec<i64> = gamma.iter().map(|g| g - 1).collect();
        if !in_f2_span(lambda.rows(), &shifted) {
            return Err(Error::InvalidSpinc { gamma });
        }
        let signs = polytope.orientation_signs()?;
        let fixed_points = polytope
            .vertices()
            .iter()
            .zip(signs)
            .map(|(v, sigma)| {
                let minor = lambda.minor(v);
                let det = det_i64(&minor) as i8;
                let weights = unimodular_inverse(&minor).expect("validated minor");
                FixedPointDatum {
                    vertex: v.clone(),
                    weights,
                    sign: det,
                    orientation: det * sigma,
                }
            })
            .collect();
        Ok(Self {
            polytope,
            lambda,
            gamma,
            fixed_points,
        })
    }

    /// Uses the all-ones Spin^c vector (the class `Σ v_i`, i.e. `c₁` of the
    /// stably complex structure).
    pub fn with_default_spinc(polytope: SimplePolytope, lambda: CharacteristicMatrix) -> Result<Self> {
        let m = polytope.facet_count();
        Self::new(polytope, lambda, vec![1; m])
    }

    pub fn with_gamma(&self, gamma: Vec<i64>) -> Result<Self> {
        Self::new(self.polytope.clone(), self.lambda.clone(), gamma)
    }

    pub fn polytope(&self) -> &SimplePolytope {
        &self.polytope
    }

    pub fn lambda(&self) -> &CharacteristicMatrix {
        &self.lambda
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn facet_count(&self) -> usize {
        self.polytope.facet_count()
    }

    pub fn b2(&self) -> usize {
        self.facet_count() - self.dim()
    }

    pub fn fixed_points(&self) -> &[FixedPointDatum] {
        &self.fixed_points
    }

    /// Whether `Σ c_i v_i` is divisible by 2 in `H²(M; ℤ)`.
    pub fn is_even_class(&self, coeffs: &[i64]) -> bool {
        in_f2_span(self.lambda.rows(), coeffs)
    }

    /// `w₂(M) = Σ v_i mod 2` vanishes.
    pub fn is_spin(&self) -> bool {
        self.is_even_class(&vec![1; self.facet_count()])
    }

    /// Whether `Σ γ_i v_i = 0` in `H²(M; ℚ)`, i.e. γ lies in the row space
    /// of λ.
    pub fn spinc_class_vanishes(&self) -> bool {
        use crate::exactalg::linalg::{solve, to_qmatrix};
        let n = self.dim();
        let at: Vec<Vec<i64>> = (0..self.facet_count()).map(|j| self.lambda.column(j)).collect();
        let b: Vec<_> = self.gamma.iter().map(|&g| crate::exactalg::int(g)).collect();
        solve(&to_qmatrix(&at), &b, n).is_some()
    }

    /// First circle in a fixed enumeration for which no tangent weight
    /// vanishes, skipping `avoid` and its negatives.
    pub fn generic_circle(&self, avoid: &[Vec<i64>]) -> Vec<i64> {
        let n = self.dim();
        for bound in 1i64.. {
            let side = (2 * bound + 1) as usize;
            let total = side.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let xi: Vec<i64> = (0..n)
                    .map(|_| {
                        let d = (c % side) as i64 - bound;
                        c /= side;
                        d
                    })
                    .collect();
                if xi.iter().map(|x| x.abs()).max() != Some(bound) {
                    continue;
                }
                let neg: Vec<i64> = xi.iter().map(|x| -x).collect();
                if avoid.contains(&xi) || avoid.contains(&neg) {
                    continue;
                }
                if self.check_generic(&xi).is_ok() {
                    return xi;
                }
            }
        }
        unreachable!()
    }

    pub fn check_generic(&self, xi: &[i64]) -> Result<()> {
        if xi.len() != self.dim() {
            return Err(Error::Argument(format!(
                "circle {xi:?} must have {} entries",
                self.dim()
            )));
        }
        for fp in &self.fixed_points {
            if fp.circle_weights(xi).contains(&0) {
                return Err(Error::DegenerateCircle {
                    xi: xi.to_vec(),
                    vertex: fp.vertex.iter().map(|f| f + 1).collect(),
                });
            }
        }
        Ok(())
    }

    /// Product manifold; facets and torus coordinates of `self` come first.
    pub fn product(&self, other: &Self) -> Self {
        let gamma = self.gamma.iter().chain(&other.gamma).copied().collect();
        Self::new(
            self.polytope.product(&other.polytope),
            self.lambda.block_sum(&other.lambda),
            gamma,
        )
        .expect("product of quasitoric manifolds")
    }

    /// ℂPⁿ over Δⁿ with λ = (I | -1) and `c = c₁ = (n+1)x`.
    pub fn projective_space(n: usize) -> Result<Self> {
        let p = SimplePolytope::simplex(n)?;
        let rows = (0..n)
            .map(|i| (0..=n).map(|j| if j == n { -1 } else { (i == j) as i64 }).collect())
            .collect();
        Self::with_default_spinc(p, CharacteristicMatrix::from_rows(rows)?)
    }

    /// S² over the interval with λ = (1 1); `γ = (1, 1)` is the spin
    /// structure (`v₁ + v₂ = 0`).
    pub fn two_sphere() -> Self {
        Self::with_default_spinc(
            SimplePolytope::interval(),
            CharacteristicMatrix::from_rows(vec![vec![1, 1]]).expect("1×2"),
        )
        .expect("S²")
    }

    /// (S²)ⁿ as the product of [`Self::two_sphere`].
    pub fn sphere_product(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("need at least one factor".into()));
        }
        let s = Self::two_sphere();
        Ok((1..n).fold(s.clone(), |acc, _| acc.product(&s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp2() -> QuasitoricManifold {
        QuasitoricManifold::projective_space(2).unwrap()
    }

    #[test]
    fn validate_examples() {
        let tri = SimplePolytope::simplex(2).unwrap();
        let good = CharacteristicMatrix::from_columns(2, &[vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        assert!(good.validate(&tri).is_ok());
        let bad = CharacteristicMatrix::from_columns(2, &[vec![1, 0], vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(
            bad.validate(&tri),
            Err(Error::InvalidLambda(vec![vec![1, 3], vec![2, 3]]))
        );
        let s2 = CharacteristicMatrix::from_rows(vec![vec![1, 1]]).unwrap();
        assert!(s2.validate(&SimplePolytope::interval()).is_ok());
        let wrong_shape = CharacteristicMatrix::from_rows(vec![vec![1, 1, 1]]).unwrap();
        assert!(matches!(
            wrong_shape.validate(&SimplePolytope::interval()),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn cp2_fixed_points() {
        let m = cp2();
        let fps = m.fixed_points();
        assert_eq!(fps.len(), 3);
        assert_eq!(fps[0].vertex, vec![0, 1]);
        assert_eq!(fps[0].weights, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(fps[0].sign, 1);
        let v23 = fps.iter().find(|f| f.vertex == vec![1, 2]).unwrap();
        assert_eq!(v23.weights, vec![vec![-1, 1], vec![-1, 0]]);
        // Toric: all local orientations agree.
        assert!(fps.iter().all(|f| f.orientation == 1));
    }

    #[test]
    fn sphere_fixed_points() {
        let s = QuasitoricManifold::two_sphere();
        let fps = s.fixed_points();
        assert_eq!(fps[0].weights, vec![vec![1]]);
        assert_eq!(fps[1].weights, vec![vec![1]]);
        assert_eq!((fps[0].sign, fps[1].sign), (1, 1));
        assert_eq!((fps[0].orientation, fps[1].orientation), (1, -1));
    }

    #[test]
    fn spin_detection() {
        assert!(!cp2().is_spin());
        assert!(QuasitoricManifold::projective_space(3).unwrap().is_spin());
        assert!(QuasitoricManifold::two_sphere().is_spin());
        assert!(QuasitoricManifold::sphere_product(3).unwrap().is_spin());
    }

    #[test]
    fn spinc_parity_is_enforced() {
        let m = cp2();
        assert!(m.with_gamma(vec![3, 1, 1]).is_ok());
        assert!(matches!(m.with_gamma(vec![0, 0, 0]), Err(Error::InvalidSpinc { .. })));
        // ℂP³ is spin, so γ = 0 is admissible.
        let cp3 = QuasitoricManifold::projective_space(3).unwrap();
        assert!(cp3.with_gamma(vec![0; 4]).is_ok());
    }

    #[test]
    fn generic_circles() {
        let m = cp2();
        let xi = m.generic_circle(&[]);
        assert!(m.check_generic(&xi).is_ok());
        let xi2 = m.generic_circle(&[xi.clone()]);
        assert_ne!(xi, xi2);
        assert!(matches!(
            m.check_generic(&[1, 0]),
            Err(Error::DegenerateCircle { .. })
        ));
    }
}
