//! Coefficients of `p₁` on a basis of squares for rings of connected-sum type
//! `ℚ[v₁…v_k]/(vᵢvⱼ, vᵢⁿ ∓ vⱼⁿ)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::class::{pontryagin_p1, tangent_roots, CohomologyClass};
use super::ring::FaceRing;
use crate::exactalg::linalg::{det, inverse, kernel, rank, solve, QMatrix};
use crate::exactalg::rational::{normalize_sign, primitive_integer_vector};
use crate::exactalg::{int, Rational};
use crate::{Error, Result};

/// Matrix of `x ↦ y·x` from degree 1 to degree 2; column `j` is the image
/// of the `j`-th basis element.
fn multiplication_matrix(ring: &FaceRing, y: &CohomologyClass) -> QMatrix {
    let k = ring.dim(1);
    let rows = ring.dim(2);
    let mut out = vec![vec![Rational::zero(); k]; rows];
    for j in 0..k {
        let mut e = vec![Rational::zero(); k];
        e[j] = Rational::one();
        let img = y.mul(&CohomologyClass::linear(ring, &e));
        for (i, c) in img.component(2).iter().enumerate() {
            out[i][j] = c.clone();
        }
    }
    out
}

fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, r)| x * &r[j]).sum())
                .collect()
        })
        .collect()
}

/// Coefficients `c₀…c_k` (low to high) of `det(xI − A)` by Faddeev–LeVerrier.
pub(crate) fn characteristic_polynomial(a: &QMatrix) -> Vec<Rational> {
    let k = a.len();
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[k] = Rational::one();
    let mut m: QMatrix = vec![vec![Rational::zero(); k]; k];
    for i in 1..=k {
        let mut next = mat_mul(a, &m);
        for (d, row) in next.iter_mut().enumerate() {
            row[d] += &coeffs[k + 1 - i];
        }
        let am = mat_mul(a, &next);
        let trace: Rational = (0..k).map(|d| am[d][d].clone()).sum();
        coeffs[k - i] = -trace / int(i as i64);
        m = next;
    }
    coeffs
}

fn eval(poly: &[BigInt], z: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * z + c)
}

fn derivative(poly: &[BigInt]) -> Vec<BigInt> {
    poly.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// All roots of a monic integer polynomial (low to high coefficients) when
/// they are integers, largest first; `None` otherwise.
///
/// Newton iteration from above the Cauchy bound, rounding up after each step,
/// stays at or above the largest real root. The root is removed by synthetic
/// division and the search restarts.
pub(crate) fn integer_roots(poly: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut p = poly.to_vec();
    let mut roots = Vec::new();
    while p.len() > 1 {
        let deg = p.len() - 1;
        let bound = BigInt::one() + p[..deg].iter().map(|c| c.abs()).max().unwrap_or_default();
        let dp = derivative(&p);
        let mut z = bound.clone();
        let mut steps = 0usize;
        let root = loop {
            let v = eval(&p, &z);
            if v.is_zero() {
                break z;
            }
            steps += 1;
            if steps > 100_000 || z < -&bound {
                return None;
            }
            let d = eval(&dp, &z);
            let mut next = if d.is_zero() {
                &z - 1
            } else {
                // ceil(z - v/d) = z - floor(v/d)
                &z - v.div_floor(&d)
            };
            if next >= z {
                next = &z - 1;
            }
            z = next;
        };
        // synthetic division by (z - root)
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..deg).rev() {
            carry = &p[i + 1] + &carry * &root;
            quotient[i] = carry.clone();
        }
        roots.push(root);
        p = quotient;
    }
    Some(roots)
}

/// Rational eigenvalues of `a`, provided they are distinct.
fn distinct_rational_eigenvalues(a: &QMatrix) -> Option<Vec<Rational>> {
    let chi = characteristic_polynomial(a);
    let k = chi.len() - 1;
    let scale = chi.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // z = scale·x turns χ into a monic integer polynomial
    let mut power = BigInt::one();
    let mut monic = vec![BigInt::zero(); k + 1];
    for i in (0..=k).rev() {
        let c = &chi[i] * Rational::from_integer(power.clone());
        if !c.is_integer() {
            return None;
        }
        monic[i] = c.to_integer();
        power *= &scale;
    }
    let roots = integer_roots(&monic)?;
    let mut sorted = roots.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != k {
        return None;
    }
    Some(roots.into_iter().map(|r| Rational::new(r, scale.clone())).collect())
}

fn probe_vectors(k: usize, attempt: usize) -> (Vec<Rational>, Vec<Rational>) {
    let y1 = (0..k).map(|i| int(1 + ((3 * i + 5 * attempt) % 7) as i64)).collect();
    let y2 = (0..k).map(|i| int(1 + ((i * i + 2 * i + 11 * attempt) % 13) as i64)).collect();
    (y1, y2)
}

/// Basis `v₁…v_k` of degree 1 with `vᵢvⱼ = 0` for `i ≠ j`, squares forming a
/// basis of degree 2 and `⟨vⱼⁿ⟩ = ±1`, each `vⱼ` primitive in the integral
/// lattice spanned by the free generators.
pub fn connected_sum_basis(ring: &FaceRing) -> Result<Vec<CohomologyClass>> {
    let k = ring.dim(1);
    let n = ring.top_degree();
    if ring.dim(2) != k {
        return Err(Error::Shape(format!(
            "degree-4 dimension {} differs from b₂ = {k}",
            ring.dim(2)
        )));
    }
    for attempt in 0..32 {
        let (y1, y2) = probe_vectors(k, attempt);
        let m1 = multiplication_matrix(ring, &CohomologyClass::linear(ring, &y1));
        let Some(m1_inv) = inverse(&m1) else { continue };
        let m2 = multiplication_matrix(ring, &CohomologyClass::linear(ring, &y2));
        let a = mat_mul(&m1_inv, &m2);
        let Some(eigen) = distinct_rational_eigenvalues(&a) else { continue };
        let mut vectors = Vec::with_capacity(k);
        for lam in &eigen {
            let mut shifted = a.clone();
            for (d, row) in shifted.iter_mut().enumerate() {
                row[d] -= lam;
            }
            let ker = kernel(&shifted, k);
            let Some(mut v) = ker.first().and_then(|v| primitive_integer_vector(v)) else {
                return Err(Error::Internal("eigenvector vanished".into()));
            };
            normalize_sign(&mut v);
            vectors.push(v);
        }
        vectors.sort();
        let q: QMatrix = vectors
            .iter()
            .map(|v| v.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        if det(&q).abs() != Rational::one() {
            return Err(Error::Shape("simultaneous eigenbasis is not unimodular".into()));
        }
        let classes: Vec<CohomologyClass> = q.iter().map(|v| CohomologyClass::linear(ring, v)).collect();
        check_connected_sum(&classes, n)?;
        return Ok(classes);
    }
    Err(Error::Shape("no basis with vanishing mixed products".into()))
}

fn check_connected_sum(basis: &[CohomologyClass], n: usize) -> Result<()> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !basis[i].mul(&basis[j]).is_zero() {
                return Err(Error::Shape(format!("v{}·v{} ≠ 0", i + 1, j + 1)));
            }
        }
        let top = basis[i].pow(n as u32).integrate()?;
        if top.abs() != Rational::one() {
            return Err(Error::Shape(format!("⟨v{}^{n}⟩ = {top}, expected ±1", i + 1)));
        }
    }
    if let Some(first) = basis.first() {
        let ring = first.ring();
        let squares: QMatrix = basis.iter().map(|b| b.pow(2).component(2).to_vec()).collect();
        if rank(squares, ring.dim(2)) != ring.dim(2) {
            return Err(Error::Shape("squares do not span degree 4".into()));
        }
    }
    Ok(())
}

/// `βⱼ = Σᵢ αᵢⱼ²` where the tangent roots are `uᵢ = Σⱼ αᵢⱼ vⱼ`. When the basis
/// has vanishing mixed products this is the expansion `p₁ = Σ βⱼ vⱼ²`, which
/// is verified.
pub fn beta_from_basis(ring: &FaceRing, basis: &[CohomologyClass]) -> Result<Vec<Rational>> {
    let k = ring.dim(1);
    if basis.len() != k || basis.iter().any(|b| b.degree().is_some_and(|d| d != 1)) {
        return Err(Error::Shape(format!("need {k} classes of degree 2")));
    }
    let columns: Vec<&[Rational]> = basis.iter().map(|b| b.component(1)).collect();
    let matrix: QMatrix = (0..k).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let mut beta = vec![Rational::zero(); k];
    for root in tangent_roots(ring) {
        let alpha = solve(&matrix, root.component(1), k)
            .ok_or_else(|| Error::Shape("classes do not span degree 2".into()))?;
        for (b, a) in beta.iter_mut().zip(&alpha) {
            *b += a * a;
        }
    }
    if rank(matrix, k) != k {
        return Err(Error::Shape("classes are linearly dependent".into()));
    }
    let expansion = basis
        .iter()
        .zip(&beta)
        .fold(CohomologyClass::zero(ring), |acc, (b, c)| acc.add(&b.pow(2).scale(c)));
    if expansion != pontryagin_p1(ring) {
        return Err(Error::Shape("p₁ is not Σ βⱼ vⱼ² on this basis".into()));
    }
    Ok(beta)
}

/// Coefficients of `p₁` on the squares of the connected-sum basis. Rings of
/// real dimension 4 are rejected: the squares need not be independent there.
pub fn beta_coefficients(ring: &FaceRing) -> Result<Vec<Rational>> {
    if ring.top_degree() < 3 {
        return Err(Error::Shape(format!(
            "connected-sum pattern needs n ≥ 3, got n = {}",
            ring.top_degree()
        )));
    }
    let basis = connected_sum_basis(ring)?;
    beta_from_basis(ring, &basis)
}
