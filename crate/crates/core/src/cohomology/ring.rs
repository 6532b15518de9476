use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exactalg::linalg::{inverse, rref, to_qmatrix};
use crate::exactalg::{int, Rational};
use crate::polytope::QuasitoricManifold;
use crate::{Error, Result};

/// Exponent vector over the free generators.
pub type Monomial = Vec<u32>;

/// Homogeneous or mixed polynomial in the free generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![0; vars], c);
        p
    }

    /// `Σ coeffs[i]·y_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn monomial(exps: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    pub fn add_term(&mut self, exps: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the first term; relations are expected to be homogeneous.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|e| e.iter().sum())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

/// All exponent vectors over `vars` variables of total degree `d`, in
/// descending lexicographic order.
pub(crate) fn monomials(vars: usize, d: u32) -> Vec<Monomial> {
    fn go(vars: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == vars {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(vars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(vars, d, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug)]
pub(crate) struct RingData {
    pub vars: usize,
    pub top: usize,
    /// Standard monomials per degree.
    pub basis: Vec<Vec<Monomial>>,
    /// Normal form of every monomial of degree `d ≤ top`.
    pub normal: Vec<HashMap<Monomial, Vec<Rational>>>,
    /// Integral of the unique top basis element.
    pub top_value: Rational,
    /// Facet classes (or user generators) as linear forms in the free variables.
    pub generators: Vec<Vec<Rational>>,
    /// Formal Chern roots of the stable tangent bundle.
    pub roots: Vec<Vec<Rational>>,
    /// First Chern class of the Spin^c structure.
    pub spinc: Vec<Rational>,
}

/// Rational cohomology ring, truncated above the top degree, with integration
/// against the fundamental class.
///
/// Degrees are counted in units of 2: degree `d` here is `H^{2d}`. Cloning is
/// cheap and clones compare equal.
#[derive(Clone)]
pub struct FaceRing(pub(crate) Arc<RingData>);

impl PartialEq for FaceRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl fmt::Debug for FaceRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FaceRing")
            .field("vars", &self.0.vars)
            .field("dims", &self.dims())
            .finish()
    }
}

/// Description of a graded algebra `ℚ[y₁…y_k]/J` generated in degree 1.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub vars: usize,
    pub top: usize,
    /// Homogeneous generators of `J`.
    pub relations: Vec<Poly>,
    /// A top-degree polynomial with known integral.
    pub top_class: Poly,
    pub top_value: Rational,
    pub generators: Vec<Vec<Rational>>,
    pub roots: Vec<Vec<Rational>>,
    pub spinc: Vec<Rational>,
}

impl FaceRing {
    pub fn from_presentation(p: RingPresentation) -> Result<Self> {
        let k = p.vars;
        let mut basis = Vec::with_capacity(p.top + 1);
        let mut normal = Vec::with_capacity(p.top + 1);
        for d in 0..=p.top as u32 {
            let cols = monomials(k, d);
            let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows = Vec::new();
            for rel in &p.relations {
                let Some(e) = rel.degree() else { continue };
                if e > d {
                    continue;
                }
                for mu in monomials(k, d - e) {
                    let prod = rel.mul(&Poly::monomial(mu, Rational::one()));
                    let mut row = vec![Rational::zero(); cols.len()];
                    for (m, c) in prod.terms() {
                        let j = *index.get(m).ok_or_else(|| Error::Argument("relation is not homogeneous".into()))?;
                        row[j] = c.clone();
                    }
                    rows.push(row);
                }
            }
            let (reduced, pivots) = rref(rows, cols.len());
            let free: Vec<usize> = (0..cols.len()).filter(|c| !pivots.contains(c)).collect();
            let position: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let mut nf = HashMap::with_capacity(cols.len());
            for (c, mono) in cols.iter().enumerate() {
                let mut v = vec![Rational::zero(); free.len()];
                if let Some(i) = position.get(&c) {
                    v[*i] = Rational::one();
                } else {
                    let r = pivots.iter().position(|&q| q == c).expect("pivot row");
                    for (i, &f) in free.iter().enumerate() {
                        v[i] = -reduced[r][f].clone();
                    }
                }
                nf.insert(mono.clone(), v);
            }
            basis.push(free.iter().map(|&c| cols[c].clone()).collect::<Vec<_>>());
            normal.push(nf);
        }
        if basis[p.top].len() != 1 {
            return Err(Error::Internal(format!(
                "top degree has dimension {}, expected 1",
                basis[p.top].len()
            )));
        }
        let mut raw = Rational::zero();
        for (mono, c) in p.top_class.terms() {
            let nf = normal[p.top]
                .get(mono)
                .ok_or_else(|| Error::Argument("normalizing class is not in the top degree".into()))?;
            raw += c * &nf[0];
        }
        if raw.is_zero() {
            return Err(Error::Argument("normalizing class vanishes in the top degree".into()));
        }
        let data = RingData {
            vars: k,
            top: p.top,
            basis,
            normal,
            top_value: p.top_value / raw,
            generators: p.generators,
            roots: p.roots,
            spinc: p.spinc,
        };
        Ok(FaceRing(Arc::new(data)))
    }

    /// `ℚ[x]/(x^{n+1})` with `⟨xⁿ⟩ = 1`, tangent roots `rᵢ·x` and
    /// `c₁ = c·x`.
    pub fn truncated_polynomial(n: usize, roots: &[i64], c1: i64) -> Result<Self> {
        Self::from_presentation(RingPresentation {
            vars: 1,
            top: n,
            relations: Vec::new(),
            top_class: Poly::monomial(vec![n as u32], Rational::one()),
            top_value: Rational::one(),
            generators: vec![vec![Rational::one()]],
            roots: roots.iter().map(|&r| vec![int(r)]).collect(),
            spinc: vec![int(c1)],
        })
    }

    pub fn top_degree(&self) -> usize {
        self.0.top
    }

    pub fn free_variables(&self) -> usize {
        self.0.vars
    }

    pub fn dim(&self, d: usize) -> usize {
        self.0.basis.get(d).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.0.basis.iter().map(Vec::len).collect()
    }

    /// Sum of the even Betti numbers.
    pub fn total_dimension(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        &self.0.basis[d]
    }

    pub fn generator_count(&self) -> usize {
        self.0.generators.len()
    }

    pub(crate) fn normal_form(&self, mono: &Monomial) -> Option<&Vec<Rational>> {
        let d: u32 = mono.iter().sum();
        self.0.normal.get(d as usize).and_then(|m| m.get(mono))
    }

    pub(crate) fn top_value(&self) -> &Rational {
        &self.0.top_value
    }

    pub(crate) fn generator_form(&self, i: usize) -> &[Rational] {
        &self.0.generators[i]
    }

    pub(crate) fn root_forms(&self) -> &[Vec<Rational>] {
        &self.0.roots
    }

    pub(crate) fn spinc_form(&self) -> &[Rational] {
        &self.0.spinc
    }
}

/// The rational cohomology ring of `m`, presented on the generators not in
/// the base vertex. The integral of the product of the base-vertex facet
/// classes is normalized to that vertex's orientation sign.
pub fn build_face_ring(m: &QuasitoricManifold) -> Result<FaceRing> {
    let n = m.dim();
    let facets = m.facet_count();
    let base = m.polytope().base_vertex().clone();
    let free: Vec<usize> = (0..facets).filter(|f| !base.contains(f)).collect();
    let k = free.len();
    let lambda = m.lambda();
    let base_inv = inverse(&to_qmatrix(&lambda.minor(&base))).ok_or_else(|| {
        Error::InvalidLambda(vec![base.iter().map(|f| f + 1).collect()])
    })?;

    // v_base = -Λ_base⁻¹ Λ_free v_free
    let mut generators = vec![vec![Rational::zero(); k]; facets];
    for (j, &f) in free.iter().enumerate() {
        generators[f][j] = Rational::one();
    }
    for (a, &fa) in base.iter().enumerate() {
        for (j, &f) in free.iter().enumerate() {
            let s: Rational = base_inv[a].iter().zip(lambda.rows()).map(|(b, row)| b * int(row[f])).sum();
            generators[fa][j] = -s;
        }
    }

    let mut relations = Vec::new();
    for size in 2..=n {
        for set in subsets(facets, size) {
            if m.polytope().is_face(&set) {
                continue;
            }
            let minimal = (0..size).all(|skip| {
                let sub: Vec<usize> = set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &f)| f).collect();
                m.polytope().is_face(&sub)
            });
            if minimal {
                let prod = set
                    .iter()
                    .fold(Poly::constant(k, Rational::one()), |acc, &f| acc.mul(&Poly::linear(&generators[f])));
                if !prod.is_zero() {
                    relations.push(prod);
                }
            }
        }
    }

    let top_class = base
        .iter()
        .fold(Poly::constant(k, Rational::one()), |acc, &f| acc.mul(&Poly::linear(&generators[f])));
    let orientation = m
        .fixed_points()
        .iter()
        .find(|p| p.vertex == base)
        .map(|p| p.orientation)
        .ok_or_else(|| Error::Internal("base vertex has no fixed point".into()))?;
    let spinc = (0..k)
        .map(|j| {
            m.gamma()
                .iter()
                .enumerate()
                .map(|(f, &g)| int(g) * &generators[f][j])
                .sum()
        })
        .collect();
    FaceRing::from_presentation(RingPresentation {
        vars: k,
        top: n,
        relations,
        top_class,
        top_value: int(orientation as i64),
        roots: generators.clone(),
        generators,
        spinc,
    })
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, size, &mut Vec::new(), &mut out);
    out
}
