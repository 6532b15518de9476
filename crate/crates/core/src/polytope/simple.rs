use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Facet index, `0..m`.
pub type Facet = usize;

/// A vertex given by the sorted list of the `n` facets containing it.
pub type Vertex = Vec<Facet>;

/// Combinatorial simple polytope of dimension `n` with `m` facets.
///
/// Invariants checked on construction: every vertex is a sorted set of `n`
/// distinct facets, every facet contains a vertex, every ridge of the dual
/// complex lies in exactly two vertices and the vertex-edge graph is
/// connected. Vertices are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplePolytope {
    dim: usize,
    facets: usize,
    vertices: Vec<Vertex>,
}

impl SimplePolytope {
    pub fn new(dim: usize, facets: usize, vertices: Vec<Vertex>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Argument("polytope dimension must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for v in vertices {
            let mut v = v;
            v.sort_unstable();
            v.dedup();
            if v.len() != dim {
                return Err(Error::Argument(format!(
                    "vertex {v:?} does not consist of {dim} distinct facets"
                )));
            }
            if v.iter().any(|&f| f >= facets) {
                return Err(Error::Argument(format!("vertex {v:?} names a facet ≥ {facets}")));
            }
            if !set.insert(v.clone()) {
                return Err(Error::Argument(format!("duplicate vertex {v:?}")));
            }
        }
        let p = Self {
            dim,
            facets,
            vertices: set.into_iter().collect(),
        };
        p.check_structure()?;
        Ok(p)
    }

    fn check_structure(&self) -> Result<()> {
        let mut seen = vec![false; self.facets];
        for v in &self.vertices {
            for &f in v {
                seen[f] = true;
            }
        }
        if let Some(f) = seen.iter().position(|s| !s) {
            return Err(Error::Argument(format!("facet {} contains no vertex", f + 1)));
        }
        for (ridge, owners) in self.ridges() {
            if owners.len() != 2 {
                return Err(Error::Argument(format!(
                    "ridge {ridge:?} lies in {} vertices, expected 2",
                    owners.len()
                )));
            }
        }
        let adj = self.adjacency();
        let mut reached = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        reached[0] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if !reached[j] {
                    reached[j] = true;
                    queue.push_back(j);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::Argument("vertex-edge graph is disconnected".into()));
        }
        Ok(())
    }

    /// Map from each `(n-1)`-subset of a vertex to the vertices containing it.
    fn ridges(&self) -> BTreeMap<Vec<Facet>, Vec<usize>> {
        let mut map: BTreeMap<Vec<Facet>, Vec<usize>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            for skip in 0..v.len() {
                let ridge: Vec<Facet> = v
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, f)| *f)
                    .collect();
                map.entry(ridge).or_default().push(i);
            }
        }
        map
    }

    /// Neighbours of every vertex (sharing `n-1` facets).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for owners in self.ridges().values() {
            for &a in owners {
                for &b in owners {
                    if a != b {
                        adj[a].push(b);
                    }
                }
            }
        }
        adj
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: &[Facet]) -> bool {
        self.vertices.binary_search_by(|x| x.as_slice().cmp(v)).is_ok()
    }

    /// Lexicographically least vertex.
    pub fn base_vertex(&self) -> &Vertex {
        &self.vertices[0]
    }

    /// Whether the facets in `set` have a common vertex, i.e. span a face.
    pub fn is_face(&self, set: &[Facet]) -> bool {
        self.vertices
            .iter()
            .any(|v| set.iter().all(|f| v.binary_search(f).is_ok()))
    }

    /// Orientation signs of the vertices as maximal simplices of the dual
    /// sphere, with the base vertex positive. The sign of a vertex compares
    /// its ascending facet order with a global orientation of the polytope.
    pub fn orientation_signs(&self) -> Result<Vec<i8>> {
        let mut sign = vec![0i8; self.vertices.len()];
        sign[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        let ridges = self.ridges();
        let pos = |v: &Vertex, f: Facet| v.iter().position(|&x| x == f).unwrap();
        while let Some(i) = queue.pop_front() {
            for (ridge, owners) in &ridges {
                if !owners.contains(&i) {
                    continue;
                }
                let j = if owners[0] == i { owners[1] } else { owners[0] };
                let vi = &self.vertices[i];
                let vj = &self.vertices[j];
                let a = *vi.iter().find(|f| !ridge.contains(f)).unwrap();
                let b = *vj.iter().find(|f| !ridge.contains(f)).unwrap();
                let pi = if pos(vi, a) % 2 == 0 { 1 } else { -1 };
                let pj = if pos(vj, b) % 2 == 0 { 1 } else { -1 };
                // Induced orientations on the shared ridge must be opposite.
                let want = -sign[i] * pi * pj;
                if sign[j] == 0 {
                    sign[j] = want;
                    queue.push_back(j);
                } else if sign[j] != want {
                    return Err(Error::Argument("dual complex is not orientable".into()));
                }
            }
        }
        Ok(sign)
    }

    /// Simplex Δⁿ: facets `0..=n`, vertices are all `n`-subsets.
    pub fn simplex(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("simplex dimension must be ≥ 1".into()));
        }
        let vertices = (0..=n)
            .map(|skip| (0..=n).filter(|&f| f != skip).collect())
            .collect();
        Self::new(n, n + 1, vertices)
    }

    /// Cube Iⁿ: facets `i` and `i+n` are opposite.
    pub fn cube(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("cube dimension must be ≥ 1".into()));
        }
        let vertices = (0..1usize << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { i + n } else { i })
                    .collect()
            })
            .collect();
        Self::new(n, 2 * n, vertices)
    }

    pub fn interval() -> Self {
        Self::cube(1).expect("interval")
    }

    /// k-gon with cyclically adjacent facets.
    pub fn polygon(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Argument("a polygon needs at least 3 edges".into()));
        }
        let vertices = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
        Self::new(2, k, vertices)
    }

    /// Product polytope; facets of `self` come first, then those of `other`.
    pub fn product(&self, other: &Self) -> Self {
        let shift = self.facets;
        let vertices = self
            .vertices
            .iter()
            .flat_map(|a| {
                other.vertices.iter().map(move |b| {
                    a.iter().copied().chain(b.iter().map(|f| f + shift)).collect()
                })
            })
            .collect();
        Self::new(self.dim + other.dim, self.facets + other.facets, vertices)
            .expect("product of simple polytopes is simple")
    }

    /// Connected sum at vertices `v` of `self` and `w` of `other`.
    ///
    /// The facets at `w` are identified with the facets at `v`: the k-th facet
    /// of `w` (ascending) is glued to `v[pairing[k]]`, with `pairing` the
    /// identity by default. Remaining facets of `other` are appended in order.
    pub fn connected_sum(
        &self,
        v: &[Facet],
        other: &Self,
        w: &[Facet],
        pairing: Option<&[usize]>,
    ) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Argument("connected sum needs equal dimensions".into()));
        }
        if !self.contains_vertex(v) {
            return Err(Error::Argument(format!("{v:?} is not a vertex")));
        }
        if !other.contains_vertex(w) {
            return Err(Error::Argument(format!("{w:?} is not a vertex")));
        }
        let n = self.dim;
        let identity: Vec<usize> = (0..n).collect();
        let pairing = pairing.unwrap_or(&identity);
        let mut check = pairing.to_vec();
        check.sort_unstable();
        if check != identity {
            return Err(Error::Argument(format!("{pairing:?} is not a permutation of 0..{n}")));
        }
        let mut relabel = vec![usize::MAX; other.facets];
        for (k, &f) in w.iter().enumerate() {
            relabel[f] = v[pairing[k]];
        }
        let mut next = self.facets;
        for r in relabel.iter_mut() {
            if *r == usize::MAX {
                *r = next;
                next += 1;
            }
        }
        let vertices = self
            .vertices
            .iter()
            .filter(|x| x.as_slice() != v)
            .cloned()
            .chain(
                other
                    .vertices
                    .iter()
                    .filter(|x| x.as_slice() != w)
                    .map(|x| x.iter().map(|f| relabel[*f]).collect()),
            )
            .collect();
        Self::new(n, next, vertices)
    }

    /// Cuts off vertex `v`: the connected sum with a simplex.
    pub fn vertex_cut(&self, v: &[Facet]) -> Result<Self> {
        let simplex = Self::simplex(self.dim)?;
        let w = simplex.base_vertex().clone();
        self.connected_sum(v, &simplex, &w, None)
    }

    /// k-fold connected sum of n-simplices, each new summand glued at the
    /// base vertex of the polytope built so far.
    pub fn stacked_simplices(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("need at least one summand".into()));
        }
        let mut p = Self::simplex(n)?;
        for _ in 1..k {
            let v = p.base_vertex().clone();
            p = p.vertex_cut(&v)?;
        }
        Ok(p)
    }
}
