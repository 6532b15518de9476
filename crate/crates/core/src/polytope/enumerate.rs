//! Exhaustive search for characteristic matrices on a fixed polytope.
//!
//! The columns at the base vertex are fixed to the standard basis, which
//! removes the `GL(n, ℤ)` change of torus coordinates. The remaining columns
//! are chosen facet by facet from `[-b, b]ⁿ \ {0}`; a partial assignment is
//! pruned as soon as a vertex whose facets are all assigned has a minor with
//! determinant other than ±1.

use super::manifold::CharacteristicMatrix;
use super::simple::{Facet, SimplePolytope};
use crate::exactalg::linalg::det_i64;

/// Independent subtree of the search: a fixed choice for the first free
/// column. Subtrees can be explored in parallel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SearchRoot(pub usize);

#[derive(Clone, Debug)]
pub struct CharacteristicSearch {
    polytope: SimplePolytope,
    candidates: Vec<Vec<i64>>,
    /// Free facets in assignment order.
    free: Vec<Facet>,
    /// `checks[i]`: vertices completed once `free[i]` is assigned.
    checks: Vec<Vec<Vec<Facet>>>,
    base_ok: bool,
}

impl CharacteristicSearch {
    pub fn new(polytope: &SimplePolytope, entry_bound: i64) -> Self {
        let n = polytope.dim();
        let base = polytope.base_vertex().clone();
        let free: Vec<Facet> = (0..polytope.facet_count()).filter(|f| !base.contains(f)).collect();
        let mut position = vec![0usize; polytope.facet_count()];
        for (i, &f) in free.iter().enumerate() {
            position[f] = i + 1;
        }
        let mut checks = vec![Vec::new(); free.len()];
        for v in polytope.vertices() {
            let last = v.iter().map(|&f| position[f]).max().unwrap_or(0);
            if last > 0 {
                checks[last - 1].push(v.clone());
            }
        }
        let side = (2 * entry_bound.max(0) + 1) as usize;
        let candidates: Vec<Vec<i64>> = (0..side.pow(n as u32))
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = (code % side) as i64 - entry_bound.max(0);
                        code /= side;
                        d
                    })
                    .collect::<Vec<i64>>()
            })
            .filter(|c| c.iter().any(|&x| x != 0))
            .collect();
        Self {
            polytope: polytope.clone(),
            candidates,
            free,
            checks,
            base_ok: entry_bound >= 1,
        }
    }

    fn base_columns(&self) -> Vec<Option<Vec<i64>>> {
        let n = self.polytope.dim();
        let mut cols = vec![None; self.polytope.facet_count()];
        for (k, &f) in self.polytope.base_vertex().iter().enumerate() {
            cols[f] = Some((0..n).map(|i| (i == k) as i64).collect());
        }
        cols
    }

    fn consistent(&self, cols: &[Option<Vec<i64>>], depth: usize) -> bool {
        let n = self.polytope.dim();
        self.checks[depth].iter().all(|v| {
            let minor: Vec<Vec<i64>> = (0..n)
                .map(|i| v.iter().map(|&f| cols[f].as_ref().expect("assigned")[i]).collect())
                .collect();
            det_i64(&minor).abs() == 1
        })
    }

    fn finish(&self, cols: &[Option<Vec<i64>>]) -> CharacteristicMatrix {
        let columns: Vec<Vec<i64>> = cols.iter().map(|c| c.clone().expect("complete")).collect();
        CharacteristicMatrix::from_columns(self.polytope.dim(), &columns).expect("shape")
    }

    /// Subtrees, one per admissible choice of the first free column.
    pub fn roots(&self) -> Vec<SearchRoot> {
        if !self.base_ok || self.free.is_empty() {
            return Vec::new();
        }
        let mut cols = self.base_columns();
        (0..self.candidates.len())
            .filter(|&c| {
                cols[self.free[0]] = Some(self.candidates[c].clone());
                self.consistent(&cols, 0)
            })
            .map(SearchRoot)
            .collect()
    }

    /// All valid matrices in one subtree, in search order.
    pub fn explore(&self, root: SearchRoot) -> Vec<CharacteristicMatrix> {
        let mut out = Vec::new();
        let mut cols = self.base_columns();
        cols[self.free[0]] = Some(self.candidates[root.0].clone());
        if !self.consistent(&cols, 0) {
            return out;
        }
        self.descend(&mut cols, 1, &mut out);
        out
    }

    fn descend(&self, cols: &mut Vec<Option<Vec<i64>>>, depth: usize, out: &mut Vec<CharacteristicMatrix>) {
        if depth == self.free.len() {
            out.push(self.finish(cols));
            return;
        }
        let f = self.free[depth];
        for cand in &self.candidates {
            cols[f] = Some(cand.clone());
            if self.consistent(cols, depth) {
                self.descend(cols, depth + 1, out);
            }
        }
        cols[f] = None;
    }

    /// Sequential enumeration over all subtrees.
    pub fn iter(&self) -> impl Iterator<Item = CharacteristicMatrix> + '_ {
        self.roots().into_iter().flat_map(move |r| self.explore(r))
    }
}

/// Every characteristic matrix on `p` with entries in `[-entry_bound,
/// entry_bound]` whose base-vertex minor is the identity.
pub fn enumerate_characteristic_matrices(
    p: &SimplePolytope,
    entry_bound: i64,
) -> impl Iterator<Item = CharacteristicMatrix> {
    let search = CharacteristicSearch::new(p, entry_bound);
    let roots = search.roots();
    roots.into_iter().flat_map(move |r| search.explore(r))
}
