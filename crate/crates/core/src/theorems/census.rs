//! Exhaustive census of characteristic matrices over connected sums of
//! simplices, checking `0 < βᵢ ≤ n+1` on every model.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cohomology::{beta_coefficients, build_face_ring};
use crate::exactalg::{int, Rational};
use crate::polytope::{CharacteristicMatrix, CharacteristicSearch, QuasitoricManifold, SimplePolytope};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub k: usize,
    pub entry_bound: i64,
    /// Characteristic matrices found.
    pub total: usize,
    /// Models whose ring has the connected-sum pattern.
    pub matched: usize,
    /// Distinct `β`, sorted.
    pub betas: Vec<Vec<Rational>>,
    /// Models with some `βᵢ ∉ (0, n+1]`.
    pub violations: Vec<(Vec<Vec<i64>>, Vec<Rational>)>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

enum Outcome {
    Matched(Vec<Rational>),
    Unmatched,
}

fn classify(p: &SimplePolytope, lambda: CharacteristicMatrix) -> Result<Outcome> {
    let m = QuasitoricManifold::with_default_spinc(p.clone(), lambda)?;
    let ring = build_face_ring(&m)?;
    match beta_coefficients(&ring) {
        Ok(b) => Ok(Outcome::Matched(b)),
        Err(Error::Shape(_)) => Ok(Outcome::Unmatched),
        Err(e) => Err(e),
    }
}

/// Enumerates `λ` with entries in `[-bound, bound]` on the `k`-fold connected
/// sum of `n`-simplices.
pub fn finiteness_census(n: usize, k: usize, entry_bound: i64) -> Result<CensusReport> {
    if n < 3 || k >= n {
        return Err(Error::Precondition(format!("census needs n ≥ 3 and k < n, got n = {n}, k = {k}")));
    }
    let p = SimplePolytope::stacked_simplices(n, k)?;
    let search = CharacteristicSearch::new(&p, entry_bound);
    let per_root: Vec<Vec<(Vec<Vec<i64>>, Outcome)>> = search
        .roots()
        .into_par_iter()
        .map(|root| {
            search
                .explore(root)
                .into_iter()
                .map(|lambda| {
                    let rows = lambda.rows().to_vec();
                    classify(&p, lambda).map(|o| (rows, o))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut report = CensusReport {
        n,
        k,
        entry_bound,
        total: 0,
        matched: 0,
        betas: Vec::new(),
        violations: Vec::new(),
    };
    let mut betas = BTreeSet::new();
    let top = int(n as i64 + 1);
    for (rows, outcome) in per_root.into_iter().flatten() {
        report.total += 1;
        if let Outcome::Matched(beta) = outcome {
            report.matched += 1;
            if beta.iter().any(|b| *b <= int(0) || *b > top) {
                report.violations.push((rows, beta.clone()));
            }
            let mut key = beta;
            key.sort();
            betas.insert(key);
        }
    }
    report.betas = betas.into_iter().collect();
    report.violations.sort();
    Ok(report)
}
