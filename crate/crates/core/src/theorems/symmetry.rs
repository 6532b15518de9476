//! The constants `α_l` and bounds on the degree of symmetry of
//! `M × ∏ Hᵢ/Tᵢ`.

use crate::{Error, Result};

/// Maximum of `dim G / rank G` over simply connected compact simple `G` of
/// rank at most `l`.
pub fn alpha(l: i64) -> Result<u64> {
    Ok(match l {
        i64::MIN..=0 => return Err(Error::Argument(format!("α_l needs l ≥ 1, got {l}"))),
        1 => 3,
        2 | 3 => 7,
        4..=6 => 13,
        7 => 19,
        8..=14 => 31,
        _ => 2 * l as u64 + 1,
    })
}

/// Groups attaining `α_l`, as listed next to it.
pub fn alpha_groups(l: u64) -> &'static str {
    match l {
        1 => "SU(2)",
        2 => "G₂",
        3 => "Spin(7), Sp(3)",
        4 => "F₄",
        5 => "F₄",
        6 => "F₄, E₆",
        7 => "E₇",
        8..=14 => "E₈",
        15 => "E₈, Spin(31), Sp(15)",
        _ => "Spin(2l+1), Sp(l)",
    }
}

/// `(rank, dim)` of a simply connected compact simple group given by its
/// Cartan type, e.g. `"A3"`, `"E8"`.
pub fn simple_group(name: &str) -> Option<(u64, u64)> {
    let (kind, rank) = name.split_at(1);
    let l: u64 = rank.parse().ok()?;
    let dim = match (kind, l) {
        ("A", 1..) => l * (l + 2),
        ("B", 2..) | ("C", 3..) => l * (2 * l + 1),
        ("D", 4..) => l * (2 * l - 1),
        ("G", 2) => 14,
        ("F", 4) => 52,
        ("E", 6) => 78,
        ("E", 7) => 133,
        ("E", 8) => 248,
        _ => return None,
    };
    Some((l, dim))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryBoundInput {
    /// `(rank Hᵢ, dim Hᵢ)`.
    pub groups: Vec<(u64, u64)>,
    pub b2: u64,
}

/// `Σ dim Hᵢ` and `α_l Σ rank Hᵢ + b₂(M)`, with `l` the largest rank.
pub fn symmetry_bounds(input: &SymmetryBoundInput) -> Result<(u64, u64)> {
    if input.groups.iter().any(|&(r, d)| r == 0 || d == 0) {
        return Err(Error::Argument("ranks and dimensions must be positive".into()));
    }
    let l = input
        .groups
        .iter()
        .map(|g| g.0)
        .max()
        .ok_or_else(|| Error::Argument("no groups".into()))?;
    let lower = input.groups.iter().map(|g| g.1).sum();
    let rank: u64 = input.groups.iter().map(|g| g.0).sum();
    Ok((lower, alpha(l as i64)? * rank + input.b2))
}
