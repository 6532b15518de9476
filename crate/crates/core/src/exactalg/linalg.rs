//! Dense exact linear algebra over ℚ, ℤ and 𝔽₂.

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};

/// Row-major rational matrix.
pub type QMatrix = Vec<Vec<Rational>>;

/// Reduced row echelon form. Returns the reduced nonzero rows and their
/// pivot columns. Pivots are chosen left to right.
pub fn rref(mut rows: QMatrix, ncols: usize) -> (QMatrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: QMatrix, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of the right kernel `{x : A x = 0}`; one vector per free column, in
/// increasing order of the free column.
pub fn kernel(a: &QMatrix, ncols: usize) -> Vec<Vec<Rational>> {
    let (rows, pivots) = rref(a.clone(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b`. Returns `None` if inconsistent; free variables are set
/// to zero.
pub fn solve(a: &QMatrix, b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (rows, pivots) = rref(aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let aug: QMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { int(1) } else { int(0) }));
            r
        })
        .collect();
    let (rows, pivots) = rref(aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det(a: &QMatrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        let pivot = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= &f * y;
            }
        }
    }
    d
}

pub fn mat_vec(a: &QMatrix, x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .map(|(a, b)| a * b)
                .fold(Rational::zero(), |s, v| s + v)
        })
        .collect()
}

pub fn to_qmatrix(a: &[Vec<i64>]) -> QMatrix {
    a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

/// Determinant of a small integer matrix by fraction-free (Bareiss) elimination.
pub fn det_i64(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(a: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let inv = inverse(&to_qmatrix(a))?;
    inv.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    if x.is_integer() {
                        i64::try_from(x.to_integer()).ok()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

/// Whether `v` lies in the 𝔽₂-span of `rows` (all entries reduced mod 2).
pub fn in_f2_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let ncols = v.len();
    let mut basis: Vec<Vec<u8>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let reduce = |x: &mut Vec<u8>, basis: &[Vec<u8>], pivots: &[usize]| {
        for (b, &p) in basis.iter().zip(pivots) {
            if x[p] == 1 {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi ^= bi;
                }
            }
        }
    };
    for r in rows {
        let mut x: Vec<u8> = r.iter().map(|e| (e.rem_euclid(2)) as u8).collect();
        reduce(&mut x, &basis, &pivots);
        if let Some(p) = (0..ncols).find(|&c| x[c] == 1) {
            for b in basis.iter_mut() {
                if b[p] == 1 {
                    for (bi, xi) in b.iter_mut().zip(&x) {
                        *bi ^= xi;
                    }
                }
            }
            basis.push(x);
            pivots.push(p);
        }
    }
    let mut x: Vec<u8> = v.iter().map(|e| (e.rem_euclid(2)) as u8).collect();
    reduce(&mut x, &basis, &pivots);
    x.iter().all(|&e| e == 0)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_primitive(v: &[i64]) -> bool {
    v.iter().fold(0, |g, &x| gcd_i64(g, x)) == 1
}

pub fn abs_max(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).fold(Rational::zero(), |a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_rational_det() {
        let a = vec![vec![2, -1, 3], vec![0, 4, 1], vec![5, 2, -2]];
        assert_eq!(det_i64(&a), -85);
        assert_eq!(det(&to_qmatrix(&a)), int(-85));
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), -1);
    }

    #[test]
    fn kernel_of_row() {
        let a = to_qmatrix(&[vec![1, 1]]);
        assert_eq!(kernel(&a, 2), vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn unimodular_inverse_of_cp2_minor() {
        let a = vec![vec![0, -1], vec![1, -1]];
        assert_eq!(unimodular_inverse(&a).unwrap(), vec![vec![-1, 1], vec![-1, 0]]);
        assert!(unimodular_inverse(&[vec![2]]).is_none());
    }

    #[test]
    fn f2_span() {
        let rows = vec![vec![1, 0, -1], vec![0, 1, -1]];
        assert!(!in_f2_span(&rows, &[1, 1, 1]));
        assert!(in_f2_span(&rows, &[1, 1, 0]));
        assert!(in_f2_span(&rows, &[2, 4, 0]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = to_qmatrix(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&a, &[int(1), int(3)], 2).is_none());
        assert_eq!(solve(&a, &[int(1), int(2)], 2).unwrap(), vec![int(1), int(0)]);
    }
}
