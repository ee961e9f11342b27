//! Small exact linear-algebra toolkit over `BigInt` / `BigRational`.
//!
//! Everything here works on dense row-major matrices and is sized for the
//! 19-dimensional problems of this crate, not for general use.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn to_rational(m: &[Vec<BigInt>]) -> QMat {
    m.iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect()
}

/// Exact determinant via fraction-free Bareiss elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IMat = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let mut a = to_rational(m);
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let piv = (r..rows).find(|&i| !a[i][c].is_zero());
        let Some(piv) = piv else { continue };
        a.swap(r, piv);
        let inv = a[r][c].clone();
        for j in c..cols {
            let v = &a[r][j] / &inv;
            a[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Solves `a · x = b` for square `a`; `None` if singular.
pub fn solve(a: &QMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: QMat = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        let inv = m[c][c].clone();
        for j in c..=n {
            let v = &m[c][j] / &inv;
            m[c][j] = v;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = &m[i][j] - &f * &m[c][j];
                    m[i][j] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square rational matrix; `None` if singular.
pub fn invert(a: &QMat) -> Option<QMat> {
    let n = a.len();
    let mut m: QMat = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        let inv = m[c][c].clone();
        for j in c..2 * n {
            let v = &m[c][j] / &inv;
            m[c][j] = v;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..2 * n {
                    let v = &m[i][j] - &f * &m[c][j];
                    m[i][j] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right null space of an integer matrix (rows are
/// constraints), as rational vectors.
pub fn kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = to_rational(m);
    let mut pivot_col = vec![usize::MAX; rows];
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].clone();
        for j in 0..cols {
            let v = &a[r][j] / &inv;
            a[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        pivot_col[r] = c;
        r += 1;
    }
    let pivots: Vec<usize> = pivot_col[..r].to_vec();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Clears denominators and divides by the content, preserving direction.
pub fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.iter().map(|x| x / &g).collect()
}

/// Diagonal of the Smith normal form (all nonnegative, divisibility chain,
/// padded with zeros up to min(rows, cols)).
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let n = rows.min(cols);
    let mut a: IMat = m.to_vec();
    let mut diag = Vec::with_capacity(n);
    let mut k = 0;
    while k < n {
        // Find a nonzero pivot in the trailing block.
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if !a[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            // Reduce column k.
            let mut changed = false;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                if a[i][k].magnitude() < a[k][k].magnitude() {
                    a.swap(k, i);
                }
                let q = &a[i][k] / &a[k][k];
                if !q.is_zero() {
                    for j in k..cols {
                        let v = &a[i][j] - &q * &a[k][j];
                        a[i][j] = v;
                    }
                }
                if !a[i][k].is_zero() {
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Reduce row k.
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                if a[k][j].magnitude() < a[k][k].magnitude() {
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                }
                let q = &a[k][j] / &a[k][k];
                if !q.is_zero() {
                    for i in k..rows {
                        let v = &a[i][j] - &q * &a[i][k];
                        a[i][j] = v;
                    }
                }
                if !a[k][j].is_zero() {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(a[k][k].abs());
        k += 1;
    }
    while diag.len() < n {
        diag.push(BigInt::zero());
    }
    // Enforce the divisibility chain d1 | d2 | ...
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if diag[j].is_zero() {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = if g.is_zero() {
                BigInt::zero()
            } else {
                &diag[i] / &g * &diag[j]
            };
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// A Z-basis of the row span (row-style Hermite reduction).
pub fn row_basis(m: &[Vec<BigInt>]) -> IMat {
    let mut rows: IMat = m.iter().filter(|r| !r.iter().all(Zero::is_zero)).cloned().collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut out: IMat = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                rows.swap(r, nz[0]);
                break;
            }
            // Reduce all entries in column c against the smallest.
            let min_i = *nz
                .iter()
                .min_by_key(|&&i| rows[i][c].magnitude().clone())
                .unwrap();
            rows.swap(r, min_i);
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = &rows[i][c] / &rows[r][c];
                for j in 0..cols {
                    let v = &rows[i][j] - &q * &rows[r][j];
                    rows[i][j] = v;
                }
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            r += 1;
            if r == rows.len() {
                break;
            }
        }
    }
    out.extend(rows.into_iter().take(r));
    out
}

/// Signature (positive, negative, zero inertia) of a symmetric rational
/// matrix via exact symmetric Gaussian reduction.
pub fn signature(m: &[Vec<BigInt>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = to_rational(m);
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    let mut used = vec![false; n];
    for _ in 0..n {
        // Pick an unused index with nonzero diagonal if possible.
        let k = (0..n).find(|&i| !used[i] && !a[i][i].is_zero());
        let k = match k {
            Some(k) => k,
            None => {
                // Look for an off-diagonal nonzero pair among unused indices.
                let mut pair = None;
                'out: for i in 0..n {
                    if used[i] {
                        continue;
                    }
                    for j in 0..n {
                        if !used[j] && j != i && !a[i][j].is_zero() {
                            pair = Some((i, j));
                            break 'out;
                        }
                    }
                }
                match pair {
                    Some((i, j)) => {
                        // Make the diagonal nonzero: row/col i += row/col j.
                        for t in 0..n {
                            let v = &a[i][t] + &a[j][t];
                            a[i][t] = v;
                        }
                        for t in 0..n {
                            let v = &a[t][i] + &a[t][j];
                            a[t][i] = v;
                        }
                        i
                    }
                    None => {
                        zero += n - used.iter().filter(|&&u| u).count();
                        break;
                    }
                }
            }
        };
        used[k] = true;
        if a[k][k].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let pivot = a[k][k].clone();
        for i in 0..n {
            if used[i] || a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in 0..n {
                let v = &a[i][j] - &f * &a[k][j];
                a[i][j] = v;
            }
            for j in 0..n {
                let v = &a[j][i] - &f * &a[j][k];
                a[j][i] = v;
            }
        }
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> IMat {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&bi(&[&[2, 1], &[1, 2]])), BigInt::from(3));
        assert_eq!(det(&bi(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&bi(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn smith_known() {
        let d = smith_diagonal(&bi(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]));
        let want: Vec<BigInt> = [1, 3, 21, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d, want);
    }

    #[test]
    fn kernel_and_primitive() {
        let k = kernel(&bi(&[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(k.len(), 1);
        let p = primitive(&k[0]);
        let p: Vec<i64> = p.iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(p == vec![1, -1, 1] || p == vec![-1, 1, -1]);
    }

    #[test]
    fn signature_diag() {
        let (p, n, z) = signature(&bi(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]));
        assert_eq!((p, n, z), (1, 1, 1));
        // Hyperbolic plane: off-diagonal only.
        let (p, n, z) = signature(&bi(&[&[0, 1], &[1, 0]]));
        assert_eq!((p, n, z), (1, 1, 0));
    }

    #[test]
    fn row_basis_span() {
        let b = row_basis(&bi(&[&[2, 0], &[0, 2], &[1, 1]]));
        // Index of the span of the rows inside Z^2 is 2.
        let d = smith_diagonal(&b);
        let prod: BigInt = d.iter().product();
        assert_eq!(prod, BigInt::from(2));
    }
}
