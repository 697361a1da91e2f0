//! Exact integer diagonalisation `U·A·V = D` with unimodular `U`, `V`, used to
//! solve multiplicative systems over the nonzero complex numbers. The rows of
//! `U` past the rank form a basis of the integer left kernel of `A`.

/// Result of diagonalising an integer matrix by unimodular row and column
/// operations. `diag` holds the nonzero pivots; entries beyond `rank` are
/// zero throughout `U·A·V`.
#[derive(Debug, Clone)]
pub(crate) struct IntDiagonalization {
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub diag: Vec<i128>,
    pub rank: usize,
}

#[derive(Debug, thiserror::Error)]
#[error("integer overflow during exact elimination")]
pub(crate) struct Overflow;

fn checked_row_sub(
    target: &mut [i128],
    source: &[i128],
    factor: i128,
) -> Result<(), Overflow> {
    for (t, &s) in target.iter_mut().zip(source) {
        *t = s
            .checked_mul(factor)
            .and_then(|p| t.checked_sub(p))
            .ok_or(Overflow)?;
    }
    Ok(())
}

/// Gauss-style diagonalisation over the integers. Row operations are mirrored
/// on `u`, column operations on `v`, both kept unimodular, so `u·a·v` is
/// diagonal on return. Pivots are chosen by minimal absolute value to keep
/// the entries small; the matrices in scope stay far from overflow.
pub(crate) fn diagonalize(mut a: Vec<Vec<i128>>) -> Result<IntDiagonalization, Overflow> {
    let m = a.len();
    let k = if m == 0 { 0 } else { a[0].len() };
    let mut u: Vec<Vec<i128>> = (0..m)
        .map(|i| (0..m).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut v: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
        .collect();

    let mut t = 0;
    while t < m.min(k) {
        // smallest nonzero entry of the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..k {
                if a[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            v.swap(t, pj); // v tracked by rows of V^T; see note below
        }
        // reduce column t and row t by Euclidean steps until clean
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    if q != 0 {
                        let source = a[t].clone();
                        checked_row_sub(&mut a[i], &source, q)?;
                        let usrc = u[t].clone();
                        checked_row_sub(&mut u[i], &usrc, q)?;
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        u.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..k {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    if q != 0 {
                        for row in a.iter_mut() {
                            let p = row[t].checked_mul(q).ok_or(Overflow)?;
                            row[j] = row[j].checked_sub(p).ok_or(Overflow)?;
                        }
                        let vsrc = v[t].clone();
                        checked_row_sub(&mut v[j], &vsrc, q)?;
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        v.swap(t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty
                && (t + 1..m).all(|i| a[i][t] == 0)
                && (t + 1..k).all(|j| a[t][j] == 0)
            {
                break;
            }
        }
        t += 1;
    }
    let rank = t;
    let diag: Vec<i128> = (0..rank).map(|i| a[i][i]).collect();
    // v was tracked as rows of V^T; transpose back
    let v_cols: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| v[j][i]).collect())
        .collect();
    Ok(IntDiagonalization {
        u,
        v: v_cols,
        diag,
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let (m, n, k) = (a.len(), b[0].len(), b.len());
        (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn check(a: Vec<Vec<i128>>) {
        let d = diagonalize(a.clone()).unwrap();
        let uav = mat_mul(&mat_mul(&d.u, &a), &d.v);
        for (i, row) in uav.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i == j && i < d.rank {
                    assert_eq!(x, d.diag[i]);
                    assert_ne!(x, 0);
                } else {
                    assert_eq!(x, 0, "nonzero off-pivot at ({i},{j})");
                }
            }
        }
        // left kernel rows really annihilate a
        for row in d.u.iter().skip(d.rank) {
            let prod: Vec<i128> = (0..a[0].len())
                .map(|j| (0..a.len()).map(|i| row[i] * a[i][j]).sum())
                .collect();
            assert!(prod.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn diagonalizes_small_matrices() {
        check(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        check(vec![vec![1, 1, -1, -1, 1], vec![0, 2, -2, 0, 1]]);
        check(vec![vec![0, 0], vec![0, 0]]);
        check(vec![vec![3]]);
        check(vec![
            vec![1, 1, 0, -2, 1],
            vec![1, 0, 1, -2, 1],
            vec![0, 1, 1, -2, 1],
            vec![2, 0, 0, -2, 1],
        ]);
    }

    #[test]
    fn rank_deficient_rows_give_kernel() {
        // row3 = row1 + row2
        let a = vec![vec![1, 2], vec![3, 4], vec![4, 6]];
        let d = diagonalize(a).unwrap();
        assert_eq!(d.rank, 2);
        assert_eq!(d.u.len(), 3);
    }
}
