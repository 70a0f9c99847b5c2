//! Smith normal form and the lattice algorithms built on it.
//!
//! Pivot selection for the Smith reduction is pinned for reproducibility:
//! smallest nonzero absolute value, ties broken by lowest row index, then
//! lowest column index.

use super::int::Int;
use super::matrix::IntMatrix;
use crate::Error;

/// `u * a * v == diag(d)` with `u`, `v` unimodular and `d[i] | d[i+1]`.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub d: Vec<Int>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

fn find_pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some(b) => {
                    if a[(i, j)].cmp_abs(&a[b]) == std::cmp::Ordering::Less {
                        best = Some((i, j));
                    }
                }
            }
            if a[(i, j)].is_unit() {
                // nothing beats a unit in this row sweep, but keep scanning rows
                // above is wrong for the tie-break; smallest-abs with (row, col)
                // order is exactly the scan order, so first unit found wins.
                return Some(best.unwrap());
            }
        }
    }
    best
}

/// Full Smith normal form with transforms.
pub fn snf(a: &IntMatrix) -> SnfDecomposition {
    let mut m = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());
    let mut k = 0;
    while k < n {
        let Some((pi, pj)) = find_pivot(&m, k) else {
            break;
        };
        m.swap_rows(k, pi);
        u.swap_rows(k, pi);
        m.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Clear row and column k with Bezout combines: each step replaces the
        // pivot by a gcd, so the pivot only shrinks, and plain reductions are
        // used once it divides the entry.
        loop {
            let mut dirty = false;
            for i in (k + 1)..m.rows() {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let a = m[(k, k)].clone();
                let b = m[(i, k)].clone();
                if a.divides(&b) {
                    let q = b.div_exact(&a);
                    m.row_sub_mul(i, k, &q);
                    u.row_sub_mul(i, k, &q);
                } else {
                    let (g, x, y) = a.xgcd(&b);
                    let z = b.div_exact(&g).neg();
                    let w = a.div_exact(&g);
                    m.row_combine(k, i, &x, &y, &z, &w);
                    u.row_combine(k, i, &x, &y, &z, &w);
                    dirty = true;
                }
            }
            for j in (k + 1)..m.cols() {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let a = m[(k, k)].clone();
                let b = m[(k, j)].clone();
                if a.divides(&b) {
                    let q = b.div_exact(&a);
                    m.col_sub_mul(j, k, &q);
                    v.col_sub_mul(j, k, &q);
                } else {
                    let (g, x, y) = a.xgcd(&b);
                    let z = b.div_exact(&g).neg();
                    let w = a.div_exact(&g);
                    m.col_combine(k, j, &x, &y, &z, &w);
                    v.col_combine(k, j, &x, &y, &z, &w);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if m[(k, k)].is_negative() {
            m.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    let rank = k;

    // Divisibility pass on the diagonal.
    let mut i = 0;
    while i + 1 < rank {
        let mut fixed_any = false;
        for j in (i + 1)..rank {
            if !m[(i, i)].divides(&m[(j, j)]) {
                // Fold d_j into row i (row i += row j), then Euclid on the
                // 2x2 block brings gcd and lcm onto the diagonal.
                let di = m[(i, i)].clone();
                let dj = m[(j, j)].clone();
                let g = di.gcd(&dj);
                let lcm = di.div_exact(&g).mul(&dj);
                let minus_one = Int::from(-1i64);
                m.row_sub_mul(i, j, &minus_one);
                u.row_sub_mul(i, j, &minus_one);
                loop {
                    let mut dirty = false;
                    if !m[(i, j)].is_zero() {
                        let (q, r) = m[(i, j)].div_rem_euclid(&m[(i, i)]);
                        m.col_sub_mul(j, i, &q);
                        v.col_sub_mul(j, i, &q);
                        if !r.is_zero() {
                            m.swap_cols(i, j);
                            v.swap_cols(i, j);
                            dirty = true;
                        }
                    }
                    if !m[(j, i)].is_zero() {
                        let (q, r) = m[(j, i)].div_rem_euclid(&m[(i, i)]);
                        m.row_sub_mul(j, i, &q);
                        u.row_sub_mul(j, i, &q);
                        if !r.is_zero() {
                            m.swap_rows(i, j);
                            u.swap_rows(i, j);
                            dirty = true;
                        }
                    }
                    if !dirty {
                        break;
                    }
                }
                if m[(i, i)].is_negative() {
                    m.negate_row(i);
                    u.negate_row(i);
                }
                if m[(j, j)].is_negative() {
                    m.negate_row(j);
                    u.negate_row(j);
                }
                debug_assert_eq!(m[(i, i)], g.abs());
                debug_assert_eq!(m[(j, j)], lcm.abs());
                fixed_any = true;
            }
        }
        if !fixed_any {
            i += 1;
        }
    }

    let d: Vec<Int> = (0..n).map(|i| m[(i, i)].clone()).collect();
    SnfDecomposition { d, u, v, rank }
}

/// Invariant factors of `coker(a) = Z^rows / col-span(a)`: torsion factors > 1
/// followed by the free rank.
pub fn cokernel_data(a: &IntMatrix) -> (Vec<Int>, usize) {
    let s = snf(a);
    let torsion: Vec<Int> = s.d[..s.rank]
        .iter()
        .filter(|d| !d.is_one())
        .cloned()
        .collect();
    (torsion, a.rows() - s.rank)
}

/// Column echelon: returns `(image_basis, kernel_basis)` where the image
/// columns span exactly the column lattice of `a` and the kernel columns are
/// a primitive basis of `{x : a x = 0}`.
pub fn column_echelon(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut m = a.clone();
    let mut v = IntMatrix::identity(a.cols());
    let mut pivot_row = 0;
    let mut pivot_col = 0;
    while pivot_row < m.rows() && pivot_col < m.cols() {
        // Smallest nonzero entry of this row among the active columns.
        let mut best: Option<usize> = None;
        for j in pivot_col..m.cols() {
            if m[(pivot_row, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some(j),
                Some(b) => {
                    if m[(pivot_row, j)].cmp_abs(&m[(pivot_row, b)]) == std::cmp::Ordering::Less {
                        best = Some(j);
                    }
                }
            }
        }
        if let Some(b) = best {
            m.swap_cols(pivot_col, b);
            v.swap_cols(pivot_col, b);
            // One sweep of Bezout combines clears the row and leaves the gcd
            // as the pivot; earlier cleared columns are never touched again.
            for j in (pivot_col + 1)..m.cols() {
                if m[(pivot_row, j)].is_zero() {
                    continue;
                }
                let a = m[(pivot_row, pivot_col)].clone();
                let b = m[(pivot_row, j)].clone();
                if a.divides(&b) {
                    let q = b.div_exact(&a);
                    m.col_sub_mul(j, pivot_col, &q);
                    v.col_sub_mul(j, pivot_col, &q);
                } else {
                    let (g, x, y) = a.xgcd(&b);
                    let z = b.div_exact(&g).neg();
                    let w = a.div_exact(&g);
                    m.col_combine(pivot_col, j, &x, &y, &z, &w);
                    v.col_combine(pivot_col, j, &x, &y, &z, &w);
                }
            }
            if m[(pivot_row, pivot_col)].is_negative() {
                m.negate_col(pivot_col);
                v.negate_col(pivot_col);
            }
            pivot_col += 1;
        }
        pivot_row += 1;
    }
    let rank = pivot_col;
    let image = IntMatrix::from_fn(m.rows(), rank, |i, j| m[(i, j)].clone());
    let kernel = IntMatrix::from_fn(a.cols(), a.cols() - rank, |i, j| {
        v[(i, rank + j)].clone()
    });
    (image, kernel)
}

pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).1
}

pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).0
}

pub fn rank(a: &IntMatrix) -> usize {
    column_echelon(a).0.cols()
}

/// Solve `a * x = b` column by column over the integers.
pub fn solve(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows());
    let s = snf(a);
    let ub = s.u.mul(b);
    let mut y = IntMatrix::zero(a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let rhs = &ub[(i, j)];
            if i < s.rank {
                let (q, r) = rhs.div_rem_euclid(&s.d[i]);
                if !r.is_zero() {
                    return None;
                }
                y[(i, j)] = q;
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(s.v.mul(&y))
}

/// Isomorphism type of `(span kernel) / (span image)`. The image columns must
/// lie in the kernel lattice.
pub fn subquotient(kernel: &IntMatrix, image: &IntMatrix) -> Result<(Vec<Int>, usize), Error> {
    let t = solve(kernel, image).ok_or(Error::ImageNotContained)?;
    Ok(cokernel_data(&t))
}

/// A basis for the saturation `{x : m x in lattice for some m > 0}` of the
/// column lattice, together with the projection data: returns `(sat_basis,
/// quotient_proj)` where `quotient_proj * x` are coordinates of `x` in
/// `Z^rows / saturation`, a free group.
pub fn saturation_and_projection(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let s = snf(a);
    // u * a * v = diag(d). Saturation is spanned by the first `rank` columns of
    // u^{-1}; the quotient by it is read off the remaining coordinates of u*x.
    let uinv = invert_unimodular(&s.u);
    let sat = IntMatrix::from_fn(a.rows(), s.rank, |i, j| uinv[(i, j)].clone());
    let proj = IntMatrix::from_fn(a.rows() - s.rank, a.rows(), |i, j| {
        s.u[(s.rank + i, j)].clone()
    });
    (sat, proj)
}

/// Inverse of a unimodular matrix.
pub fn invert_unimodular(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let s = snf(m);
    assert!(
        s.rank == n && s.d.iter().all(Int::is_one),
        "matrix is not unimodular"
    );
    // u m v = 1  =>  m^{-1} = v u
    s.v.mul(&s.u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(a: &IntMatrix) -> Vec<i64> {
        let s = snf(a);
        s.d.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(diag_of(&a), vec![1, 6]);
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        assert_eq!(diag_of(&a), vec![1, 1, 1]);
    }

    #[test]
    fn snf_zero() {
        let a = IntMatrix::zero(2, 2);
        assert_eq!(diag_of(&a), vec![0, 0]);
    }

    #[test]
    fn snf_transforms_reproduce() {
        let a = IntMatrix::from_rows_i64(&[&[4, 6, 1], &[2, -3, 0]]);
        let s = snf(&a);
        let prod = s.u.mul(&a).mul(&s.v);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let expect = if i == j { s.d[i].clone() } else { Int::ZERO };
                assert_eq!(prod[(i, j)], expect);
            }
        }
    }

    #[test]
    fn kernel_of_row() {
        let a = IntMatrix::from_rows_i64(&[&[2, -3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        // spanned by (3, 2) up to sign
        let x = k[(0, 0)].to_i64().unwrap().abs();
        let y = k[(1, 0)].to_i64().unwrap().abs();
        assert_eq!((x, y), (3, 2));
    }

    #[test]
    fn image_of_scalar() {
        let a = IntMatrix::from_rows_i64(&[&[3]]);
        let im = image_basis(&a);
        assert_eq!(im.cols(), 1);
        assert_eq!(im[(0, 0)].to_i64().unwrap().abs(), 3);
    }

    #[test]
    fn cokernel_of_column() {
        // (2, -3)^T : Z -> Z^2 has cokernel Z
        let a = IntMatrix::from_rows_i64(&[&[2], &[-3]]);
        let (tors, free) = cokernel_data(&a);
        assert!(tors.is_empty());
        assert_eq!(free, 1);
    }

    #[test]
    fn subquotient_z3() {
        let k = IntMatrix::identity(1);
        let im = IntMatrix::from_rows_i64(&[&[3]]);
        let (tors, free) = subquotient(&k, &im).unwrap();
        assert_eq!(free, 0);
        assert_eq!(tors, vec![Int::from(3)]);
    }

    #[test]
    fn subquotient_rejects_non_contained() {
        let k = IntMatrix::from_rows_i64(&[&[2]]);
        let im = IntMatrix::from_rows_i64(&[&[3]]);
        assert!(subquotient(&k, &im).is_err());
    }

    #[test]
    fn solve_exact() {
        let a = IntMatrix::from_rows_i64(&[&[2, 1], &[0, 3]]);
        let b = IntMatrix::from_rows_i64(&[&[5], &[3]]);
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);
        let b2 = IntMatrix::from_rows_i64(&[&[5], &[2]]);
        assert!(solve(&a, &b2).is_none());
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_rows_i64(&[&[1, 2], &[1, 3]]);
        let inv = invert_unimodular(&m);
        assert!(m.mul(&inv).is_identity());
    }
}
