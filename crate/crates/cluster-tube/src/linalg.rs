//! Exact linear algebra over the integers, sized for the small systems that
//! show up here (intertwiner equations, Cartan matrices). Arbitrary-precision
//! entries keep everything overflow-free; no floating point anywhere.

use num_bigint::BigInt;

/// Rank over the rationals of an integer matrix, by fraction-free row
/// elimination. Consumes the rows.
pub(crate) fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(pivot_row) = (row..nrows).find(|&r| rows[r][col] != BigInt::ZERO) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let pivot_vals = rows[row].clone();
        let pivot = &pivot_vals[col];
        for other in rows.iter_mut().skip(row + 1) {
            if other[col] == BigInt::ZERO {
                continue;
            }
            let factor = other[col].clone();
            for (entry, base) in other[col..].iter_mut().zip(&pivot_vals[col..]) {
                *entry = &*entry * pivot - base * &factor;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. All intermediate divisions are exact.
pub(crate) fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k] == BigInt::ZERO {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != BigInt::ZERO) else {
                return BigInt::ZERO;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::ZERO;
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
